#include "diagrams/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "diagrams/abelian.hpp"
#include "diagrams/diagram_io.hpp"
#include "diagrams/pl.hpp"
#include "diagrams/squier.hpp"
#include "diagrams/subgroup.hpp"
#include "diagrams/wreath.hpp"

namespace diagrams {

  namespace {

    enum exit_code { ok = 0, negative = 1, usage = 2, bound = 3 };

    std::string read_text(std::string const& path) {
      if (path == "-") {
        std::stringstream s;
        s << std::cin.rdbuf();
        return s.str();
      }
      std::ifstream in(path);
      if (!in) {
        throw PreconditionError("cannot read " + path);
      }
      std::stringstream s;
      s << in.rdbuf();
      return s.str();
    }

    PresentationPtr shared(Presentation p) {
      return std::make_shared<Presentation const>(std::move(p));
    }

    PresentationPtr load_presentation(std::string const& source) {
      if (source == "thompson") {
        return thompson_presentation();
      }
      if (source == "thompson_sq") {
        return shared(parse_presentation("x | x x = x", "thompson_sq"));
      }
      if (source == "q_t26") {
        return q_t26();
      }
      if (source == "wreath_z") {
        return shared(named_builder(NamedKind::wreath_with_z).presentation);
      }
      if (source == "direct_power") {
        return shared(named_builder(NamedKind::direct_power).presentation);
      }
      if (source == "big_o") {
        return shared(named_builder(NamedKind::big_o).presentation);
      }
      if (source == "f_wr_z") {
        return shared(f_wr_z_product().presentation);
      }
      std::string name = std::filesystem::path(source).stem().string();
      return shared(parse_presentation(read_text(source), name.empty() ? "P" : name));
    }

    // The base word a builtin presentation comes with; empty for files.
    std::string default_base(std::string const& source) {
      static std::map<std::string, std::string> const bases{
          {"thompson", "x"},    {"thompson_sq", "x"},  {"q_t26", "a0 b0"},
          {"wreath_z", "x z"},  {"direct_power", "x"}, {"big_o", "x y q ybar z"},
          {"f_wr_z", "x z"}};
      auto it = bases.find(source);
      return it == bases.end() ? std::string() : it->second;
    }

    // Thompson-group payloads: a diagram file if the path exists, else an F word.
    bool is_file(std::string const& arg) {
      std::error_code ec;
      return arg == "-" || std::filesystem::is_regular_file(arg, ec);
    }

    struct Options {
      std::string presentation = "thompson";
      std::string base;
      std::size_t max_len     = 16;
      std::size_t max_visited = 10000;
      std::size_t depth       = 0;
      std::string format      = "text";
    };

  }  // namespace

  int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computation in diagram groups", "dgtool"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--presentation", o.presentation, "presentation file or builtin name");
    app.add_option("--base", o.base, "base word, letters separated by spaces");
    app.add_option("--max-len", o.max_len, "largest word length explored")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-visited", o.max_visited, "largest number of words explored")
        ->check(CLI::PositiveNumber);
    app.add_option("--depth", o.depth, "BFS depth or check depth")->check(CLI::PositiveNumber);
    app.add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "dot", "csv", "json", "unicode"}));

    std::function<int()> action;
    auto                 pres    = [&] { return load_presentation(o.presentation); };
    auto                 base    = [&] {
      return o.base.empty() ? default_base(o.presentation) : o.base;
    };
    auto                 diagram = [&](std::string const& path) {
      return parse_diagram(pres(), read_text(path));
    };
    auto f_element = [&](std::string const& arg) {
      if (is_file(arg)) {
        return diagram_to_nf(parse_diagram(thompson_presentation(), read_text(arg)));
      }
      return parse_nf(arg);
    };

    // reduce / mul / inv / eq / comp / dot
    std::string a_path, b_path;
    auto*       reduce_cmd = app.add_subcommand("reduce", "print the reduced form of a diagram");
    reduce_cmd->add_option("diagram", a_path)->required();
    reduce_cmd->callback([&] {
      action = [&] {
        out << format_diagram(reduce(diagram(a_path)));
        return ok;
      };
    });

    auto* mul_cmd = app.add_subcommand("mul", "compose two diagrams and reduce");
    mul_cmd->add_option("first", a_path)->required();
    mul_cmd->add_option("second", b_path)->required();
    mul_cmd->callback([&] {
      action = [&] {
        out << format_diagram(reduce(compose(diagram(a_path), diagram(b_path))));
        return ok;
      };
    });

    auto* inv_cmd = app.add_subcommand("inv", "mirror image of a diagram");
    inv_cmd->add_option("diagram", a_path)->required();
    inv_cmd->callback([&] {
      action = [&] {
        out << format_diagram(inverse(diagram(a_path)));
        return ok;
      };
    });

    bool  words_mode = false;
    auto* eq_cmd     = app.add_subcommand("eq", "equality of diagrams (or words with --words)");
    eq_cmd->add_option("first", a_path)->required();
    eq_cmd->add_option("second", b_path)->required();
    eq_cmd->add_flag("--words", words_mode, "compare words modulo the presentation");
    eq_cmd->callback([&] {
      action = [&] {
        if (words_mode) {
          auto p       = pres();
          auto verdict = words_equal_bounded(*p, p->word(a_path), p->word(b_path),
                                             {o.max_len, o.max_visited});
          if (std::holds_alternative<Equal>(verdict)) {
            out << "equal\n";
            return ok;
          }
          if (std::holds_alternative<BoundExceeded>(verdict)) {
            out << "unknown: bound exceeded\n";
            return bound;
          }
          out << "not equal\n";
          return negative;
        }
        bool same = equal(diagram(a_path), diagram(b_path));
        out << (same ? "equal\n" : "not equal\n");
        return same ? ok : negative;
      };
    });

    auto* comp_cmd = app.add_subcommand("comp", "number of components of a spherical diagram");
    comp_cmd->add_option("diagram", a_path)->required();
    comp_cmd->callback([&] {
      action = [&] {
        auto parts = decompose_components(reduce(diagram(a_path)));
        out << "components: " << parts.parts.size() << "\n";
        for (auto const& d : parts.parts) {
          out << format_diagram(d);
        }
        return ok;
      };
    });

    auto* dot_cmd = app.add_subcommand("dot", "DOT export of a diagram");
    dot_cmd->add_option("diagram", a_path)->required();
    dot_cmd->callback([&] {
      action = [&] {
        out << diagram_to_dot(diagram(a_path));
        return ok;
      };
    });

    // nf / pl / rho / fprime
    std::string f_arg;
    bool        as_diagram  = false;
    std::size_t base_length = 1;
    auto*       nf_cmd      = app.add_subcommand("nf", "diagram <-> normal form in F");
    nf_cmd->add_option("element", f_arg, "diagram file over thompson or a word in x_i")
        ->required();
    nf_cmd->add_flag("--diagram", as_diagram, "print the diagram of the element");
    nf_cmd->add_option("--base-length", base_length, "base x^k for --diagram")
        ->check(CLI::PositiveNumber);
    nf_cmd->callback([&] {
      action = [&] {
        auto f = f_element(f_arg);
        if (as_diagram) {
          out << format_diagram(nf_to_diagram(f, base_length));
        } else {
          out << format_nf(f) << "\n";
        }
        return ok;
      };
    });

    std::string eval_at;
    bool        want_support = false;
    auto*       pl_cmd       = app.add_subcommand("pl", "piecewise linear map of an element of F");
    pl_cmd->add_option("element", f_arg)->required();
    pl_cmd->add_option("--eval", eval_at, "dyadic point to evaluate at");
    pl_cmd->add_flag("--support", want_support, "print the support intervals");
    pl_cmd->callback([&] {
      action = [&] {
        auto f = pl_from_nf(f_element(f_arg));
        if (!eval_at.empty()) {
          out << pl_eval(f, Dyadic::parse(eval_at)).to_string() << "\n";
        } else if (want_support) {
          for (auto const& i : support(f)) {
            out << format_interval(i) << "\n";
          }
        } else if (o.format == "csv") {
          out << pl_csv(f);
        } else {
          out << format_pl(f) << "\n";
        }
        return ok;
      };
    });

    auto* rho_cmd = app.add_subcommand("rho", "the homomorphism rho of a spherical diagram");
    rho_cmd->add_option("diagram", a_path)->required();
    rho_cmd->callback([&] {
      action = [&] {
        auto d = diagram(a_path);
        auto const& p = d.presentation();
        bool one_letter_idempotent = p.size() == 1 && p.relations().size() == 1
                                     && p.relations()[0].lhs.size() + p.relations()[0].rhs.size() == 3;
        if (!one_letter_idempotent) {
          throw PreconditionError("rho: no monoid oracle for presentation " + p.name());
        }
        out << format_abelian(rho(d, thompson_oracle()), p) << "\n";
        return ok;
      };
    });

    auto* fprime_cmd = app.add_subcommand("fprime", "membership in the derived subgroup of F");
    fprime_cmd->add_option("element", f_arg)->required();
    fprime_cmd->callback([&] {
      action = [&] {
        bool in = in_derived_subgroup_F(f_element(f_arg));
        out << (in ? "in F'\n" : "not in F'\n");
        return in ? ok : negative;
      };
    });

    // squier / build
    bool  raw        = false;
    auto* squier_cmd = app.add_subcommand("squier", "bounded Squier component and its pi1");
    squier_cmd->add_flag("--raw", raw, "skip the Tietze pass");
    squier_cmd->callback([&] {
      action = [&] {
        auto p = pres();
        if (base().empty()) {
          throw PreconditionError("squier needs --base");
        }
        SquierBounds b{o.max_len, o.max_visited};
        if (o.depth != 0) {
          b.max_depth = o.depth;
        }
        auto k = build_component(p, p->word(base()), b);
        if (o.format == "json") {
          out << complex_to_json(k);
        } else if (o.format == "dot") {
          out << complex_to_dot(k);
        } else {
          auto g = pi1_presentation(k, !raw);
          out << "vertices: " << k.vertices.size() << "\n"
              << "edges: " << k.edges.size() << "\n"
              << "2-cells: " << k.two_cells.size() << "\n"
              << "truncated: " << (k.truncated ? "yes" : "no") << "\n"
              << "pi1: " << format_group_presentation(g) << "\n";
        }
        return ok;
      };
    });

    std::string kind;
    std::size_t kind_n    = 3;
    auto*       build_cmd = app.add_subcommand("build", "named diagram product presentations");
    build_cmd->add_option("kind", kind)
        ->required()
        ->check(CLI::IsMember({"direct_product", "free_product", "bullet", "direct_power",
                               "wreath_with_z", "big_o", "f_wr_z"}));
    build_cmd->add_option("--n", kind_n, "number of factors")->check(CLI::PositiveNumber);
    build_cmd->callback([&] {
      action = [&] {
        static std::map<std::string, NamedKind> const kinds{
            {"direct_product", NamedKind::direct_product},
            {"free_product", NamedKind::free_product},
            {"bullet", NamedKind::bullet},
            {"direct_power", NamedKind::direct_power},
            {"wreath_with_z", NamedKind::wreath_with_z},
            {"big_o", NamedKind::big_o}};
        auto r = kind == "f_wr_z" ? f_wr_z_product() : named_builder(kinds.at(kind), kind_n);
        if (o.format == "unicode") {
          out << display_presentation(r.presentation, true) << "\n";
        } else {
          out << format_presentation(r.presentation) << "\n";
        }
        out << "base: " << r.presentation.format_word(r.base) << "\n";
        return ok;
      };
    });

    // zwrz
    auto* zwrz_cmd = app.add_subcommand("zwrz", "Z wr Z subgroups of diagram groups");
    zwrz_cmd->require_subcommand(1);
    auto* thm18_cmd = zwrz_cmd->add_subcommand("thm18", "generators for the x = y = z = x data");
    thm18_cmd->callback([&] {
      action = [&] {
        auto pr = thm18_thompson_example();
        out << "a:\n" << format_diagram(pr.a) << "b:\n" << format_diagram(pr.b);
        return ok;
      };
    });
    std::string example = "thm18";
    auto*       verify_cmd = zwrz_cmd->add_subcommand("verify", "check the Z wr Z identities");
    verify_cmd->add_option("a", a_path, "diagram file for a");
    verify_cmd->add_option("b", b_path, "diagram file for b");
    verify_cmd->add_option("--example", example)->check(CLI::IsMember({"thm18", "ex37"}));
    verify_cmd->callback([&] {
      action = [&] {
        ZwrZPair pr;
        if (!a_path.empty() && !b_path.empty()) {
          pr = {diagram(a_path), diagram(b_path)};
        } else if (example == "ex37") {
          pr = example37_zwrz_pair();
        } else {
          pr = thm18_thompson_example();
        }
        auto report = verify_zwrz(pr.a, pr.b, o.depth == 0 ? 4 : o.depth);
        out << format_report(report);
        return report.passed() ? ok : negative;
      };
    });
    auto* thm24_cmd = zwrz_cmd->add_subcommand("thm24-search", "search x, y, z and a (y, y)-diagram");
    thm24_cmd->callback([&] {
      action = [&] {
        auto p = pres();
        if (base().empty()) {
          throw PreconditionError("thm24-search needs --base");
        }
        auto found = thm24_witness_search(p, p->word(base()));
        if (!found) {
          out << "not found within bounds\n";
          return bound;
        }
        out << "x: " << p->format_word(found->x) << "\ny: " << p->format_word(found->y)
            << "\nz: " << p->format_word(found->z) << "\ndelta:\n"
            << format_diagram(found->delta);
        return ok;
      };
    });

    // wreath
    int          level = 2;
    std::int64_t g_n   = 1;
    auto*        wreath_cmd = app.add_subcommand("wreath", "wreath towers H_k");
    wreath_cmd->require_subcommand(1);
    auto* phi_cmd = wreath_cmd->add_subcommand("phi", "phi_k(g_k(n))");
    phi_cmd->add_option("--k", level)->required()->check(CLI::Range(1, 8));
    phi_cmd->add_option("--g", g_n, "n in g_k(n)")->required()->check(CLI::Range(0, 64));
    phi_cmd->callback([&] {
      action = [&] {
        out << phi(g_k_n(level, g_n)) << "\n";
        return ok;
      };
    });
    auto* gkn_cmd = wreath_cmd->add_subcommand("gkn", "print g_k(n)");
    gkn_cmd->add_option("--k", level)->required()->check(CLI::Range(1, 8));
    gkn_cmd->add_option("--n", g_n)->required()->check(CLI::Range(0, 64));
    gkn_cmd->callback([&] {
      action = [&] {
        out << format_wreath(g_k_n(level, g_n)) << "\n";
        return ok;
      };
    });
    auto* cost_cmd = wreath_cmd->add_subcommand("cost", "relator cost of [a^n, b^n] in Z wr Z");
    cost_cmd->add_option("--n", g_n)->required()->check(CLI::Range(0, 1000));
    cost_cmd->callback([&] {
      action = [&] {
        out << relator_cost_zwrz(g_k_n(2, g_n)) << "\n";
        return ok;
      };
    });

    // distort
    std::string sub_gens = "x0", amb_gens = "x0,x1";
    std::size_t n_max = 6, m_max = 6;
    auto*       distort_cmd = app.add_subcommand("distort", "distortion profile of a subgroup of F");
    distort_cmd->add_option("--subgroup", sub_gens, "comma separated words in x_i");
    distort_cmd->add_option("--ambient", amb_gens, "comma separated words in x_i");
    distort_cmd->add_option("--n", n_max, "ambient ball radius")->check(CLI::Range(0, 12));
    distort_cmd->add_option("--m", m_max, "subgroup ball radius")->check(CLI::Range(0, 12));
    distort_cmd->callback([&] {
      action = [&] {
        auto split = [](std::string const& s) {
          std::vector<NormalForm> v;
          std::stringstream       in(s);
          std::string             item;
          while (std::getline(in, item, ',')) {
            v.push_back(parse_nf(item));
          }
          if (v.empty()) {
            throw PreconditionError("empty generating set");
          }
          return v;
        };
        auto x = split(sub_gens);
        auto y = split(amb_gens);
        std::function<std::optional<std::size_t>(std::size_t)> bound_fn;
        if (x == y) {
          bound_fn = [](std::size_t n) { return std::optional<std::size_t>(n); };
        } else if (x.size() == 1) {
          bound_fn = cyclic_x_bound(x[0], y);
        }
        auto t = distortion_profile(x, y, nf_group_ops(), n_max, m_max, bound_fn);
        out << distortion_csv(t);
        return t.truncated ? bound : ok;
      };
    });

    std::vector<std::string> argv_store{"dgtool"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char const*> argv;
    for (auto const& s : argv_store) {
      argv.push_back(s.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return ok;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return ok;
    } catch (CLI::ParseError const& e) {
      err << "dgtool: " << e.what() << "\n";
      return usage;
    }
    try {
      return action ? action() : usage;
    } catch (std::exception const& e) {
      err << "dgtool: " << e.what() << "\n";
      return usage;
    }
  }

}  // namespace diagrams
