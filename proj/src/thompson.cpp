#include "diagrams/thompson.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "diagrams/cell_graph.hpp"

namespace diagrams {

  namespace {

    using Multiset = std::vector<std::uint32_t>;

    Multiset expand(std::vector<std::pair<std::uint32_t, std::uint32_t>> const& v) {
      Multiset out;
      for (auto [i, e] : v) {
        out.insert(out.end(), e, i);
      }
      return out;
    }

    std::vector<std::pair<std::uint32_t, std::uint32_t>> collapse(Multiset const& m) {
      std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
      for (auto i : m) {
        if (!out.empty() && out.back().first == i) {
          ++out.back().second;
        } else {
          out.emplace_back(i, 1);
        }
      }
      return out;
    }

    // P N^-1 with P and N ascending.
    struct Seminormal {
      Multiset p;
      Multiset n;

      void times(std::uint32_t k) {
        for (std::size_t i = 0; i < n.size(); ++i) {
          if (n[i] < k) {
            ++k;
          } else if (n[i] == k) {
            n.erase(n.begin() + i);
            return;
          } else {
            for (std::size_t j = i; j < n.size(); ++j) {
              ++n[j];
            }
            break;
          }
        }
        for (auto& i : p) {
          if (i > k) {
            ++i;
          }
        }
        p.insert(std::upper_bound(p.begin(), p.end(), k), k);
      }

      void times_inverse(std::uint32_t k) {
        for (auto j : n) {
          if (j < k) {
            ++k;
          } else {
            break;
          }
        }
        n.insert(std::upper_bound(n.begin(), n.end(), k), k);
      }

      void contract() {
        bool again = true;
        while (again) {
          again = false;
          for (std::size_t a = p.size(); a-- > 0;) {
            std::uint32_t i = p[a];
            if (!std::binary_search(n.begin(), n.end(), i)) {
              continue;
            }
            if (std::binary_search(p.begin(), p.end(), i + 1)
                || std::binary_search(n.begin(), n.end(), i + 1)) {
              continue;
            }
            p.erase(p.begin() + a);
            n.erase(std::lower_bound(n.begin(), n.end(), i));
            for (auto& j : p) {
              if (j > i) {
                --j;
              }
            }
            for (auto& j : n) {
              if (j > i) {
                --j;
              }
            }
            again = true;
            break;
          }
        }
      }
    };

  }  // namespace

  std::size_t NormalForm::syllable_length() const {
    std::size_t total = 0;
    for (auto [i, e] : pos) {
      total += e;
    }
    for (auto [i, e] : neg) {
      total += e;
    }
    return total;
  }

  bool is_normal_form(NormalForm const& f) {
    auto ascending = [](auto const& v) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].second == 0 || (i > 0 && v[i - 1].first >= v[i].first)) {
          return false;
        }
      }
      return true;
    };
    if (!ascending(f.pos) || !ascending(f.neg)) {
      return false;
    }
    auto has = [](auto const& v, std::uint32_t i) {
      return std::any_of(v.begin(), v.end(), [i](auto const& x) { return x.first == i; });
    };
    for (auto [i, e] : f.pos) {
      if (has(f.neg, i) && !has(f.pos, i + 1) && !has(f.neg, i + 1)) {
        return false;
      }
    }
    return true;
  }

  NormalForm nf_from_word(FWord const& w) {
    Seminormal s;
    for (auto const& l : w) {
      if (l.exponent > 0) {
        s.times(l.index);
      } else {
        s.times_inverse(l.index);
      }
    }
    s.contract();
    return NormalForm{collapse(s.p), collapse(s.n)};
  }

  FWord nf_to_word(NormalForm const& f) {
    FWord out;
    for (auto [i, e] : f.pos) {
      out.insert(out.end(), e, FLetter{i, 1});
    }
    for (auto it = f.neg.rbegin(); it != f.neg.rend(); ++it) {
      out.insert(out.end(), it->second, FLetter{it->first, -1});
    }
    return out;
  }

  NormalForm nf_mul(NormalForm const& a, NormalForm const& b) {
    Seminormal s{expand(a.pos), expand(a.neg)};
    for (auto const& l : nf_to_word(b)) {
      if (l.exponent > 0) {
        s.times(l.index);
      } else {
        s.times_inverse(l.index);
      }
    }
    s.contract();
    return NormalForm{collapse(s.p), collapse(s.n)};
  }

  NormalForm nf_inv(NormalForm const& a) {
    return NormalForm{a.neg, a.pos};
  }

  NormalForm nf_generator(std::uint32_t i, int exponent) {
    return nf_from_word(FWord{{i, exponent >= 0 ? 1 : -1}});
  }

  std::string format_fword(FWord const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t k = 0; k < w.size();) {
      std::size_t run = 1;
      while (k + run < w.size() && w[k + run] == w[k]) {
        ++run;
      }
      if (!out.empty()) {
        out += ' ';
      }
      out += "x" + std::to_string(w[k].index);
      long long power = static_cast<long long>(run) * w[k].exponent;
      if (power != 1) {
        out += "^" + std::to_string(power);
      }
      k += run;
    }
    return out;
  }

  std::string format_nf(NormalForm const& f) {
    return format_fword(nf_to_word(f));
  }

  FWord parse_fword(std::string_view text) {
    FWord       out;
    std::size_t i = 0;
    auto read_int = [&](long long& value) {
      std::size_t start = i;
      if (i < text.size() && text[i] == '-') {
        ++i;
      }
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + i, value);
      if (ec != std::errc() || ptr != text.data() + i) {
        throw ParseError("expected an integer", start);
      }
    };
    while (i < text.size()) {
      char c = text[i];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.') {
        ++i;
        continue;
      }
      if (c == '1' && (i + 1 == text.size() || !std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
        ++i;
        continue;
      }
      if (c != 'x') {
        throw ParseError(std::string("unexpected character '") + c + "'", i);
      }
      ++i;
      long long index = 0;
      read_int(index);
      if (index < 0) {
        throw ParseError("negative generator index", i);
      }
      long long power = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        bool brace = i < text.size() && text[i] == '{';
        if (brace) {
          ++i;
        }
        read_int(power);
        if (brace) {
          if (i >= text.size() || text[i] != '}') {
            throw ParseError("expected '}'", i);
          }
          ++i;
        }
      }
      FLetter l{static_cast<std::uint32_t>(index), power < 0 ? -1 : 1};
      for (long long k = 0; k < (power < 0 ? -power : power); ++k) {
        out.push_back(l);
      }
    }
    return out;
  }

  NormalForm parse_nf(std::string_view text) {
    return nf_from_word(parse_fword(text));
  }

  // ---------------------------------------------------------------------------
  // diagrams over <x | x = x x>

  PresentationPtr thompson_presentation() {
    static PresentationPtr const p = std::make_shared<Presentation const>(
        std::vector<std::string>{"x"}, std::vector<Relation>{{{0}, {0, 0}}}, "thompson");
    return p;
  }

  Word x_power(std::size_t k) {
    return Word(k, 0);
  }

  namespace {
    void require_thompson(Diagram const& d, char const* op) {
      if (!(d.presentation() == *thompson_presentation())) {
        throw MismatchError(std::string(op) + ": diagram is not over <x | x = x x>");
      }
      if (!d.is_spherical()) {
        throw PreconditionError(std::string(op) + ": diagram is not spherical");
      }
    }
  }  // namespace

  Diagram base_comb(std::size_t k) {
    if (k < 1) {
      throw PreconditionError("base must be at least x");
    }
    Derivation d{x_power(1), std::vector<Step>(k - 1, Step{0, 0, Direction::forward})};
    return from_derivation(thompson_presentation(), d);
  }

  Diagram change_base(Diagram const& d, std::size_t k) {
    require_thompson(d, "change_base");
    std::size_t m = d.top().size();
    if (m == k) {
      return reduce(d);
    }
    Diagram bk = base_comb(k);
    Diagram bm = base_comb(m);
    Diagram c  = compose(compose(compose(compose(inverse(bk), bm), d), inverse(bm)), bk);
    return reduce(c);
  }

  Diagram generator_diagram(std::uint32_t i, std::size_t k) {
    if (k < 1) {
      throw PreconditionError("unrepresentable base x^0");
    }
    std::size_t need = static_cast<std::size_t>(i) + 2;
    if (k < need) {
      return change_base(generator_diagram(i, need), k);
    }
    Derivation d{x_power(k),
                 {Step{k - 1 - i, 0, Direction::forward}, Step{0, 0, Direction::backward}}};
    return from_derivation(thompson_presentation(), d);
  }

  Diagram nf_to_diagram(NormalForm const& f, std::size_t k) {
    if (k < 1) {
      throw PreconditionError("unrepresentable base x^0");
    }
    FWord       w    = nf_to_word(f);
    std::size_t base = k;
    for (auto const& l : w) {
      base = std::max(base, static_cast<std::size_t>(l.index) + 2);
    }
    Derivation d{x_power(base), {}};
    for (auto const& l : w) {
      Diagram g = generator_diagram(l.index, base);
      if (l.exponent < 0) {
        g = inverse(g);
      }
      d.steps.insert(d.steps.end(), g.steps().begin(), g.steps().end());
    }
    Diagram prod = reduce(from_derivation(thompson_presentation(), d));
    return base == k ? prod : change_base(prod, k);
  }

  namespace {
    // Positive cells of a reduced base-x diagram, rightmost first.
    FWord read_positive(Diagram const& d) {
      auto g       = build_cell_graph(d.presentation(), d.top(), d.steps());
      auto forward = [&g](std::size_t c) {
        return g.cells[c].direction == Direction::forward;
      };
      for (std::size_t c = 0; c < g.cells.size(); ++c) {
        std::size_t from = g.producer[g.cells[c].in.front()];
        if (forward(c) && from != no_cell && !forward(from)) {
          throw Error("reduced diagram over <x | x = x x> is not positive over negative");
        }
      }
      auto  lin = linearize(g, Pick::rightmost, forward);
      FWord out;
      for (auto const& pc : lin.order) {
        if (pc.offset != 0) {
          out.push_back(FLetter{static_cast<std::uint32_t>(pc.length - 1 - pc.offset), 1});
        }
      }
      return out;
    }
  }  // namespace

  CellReading read_cells(Diagram const& d) {
    require_thompson(d, "read_cells");
    Diagram e = change_base(d, 1);
    return CellReading{read_positive(e), read_positive(inverse(e))};
  }

  NormalForm diagram_to_nf(Diagram const& d) {
    auto r = read_cells(d);
    return nf_mul(nf_from_word(r.positive), nf_inv(nf_from_word(r.negative)));
  }

  std::size_t cell_count_k(NormalForm const& f, std::size_t k) {
    return nf_to_diagram(f, k).cell_count();
  }

  std::vector<FWord> words_of_length(std::size_t n) {
    static FLetter const letters[4] = {{0, 1}, {0, -1}, {1, 1}, {1, -1}};
    std::vector<FWord>   layer{FWord{}};
    for (std::size_t len = 0; len < n; ++len) {
      std::vector<FWord> next;
      for (auto const& w : layer) {
        for (auto const& l : letters) {
          if (!w.empty() && w.back().index == l.index && w.back().exponent == -l.exponent) {
            continue;
          }
          FWord v = w;
          v.push_back(l);
          next.push_back(std::move(v));
        }
      }
      layer = std::move(next);
    }
    return layer;
  }

}  // namespace diagrams
