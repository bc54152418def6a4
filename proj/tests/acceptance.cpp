// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.
// Time limits are wall clock seconds and are part of each criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "diagrams/abelian.hpp"
#include "diagrams/diagram_io.hpp"
#include "diagrams/pl.hpp"
#include "diagrams/squier.hpp"
#include "diagrams/subgroup.hpp"
#include "diagrams/wreath.hpp"
#include "oracles.hpp"

using namespace diagrams;

namespace {

  struct Outcome {
    bool        ok = true;
    std::string note;

    void expect(bool cond, std::string const& what) {
      if (!cond && ok) {
        note = what;
      }
      ok = ok && cond;
    }
  };

  PresentationPtr make(char const* text) {
    return std::make_shared<Presentation const>(parse_presentation(text));
  }

  // ---- 1 ------------------------------------------------------------------

  Outcome unique_reduced_form() {
    Outcome      o;
    std::mt19937 rng(2024);
    std::size_t  with_dipoles = 0, total = 0;
    for (int pi = 0; pi < 5; ++pi) {
      auto p = oracle::random_presentation(rng);
      for (int k = 0; k < 100; ++k) {
        auto d0 = from_derivation(p, oracle::random_walk(*p, oracle::random_word(*p, 1, 4, rng),
                                                         30, 9, rng));
        ++total;
        with_dipoles += find_dipole(d0) ? 1 : 0;
        std::set<std::string> forms;
        for (int order = 0; order < 10; ++order) {
          Diagram d = d0;
          for (auto ds = find_dipoles(d); !ds.empty(); ds = find_dipoles(d)) {
            auto [i, j] = ds[std::uniform_int_distribution<std::size_t>(0, ds.size() - 1)(rng)];
            d           = remove_dipole(d, i, j);
          }
          forms.insert(format_diagram(d));
        }
        // the swap-move oracle, also in random order
        auto ref = make_canonical_diagram(p, d0.top(), oracle::reduce(*p, d0.steps(), rng));
        forms.insert(format_diagram(ref));
        forms.insert(format_diagram(reduce(d0)));
        o.expect(forms.size() == 1, "removal orders disagree on " + format_diagram(d0));
      }
    }
    o.note = o.ok ? std::to_string(total) + " diagrams, " + std::to_string(with_dipoles)
                        + " with dipoles"
                  : o.note;
    return o;
  }

  // ---- 2 ------------------------------------------------------------------

  // A random loop at w: a walk away, then the bounded search back.
  std::optional<Diagram> random_loop(PresentationPtr p, Word const& w, std::mt19937& rng) {
    auto d = oracle::random_walk(*p, w, 8, 7, rng);
    auto v = words_equal_bounded(*p, replay(*p, d), w, {9, 20000});
    if (auto* e = std::get_if<Equal>(&v)) {
      return compose(from_derivation(p, d), from_derivation(p, e->witness));
    }
    return std::nullopt;
  }

  Outcome group_axioms() {
    Outcome      o;
    std::mt19937 rng(77);
    std::size_t  tuples = 0, nontrivial = 0, cells = 0;
    auto thompson = thompson_presentation();
    auto ball     = oracle::f_ball(4);
    auto wreath_z = make("x y z | x = x y , z = y z");
    for (std::size_t round = 0; tuples < 200; ++round) {
      // random presentations rarely have big diagram groups, so every
      // third tuple lives over each of two known rich ones
      PresentationPtr p;
      Word            w;
      switch (round % 3) {
        case 0:
          p = oracle::random_presentation(rng);
          w = oracle::random_word(*p, 1, 3, rng);
          break;
        case 1:
          p = thompson;
          w = x_power(std::uniform_int_distribution<std::size_t>(1, 3)(rng));
          break;
        default:
          p = wreath_z;
          w = p->word("x z");
      }
      auto a = random_loop(p, w, rng);
      auto b = random_loop(p, w, rng);
      auto c = random_loop(p, w, rng);
      if (!a || !b || !c) {
        continue;
      }
      if (p == thompson) {
        // and a random element of F on top of the loop
        for (auto* d : {&a, &b, &c}) {
          auto const& g = ball[std::uniform_int_distribution<std::size_t>(0, ball.size() - 1)(rng)];
          *d = group_mul(**d, nf_to_diagram(g.first, w.size()));
        }
      }
      ++tuples;
      nontrivial += reduce(*a).cell_count() > 0 ? 1 : 0;
      cells += a->cell_count() + b->cell_count() + c->cell_count();
      auto e = identity(p, w);
      o.expect(equal(group_mul(group_mul(*a, *b), *c), group_mul(*a, group_mul(*b, *c))),
               "associativity");
      o.expect(equal(group_mul(*a, group_inv(*a)), e), "right inverse");
      o.expect(equal(group_mul(group_inv(*a), *a), e), "left inverse");
      o.expect(group_mul(*a, e) == reduce(*a) && group_mul(e, *a) == reduce(*a), "identity");

      // interchange on composable quadruples
      auto u  = oracle::random_word(*p, 1, 3, rng);
      auto d1 = from_derivation(p, oracle::random_walk(*p, w, 6, 8, rng));
      auto d2 = from_derivation(p, oracle::random_walk(*p, u, 6, 8, rng));
      auto d3 = from_derivation(p, oracle::random_walk(*p, d1.bottom(), 6, 10, rng));
      auto d4 = from_derivation(p, oracle::random_walk(*p, d2.bottom(), 6, 10, rng));
      o.expect(compose(sum(d1, d2), sum(d3, d4)) == sum(compose(d1, d3), compose(d2, d4)),
               "interchange law");
    }
    o.note = o.ok ? std::to_string(nontrivial) + "/200 first factors nontrivial, "
                        + std::to_string(cells) + " cells in all"
                  : o.note;
    return o;
  }

  // ---- 3 ------------------------------------------------------------------

  Outcome three_representations() {
    Outcome            o;
    std::vector<FWord> words;
    for (std::size_t n = 0; n <= 4; ++n) {
      for (auto& w : words_of_length(n)) {
        words.push_back(std::move(w));
      }
    }
    auto                    t = thompson_presentation();
    std::vector<NormalForm> nfs;
    std::vector<Diagram>    ds;
    std::vector<DyadicPL>   pls;
    std::map<std::pair<std::uint32_t, int>, DyadicPL> gen_pl;
    for (auto const& w : words) {
      nfs.push_back(nf_from_word(w));
      Diagram  d = identity(t, x_power(1));
      DyadicPL f;
      for (auto l : w) {
        d = group_mul(d, nf_to_diagram(nf_generator(l.index, l.exponent), 1));
        f = pl_compose(f, pl_from_nf(nf_generator(l.index, l.exponent)));
      }
      ds.push_back(d);
      pls.push_back(f);
    }
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        bool by_nf = nfs[i] == nfs[j];
        bool by_d  = equal(ds[i], ds[j]);
        bool by_pl = pls[i] == pls[j];
        o.expect(by_nf == by_d && by_d == by_pl,
                 format_fword(words[i]) + " vs " + format_fword(words[j]));
      }
    }
    for (std::uint32_t i = 0; i < 5; ++i) {
      for (std::uint32_t j = i + 1; j <= 5; ++j) {
        auto xi = nf_generator(i), xj = nf_generator(j), xk = nf_generator(j + 1);
        o.expect(nf_mul(nf_mul(nf_inv(xi), xj), xi) == xk, "normal form conjugation");
        o.expect(equal(group_conj(generator_diagram(j, 8), generator_diagram(i, 8)),
                       generator_diagram(j + 1, 8)),
                 "diagram conjugation");
        o.expect(pl_conj(pl_from_nf(xj), pl_from_nf(xi)) == pl_from_nf(xk), "PL conjugation");
      }
    }
    o.note = o.ok ? std::to_string(words.size()) + " words" : o.note;
    return o;
  }

  // ---- 4 ------------------------------------------------------------------

  Outcome cell_bounds() {
    Outcome o;
    auto    ball6 = oracle::f_ball(6);
    for (auto const& [g, len] : ball6) {
      std::size_t c = cell_count_k(g, 3);
      o.expect(len <= 3 * c && c <= 2 * len, format_nf(g));
    }
    for (auto const& [g, len] : oracle::f_ball(4)) {
      long c3 = static_cast<long>(cell_count_k(g, 3));
      for (std::size_t k = 1; k <= 6; ++k) {
        long ck = static_cast<long>(cell_count_k(g, k));
        o.expect(std::labs(ck - c3) <= 2 * std::labs(static_cast<long>(k) - 3),
                 format_nf(g) + " at k=" + std::to_string(k));
      }
    }
    o.note = o.ok ? std::to_string(ball6.size()) + " elements" : o.note;
    return o;
  }

  // ---- 5 ------------------------------------------------------------------

  Outcome rho_kernel() {
    Outcome o;
    for (auto const& [g, len] : oracle::f_ball(5)) {
      auto f    = pl_from_nf(g);
      bool flat = f.log2_slope_right(mpq_class(0)) == 0 && f.log2_slope_left(mpq_class(1)) == 0;
      o.expect(in_derived_subgroup_F(g) == flat, format_nf(g));
    }
    auto         q = q_t26();
    auto         x = thompson_oracle();
    std::mt19937 rng(26);
    std::size_t  nontrivial = 0;
    for (int k = 0; k < 100; ++k) {
      std::size_t i  = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
      std::size_t j  = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
      std::size_t e  = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
      auto        d1 = from_derivation(q, oracle::random_positive_q(*q, i, j, e, rng));
      auto        d2 = from_derivation(q, oracle::random_positive_q(*q, i, j, e, rng));
      auto        d  = compose(d1, inverse(d2));
      o.expect(rho(psi_relabel(d), x).is_zero(), "rho(psi(d)) != 0");
      auto r = reduce(d);
      nontrivial += r.cell_count() > 0 ? 1 : 0;
      o.expect(is_reduced(psi_relabel(r)), "psi broke reducedness");
    }
    o.note = o.ok ? std::to_string(nontrivial) + "/100 Q diagrams nontrivial" : o.note;
    return o;
  }

  // ---- 6 ------------------------------------------------------------------

  bool cells_commute(SquierComplex const& k) {
    for (auto const& c : k.two_cells) {
      if (!equal(path_to_diagram(k, c.corner, {{c.first_a}, {c.first_b}}),
                 path_to_diagram(k, c.corner, {{c.second_a}, {c.second_b}}))) {
        return false;
      }
    }
    return true;
  }

  Outcome squier_goldens() {
    Outcome o;
    auto    p8 = make("x y | x = x y");
    auto    k8 = build_component(p8, p8->word("x"), {11, 10000});
    auto    g8 = pi1_presentation(k8);
    o.expect(k8.vertices.size() == 11 && k8.edges.size() == 10, "path graph shape");
    o.expect(g8.generators.empty() && g8.relators.empty(), "x = xy: trivial group");
    o.expect(cells_commute(k8), "x = xy cells");

    auto p10 = make("x y z | x = x y , z = y z");
    for (std::size_t depth = 1; depth <= 8; ++depth) {
      auto k = build_component(p10, p10->word("x z"), {64, 100000, depth});
      auto g = pi1_presentation(k);
      o.expect(is_free(g) && g.generators.size() == 1,
               "rank at depth " + std::to_string(depth) + ": " + format_group_presentation(g));
      o.expect(cells_commute(k), "cells at depth " + std::to_string(depth));
    }

    auto p5 = make("x y | ");
    auto k5 = build_component(p5, p5->word("x y"));
    o.expect(k5.vertices.size() == 1 && k5.edges.empty() && !k5.truncated, "single vertex");

    auto pt = thompson_presentation();
    auto kt = build_component(pt, x_power(2), {6, 1000});
    o.expect(!kt.two_cells.empty() && cells_commute(kt), "thompson cells");
    return o;
  }

  // ---- 7 ------------------------------------------------------------------

  Outcome builder_goldens() {
    Outcome o;
    auto    fz = f_wr_z_product();
    o.expect(display_presentation(fz.presentation, true)
                 == "⟨x, y, z, a, u ∣ xy = x, yz = z, y = aua, uu = u⟩",
             display_presentation(fz.presentation, true));
    o.expect(fz.presentation.compact_word(fz.base) == "xz", "F wr Z base");
    auto bo = named_builder(NamedKind::big_o);
    o.expect(display_presentation(bo.presentation, true)
                 == "⟨x, y, ȳ, z, p, q, r ∣ x = xyp, z = rȳz, pyq = qȳr⟩",
             display_presentation(bo.presentation, true));
    o.expect(bo.presentation.format_word(bo.base) == "x y q ybar z", "O(G,H) base");
    return o;
  }

  // ---- 8 ------------------------------------------------------------------

  Outcome zwrz_certificates() {
    Outcome o;
    auto    t  = thm18_thompson_example();
    auto    rt = verify_zwrz(t.a, t.b, 4);
    o.expect(rt.passed(), "diagram construction:\n" + format_report(rt));
    auto e  = example37_zwrz_pair();
    auto re = verify_zwrz(e.a, e.b, 4);
    o.expect(re.passed(), "x1x2x1^-2, x0:\n" + format_report(re));
    auto        ball  = oracle::f_ball(3);
    std::size_t pairs = 0;
    for (auto const& [g, lg] : ball) {
      auto l = ff_embed(g, Side::left);
      for (auto const& [h, lh] : ball) {
        auto r = ff_embed(h, Side::right);
        o.expect(nf_mul(l, r) == nf_mul(r, l), "factors fail to commute");
        ++pairs;
      }
    }
    o.note = o.ok ? std::to_string(pairs) + " embedded pairs commute" : o.note;
    return o;
  }

  // ---- 9 ------------------------------------------------------------------

  WreathElement random_tower_element(int level, std::mt19937& rng) {
    TowerWord w;
    for (int i = 0; i < 10; ++i) {
      int g = std::uniform_int_distribution<int>(1, level)(rng);
      w.push_back(std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? g : -g);
    }
    return eval_tower_word(w, level);
  }

  Outcome tower_quantities() {
    Outcome o;
    for (int k = 1; k <= 4; ++k) {
      for (std::int64_t n = 1; n <= 5; ++n) {
        std::int64_t p = 1;
        for (int i = 0; i < k; ++i) {
          p *= n;
        }
        o.expect(phi(g_k_n(k, n)) == p, "phi(g_k(n))");
      }
    }
    std::mt19937 rng(38);
    for (int k = 1; k <= 3; ++k) {
      for (int r = 0; r < 50; ++r) {
        o.expect(phi(w_conj(g_k_n(k, 1), random_tower_element(k, rng))) == 1, "phi(g_k^h)");
      }
    }
    for (std::int64_t n = 1; n <= 6; ++n) {
      auto g = w_commutator(w_pow(zwrz_a(), n), w_pow(zwrz_b(), n));
      o.expect(relator_cost_zwrz(g) == n * n, "relator cost");
    }
    for (int d = 1; d <= 4; ++d) {
      std::size_t D = 3 * (std::size_t{1} << (d - 1)) - 2;
      for (std::int64_t n = 1; n <= 5; ++n) {
        auto w = g_k_n_word(d, n);
        o.expect(eval_tower_word(w, d) == g_k_n(d, n), "g_d(n) word value");
        o.expect(w.size() <= D * static_cast<std::size_t>(n), "g_d(n) word length");
      }
    }
    return o;
  }

  // ---- 10 -----------------------------------------------------------------

  Outcome cyclic_undistorted() {
    Outcome                 o;
    std::vector<NormalForm> x{nf_generator(0)};
    std::vector<NormalForm> y{nf_generator(0), nf_generator(1)};
    auto t = distortion_profile(x, y, nf_group_ops(), 6, 12, cyclic_x_bound(x[0], y));
    o.expect(!t.truncated, "ball budget hit");
    for (auto const& r : t.rows) {
      o.expect(r.exact && r.disto_lower == r.n, "row " + std::to_string(r.n));
    }
    o.note          = o.ok ? "rows n = disto(n), all exact" : o.note;
    return o;
  }

  struct Criterion {
    int                      id;
    char const*              name;
    double                   limit_s;
    std::function<Outcome()> run;
  };

}  // namespace

int main() {
  std::vector<Criterion> all{
      {1, "unique reduced form", 30, unique_reduced_form},
      {2, "group axioms and interchange", 10, group_axioms},
      {3, "three representations of F", 60, three_representations},
      {4, "cell count bounds", 300, cell_bounds},
      {5, "rho kernel and psi", 120, rho_kernel},
      {6, "Squier pi1 goldens", 30, squier_goldens},
      {7, "builder goldens", 1, builder_goldens},
      {8, "Z wr Z certificates", 180, zwrz_certificates},
      {9, "wreath tower quantities", 60, tower_quantities},
      {10, "undistorted cyclic subgroup", 120, cyclic_undistorted},
  };
  int failures = 0;
  for (auto const& c : all) {
    auto    start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o.ok   = false;
      o.note = std::string("exception: ") + e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_s) {
      o.ok   = false;
      o.note = "over the time limit; " + o.note;
    }
    failures += o.ok ? 0 : 1;
    std::printf("%s %2d %-30s %8.3fs (limit %gs)  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name,
                secs, c.limit_s, o.note.c_str());
  }
  return failures == 0 ? 0 : 1;
}
