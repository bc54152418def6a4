#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "diagrams/subgroup.hpp"
#include "diagrams/wreath.hpp"
#include "oracles.hpp"

using namespace diagrams;

namespace {

  // Z wr Z by hand: fiber exponents of a and the exponent of b.
  struct Lamp {
    std::map<std::int64_t, std::int64_t> f;
    std::int64_t                         m = 0;
  };

  Lamp lamp_mul(Lamp const& x, Lamp const& y) {
    Lamp out{x.f, x.m + y.m};
    for (auto const& [l, e] : y.f) {
      out.f[l - x.m] += e;
    }
    std::erase_if(out.f, [](auto const& kv) { return kv.second == 0; });
    return out;
  }

  Lamp lamp_letter(int l) {
    Lamp out;
    if (std::abs(l) == 1) {
      out.f[0] = l;
    } else {
      out.m = l > 0 ? 1 : -1;
    }
    return out;
  }

  bool same(Lamp const& x, WreathElement const& w) {
    if (x.m != w.top() || x.f.size() != w.fibers().size()) {
      return false;
    }
    for (auto const& [l, y] : w.fibers()) {
      auto it = x.f.find(l);
      if (it == x.f.end() || it->second != y.top()) {
        return false;
      }
    }
    return true;
  }

  TowerWord random_tower_word(int level, std::size_t len, std::mt19937& rng) {
    TowerWord w;
    for (std::size_t i = 0; i < len; ++i) {
      int g = std::uniform_int_distribution<int>(1, level)(rng);
      w.push_back(std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? g : -g);
    }
    return w;
  }

  WreathElement random_element(int level, std::mt19937& rng) {
    return eval_tower_word(random_tower_word(level, 8, rng), level);
  }

  NormalForm f_image(TowerWord const& w) {
    NormalForm a = parse_nf("x1 x2 x1^-2"), b = nf_generator(0);
    NormalForm out;
    for (int l : w) {
      NormalForm g = std::abs(l) == 1 ? a : b;
      out          = nf_mul(out, l > 0 ? g : nf_inv(g));
    }
    return out;
  }

}  // namespace

TEST_CASE("wreath products agree with a hand-rolled lamplighter") {
  std::mt19937 rng(1);
  for (int k = 0; k < 200; ++k) {
    auto w = random_tower_word(2, 12, rng);
    Lamp x;
    for (int l : w) {
      x = lamp_mul(x, lamp_letter(l));
    }
    CHECK(same(x, eval_tower_word(w, 2)));
  }
}

TEST_CASE("conjugation by the top generator shifts fibers up") {
  auto ab = w_conj(zwrz_a(), zwrz_b());
  REQUIRE(ab.fibers().size() == 1);
  CHECK(ab.fibers()[0].first == 1);
  CHECK(format_wreath(zwrz_a_i(2)) == "(2:a_1)");
}

TEST_CASE("group laws at levels up to four") {
  std::mt19937 rng(2);
  for (int level = 1; level <= 4; ++level) {
    for (int k = 0; k < 30; ++k) {
      auto a = random_element(level, rng);
      auto b = random_element(level, rng);
      auto c = random_element(level, rng);
      CHECK(w_mul(w_mul(a, b), c) == w_mul(a, w_mul(b, c)));
      CHECK(w_mul(a, w_inv(a)).is_identity());
      CHECK(w_mul(a, w_identity(level)) == a);
    }
  }
  CHECK_THROWS_AS(w_mul(w_identity(1), w_identity(2)), PreconditionError);
}

TEST_CASE("conjugating basic elements moves one parameter") {
  std::mt19937                       rng(3);
  std::uniform_int_distribution<int> small(-3, 3);
  for (int d = 2; d <= 4; ++d) {
    for (int i = 1; i < d; ++i) {
      for (int j = i + 1; j <= d; ++j) {
        std::vector<std::int64_t> s;
        for (int r = i + 1; r <= d; ++r) {
          s.push_back(small(rng));
        }
        std::int64_t l = small(rng);
        auto         t = s;
        t[static_cast<std::size_t>(j - i - 1)] += l;
        // w_j = a_j(s_{j+1}, ..., s_d) shares the tail of s
        std::vector<std::int64_t> tail(s.begin() + (j - i), s.end());
        auto                      wj  = basic(j, tail, d);
        auto                      lhs = w_conj(basic(i, s, d), w_pow(wj, l));
        CHECK(lhs == basic(i, t, d));
        // a different tail commutes
        if (!tail.empty()) {
          tail.back() += 1;
          CHECK(w_commutator(basic(i, s, d), basic(j, tail, d)).is_identity());
        }
      }
    }
  }
  CHECK(basic(1, {}, 3) == WreathElement::generator(1, 3));
  CHECK_THROWS_AS(basic(2, {1, 1}, 3), PreconditionError);
}

TEST_CASE("distinct lamps commute") {
  auto s = basic(1, {2}, 2);
  auto t = basic(1, {-1}, 2);
  CHECK(w_commutator(s, t).is_identity());
  for (std::int64_t n = 1; n <= 6; ++n) {
    CHECK(w_commutator(zwrz_a_i(n), zwrz_a()).is_identity());
  }
}

TEST_CASE("g_k(n) and phi") {
  CHECK(g_k_n(1, 3) == w_pow(WreathElement::generator(1, 1), 3));
  CHECK(g_k_n(2, 1) == w_commutator(zwrz_a(), zwrz_b()));
  CHECK(phi(w_identity(3)) == 0);
  for (int k = 1; k <= 4; ++k) {
    for (std::int64_t n = 1; n <= 5; ++n) {
      std::int64_t p = 1;
      for (int i = 0; i < k; ++i) {
        p *= n;
      }
      CHECK(phi(g_k_n(k, n)) == p);
      CHECK(eval_tower_word(g_k_n_word(k, n), k) == g_k_n(k, n));
    }
  }
  CHECK(phi(basic(1, {2, 3}, 3)) == 6);
  CHECK_THROWS_AS(phi(zwrz_b()), NotInSubgroup);
  CHECK(!in_m_k(zwrz_b()));
}

TEST_CASE("phi is conjugation invariant on g_k(1) and vanishes on embedded elements") {
  std::mt19937 rng(4);
  for (int k = 1; k <= 3; ++k) {
    for (int r = 0; r < 50; ++r) {
      auto h = random_element(k, rng);
      CHECK(phi(w_conj(g_k_n(k, 1), h)) == 1);
    }
  }
  for (int k = 2; k <= 4; ++k) {
    for (int r = 0; r < 20; ++r) {
      auto h = w_conj(g_k_n(k - 1, 2), random_element(k - 1, rng));
      CHECK(phi(w_embed(h)) == 0);
    }
  }
}

TEST_CASE("length of the g_d(n) words") {
  for (int d = 1; d <= 4; ++d) {
    std::size_t D = 3 * (std::size_t{1} << (d - 1)) - 2;
    for (std::int64_t n = 1; n <= 5; ++n) {
      CHECK(g_k_n_word(d, n).size() <= D * static_cast<std::size_t>(n));
    }
  }
}

TEST_CASE("relator cost in Z wr Z") {
  CHECK(relator_cost_zwrz(w_identity(2)) == 0);
  for (std::int64_t n = 1; n <= 6; ++n) {
    CHECK(relator_cost_zwrz(g_k_n(2, n)) == n * n);
  }
  auto c = w_mul(zwrz_c_i(0), w_inv(zwrz_c_i(1)));
  CHECK(relator_cost_zwrz(c) == 2);
  auto coeffs = c_coefficients(c);
  REQUIRE(coeffs.size() == 2);
  CHECK(coeffs[0] == std::pair<std::int64_t, std::int64_t>{0, 1});
  CHECK(coeffs[1] == std::pair<std::int64_t, std::int64_t>{1, -1});
  CHECK_THROWS_AS(relator_cost_zwrz(zwrz_a()), NotInSubgroup);
}

TEST_CASE("wreath identities survive in F") {
  for (int n = 1; n <= 6; ++n) {
    // [a^(b^n), a]
    TowerWord w;
    w.insert(w.end(), static_cast<std::size_t>(n), -2);
    w.push_back(-1);
    w.insert(w.end(), static_cast<std::size_t>(n), 2);
    w.push_back(-1);
    w.insert(w.end(), static_cast<std::size_t>(n), -2);
    w.push_back(1);
    w.insert(w.end(), static_cast<std::size_t>(n), 2);
    w.push_back(1);
    CHECK(eval_tower_word(w, 2).is_identity());
    CHECK(f_image(w).is_identity());
  }
  std::mt19937 rng(5);
  for (int k = 0; k < 100; ++k) {
    auto w = random_tower_word(2, 10, rng);
    CHECK(eval_tower_word(w, 2).is_identity() == f_image(w).is_identity());
  }
}

TEST_CASE("thm18 generators") {
  auto pair = thm18_thompson_example();
  CHECK(pair.a.top() == x_power(3));
  CHECK(pair.b.top() == x_power(3));
  CHECK(pair.a.is_spherical());
  CHECK(!diagram_to_nf(pair.a).is_identity());
  // b = (xx -> x) + (x -> xx)
  CHECK(pair.b.cell_count() == 2);
  CHECK(comp(pair.a) == 1);

  auto p  = thompson_presentation();
  auto up = from_derivation(p, Derivation{{0}, {Step{0, 0, Direction::forward}}});
  CHECK_THROWS_AS(thm18_generators(p, {0}, {0}, {0}, trivial(p, {0}), inverse(up), up),
                  PreconditionError);
  CHECK_THROWS_AS(thm18_generators(p, {0}, {0}, {0}, nf_to_diagram(nf_generator(0), 1), up, up),
                  PreconditionError);
}

TEST_CASE("verify_zwrz") {
  auto t = thm18_thompson_example();
  CHECK(verify_zwrz(t.a, t.b, 4).passed());
  auto e = example37_zwrz_pair();
  auto r = verify_zwrz(e.a, e.b, 4);
  CHECK(r.passed());
  CHECK(r.pairs_checked == 10);
  CHECK(!verify_zwrz(e.a, e.a, 2).passed());
  CHECK(format_report(r).find("verdict: pass") != std::string::npos);
}

TEST_CASE("thm24 witness search") {
  auto w = thm24_witness_search(thompson_presentation(), {0});
  REQUIRE(w);
  CHECK(w->x == Word{0});
  CHECK(w->y == Word{0});
  CHECK(w->z == Word{0});
  CHECK(is_reduced(w->delta));
  CHECK(w->delta.cell_count() > 0);
  CHECK(w->delta.top() == Word{0});
  CHECK(w->delta.is_spherical());

  auto free2 = std::make_shared<Presentation const>(parse_presentation("a b | "));
  CHECK(!thm24_witness_search(free2, free2->word("a b")));
  auto comm = std::make_shared<Presentation const>(parse_presentation("a b | a b = b a"));
  CHECK(!thm24_witness_search(comm, comm->word("a b")));
}

TEST_CASE("F x F in F") {
  CHECK(format_nf(ff_embed(nf_generator(0), Side::left)) == "x1 x2 x1^-2");
  CHECK(format_nf(ff_embed(nf_generator(1), Side::left)) == "x1^2 x2 x1^-3");
  CHECK(format_nf(ff_embed(nf_generator(0), Side::right)) == "x2 x3 x2^-2");
  CHECK(format_nf(ff_embed(nf_generator(1), Side::right)) == "x2^2 x3 x2^-3");
  CHECK(ff_embed(NormalForm{}, Side::left).is_identity());

  auto ball = oracle::f_ball(3);
  for (auto const& [g, lg] : ball) {
    auto eg = ff_embed(g, Side::left);
    for (std::size_t k = 0; k < ball.size(); k += 7) {
      auto eh = ff_embed(ball[k].first, Side::right);
      CHECK(nf_mul(eg, eh) == nf_mul(eh, eg));
    }
  }
  // homomorphism on each side
  for (std::size_t k = 0; k + 1 < ball.size(); k += 5) {
    auto const& g = ball[k].first;
    auto const& h = ball[k + 1].first;
    CHECK(ff_embed(nf_mul(g, h), Side::left)
          == nf_mul(ff_embed(g, Side::left), ff_embed(h, Side::left)));
  }
}

TEST_CASE("Mikhailova generators are the images of the K generators") {
  auto gens = example37_generators();
  REQUIRE(gens.size() == 3);
  // K = <(a, a), (b, b), ([a, b], 1)> with a = x1 x2 x1^-2, b = x0
  auto a    = parse_nf("x1 x2 x1^-2");
  auto b    = nf_generator(0);
  auto c    = nf_mul(nf_mul(nf_inv(a), nf_inv(b)), nf_mul(a, b));
  auto both = [](NormalForm const& g) {
    return nf_mul(ff_embed(g, Side::left), ff_embed(g, Side::right));
  };
  std::set<NormalForm> expected{both(a), both(b), ff_embed(c, Side::left)};
  std::set<NormalForm> got(gens.begin(), gens.end());
  CHECK(got == expected);
}

TEST_CASE("distortion profiles") {
  auto ops = nf_group_ops();
  std::vector<NormalForm> y{nf_generator(0), nf_generator(1)};
  auto same = distortion_profile(y, y, ops, 4, 4, [](std::size_t n) { return n; });
  for (auto const& r : same.rows) {
    CHECK(r.disto_lower == r.n);
    CHECK(r.exact);
  }
  auto x0 = std::vector<NormalForm>{nf_generator(0)};
  auto t  = distortion_profile(x0, y, ops, 6, 12, cyclic_x_bound(x0[0], y));
  for (auto const& r : t.rows) {
    CHECK(r.disto_lower == r.n);
    CHECK(r.exact);
  }
  CHECK(distortion_csv(t).rfind("n,disto_lower,exact\n0,0,true\n1,1,true\n", 0) == 0);
  CHECK(!cyclic_x_bound(nf_generator(1), y));

  // |g_n| <= 4n: the commutator word, and the ball for small n
  GroupOps<WreathElement> wops{w_mul, w_inv, format_wreath, w_identity(2)};
  for (std::int64_t n = 1; n <= 6; ++n) {
    CHECK(g_k_n_word(2, n).size() == static_cast<std::size_t>(4 * n));
  }
  std::vector<WreathElement> ab{zwrz_a(), zwrz_b()};
  bool cut     = false;
  auto lengths = ball(ab, wops, 12, 2000000, &cut);
  CHECK(!cut);
  for (std::int64_t n = 1; n <= 3; ++n) {
    auto it = lengths.find(format_wreath(g_k_n(2, n)));
    REQUIRE(it != lengths.end());
    CHECK(it->second <= static_cast<std::size_t>(4 * n));
  }
}
