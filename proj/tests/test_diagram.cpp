#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "diagrams/abelian.hpp"
#include "diagrams/diagram.hpp"
#include "diagrams/diagram_io.hpp"
#include "diagrams/thompson.hpp"
#include "oracles.hpp"

using namespace diagrams;

namespace {

  Step fwd(std::size_t o) {
    return Step{o, 0, Direction::forward};
  }
  Step bwd(std::size_t o) {
    return Step{o, 0, Direction::backward};
  }

  struct Sample {
    PresentationPtr p;
    Derivation      d;
  };

  std::vector<Sample> samples(unsigned seed, std::size_t n, std::size_t max_steps) {
    std::mt19937        rng(seed);
    std::vector<Sample> out;
    while (out.size() < n) {
      auto p = oracle::random_presentation(rng);
      auto w = oracle::random_word(*p, 1, 4, rng);
      out.push_back({p, oracle::random_walk(*p, w, max_steps, 8, rng)});
    }
    return out;
  }

}  // namespace

TEST_CASE("trivial diagrams") {
  auto t = thompson_presentation();
  auto e = trivial(t, {0});
  CHECK(e.cell_count() == 0);
  CHECK(e.top() == Word{0});
  CHECK(e.bottom() == Word{0});
  CHECK_THROWS_AS(trivial(t, {}), PreconditionError);
  auto c = std::make_shared<Presentation const>(parse_presentation("a b | a b = b a"));
  CHECK(trivial(c, c->word("a b")).cell_count() == 0);
}

TEST_CASE("interchange of independent steps gives one diagram") {
  auto t = thompson_presentation();
  auto a = from_derivation(t, {{0, 0}, {fwd(0), fwd(2)}});
  auto b = from_derivation(t, {{0, 0}, {fwd(1), fwd(0)}});
  CHECK(a == b);
  CHECK(equal(a, b));
  CHECK(canonicalize(*t, {0, 0}, {fwd(1), fwd(0)}) == std::vector<Step>{fwd(0), fwd(2)});
}

TEST_CASE("from_derivation keeps dipoles") {
  auto t = thompson_presentation();
  auto d = from_derivation(t, {{0}, {fwd(0), bwd(0)}});
  CHECK(d.cell_count() == 2);
  CHECK(find_dipole(d) == std::pair<std::size_t, std::size_t>{0, 1});
  CHECK(reduce(d) == trivial(t, {0}));
  CHECK(equal(d, trivial(t, {0})));
  auto r = from_derivation(t, {{0}, {fwd(0), fwd(1)}});
  CHECK(!find_dipole(r));
  CHECK(is_reduced(r));
  CHECK(!find_dipole(trivial(t, {0, 0})));
  CHECK_THROWS_AS(from_derivation(t, {{0}, {bwd(0)}}), NotApplicable);
}

TEST_CASE("canonical order agrees with the swap oracle") {
  for (auto const& s : samples(1, 300, 12)) {
    auto d = from_derivation(s.p, s.d);
    CHECK(d.steps() == oracle::canonical(*s.p, s.d.steps));
    CHECK(replay(*s.p, d.derivation()) == d.bottom());
    CHECK(canonicalize(*s.p, d.top(), d.steps()) == d.steps());
  }
}

TEST_CASE("single swaps do not change the canonical form") {
  std::mt19937 rng(17);
  for (auto const& s : samples(2, 200, 12)) {
    auto d     = from_derivation(s.p, s.d);
    auto steps = d.steps();
    if (steps.size() < 2) {
      continue;
    }
    std::size_t k  = std::uniform_int_distribution<std::size_t>(0, steps.size() - 2)(rng);
    auto        sw = oracle::swap(*s.p, steps[k], steps[k + 1]);
    if (!sw) {
      continue;
    }
    steps[k]     = sw->first;
    steps[k + 1] = sw->second;
    CHECK(canonicalize(*s.p, d.top(), steps) == d.steps());
  }
}

TEST_CASE("reduction agrees with random dipole removal") {
  std::mt19937 rng(23);
  for (auto const& s : samples(3, 200, 14)) {
    auto d = from_derivation(s.p, s.d);
    auto r = reduce(d);
    CHECK(r.steps() == oracle::reduce(*s.p, s.d.steps, rng));
    CHECK(is_reduced(r));
    CHECK(reduce(r) == r);
    CHECK(find_dipoles(d).size() == oracle::dipoles(*s.p, d.steps()).size());
  }
}

TEST_CASE("remove_dipole rejects non-dipoles") {
  auto t = thompson_presentation();
  auto r = from_derivation(t, {{0}, {fwd(0), fwd(1)}});
  CHECK_THROWS_AS(remove_dipole(r, 0, 1), PreconditionError);
}

TEST_CASE("composition, sum and inverse") {
  auto t  = thompson_presentation();
  auto x0 = generator_diagram(0, 3);
  auto e  = trivial(t, x_power(3));
  CHECK(compose(e, e) == e);
  CHECK(compose(x0, e) == x0);
  CHECK(compose(x0, inverse(x0)).cell_count() == 4);
  CHECK(reduce(compose(x0, inverse(x0))) == e);
  CHECK(inverse(inverse(x0)) == x0);
  CHECK(inverse(e) == e);
  CHECK(sum(trivial(t, {0}), trivial(t, {0, 0})) == e);
  CHECK_THROWS_AS(compose(x0, trivial(t, {0})), MismatchError);

  auto delta = nf_to_diagram(nf_generator(0), 1);
  auto s     = sum(sum(trivial(t, {0}), delta), trivial(t, {0}));
  CHECK(s.top() == x_power(3));
  CHECK(s.bottom() == x_power(3));
}

TEST_CASE("group laws and interchange on random diagrams") {
  for (auto const& s : samples(4, 60, 10)) {
    auto d = from_derivation(s.p, s.d);
    CHECK(equal(compose(d, inverse(d)), trivial(s.p, d.top())));
  }
  auto all = samples(5, 80, 6);
  for (std::size_t i = 0; i + 3 < all.size(); i += 4) {
    auto d1 = from_derivation(all[i].p, all[i].d);
    // d3 continues from d1's bottom, d4 from d2's, all over d1's presentation
    std::mt19937 rng(static_cast<unsigned>(i));
    auto         d2 = from_derivation(all[i].p,
                                      oracle::random_walk(*all[i].p,
                                                          oracle::random_word(*all[i].p, 1, 3, rng),
                                                          6, 8, rng));
    auto d3 = from_derivation(all[i].p, oracle::random_walk(*all[i].p, d1.bottom(), 6, 10, rng));
    auto d4 = from_derivation(all[i].p, oracle::random_walk(*all[i].p, d2.bottom(), 6, 10, rng));
    CHECK(compose(sum(d1, d2), sum(d3, d4)) == sum(compose(d1, d3), compose(d2, d4)));
    CHECK(sum(sum(d1, d2), d3) == sum(d1, sum(d2, d3)));
    CHECK(compose(compose(d1, d3), inverse(d3)) == compose(d1, compose(d3, inverse(d3))));
  }
}

TEST_CASE("diagram group over x^3") {
  auto t  = thompson_presentation();
  auto x0 = generator_diagram(0, 3);
  auto x1 = generator_diagram(1, 3);
  auto e  = identity(t, x_power(3));
  CHECK(reduce(group_mul(x0, x1)).cell_count() == 4);
  CHECK(equal(group_mul(x0, group_inv(x0)), e));
  CHECK(equal(group_mul(group_mul(x0, x1), x0), group_mul(x0, group_mul(x1, x0))));
  CHECK(equal(group_pow(x0, 0), e));
  CHECK(equal(group_pow(x0, -2), group_inv(group_mul(x0, x0))));
  CHECK(!equal(group_commutator(x0, x1), e));
  // x1^x0 = x2
  CHECK(equal(group_conj(x1, x0), nf_to_diagram(nf_generator(2), 3)));
}

TEST_CASE("generator diagrams at base x^3 replay the quoted derivations") {
  auto t = thompson_presentation();
  CHECK(generator_diagram(0, 3) == from_derivation(t, {x_power(3), {fwd(2), bwd(0)}}));
  CHECK(generator_diagram(1, 3) == from_derivation(t, {x_power(3), {fwd(1), bwd(0)}}));
}

TEST_CASE("components") {
  auto t     = thompson_presentation();
  auto delta = nf_to_diagram(nf_generator(0), 1);
  CHECK(comp(trivial(t, x_power(4))) == 0);
  CHECK(decompose_components(trivial(t, x_power(4))).parts.size() == 4);
  auto d1 = sum(sum(trivial(t, x_power(2)), delta), trivial(t, {0}));
  CHECK(comp(d1) == 1);
  CHECK(decompose_components(d1).parts.size() == 4);
  CHECK(comp(sum(delta, delta)) == 2);
  CHECK(comp(generator_diagram(0, 3)) == 1);
  CHECK(comp(sum(generator_diagram(1, 3), delta)) == 2);
}

TEST_CASE("substitution is functorial") {
  auto q = q_t26(4);
  auto m = psi_morphism(q);
  validate(m);
  auto t = thompson_presentation();
  auto w = q->word("a0 b0");
  CHECK(substitute(trivial(q, w), m) == trivial(t, x_power(2)));
  std::mt19937 rng(31);
  for (int k = 0; k < 30; ++k) {
    auto d1 = from_derivation(q, oracle::random_walk(*q, w, 8, 6, rng));
    auto d2 = from_derivation(q, oracle::random_walk(*q, d1.bottom(), 8, 6, rng));
    CHECK(substitute(compose(d1, d2), m) == compose(substitute(d1, m), substitute(d2, m)));
    CHECK(substitute(inverse(d1), m) == inverse(substitute(d1, m)));
    CHECK(substitute(sum(d1, d2), m) == sum(substitute(d1, m), substitute(d2, m)));
  }
}

TEST_CASE("text format round trip") {
  for (auto const& s : samples(6, 100, 10)) {
    auto d = from_derivation(s.p, s.d);
    CHECK(parse_diagram(s.p, format_diagram(d)) == d);
  }
  auto t = thompson_presentation();
  CHECK(format_diagram(generator_diagram(0, 3))
        == "diagram over thompson: x x x => x x x\n(1, x x -> x, x)\n(x, x -> x x, 1)\n");
  CHECK_THROWS_AS(parse_diagram(t, "not a diagram"), ParseError);
  CHECK_THROWS_AS(parse_diagram(t, "diagram over thompson: x => x\n(1, x x -> x, 1)\n"),
                  NotApplicable);
  CHECK(diagram_to_dot(generator_diagram(0, 3)).find("digraph") != std::string::npos);
}
