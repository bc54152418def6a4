#include "diagrams/abelian.hpp"

#include <map>
#include <mutex>

namespace diagrams {

  MonoidOracle thompson_oracle() {
    return MonoidOracle{[](Word const& w) { return w.empty() ? Word{} : Word{0}; }};
  }

  void AbelianVector::add(Triple const& t, std::int64_t c) {
    auto& slot = coeffs[t];
    slot += c;
    if (slot == 0) {
      coeffs.erase(t);
    }
  }

  AbelianVector& AbelianVector::operator+=(AbelianVector const& o) {
    for (auto const& [t, c] : o.coeffs) {
      add(t, c);
    }
    return *this;
  }

  AbelianVector AbelianVector::operator-() const {
    AbelianVector out = *this;
    for (auto& [t, c] : out.coeffs) {
      c = -c;
    }
    return out;
  }

  AbelianVector operator+(AbelianVector a, AbelianVector const& b) {
    return a += b;
  }

  std::string format_abelian(AbelianVector const& v, Presentation const& p) {
    if (v.is_zero()) {
      return "0";
    }
    std::string out;
    for (auto const& [t, c] : v.coeffs) {
      auto const& [l, r, m] = t;
      if (!out.empty()) {
        out += ' ';
      }
      out += c > 0 ? "+ " : "- ";
      std::int64_t mag = c > 0 ? c : -c;
      if (mag != 1) {
        out += std::to_string(mag) + " ";
      }
      out += "(" + p.compact_word(l) + ", " + p.format_relation(r) + ", "
             + p.compact_word(m) + ")";
    }
    return out;
  }

  AbelianVector rho(Diagram const& d, MonoidOracle const& oracle) {
    if (!d.is_spherical()) {
      throw PreconditionError("rho: diagram is not spherical");
    }
    if (!oracle.canonical) {
      throw PreconditionError("rho: no monoid oracle for this presentation");
    }
    auto const&   p = d.presentation();
    AbelianVector v;
    Word          word = d.top();
    for (Step const& s : d.steps()) {
      auto const& lhs = step_lhs(p, s);
      Word        prefix(word.begin(), word.begin() + s.offset);
      Word        suffix(word.begin() + s.offset + lhs.size(), word.end());
      v.add({oracle.canonical(prefix), s.relation, oracle.canonical(suffix)},
            s.direction == Direction::forward ? 1 : -1);
      word = apply_step(word, p, s);
    }
    return v;
  }

  bool in_derived_subgroup_F(Diagram const& d) {
    if (!(d.presentation() == *thompson_presentation())) {
      throw MismatchError("F' membership needs a diagram over <x | x = x x>");
    }
    return rho(d, thompson_oracle()).is_zero();
  }

  bool in_derived_subgroup_F(NormalForm const& f) {
    return in_derived_subgroup_F(nf_to_diagram(f, 1));
  }

  PresentationPtr q_t26(std::size_t bound) {
    static std::mutex                                 lock;
    static std::map<std::size_t, PresentationPtr>    cache;
    std::lock_guard<std::mutex>                       guard(lock);
    auto                                              it = cache.find(bound);
    if (it != cache.end()) {
      return it->second;
    }
    std::vector<std::string> alphabet{"x"};
    for (std::size_t i = 0; i <= bound; ++i) {
      alphabet.push_back("a" + std::to_string(i));
    }
    for (std::size_t i = 0; i <= bound; ++i) {
      alphabet.push_back("b" + std::to_string(i));
    }
    auto a = [](std::size_t i) { return static_cast<Letter>(1 + i); };
    auto b = [bound](std::size_t i) { return static_cast<Letter>(2 + bound + i); };
    std::vector<Relation> rels{{{0}, {0, 0}}};
    for (std::size_t i = 0; i < bound; ++i) {
      rels.push_back({{a(i)}, {a(i + 1), 0}});
    }
    for (std::size_t i = 0; i < bound; ++i) {
      rels.push_back({{b(i)}, {0, b(i + 1)}});
    }
    auto p = std::make_shared<Presentation const>(std::move(alphabet), std::move(rels),
                                                  "q_t26");
    cache.emplace(bound, p);
    return p;
  }

  LabelMorphism psi_morphism(PresentationPtr q) {
    auto    t    = thompson_presentation();
    Diagram cell = from_derivation(t, Derivation{{0}, {Step{0, 0, Direction::forward}}});
    LabelMorphism m{q, t, std::vector<Word>(q->size(), Word{0}),
                    std::vector<Diagram>(q->relations().size(), cell)};
    for (auto const& r : q->relations()) {
      if (r.lhs.size() != 1 || r.rhs.size() != 2) {
        throw PreconditionError("psi: not a presentation of the Q shape");
      }
    }
    return m;
  }

  Diagram psi_relabel(Diagram const& d) {
    return substitute(d, psi_morphism(d.presentation_ptr()));
  }

  bool mikhailova_membership(NormalForm const& g, NormalForm const& h) {
    return in_derived_subgroup_F(nf_mul(g, nf_inv(h)));
  }

  bool mikhailova_membership(WreathElement const& g, WreathElement const& h) {
    if (g.level() != 2 || h.level() != 2) {
      throw PreconditionError("Z wr Z membership needs level 2 elements");
    }
    auto sums = [](WreathElement const& x) {
      std::int64_t a = 0;
      for (auto const& [l, y] : x.fibers()) {
        a += y.top();
      }
      return std::pair{a, x.top()};
    };
    return sums(g) == sums(h);
  }

}  // namespace diagrams
