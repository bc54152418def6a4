// The homomorphism rho into the free abelian group on M x R x M.

#ifndef DIAGRAMS_ABELIAN_HPP_
#define DIAGRAMS_ABELIAN_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <tuple>

#include "diagrams/diagram.hpp"
#include "diagrams/thompson.hpp"
#include "diagrams/wreath.hpp"

namespace diagrams {

  // Canonical representative of the monoid element of a word.
  struct MonoidOracle {
    std::function<Word(Word const&)> canonical;
  };

  // M = {1, x} for <x | x = x x>.
  MonoidOracle thompson_oracle();

  using Triple = std::tuple<Word, std::size_t, Word>;

  struct AbelianVector {
    std::map<Triple, std::int64_t> coeffs;  // no zero entries

    bool is_zero() const noexcept {
      return coeffs.empty();
    }
    void add(Triple const& t, std::int64_t c);
    AbelianVector& operator+=(AbelianVector const& o);
    AbelianVector  operator-() const;
    bool operator==(AbelianVector const&) const = default;
  };

  AbelianVector operator+(AbelianVector a, AbelianVector const& b);

  // "+ (1, x=xx, x) - (x, x=xx, 1)", "0" for zero.
  std::string format_abelian(AbelianVector const& v, Presentation const& p);

  AbelianVector rho(Diagram const& d, MonoidOracle const& oracle);

  bool in_derived_subgroup_F(Diagram const& d);
  bool in_derived_subgroup_F(NormalForm const& f);

  // <x, a_i, b_i (0 <= i <= bound) | x = x x, a_i = a_{i+1} x, b_i = x b_{i+1}>.
  PresentationPtr q_t26(std::size_t bound = 64);
  LabelMorphism   psi_morphism(PresentationPtr q);
  Diagram         psi_relabel(Diagram const& d);

  enum class MikhailovaGroup { f_mod_commutator, zwrz_mod_commutator };

  // (g, h) lies in K iff g and h agree modulo N.
  bool mikhailova_membership(NormalForm const& g, NormalForm const& h);
  bool mikhailova_membership(WreathElement const& g, WreathElement const& h);

}  // namespace diagrams

#endif  // DIAGRAMS_ABELIAN_HPP_
