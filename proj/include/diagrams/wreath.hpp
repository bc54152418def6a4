// The tower H_0 = 1, H_{k+1} = H_k wr <a_{k+1}>, with Z wr Z = H_2.

#ifndef DIAGRAMS_WREATH_HPP_
#define DIAGRAMS_WREATH_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "diagrams/errors.hpp"

namespace diagrams {

  class NotInSubgroup : public Error {
   public:
    using Error::Error;
  };

  // A level k element is (f, m): f a finitely supported map Z -> H_{k-1}
  // and m the exponent of a_k. Product:
  //   (f, m)(g, n) = (l -> f(l) g(l + m), m + n)
  // so conjugation by a_k moves the fiber at l to l + 1.
  class WreathElement {
   public:
    using Fibers = std::vector<std::pair<std::int64_t, WreathElement>>;

    WreathElement() = default;  // level 0

    static WreathElement identity(int level);
    // a_k inside H_level, 1 <= k <= level.
    static WreathElement generator(int k, int level);
    // Builds from parts; identity fibers are dropped. Throws on level mismatch.
    static WreathElement make(int level, Fibers fibers, std::int64_t top);

    int level() const noexcept {
      return _level;
    }
    Fibers const& fibers() const noexcept {
      return _fibers;
    }
    std::int64_t top() const noexcept {
      return _top;
    }
    bool is_identity() const noexcept {
      return _fibers.empty() && _top == 0;
    }
    // The fiber at l (identity if absent).
    WreathElement fiber(std::int64_t l) const;

    bool operator==(WreathElement const&) const = default;

   private:
    int          _level = 0;
    Fibers       _fibers;
    std::int64_t _top = 0;
  };

  WreathElement w_identity(int level);
  WreathElement w_mul(WreathElement const& a, WreathElement const& b);
  WreathElement w_inv(WreathElement const& a);
  // a^b = b^-1 a b
  WreathElement w_conj(WreathElement const& a, WreathElement const& b);
  // [a, b] = a^-1 b^-1 a b
  WreathElement w_commutator(WreathElement const& a, WreathElement const& b);
  WreathElement w_pow(WreathElement const& a, std::int64_t n);

  // Embeds a level k element into level k + 1 as the fiber at 0.
  WreathElement w_embed(WreathElement const& a);

  // a_i(t_1, ..., t_r) = a_i^{a_{i+1}^{t_1} ... a_{i+r}^{t_r}} inside H_level.
  WreathElement basic(int i, std::vector<std::int64_t> const& t, int level);

  // g_1(n) = a_1^n, g_{k+1}(n) = [g_k(n), a_{k+1}^n], inside H_k.
  WreathElement g_k_n(int k, std::int64_t n);

  // Words over a_1..a_d: +j is a_j, -j its inverse.
  using TowerWord = std::vector<int>;

  TowerWord     g_k_n_word(int k, std::int64_t n);
  WreathElement eval_tower_word(TowerWord const& w, int level);

  // Whether a lies in M_k, the normal closure of a_1 in H_k.
  bool in_m_k(WreathElement const& a);
  // Throws NotInSubgroup outside M_k.
  std::int64_t phi(WreathElement const& a);

  // Z wr Z = H_2 with a = a_1, b = a_2.
  WreathElement zwrz_a();
  WreathElement zwrz_b();
  // a_i = a^{b^i}, c_i = a_i^-1 a_{i+1}
  WreathElement zwrz_a_i(std::int64_t i);
  WreathElement zwrz_c_i(std::int64_t i);

  // Coefficients of g in the free basis {c_i} of N, as (i, d_i) with d_i != 0.
  std::vector<std::pair<std::int64_t, std::int64_t>> c_coefficients(WreathElement const& g);
  // Minimal number of conjugates of [a,b]^{+-1} whose product is g. Throws
  // NotInSubgroup when g is not in the normal closure of [a, b].
  std::int64_t relator_cost_zwrz(WreathElement const& g);

  // "(0:a_1^-1) (1:a_1) a_2^3"; identity "1".
  std::string format_wreath(WreathElement const& a);

}  // namespace diagrams

#endif  // DIAGRAMS_WREATH_HPP_
