// Z wr Z subgroups of diagram groups, the F x F -> F embedding rules and
// distortion profiles over balls.

#ifndef DIAGRAMS_SUBGROUP_HPP_
#define DIAGRAMS_SUBGROUP_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diagrams/diagram.hpp"
#include "diagrams/squier.hpp"
#include "diagrams/thompson.hpp"

namespace diagrams {

  struct ZwrZPair {
    Diagram a;
    Diagram b;
  };

  // a = e(x) + delta + e(z), b = gamma1 + gamma2. The shapes of gamma1
  // ((xy, x)) and gamma2 ((z, yz)) are themselves proofs of xy = x, yz = z.
  ZwrZPair thm18_generators(PresentationPtr p, Word const& x, Word const& y, Word const& z,
                            Diagram const& delta, Diagram const& gamma1, Diagram const& gamma2);

  // x = y = z = x over <x | x = x x> with delta = x0 at base x.
  ZwrZPair thm18_thompson_example();
  // a = x1 x2 x1^-2, b = x0 at base x.
  ZwrZPair example37_zwrz_pair();

  struct ZwrZReport {
    bool        commutator_nontrivial = false;
    std::size_t pairs_checked         = 0;
    std::size_t pairs_failed          = 0;
    std::size_t products_checked      = 0;
    std::size_t products_trivial      = 0;

    bool passed() const {
      return commutator_nontrivial && pairs_failed == 0 && products_trivial == 0;
    }
  };

  ZwrZReport  verify_zwrz(Diagram const& a, Diagram const& b, std::size_t depth,
                          std::size_t products = 12, unsigned seed = 7);
  std::string format_report(ZwrZReport const& r);

  struct Thm24Bounds {
    std::size_t  max_piece_len = 3;  // |x|, |y|, |z|
    SearchLimits equality{12, 2000};
    SquierBounds loops{6, 400};
  };

  struct Thm24Witness {
    Word    x, y, z;
    Diagram delta;
  };

  // nullopt is inconclusive: nothing was found inside the bounds.
  std::optional<Thm24Witness> thm24_witness_search(PresentationPtr p, Word const& w,
                                                   Thm24Bounds bounds = {});

  // Shortest nontrivial spherical diagram from the loops of a bounded
  // Squier component of y (non-tree edges closed up through the tree).
  std::optional<Diagram> nontrivial_spherical(PresentationPtr p, Word const& y,
                                              SquierBounds bounds);

  // --- F x F in F ---------------------------------------------------------

  std::vector<NormalForm> example37_generators();

  enum class Side { left, right };

  NormalForm ff_embed(NormalForm const& g, Side side);

  // --- distortion ---------------------------------------------------------

  template <class G>
  struct GroupOps {
    std::function<G(G const&, G const&)> mul;
    std::function<G(G const&)>           inv;
    std::function<std::string(G const&)> key;
    G                                    identity;
  };

  struct DistortionRow {
    std::size_t n;
    std::size_t disto_lower;
    bool        exact;
  };

  struct DistortionTable {
    std::vector<std::string>   x_names, y_names;
    std::vector<DistortionRow> rows;
    bool                       truncated = false;  // an element budget was hit
  };

  // Ball of radius r: key -> word length, in enumeration order.
  template <class G>
  std::map<std::string, std::size_t> ball(std::vector<G> const& gens, GroupOps<G> const& ops,
                                          std::size_t radius, std::size_t max_elements,
                                          bool* truncated) {
    std::vector<G> letters;
    for (auto const& g : gens) {
      letters.push_back(g);
      letters.push_back(ops.inv(g));
    }
    std::map<std::string, std::size_t> seen{{ops.key(ops.identity), 0}};
    std::vector<G>                     sphere{ops.identity};
    for (std::size_t r = 1; r <= radius && !sphere.empty(); ++r) {
      std::vector<G> next;
      for (auto const& g : sphere) {
        for (auto const& l : letters) {
          G    h = ops.mul(g, l);
          auto k = ops.key(h);
          if (seen.count(k) != 0) {
            continue;
          }
          if (seen.size() >= max_elements) {
            if (truncated != nullptr) {
              *truncated = true;
            }
            return seen;
          }
          seen.emplace(std::move(k), r);
          next.push_back(std::move(h));
        }
      }
      sphere = std::move(next);
    }
    return seen;
  }

  // disto_lower(n) = max |g|_X over g with |g|_Y <= n found in the X-ball
  // of radius m_max. Row n is exact when x_length_bound(n), an a-priori
  // bound on |g|_X over such g, is at most m_max.
  template <class G>
  DistortionTable distortion_profile(std::vector<G> const& x, std::vector<G> const& y,
                                     GroupOps<G> const& ops, std::size_t n_max, std::size_t m_max,
                                     std::function<std::optional<std::size_t>(std::size_t)>
                                                 x_length_bound = {},
                                     std::size_t max_elements   = 200000) {
    DistortionTable t;
    auto            yb = ball(y, ops, n_max, max_elements, &t.truncated);
    auto            xb = ball(x, ops, m_max, max_elements, &t.truncated);
    std::vector<std::size_t> best(n_max + 1, 0);
    for (auto const& [k, ylen] : yb) {
      auto it = xb.find(k);
      if (it != xb.end()) {
        best[ylen] = std::max(best[ylen], it->second);
      }
    }
    std::size_t running = 0;
    for (std::size_t n = 0; n <= n_max; ++n) {
      running   = std::max(running, best[n]);
      bool exact = false;
      if (x_length_bound && !t.truncated) {
        auto b = x_length_bound(n);
        exact  = b && *b <= m_max;
      }
      t.rows.push_back({n, running, exact});
    }
    return t;
  }

  std::string distortion_csv(DistortionTable const& t);

  GroupOps<NormalForm> nf_group_ops();

  // X = {g} in F. Every y moves the slope exponent at 1 by at most
  // max |s(y)|, so g^m with |g^m|_Y <= n has |m| <= n max|s(y)| / |s(g)|.
  // Empty when s(g) = 0.
  std::function<std::optional<std::size_t>(std::size_t)>
  cyclic_x_bound(NormalForm const& g, std::vector<NormalForm> const& y);

}  // namespace diagrams

#endif  // DIAGRAMS_SUBGROUP_HPP_
