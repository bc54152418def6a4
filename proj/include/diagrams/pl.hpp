// Piecewise linear maps with dyadic breakpoints: F acting on [0,1] and on
// the half line [0, inf). Maps act on the right, t f g = g(f(t)).

#ifndef DIAGRAMS_PL_HPP_
#define DIAGRAMS_PL_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "diagrams/dyadic.hpp"
#include "diagrams/thompson.hpp"

namespace diagrams {

  enum class PLDomain { unit, halfline };

  struct PLPoint {
    Dyadic t;
    Dyadic value;

    bool operator==(PLPoint const&) const = default;
  };

  // An increasing PL bijection given by its breakpoints. On the unit interval
  // the points run from (0,0) to (1,1). On the half line they start at (0,0)
  // and beyond the last point the map is t -> t + tail().
  template <PLDomain D>
  class PLMap {
   public:
    // The identity.
    PLMap();

    // Validates: increasing, dyadic, slopes powers of two, endpoints fixed.
    // Collinear points are merged. Throws PreconditionError.
    explicit PLMap(std::vector<PLPoint> points);

    static PLMap identity() {
      return PLMap();
    }

    std::vector<PLPoint> const& points() const noexcept {
      return _points;
    }

    // Translation amount past the last point; always 0 on [0,1].
    Dyadic tail() const;

    bool is_identity() const;

    // Throws PreconditionError outside the domain.
    Dyadic    eval(Dyadic const& t) const;
    mpq_class eval(mpq_class const& t) const;
    mpq_class eval_inverse(mpq_class const& t) const;

    // log2 of the slope right of t (left of t for t = 1 on [0,1]).
    long log2_slope_right(mpq_class const& t) const;
    long log2_slope_left(mpq_class const& t) const;

    bool operator==(PLMap const&) const = default;

   private:
    std::vector<PLPoint> _points;
  };

  using DyadicPL   = PLMap<PLDomain::unit>;
  using HalflinePL = PLMap<PLDomain::halfline>;

  // f then g.
  template <PLDomain D>
  PLMap<D> pl_compose(PLMap<D> const& f, PLMap<D> const& g);
  template <PLDomain D>
  PLMap<D> pl_inverse(PLMap<D> const& f);
  template <PLDomain D>
  PLMap<D> pl_commutator(PLMap<D> const& f, PLMap<D> const& g);
  // f^g = g^-1 f g
  template <PLDomain D>
  PLMap<D> pl_conj(PLMap<D> const& f, PLMap<D> const& g);
  template <PLDomain D>
  PLMap<D> pl_pow(PLMap<D> const& f, long n);

  inline Dyadic pl_eval(DyadicPL const& f, Dyadic const& t) {
    return f.eval(t);
  }

  // An open interval (lo, hi); hi empty means +inf.
  struct OpenInterval {
    mpq_class                lo;
    std::optional<mpq_class> hi;

    bool operator==(OpenInterval const&) const = default;
  };

  // Maximal open intervals where f(t) != t, left to right. Endpoints are
  // exact rationals: fixed points inside a segment need not be dyadic.
  template <PLDomain D>
  std::vector<OpenInterval> support(PLMap<D> const& f);

  std::string format_interval(OpenInterval const& i);

  DyadicPL pl_from_nf(NormalForm const& f);

  // Conjugate by [1 - 2^-n, 1 - 2^-n-1] -> [n, n+1].
  HalflinePL to_halfline(DyadicPL const& f);
  // f rescaled into [k, k+1], identity elsewhere.
  HalflinePL phi_k_embed(DyadicPL const& f, long k);
  // t -> 2t on [0,1], t -> t + 1 beyond.
  HalflinePL x0_halfline();

  // "0:0;1/2^1:1/2^2;...;1:1"; half line maps append ";tail:+c".
  template <PLDomain D>
  std::string format_pl(PLMap<D> const& f);
  DyadicPL    parse_pl(std::string_view text);
  HalflinePL  parse_halfline_pl(std::string_view text);

  // "t,value" rows at every breakpoint and at multiples of 1/samples.
  std::string pl_csv(DyadicPL const& f, std::size_t samples = 64);

  struct WitnessBounds {
    std::size_t max_word_len = 8;
    std::size_t check_depth  = 4;
  };

  // Words over f, f^-1, g, g^-1 are lists of 0..3 in that order.
  using PLWord = std::vector<int>;

  std::string format_pl_word(PLWord const& w);

  template <PLDomain D>
  struct WitnessCertificate {
    PLMap<D>    h0;       // [f, g]
    PLMap<D>    w;
    PLWord      word;
    mpq_class   c0;
    mpq_class   d0;
    std::size_t depth;
    std::size_t pairs_checked;
    std::size_t candidates_rejected;  // words with c0 w > d0 failing the check
  };

  struct CommutingInput {};
  struct WitnessNotFound {
    std::size_t words_tried;
  };

  template <PLDomain D>
  using WitnessResult = std::variant<WitnessCertificate<D>, WitnessNotFound, CommutingInput>;

  template <PLDomain D>
  WitnessResult<D> wreath_witness(PLMap<D> const& f, PLMap<D> const& g, WitnessBounds bounds = {});

}  // namespace diagrams

#endif  // DIAGRAMS_PL_HPP_
