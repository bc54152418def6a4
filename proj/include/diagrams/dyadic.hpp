// Exact dyadic rationals num / 2^exp.

#ifndef DIAGRAMS_DYADIC_HPP_
#define DIAGRAMS_DYADIC_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace diagrams {

  class Dyadic {
   public:
    Dyadic() : _num(0), _exp(0) {}
    Dyadic(long n) : _num(n), _exp(0) {}  // NOLINT implicit on purpose
    Dyadic(mpz_class num, std::uint64_t exp);

    // Throws PreconditionError if q is not dyadic.
    static Dyadic from_rational(mpq_class const& q);
    static std::optional<Dyadic> try_from_rational(mpq_class const& q);

    // 2^k for any integer k.
    static Dyadic power_of_two(long k);

    mpz_class const& numerator() const noexcept {
      return _num;
    }

    // The value is numerator() / 2^exponent(); normalized so that the
    // numerator is odd unless the exponent is 0.
    std::uint64_t exponent() const noexcept {
      return _exp;
    }

    mpq_class to_rational() const;
    double    to_double() const;

    int sign() const noexcept {
      return sgn(_num);
    }

    Dyadic operator-() const;
    Dyadic& operator+=(Dyadic const& o);
    Dyadic& operator-=(Dyadic const& o);
    Dyadic& operator*=(Dyadic const& o);

    friend Dyadic operator+(Dyadic a, Dyadic const& b) {
      return a += b;
    }
    friend Dyadic operator-(Dyadic a, Dyadic const& b) {
      return a -= b;
    }
    friend Dyadic operator*(Dyadic a, Dyadic const& b) {
      return a *= b;
    }

    // Multiplication by 2^k.
    Dyadic scaled(long k) const;

    bool operator==(Dyadic const& o) const {
      return _exp == o._exp && _num == o._num;
    }
    std::strong_ordering operator<=>(Dyadic const& o) const;

    // "p/2^q", or plain "p" for integers.
    std::string to_string() const;

    // Accepts "p", "p/2^q" and "p/d" with d a power of two.
    static Dyadic parse(std::string_view text);

   private:
    void normalize();

    mpz_class     _num;
    std::uint64_t _exp;
  };

  // exact log2 of a positive power of two (possibly fractional), if it is one
  std::optional<long> log2_exact(mpq_class const& q);

  std::string rational_to_string(mpq_class const& q);

}  // namespace diagrams

#endif  // DIAGRAMS_DYADIC_HPP_
