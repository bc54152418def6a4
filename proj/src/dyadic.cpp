#include "diagrams/dyadic.hpp"

#include <algorithm>
#include <charconv>

#include "diagrams/errors.hpp"

namespace diagrams {

  Dyadic::Dyadic(mpz_class num, std::uint64_t exp) : _num(std::move(num)), _exp(exp) {
    normalize();
  }

  void Dyadic::normalize() {
    if (_num == 0) {
      _exp = 0;
      return;
    }
    auto zeros = mpz_scan1(_num.get_mpz_t(), 0);
    auto drop  = std::min<std::uint64_t>(zeros, _exp);
    if (drop > 0) {
      mpz_tdiv_q_2exp(_num.get_mpz_t(), _num.get_mpz_t(), drop);
      _exp -= drop;
    }
  }

  std::optional<Dyadic> Dyadic::try_from_rational(mpq_class const& q) {
    mpz_class den = q.get_den();
    auto      k   = mpz_scan1(den.get_mpz_t(), 0);
    mpz_class pow;
    mpz_ui_pow_ui(pow.get_mpz_t(), 2, k);
    if (pow != den) {
      return std::nullopt;
    }
    return Dyadic(q.get_num(), k);
  }

  Dyadic Dyadic::from_rational(mpq_class const& q) {
    auto d = try_from_rational(q);
    if (!d) {
      throw PreconditionError("not a dyadic rational: " + q.get_str());
    }
    return *d;
  }

  Dyadic Dyadic::power_of_two(long k) {
    if (k >= 0) {
      mpz_class n;
      mpz_ui_pow_ui(n.get_mpz_t(), 2, static_cast<unsigned long>(k));
      return Dyadic(n, 0);
    }
    return Dyadic(mpz_class(1), static_cast<std::uint64_t>(-k));
  }

  mpq_class Dyadic::to_rational() const {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, _exp);
    mpq_class q(_num, den);
    q.canonicalize();
    return q;
  }

  double Dyadic::to_double() const {
    return to_rational().get_d();
  }

  Dyadic Dyadic::operator-() const {
    return Dyadic(-_num, _exp);
  }

  Dyadic& Dyadic::operator+=(Dyadic const& o) {
    if (_exp >= o._exp) {
      mpz_class t;
      mpz_mul_2exp(t.get_mpz_t(), o._num.get_mpz_t(), _exp - o._exp);
      _num += t;
    } else {
      mpz_mul_2exp(_num.get_mpz_t(), _num.get_mpz_t(), o._exp - _exp);
      _num += o._num;
      _exp = o._exp;
    }
    normalize();
    return *this;
  }

  Dyadic& Dyadic::operator-=(Dyadic const& o) {
    return *this += -o;
  }

  Dyadic& Dyadic::operator*=(Dyadic const& o) {
    _num *= o._num;
    _exp += o._exp;
    normalize();
    return *this;
  }

  Dyadic Dyadic::scaled(long k) const {
    if (k >= 0) {
      auto      uk = static_cast<std::uint64_t>(k);
      if (uk <= _exp) {
        return Dyadic(_num, _exp - uk);
      }
      mpz_class n;
      mpz_mul_2exp(n.get_mpz_t(), _num.get_mpz_t(), uk - _exp);
      return Dyadic(n, 0);
    }
    return Dyadic(_num, _exp + static_cast<std::uint64_t>(-k));
  }

  std::strong_ordering Dyadic::operator<=>(Dyadic const& o) const {
    auto s = (*this - o).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string Dyadic::to_string() const {
    if (_exp == 0) {
      return _num.get_str();
    }
    return _num.get_str() + "/2^" + std::to_string(_exp);
  }

  Dyadic Dyadic::parse(std::string_view text) {
    auto slash = text.find('/');
    auto num_text = std::string(text.substr(0, slash));
    mpz_class num;
    if (num_text.empty() || num.set_str(num_text[0] == '+' ? num_text.substr(1) : num_text, 10) != 0) {
      throw ParseError("bad dyadic numerator '" + num_text + "'", 0);
    }
    if (slash == std::string_view::npos) {
      return Dyadic(num, 0);
    }
    auto den = text.substr(slash + 1);
    if (den.starts_with("2^")) {
      std::uint64_t e = 0;
      auto rest = den.substr(2);
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), e);
      if (ec != std::errc() || ptr != rest.data() + rest.size()) {
        throw ParseError("bad exponent in '" + std::string(text) + "'", slash + 3);
      }
      return Dyadic(num, e);
    }
    mpz_class d;
    if (d.set_str(std::string(den), 10) != 0 || d <= 0) {
      throw ParseError("bad denominator in '" + std::string(text) + "'", slash + 1);
    }
    mpq_class q(num, d);
    q.canonicalize();
    auto r = try_from_rational(q);
    if (!r) {
      throw ParseError("denominator is not a power of two in '" + std::string(text) + "'",
                       slash + 1);
    }
    return *r;
  }

  std::optional<long> log2_exact(mpq_class const& q) {
    if (sgn(q) <= 0) {
      return std::nullopt;
    }
    mpz_class const& n = q.get_num();
    mpz_class const& d = q.get_den();
    if (mpz_popcount(n.get_mpz_t()) != 1 || mpz_popcount(d.get_mpz_t()) != 1) {
      return std::nullopt;
    }
    return static_cast<long>(mpz_scan1(n.get_mpz_t(), 0))
           - static_cast<long>(mpz_scan1(d.get_mpz_t(), 0));
  }

  std::string rational_to_string(mpq_class const& q) {
    auto d = Dyadic::try_from_rational(q);
    if (d) {
      return d->to_string();
    }
    return q.get_str();
  }

}  // namespace diagrams
