#ifndef SAVKIT_RATIONAL_HPP
#define SAVKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "savkit/errors.hpp"

namespace savkit {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator. All score arithmetic and comparisons in this
/// library go through this type; floating point never decides anything.
class Rational {
 public:
  Rational() : q_(0) {}

  Rational(long long numerator)  // NOLINT: implicit by design
      : q_(make_mpz(numerator)) {}

  Rational(long long numerator, long long denominator) {
    if (denominator == 0) throw ParameterError("rational with zero denominator");
    q_ = mpq_class(make_mpz(numerator), make_mpz(denominator));
    q_.canonicalize();
  }

  Rational(mpz_class numerator, mpz_class denominator) {
    if (denominator == 0) throw ParameterError("rational with zero denominator");
    q_ = mpq_class(std::move(numerator), std::move(denominator));
    q_.canonicalize();
  }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }

  Rational& operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw ParameterError("division by zero rational");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) < 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// "p/q", or just "p" when the denominator is 1.
  std::string str() const {
    std::string s = q_.get_num().get_str();
    if (q_.get_den() != 1) s += "/" + q_.get_den().get_str();
    return s;
  }

  double to_double() const { return q_.get_d(); }

  /// Decimal approximation with the given number of significant digits,
  /// computed by exact integer division (round half away from zero).
  /// Falls back to scientific notation outside a sane fixed-point range.
  std::string decimal(int significant_digits = 6) const {
    if (significant_digits < 1) throw ParameterError("significant_digits < 1");
    const int sig = significant_digits;
    mpz_class a = q_.get_num();
    const bool negative = a < 0;
    if (negative) a = -a;
    const mpz_class& b = q_.get_den();
    if (a == 0) {
      std::string s = "0";
      if (sig > 1) s += "." + std::string(sig - 1, '0');
      return s;
    }

    // Exponent e with b*10^(e-1) <= a < b*10^e, i.e. the value has its
    // leading digit at position 10^(e-1).
    int e = 0;
    if (a >= b) {
      mpz_class t = b;
      while (a >= t) {
        t *= 10;
        ++e;
      }
    } else {
      mpz_class t = a * 10;
      while (t < b) {
        t *= 10;
        --e;
      }
    }

    // First `sig` digits of a/b: round(a*10^(sig-e) / b), half away from zero.
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(
                                             sig - e >= 0 ? sig - e : e - sig));
    mpz_class scaled;
    if (sig - e >= 0) {
      scaled = (2 * a * pow10 + b) / (2 * b);
    } else {
      mpz_class div = b * pow10;
      scaled = (2 * a + div) / (2 * div);
    }
    mpz_class limit;
    mpz_ui_pow_ui(limit.get_mpz_t(), 10, static_cast<unsigned long>(sig));
    if (scaled >= limit) {  // rounding carried into an extra digit
      scaled /= 10;
      ++e;
    }
    std::string digits = scaled.get_str();

    std::string out;
    if (e >= 1 && e <= sig + 3) {
      if (e >= static_cast<int>(digits.size())) {
        out = digits + std::string(e - digits.size(), '0');
      } else {
        out = digits.substr(0, e) + "." + digits.substr(e);
      }
    } else if (e <= 0 && e > -4) {
      out = "0." + std::string(-e, '0') + digits;
    } else {
      out = digits.substr(0, 1);
      if (digits.size() > 1) out += "." + digits.substr(1);
      out += "e" + std::string(e - 1 >= 0 ? "+" : "") + std::to_string(e - 1);
    }
    return negative ? "-" + out : out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  static mpz_class make_mpz(long long v) {
    // mpz_class has no long long constructor on all ABIs; go through
    // the decimal string only when the value does not fit a long.
    if (v >= 0) return mpz_class(static_cast<unsigned long>(v));
    mpz_class r(static_cast<unsigned long>(-(v + 1)));
    r += 1;
    return -r;
  }

  mpq_class q_;
};

}  // namespace savkit

#endif  // SAVKIT_RATIONAL_HPP
