#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace crosskiss {

/// Exact rational scalar. Invariant: lowest terms, denominator > 0.
/// All arithmetic goes through GMP, which preserves canonical form.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: integers embed implicitly
  Rational(long num, long den) { assign(mpz_class(num), mpz_class(den)); }
  Rational(mpz_class num, mpz_class den) { assign(std::move(num), std::move(den)); }
  explicit Rational(const mpz_class& n) : v_(n) {}

  /// Accepts "p/q" or "p"; throws std::invalid_argument on garbage.
  static Rational parse(std::string_view s);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  double to_double() const { return v_.get_d(); }
  std::string str() const { return v_.get_str(); }

  mpz_class floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
  }
  mpz_class ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
  }
  /// Nearest integer, ties toward +infinity (floor(x + 1/2)).
  mpz_class round_nearest() const { return (*this + Rational(1, 2)).floor(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

private:
  void assign(mpz_class num, mpz_class den) {
    if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(std::move(num), std::move(den));
    v_.canonicalize();
  }
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Deterministic total order on (numerator, denominator) pairs.
/// This is the canonical ordering used for reproducible output; it is
/// intentionally not the numeric order.
inline bool canonical_less(const Rational& a, const Rational& b) {
  int c = cmp(a.num(), b.num());
  if (c != 0) return c < 0;
  return cmp(a.den(), b.den()) < 0;
}

inline Rational Rational::parse(std::string_view s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) {
      mpz_class n(std::string(s), 10);
      return Rational(n);
    }
    mpz_class n(std::string(s.substr(0, slash)), 10);
    mpz_class d(std::string(s.substr(slash + 1)), 10);
    return Rational(std::move(n), std::move(d));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("cannot parse rational: '" + std::string(s) + "'");
  }
}

}  // namespace crosskiss
