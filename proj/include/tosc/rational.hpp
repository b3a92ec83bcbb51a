#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace tosc {

/// Exact rational number, always kept in canonical reduced form.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);

  /// Parses `int` or `int/posint`. Throws std::invalid_argument whose message
  /// starts with "malformed rational".
  static Rational parse(std::string_view text);

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  Rational abs() const;
  Rational floor() const;
  Rational ceil() const;
  /// Nearest integer, ties rounded up.
  Rational round_half_up() const;
  /// Integer power; negative exponents invert (throws on 0^-k).
  Rational pow(long exponent) const;

  std::string str() const;
  double approx() const { return q_.get_d(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Rational(mpq_class q);
  mpq_class q_;
};

inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }

/// A rational extended by -inf and +inf. Oscillation profiles live in
/// [0, +inf]; sups and infs over sets may also produce -inf.
class Extended {
 public:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  Extended() = default;
  Extended(Rational value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  Extended(long value) : value_(value) {}                 // NOLINT(google-explicit-constructor)

  static Extended pos_inf() { return Extended(Kind::PosInf); }
  static Extended neg_inf() { return Extended(Kind::NegInf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  /// Throws std::domain_error when infinite.
  const Rational& finite() const;

  std::string str() const;

  Extended operator-() const;
  /// Throws std::domain_error on inf + (-inf).
  friend Extended operator+(const Extended& a, const Extended& b);
  friend Extended operator-(const Extended& a, const Extended& b) { return a + (-b); }
  /// Scaling by a rational; zero times an infinity is zero.
  friend Extended operator*(const Rational& q, const Extended& a);

  friend bool operator==(const Extended& a, const Extended& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const Extended& a, const Extended& b);

 private:
  explicit Extended(Kind k) : kind_(k) {}
  Kind kind_ = Kind::Finite;
  Rational value_;
};

inline Extended max(const Extended& a, const Extended& b) { return a < b ? b : a; }
inline Extended min(const Extended& a, const Extended& b) { return b < a ? b : a; }
Extended abs(const Extended& a);

}  // namespace tosc
