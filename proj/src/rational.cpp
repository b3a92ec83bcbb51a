#include "tosc/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tosc {

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!all_digits(den)) throw std::invalid_argument("malformed rational: bad denominator");
  }
  std::string_view digits = num;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) throw std::invalid_argument("malformed rational: bad numerator");

  mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  mpz_class d(1);
  if (!den.empty()) {
    d = mpz_class(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("malformed rational: zero denominator");
  }
  return Rational(mpq_class(n, d));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return Rational(mpq_class(r));
}

Rational Rational::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return Rational(mpq_class(r));
}

Rational Rational::round_half_up() const { return (*this + Rational(1, 2)).floor(); }

Rational Rational::pow(long exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw std::domain_error("zero to a negative power");
    return Rational(1) / pow(-exponent);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

const Rational& Extended::finite() const {
  if (kind_ != Kind::Finite) throw std::domain_error("extended value is infinite");
  return value_;
}

std::string Extended::str() const {
  switch (kind_) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "inf";
    case Kind::Finite: break;
  }
  return value_.str();
}

Extended Extended::operator-() const {
  switch (kind_) {
    case Kind::NegInf: return pos_inf();
    case Kind::PosInf: return neg_inf();
    case Kind::Finite: break;
  }
  return Extended(-value_);
}

Extended operator+(const Extended& a, const Extended& b) {
  using K = Extended::Kind;
  if ((a.kind_ == K::PosInf && b.kind_ == K::NegInf) || (a.kind_ == K::NegInf && b.kind_ == K::PosInf)) {
    throw std::domain_error("inf + -inf is undefined");
  }
  if (a.kind_ != K::Finite) return a;
  if (b.kind_ != K::Finite) return b;
  return Extended(a.value_ + b.value_);
}

Extended operator*(const Rational& q, const Extended& a) {
  if (q.is_zero()) return Extended(0);
  if (a.is_finite()) return Extended(q * a.finite());
  return q.sign() > 0 ? a : -a;
}

std::strong_ordering operator<=>(const Extended& a, const Extended& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (a.kind_ != Extended::Kind::Finite) return std::strong_ordering::equal;
  return a.value_ <=> b.value_;
}

Extended abs(const Extended& a) {
  if (a.is_finite()) return Extended(a.finite().abs());
  return Extended::pos_inf();
}

}  // namespace tosc
