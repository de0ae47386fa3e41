#include "growth/quadratic.hpp"

#include <cmath>
#include <stdexcept>

namespace growth {

int sign_of(const Integer& a, const Integer& b, const Integer& d) {
  if (d.sign() < 0) throw std::domain_error("negative radicand");
  const int sa = a.sign();
  const int sb = d.is_zero() ? 0 : b.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger magnitude wins.
  const Integer a2 = a * a;
  const Integer b2d = b * b * d;
  if (a2 > b2d) return sa;
  if (a2 < b2d) return sb;
  return 0;
}

namespace {

// sign(a + b*sqrt(d1) + c*sqrt(d2))
int sign_of3(const Integer& a, const Integer& b, const Integer& d1, const Integer& c, const Integer& d2) {
  const int su = sign_of(a, b, d1);
  const int sv = d2.is_zero() ? 0 : c.sign();
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  // |u|^2 - |v|^2 = a^2 + b^2 d1 - c^2 d2 + 2ab sqrt(d1)
  const int sd = sign_of(a * a + b * b * d1 - c * c * d2, a * b * 2, d1);
  if (sd > 0) return su;
  if (sd < 0) return sv;
  return 0;
}

}  // namespace

QuadraticValue::QuadraticValue(Integer p, Integer q, Integer radicand)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(radicand)) {
  if (d_.sign() < 0) throw std::domain_error("negative radicand");
  if (q_.is_zero() || d_.is_zero()) {
    q_ = 0;
    d_ = 0;
    return;
  }
  // Pull out square factors of small primes.
  if (d_.fits_int64()) {
    std::int64_t rem = d_.to_int64();
    Integer scale = 1;
    for (std::int64_t f = 2; f < 1000000 && f * f <= rem; ++f) {
      while (rem % (f * f) == 0) {
        rem /= f * f;
        scale *= f;
      }
    }
    q_ *= scale;
    d_ = rem;
  }
  const Integer root = isqrt(d_);
  if (root * root == d_) {
    p_ += q_ * root;
    q_ = 0;
    d_ = 0;
  }
}

long double QuadraticValue::to_long_double() const {
  return (p_.to_long_double() + q_.to_long_double() * std::sqrt(d_.to_long_double())) / 2.0L;
}

std::string QuadraticValue::to_string() const {
  const bool halves = p_.is_odd() || q_.is_odd();
  if (q_.is_zero()) {
    if (!p_.is_odd()) return Integer::from_big(p_.to_big() / 2).to_string();
    return p_.to_string() + "/2";
  }
  // Integer-part and surd coefficient, halved when both are even.
  const Integer a = halves ? p_ : Integer::from_big(p_.to_big() / 2);
  const Integer b = halves ? q_ : Integer::from_big(q_.to_big() / 2);
  std::string surd = "sqrt(" + d_.to_string() + ")";
  const Integer mag = abs(b);
  if (mag != Integer(1)) surd = mag.to_string() + "*" + surd;
  std::string body;
  if (a.is_zero()) {
    body = (b.sign() < 0 ? "-" : "") + surd;
  } else {
    body = a.to_string() + (b.sign() < 0 ? "-" : "+") + surd;
  }
  return halves ? "(" + body + ")/2" : body;
}

int QuadraticValue::compare(const QuadraticValue& a, const QuadraticValue& b) {
  // 2a - 2b = (pa - pb) + qa sqrt(Da) - qb sqrt(Db)
  if (a.d_ == b.d_) return sign_of(a.p_ - b.p_, a.q_ - b.q_, a.d_);
  return sign_of3(a.p_ - b.p_, a.q_, a.d_, -b.q_, b.d_);
}

}  // namespace growth
