#pragma once

#include <compare>
#include <string>

#include "growth/integer.hpp"

namespace growth {

/// Sign of a + b*sqrt(d), d >= 0, computed exactly.
int sign_of(const Integer& a, const Integer& b, const Integer& d);

/// Exact real number (p + q*sqrt(D))/2.
///
/// Normalized on construction: square factors of D (over primes below 10^6)
/// move into q, a perfect-square D folds into p, and q = 0 forces D = 0.
/// Comparisons are exact for any pair of values, whatever their radicands.
class QuadraticValue {
 public:
  QuadraticValue() = default;
  QuadraticValue(Integer p, Integer q, Integer radicand);

  static QuadraticValue integer(const Integer& n) { return {n * 2, 0, 0}; }

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  const Integer& radicand() const { return d_; }
  bool is_rational() const { return q_.is_zero(); }

  long double to_long_double() const;

  /// "(3+sqrt(5))/2", "2+sqrt(3)", "1".
  std::string to_string() const;

  friend bool operator==(const QuadraticValue& a, const QuadraticValue& b) { return compare(a, b) == 0; }
  friend std::strong_ordering operator<=>(const QuadraticValue& a, const QuadraticValue& b) {
    const int c = compare(a, b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// sign(a - b).
  static int compare(const QuadraticValue& a, const QuadraticValue& b);

 private:
  Integer p_;
  Integer q_;
  Integer d_;
};

}  // namespace growth
