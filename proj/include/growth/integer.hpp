#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace growth {

using BigInt = boost::multiprecision::cpp_int;

// Exact signed integer. Values inside the __int128 range live inline; anything
// larger spills to an immutable shared BigInt. The representation is
// normalized, so two equal values always have the same storage kind.
class Integer {
 public:
  Integer() = default;
  Integer(std::int64_t v) : small_(v) {}  // NOLINT(google-explicit-constructor)
  static Integer from_int128(__int128 v);
  static Integer from_big(const BigInt& v);

  bool fits_int128() const { return big_ == nullptr; }
  __int128 as_int128() const { return small_; }  // only valid when fits_int128()
  BigInt to_big() const;
  bool fits_int64() const;
  std::int64_t to_int64() const;  // throws std::overflow_error when out of range
  long double to_long_double() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  bool is_odd() const;

  Integer operator-() const;
  Integer& operator+=(const Integer& o) { return *this = *this + o; }
  Integer& operator-=(const Integer& o) { return *this = *this - o; }
  Integer& operator*=(const Integer& o) { return *this = *this * o; }

  friend Integer operator+(const Integer& a, const Integer& b);
  friend Integer operator-(const Integer& a, const Integer& b);
  friend Integer operator*(const Integer& a, const Integer& b);
  friend bool operator==(const Integer& a, const Integer& b);
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b);

  std::string to_string() const;
  std::size_t hash() const;

  // Appends an injective, self-delimiting byte encoding.
  void append_key(std::string& out) const;

 private:
  __int128 small_ = 0;
  std::shared_ptr<const BigInt> big_;
};

Integer abs(const Integer& v);

// Integer square root floor(sqrt(v)) for v >= 0.
Integer isqrt(const Integer& v);

}  // namespace growth
