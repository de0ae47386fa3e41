#include "growth/integer.hpp"

#include <functional>
#include <limits>
#include <stdexcept>

namespace growth {

namespace {

const BigInt& int128_max() {
  static const BigInt v = BigInt(std::numeric_limits<__int128>::max());
  return v;
}

const BigInt& int128_min() {
  static const BigInt v = BigInt(std::numeric_limits<__int128>::min());
  return v;
}

void append_varint(std::string& out, unsigned __int128 v) {
  do {
    auto byte = static_cast<unsigned char>(v & 0x7f);
    v >>= 7;
    if (v != 0) byte |= 0x80;
    out.push_back(static_cast<char>(byte));
  } while (v != 0);
}

}  // namespace

Integer Integer::from_int128(__int128 v) {
  Integer r;
  r.small_ = v;
  return r;
}

Integer Integer::from_big(const BigInt& v) {
  if (v >= int128_min() && v <= int128_max()) return from_int128(static_cast<__int128>(v));
  Integer r;
  r.big_ = std::make_shared<const BigInt>(v);
  return r;
}

BigInt Integer::to_big() const { return big_ ? *big_ : BigInt(small_); }

bool Integer::fits_int64() const {
  return !big_ && small_ >= std::numeric_limits<std::int64_t>::min() &&
         small_ <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t Integer::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("integer does not fit in 64 bits");
  return static_cast<std::int64_t>(small_);
}

long double Integer::to_long_double() const {
  if (!big_) return static_cast<long double>(small_);
  return big_->convert_to<long double>();
}

int Integer::sign() const {
  if (big_) return big_->sign();
  return (small_ > 0) - (small_ < 0);
}

bool Integer::is_odd() const {
  if (big_) return bit_test(*big_, 0);
  return (small_ & 1) != 0;
}

Integer Integer::operator-() const {
  if (!big_ && small_ != std::numeric_limits<__int128>::min()) return from_int128(-small_);
  return from_big(-to_big());
}

Integer operator+(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) {
    __int128 r;
    if (!__builtin_add_overflow(a.small_, b.small_, &r)) return Integer::from_int128(r);
  }
  return Integer::from_big(a.to_big() + b.to_big());
}

Integer operator-(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) {
    __int128 r;
    if (!__builtin_sub_overflow(a.small_, b.small_, &r)) return Integer::from_int128(r);
  }
  return Integer::from_big(a.to_big() - b.to_big());
}

Integer operator*(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) {
    __int128 r;
    if (!__builtin_mul_overflow(a.small_, b.small_, &r)) return Integer::from_int128(r);
  }
  return Integer::from_big(a.to_big() * b.to_big());
}

bool operator==(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (static_cast<bool>(a.big_) != static_cast<bool>(b.big_)) return false;
  return *a.big_ == *b.big_;
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  const BigInt x = a.to_big();
  const BigInt y = b.to_big();
  if (x < y) return std::strong_ordering::less;
  if (x > y) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Integer::to_string() const {
  if (big_) return big_->str();
  if (small_ == 0) return "0";
  unsigned __int128 mag = small_ < 0 ? -static_cast<unsigned __int128>(small_)
                                     : static_cast<unsigned __int128>(small_);
  std::string digits;
  while (mag != 0) {
    digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  return small_ < 0 ? "-" + digits : digits;
}

std::size_t Integer::hash() const {
  if (big_) return std::hash<std::string>{}(big_->str());
  const auto u = static_cast<unsigned __int128>(small_);
  const auto lo = static_cast<std::uint64_t>(u);
  const auto hi = static_cast<std::uint64_t>(u >> 64);
  return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
}

void Integer::append_key(std::string& out) const {
  // Tags: 0 zero, 1 positive, 2 negative, 3 big positive, 4 big negative.
  // Big values never fit in 128 bits (normalized), so tags 3/4 cannot alias 1/2.
  if (big_) {
    const std::string digits = (big_->sign() < 0 ? BigInt(-*big_) : *big_).str();
    out.push_back(static_cast<char>(big_->sign() < 0 ? 4 : 3));
    append_varint(out, digits.size());
    out += digits;
    return;
  }
  if (small_ == 0) {
    out.push_back(0);
    return;
  }
  out.push_back(static_cast<char>(small_ > 0 ? 1 : 2));
  append_varint(out, small_ < 0 ? -static_cast<unsigned __int128>(small_)
                                : static_cast<unsigned __int128>(small_));
}

Integer abs(const Integer& v) { return v.sign() < 0 ? -v : v; }

Integer isqrt(const Integer& v) {
  if (v.sign() < 0) throw std::domain_error("isqrt of negative integer");
  return Integer::from_big(boost::multiprecision::sqrt(v.to_big()));
}

}  // namespace growth
