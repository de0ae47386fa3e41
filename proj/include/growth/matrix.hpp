#pragma once

#include <cstdint>
#include <string>

namespace growth {

// Integer 2x2 matrix, row-major [[a, b], [c, d]].
struct MatrixZ2 {
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 1;

  __int128 det() const { return static_cast<__int128>(a) * d - static_cast<__int128>(b) * c; }
  __int128 trace() const { return static_cast<__int128>(a) + d; }

  friend bool operator==(const MatrixZ2&, const MatrixZ2&) = default;

  std::string to_string() const;
};

}  // namespace growth
