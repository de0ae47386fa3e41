#pragma once

#include <cstdint>
#include <string>

namespace growth {

/// gamma^(1/k) from an exact count, k >= 1.
double kth_root(std::uint64_t gamma, int k);

/// Decimal rendering with 12 significant digits (report convention).
std::string format12(double v);

/// v rounded to 12 significant digits, for JSON emission.
double round12(double v);

}  // namespace growth
