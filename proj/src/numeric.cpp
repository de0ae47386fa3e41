#include "growth/numeric.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace growth {

double kth_root(std::uint64_t gamma, int k) {
  return static_cast<double>(std::exp(std::log(static_cast<long double>(gamma)) / k));
}

std::string format12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double round12(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(format12(v).c_str(), nullptr);
}

}  // namespace growth
