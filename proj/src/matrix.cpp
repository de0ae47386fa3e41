#include "growth/matrix.hpp"

namespace growth {

std::string MatrixZ2::to_string() const {
  return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" + std::to_string(c) + "," +
         std::to_string(d) + "]]";
}

}  // namespace growth
