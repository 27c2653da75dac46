#include "groupwalk/linalg.hpp"

#include <utility>

namespace groupwalk {

int rational_rank(int rows, int cols, std::vector<Rational> m) {
  auto at = [&](int i, int j) -> Rational& {
    return m[static_cast<std::size_t>(i) * cols + j];
  };
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i) {
      if (!at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int j = col; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    }
    for (int i = rank + 1; i < rows; ++i) {
      if (at(i, col).is_zero()) continue;
      const Rational f = at(i, col) / at(rank, col);
      at(i, col) = Rational(0);
      for (int j = col + 1; j < cols; ++j) {
        at(i, j) -= f * at(rank, j);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace groupwalk
