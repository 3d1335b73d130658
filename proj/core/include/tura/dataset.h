#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tura {

// Dense row-major design matrix with integer class labels in [0, classes).
struct Dataset {
  std::size_t rows = 0;
  std::size_t cols = 0;
  int classes = 3;
  std::vector<double> x;
  std::vector<int> y;

  double at(std::size_t r, std::size_t c) const { return x[r * cols + c]; }
  std::span<const double> row(std::size_t r) const {
    return {x.data() + r * cols, cols};
  }
  void add_row(std::span<const double> values, int label) {
    x.insert(x.end(), values.begin(), values.end());
    y.push_back(label);
    ++rows;
  }
};

}  // namespace tura
