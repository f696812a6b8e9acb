#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ridematch {

/// Dense square cost matrix, row-major.
class CostMatrix {
 public:
  CostMatrix() = default;
  CostMatrix(std::size_t n, std::int64_t fill) : n_(n), cells_(n * n, fill) {}

  std::size_t size() const { return n_; }
  std::int64_t& operator()(std::size_t row, std::size_t col) {
    return cells_[row * n_ + col];
  }
  std::int64_t operator()(std::size_t row, std::size_t col) const {
    return cells_[row * n_ + col];
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> cells_;
};

struct LapSolution {
  /// Column assigned to each row.
  std::vector<std::size_t> row_to_col;
  std::int64_t total = 0;
};

/// Minimum-cost perfect assignment on a square matrix (Hungarian method with
/// shortest augmenting paths, O(n^3)). Deterministic for a fixed matrix.
LapSolution solve_lap(const CostMatrix& cost);

}  // namespace ridematch
