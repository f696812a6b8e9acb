#include "ridematch/hungarian.hpp"

#include <limits>

namespace ridematch {

LapSolution solve_lap(const CostMatrix& cost) {
  const std::size_t n = cost.size();
  LapSolution out;
  out.row_to_col.assign(n, 0);
  if (n == 0) return out;

  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  // 1-based: row/column 0 is the virtual start of each augmenting path.
  std::vector<std::int64_t> row_pot(n + 1, 0), col_pot(n + 1, 0);
  std::vector<std::size_t> col_owner(n + 1, 0), way(n + 1, 0);

  for (std::size_t row = 1; row <= n; ++row) {
    col_owner[0] = row;
    std::size_t col0 = 0;
    std::vector<std::int64_t> min_slack(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[col0] = true;
      const std::size_t r = col_owner[col0];
      std::int64_t delta = kInf;
      std::size_t col1 = 0;
      for (std::size_t c = 1; c <= n; ++c) {
        if (used[c]) continue;
        std::int64_t reduced = cost(r - 1, c - 1) - row_pot[r] - col_pot[c];
        if (reduced < min_slack[c]) {
          min_slack[c] = reduced;
          way[c] = col0;
        }
        if (min_slack[c] < delta) {
          delta = min_slack[c];
          col1 = c;
        }
      }
      for (std::size_t c = 0; c <= n; ++c) {
        if (used[c]) {
          row_pot[col_owner[c]] += delta;
          col_pot[c] -= delta;
        } else {
          min_slack[c] -= delta;
        }
      }
      col0 = col1;
    } while (col_owner[col0] != 0);
    do {
      const std::size_t prev = way[col0];
      col_owner[col0] = col_owner[prev];
      col0 = prev;
    } while (col0 != 0);
  }

  for (std::size_t c = 1; c <= n; ++c) {
    out.row_to_col[col_owner[c] - 1] = c - 1;
  }
  for (std::size_t r = 0; r < n; ++r) out.total += cost(r, out.row_to_col[r]);
  return out;
}

}  // namespace ridematch
