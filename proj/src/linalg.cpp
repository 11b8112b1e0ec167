#include "fqpts/linalg.hpp"

#include <utility>

namespace fqpts {

std::size_t matrix_rank(const Field& field, Matrix rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const FieldElement inv = field.inv(rows[rank][col]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col].is_zero()) continue;
      const FieldElement factor = field.mul(rows[i][col], inv);
      for (std::size_t j = col; j < ncols; ++j) {
        rows[i][j] = field.sub(rows[i][j], field.mul(factor, rows[rank][j]));
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace fqpts
