#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "frobq/field.hpp"

namespace frobq::detail {

using Row = std::vector<std::uint32_t>;

/// Basis of {c : sum_i c_i * rows[i] = 0}, each vector of length rows.size().
inline std::vector<Row> left_kernel(const std::vector<Row>& rows,
                                    std::size_t ncols, const PrimeField& k) {
  const std::size_t m = rows.size();
  std::vector<Row> work(m, Row(ncols + m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t c = 0; c < ncols; ++c) work[i][c] = rows[i][c];
    work[i][ncols + i] = 1;
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < m; ++c) {
    std::size_t pivot = rank;
    while (pivot < m && work[pivot][c] == 0) ++pivot;
    if (pivot == m) continue;
    std::swap(work[pivot], work[rank]);
    const std::uint32_t inv = k.inv(work[rank][c]);
    for (auto& v : work[rank]) v = k.mul(v, inv);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == rank || work[i][c] == 0) continue;
      const std::uint32_t factor = work[i][c];
      for (std::size_t t = c; t < ncols + m; ++t) {
        work[i][t] = k.sub(work[i][t], k.mul(factor, work[rank][t]));
      }
    }
    ++rank;
  }
  std::vector<Row> kernel;
  for (std::size_t i = rank; i < m; ++i) {
    kernel.emplace_back(work[i].begin() + ncols, work[i].end());
  }
  return kernel;
}

}  // namespace frobq::detail
