#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "camreid/types.hpp"

namespace camreid {

// Dense distance matrix, row-major. Square (n x n, symmetric, zero diagonal)
// for pairwise use, rectangular for query x gallery scoring. Immutable in
// practice: filled once by the factories below.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), values_(rows * cols, 0.0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double operator()(std::size_t i, std::size_t j) const {
    return values_[i * cols_ + j];
  }
  double& at(std::size_t i, std::size_t j) { return values_[i * cols_ + j]; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

// All-pairs Euclidean distances. Requires a normalized set. Rows are
// computed in parallel blocks; output is bit-identical for any thread count.
DistanceMatrix pairwise_distances(const EmbeddingSet& set);

// Euclidean distances between two sets of equal dimension (rows = a, cols = b).
DistanceMatrix cross_distances(const EmbeddingSet& a, const EmbeddingSet& b);

// Worker count for internal row parallelism: min(CAMREID_THREADS if set,
// hardware concurrency), at least 1.
unsigned worker_threads();

// Runs fn(row) for every row in [0, n), split across worker threads in
// contiguous blocks. fn must only write state owned by its row.
void parallel_rows(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace camreid
