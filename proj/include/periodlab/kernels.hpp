#pragma once

// Data-parallel kernels. Each OpenMP kernel has a serial reference that
// computes the same result by a plainer route; tests compare the two and
// bench/ times them.

#include <cstddef>
#include <vector>

#include "periodlab/graph.hpp"
#include "periodlab/numeric.hpp"

namespace periodlab {

// Dense square matrix of big integers, row-major.
class BigMatrix {
 public:
  BigMatrix() = default;
  explicit BigMatrix(std::size_t n) : n_(n), data_(n * n) {}

  static BigMatrix identity(std::size_t n);
  static BigMatrix adjacency(const DirectedMultigraph& g);

  std::size_t size() const { return n_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
  BigInt trace() const;

  friend bool operator==(const BigMatrix&, const BigMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> data_;
};

// Row-parallel product.
BigMatrix multiply(const BigMatrix& a, const BigMatrix& b);
BigMatrix multiply_serial(const BigMatrix& a, const BigMatrix& b);

BigMatrix matrix_power(const BigMatrix& a, u64 n);

// p_1..p_N (element k-1 is tr(A^k)). Contracts chains of vertices with in-
// and out-degree one into delayed edges and propagates walk counts between
// branch vertices, one branch vertex per task.
std::vector<BigInt> trace_sequence(const DirectedMultigraph& g, u64 max_n);

// Reference: tr(A^k) from successive dense products.
std::vector<BigInt> trace_sequence_serial(const DirectedMultigraph& g, u64 max_n);

// Serial reference for enumerate_closed_paths (which parallelizes over the
// starting vertex).
ClosedPathTable enumerate_closed_paths_serial(const DirectedMultigraph& g, u64 max_length,
                                              std::size_t path_limit = 2'000'000);

}  // namespace periodlab
