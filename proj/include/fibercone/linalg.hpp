#pragma once

#include <cstdint>
#include <vector>

#include "fibercone/prime_field.hpp"

namespace fibercone {

// Column-major sparse matrix over F_p. Each column is a sorted list of
// (row, value) entries with nonzero values.
struct SparseEntry {
  uint32_t row;
  uint32_t val;
};

class SparseMatFp {
 public:
  SparseMatFp(const PrimeField& F, uint32_t rows, uint32_t cols)
      : F_(&F), rows_(rows), cols_(cols), data_(cols) {}

  uint32_t rows() const { return rows_; }
  uint32_t cols() const { return cols_; }
  const PrimeField& field() const { return *F_; }

  // Entries may arrive unsorted/duplicated; normalize() fixes that.
  void add_entry(uint32_t r, uint32_t c, uint32_t v);
  void set_col(uint32_t c, std::vector<SparseEntry> col);
  const std::vector<SparseEntry>& col(uint32_t c) const { return data_[c]; }
  void normalize();

  size_t nnz() const;
  bool is_zero() const;

 private:
  const PrimeField* F_;
  uint32_t rows_, cols_;
  std::vector<std::vector<SparseEntry>> data_;
};

// Rank by sparse Gaussian elimination (Markowitz-lite: pivot on the column
// with fewest nonzeros). Consumes a copy of the matrix internally.
uint32_t sparse_rank(const SparseMatFp& M);

// Kernel of M as explicit column vectors in reduced form: vecs[j] is a dense
// length-cols vector, and pivot[j] marks a coordinate where vecs[j] is 1 and
// all other kernel vectors are 0.
struct KernelBasis {
  uint32_t ambient = 0;  // = cols of M
  std::vector<std::vector<uint32_t>> vecs;
  std::vector<uint32_t> pivot;
};
KernelBasis sparse_kernel(const SparseMatFp& M);

// C = A * B (sizes must agree).
SparseMatFp sparse_mul(const SparseMatFp& A, const SparseMatFp& B);

// Dense rank over F_p; slow reference used to cross-check the sparse path.
uint32_t dense_rank(const PrimeField& F,
                    std::vector<std::vector<uint32_t>> rows);

}  // namespace fibercone
