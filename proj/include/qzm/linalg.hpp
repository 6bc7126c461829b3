#pragma once

// Sparse exact linear algebra over Scalar.

#include <cstdint>
#include <utility>
#include <vector>

#include "qzm/scalar.hpp"

namespace qzm {

/// Sorted (index, nonzero value) pairs.
using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>;

SparseVec unit_vec(std::uint32_t k, const FieldSpec& f);
/// y + a * x
SparseVec axpy(const SparseVec& y, const Scalar& a, const SparseVec& x);
SparseVec scaled(const SparseVec& x, const Scalar& a);
/// Sum_k v[k] * columns[k].
SparseVec combine(const std::vector<SparseVec>& columns, const SparseVec& v);
/// Apply an index map to a vector (entries with equal targets are summed).
SparseVec remap(const SparseVec& x, const std::vector<std::uint32_t>& index_map);
Scalar entry(const SparseVec& x, std::uint32_t k);

/// Accumulates sparse rows by hashing index -> value; emits a sorted SparseVec.
class SparseAccumulator {
 public:
  void add(std::uint32_t k, const Scalar& v);
  void add(const SparseVec& x, const Scalar& a);
  SparseVec take();

 private:
  std::vector<std::pair<std::uint32_t, Scalar>> raw_;
};

/// Result of reducing a set of rows over `columns` variables, where variable
/// index order is the pivot priority (lower index eliminated first).
struct Echelon {
  std::uint32_t columns = 0;
  std::vector<bool> is_pivot;
  /// Pivot variables expressed in free variables, -(rest of the reduced row).
  /// Entries for free variables are left empty; they map to themselves.
  std::vector<SparseVec> normal_form;
  std::vector<std::uint32_t> free_vars;   // ascending
  std::size_t rank = 0;
};

/// Gaussian elimination processing columns in ascending index order; for each
/// column the sparsest row (ties: lowest row number) becomes the pivot. The
/// result is fully reduced (pivot rows contain only free variables).
Echelon eliminate(std::vector<SparseVec> rows, std::uint32_t columns);

}  // namespace qzm
