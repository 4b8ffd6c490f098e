#ifndef UEA_LINALG_HPP
#define UEA_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "uea/fp.hpp"

namespace uea {

/// Dense matrix over F_p, row-major. Sized for the coefficient spaces this
/// project meets (a few thousand rows/columns at most), so no sparsity tricks.
class FpMat {
public:
  FpMat(const Fp& f, size_t rows, size_t cols)
      : f_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const Fp& field() const { return f_; }

  uint32_t& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  uint32_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  /// In-place reduction to reduced row echelon form; returns pivot columns in
  /// order. Fully deterministic: pivots are chosen top-down, left-to-right.
  /// Entries are reduced mod p first, so callers may store raw residues.
  std::vector<size_t> rref();

  size_t rank() const {
    FpMat m = *this;
    return m.rref().size();
  }

private:
  Fp f_;
  size_t rows_, cols_;
  std::vector<uint32_t> a_;
};

/// Basis of the right kernel {v : A v = 0} in the canonical reduced form: one
/// vector per free column (ascending), with value 1 at its free column and the
/// negated pivot-row entries elsewhere. Deterministic for a given A.
std::vector<std::vector<uint32_t>> kernel_basis(const FpMat& A);

/// Row-space membership: true iff v is a linear combination of the rows of A.
bool in_row_space(const FpMat& A, const std::vector<uint32_t>& v);

/// Reduced row echelon basis of the span of the given vectors (zero rows
/// dropped). Two sets span the same subspace iff their echelon bases coincide.
std::vector<std::vector<uint32_t>> echelon_span(const Fp& f,
                                                const std::vector<std::vector<uint32_t>>& vecs,
                                                size_t dim);

} // namespace uea

#endif
