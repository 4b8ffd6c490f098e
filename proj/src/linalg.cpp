#include "uea/linalg.hpp"

#include <stdexcept>

namespace uea {

std::vector<size_t> FpMat::rref() {
  for (auto& x : a_) x %= f_.p();
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < cols_ && r < rows_; ++c) {
    size_t pr = r;
    while (pr < rows_ && at(pr, c) == 0) ++pr;
    if (pr == rows_) continue;
    if (pr != r)
      for (size_t j = c; j < cols_; ++j) std::swap(at(r, j), at(pr, j));
    uint32_t inv = f_.inv(at(r, c));
    for (size_t j = c; j < cols_; ++j) at(r, j) = f_.mul(at(r, j), inv);
    for (size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      uint32_t x = at(i, c);
      if (x == 0) continue;
      for (size_t j = c; j < cols_; ++j) at(i, j) = f_.sub(at(i, j), f_.mul(x, at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<uint32_t>> kernel_basis(const FpMat& A) {
  FpMat R = A;
  std::vector<size_t> pivots = R.rref();
  const Fp& f = A.field();
  std::vector<bool> is_pivot(A.cols(), false);
  for (size_t c : pivots) is_pivot[c] = true;

  std::vector<std::vector<uint32_t>> basis;
  for (size_t c = 0; c < A.cols(); ++c) {
    if (is_pivot[c]) continue;
    std::vector<uint32_t> v(A.cols(), 0);
    v[c] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(R.at(i, c));
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_row_space(const FpMat& A, const std::vector<uint32_t>& v) {
  if (v.size() != A.cols()) throw std::invalid_argument("vector length does not match column count");
  FpMat R = A;
  std::vector<size_t> pivots = R.rref();
  const Fp& f = A.field();
  std::vector<uint32_t> w = v;
  for (auto& x : w) x %= f.p();
  for (size_t i = 0; i < pivots.size(); ++i) {
    uint32_t x = w[pivots[i]];
    if (x == 0) continue;
    for (size_t j = 0; j < w.size(); ++j) w[j] = f.sub(w[j], f.mul(x, R.at(i, j)));
  }
  for (uint32_t x : w)
    if (x != 0) return false;
  return true;
}

std::vector<std::vector<uint32_t>> echelon_span(const Fp& f,
                                                const std::vector<std::vector<uint32_t>>& vecs,
                                                size_t dim) {
  FpMat A(f, vecs.size(), dim);
  for (size_t i = 0; i < vecs.size(); ++i) {
    if (vecs[i].size() != dim) throw std::invalid_argument("vector length does not match dimension");
    for (size_t j = 0; j < dim; ++j) A.at(i, j) = vecs[i][j] % f.p();
  }
  size_t r = A.rref().size();
  std::vector<std::vector<uint32_t>> out;
  out.reserve(r);
  for (size_t i = 0; i < r; ++i) {
    std::vector<uint32_t> row(dim);
    for (size_t j = 0; j < dim; ++j) row[j] = A.at(i, j);
    out.push_back(std::move(row));
  }
  return out;
}

} // namespace uea
