#include "apolar/matrix.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace apolar {

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<Fp>>& rows) {
  if (rows.empty()) return {};
  DenseMatrix m(0, rows.front().size());
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void DenseMatrix::append_row(std::span<const Fp> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw std::invalid_argument("row width mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

void DenseMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j)
    std::swap(at(a, j), at(b, j));
}

std::vector<std::size_t> rref(DenseMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m.at(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    Fp inv = m.at(r, c).inv();
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Fp f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(DenseMatrix m) { return rref(m).size(); }

std::vector<std::vector<Fp>> kernel_basis(DenseMatrix m) {
  std::size_t n = m.cols();
  auto pivots = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Fp>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Fp> v(n);
    v[f] = fp(1);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -m.at(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Fp> apply(const DenseMatrix& m, std::span<const Fp> v) {
  assert(v.size() == m.cols());
  std::vector<Fp> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Fp s;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m.at(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

bool in_row_space(const DenseMatrix& rref_m,
                  const std::vector<std::size_t>& pivots, std::vector<Fp> v) {
  assert(v.size() == rref_m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    Fp f = v[pivots[i]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < rref_m.cols(); ++j)
      v[j] -= f * rref_m.at(i, j);
  }
  for (Fp x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace apolar
