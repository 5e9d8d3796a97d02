#include "freeact/matrix.hpp"

#include <sstream>

namespace freeact {

UMatrix UMatrix::identity(unsigned dim) {
  UMatrix m(dim);
  for (unsigned i = 0; i < dim; ++i) m.at(i, i) = Cyclo::one();
  return m;
}

UMatrix UMatrix::scalar(unsigned dim, const Cyclo& c) {
  UMatrix m(dim);
  for (unsigned i = 0; i < dim; ++i) m.at(i, i) = c;
  return m;
}

UMatrix UMatrix::diagonal(const std::vector<Cyclo>& d) {
  UMatrix m(static_cast<unsigned>(d.size()));
  for (unsigned i = 0; i < m.dim_; ++i) m.at(i, i) = d[i];
  return m;
}

UMatrix UMatrix::permutation(const std::vector<unsigned>& sigma) {
  UMatrix m(static_cast<unsigned>(sigma.size()));
  for (unsigned j = 0; j < m.dim_; ++j) m.at(sigma[j], j) = Cyclo::one();
  return m;
}

UMatrix UMatrix::operator*(const UMatrix& o) const {
  if (dim_ != o.dim_) throw InternalError("matrix dimension mismatch");
  UMatrix r(dim_);
  for (unsigned i = 0; i < dim_; ++i)
    for (unsigned k = 0; k < dim_; ++k) {
      const Cyclo& x = at(i, k);
      if (x.is_zero()) continue;
      for (unsigned j = 0; j < dim_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += x * o.at(k, j);
      }
    }
  return r;
}

UMatrix UMatrix::operator+(const UMatrix& o) const {
  if (dim_ != o.dim_) throw InternalError("matrix dimension mismatch");
  UMatrix r(dim_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

UMatrix UMatrix::operator-(const UMatrix& o) const {
  if (dim_ != o.dim_) throw InternalError("matrix dimension mismatch");
  UMatrix r(dim_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

UMatrix UMatrix::scaled(const Cyclo& c) const {
  UMatrix r(dim_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

UMatrix UMatrix::conj_transpose() const {
  UMatrix r(dim_);
  for (unsigned i = 0; i < dim_; ++i)
    for (unsigned j = 0; j < dim_; ++j) r.at(j, i) = at(i, j).conj();
  return r;
}

UMatrix UMatrix::pow(long e) const {
  if (e < 0) return unitary_inverse().pow(-e);
  UMatrix acc = identity(dim_);
  for (long i = 0; i < e; ++i) acc = acc * (*this);
  return acc;
}

Cyclo UMatrix::det() const {
  // Cofactor expansion; dimensions here are 3 or 4.
  if (dim_ == 1) return at(0, 0);
  if (dim_ == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
  Cyclo sum;
  for (unsigned j = 0; j < dim_; ++j) {
    if (at(0, j).is_zero()) continue;
    UMatrix minor(dim_ - 1);
    for (unsigned r = 1; r < dim_; ++r) {
      unsigned cc = 0;
      for (unsigned c = 0; c < dim_; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = at(r, c);
      }
    }
    Cyclo term = at(0, j) * minor.det();
    if (j % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

Cyclo UMatrix::trace() const {
  Cyclo t;
  for (unsigned i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

bool UMatrix::operator==(const UMatrix& o) const {
  if (dim_ != o.dim_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

bool UMatrix::is_identity() const { return *this == identity(dim_); }

bool UMatrix::is_unitary() const { return ((*this) * conj_transpose()).is_identity(); }

UMatrix UMatrix::unitary_inverse() const {
  UMatrix inv = conj_transpose();
  if (!((*this) * inv).is_identity()) throw InternalError("unitary_inverse on a non-unitary matrix");
  return inv;
}

std::vector<Cyclo> UMatrix::apply(const std::vector<Cyclo>& v) const {
  if (v.size() != dim_) throw InternalError("vector dimension mismatch");
  std::vector<Cyclo> r(dim_);
  for (unsigned i = 0; i < dim_; ++i)
    for (unsigned j = 0; j < dim_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

std::string UMatrix::canonical_key(unsigned ambient_order) const {
  std::ostringstream out;
  out << dim_ << '|';
  for (const auto& c : a_) out << c.canonical_key(ambient_order) << ';';
  return out.str();
}

std::vector<std::vector<std::complex<double>>> UMatrix::embed() const {
  std::vector<std::vector<std::complex<double>>> m(dim_, std::vector<std::complex<double>>(dim_));
  for (unsigned i = 0; i < dim_; ++i)
    for (unsigned j = 0; j < dim_; ++j) m[i][j] = at(i, j).embed();
  return m;
}

std::string UMatrix::to_string() const {
  std::ostringstream out;
  for (unsigned i = 0; i < dim_; ++i) {
    out << '[';
    for (unsigned j = 0; j < dim_; ++j) {
      out << at(i, j).to_string();
      if (j + 1 < dim_) out << ", ";
    }
    out << "]";
    if (i + 1 < dim_) out << ' ';
  }
  return out.str();
}

std::vector<std::vector<Cyclo>> kernel_basis(const UMatrix& m) {
  const unsigned n = m.dim();
  // Row-reduce a working copy.
  std::vector<std::vector<Cyclo>> rows(n, std::vector<Cyclo>(n));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) rows[i][j] = m.at(i, j);

  std::vector<int> pivot_of_col(n, -1);
  unsigned rank = 0;
  for (unsigned col = 0; col < n && rank < n; ++col) {
    unsigned sel = rank;
    while (sel < n && rows[sel][col].is_zero()) ++sel;
    if (sel == n) continue;
    std::swap(rows[sel], rows[rank]);
    Cyclo inv = rows[rank][col].inv();
    for (unsigned j = 0; j < n; ++j) rows[rank][j] *= inv;
    for (unsigned r = 0; r < n; ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      Cyclo f = rows[r][col];
      for (unsigned j = 0; j < n; ++j) rows[r][j] -= f * rows[rank][j];
    }
    pivot_of_col[col] = static_cast<int>(rank);
    ++rank;
  }

  std::vector<std::vector<Cyclo>> basis;
  for (unsigned col = 0; col < n; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    std::vector<Cyclo> v(n);
    v[col] = Cyclo::one();
    for (unsigned c = 0; c < n; ++c) {
      if (pivot_of_col[c] < 0) continue;
      v[c] = -rows[static_cast<unsigned>(pivot_of_col[c])][col];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Cyclo>> fixed_space_basis(const UMatrix& m) {
  return kernel_basis(m - UMatrix::identity(m.dim()));
}

}  // namespace freeact
