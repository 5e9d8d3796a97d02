#ifndef FREEACT_MATRIX_HPP
#define FREEACT_MATRIX_HPP

#include <complex>
#include <string>
#include <vector>

#include "freeact/cyclo.hpp"

namespace freeact {

// Small dense square matrix over the cyclotomic field. Dimension 3 for the
// unitary representations, 4 for the permutation model of A4.
class UMatrix {
 public:
  UMatrix() : dim_(0) {}
  explicit UMatrix(unsigned dim) : dim_(dim), a_(dim * dim) {}

  static UMatrix identity(unsigned dim);
  static UMatrix scalar(unsigned dim, const Cyclo& c);
  static UMatrix diagonal(const std::vector<Cyclo>& d);
  // Permutation matrix P with P e_j = e_{sigma(j)}, sigma 0-based.
  static UMatrix permutation(const std::vector<unsigned>& sigma);

  unsigned dim() const { return dim_; }
  Cyclo& at(unsigned r, unsigned c) { return a_[r * dim_ + c]; }
  const Cyclo& at(unsigned r, unsigned c) const { return a_[r * dim_ + c]; }

  UMatrix operator*(const UMatrix& o) const;
  UMatrix operator+(const UMatrix& o) const;
  UMatrix operator-(const UMatrix& o) const;
  UMatrix scaled(const Cyclo& c) const;
  UMatrix conj_transpose() const;
  UMatrix pow(long e) const;  // negative exponents use the unitary inverse

  Cyclo det() const;
  Cyclo trace() const;
  bool operator==(const UMatrix& o) const;
  bool operator!=(const UMatrix& o) const { return !(*this == o); }
  bool is_identity() const;
  bool is_unitary() const;  // M * M^dagger == I, exact

  // Inverse of a unitary matrix (conjugate transpose). Throws if not unitary.
  UMatrix unitary_inverse() const;

  // Apply to a column vector.
  std::vector<Cyclo> apply(const std::vector<Cyclo>& v) const;

  std::string canonical_key(unsigned ambient_order) const;
  std::vector<std::vector<std::complex<double>>> embed() const;
  std::string to_string() const;

 private:
  unsigned dim_;
  std::vector<Cyclo> a_;
};

// Exact basis of ker(M) by Gaussian elimination over the field.
std::vector<std::vector<Cyclo>> kernel_basis(const UMatrix& m);

// Basis of the eigenvalue-1 eigenspace, i.e. ker(M - I).
std::vector<std::vector<Cyclo>> fixed_space_basis(const UMatrix& m);

}  // namespace freeact

#endif
