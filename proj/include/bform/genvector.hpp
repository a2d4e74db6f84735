#pragma once

#include <string>
#include <vector>

#include "bform/matrix.hpp"
#include "bform/multivector.hpp"
#include "bform/scalar.hpp"

namespace bform {

/// Element Z = X + xi of V + V*, componentwise exact.
struct GenVector {
  int dim = 0;
  std::vector<Scalar> tan;  // X
  std::vector<Scalar> cot;  // xi

  GenVector() = default;
  explicit GenVector(int n) : dim(n), tan(n), cot(n) {}

  static GenVector from_row(const SMat& m, std::size_t row) {
    GenVector z(static_cast<int>(m.cols() / 2));
    for (int j = 0; j < z.dim; ++j) {
      z.tan[j] = m(row, j);
      z.cot[j] = m(row, j + z.dim);
    }
    return z;
  }

  std::vector<Scalar> coords() const {
    std::vector<Scalar> v(tan);
    v.insert(v.end(), cot.begin(), cot.end());
    return v;
  }

  GenVector conj() const {
    GenVector z(dim);
    for (int j = 0; j < dim; ++j) {
      z.tan[j] = tan[j].conj();
      z.cot[j] = cot[j].conj();
    }
    return z;
  }

  bool is_zero() const {
    for (const auto& v : tan)
      if (!v.is_zero()) return false;
    for (const auto& v : cot)
      if (!v.is_zero()) return false;
    return true;
  }

  friend GenVector operator+(const GenVector& a, const GenVector& b) {
    if (a.dim != b.dim) throw error("GenVector: dimension mismatch");
    GenVector z(a.dim);
    for (int j = 0; j < a.dim; ++j) {
      z.tan[j] = a.tan[j] + b.tan[j];
      z.cot[j] = a.cot[j] + b.cot[j];
    }
    return z;
  }
  GenVector operator*(const Scalar& s) const {
    GenVector z(dim);
    for (int j = 0; j < dim; ++j) {
      z.tan[j] = tan[j] * s;
      z.cot[j] = cot[j] * s;
    }
    return z;
  }
  friend bool operator==(const GenVector& a, const GenVector& b) {
    return a.dim == b.dim && a.tan == b.tan && a.cot == b.cot;
  }

  Multivector cot_form() const {
    Multivector r(dim);
    for (int j = 0; j < dim; ++j) r.set(Blade(1) << j, cot[j]);
    return r;
  }
};

/// Split-signature pairing: (X+xi, Y+eta) = (xi(Y) + eta(X))/2, so the
/// quadratic form is xi(X). Signature (n,n) on real vectors.
inline Scalar split_pairing(const GenVector& a, const GenVector& b) {
  if (a.dim != b.dim) throw error("split_pairing: dimension mismatch");
  Scalar s;
  for (int j = 0; j < a.dim; ++j) s += a.cot[j] * b.tan[j] + b.cot[j] * a.tan[j];
  return s * Scalar(Rational(1, 2));
}

/// Complex subspace of V + V* in reduced row echelon form over the 2n
/// coordinates (X_1..X_n, xi_1..xi_n). The echelon basis is the canonical
/// representative: two subspaces are equal iff their matrices are equal.
class Subspace {
 public:
  Subspace() : dim_(0), rows_(0, 0) {}
  explicit Subspace(int n) : dim_(n), rows_(0, 2 * n) {}

  static Subspace span(int n, const std::vector<GenVector>& gens) {
    SMat m(gens.size(), 2 * n);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].dim != n) throw error("Subspace: dimension mismatch");
      for (int j = 0; j < n; ++j) {
        m(i, j) = gens[i].tan[j];
        m(i, n + j) = gens[i].cot[j];
      }
    }
    return from_rows(n, m);
  }

  static Subspace from_rows(int n, SMat m) {
    std::size_t rank = m.rref().size();
    SMat basis(rank, 2 * n);
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) basis(i, j) = m(i, j);
    Subspace s(n);
    s.rows_ = std::move(basis);
    return s;
  }

  int dim() const { return dim_; }
  std::size_t rank() const { return rows_.rows(); }
  const SMat& rows() const { return rows_; }
  GenVector basis_vector(std::size_t i) const { return GenVector::from_row(rows_, i); }

  Subspace conj() const { return from_rows(dim_, bform::conj(rows_)); }

  bool contains(const GenVector& z) const {
    SMat m(rank() + 1, 2 * dim_);
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rows_.cols(); ++j) m(i, j) = rows_(i, j);
    auto c = z.coords();
    for (std::size_t j = 0; j < c.size(); ++j) m(rank(), j) = c[j];
    return m.rank() == rank();
  }

  /// Rank of the projection onto the tangent factor.
  std::size_t tangent_rank() const {
    SMat t(rank(), dim_);
    for (std::size_t i = 0; i < rank(); ++i)
      for (int j = 0; j < dim_; ++j) t(i, j) = rows_(i, j);
    return t.rank();
  }

  bool is_isotropic() const {
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = i; j < rank(); ++j)
        if (!split_pairing(basis_vector(i), basis_vector(j)).is_zero()) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.dim_ == b.dim_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  int dim_;
  SMat rows_;
};

/// Exact intersection of two subspaces.
inline Subspace meet(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) throw error("meet: dimension mismatch");
  const std::size_t ra = a.rank(), rb = b.rank(), n2 = 2 * a.dim();
  // v in A cap B  <=>  v = x^T A = y^T B; solve A^T x - B^T y = 0.
  SMat sys(n2, ra + rb);
  for (std::size_t j = 0; j < n2; ++j) {
    for (std::size_t i = 0; i < ra; ++i) sys(j, i) = a.rows()(i, j);
    for (std::size_t i = 0; i < rb; ++i) sys(j, ra + i) = -b.rows()(i, j);
  }
  SMat ker = sys.kernel();
  SMat gens(ker.rows(), n2);
  for (std::size_t r = 0; r < ker.rows(); ++r)
    for (std::size_t j = 0; j < n2; ++j) {
      Scalar v;
      for (std::size_t i = 0; i < ra; ++i) v += ker(r, i) * a.rows()(i, j);
      gens(r, j) = v;
    }
  return Subspace::from_rows(a.dim(), std::move(gens));
}

std::string to_string(const GenVector& z);

}  // namespace bform
