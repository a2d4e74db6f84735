#pragma once

#include <vector>

#include "bform/matrix.hpp"
#include "bform/multivector.hpp"

namespace bform {

/// Spinor on the flat hermitian model C^m = R^{2m} (z_j = x_{2j-1} + i x_{2j}):
/// an element of Lambda^{0,*}, expanded over the 2^m monomials dzbar_I.
/// Blade bit j stands for dzbar_{j+1}. Chirality is the parity of |I|.
struct TMSpinor {
  int m = 0;
  BasicMultivector<Scalar> coeffs;  // over m generators

  TMSpinor() = default;
  explicit TMSpinor(int m_) : m(m_), coeffs(m_) {}
  TMSpinor(int m_, BasicMultivector<Scalar> c) : m(m_), coeffs(std::move(c)) {}

  static TMSpinor unit(int m_) { return TMSpinor(m_, Multivector::one(m_)); }

  bool is_zero() const { return coeffs.is_zero(); }
  bool is_chiral() const;          // only even or only odd |I|
  int chirality() const;           // 0 = even, 1 = odd (requires chiral)
  friend bool operator==(const TMSpinor& a, const TMSpinor& b) {
    return a.m == b.m && a.coeffs == b.coeffs;
  }
  TMSpinor operator*(const Scalar& s) const { return {m, coeffs * s}; }
  friend TMSpinor operator+(const TMSpinor& a, const TMSpinor& b) {
    if (a.m != b.m) throw error("TMSpinor: dimension mismatch");
    return {a.m, a.coeffs + b.coeffs};
  }
};

/// The standard flat Kahler data on R^{2m}: g = Id, omega = sum of
/// dx_{2j-1}^dx_{2j}, Omega = prod of (dx_{2j-1} + i dx_{2j}), J interleaved.
struct HermitianModel {
  int m;
  explicit HermitianModel(int m_) : m(m_) {
    if (m_ < 1 || 2 * m_ > kMaxDim / 2) throw error("HermitianModel: bad dimension");
  }
  int n() const { return 2 * m; }
  Multivector omega() const;
  Multivector Omega() const;
  SMat J() const;  // J e_{2j-1} = e_{2j}, J e_{2j} = -e_{2j-1}
};

/// Clifford multiplication on Lambda^{0,*}. For real X it satisfies
/// mu(X, mu(X, psi)) = -g(X,X) psi and reverses chirality; complex X acts
/// by complex-linear extension. Realization frozen in docs/conventions.md:
/// c(e_{2j-1}) = -i_{dzbar_j} + dzbar_j ^ ,  c(e_{2j}) = i(i_{dzbar_j} + dzbar_j ^).
TMSpinor tm_clifford_act(const std::vector<Scalar>& x, const TMSpinor& psi);

/// Charge conjugation: conjugate-linear, commutes with tm_clifford_act(X)
/// for every real X (hence with all even products), A(1) = dzbar_1^...^dzbar_m,
/// and A^2 = (-1)^{m(m+1)/2} Id exactly.
TMSpinor charge_conj(const TMSpinor& psi);

/// Annihilator {v in TM (x) C | v . psi = 0}, returned as a basis matrix
/// (rows, 2m complex columns); psi is pure iff the rank is m.
SMat tm_annihilator(const TMSpinor& psi);

/// Fierzing S (x) S -> Lambda* T*R^{2m} (x) C, calibrated so that
/// tm_fierz(1, 1) = Omega and tm_fierz(charge_conj(1), 1) = exp(i omega)
/// hold exactly. Linear in both slots (the pairing beta(phi,psi) =
/// h(A(phi), psi) is bilinear).
Multivector tm_fierz(const TMSpinor& psi, const TMSpinor& phi);

}  // namespace bform
