#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bform/genvector.hpp"
#include "bform/multivector.hpp"
#include "bform/polynomial.hpp"
#include "bform/structures.hpp"

namespace bform {

using PolyForm = BasicMultivector<PolyScalar>;
using PolyVec = std::vector<PolyScalar>;  // polynomial vector field
using PolyMat = Mat<PolyScalar>;

/// Section Z = X + xi of T + T* with polynomial (or localized polynomial)
/// coefficients on the global patch R^n.
struct PolySection {
  int dim = 0;
  PolyVec tan, cot;

  PolySection() = default;
  explicit PolySection(int n) : dim(n), tan(n), cot(n) {}

  static PolySection tangent(int n, int j) {
    PolySection z(n);
    z.tan[j] = PolyScalar(1);
    return z;
  }
  static PolySection cotangent(int n, int j) {
    PolySection z(n);
    z.cot[j] = PolyScalar(1);
    return z;
  }

  bool is_zero() const {
    for (const auto& v : tan)
      if (!v.is_zero()) return false;
    for (const auto& v : cot)
      if (!v.is_zero()) return false;
    return true;
  }
  friend PolySection operator+(const PolySection& a, const PolySection& b) {
    if (a.dim != b.dim) throw error("PolySection: dimension mismatch");
    PolySection z(a.dim);
    for (int j = 0; j < a.dim; ++j) {
      z.tan[j] = a.tan[j] + b.tan[j];
      z.cot[j] = a.cot[j] + b.cot[j];
    }
    return z;
  }
  friend PolySection operator-(const PolySection& a, const PolySection& b) {
    if (a.dim != b.dim) throw error("PolySection: dimension mismatch");
    PolySection z(a.dim);
    for (int j = 0; j < a.dim; ++j) {
      z.tan[j] = a.tan[j] - b.tan[j];
      z.cot[j] = a.cot[j] - b.cot[j];
    }
    return z;
  }
  PolySection operator*(const PolyScalar& f) const {
    PolySection z(dim);
    for (int j = 0; j < dim; ++j) {
      z.tan[j] = tan[j] * f;
      z.cot[j] = cot[j] * f;
    }
    return z;
  }
  friend bool operator==(const PolySection& a, const PolySection& b) {
    return a.dim == b.dim && a.tan == b.tan && a.cot == b.cot;
  }

  PolyForm cot_form() const {
    PolyForm r(dim);
    for (int j = 0; j < dim; ++j) r.set(Blade(1) << j, cot[j]);
    return r;
  }
  GenVector eval(const std::vector<Scalar>& x) const {
    GenVector z(dim);
    for (int j = 0; j < dim; ++j) {
      z.tan[j] = tan[j].eval(x);
      z.cot[j] = cot[j].eval(x);
    }
    return z;
  }
};

PolyForm d(const PolyForm& a);
PolyForm lie_derivative(const PolyVec& x, const PolyForm& a);
PolyVec lie_bracket(const PolyVec& x, const PolyVec& y);

PolySection courant(const PolySection& z0, const PolySection& z1);
/// Twisted bracket: plain bracket plus i_X i_Y H in the cotangent part.
/// H must be a closed 3-form.
PolySection courant_twisted(const PolySection& z0, const PolySection& z1,
                            const PolyForm& h);

/// e^B on sections: X + xi |-> X + (xi + i_X B).
PolySection b_transform(const PolyForm& b, const PolySection& z);

/// e^{-B} [[ e^B Z, e^B Z' ]] - [[ Z, Z' ]]; identically 0 + i_Y i_X dB.
PolySection b_naturality_residual(const PolySection& z0, const PolySection& z1,
                                  const PolyForm& b);

/// N^J(X,Y) = [X,Y] - [JX,JY] + J([JX,Y] + [X,JY]); J^2 = -Id required as an
/// exact identity.
PolyVec nijenhuis_classical(const PolyMat& j, const PolyVec& x, const PolyVec& y);

PolySection apply_endo(const PolyMat& j, const PolySection& z);

/// Generalised Nijenhuis tensor of an endomorphism field (validated
/// pointwise at sample points).
PolySection gen_nijenhuis(const PolyMat& j, const PolySection& z0,
                          const PolySection& z1);

/// J_omega = [[0, W^{-1}],[-W, 0]] for a (possibly non-closed) 2-form field.
PolyMat gcs_field_from_omega(const PolyForm& omega);
PolyMat gcs_field_from_J(const PolyMat& j);

Multivector eval_form(const PolyForm& a, const std::vector<Scalar>& x);
PolyForm constant_form(const Multivector& a);
bool is_constant(const PolyForm& a);
Multivector constant_value(const PolyForm& a);

/// Sample points with small random rational coordinates (den <= 4),
/// avoiding zeros of the supplied denominators.
std::vector<Scalar> sample_point(int n, std::mt19937_64& rng);

/// Courant-closure of a frame: brackets of all pairs must lie in the span
/// of the frame at every sample point (exact rank tests; >= npoints points).
StructureReport courant_closure(const std::vector<PolySection>& frame,
                                std::uint64_t seed = 1, int npoints = 5);

enum class FieldKind { GcyForm, GcyPair, Gcs, Symplectic, Complex };

struct FieldStructure {
  FieldKind kind;
  int dim = 0;
  PolyForm rho0, rho1;   // GcyForm / GcyPair
  PolyMat j;             // Gcs (2n x 2n) / Complex (n x n)
  PolyForm omega;        // Symplectic
};

/// Integrability: d rho = 0 for form kinds, vanishing (generalised)
/// Nijenhuis on coordinate frames plus an empirical tensoriality check for
/// endomorphism kinds, d omega = 0 for symplectic.
StructureReport integrability_report(const FieldStructure& f, std::uint64_t seed = 1);

std::string to_string(const PolyForm& a, int nvars);
std::string to_string(const PolySection& z);

}  // namespace bform
