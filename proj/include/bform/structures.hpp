#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bform/clifford.hpp"
#include "bform/genvector.hpp"
#include "bform/matrix.hpp"
#include "bform/multivector.hpp"
#include "bform/tmspinor.hpp"

namespace bform {

/// Endomorphism of V + V* in the (tangent, cotangent) block convention:
/// coordinates (X_1..X_n, xi_1..xi_n), matrix acts on column vectors.
struct GenEndo {
  int dim = 0;
  SMat mat;  // 2n x 2n

  GenEndo() = default;
  GenEndo(int n, SMat m) : dim(n), mat(std::move(m)) {
    if (mat.rows() != std::size_t(2 * n) || mat.cols() != std::size_t(2 * n))
      throw error("GenEndo: matrix must be 2n x 2n");
  }
  static GenEndo identity(int n) { return {n, SMat::identity(2 * n)}; }

  GenVector apply(const GenVector& z) const {
    if (z.dim != dim) throw error("GenEndo: dimension mismatch");
    auto y = mat.apply(z.coords());
    GenVector r(dim);
    for (int j = 0; j < dim; ++j) {
      r.tan[j] = y[j];
      r.cot[j] = y[dim + j];
    }
    return r;
  }
  GenEndo operator*(const GenEndo& o) const {
    if (dim != o.dim) throw error("GenEndo: dimension mismatch");
    return {dim, mat * o.mat};
  }
  GenEndo operator-() const { return {dim, -mat}; }
  friend bool operator==(const GenEndo& a, const GenEndo& b) {
    return a.dim == b.dim && a.mat == b.mat;
  }

  bool squares_to(int sign) const {
    SMat sq = mat * mat;
    SMat target = SMat::identity(2 * dim);
    if (sign < 0) target = -target;
    return sq == target;
  }
  /// (MZ, MZ') = (Z, Z') for the split pairing.
  bool is_isometry() const;
};

/// Transform of a subspace by an endomorphism (re-echelonized).
Subspace transform(const GenEndo& e, const Subspace& w);

struct MetricData {
  SMat g;  // symmetric positive definite
  SMat b;  // skew
  bool valid(std::string* why = nullptr) const;
};

struct Condition {
  std::string name;
  bool pass = false;
  std::string witness;  // filled for failures (and some accept data)
};

struct StructureReport {
  bool accept = false;
  std::string kind;
  std::vector<Condition> conditions;
  std::optional<int> type;
  bool formal_type = false;  // type reported for a pure form with <rho,conj rho> = 0
  std::vector<std::pair<std::string, std::string>> data;  // named scalars/witnesses
  std::vector<std::string> notes;

  Condition& add(const std::string& name, bool pass, std::string witness = "") {
    conditions.push_back({name, pass, std::move(witness)});
    if (!pass) accept = false;
    return conditions.back();
  }
  void put(const std::string& key, std::string value) {
    data.emplace_back(key, std::move(value));
  }
  const std::string* find(const std::string& key) const {
    for (const auto& [k, v] : data)
      if (k == key) return &v;
    return nullptr;
  }
};

/// Shear e^B = [[Id,0],[B,Id]]: X+xi |-> X + (B(X)+xi). B a 2-form.
GenEndo b_endo(const Multivector& b2form);

/// Matrix of the 2-form as a map TM -> T*M, column convention
/// (Bmat X)_k = B(X, e_k).
SMat two_form_matrix(const Multivector& b2form);
Multivector matrix_two_form(const SMat& bmat);

GenEndo gen_metric_build(const MetricData& d);

struct MetricSplit {
  Subspace vplus, vminus;
  MetricData d;
};
/// Validates G as a generalised metric and splits it; on failure the report
/// names the failing axiom with a witness.
struct MetricSplitResult {
  bool ok = false;
  std::string axiom;   // failing axiom when !ok
  std::string witness;
  MetricSplit split;
};
MetricSplitResult gen_metric_split(const GenEndo& g);

GenEndo gcs_from_J(const SMat& j);
GenEndo gcs_from_omega(const Multivector& omega);
GenEndo conjugate_by(const GenEndo& m, const Multivector& b2form);
GenEndo direct_sum(const GenEndo& a, const GenEndo& b);

/// +i-eigenbundle of a validated almost generalised complex structure.
Subspace i_eigenbundle(const GenEndo& j);

/// Real endomorphism with +i-eigenbundle W (W of rank n, W + conj W = all).
GenEndo gcs_from_annihilator(const Subspace& w);

StructureReport validate_gcs(const GenEndo& j);

struct KahlerData {
  MetricData gb;
  SMat jplus, jminus;
};
StructureReport gen_kahler_check(const GenEndo& j0, const GenEndo& j1,
                                 KahlerData* out = nullptr);

StructureReport gcy_check(const Multivector& rho);

struct SuOptions {
  bool strict_normalization = false;
};
StructureReport su_check(const Multivector& rho0, const Multivector& rho1,
                         const SuOptions& opt = {});

/// Classical Calabi-Yau compatibility of (omega, Omega) on R^{2m};
/// on accept the induced pair for su_check is (exp(i omega), Omega).
StructureReport cy_pair(const Multivector& omega, const Multivector& Omega,
                        const SuOptions& opt = {});

/// rho_t = t^k exp(omega_c / t), a finite sum once omega_c^{k+1} = 0.
Multivector interpolation_family(const Multivector& omega_c, int k, const Rational& t);

/// rho0 = s e^B ^ fierz(A(psi+), psi-), rho1 = s e^B ^ fierz(psi+, psi-)
/// on the flat model (d.g must be the identity; s stands in for e^{-phi}).
std::pair<Multivector, Multivector> theorem4_build(const MetricData& d, const Rational& s,
                                                   const TMSpinor& psi_plus,
                                                   const TMSpinor& psi_minus);

std::string to_string(const SMat& m);

}  // namespace bform
