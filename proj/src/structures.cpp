#include "bform/structures.hpp"

#include <algorithm>
#include <sstream>

namespace bform {

namespace {

SMat pairing_gram(int n) {
  // (Z,Z') = 1/2 (xi(Y) + eta(X)); Gram over (X, xi) coordinates.
  SMat p(2 * n, 2 * n);
  Scalar half(Rational(1, 2));
  for (int j = 0; j < n; ++j) {
    p(j, n + j) = half;
    p(n + j, j) = half;
  }
  return p;
}

std::string scalar_str(const Scalar& s) { return to_string(s); }

std::string vec_str(const std::vector<Scalar>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

GenVector basis_genvector(int n, int index) {
  GenVector z(n);
  if (index < n)
    z.tan[index] = Scalar(1);
  else
    z.cot[index - n] = Scalar(1);
  return z;
}

}  // namespace

bool GenEndo::is_isometry() const {
  SMat p = pairing_gram(dim);
  return mat.transpose() * p * mat == p;
}

Subspace transform(const GenEndo& e, const Subspace& w) {
  if (e.dim != w.dim()) throw error("transform: dimension mismatch");
  std::vector<GenVector> gens;
  for (std::size_t i = 0; i < w.rank(); ++i) gens.push_back(e.apply(w.basis_vector(i)));
  return Subspace::span(w.dim(), gens);
}

bool MetricData::valid(std::string* why) const {
  const std::size_t n = g.rows();
  if (g.cols() != n || b.rows() != n || b.cols() != n) {
    if (why) *why = "shape mismatch";
    return false;
  }
  if (!is_real(g) || !is_real(b)) {
    if (why) *why = "entries must be real";
    return false;
  }
  if (g.transpose() != g) {
    if (why) *why = "g is not symmetric";
    return false;
  }
  if (b.transpose() != -b) {
    if (why) *why = "B is not skew";
    return false;
  }
  Definiteness d = check_definite(g, true);
  if (!d.positive) {
    if (why) *why = "g is not positive definite, witness " + vec_str(d.witness);
    return false;
  }
  return true;
}

SMat two_form_matrix(const Multivector& b2form) {
  const int n = b2form.dim();
  SMat m(n, n);
  for (const auto& [blade, v] : b2form.terms()) {
    if (blade_grade(blade) != 2) throw error("two_form_matrix: not a 2-form");
    int i = std::countr_zero(blade);
    int j = std::countr_zero(blade & (blade - 1));
    // (B X)_k = B(X, e_k);  B(e_i, e_j) = v for i < j
    m(j, i) = v;
    m(i, j) = -v;
  }
  return m;
}

Multivector matrix_two_form(const SMat& bmat) {
  const int n = static_cast<int>(bmat.rows());
  if (bmat.transpose() != -bmat) throw error("matrix_two_form: matrix is not skew");
  Multivector b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      b.set((Blade(1) << i) | (Blade(1) << j), bmat(j, i));
  return b;
}

GenEndo b_endo(const Multivector& b2form) {
  const int n = b2form.dim();
  SMat bmat = two_form_matrix(b2form);  // validates the grade
  SMat m = SMat::identity(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(n + i, j) = bmat(i, j);
  return {n, std::move(m)};
}

GenEndo gen_metric_build(const MetricData& d) {
  std::string why;
  if (!d.valid(&why)) throw error("gen_metric_build: invalid metric data: " + why);
  const std::size_t n = d.g.rows();
  SMat ginv = *d.g.inverse();
  SMat tl = -(ginv * d.b);
  SMat bl = d.g - d.b * ginv * d.b;
  SMat br = d.b * ginv;
  SMat m(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = tl(i, j);
      m(i, n + j) = ginv(i, j);
      m(n + i, j) = bl(i, j);
      m(n + i, n + j) = br(i, j);
    }
  return {static_cast<int>(n), std::move(m)};
}

MetricSplitResult gen_metric_split(const GenEndo& g) {
  MetricSplitResult out;
  const int n = g.dim;
  if (!is_real(g.mat)) {
    out.axiom = "real";
    out.witness = "matrix has nonreal entries";
    return out;
  }
  SMat sq = g.mat * g.mat;
  SMat id = SMat::identity(2 * n);
  if (sq != id) {
    out.axiom = "G^2=Id";
    for (int k = 0; k < 2 * n; ++k) {
      bool bad = false;
      for (int r = 0; r < 2 * n; ++r)
        if (sq(r, k) != id(r, k)) bad = true;
      if (bad) {
        out.witness = "Z = " + to_string(basis_genvector(n, k));
        break;
      }
    }
    return out;
  }
  // (G Z, Z) > 0: positive definiteness of the symmetric part of G^T P.
  SMat p = pairing_gram(n);
  SMat s = g.mat.transpose() * p;
  SMat h = (s + s.transpose()).scaled(Scalar(Rational(1, 2)));
  Definiteness def = check_definite(h, true);
  if (!def.positive) {
    out.axiom = "(GZ,Z)>0";
    GenVector z(n);
    for (int j = 0; j < n; ++j) {
      z.tan[j] = def.witness[j];
      z.cot[j] = def.witness[n + j];
    }
    out.witness = "Z = " + to_string(z) + ", (GZ,Z) = " + to_string(def.witness_value);
    return out;
  }
  // +1/-1 eigenspaces.
  SMat gm = g.mat;
  Subspace vplus = Subspace::from_rows(n, (gm - id).kernel());
  Subspace vminus = Subspace::from_rows(n, (gm + id).kernel());
  if (vplus.rank() != std::size_t(n) || vminus.rank() != std::size_t(n)) {
    out.axiom = "eigenspace ranks";
    out.witness = "rank V+ = " + std::to_string(vplus.rank()) +
                  ", rank V- = " + std::to_string(vminus.rank());
    return out;
  }
  // V+ is the graph {X + (g+B)X}: rows (T | C) with C = T A^T.
  SMat t(n, n), c(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      t(i, j) = vplus.rows()(i, j);
      c(i, j) = vplus.rows()(i, n + j);
    }
  auto tinv = t.inverse();
  if (!tinv) {
    out.axiom = "V+ transverse to T*";
    out.witness = "tangent projection of V+ is singular";
    return out;
  }
  SMat a = (*tinv * c).transpose();
  MetricData d;
  d.g = (a + a.transpose()).scaled(Scalar(Rational(1, 2)));
  d.b = (a - a.transpose()).scaled(Scalar(Rational(1, 2)));
  std::string why;
  if (!d.valid(&why)) {
    out.axiom = "graph data";
    out.witness = why;
    return out;
  }
  if (gen_metric_build(d).mat != g.mat) {
    out.axiom = "round-trip";
    out.witness = "rebuilt metric differs";
    return out;
  }
  out.ok = true;
  out.split = {std::move(vplus), std::move(vminus), std::move(d)};
  return out;
}

GenEndo gcs_from_J(const SMat& j) {
  const int n = static_cast<int>(j.rows());
  if (!is_real(j)) throw error("gcs_from_J: J must be real");
  if (j * j != -SMat::identity(n)) throw error("gcs_from_J: J^2 != -Id");
  SMat m(2 * n, 2 * n);
  SMat jt = j.transpose();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      m(a, b) = -j(a, b);
      m(n + a, n + b) = jt(a, b);
    }
  return {n, std::move(m)};
}

GenEndo gcs_from_omega(const Multivector& omega) {
  const int n = omega.dim();
  SMat w = two_form_matrix(omega);
  if (!is_real(w)) throw error("gcs_from_omega: omega must be real");
  auto winv = w.inverse();
  if (!winv) throw error("gcs_from_omega: omega is degenerate");
  SMat m(2 * n, 2 * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      m(a, n + b) = (*winv)(a, b);
      m(n + a, b) = -w(a, b);
    }
  return {n, std::move(m)};
}

GenEndo conjugate_by(const GenEndo& m, const Multivector& b2form) {
  GenEndo eb = b_endo(b2form);
  GenEndo ebm = b_endo(-b2form);
  return eb * m * ebm;
}

GenEndo direct_sum(const GenEndo& a, const GenEndo& b) {
  StructureReport ra = validate_gcs(a), rb = validate_gcs(b);
  if (!ra.accept || !rb.accept)
    throw error("direct_sum: inputs must be almost generalised complex structures");
  const int n1 = a.dim, n2 = b.dim, n = n1 + n2;
  auto map_a = [&](int i) { return i < n1 ? i : n + (i - n1); };
  auto map_b = [&](int i) { return i < n2 ? n1 + i : n + n1 + (i - n2); };
  SMat m(2 * n, 2 * n);
  for (int i = 0; i < 2 * n1; ++i)
    for (int j = 0; j < 2 * n1; ++j) m(map_a(i), map_a(j)) = a.mat(i, j);
  for (int i = 0; i < 2 * n2; ++i)
    for (int j = 0; j < 2 * n2; ++j) m(map_b(i), map_b(j)) = b.mat(i, j);
  return {n, std::move(m)};
}

Subspace i_eigenbundle(const GenEndo& j) {
  SMat m = j.mat;
  for (std::size_t k = 0; k < m.rows(); ++k) m(k, k) -= Scalar::i();
  return Subspace::from_rows(j.dim, m.kernel());
}

GenEndo gcs_from_annihilator(const Subspace& w) {
  const int n = w.dim();
  if (w.rank() != std::size_t(n))
    throw error("gcs_from_annihilator: subspace must have rank n");
  Subspace wbar = w.conj();
  SMat c(2 * n, 2 * n);
  for (int col = 0; col < n; ++col)
    for (int row = 0; row < 2 * n; ++row) {
      c(row, col) = w.rows()(col, row);
      c(row, n + col) = wbar.rows()(col, row);
    }
  auto cinv = c.inverse();
  if (!cinv) throw error("gcs_from_annihilator: W and conj(W) do not split V+V*");
  SMat d(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    d(k, k) = Scalar::i();
    d(n + k, n + k) = -Scalar::i();
  }
  SMat j = c * d * *cinv;
  if (!is_real(j)) throw error("gcs_from_annihilator: result is not real");
  return {n, std::move(j)};
}

StructureReport validate_gcs(const GenEndo& j) {
  StructureReport r;
  r.kind = "almost generalised complex structure";
  r.accept = true;
  r.add("real entries", is_real(j.mat));
  bool sq = j.squares_to(-1);
  if (!sq) {
    std::string witness;
    SMat s = j.mat * j.mat + SMat::identity(2 * j.dim);
    for (int k = 0; k < 2 * j.dim && witness.empty(); ++k)
      for (int rr = 0; rr < 2 * j.dim; ++rr)
        if (!s(rr, k).is_zero()) {
          witness = "Z = " + to_string(basis_genvector(j.dim, k));
          break;
        }
    r.add("J^2 = -Id", false, witness);
  } else {
    r.add("J^2 = -Id", true);
  }
  bool iso = j.is_isometry();
  if (!iso) {
    std::string witness;
    for (int a = 0; a < 2 * j.dim && witness.empty(); ++a)
      for (int b = 0; b < 2 * j.dim; ++b) {
        GenVector za = basis_genvector(j.dim, a), zb = basis_genvector(j.dim, b);
        if (split_pairing(j.apply(za), j.apply(zb)) != split_pairing(za, zb)) {
          witness = "(Z,Z') = (" + to_string(za) + ", " + to_string(zb) + ")";
          break;
        }
      }
    r.add("isometry", false, witness);
  } else {
    r.add("isometry", true);
  }
  if (!r.accept) return r;
  Subspace w = i_eigenbundle(j);
  r.add("+i-eigenbundle rank n", w.rank() == std::size_t(j.dim),
        "rank " + std::to_string(w.rank()));
  r.add("+i-eigenbundle isotropic", w.is_isotropic());
  if (r.accept) {
    r.type = type_of(w);
    r.put("type", std::to_string(*r.type));
  }
  return r;
}

namespace {

// Hermitian Gram H_{jk} = (w_j, conj w_k) of a subspace basis.
SMat hermitian_gram(const Subspace& w) {
  SMat h(w.rank(), w.rank());
  for (std::size_t a = 0; a < w.rank(); ++a)
    for (std::size_t b = 0; b < w.rank(); ++b)
      h(a, b) = split_pairing(w.basis_vector(a), w.basis_vector(b).conj());
  return h;
}

bool subspaces_orthogonal(const Subspace& a, const Subspace& b) {
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j)
      if (!split_pairing(a.basis_vector(i), b.basis_vector(j)).is_zero()) return false;
  return true;
}

void check_definite_bundle(StructureReport& r, const Subspace& w, bool positive,
                           const std::string& label) {
  Definiteness def = check_definite(hermitian_gram(w), positive);
  bool ok = positive ? def.positive : def.negative;
  std::string witness;
  if (!ok) {
    GenVector z(w.dim());
    for (std::size_t i = 0; i < def.witness.size(); ++i) {
      GenVector bi = w.basis_vector(i) * def.witness[i];
      z = z + bi;
    }
    witness = "Z = " + to_string(z) + ", (Z,conj Z) = " + to_string(def.witness_value);
  }
  r.add(label, ok, witness);
}

}  // namespace

StructureReport gen_kahler_check(const GenEndo& j0, const GenEndo& j1, KahlerData* out) {
  StructureReport r;
  r.kind = "generalised Kähler structure";
  r.accept = true;
  if (j0.dim != j1.dim) throw error("gen_kahler_check: dimension mismatch");
  const int n = j0.dim;

  StructureReport r0 = validate_gcs(j0), r1 = validate_gcs(j1);
  auto first_fail = [](const StructureReport& rep) {
    for (const auto& c : rep.conditions)
      if (!c.pass) return c.name + (c.witness.empty() ? "" : " (" + c.witness + ")");
    return std::string();
  };
  r.add("J0 almost generalised complex", r0.accept, first_fail(r0));
  r.add("J1 almost generalised complex", r1.accept, first_fail(r1));
  if (!r.accept) return r;

  bool commute = j0.mat * j1.mat == j1.mat * j0.mat;
  r.add("J0 J1 = J1 J0", commute);
  if (!commute) return r;

  GenEndo g = -(j0 * j1);
  MetricSplitResult ms = gen_metric_split(g);
  r.add("G = -J0 J1 is a generalised metric", ms.ok,
        ms.ok ? "" : ms.axiom + ": " + ms.witness);
  if (!r.accept) return r;

  Subspace w0 = i_eigenbundle(j0), w1 = i_eigenbundle(j1);
  Subspace wp = meet(w0, w1);
  Subspace wm = meet(w0, w1.conj());
  const std::size_t m = n / 2;
  r.add("rank(W0+) = m", wp.rank() == m, "rank " + std::to_string(wp.rank()));
  r.add("rank(W0-) = m", wm.rank() == m, "rank " + std::to_string(wm.rank()));
  r.add("W0+ isotropic", wp.is_isotropic());
  r.add("W0- isotropic", wm.is_isotropic());
  r.add("W0+ perp W0-", subspaces_orthogonal(wp, wm));
  r.add("W0+ perp conj(W0-)", subspaces_orthogonal(wp, wm.conj()));
  check_definite_bundle(r, wp, true, "W0+ positive definite");
  check_definite_bundle(r, wm, false, "W0- negative definite");
  if (!r.accept) return r;

  // Pull the structure back through pi+/- : X |-> X + (+-g + B)X.
  KahlerData kd;
  kd.gb = ms.split.d;
  for (int sign = 0; sign < 2; ++sign) {
    // J_{+-} = -P_T o J0 o pi_{+-}: the lift of a classical J carries -J in
    // its tangent block, so the pullback needs the compensating sign.
    SMat a = sign == 0 ? kd.gb.g + kd.gb.b : -kd.gb.g + kd.gb.b;
    SMat jres(n, n);
    for (int col = 0; col < n; ++col) {
      GenVector z(n);
      for (int row = 0; row < n; ++row) {
        if (row == col) z.tan[row] = Scalar(1);
        z.cot[row] = a(row, col);
      }
      GenVector img = j0.apply(z);
      for (int row = 0; row < n; ++row) jres(row, col) = -img.tan[row];
    }
    (sign == 0 ? kd.jplus : kd.jminus) = jres;
  }
  r.add("J+ squares to -Id", kd.jplus * kd.jplus == -SMat::identity(n));
  r.add("J- squares to -Id", kd.jminus * kd.jminus == -SMat::identity(n));
  r.put("g", to_string(kd.gb.g));
  r.put("B", to_string(kd.gb.b));
  r.put("J+", to_string(kd.jplus));
  r.put("J-", to_string(kd.jminus));
  if (out) *out = kd;
  return r;
}

StructureReport gcy_check(const Multivector& rho) {
  StructureReport r;
  r.kind = "generalised Calabi-Yau structure";
  r.accept = true;
  const int n = rho.dim();
  r.add("dimension even", n % 2 == 0, "n = " + std::to_string(n));
  r.add("nonzero", !rho.is_zero());
  if (!r.accept) return r;

  bool even = true, odd = true;
  for (const auto& [b, v] : rho.terms()) (blade_grade(b) & 1 ? even : odd) = false;
  r.add("even or odd", even || odd);

  Annihilator ann = annihilator(rho);
  r.add("pure", ann.pure, "annihilator rank " + std::to_string(ann.space.rank()));
  if (!r.accept) return r;

  r.type = type_of(ann.space);
  Scalar pairing = mukai(rho, conj(rho));
  r.put("mukai(rho, conj rho)", scalar_str(pairing));
  bool nonzero = !pairing.is_zero();
  r.add("mukai(rho, conj rho) != 0", nonzero, nonzero ? "" : "pairing vanishes");
  if (!nonzero) {
    r.formal_type = true;
    r.put("type", std::to_string(*r.type));
    r.notes.push_back("formal type (no GCS induced)");
    return r;
  }
  r.put("type", std::to_string(*r.type));
  // The induced endomorphism exists and is real; record its validation.
  GenEndo j = gcs_from_annihilator(ann.space);
  StructureReport v = validate_gcs(j);
  r.add("induced J validates", v.accept);
  return r;
}

namespace {

// lambda in  Omega ^ conj(Omega) = lambda (-1)^{m(m-1)/2} i^m omega^m,
// as exact top-coefficient ratio; nullopt when either side degenerates.
std::optional<Scalar> cy_scale(const Multivector& omega, const Multivector& Omega) {
  const int n = omega.dim();
  const int m = n / 2;
  Multivector wm = Multivector::one(n);
  for (int k = 0; k < m; ++k) wm = wedge(wm, omega);
  const Blade top = (Blade(1) << n) - 1;
  Scalar rhs = wm.coeff(top);
  // (-1)^{m(m-1)/2} i^m
  Scalar phase(1);
  for (int k = 0; k < m; ++k) phase *= Scalar::i();
  if ((m * (m - 1) / 2) & 1) phase = -phase;
  rhs *= phase;
  if (rhs.is_zero()) return std::nullopt;
  Scalar lhs = wedge(Omega, conj(Omega)).coeff(top);
  return lhs / rhs;
}

}  // namespace

StructureReport su_check(const Multivector& rho0, const Multivector& rho1,
                         const SuOptions& opt) {
  const int n = rho0.dim();
  if (n % 2 != 0) throw error("su_check: dimension must be even");
  rho0.require_same_dim(rho1);
  const std::size_t m = n / 2;

  StructureReport r;
  r.kind = "generalised SU(" + std::to_string(m) + ") structure";
  r.accept = true;

  StructureReport g0 = gcy_check(rho0), g1 = gcy_check(rho1);
  auto first_fail = [](const StructureReport& rep) {
    for (const auto& c : rep.conditions)
      if (!c.pass) return c.name + (c.witness.empty() ? "" : " (" + c.witness + ")");
    return std::string();
  };
  r.add("rho0 generalised Calabi-Yau", g0.accept, first_fail(g0));
  r.add("rho1 generalised Calabi-Yau", g1.accept, first_fail(g1));
  if (!r.accept) return r;

  // <rho0, conj rho0> = c <rho1, conj rho1> with c real > 0 (for odd m both
  // pairings are purely imaginary and c compares the imaginary parts).
  Scalar p0 = mukai(rho0, conj(rho0));
  Scalar p1 = mukai(rho1, conj(rho1));
  r.put("mukai(rho0, conj rho0)", scalar_str(p0));
  r.put("mukai(rho1, conj rho1)", scalar_str(p1));
  bool reality = (m % 2 == 0) ? (p0.is_real() && p1.is_real())
                              : (p0.is_imag() && p1.is_imag());
  r.add(m % 2 == 0 ? "pairings real" : "pairings purely imaginary", reality);
  if (!r.accept) return r;
  Rational v0 = (m % 2 == 0) ? p0.re : p0.im;
  Rational v1 = (m % 2 == 0) ? p1.re : p1.im;
  Rational c = v0 / v1;
  r.put("c", to_string(c));
  r.add("c > 0", c > 0, "c = " + to_string(c));

  Annihilator a0 = annihilator(rho0), a1 = annihilator(rho1);
  Subspace wp = meet(a0.space, a1.space);
  Subspace wm_ = meet(a0.space, a1.space.conj());
  int low_plus = static_cast<int>(wp.rank());
  int low_minus = static_cast<int>(wm_.rank());
  r.put("lowest_degree(rho0, rho1)", std::to_string(low_plus));
  r.put("lowest_degree(rho0, conj rho1)", std::to_string(low_minus));
  r.add("lowest degree(rho0 x rho1) >= m", low_plus >= static_cast<int>(m),
        "rank(W0 cap W1) = " + std::to_string(low_plus));
  r.add("lowest degree(rho0 x conj rho1) >= m", low_minus >= static_cast<int>(m),
        "rank(W0 cap conj W1) = " + std::to_string(low_minus));
  if (n <= 6) {
    // cross-check the intersection ranks against the product grading
    int s1 = spinor_outer(rho0, rho1).min_grade();
    int s2 = spinor_outer(rho0, conj(rho1)).min_grade();
    r.add("product grading cross-check", s1 == low_plus && s2 == low_minus,
          "gradings " + std::to_string(s1) + ", " + std::to_string(s2));
  }
  r.add("rank(W0+) = m", wp.rank() == m, "rank " + std::to_string(wp.rank()));
  r.add("rank(W0-) = m", wm_.rank() == m, "rank " + std::to_string(wm_.rank()));
  if (!r.accept) return r;

  check_definite_bundle(r, wp, true, "W0+ positive definite");
  check_definite_bundle(r, wm_, false, "W0- negative definite");
  r.notes.push_back(
      "definiteness convention: +(Z,conj Z)>0 on W0+, -(Z,conj Z)>0 on W0-"
      " (docs/conventions.md)");
  if (!r.accept) return r;

  // Induced endomorphism pair must be generalised Kähler; this also yields
  // the (g, B, J+, J-) witness data.
  GenEndo j0 = gcs_from_annihilator(a0.space);
  GenEndo j1 = gcs_from_annihilator(a1.space);
  KahlerData kd;
  StructureReport kr = gen_kahler_check(j0, j1, &kd);
  r.add("induced pair generalised Kähler", kr.accept, first_fail(kr));
  if (kr.accept) {
    r.put("g", to_string(kd.gb.g));
    r.put("B", to_string(kd.gb.b));
  }
  r.put("type(rho0)", std::to_string(type_of(a0.space)));
  r.put("type(rho1)", std::to_string(type_of(a1.space)));

  // Scale factor lambda, reported when rho0 has exponential (type 0) shape:
  // rho0 = s (e^{B + i omega}), Omega~ = e^{-B} ^ rho1 / s.
  Scalar s0 = rho0.coeff(0);
  if (!s0.is_zero()) {
    Multivector beta = grade_project(rho0, 2) * s0.inv();
    if (rho0 == exp_even(beta) * s0) {
      Multivector bpart(n), wpart(n);
      for (const auto& [b, v] : beta.terms()) {
        bpart.set(b, Scalar(v.re));
        wpart.set(b, Scalar(v.im));
      }
      Multivector omega_tilde = wpart;
      Multivector Omega_tilde = wedge(exp_even(-bpart), rho1) * s0.inv();
      if (auto lam = cy_scale(omega_tilde, Omega_tilde)) {
        r.put("lambda", scalar_str(*lam));
        if (opt.strict_normalization)
          r.add("lambda = 1 (strict)", *lam == Scalar(1), "lambda = " + scalar_str(*lam));
      }
    }
  }
  return r;
}

StructureReport cy_pair(const Multivector& omega, const Multivector& Omega,
                        const SuOptions& opt) {
  const int n = omega.dim();
  StructureReport r;
  r.kind = "almost Calabi-Yau pair";
  r.accept = true;
  r.add("dimension even", n % 2 == 0, "n = " + std::to_string(n));
  if (!r.accept) return r;
  const int m = n / 2;

  bool omega_real = true;
  for (const auto& [b, v] : omega.terms())
    if (!v.is_real()) omega_real = false;
  r.add("omega real 2-form", omega_real && (omega.is_zero() || (omega.min_grade() == 2 && omega.max_grade() == 2)));
  if (!r.accept) return r;
  SMat w = two_form_matrix(omega);
  r.add("omega nondegenerate", !w.det().is_zero());

  bool deg_m = !Omega.is_zero() && Omega.min_grade() == m && Omega.max_grade() == m;
  r.add("Omega has degree m", deg_m, "m = " + std::to_string(m));
  if (!r.accept) return r;

  Annihilator ann = annihilator(Omega);
  r.add("Omega decomposable", ann.pure,
        "annihilator rank " + std::to_string(ann.space.rank()));
  Multivector cross = wedge(Omega, omega);
  r.add("Omega ^ omega = 0", cross.is_zero(),
        cross.is_zero() ? "" : to_string(cross));
  if (!r.accept) return r;

  auto lam = cy_scale(omega, Omega);
  bool compat = lam.has_value() && lam->is_real() && !lam->is_zero();
  if (compat && m % 2 == 0 && lam->re < 0) compat = false;
  r.add("Omega ^ conj(Omega) = lambda (-1)^{m(m-1)/2} i^m omega^m", compat,
        lam ? "lambda = " + scalar_str(*lam) : "omega^m or ratio degenerate");
  if (lam) r.put("lambda", scalar_str(*lam));
  if (opt.strict_normalization)
    r.add("lambda = 1 (strict)", lam && *lam == Scalar(1));
  if (!r.accept) return r;

  // Induced J: +i-eigenvectors = tangent part of the annihilator (T^{0,1}).
  SMat t01(ann.space.rank(), n);
  for (std::size_t i = 0; i < ann.space.rank(); ++i)
    for (int j = 0; j < n; ++j) t01(i, j) = ann.space.rows()(i, j);
  // Assemble J with J v = -i v on T^{0,1}.
  std::size_t rank = t01.rref().size();
  if (rank != std::size_t(m)) {
    r.add("tangent projection rank m", false, "rank " + std::to_string(rank));
    return r;
  }
  SMat c(n, n);
  for (int col = 0; col < m; ++col)
    for (int row = 0; row < n; ++row) {
      c(row, col) = t01(col, row);
      c(row, m + col) = t01(col, row).conj();
    }
  auto cinv = c.inverse();
  r.add("T^{0,1} + conj T^{0,1} = TM (x) C", cinv.has_value());
  if (!r.accept) return r;
  SMat d(n, n);
  for (int k = 0; k < m; ++k) {
    d(k, k) = -Scalar::i();
    d(m + k, m + k) = Scalar::i();
  }
  SMat j = c * d * *cinv;
  r.add("induced J real", is_real(j));
  if (!r.accept) return r;

  r.add("omega(J.,J.) = omega(.,.)", j.transpose() * w * j == w);
  // positivity omega(X, JX) > 0
  SMat q = w.transpose() * j;
  SMat h = (q + q.transpose()).scaled(Scalar(Rational(1, 2)));
  Definiteness def = check_definite(h, true);
  r.add("omega(X,JX) > 0", def.positive,
        def.positive ? "" : "X = " + vec_str(def.witness));
  if (!r.accept) return r;

  SMat g = -(w * j);
  r.put("g", to_string(g));
  r.put("J", to_string(j));
  r.notes.push_back("induced pair for su_check: (exp(i*omega), Omega)");
  return r;
}

Multivector interpolation_family(const Multivector& omega_c, int k, const Rational& t) {
  if (t == 0) throw error("interpolation_family: t must be nonzero");
  if (k < 0) throw error("interpolation_family: k must be >= 0");
  Multivector power = Multivector::one(omega_c.dim());
  std::vector<Multivector> powers{power};
  for (int j = 1; j <= k + 1; ++j) {
    power = wedge(power, omega_c);
    powers.push_back(power);
  }
  if (!powers[k + 1].is_zero())
    throw error("interpolation_family: omega_c^(k+1) != 0");
  Multivector rho(omega_c.dim());
  Rational tk = 1;
  Rational fact = 1;
  for (int j = 0; j <= k; ++j) {
    // t^{k-j} / j!
    Rational coef = 1;
    for (int a = 0; a < k - j; ++a) coef *= t;
    if (j > 0) fact *= j;
    rho += powers[j] * Scalar(coef / fact);
  }
  return rho;
}

std::pair<Multivector, Multivector> theorem4_build(const MetricData& d, const Rational& s,
                                                   const TMSpinor& psi_plus,
                                                   const TMSpinor& psi_minus) {
  const int m = psi_plus.m;
  if (psi_minus.m != m) throw error("theorem4_build: spinor dimensions differ");
  const int n = 2 * m;
  if (d.g != SMat::identity(n))
    throw error("theorem4_build: flat model requires g = Id");
  std::string why;
  if (!d.valid(&why)) throw error("theorem4_build: invalid data: " + why);
  if (s <= 0) throw error("theorem4_build: scale must be positive");
  Multivector eb = exp_even(matrix_two_form(d.b));
  Multivector rho0 = wedge(eb, tm_fierz(charge_conj(psi_plus), psi_minus)) * Scalar(s);
  Multivector rho1 = wedge(eb, tm_fierz(psi_plus, psi_minus)) * Scalar(s);
  return {rho0, rho1};
}

std::string to_string(const SMat& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << to_string(m(i, j));
    }
  }
  os << "]";
  return os.str();
}

}  // namespace bform
