#include "bform/clifford.hpp"

#include <algorithm>

namespace bform {

Multivector clifford_act(const GenVector& z, const Multivector& rho) {
  if (z.dim != rho.dim()) throw error("clifford_act: dimension mismatch");
  Multivector out = wedge(z.cot_form(), rho);
  out -= contract(z.tan, rho);
  return out;
}

bool self_adjointness_check(const GenVector& z, const Multivector& rho,
                            const Multivector& tau) {
  if (rho.dim() % 2 != 0) throw error("self_adjointness_check: dim must be even");
  return mukai(clifford_act(z, rho), tau) == mukai(rho, clifford_act(z, tau));
}

Annihilator annihilator(const Multivector& rho) {
  if (rho.is_zero()) throw error("annihilator: form must be nonzero");
  const int n = rho.dim();
  const std::size_t nblades = std::size_t(1) << n;
  // Columns: the 2n unknowns (X, xi); rows: blade coordinates of Z.rho.
  SMat sys(nblades, 2 * n);
  for (int j = 0; j < n; ++j) {
    GenVector ej(n), fj(n);
    ej.tan[j] = Scalar(1);
    fj.cot[j] = Scalar(1);
    Multivector ce = clifford_act(ej, rho);
    Multivector cf = clifford_act(fj, rho);
    for (const auto& [b, v] : ce.terms()) sys(b, j) = v;
    for (const auto& [b, v] : cf.terms()) sys(b, n + j) = v;
  }
  Annihilator out;
  out.space = Subspace::from_rows(n, sys.kernel());
  out.pure = out.space.rank() == static_cast<std::size_t>(n);
  return out;
}

int type_of(const Subspace& w) {
  return w.dim() - static_cast<int>(w.tangent_rank());
}

int type_of(const Multivector& rho) {
  Annihilator a = annihilator(rho);
  if (!a.pure) throw error("type_of: form is not pure");
  return type_of(a.space);
}

namespace {

// Orthogonal frame for the split pairing: a_i = e_i + f_i with (a_i,a_i) = 1
// and b_i = e_i - f_i with (b_i,b_i) = -1. Clifford monomials over this
// frame are trace-orthogonal, which makes the symbol map a direct sum of
// one-dimensional trace extractions (no linear solve).
GenVector ortho_frame_vector(int n, int index) {
  GenVector z(n);
  int j = index < n ? index : index - n;
  z.tan[j] = Scalar(1);
  z.cot[j] = Scalar(index < n ? 1 : -1);
  return z;
}

// wedge expansion of the frame blade in the e/f generators, as a
// GenMultivector over 2n generators.
GenMultivector frame_blade_to_genmv(int n, Blade frame_blade) {
  GenMultivector acc = GenMultivector::one(2 * n);
  Blade rest = frame_blade;
  while (rest) {
    int a = std::countr_zero(rest);
    rest &= rest - 1;
    GenMultivector leg(2 * n);
    int j = a < n ? a : a - n;
    leg.set(Blade(1) << j, Scalar(1));
    leg.set(Blade(1) << (n + j), Scalar(a < n ? 1 : -1));
    acc = wedge(acc, leg);
  }
  return acc;
}

}  // namespace

GenMultivector spinor_outer(const Multivector& rho, const Multivector& tau) {
  rho.require_same_dim(tau);
  const int n = rho.dim();
  const int gens = 2 * n;
  GenMultivector out(2 * n);

  // The rank-one operator T(phi) = mukai(tau, phi) rho expands over the
  // Clifford monomials E_A = w_{a1}...w_{ak} (a1 < ... < ak) of the
  // orthogonal frame as
  //   T = sum_A  mukai(tau, E_A . rho) / (rho_A 2^n)  E_A,
  // where E_A . E_A = rho_A Id (trace-orthogonality of the monomials).
  // E_A acts right-to-left, so the depth-first enumeration extends each
  // product at the front with a smaller index: one vector action per subset.
  struct Frame {
    Blade blade;
    int low;            // all indices in blade are >= low
    Multivector acted;  // E_A . rho
  };
  std::vector<Frame> stack;
  stack.push_back({0, gens, rho});
  Rational two_n = 1;
  for (int k = 0; k < n; ++k) two_n *= 2;

  while (!stack.empty()) {
    Frame fr = std::move(stack.back());
    stack.pop_back();
    Scalar c = mukai(tau, fr.acted);
    if (!c.is_zero()) {
      // rho_A: reordering E_A into squaring position gives (-1)^{k(k-1)/2};
      // each a-frame factor squares to -Id, each b-frame factor to +Id.
      int k = blade_grade(fr.blade);
      int minus = (k * (k - 1) / 2) & 1;
      minus ^= blade_grade(fr.blade & ((Blade(1) << n) - 1)) & 1;
      Scalar coef = c * Scalar(Rational(1) / two_n);
      if (minus) coef = -coef;
      GenMultivector expansion = frame_blade_to_genmv(n, fr.blade);
      for (const auto& [b, v] : expansion.terms()) out.add_term(b, v * coef);
    }
    for (int a = fr.low - 1; a >= 0; --a)
      stack.push_back({fr.blade | (Blade(1) << a), a,
                       clifford_act(ortho_frame_vector(n, a), fr.acted)});
  }
  return out;
}

int lowest_degree(const Multivector& rho, const Multivector& tau) {
  Annihilator ar = annihilator(rho);
  Annihilator at = annihilator(tau);
  if (!ar.pure || !at.pure) throw error("lowest_degree: inputs must be pure");
  return static_cast<int>(meet(ar.space, at.space).rank());
}

FormSpan FormSpan::span(int n, const std::vector<Multivector>& gens) {
  const std::size_t nblades = std::size_t(1) << n;
  SMat m(gens.size(), nblades);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].dim() != n) throw error("FormSpan: dimension mismatch");
    for (const auto& [b, v] : gens[i].terms()) m(i, b) = v;
  }
  m = [&] {
    std::size_t rank = m.rref().size();
    SMat basis(rank, nblades);
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < nblades; ++j) basis(i, j) = m(i, j);
    return basis;
  }();
  FormSpan s;
  s.dim = n;
  s.rows = std::move(m);
  return s;
}

bool FormSpan::contains(const Multivector& a) const {
  const std::size_t nblades = std::size_t(1) << dim;
  SMat m(rows.rows() + 1, nblades);
  for (std::size_t i = 0; i < rows.rows(); ++i)
    for (std::size_t j = 0; j < nblades; ++j) m(i, j) = rows(i, j);
  for (const auto& [b, v] : a.terms()) m(rows.rows(), b) = v;
  return m.rank() == rows.rows();
}

std::vector<FormSpan> uk_decompose(const Multivector& rho) {
  const int n = rho.dim();
  Annihilator a = annihilator(rho);
  if (!a.pure) throw error("uk_decompose: form is not pure");
  if (mukai(rho, conj(rho)).is_zero())
    throw error("uk_decompose: mukai(rho, conj rho) vanishes");
  Subspace wbar = a.space.conj();
  std::vector<GenVector> zbar;
  for (std::size_t i = 0; i < wbar.rank(); ++i) zbar.push_back(wbar.basis_vector(i));

  std::vector<FormSpan> uk;
  for (int k = 0; k <= n; ++k) {
    std::vector<Multivector> gens;
    for (Blade s = 0; s < (Blade(1) << n); ++s) {
      if (blade_grade(s) != k) continue;
      Multivector v = rho;
      for (int j = n - 1; j >= 0; --j)
        if (s & (Blade(1) << j)) v = clifford_act(zbar[j], v);
      gens.push_back(std::move(v));
    }
    uk.push_back(FormSpan::span(n, gens));
  }
  return uk;
}

std::string to_string(const GenVector& z) {
  Multivector tan(z.dim), cot(z.dim);
  for (int j = 0; j < z.dim; ++j) {
    tan.set(Blade(1) << j, z.tan[j]);
    cot.set(Blade(1) << j, z.cot[j]);
  }
  std::string t = to_string(tan, "e");
  std::string c = to_string(cot, "dx");
  if (t == "0") return c;
  if (c == "0") return t;
  return t + " + " + c;
}

}  // namespace bform
