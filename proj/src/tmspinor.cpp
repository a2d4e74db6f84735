#include "bform/tmspinor.hpp"

#include <algorithm>

namespace bform {

bool TMSpinor::is_chiral() const {
  bool even = false, odd = false;
  for (const auto& [b, v] : coeffs.terms()) (blade_grade(b) & 1 ? odd : even) = true;
  return !(even && odd);
}

int TMSpinor::chirality() const {
  if (!is_chiral() || is_zero()) throw error("TMSpinor: not chiral");
  return blade_grade(coeffs.terms().begin()->first) & 1;
}

Multivector HermitianModel::omega() const {
  Multivector w(n());
  for (int j = 0; j < m; ++j) w.set((Blade(1) << (2 * j)) | (Blade(1) << (2 * j + 1)), Scalar(1));
  return w;
}

Multivector HermitianModel::Omega() const {
  Multivector o = Multivector::one(n());
  for (int j = 0; j < m; ++j) {
    Multivector dz(n());
    dz.set(Blade(1) << (2 * j), Scalar(1));
    dz.set(Blade(1) << (2 * j + 1), Scalar::i());
    o = wedge(o, dz);
  }
  return o;
}

SMat HermitianModel::J() const {
  SMat j(n(), n());
  for (int k = 0; k < m; ++k) {
    j(2 * k + 1, 2 * k) = Scalar(1);   // J e_{2k+1} = e_{2k+2}
    j(2 * k, 2 * k + 1) = Scalar(-1);  // J e_{2k+2} = -e_{2k+1}
  }
  return j;
}

namespace {

// u_j = contraction with dzbar_j's dual, v_j = dzbar_j ^ . on blades over m.
Multivector op_u(int j, const Multivector& psi) {
  std::vector<Scalar> x(psi.dim());
  x[j] = Scalar(1);
  return contract(x, psi);
}

Multivector op_v(int j, const Multivector& psi) {
  Multivector leg(psi.dim());
  leg.set(Blade(1) << j, Scalar(1));
  return wedge(leg, psi);
}

}  // namespace

TMSpinor tm_clifford_act(const std::vector<Scalar>& x, const TMSpinor& psi) {
  if (static_cast<int>(x.size()) != 2 * psi.m)
    throw error("tm_clifford_act: dimension mismatch");
  Multivector out(psi.m);
  for (int j = 0; j < psi.m; ++j) {
    const Scalar& a = x[2 * j];      // e_{2j+1} component
    const Scalar& b = x[2 * j + 1];  // e_{2j+2} component
    if (a.is_zero() && b.is_zero()) continue;
    // a (-u_j + v_j) + b i (u_j + v_j)
    Scalar cu = -a + Scalar::i() * b;
    Scalar cv = a + Scalar::i() * b;
    if (!cu.is_zero()) out += op_u(j, psi.coeffs) * cu;
    if (!cv.is_zero()) out += op_v(j, psi.coeffs) * cv;
  }
  return {psi.m, std::move(out)};
}

TMSpinor charge_conj(const TMSpinor& psi) {
  // A = (coefficient conjugation) o (v_1 - u_1)(v_2 - u_2)...(v_m - u_m),
  // innermost factor first.
  Multivector r(psi.m);
  for (const auto& [b, v] : psi.coeffs.terms()) r.set(b, v.conj());
  for (int j = psi.m - 1; j >= 0; --j) r = op_v(j, r) - op_u(j, r);
  return {psi.m, std::move(r)};
}

SMat tm_annihilator(const TMSpinor& psi) {
  const int n = 2 * psi.m;
  const std::size_t nblades = std::size_t(1) << psi.m;
  SMat sys(nblades, n);
  for (int a = 0; a < n; ++a) {
    std::vector<Scalar> x(n);
    x[a] = Scalar(1);
    TMSpinor img = tm_clifford_act(x, psi);
    for (const auto& [b, v] : img.coeffs.terms()) sys(b, a) = v;
  }
  SMat ker = sys.kernel();
  ker.rref();
  return ker;
}

Multivector tm_fierz(const TMSpinor& psi, const TMSpinor& phi) {
  if (psi.m != phi.m) throw error("tm_fierz: dimension mismatch");
  const int m = psi.m;
  const int n = 2 * m;
  // w_B = beta(dzbar_B, psi) = h(A(dzbar_B), psi) with h the normalized
  // hermitian metric: conj of A's coefficient times psi's matching one.
  std::vector<Scalar> w(std::size_t(1) << m);
  for (Blade b = 0; b < (Blade(1) << m); ++b) {
    TMSpinor monomial(m);
    monomial.coeffs.set(b, Scalar(1));
    TMSpinor ab = charge_conj(monomial);
    Scalar acc;
    for (const auto& [bb, v] : ab.coeffs.terms()) acc += v.conj() * psi.coeffs.coeff(bb);
    w[b] = acc;
  }
  auto pair_with_w = [&](const Multivector& acted) {
    Scalar acc;
    for (const auto& [b, v] : acted.terms()) acc += w[b] * v;
    return acc;
  };

  // Coefficient of the monomial c(E_A) in T(phi') = beta(phi', psi) phi is
  // tr(c(E_A) T)/(rho_A 2^m); the global fierz constant 2^m cancels the 2^m.
  Multivector out(n);
  struct Frame {
    Blade blade;
    int low;
    Multivector acted;  // c(E_A) phi
  };
  std::vector<Frame> stack;
  stack.push_back({0, n, phi.coeffs});
  while (!stack.empty()) {
    Frame fr = std::move(stack.back());
    stack.pop_back();
    Scalar c = pair_with_w(fr.acted);
    if (!c.is_zero()) {
      int k = blade_grade(fr.blade);
      // every frame vector squares to -Id here (orthonormal for g)
      int minus = ((k * (k - 1) / 2) & 1) ^ (k & 1);
      out.add_term(fr.blade, minus ? -c : c);
    }
    for (int a = fr.low - 1; a >= 0; --a) {
      std::vector<Scalar> x(n);
      x[a] = Scalar(1);
      stack.push_back({fr.blade | (Blade(1) << a), a,
                       tm_clifford_act(x, {m, fr.acted}).coeffs});
    }
  }
  return out;
}

}  // namespace bform
