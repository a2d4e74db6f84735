#include "bform/operators.hpp"

#include <algorithm>

namespace bform {

Model model_from_string(const std::string& name) {
  if (name == "riemannian") return Model::Riemannian;
  if (name == "kahler") return Model::Kahler;
  if (name == "symplectic") return Model::Symplectic;
  throw error("unknown model: " + name);
}

std::string to_string(Model m) {
  switch (m) {
    case Model::Riemannian: return "riemannian";
    case Model::Kahler: return "kahler";
    case Model::Symplectic: return "symplectic";
  }
  return "?";
}

namespace {

PolyForm codifferential(const PolyForm& a) {
  // d* = -sum_j i_{e_j} o d/dx_j on the flat model
  const int n = a.dim();
  PolyForm r(n);
  for (int j = 0; j < n; ++j) {
    PolyForm da(n);
    for (const auto& [b, v] : a.terms()) da.set(b, v.derivative(j));
    PolyVec ej(n);
    ej[j] = PolyScalar(1);
    r -= contract(ej, da);
  }
  return r;
}

// del = sum_j dz_j ^ d/dz_j and delbar = sum_j dzbar_j ^ d/dzbar_j with
// dz_j = dx_{2j-1} + i dx_{2j} and d/dz_j = (d_{2j-1} - i d_{2j})/2.
PolyForm dolbeault(const PolyForm& a, bool bar) {
  const int n = a.dim();
  PolyForm r(n);
  Scalar half(Rational(1, 2));
  for (int j = 0; j < n / 2; ++j) {
    PolyForm leg(n);
    leg.set(Blade(1) << (2 * j), PolyScalar(1));
    leg.set(Blade(1) << (2 * j + 1), PolyScalar(bar ? -Scalar::i() : Scalar::i()));
    PolyForm deriv(n);
    for (const auto& [b, v] : a.terms()) {
      PolyScalar dz = (v.derivative(2 * j) +
                       v.derivative(2 * j + 1) * PolyScalar(bar ? Scalar::i() : -Scalar::i())) *
                      PolyScalar(half);
      deriv.add_term(b, dz);
    }
    r += wedge(leg, deriv);
  }
  return r;
}

// del* = -2 sum_j i_{dz_j-dual} o d/dzbar_j; delbar* = -2 sum_j i_{dzbar-dual} o d/dz_j.
// The contraction directions are the complex frame vectors paired with the
// respective dz (i_{d/dz_j} dz_j = 1).
PolyForm dolbeault_star(const PolyForm& a, bool bar) {
  const int n = a.dim();
  PolyForm r(n);
  Scalar half(Rational(1, 2));
  for (int j = 0; j < n / 2; ++j) {
    // d/dz_j = (e_{2j-1} - i e_{2j})/2, d/dzbar_j = (e_{2j-1} + i e_{2j})/2
    PolyVec dir(n);
    dir[2 * j] = PolyScalar(half);
    dir[2 * j + 1] = PolyScalar(half * (bar ? Scalar::i() : -Scalar::i()));
    PolyForm deriv(n);
    for (const auto& [b, v] : a.terms()) {
      PolyScalar dv = (v.derivative(2 * j) +
                       v.derivative(2 * j + 1) * PolyScalar(bar ? -Scalar::i() : Scalar::i())) *
                      PolyScalar(half);
      deriv.add_term(b, dv);
    }
    r -= contract(dir, deriv) * PolyScalar(Scalar(2));
  }
  return r;
}

Multivector model_omega(int n) {
  Multivector w(n);
  for (int j = 0; j < n / 2; ++j)
    w.set((Blade(1) << (2 * j)) | (Blade(1) << (2 * j + 1)), Scalar(1));
  return w;
}

PolyForm lefschetz(const PolyForm& a) {
  return wedge(constant_form(model_omega(a.dim())), a);
}

PolyForm lefschetz_dual(const PolyForm& a) {
  // Lambda = sum_j i_{e_{2j}} i_{e_{2j-1}}, normalized so Lambda(omega) = m.
  const int n = a.dim();
  PolyForm r(n);
  for (int j = 0; j < n / 2; ++j) {
    PolyVec e1(n), e2(n);
    e1[2 * j] = PolyScalar(1);
    e2[2 * j + 1] = PolyScalar(1);
    r += contract(e2, contract(e1, a));
  }
  return r;
}

PolyForm counting(const PolyForm& a) {
  const int n = a.dim();
  const int m = n / 2;
  PolyForm r(n);
  for (const auto& [b, v] : a.terms()) {
    long k = blade_grade(b) - m;
    if (k != 0) r.set(b, v * PolyScalar(Scalar(k)));
  }
  return r;
}

}  // namespace

GradedOperator build_operator(const std::string& name, Model model, int dim) {
  auto require_even_dim = [&] {
    if (dim % 2 != 0) throw error(name + " requires an even-dimensional model");
  };
  auto require_kahler = [&] {
    if (model != Model::Kahler)
      throw error("operator " + name + " requires the kahler model");
  };
  auto require_omega = [&] {
    if (model == Model::Riemannian)
      throw error("operator " + name + " requires the kahler or symplectic model");
    require_even_dim();
  };
  GradedOperator op;
  op.name = name;
  op.model = model;
  op.dim = dim;

  if (name == "d") {
    op.parity = 1;
    op.action = [](const PolyForm& a) { return d(a); };
  } else if (name == "d*") {
    op.parity = 1;
    op.action = [](const PolyForm& a) { return codifferential(a); };
  } else if (name == "Delta") {
    op.parity = 0;
    op.action = [](const PolyForm& a) {
      return d(codifferential(a)) + codifferential(d(a));
    };
  } else if (name == "QL") {
    op.parity = 1;
    op.action = [](const PolyForm& a) { return d(a) + codifferential(a); };
  } else if (name == "QR") {
    op.parity = 1;
    op.action = [](const PolyForm& a) {
      return (d(a) - codifferential(a)) * PolyScalar(Scalar::i());
    };
  } else if (name == "del" || name == "delbar") {
    require_kahler();
    op.parity = 1;
    bool bar = name == "delbar";
    op.action = [bar](const PolyForm& a) { return dolbeault(a, bar); };
  } else if (name == "del*" || name == "delbar*") {
    require_kahler();
    op.parity = 1;
    bool bar = name == "delbar*";
    op.action = [bar](const PolyForm& a) { return dolbeault_star(a, bar); };
  } else if (name == "G1") {
    return build_operator("del", model, dim);
  } else if (name == "G1*") {
    return build_operator("del*", model, dim);
  } else if (name == "G2") {
    require_kahler();
    op.parity = 1;
    op.action = [](const PolyForm& a) {
      return dolbeault_star(a, true) * PolyScalar(Scalar::i());
    };
  } else if (name == "G2*") {
    require_kahler();
    op.parity = 1;
    op.action = [](const PolyForm& a) {
      return dolbeault(a, true) * PolyScalar(-Scalar::i());
    };
  } else if (name == "Delta_del" || name == "Delta_delbar") {
    require_kahler();
    op.parity = 0;
    bool bar = name == "Delta_delbar";
    op.action = [bar](const PolyForm& a) {
      return dolbeault(dolbeault_star(a, bar), bar) +
             dolbeault_star(dolbeault(a, bar), bar);
    };
  } else if (name == "L") {
    require_omega();
    op.parity = 0;
    op.action = [](const PolyForm& a) { return lefschetz(a); };
  } else if (name == "L*" || name == "Lambda") {
    require_omega();
    op.parity = 0;
    op.action = [](const PolyForm& a) { return lefschetz_dual(a); };
  } else if (name == "Pi") {
    require_omega();
    op.parity = 0;
    op.action = [](const PolyForm& a) { return counting(a); };
  } else if (name == "dt*") {
    require_omega();
    op.parity = 1;
    op.action = [](const PolyForm& a) {
      return lefschetz_dual(d(a)) - d(lefschetz_dual(a));
    };
  } else {
    throw error("unknown operator: " + name);
  }
  return op;
}

GradedOperator compose(const GradedOperator& a, const GradedOperator& b) {
  if (a.model != b.model || a.dim != b.dim)
    throw error("compose: operators live on different models");
  GradedOperator r;
  r.name = a.name + " " + b.name;
  r.parity = (a.parity + b.parity) & 1;
  r.model = a.model;
  r.dim = a.dim;
  auto fa = a.action, fb = b.action;
  r.action = [fa, fb](const PolyForm& x) { return fa(fb(x)); };
  return r;
}

GradedOperator scale(const Scalar& s, const GradedOperator& a) {
  GradedOperator r = a;
  auto fa = a.action;
  r.action = [fa, s](const PolyForm& x) { return fa(x) * PolyScalar(s); };
  return r;
}

GradedOperator add(const GradedOperator& a, const GradedOperator& b) {
  if (a.model != b.model || a.dim != b.dim)
    throw error("add: operators live on different models");
  GradedOperator r = a;
  r.name = a.name + " + " + b.name;
  auto fa = a.action, fb = b.action;
  r.action = [fa, fb](const PolyForm& x) { return fa(x) + fb(x); };
  return r;
}

GradedOperator supercommutator(const GradedOperator& a, const GradedOperator& b) {
  if (a.model != b.model || a.dim != b.dim)
    throw error("supercommutator: operators live on different models");
  GradedOperator r;
  r.name = "[" + a.name + "," + b.name + "]";
  r.parity = (a.parity + b.parity) & 1;
  r.model = a.model;
  r.dim = a.dim;
  auto fa = a.action, fb = b.action;
  bool anti = a.parity == 1 && b.parity == 1;
  r.action = [fa, fb, anti](const PolyForm& x) {
    PolyForm ab = fa(fb(x));
    PolyForm ba = fb(fa(x));
    return anti ? ab + ba : ab - ba;
  };
  return r;
}

CommutatorTable table_n11() {
  CommutatorTable t;
  t.name = "N=(1,1)";
  t.model = Model::Riemannian;
  t.identities = {
      {"[QL,QL] = 2 Delta", "QL", "QL", {{Scalar(2), "Delta"}}},
      {"[QR,QR] = 2 Delta", "QR", "QR", {{Scalar(2), "Delta"}}},
      {"[QL,QR] = 0", "QL", "QR", {}},
  };
  return t;
}

CommutatorTable table_sl2() {
  CommutatorTable t;
  t.name = "sl(2)";
  t.model = Model::Kahler;
  t.identities = {
      {"[Pi,L] = 2 L", "Pi", "L", {{Scalar(2), "L"}}},
      {"[Pi,L*] = -2 L*", "Pi", "L*", {{Scalar(-2), "L*"}}},
      {"[L,L*] = Pi", "L", "L*", {{Scalar(1), "Pi"}}},
  };
  return t;
}

CommutatorTable table_kahler_ids() {
  CommutatorTable t;
  t.name = "Kahler identities";
  t.model = Model::Kahler;
  t.identities = {
      {"[Pi,G1] = G1", "Pi", "G1", {{Scalar(1), "G1"}}},
      {"[Pi,G2] = -G2", "Pi", "G2", {{Scalar(-1), "G2"}}},
      {"[L,G1] = 0", "L", "G1", {}},
      {"[L,G2] = G1", "L", "G2", {{Scalar(1), "G1"}}},
      {"[L*,G1] = G2", "L*", "G1", {{Scalar(1), "G2"}}},
      {"[L*,G2] = 0", "L*", "G2", {}},
      {"[Pi,G1*] = -G1*", "Pi", "G1*", {{Scalar(-1), "G1*"}}},
      {"[Pi,G2*] = G2*", "Pi", "G2*", {{Scalar(1), "G2*"}}},
  };
  return t;
}

CommutatorTable table_n22() {
  CommutatorTable t;
  t.name = "N=(2,2)";
  t.model = Model::Kahler;
  t.identities = {
      {"[G1,G1*] = Delta_del", "G1", "G1*", {{Scalar(1), "Delta_del"}}},
      {"[G2,G2*] = Delta_del", "G2", "G2*", {{Scalar(1), "Delta_del"}}},
      {"[G1,G2*] = 0", "G1", "G2*", {}},
      {"[G2,G1*] = 0", "G2", "G1*", {}},
      {"[G1,G2] = 0", "G1", "G2", {}},
      {"[G1*,G2*] = 0", "G1*", "G2*", {}},
      {"[G1,G1] = 0", "G1", "G1", {}},
      {"[G2,G2] = 0", "G2", "G2", {}},
  };
  return t;
}

CommutatorTable table_symplectic() {
  CommutatorTable t;
  t.name = "symplectic spin representation";
  t.model = Model::Symplectic;
  t.identities = {
      {"[Pi,d] = d", "Pi", "d", {{Scalar(1), "d"}}},
      {"[Pi,dt*] = -dt*", "Pi", "dt*", {{Scalar(-1), "dt*"}}},
      {"[L,d] = 0", "L", "d", {}},
      {"[L,dt*] = d", "L", "dt*", {{Scalar(1), "d"}}},
      {"[Lambda,d] = dt*", "Lambda", "d", {{Scalar(1), "dt*"}}},
      {"[Lambda,dt*] = 0", "Lambda", "dt*", {}},
  };
  return t;
}

std::vector<CommutatorTable> tables_for_model(Model model) {
  switch (model) {
    case Model::Riemannian:
      return {table_n11()};
    case Model::Kahler:
      return {table_n11(), table_sl2(), table_kahler_ids(), table_n22()};
    case Model::Symplectic:
      return {table_n11(), table_symplectic()};
  }
  return {};
}

namespace {

// all coefficient monomials with total degree <= degree in n variables
void enumerate_monomials(int n, int degree, Monomial current, int var,
                         std::vector<Monomial>& out) {
  if (var == n) {
    out.push_back(current);
    return;
  }
  for (int e = 0; e <= degree; ++e) {
    enumerate_monomials(n, degree - e, mono_set(current, var, e), var + 1, out);
  }
}

}  // namespace

StructureReport verify_table(const CommutatorTable& table, int dim, int degree) {
  StructureReport r;
  r.kind = "commutator table: " + table.name;
  r.accept = true;
  if ((table.model != Model::Riemannian) && dim % 2 != 0)
    throw error("verify_table: model requires even dimension");

  std::vector<Monomial> monos;
  enumerate_monomials(dim, degree, 0, 0, monos);

  for (const auto& id : table.identities) {
    GradedOperator a = build_operator(id.a, table.model, dim);
    GradedOperator b = build_operator(id.b, table.model, dim);
    GradedOperator lhs = supercommutator(a, b);
    std::vector<std::pair<Scalar, GradedOperator>> rhs;
    for (const auto& [c, name] : id.rhs)
      rhs.emplace_back(c, build_operator(name, table.model, dim));

    std::string witness;
    long checked = 0;
    for (Blade blade = 0; blade < (Blade(1) << dim) && witness.empty(); ++blade) {
      for (Monomial mono : monos) {
        PolyForm x(dim);
        Poly p;
        p.add_term(mono, Scalar(1));
        x.set(blade, PolyScalar(p));
        PolyForm left = lhs(x);
        PolyForm right(dim);
        for (const auto& [c, op] : rhs) right += op(x) * PolyScalar(c);
        ++checked;
        if (left != right) {
          witness = "fails on " + to_string(x, dim);
          break;
        }
      }
    }
    r.add(id.label, witness.empty(), witness);
  }
  r.put("degree bound", std::to_string(degree));
  return r;
}

}  // namespace bform
