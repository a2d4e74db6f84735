#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bform/operators.hpp"
#include "util.hpp"

using namespace bform;
using namespace bform::testutil;

namespace {

PolyScalar X(int j) { return PolyScalar::variable(j - 1); }

PolyForm monomial_form(int n, Blade b, const PolyScalar& c) {
  PolyForm f(n);
  f.set(b, c);
  return f;
}

PolyForm rand_polyform(std::mt19937_64& rng, int n) {
  PolyForm f(n);
  std::uniform_int_distribution<Blade> blade(0, (Blade(1) << n) - 1);
  std::uniform_int_distribution<int> var(0, n - 1), e(0, 2);
  for (int t = 0; t < 4; ++t) {
    Poly p;
    Monomial m = mono_set(0, var(rng), e(rng));
    p.add_term(m, rand_scalar(rng, 3));
    f.add_term(blade(rng), PolyScalar(p));
  }
  return f;
}

}  // namespace

TEST_CASE("operator construction and model constraints") {
  CHECK_THROWS_AS(build_operator("del", Model::Riemannian, 2), error);
  CHECK_THROWS_AS(build_operator("L", Model::Riemannian, 2), error);
  CHECK_THROWS_AS(build_operator("nonsense", Model::Kahler, 2), error);
  GradedOperator dd = build_operator("d", Model::Riemannian, 3);
  CHECK(dd.parity == 1);
  GradedOperator delta = build_operator("Delta", Model::Riemannian, 3);
  CHECK(delta.parity == 0);
}

TEST_CASE("operators are linear and respect declared parity") {
  std::mt19937_64 rng(81);
  std::vector<std::string> names = {"d", "d*", "Delta", "QL", "QR"};
  for (const auto& name : names) {
    GradedOperator op = build_operator(name, Model::Kahler, 4);
    for (int it = 0; it < 10; ++it) {
      PolyForm a = rand_polyform(rng, 4), b = rand_polyform(rng, 4);
      Scalar s = rand_scalar(rng, 2);
      CHECK(op(a + b * PolyScalar(s)) == op(a) + op(b) * PolyScalar(s));
    }
    // parity: on homogeneous inputs the output grades differ by the parity mod 2
    for (Blade bl = 0; bl < 16; ++bl) {
      PolyForm x = monomial_form(4, bl, X(1));
      PolyForm y = op(x);
      for (const auto& [b2, v] : y.terms())
        CHECK((blade_grade(b2) - blade_grade(bl) - op.parity) % 2 == 0);
    }
  }
}

TEST_CASE("flat-model realizations: spot values") {
  SUBCASE("d* on x1 dx1 is -1") {
    GradedOperator ds = build_operator("d*", Model::Riemannian, 2);
    PolyForm a = monomial_form(2, 0b01, X(1));
    PolyForm expect(2);
    expect.set(0, PolyScalar(-1));
    CHECK(ds(a) == expect);
  }
  SUBCASE("Pi on dx1 in m=1 is zero") {
    GradedOperator pi = build_operator("Pi", Model::Symplectic, 2);
    CHECK(pi(monomial_form(2, 0b01, PolyScalar(1))).is_zero());
    // and (k-m) elsewhere
    CHECK(pi(monomial_form(2, 0b11, PolyScalar(1))) ==
          monomial_form(2, 0b11, PolyScalar(1)));
    CHECK(pi(monomial_form(2, 0, PolyScalar(1))) ==
          monomial_form(2, 0, PolyScalar(-1)));
  }
  SUBCASE("dt* on x1 dx1^dx2 in m=1 is -dx1") {
    GradedOperator dt = build_operator("dt*", Model::Symplectic, 2);
    PolyForm a = monomial_form(2, 0b11, X(1));
    PolyForm expect(2);
    expect.set(0b01, PolyScalar(-1));
    CHECK(dt(a) == expect);
  }
  SUBCASE("Lambda normalization: Lambda(dx1^dx2) = 1") {
    GradedOperator lam = build_operator("Lambda", Model::Symplectic, 2);
    PolyForm expect(2);
    expect.set(0, PolyScalar(1));
    CHECK(lam(monomial_form(2, 0b11, PolyScalar(1))) == expect);
  }
  SUBCASE("del + delbar = d on the kahler model") {
    std::mt19937_64 rng(82);
    GradedOperator del = build_operator("del", Model::Kahler, 4);
    GradedOperator delbar = build_operator("delbar", Model::Kahler, 4);
    GradedOperator dd = build_operator("d", Model::Kahler, 4);
    for (int it = 0; it < 20; ++it) {
      PolyForm a = rand_polyform(rng, 4);
      CHECK(del(a) + delbar(a) == dd(a));
    }
    GradedOperator dels = build_operator("del*", Model::Kahler, 4);
    GradedOperator delbars = build_operator("delbar*", Model::Kahler, 4);
    GradedOperator dstar = build_operator("d*", Model::Kahler, 4);
    for (int it = 0; it < 20; ++it) {
      PolyForm a = rand_polyform(rng, 4);
      CHECK(dels(a) + delbars(a) == dstar(a));
    }
  }
}

TEST_CASE("supercommutator convention") {
  GradedOperator dd = build_operator("d", Model::Riemannian, 2);
  GradedOperator sq = supercommutator(dd, dd);
  std::mt19937_64 rng(83);
  for (int it = 0; it < 10; ++it) CHECK(sq(rand_polyform(rng, 2)).is_zero());
}

TEST_CASE("verify_table passes every displayed identity") {
  SUBCASE("N=(1,1) on riemannian models up to n=3") {
    for (int n = 1; n <= 3; ++n) {
      StructureReport r = verify_table(table_n11(), n, 3);
      CHECK(r.accept);
    }
  }
  SUBCASE("sl(2), Kahler identities, N=(2,2) on the flat Kahler line") {
    StructureReport r1 = verify_table(table_sl2(), 2, 3);
    CHECK(r1.accept);
    StructureReport r2 = verify_table(table_kahler_ids(), 2, 3);
    CHECK(r2.accept);
    StructureReport r3 = verify_table(table_n22(), 2, 3);
    CHECK(r3.accept);
  }
  SUBCASE("symplectic spin representation, m=1 and m=2") {
    CHECK(verify_table(table_symplectic(), 2, 3).accept);
    CHECK(verify_table(table_symplectic(), 4, 2).accept);
  }
}

TEST_CASE("failing identities are reported with a witness monomial") {
  CommutatorTable bogus;
  bogus.name = "bogus";
  bogus.model = Model::Riemannian;
  bogus.identities = {{"[d,d] = d", "d", "d", {{Scalar(1), "d"}}}};
  StructureReport r = verify_table(bogus, 2, 1);
  CHECK(!r.accept);
  REQUIRE(!r.conditions.empty());
  CHECK(!r.conditions[0].witness.empty());
}

TEST_CASE("laplacian preserves form degree; QL^2 = QR^2 = Delta") {
  std::mt19937_64 rng(84);
  for (int n = 2; n <= 3; ++n) {
    GradedOperator delta = build_operator("Delta", Model::Riemannian, n);
    GradedOperator ql = build_operator("QL", Model::Riemannian, n);
    GradedOperator qr = build_operator("QR", Model::Riemannian, n);
    for (Blade b = 0; b < (Blade(1) << n); ++b) {
      PolyForm x = monomial_form(n, b, X(1) * X(2));
      PolyForm dx2 = delta(x);
      for (const auto& [b2, v] : dx2.terms()) CHECK(blade_grade(b2) == blade_grade(b));
      CHECK(ql(ql(x)) == dx2);
      CHECK(qr(qr(x)) == dx2);
    }
  }
}

TEST_CASE("holomorphic and antiholomorphic laplacians coincide (flat Kahler)") {
  std::mt19937_64 rng(85);
  for (int m = 1; m <= 2; ++m) {
    int n = 2 * m;
    GradedOperator d1 = build_operator("Delta_del", Model::Kahler, n);
    GradedOperator d2 = build_operator("Delta_delbar", Model::Kahler, n);
    for (int it = 0; it < 15; ++it) {
      PolyForm a = rand_polyform(rng, n);
      CHECK(d1(a) == d2(a));
    }
  }
}

TEST_CASE("contraction is pointwise adjoint to wedging on blades") {
  // <i_{e_j} a, b> = <a, dx_j ^ b> for the blade inner product
  // (blades orthonormal). Exhaustive over blades, n = 4.
  int n = 4;
  auto inner = [&](const Multivector& a, const Multivector& b) {
    Scalar s;
    for (const auto& [bl, v] : a.terms()) s += v * b.coeff(bl).conj();
    return s;
  };
  for (int j = 0; j < n; ++j) {
    std::vector<Scalar> ej(n);
    ej[j] = Scalar(1);
    for (Blade p = 0; p < (Blade(1) << n); ++p)
      for (Blade q = 0; q < (Blade(1) << n); ++q) {
        Multivector a(n), b(n);
        a.set(p, Scalar(1));
        b.set(q, Scalar(1));
        Multivector ia = contract(ej, a);
        Multivector wb = wedge(Multivector::basis(n, j), b);
        CHECK(inner(ia, b) == inner(a, wb));
      }
  }
}

TEST_CASE("(dt*)^2 = 0 on the spanning set") {
  GradedOperator dt = build_operator("dt*", Model::Symplectic, 4);
  std::mt19937_64 rng(86);
  for (int it = 0; it < 30; ++it) {
    PolyForm a = rand_polyform(rng, 4);
    CHECK(dt(dt(a)).is_zero());
  }
}

TEST_CASE("tables_for_model groups the right tables") {
  CHECK(tables_for_model(Model::Riemannian).size() == 1);
  CHECK(tables_for_model(Model::Kahler).size() == 4);
  CHECK(tables_for_model(Model::Symplectic).size() == 2);
}
