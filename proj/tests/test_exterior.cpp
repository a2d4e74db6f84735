#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bform/multivector.hpp"
#include "util.hpp"

using namespace bform;
using namespace bform::testutil;

namespace {

Multivector dx(int n, int j) { return Multivector::basis(n, j - 1); }

Multivector parse2(int n, std::initializer_list<std::pair<Blade, Scalar>> terms) {
  Multivector a(n);
  for (const auto& [b, v] : terms) a.set(b, v);
  return a;
}

}  // namespace

TEST_CASE("scalar field arithmetic is exact") {
  Scalar a(Rational(1, 3), Rational(2, 5));
  Scalar b(Rational(-4, 7), Rational(1, 2));
  CHECK(a * b.inv() * b == a);
  CHECK(a.conj().conj() == a);
  CHECK((a * a.conj()).im == 0);
  CHECK(a.norm2() >= 0);
  CHECK(Scalar().norm2() == 0);
  CHECK(to_string(Scalar(Rational(1, 2), Rational(-3, 4))) == "1/2-3/4*i");
  CHECK(to_string(Scalar(Rational(0), Rational(1))) == "i");
  CHECK(to_string(Scalar()) == "0");
}

TEST_CASE("wedge basics") {
  int n = 2;
  CHECK(wedge(dx(n, 1), dx(n, 1)).is_zero());
  CHECK(wedge(dx(n, 1), dx(n, 2)) == parse2(n, {{0b11, Scalar(1)}}));
  // (1+dx)^(1+dy) = 1 + dx + dy + dx^dy
  Multivector a = Multivector::one(n) + dx(n, 1);
  Multivector b = Multivector::one(n) + dx(n, 2);
  Multivector expect = Multivector::one(n) + dx(n, 1) + dx(n, 2) + parse2(n, {{0b11, Scalar(1)}});
  CHECK(wedge(a, b) == expect);
}

TEST_CASE("wedge graded commutativity, exhaustive blades n<=6") {
  for (int n = 1; n <= 6; ++n) {
    for (Blade p = 0; p < (Blade(1) << n); ++p)
      for (Blade q = 0; q < (Blade(1) << n); ++q) {
        Multivector a(n), b(n);
        a.set(p, Scalar(1));
        b.set(q, Scalar(1));
        Multivector ab = wedge(a, b);
        Multivector ba = wedge(b, a);
        int sign = (blade_grade(p) * blade_grade(q)) % 2 ? -1 : 1;
        CHECK(ab == (sign > 0 ? ba : -ba));
      }
  }
}

TEST_CASE("wedge associativity on random triples") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 100; ++it) {
    int n = 4;
    Multivector a = rand_multivector(rng, n), b = rand_multivector(rng, n),
                c = rand_multivector(rng, n);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
  }
}

TEST_CASE("contraction") {
  int n = 2;
  std::vector<Scalar> e1(n), e2(n);
  e1[0] = Scalar(1);
  e2[1] = Scalar(1);
  CHECK(contract(e1, Multivector::one(n)).is_zero());
  CHECK(contract(e1, parse2(n, {{0b11, Scalar(1)}})) == dx(n, 2));
  CHECK(contract(e2, parse2(n, {{0b11, Scalar(1)}})) == -dx(n, 1));
}

TEST_CASE("contraction is a graded derivation and squares to zero") {
  std::mt19937_64 rng(12);
  int n = 5;
  for (int it = 0; it < 200; ++it) {
    std::vector<Scalar> x(n);
    for (auto& v : x) v = rand_scalar(rng);
    int p = std::uniform_int_distribution<int>(0, n)(rng);
    Multivector a = rand_form_of_grade(rng, n, p);
    Multivector b = rand_multivector(rng, n);
    Multivector lhs = contract(x, wedge(a, b));
    Multivector rhs = wedge(contract(x, a), b);
    Multivector second = wedge(a, contract(x, b));
    rhs += (p % 2) ? -second : second;
    CHECK(lhs == rhs);
    CHECK(contract(x, contract(x, b)).is_zero());
  }
}

TEST_CASE("hat involution and signs") {
  int n = 2;
  CHECK(hat(Multivector::one(n)) == Multivector::one(n));
  CHECK(hat(dx(n, 1)) == -dx(n, 1));
  // 1 + dx + dx^dy |-> 1 - dx - dx^dy
  Multivector a = Multivector::one(n) + dx(n, 1) + parse2(n, {{0b11, Scalar(1)}});
  Multivector ex = Multivector::one(n) - dx(n, 1) - parse2(n, {{0b11, Scalar(1)}});
  CHECK(hat(a) == ex);

  std::mt19937_64 rng(13);
  for (int it = 0; it < 1000; ++it) {
    Multivector r = rand_multivector(rng, 6);
    CHECK(hat(hat(r)) == r);
  }
}

TEST_CASE("mukai pairing examples") {
  // no top part
  CHECK(mukai(Multivector::one(2), Multivector::one(2)).is_zero());
  // n=2, omega = dx^dy: <e^{i omega}, e^{-i omega}> = 2i
  Multivector omega = parse2(2, {{0b11, Scalar(1)}});
  Multivector rho = exp_even(omega * Scalar::i());
  Multivector tau = exp_even(omega * (-Scalar::i()));
  CHECK(mukai(rho, tau) == Scalar(Rational(0), Rational(2)));
  CHECK(mukai(dx(2, 1), dx(2, 2)) == Scalar(-1));
  CHECK(mukai(dx(2, 2), dx(2, 1)) == Scalar(1));
}

TEST_CASE("mukai symmetry (-1)^m for n = 2m, exhaustive blade pairs") {
  for (int m = 1; m <= 3; ++m) {
    int n = 2 * m;
    int sign = (m % 2) ? -1 : 1;
    for (Blade p = 0; p < (Blade(1) << n); ++p)
      for (Blade q = 0; q < (Blade(1) << n); ++q) {
        Multivector a(n), b(n);
        a.set(p, Scalar(1));
        b.set(q, Scalar(1));
        Scalar ab = mukai(a, b);
        Scalar ba = mukai(b, a);
        CHECK(ab == (sign > 0 ? ba : -ba));
      }
  }
}

TEST_CASE("exp_even") {
  CHECK(exp_even(Multivector(2)) == Multivector::one(2));
  Multivector b2 = parse2(2, {{0b11, Scalar(1)}});
  CHECK(exp_even(b2) == Multivector::one(2) + b2);
  // n=4: B = dx1^dx2 + dx3^dx4 -> 1 + B + dx1^dx2^dx3^dx4
  Multivector b4 = parse2(4, {{0b0011, Scalar(1)}, {0b1100, Scalar(1)}});
  Multivector expect = Multivector::one(4) + b4 + parse2(4, {{0b1111, Scalar(1)}});
  CHECK(exp_even(b4) == expect);
  CHECK_THROWS_AS(exp_even(Multivector::one(2)), error);
  CHECK_THROWS_AS(exp_even(dx(2, 1)), error);
}

TEST_CASE("exp_even additivity for 2-forms") {
  std::mt19937_64 rng(14);
  for (int it = 0; it < 200; ++it) {
    int n = 5;
    Multivector b1 = rand_form_of_grade(rng, n, 2);
    Multivector b2 = rand_form_of_grade(rng, n, 2);
    CHECK(wedge(exp_even(b1), exp_even(b2)) == exp_even(b1 + b2));
  }
}

TEST_CASE("grade projection") {
  int n = 2;
  Multivector a = Multivector::one(n) + dx(n, 1);
  CHECK(grade_project(a, 0) == Multivector::one(n));
  CHECK(grade_project(dx(n, 1), 2).is_zero());
  Multivector omega = parse2(2, {{0b11, Scalar(1)}});
  Multivector rho = exp_even(omega * Scalar::i());
  CHECK(grade_project(rho, 2) == omega * Scalar::i());
  CHECK_THROWS_AS(grade_project(a, 3), error);
  // sum of projections reassembles
  std::mt19937_64 rng(15);
  Multivector r = rand_multivector(rng, 6);
  Multivector sum(6);
  for (int k = 0; k <= 6; ++k) sum += grade_project(r, k);
  CHECK(sum == r);
}

TEST_CASE("dimension mismatch errors") {
  CHECK_THROWS_AS(wedge(Multivector::one(2), Multivector::one(3)), error);
  std::vector<Scalar> x(2);
  CHECK_THROWS_AS(contract(x, Multivector::one(3)), error);
  CHECK_THROWS_AS(mukai(Multivector::one(2), Multivector::one(3)), error);
}

TEST_CASE("printing round meets the pinned formats") {
  Multivector omega = parse2(2, {{0b11, Scalar(1)}});
  CHECK(to_string(omega) == "dx1^dx2");
  Multivector rho = exp_even(omega * Scalar::i());
  CHECK(to_string(rho) == "1 + i*dx1^dx2");
  CHECK(to_string(Multivector(2)) == "0");
  Multivector mixed = Multivector::one(4) - dx(4, 3) * Scalar(Rational(1, 2));
  CHECK(to_string(mixed) == "1 - 1/2*dx3");
}
