#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bform/genvector.hpp"
#include "bform/matrix.hpp"
#include "util.hpp"

using namespace bform;
using namespace bform::testutil;

namespace {

SMat rand_mat(std::mt19937_64& rng, int r, int c) {
  SMat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = rand_scalar(rng, 3);
  return m;
}

}  // namespace

TEST_CASE("rref produces unit pivots and kernel solves") {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 50; ++it) {
    SMat m = rand_mat(rng, 4, 7);
    SMat ker = m.kernel();
    CHECK(ker.rows() + m.rank() == 7);
    for (std::size_t r = 0; r < ker.rows(); ++r) {
      std::vector<Scalar> v(7);
      for (int j = 0; j < 7; ++j) v[j] = ker(r, j);
      auto img = m.apply(v);
      for (const auto& s : img) CHECK(s.is_zero());
    }
  }
}

TEST_CASE("inverse and det") {
  std::mt19937_64 rng(22);
  for (int it = 0; it < 30; ++it) {
    SMat m = rand_mat(rng, 5, 5);
    auto inv = m.inverse();
    if (m.det().is_zero()) {
      CHECK(!inv);
      continue;
    }
    REQUIRE(inv);
    CHECK(*inv * m == SMat::identity(5));
    CHECK(m * *inv == SMat::identity(5));
  }
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 30; ++it) {
    SMat a = rand_mat(rng, 4, 4), b = rand_mat(rng, 4, 4);
    CHECK(a.det() * b.det() == (a * b).det());
  }
}

TEST_CASE("definiteness by exact pivots with witnesses") {
  // positive definite
  std::mt19937_64 rng(24);
  for (int it = 0; it < 25; ++it) {
    SMat a = rand_mat(rng, 4, 4);
    SMat h = a * conj_transpose(a) + SMat::identity(4);  // pos def hermitian
    auto def = check_definite(h, true);
    CHECK(def.positive);
    auto neg = check_definite(-h, false);
    CHECK(neg.negative);
    // h is not negative definite; the witness certifies it
    auto bad = check_definite(h, false);
    CHECK(!bad.negative);
    REQUIRE(!bad.witness.empty());
    // w* h w = witness_value >= 0
    Scalar val;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) val += bad.witness[i].conj() * h(i, j) * bad.witness[j];
    CHECK(val == Scalar(bad.witness_value));
  }

  SMat indef(2, 2);
  indef(0, 0) = Scalar(1);
  indef(1, 1) = Scalar(-1);
  auto d = check_definite(indef, true);
  CHECK(!d.positive);
  CHECK(d.witness_value <= 0);
}

TEST_CASE("split pairing has signature (n,n) and quadratic form xi(X)") {
  int n = 3;
  std::mt19937_64 rng(25);
  for (int it = 0; it < 50; ++it) {
    GenVector z = rand_genvector(rng, n);
    Scalar q = split_pairing(z, z);
    Scalar expect;
    for (int j = 0; j < n; ++j) expect += z.cot[j] * z.tan[j];
    CHECK(q == expect);
  }
  GenVector a(n), b(n);
  a.tan[0] = Scalar(1);
  a.cot[0] = Scalar(1);  // e1 + dx1
  CHECK(split_pairing(a, a) == Scalar(1));
  b.cot[1] = Scalar(1);  // dx2
  GenVector e1(n);
  e1.tan[0] = Scalar(1);
  CHECK(split_pairing(e1, b).is_zero());
  GenVector dx1(n);
  dx1.cot[0] = Scalar(1);
  CHECK(split_pairing(e1, dx1) == Scalar(Rational(1, 2)));
}

TEST_CASE("subspace echelon canonicalization, meet and conj") {
  int n = 2;
  std::mt19937_64 rng(26);
  for (int it = 0; it < 30; ++it) {
    // same span, different generators -> identical canonical form
    GenVector u = rand_genvector(rng, n), v = rand_genvector(rng, n);
    Subspace s1 = Subspace::span(n, {u, v});
    GenVector w = u + v * Scalar(3);
    Subspace s2 = Subspace::span(n, {w, v, u});
    CHECK(s1 == s2);
    CHECK(meet(s1, s2) == s1);
  }
  GenVector e1(n), dx1(n);
  e1.tan[0] = Scalar(1);
  dx1.cot[0] = Scalar(1);
  Subspace a = Subspace::span(n, {e1});
  Subspace b = Subspace::span(n, {dx1});
  CHECK(meet(a, b).rank() == 0);

  // conj of a complex span
  GenVector zc = e1 * Scalar::i() + dx1;
  Subspace c = Subspace::span(n, {zc});
  Subspace cc = c.conj();
  GenVector expect = e1 * (-Scalar::i()) + dx1;
  CHECK(cc.contains(expect));
  CHECK(!cc.contains(zc));
}
