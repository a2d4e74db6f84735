#pragma once

#include <utility>
#include <vector>

#include "bform/genvector.hpp"
#include "bform/multivector.hpp"

namespace bform {

/// Element of Lambda*(V+V*) over 2n generators, ordered e_1..e_n, f_1..f_n
/// (f_i the cotangent duals). Carries the images of spinor products.
using GenMultivector = BasicMultivector<Scalar>;

/// Clifford action (X+xi) . rho = -X _| rho + xi ^ rho. Squares to
/// -(Z,Z) Id and reverses parity.
Multivector clifford_act(const GenVector& z, const Multivector& rho);

/// Oracle for <Z.rho, tau> = <rho, Z.tau> (dim must be even).
bool self_adjointness_check(const GenVector& z, const Multivector& rho,
                            const Multivector& tau);

struct Annihilator {
  Subspace space;
  bool pure = false;  // rank == n
};

/// Kernel of Z |-> Z . rho, echelonized. rho must be nonzero.
Annihilator annihilator(const Multivector& rho);

/// Type of a pure form: the corank n - dim pi(W) of the tangent projection
/// of its annihilator (0 = symplectic-like, m = complex-like, additive
/// under products).
int type_of(const Multivector& rho);
int type_of(const Subspace& w);

/// Image of rho (x) tau in Lambda*(V+V*) under the canonical isomorphism of
/// spinor products with multivectors. Calibration (frozen in
/// docs/conventions.md): spinor_outer(1,1) = e_1^...^e_n and the degree-0
/// coefficient equals mukai(tau, rho)/2^n.
GenMultivector spinor_outer(const Multivector& rho, const Multivector& tau);

/// rank(W_rho cap W_tau) for pure rho, tau. Equals the lowest nonzero
/// degree of spinor_outer(rho, tau) (checked in the test suite).
int lowest_degree(const Multivector& rho, const Multivector& tau);

/// A k-dimensional subspace of the 2^n-dimensional form space, echelonized
/// over the blade coordinates. Used for the U_k decomposition.
struct FormSpan {
  int dim = 0;   // number of generators n
  SMat rows;     // k x 2^n, RREF

  static FormSpan span(int n, const std::vector<Multivector>& gens);
  std::size_t rank() const { return rows.rows(); }
  bool contains(const Multivector& a) const;
  friend bool operator==(const FormSpan& a, const FormSpan& b) {
    return a.dim == b.dim && a.rows == b.rows;
  }
};

/// U_0 = span(rho), U_k = span of k-fold Clifford actions of conj(W_rho)
/// on rho. Requires rho pure with mukai(rho, conj rho) != 0; the dims are
/// binomial(n,k) and the sum exhausts the form space.
std::vector<FormSpan> uk_decompose(const Multivector& rho);

}  // namespace bform
