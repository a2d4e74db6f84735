#pragma once

#include <random>

#include "bform/clifford.hpp"
#include "bform/genvector.hpp"
#include "bform/multivector.hpp"

namespace bform::testutil {

inline Rational rand_rational(std::mt19937_64& rng, int span = 6) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, 3);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Scalar rand_scalar(std::mt19937_64& rng, int span = 6) {
  return Scalar(rand_rational(rng, span), rand_rational(rng, span));
}

inline Scalar rand_real(std::mt19937_64& rng, int span = 6) {
  return Scalar(rand_rational(rng, span));
}

inline Multivector rand_multivector(std::mt19937_64& rng, int n, int max_terms = 6) {
  Multivector a(n);
  std::uniform_int_distribution<Blade> blade(0, (Blade(1) << n) - 1);
  std::uniform_int_distribution<int> count(1, max_terms);
  int terms = count(rng);
  for (int k = 0; k < terms; ++k) a.add_term(blade(rng), rand_scalar(rng));
  return a;
}

inline Multivector rand_form_of_grade(std::mt19937_64& rng, int n, int grade,
                                      bool real = false) {
  Multivector a(n);
  for (Blade b = 0; b < (Blade(1) << n); ++b)
    if (blade_grade(b) == grade)
      a.set(b, real ? rand_real(rng, 3) : rand_scalar(rng, 3));
  return a;
}

inline GenVector rand_genvector(std::mt19937_64& rng, int n, bool real = false) {
  GenVector z(n);
  for (int j = 0; j < n; ++j) {
    z.tan[j] = real ? rand_real(rng) : rand_scalar(rng);
    z.cot[j] = real ? rand_real(rng) : rand_scalar(rng);
  }
  return z;
}

/// Random pure form e^beta ^ theta_1 ^ ... ^ theta_k; purity re-verified via
/// the annihilator rank, retrying degenerate draws.
inline Multivector rand_pure_form(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> kdist(0, n);
  for (;;) {
    int k = kdist(rng);
    Multivector rho = exp_even(rand_form_of_grade(rng, n, 2));
    for (int j = 0; j < k; ++j) {
      Multivector theta(n);
      for (int a = 0; a < n; ++a) theta.set(Blade(1) << a, rand_scalar(rng, 2));
      rho = wedge(rho, theta);
    }
    if (rho.is_zero()) continue;
    if (annihilator(rho).pure) return rho;
  }
}

}  // namespace bform::testutil
