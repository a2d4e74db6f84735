#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bform/scalar.hpp"

namespace bform {

// A blade is a subset of the generator indices {0..dim-1}, stored as a bit
// mask. Ascending index order is the +1 orientation; every sign in the
// algebra funnels through blade_mul_sign below.
using Blade = std::uint32_t;

constexpr int kMaxDim = 24;  // 12 exterior generators, 24 for Lambda*(V+V*)

inline int blade_grade(Blade b) { return std::popcount(b); }

/// Sign of dx_A ^ dx_B relative to the ascending-order blade A|B.
/// Returns 0 when the blades share an index.
inline int blade_mul_sign(Blade a, Blade b) {
  if (a & b) return 0;
  int swaps = 0;
  Blade rest = b;
  while (rest) {
    int j = std::countr_zero(rest);
    rest &= rest - 1;
    swaps += std::popcount(a >> (j + 1));  // elements of a that j passes
  }
  return (swaps & 1) ? -1 : 1;
}

/// Sign picked up when generator j is pulled out of blade b (j must be in b).
inline int blade_extract_sign(Blade b, int j) {
  return (std::popcount(b & ((Blade(1) << j) - 1)) & 1) ? -1 : 1;
}

/// Sparse element of Lambda* over `dim` generators with exact coefficients.
/// K is Scalar for constant forms and PolyScalar for forms with polynomial
/// coefficients. Zero coefficients are never stored.
template <class K>
class BasicMultivector {
 public:
  BasicMultivector() : dim_(0) {}
  explicit BasicMultivector(int dim) : dim_(check_dim(dim)) {}
  BasicMultivector(int dim, K scalar_part) : dim_(check_dim(dim)) {
    set(0, std::move(scalar_part));
  }

  static BasicMultivector one(int dim) { return BasicMultivector(dim, K(1)); }
  static BasicMultivector basis(int dim, int index) {  // dx_{index+1}
    BasicMultivector v(dim);
    v.set(Blade(1) << index, K(1));
    return v;
  }

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Blade, K>& terms() const { return terms_; }

  K coeff(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? K(0) : it->second;
  }

  void set(Blade b, K v) {
    if (v.is_zero())
      terms_.erase(b);
    else
      terms_[b] = std::move(v);
  }

  void add_term(Blade b, const K& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = terms_.emplace(b, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  BasicMultivector& operator+=(const BasicMultivector& o) {
    require_same_dim(o);
    for (const auto& [b, v] : o.terms_) add_term(b, v);
    return *this;
  }
  BasicMultivector& operator-=(const BasicMultivector& o) {
    require_same_dim(o);
    for (const auto& [b, v] : o.terms_) add_term(b, -v);
    return *this;
  }
  friend BasicMultivector operator+(BasicMultivector a, const BasicMultivector& b) {
    return a += b;
  }
  friend BasicMultivector operator-(BasicMultivector a, const BasicMultivector& b) {
    return a -= b;
  }
  BasicMultivector operator-() const {
    BasicMultivector r(dim_);
    for (const auto& [b, v] : terms_) r.terms_.emplace(b, -v);
    return r;
  }
  BasicMultivector operator*(const K& s) const {
    BasicMultivector r(dim_);
    if (s.is_zero()) return r;
    for (const auto& [b, v] : terms_) r.add_term(b, v * s);
    return r;
  }

  friend bool operator==(const BasicMultivector& a, const BasicMultivector& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const BasicMultivector& a, const BasicMultivector& b) {
    return !(a == b);
  }
  // Deterministic container ordering only.
  friend bool operator<(const BasicMultivector& a, const BasicMultivector& b) {
    if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
    return a.terms_ < b.terms_;
  }

  int min_grade() const {
    int g = dim_ + 1;
    for (const auto& [b, v] : terms_) g = std::min(g, blade_grade(b));
    return is_zero() ? -1 : g;
  }
  int max_grade() const {
    int g = -1;
    for (const auto& [b, v] : terms_) g = std::max(g, blade_grade(b));
    return g;
  }

  void require_same_dim(const BasicMultivector& o) const {
    if (dim_ != o.dim_) throw error("multivector dimension mismatch");
  }

 private:
  static int check_dim(int dim) {
    if (dim < 0 || dim > kMaxDim) throw error("multivector dimension out of range");
    return dim;
  }

  int dim_;
  std::map<Blade, K> terms_;
};

template <class K>
BasicMultivector<K> wedge(const BasicMultivector<K>& a, const BasicMultivector<K>& b) {
  a.require_same_dim(b);
  BasicMultivector<K> r(a.dim());
  for (const auto& [ba, va] : a.terms())
    for (const auto& [bb, vb] : b.terms()) {
      int s = blade_mul_sign(ba, bb);
      if (s == 0) continue;
      K v = va * vb;
      if (s < 0) v = -v;
      r.add_term(ba | bb, v);
    }
  return r;
}

/// Contraction with the tangent vector X (components over the generators):
/// graded derivation of degree -1.
template <class K>
BasicMultivector<K> contract(const std::vector<K>& x, const BasicMultivector<K>& a) {
  if (static_cast<int>(x.size()) != a.dim()) throw error("contract: dimension mismatch");
  BasicMultivector<K> r(a.dim());
  for (const auto& [b, v] : a.terms()) {
    Blade rest = b;
    while (rest) {
      int j = std::countr_zero(rest);
      rest &= rest - 1;
      if (x[j].is_zero()) continue;
      K c = x[j] * v;
      if (blade_extract_sign(b, j) < 0) c = -c;
      r.add_term(b & ~(Blade(1) << j), c);
    }
  }
  return r;
}

/// Grade-p part multiplied by (-1)^{p(p+1)/2}; an involution.
template <class K>
BasicMultivector<K> hat(const BasicMultivector<K>& a) {
  BasicMultivector<K> r(a.dim());
  for (const auto& [b, v] : a.terms()) {
    int p = blade_grade(b) & 3;
    r.set(b, (p == 1 || p == 2) ? -v : v);
  }
  return r;
}

template <class K>
BasicMultivector<K> grade_project(const BasicMultivector<K>& a, int k) {
  if (k < 0 || k > a.dim()) throw error("grade_project: grade out of range");
  BasicMultivector<K> r(a.dim());
  for (const auto& [b, v] : a.terms())
    if (blade_grade(b) == k) r.set(b, v);
  return r;
}

/// Pairing <a,b> = coefficient of the top blade in a ^ hat(b).
template <class K>
K mukai(const BasicMultivector<K>& a, const BasicMultivector<K>& b) {
  a.require_same_dim(b);
  const Blade top = (Blade(1) << a.dim()) - 1;
  K out(0);
  for (const auto& [ba, va] : a.terms()) {
    auto it = b.terms().find(top & ~ba);
    if (it == b.terms().end()) continue;
    int p = blade_grade(it->first) & 3;
    int s = blade_mul_sign(ba, it->first);
    if (p == 1 || p == 2) s = -s;
    if (s > 0)
      out += va * it->second;
    else
      out -= va * it->second;
  }
  return out;
}

/// Finite exponential 1 + B + B^B/2! + ... of a form with only even grades
/// >= 2 (terminates because grades exceed the dimension).
template <class K>
BasicMultivector<K> exp_even(const BasicMultivector<K>& b) {
  for (const auto& [blade, v] : b.terms()) {
    int g = blade_grade(blade);
    if (g == 0 || (g & 1)) throw error("exp_even: argument must have even grades >= 2");
  }
  BasicMultivector<K> r = BasicMultivector<K>::one(b.dim());
  BasicMultivector<K> power = r;
  Rational factorial = 1;
  for (int k = 1; k <= b.dim() / 2; ++k) {
    power = wedge(power, b);
    if (power.is_zero()) break;
    factorial *= k;
    r += power * (K(1) / K(factorial));
  }
  return r;
}

using Multivector = BasicMultivector<Scalar>;

inline Multivector conj(const Multivector& a) {
  Multivector r(a.dim());
  for (const auto& [b, v] : a.terms()) r.set(b, v.conj());
  return r;
}

inline std::string blade_to_string(Blade b, const std::string& stem = "dx") {
  if (b == 0) return "1";
  std::string out;
  while (b) {
    int j = std::countr_zero(b);
    b &= b - 1;
    if (!out.empty()) out += "^";
    out += stem + std::to_string(j + 1);
  }
  return out;
}

inline std::string to_string(const Multivector& a, const std::string& stem = "dx") {
  if (a.is_zero()) return "0";
  // grade-major, then blade order: canonical and reparseable
  std::vector<std::pair<Blade, Scalar>> sorted(a.terms().begin(), a.terms().end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    return blade_grade(x.first) < blade_grade(y.first);
  });
  std::string out;
  for (const auto& [b, v] : sorted) {
    std::string coef = to_string(v);
    std::string term;
    if (b == 0) {
      term = (coef.find_first_of("+-", 1) != std::string::npos) ? "(" + coef + ")" : coef;
      if (!v.is_real() && v.re != 0) term = "(" + coef + ")";
    } else if (coef == "1") {
      term = blade_to_string(b, stem);
    } else if (coef == "-1") {
      term = "-" + blade_to_string(b, stem);
    } else {
      bool composite = coef.find_first_of("+-", 1) != std::string::npos ||
                       (!v.is_real() && v.re != 0);
      term = (composite ? "(" + coef + ")" : coef) + "*" + blade_to_string(b, stem);
    }
    if (out.empty())
      out = term;
    else if (!term.empty() && term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

}  // namespace bform
