#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bform/scalar.hpp"

namespace bform {

// Exponent vector packed 5 bits per variable (12 variables max, degree < 32
// per variable; overflow is checked on multiplication).
using Monomial = std::uint64_t;
constexpr int kMaxVars = 12;
constexpr int kExpBits = 5;
constexpr Monomial kExpMask = (Monomial(1) << kExpBits) - 1;

inline int mono_exp(Monomial m, int var) {
  return static_cast<int>((m >> (var * kExpBits)) & kExpMask);
}
inline Monomial mono_set(Monomial m, int var, int e) {
  m &= ~(kExpMask << (var * kExpBits));
  return m | (Monomial(e) << (var * kExpBits));
}
inline int mono_total_degree(Monomial m) {
  int d = 0;
  for (int v = 0; v < kMaxVars; ++v) d += mono_exp(m, v);
  return d;
}
inline Monomial mono_mul(Monomial a, Monomial b) {
  for (int v = 0; v < kMaxVars; ++v)
    if (mono_exp(a, v) + mono_exp(b, v) > static_cast<int>(kExpMask))
      throw error("polynomial degree overflow");
  return a + b;
}

/// Plain sparse polynomial in x_1..x_n with Scalar coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(Scalar c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_[0] = std::move(c);
  }
  Poly(long c) : Poly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly variable(int var) {
    Poly p;
    p.terms_[mono_set(0, var, 1)] = Scalar(1);
    return p;
  }

  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  }
  Scalar constant_value() const {
    if (!is_constant()) throw error("Poly: not constant");
    return terms_.empty() ? Scalar(0) : terms_.begin()->second;
  }
  int total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, mono_total_degree(m));
    return d;
  }

  void add_term(Monomial m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
  }
  Poly scaled(const Scalar& s) const {
    Poly r;
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  friend bool operator<(const Poly& a, const Poly& b) { return a.terms_ < b.terms_; }

  Poly derivative(int var) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
      int e = mono_exp(m, var);
      if (e == 0) continue;
      r.add_term(mono_set(m, var, e - 1), c * Scalar(long(e)));
    }
    return r;
  }

  Scalar eval(const std::vector<Scalar>& x) const {
    Scalar out;
    for (const auto& [m, c] : terms_) {
      Scalar t = c;
      for (int v = 0; v < kMaxVars; ++v)
        for (int e = 0; e < mono_exp(m, v); ++e) {
          if (v >= static_cast<int>(x.size())) throw error("Poly: eval point too short");
          t *= x[v];
        }
      out += t;
    }
    return out;
  }

 private:
  std::map<Monomial, Scalar> terms_;
};

/// Coefficient ring of the differential layer: polynomial numerator over a
/// polynomial denominator (no gcd reduction; zero tests use the numerator,
/// equality cross-multiplies, so everything stays exact). Plain polynomials
/// are the den = 1 case.
class PolyScalar {
 public:
  PolyScalar() : num_(), den_(Scalar(1)) {}
  PolyScalar(long c) : num_(Scalar(c)), den_(Scalar(1)) {}  // NOLINT
  PolyScalar(Scalar c) : num_(std::move(c)), den_(Scalar(1)) {}  // NOLINT
  PolyScalar(Rational c) : num_(Scalar(std::move(c))), den_(Scalar(1)) {}  // NOLINT
  PolyScalar(Poly p) : num_(std::move(p)), den_(Scalar(1)) {}  // NOLINT
  PolyScalar(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw error("PolyScalar: zero denominator");
    normalize();
  }

  static PolyScalar variable(int var) { return PolyScalar(Poly::variable(var)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Scalar constant_value() const {
    return num_.constant_value() / den_.constant_value();
  }

  PolyScalar operator-() const {
    PolyScalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  friend PolyScalar operator+(const PolyScalar& a, const PolyScalar& b) {
    if (a.den_ == b.den_) return PolyScalar(a.num_ + b.num_, a.den_);
    return PolyScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend PolyScalar operator-(const PolyScalar& a, const PolyScalar& b) {
    return a + (-b);
  }
  friend PolyScalar operator*(const PolyScalar& a, const PolyScalar& b) {
    if (a.is_zero() || b.is_zero()) return PolyScalar();
    return PolyScalar(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend PolyScalar operator/(const PolyScalar& a, const PolyScalar& b) {
    if (b.is_zero()) throw error("PolyScalar: division by zero");
    if (a.is_zero()) return PolyScalar();
    return PolyScalar(a.num_ * b.den_, a.den_ * b.num_);
  }
  PolyScalar& operator+=(const PolyScalar& o) { return *this = *this + o; }
  PolyScalar& operator-=(const PolyScalar& o) { return *this = *this - o; }
  PolyScalar& operator*=(const PolyScalar& o) { return *this = *this * o; }

  friend bool operator==(const PolyScalar& a, const PolyScalar& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const PolyScalar& a, const PolyScalar& b) { return !(a == b); }
  friend bool operator<(const PolyScalar& a, const PolyScalar& b) {
    if (a.num_ != b.num_) return a.num_ < b.num_;
    return a.den_ < b.den_;
  }

  PolyScalar derivative(int var) const {
    if (is_polynomial())
      return PolyScalar(num_.derivative(var).scaled(Scalar(1) / den_.constant_value()));
    return PolyScalar(num_.derivative(var) * den_ - num_ * den_.derivative(var),
                      den_ * den_);
  }

  Scalar eval(const std::vector<Scalar>& x) const {
    Scalar d = den_.eval(x);
    if (d.is_zero()) throw error("PolyScalar: denominator vanishes at sample point");
    return num_.eval(x) / d;
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = Poly(Scalar(1));
      return;
    }
    // exact cancellation of a constant denominator; otherwise make the
    // denominator's leading (lowest-monomial) coefficient 1
    Scalar lead = den_.terms().begin()->second;
    if (!(lead == Scalar(1))) {
      Scalar inv = lead.inv();
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  Poly num_;
  Poly den_;
};

std::string to_string(const Poly& p, int nvars = kMaxVars);
std::string to_string(const PolyScalar& p, int nvars = kMaxVars);

}  // namespace bform
