#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bform {

using Rational = mpq_class;

struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Gaussian rational a + b*i. The coefficient field of the whole workbench;
/// every operation is exact, equality is exact, nothing is ever rounded.
struct Scalar {
  Rational re;
  Rational im;

  Scalar() : re(0), im(0) {}
  Scalar(long v) : re(v), im(0) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational r) : re(std::move(r)), im(0) {}  // NOLINT
  Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  bool is_imag() const { return re == 0; }

  Scalar conj() const { return Scalar(re, -im); }
  Rational norm2() const { return re * re + im * im; }

  Scalar operator-() const { return Scalar(-re, -im); }
  Scalar& operator+=(const Scalar& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inv() const {
    Rational n = norm2();
    if (n == 0) throw error("Scalar: division by zero");
    return Scalar(re / n, -im / n);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  // Ordering is lexicographic, used only to keep containers deterministic.
  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }
};

inline std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Canonical printing: "p/q", "r/s*i", "p/q+r/s*i", "p/q-r/s*i", "0".
inline std::string to_string(const Scalar& s) {
  if (s.is_zero()) return "0";
  std::string out;
  if (s.re != 0) out += to_string(s.re);
  if (s.im != 0) {
    Rational a = abs(s.im);
    std::string imag = (a == 1) ? "i" : to_string(a) + "*i";
    if (s.im < 0)
      out += "-" + imag;
    else if (!out.empty())
      out += "+" + imag;
    else
      out += imag;
  }
  return out;
}

inline Rational rational_from_string(const std::string& text) {
  Rational r(text);
  r.canonicalize();
  return r;
}

}  // namespace bform
