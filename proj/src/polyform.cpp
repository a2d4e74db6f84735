#include "bform/polyform.hpp"

#include <algorithm>
#include <sstream>

namespace bform {

PolyForm d(const PolyForm& a) {
  const int n = a.dim();
  PolyForm r(n);
  for (const auto& [blade, coef] : a.terms())
    for (int j = 0; j < n; ++j) {
      PolyScalar dj = coef.derivative(j);
      if (dj.is_zero()) continue;
      Blade bj = Blade(1) << j;
      int s = blade_mul_sign(bj, blade);
      if (s == 0) continue;
      r.add_term(bj | blade, s < 0 ? -dj : dj);
    }
  return r;
}

PolyForm lie_derivative(const PolyVec& x, const PolyForm& a) {
  return contract(x, d(a)) + d(contract(x, a));
}

PolyVec lie_bracket(const PolyVec& x, const PolyVec& y) {
  if (x.size() != y.size()) throw error("lie_bracket: dimension mismatch");
  const int n = static_cast<int>(x.size());
  PolyVec r(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      r[j] += x[i] * y[j].derivative(i) - y[i] * x[j].derivative(i);
  return r;
}

PolySection courant(const PolySection& z0, const PolySection& z1) {
  if (z0.dim != z1.dim) throw error("courant: dimension mismatch");
  const int n = z0.dim;
  PolySection r(n);
  r.tan = lie_bracket(z0.tan, z1.tan);
  PolyForm eta = z1.cot_form(), xi = z0.cot_form();
  PolyForm cot = lie_derivative(z0.tan, eta) - lie_derivative(z1.tan, xi);
  PolyForm half_term = contract(z0.tan, eta) - contract(z1.tan, xi);
  cot -= d(half_term) * PolyScalar(Rational(1, 2));
  for (int j = 0; j < n; ++j) r.cot[j] = cot.coeff(Blade(1) << j);
  return r;
}

PolySection courant_twisted(const PolySection& z0, const PolySection& z1,
                            const PolyForm& h) {
  if (h.dim() != z0.dim) throw error("courant_twisted: dimension mismatch");
  if (!h.is_zero() && (h.min_grade() != 3 || h.max_grade() != 3))
    throw error("courant_twisted: H must be a 3-form");
  if (!d(h).is_zero()) throw error("courant_twisted: dH != 0");
  // twist term i_Y i_X H, oriented to match the B-shear identity
  // [[e^B Z, e^B Z']] = e^B [[Z, Z']]_{dB}
  PolySection r = courant(z0, z1);
  PolyForm extra = contract(z1.tan, contract(z0.tan, h));
  for (int j = 0; j < z0.dim; ++j) r.cot[j] += extra.coeff(Blade(1) << j);
  return r;
}

PolySection b_transform(const PolyForm& b, const PolySection& z) {
  if (b.dim() != z.dim) throw error("b_transform: dimension mismatch");
  PolySection r = z;
  PolyForm ixb = contract(z.tan, b);
  for (int j = 0; j < z.dim; ++j) r.cot[j] += ixb.coeff(Blade(1) << j);
  return r;
}

PolySection b_naturality_residual(const PolySection& z0, const PolySection& z1,
                                  const PolyForm& b) {
  PolySection br = courant(b_transform(b, z0), b_transform(b, z1));
  PolySection back = b_transform(-b, br);
  return back - courant(z0, z1);
}

PolyVec apply_mat(const PolyMat& m, const PolyVec& x) { return m.apply(x); }

PolyVec nijenhuis_classical(const PolyMat& j, const PolyVec& x, const PolyVec& y) {
  const int n = static_cast<int>(x.size());
  if (j.rows() != std::size_t(n) || j.cols() != std::size_t(n))
    throw error("nijenhuis_classical: shape mismatch");
  PolyMat sq = j * j;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (sq(a, b) != (a == b ? PolyScalar(-1) : PolyScalar(0)))
        throw error("nijenhuis_classical: J^2 != -Id");
  PolyVec jx = j.apply(x), jy = j.apply(y);
  PolyVec r = lie_bracket(x, y);
  PolyVec t = lie_bracket(jx, jy);
  for (int k = 0; k < n; ++k) r[k] -= t[k];
  PolyVec inner = lie_bracket(jx, y);
  PolyVec inner2 = lie_bracket(x, jy);
  for (int k = 0; k < n; ++k) inner[k] += inner2[k];
  PolyVec jinner = j.apply(inner);
  for (int k = 0; k < n; ++k) r[k] += jinner[k];
  return r;
}

PolySection apply_endo(const PolyMat& j, const PolySection& z) {
  const int n = z.dim;
  if (j.rows() != std::size_t(2 * n)) throw error("apply_endo: shape mismatch");
  PolyVec coords(2 * n);
  for (int k = 0; k < n; ++k) {
    coords[k] = z.tan[k];
    coords[n + k] = z.cot[k];
  }
  PolyVec img = j.apply(coords);
  PolySection r(n);
  for (int k = 0; k < n; ++k) {
    r.tan[k] = img[k];
    r.cot[k] = img[n + k];
  }
  return r;
}

namespace {

GenEndo eval_endo(const PolyMat& j, const std::vector<Scalar>& x) {
  SMat m(j.rows(), j.cols());
  for (std::size_t a = 0; a < j.rows(); ++a)
    for (std::size_t b = 0; b < j.cols(); ++b) m(a, b) = j(a, b).eval(x);
  return {static_cast<int>(j.rows() / 2), std::move(m)};
}

}  // namespace

PolySection gen_nijenhuis(const PolyMat& j, const PolySection& z0,
                          const PolySection& z1) {
  const int n = z0.dim;
  if (j.rows() != std::size_t(2 * n)) throw error("gen_nijenhuis: shape mismatch");
  // pointwise validation at generic sample points
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<Scalar> x;
    for (int attempt = 0; attempt < 64; ++attempt) {
      x = sample_point(n, rng);
      bool ok = true;
      try {
        GenEndo je = eval_endo(j, x);
        if (!je.squares_to(-1) || !je.is_isometry()) ok = false;
        if (!ok) throw error("gen_nijenhuis: J fails pointwise validation");
        break;
      } catch (const error& e) {
        if (std::string(e.what()).find("denominator") != std::string::npos && attempt + 1 < 64)
          continue;  // resample away from poles
        throw;
      }
    }
  }
  PolySection jz0 = apply_endo(j, z0), jz1 = apply_endo(j, z1);
  PolySection r = courant(z0, z1) - courant(jz0, jz1);
  PolySection mixed = courant(z0, jz1) + courant(jz0, z1);
  return r + apply_endo(j, mixed);
}

PolyMat gcs_field_from_omega(const PolyForm& omega) {
  const int n = omega.dim();
  if (!omega.is_zero() && (omega.min_grade() != 2 || omega.max_grade() != 2))
    throw error("gcs_field_from_omega: not a 2-form");
  PolyMat w(n, n);
  for (const auto& [blade, v] : omega.terms()) {
    int i = std::countr_zero(blade);
    int j2 = std::countr_zero(blade & (blade - 1));
    w(j2, i) = v;
    w(i, j2) = -v;
  }
  auto winv = w.inverse();
  if (!winv) throw error("gcs_field_from_omega: omega is degenerate");
  PolyMat m(2 * n, 2 * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      m(a, n + b) = (*winv)(a, b);
      m(n + a, b) = -w(a, b);
    }
  return m;
}

PolyMat gcs_field_from_J(const PolyMat& j) {
  const int n = static_cast<int>(j.rows());
  PolyMat m(2 * n, 2 * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      m(a, b) = -j(a, b);
      m(n + a, n + b) = j(b, a);
    }
  return m;
}

Multivector eval_form(const PolyForm& a, const std::vector<Scalar>& x) {
  Multivector r(a.dim());
  for (const auto& [b, v] : a.terms()) r.set(b, v.eval(x));
  return r;
}

PolyForm constant_form(const Multivector& a) {
  PolyForm r(a.dim());
  for (const auto& [b, v] : a.terms()) r.set(b, PolyScalar(v));
  return r;
}

bool is_constant(const PolyForm& a) {
  for (const auto& [b, v] : a.terms())
    if (!v.is_constant()) return false;
  return true;
}

Multivector constant_value(const PolyForm& a) {
  Multivector r(a.dim());
  for (const auto& [b, v] : a.terms()) r.set(b, v.constant_value());
  return r;
}

std::vector<Scalar> sample_point(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-8, 8);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Scalar> x(n);
  for (int j = 0; j < n; ++j) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    x[j] = Scalar(std::move(r));
  }
  return x;
}

StructureReport courant_closure(const std::vector<PolySection>& frame,
                                std::uint64_t seed, int npoints) {
  StructureReport r;
  r.kind = "Courant closure";
  r.accept = true;
  if (frame.empty()) throw error("courant_closure: empty frame");
  const int n = frame.front().dim;
  std::mt19937_64 rng(seed);

  std::vector<std::vector<Scalar>> points;
  for (int p = 0; p < npoints; ++p) {
    // resample until the frame evaluates cleanly and is independent
    for (int attempt = 0;; ++attempt) {
      std::vector<Scalar> x = sample_point(n, rng);
      try {
        SMat m(frame.size(), 2 * n);
        for (std::size_t i = 0; i < frame.size(); ++i) {
          GenVector z = frame[i].eval(x);
          for (int j = 0; j < n; ++j) {
            m(i, j) = z.tan[j];
            m(i, n + j) = z.cot[j];
          }
        }
        if (m.rank() != frame.size()) {
          if (attempt > 32) throw error("courant_closure: degenerate frame");
          continue;
        }
        points.push_back(std::move(x));
        break;
      } catch (const error&) {
        if (attempt > 32) throw;
      }
    }
  }

  for (std::size_t i = 0; i < frame.size(); ++i)
    for (std::size_t j = i + 1; j < frame.size(); ++j) {
      PolySection br = courant(frame[i], frame[j]);
      for (const auto& x : points) {
        SMat m(frame.size() + 1, 2 * n);
        for (std::size_t k = 0; k < frame.size(); ++k) {
          GenVector z = frame[k].eval(x);
          for (int a = 0; a < n; ++a) {
            m(k, a) = z.tan[a];
            m(k, n + a) = z.cot[a];
          }
        }
        GenVector zb = br.eval(x);
        for (int a = 0; a < n; ++a) {
          m(frame.size(), a) = zb.tan[a];
          m(frame.size(), n + a) = zb.cot[a];
        }
        if (m.rank() != frame.size()) {
          std::string witness = "pair (" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ") at " + "(";
          for (std::size_t a = 0; a < x.size(); ++a)
            witness += (a ? ", " : "") + to_string(x[a]);
          witness += ")";
          r.add("bracket in span", false, witness);
          return r;
        }
      }
    }
  r.add("all frame brackets lie in the span at all sample points", true);
  r.put("pairs", std::to_string(frame.size() * (frame.size() - 1) / 2));
  r.put("points", std::to_string(npoints));
  return r;
}

StructureReport integrability_report(const FieldStructure& f, std::uint64_t seed) {
  StructureReport r;
  r.accept = true;
  const int n = f.dim;
  switch (f.kind) {
    case FieldKind::GcyForm:
    case FieldKind::GcyPair: {
      r.kind = "generalised Calabi-Yau field";
      PolyForm d0 = d(f.rho0);
      r.add("d rho0 = 0", d0.is_zero(), d0.is_zero() ? "" : to_string(d0, n));
      if (f.kind == FieldKind::GcyPair) {
        PolyForm d1 = d(f.rho1);
        r.add("d rho1 = 0", d1.is_zero(), d1.is_zero() ? "" : to_string(d1, n));
      }
      break;
    }
    case FieldKind::Symplectic: {
      r.kind = "symplectic field";
      PolyForm dw = d(f.omega);
      r.add("d omega = 0", dw.is_zero(), dw.is_zero() ? "" : to_string(dw, n));
      break;
    }
    case FieldKind::Complex: {
      r.kind = "almost complex field";
      bool all_zero = true;
      std::string witness;
      for (int a = 0; a < n && all_zero; ++a)
        for (int b = a + 1; b < n; ++b) {
          PolyVec x(n), y(n);
          x[a] = PolyScalar(1);
          y[b] = PolyScalar(1);
          PolyVec nj = nijenhuis_classical(f.j, x, y);
          bool zero = true;
          for (const auto& c : nj)
            if (!c.is_zero()) zero = false;
          if (!zero) {
            all_zero = false;
            witness = "frame pair (" + std::to_string(a + 1) + "," +
                      std::to_string(b + 1) + ")";
            break;
          }
        }
      r.add("Nijenhuis tensor vanishes on frames", all_zero, witness);
      break;
    }
    case FieldKind::Gcs: {
      r.kind = "generalised complex field";
      bool all_zero = true;
      std::string witness;
      std::vector<PolySection> frames;
      for (int a = 0; a < n; ++a) frames.push_back(PolySection::tangent(n, a));
      for (int a = 0; a < n; ++a) frames.push_back(PolySection::cotangent(n, a));
      for (std::size_t a = 0; a < frames.size() && all_zero; ++a)
        for (std::size_t b = a + 1; b < frames.size(); ++b) {
          PolySection nj = gen_nijenhuis(f.j, frames[a], frames[b]);
          if (!nj.is_zero()) {
            all_zero = false;
            witness = "frame pair (" + std::to_string(a + 1) + "," +
                      std::to_string(b + 1) + "): " + to_string(nj);
            break;
          }
        }
      r.add("generalised Nijenhuis vanishes on frames", all_zero, witness);
      // empirical tensoriality: N(f Z, Z') - f N(Z, Z') at sample points
      std::mt19937_64 rng(seed);
      PolyScalar fmul = PolyScalar(1) + PolyScalar::variable(0);
      bool tensorial = true;
      std::string tw;
      for (int a = 0; a < std::min(n, 3) && tensorial; ++a)
        for (int b = 0; b < std::min(n, 3); ++b) {
          PolySection za = PolySection::tangent(n, a);
          PolySection zb = PolySection::cotangent(n, b);
          PolySection lhs = gen_nijenhuis(f.j, za * fmul, zb);
          PolySection rhs = gen_nijenhuis(f.j, za, zb) * fmul;
          PolySection diff = lhs - rhs;
          for (int p = 0; p < 3; ++p) {
            for (int attempt = 0; attempt < 32; ++attempt) {
              try {
                if (!diff.eval(sample_point(n, rng)).is_zero()) {
                  tensorial = false;
                  tw = "pair (e" + std::to_string(a + 1) + ", dx" +
                       std::to_string(b + 1) + ") with multiplier 1+x1";
                }
                break;
              } catch (const error&) {
                continue;
              }
            }
            if (!tensorial) break;
          }
          if (!tensorial) break;
        }
      if (tensorial)
        r.add("tensoriality (empirical, function-multiplied frames)", true);
      else
        r.notes.push_back("anomalous non-tensorial residue: " + tw);
      break;
    }
  }
  return r;
}

std::string to_string(const PolyForm& a, int nvars) {
  if (a.is_zero()) return "0";
  std::vector<std::pair<Blade, PolyScalar>> sorted(a.terms().begin(), a.terms().end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    return blade_grade(x.first) < blade_grade(y.first);
  });
  std::string out;
  for (const auto& [b, v] : sorted) {
    std::string coef = to_string(v, nvars);
    std::string term;
    bool composite = coef.find_first_of("+-", 1) != std::string::npos ||
                     coef.find('/') != std::string::npos;
    if (b == 0)
      term = composite ? "(" + coef + ")" : coef;
    else if (coef == "1")
      term = blade_to_string(b);
    else if (coef == "-1")
      term = "-" + blade_to_string(b);
    else
      term = (composite ? "(" + coef + ")" : coef) + "*" + blade_to_string(b);
    if (out.empty())
      out = term;
    else if (!term.empty() && term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

std::string to_string(const PolySection& z) {
  PolyForm tan(z.dim), cot(z.dim);
  for (int j = 0; j < z.dim; ++j) {
    tan.set(Blade(1) << j, z.tan[j]);
    cot.set(Blade(1) << j, z.cot[j]);
  }
  std::string t = to_string(tan, z.dim);
  std::string c = to_string(cot, z.dim);
  // tangent legs print as e1..en
  for (int j = z.dim; j >= 1; --j) {
    std::string from = "dx" + std::to_string(j);
    std::string to = "e" + std::to_string(j);
    std::size_t pos = 0;
    while ((pos = t.find(from, pos)) != std::string::npos) {
      t.replace(pos, from.size(), to);
      pos += to.size();
    }
  }
  if (t == "0") return c;
  if (c == "0") return t;
  return t + " + " + c;
}

}  // namespace bform
