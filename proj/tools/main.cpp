// Command-line front end: parses form/section expressions, dispatches the
// classification and verification commands, and emits human or JSON reports.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bform/clifford.hpp"
#include "bform/operators.hpp"
#include "bform/parser.hpp"
#include "bform/polyform.hpp"
#include "bform/structures.hpp"
#include "bform/tmspinor.hpp"
#include "report.hpp"

namespace bform::cli {
namespace {

std::string resolve_arg(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw error("cannot open file: " + arg.substr(1));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

struct Common {
  int dim = 0;
  bool json = false;
  bool no_timing = false;
  bool strict = false;
  std::uint64_t seed = 1;
  int degree = 3;
  std::string model = "kahler";

  ReportOptions report_options() const { return {json, !no_timing}; }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--dim", c.dim, "dimension n (default: inferred)");
  cmd->add_flag("--json", c.json, "emit a JSON report");
  cmd->add_flag("--no-timing", c.no_timing, "omit the elapsed_ms field");
  cmd->add_option("--seed", c.seed, "seed for sample-point based checks");
}

Multivector parse_constant(const std::string& text, int dim) {
  return parse_expr(resolve_arg(text), dim).as_multivector();
}

// classify / gcy on possibly polynomial input
StructureReport classify_form(const Parsed& p, std::uint64_t seed) {
  if (is_constant(p.form)) {
    StructureReport r = gcy_check(constant_value(p.form));
    r.add("d rho = 0", true, "constant coefficients");
    return r;
  }
  // pointwise verdict at a sample point + integrability of the field
  std::mt19937_64 rng(seed);
  Multivector at_point = eval_form(p.form, sample_point(p.dim, rng));
  StructureReport r = gcy_check(at_point);
  r.kind = "generalised Calabi-Yau field";
  PolyForm dr = d(p.form);
  r.add("d rho = 0", dr.is_zero(), dr.is_zero() ? "" : to_string(dr, p.dim));
  r.notes.push_back("pointwise verdict at a random sample point; d rho tested symbolically");
  return r;
}

GenEndo structure_arg(const std::string& spec, int dim) {
  if (spec == "jstd" || spec == "j:std") {
    if (dim % 2) throw error("jstd requires even dimension");
    SMat j(dim, dim);
    for (int k = 0; k + 1 < dim; k += 2) {
      j(k + 1, k) = Scalar(1);
      j(k, k + 1) = Scalar(-1);
    }
    return gcs_from_J(j);
  }
  if (spec.rfind("omega:", 0) == 0)
    return gcs_from_omega(parse_constant(spec.substr(6), dim));
  throw error("structure argument must be 'jstd' or 'omega:<expr>', got '" + spec + "'");
}

int run(int argc, char** argv) {
  CLI::App app{"exact workbench for generalised geometry with B-fields"};
  app.require_subcommand(1);
  Common c;

  std::string expr_a, expr_b, expr_h, expr_bfield, expr_omega;
  std::string struct0, struct1;
  std::string t_str = "1";
  int k_param = 1;
  bool jstd_flag = false;
  int mdim = 1;

  auto* pair = app.add_subcommand("pair", "Mukai pairing <a, b> of two forms");
  add_common(pair, c);
  pair->add_option("a", expr_a, "first form")->required();
  pair->add_option("b", expr_b, "second form")->required();

  auto* ann = app.add_subcommand("annihilator", "annihilator of a form, purity and type");
  add_common(ann, c);
  ann->add_option("rho", expr_a, "form")->required();

  auto* cls = app.add_subcommand("classify", "generalised Calabi-Yau check of a form");
  add_common(cls, c);
  cls->add_option("rho", expr_a, "form (constant or polynomial)")->required();

  auto* trans = app.add_subcommand("transform", "B-field transform e^B ^ rho");
  add_common(trans, c);
  trans->add_option("--b", expr_bfield, "B (2-form)")->required();
  trans->add_option("rho", expr_a, "form")->required();

  auto* kah = app.add_subcommand("kahler", "generalised Kähler check of a structure pair");
  add_common(kah, c);
  kah->add_option("j0", struct0, "jstd | omega:<expr>")->required();
  kah->add_option("j1", struct1, "jstd | omega:<expr>")->required();
  kah->add_option("--b", expr_bfield, "conjugate both structures by e^B");

  auto* su = app.add_subcommand("su", "generalised SU(m) check of a form pair");
  add_common(su, c);
  su->add_flag("--strict-normalization", c.strict, "require lambda = 1");
  su->add_option("rho0", expr_a, "first pure form")->required();
  su->add_option("rho1", expr_b, "second pure form")->required();

  auto* cour = app.add_subcommand("courant", "Courant bracket of two sections");
  add_common(cour, c);
  cour->add_option("z0", expr_a, "section")->required();
  cour->add_option("z1", expr_b, "section")->required();
  cour->add_option("--twist", expr_h, "closed 3-form twist H");

  auto* nij = app.add_subcommand("nijenhuis", "integrability via Nijenhuis tensors");
  add_common(nij, c);
  nij->add_option("--omega", expr_omega, "2-form field defining J_omega");
  nij->add_flag("--jstd", jstd_flag, "classical standard J");

  auto* vt = app.add_subcommand("verify-tables", "verify the operator commutator tables");
  add_common(vt, c);
  vt->add_option("--model", c.model, "riemannian | kahler | symplectic")->required();
  vt->add_option("--m", mdim, "complex dimension m (n = 2m); n = m for riemannian");
  vt->add_option("--degree", c.degree, "coefficient degree bound (default 3)");

  auto* interp = app.add_subcommand("interpolate", "family t^k exp(omega_c / t)");
  add_common(interp, c);
  interp->add_option("--t", t_str, "nonzero rational parameter")->required();
  interp->add_option("--k", k_param, "truncation order (default 1)");
  interp->add_option("omega_c", expr_a, "complex 2-form")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitAccept : kExitUsage;
  }

  auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start)
        .count();
  };

  try {
    if (*pair) {
      Multivector a = parse_constant(expr_a, c.dim);
      Multivector b = parse_constant(expr_b, a.dim());
      Json rep = report_skeleton("pair", {expr_a, expr_b});
      rep["verdict"] = "accept";
      rep["result"] = to_string(mukai(a, b));
      return emit(rep, c.report_options(), elapsed());
    }
    if (*ann) {
      Multivector rho = parse_constant(expr_a, c.dim);
      Annihilator a = annihilator(rho);
      Json rep = report_skeleton("annihilator", {expr_a});
      rep["verdict"] = "accept";
      rep["rank"] = a.space.rank();
      rep["pure"] = a.pure;
      Json rows = Json::array();
      for (std::size_t i = 0; i < a.space.rank(); ++i)
        rows.push_back(to_string(a.space.basis_vector(i)));
      rep["basis"] = rows;
      if (a.pure) {
        rep["type"] = type_of(a.space);
        if (mukai(rho, conj(rho)).is_zero()) {
          rep["formal_type"] = true;
          rep["notes"] = {"formal type (no GCS induced)"};
        }
        rep["isotropic"] = a.space.is_isotropic();
      }
      return emit(rep, c.report_options(), elapsed());
    }
    if (*cls) {
      Parsed p = parse_expr(resolve_arg(expr_a), c.dim);
      StructureReport r = classify_form(p, c.seed);
      Json rep = report_skeleton("classify", {expr_a});
      fill_report(rep, r);
      return emit(rep, c.report_options(), elapsed());
    }
    if (*trans) {
      Parsed pb = parse_expr(resolve_arg(expr_bfield), c.dim);
      Parsed pr = parse_expr(resolve_arg(expr_a), pb.dim > c.dim ? pb.dim : c.dim);
      int n = std::max(pb.dim, pr.dim);
      PolyForm b = parse_expr(resolve_arg(expr_bfield), n).as_polyform();
      PolyForm rho = parse_expr(resolve_arg(expr_a), n).as_polyform();
      PolyForm out = wedge(exp_even(b), rho);
      Json rep = report_skeleton("transform", {expr_bfield, expr_a});
      rep["verdict"] = "accept";
      rep["result"] = is_constant(out) ? to_string(constant_value(out))
                                       : to_string(out, n);
      return emit(rep, c.report_options(), elapsed());
    }
    if (*kah) {
      if (c.dim == 0) throw error("kahler requires --dim");
      GenEndo j0 = structure_arg(struct0, c.dim);
      GenEndo j1 = structure_arg(struct1, c.dim);
      if (!expr_bfield.empty()) {
        Multivector b = parse_constant(expr_bfield, c.dim);
        j0 = conjugate_by(j0, b);
        j1 = conjugate_by(j1, b);
      }
      StructureReport r = gen_kahler_check(j0, j1);
      Json rep = report_skeleton("kahler", {struct0, struct1});
      fill_report(rep, r);
      return emit(rep, c.report_options(), elapsed());
    }
    if (*su) {
      Multivector rho0 = parse_constant(expr_a, c.dim);
      Multivector rho1 = parse_constant(expr_b, rho0.dim());
      StructureReport r = su_check(rho0, rho1, {c.strict});
      Json rep = report_skeleton("su", {expr_a, expr_b});
      fill_report(rep, r);
      return emit(rep, c.report_options(), elapsed());
    }
    if (*cour) {
      Parsed p0 = parse_expr(resolve_arg(expr_a), c.dim);
      int n = p0.dim;
      if (!expr_h.empty()) n = std::max(n, parse_expr(resolve_arg(expr_h), c.dim).dim);
      n = std::max(n, parse_expr(resolve_arg(expr_b), c.dim).dim);
      PolySection z0 = parse_expr(resolve_arg(expr_a), n).as_section();
      PolySection z1 = parse_expr(resolve_arg(expr_b), n).as_section();
      PolySection out = expr_h.empty()
                            ? courant(z0, z1)
                            : courant_twisted(z0, z1,
                                              parse_expr(resolve_arg(expr_h), n).as_polyform());
      Json rep = report_skeleton("courant", {expr_a, expr_b});
      rep["verdict"] = "accept";
      rep["result"] = to_string(out);
      return emit(rep, c.report_options(), elapsed());
    }
    if (*nij) {
      Json rep = report_skeleton("nijenhuis", {});
      if (!expr_omega.empty()) {
        PolyForm omega = parse_expr(resolve_arg(expr_omega), c.dim).as_polyform();
        int n = omega.dim();
        FieldStructure f;
        f.kind = FieldKind::Gcs;
        f.dim = n;
        f.j = gcs_field_from_omega(omega);
        StructureReport r = integrability_report(f, c.seed);
        // agreement with the Courant closure of the annihilator frame
        std::vector<PolySection> frame;
        for (int j = 0; j < n; ++j) {
          PolySection z = PolySection::tangent(n, j);
          PolyForm ix = contract(z.tan, omega);
          for (int k = 0; k < n; ++k)
            z.cot[k] = ix.coeff(Blade(1) << k) * PolyScalar(Scalar::i());
          frame.push_back(z);
        }
        StructureReport cc = courant_closure(frame, c.seed);
        r.add("agrees with Courant closure of the annihilator frame",
              cc.accept == r.conditions.front().pass);
        PolyForm dw = d(omega);
        r.add("d omega = 0 matches the verdict",
              dw.is_zero() == r.conditions.front().pass);
        rep["input"] = {expr_omega};
        fill_report(rep, r);
      } else if (jstd_flag) {
        if (c.dim == 0 || c.dim % 2) throw error("--jstd requires an even --dim");
        int n = c.dim;
        PolyMat j0(n, n);
        for (int k = 0; k + 1 < n; k += 2) {
          j0(k + 1, k) = PolyScalar(1);
          j0(k, k + 1) = PolyScalar(-1);
        }
        FieldStructure f;
        f.kind = FieldKind::Complex;
        f.dim = n;
        f.j = j0;
        StructureReport r = integrability_report(f, c.seed);
        rep["input"] = {"jstd"};
        fill_report(rep, r);
      } else {
        throw error("nijenhuis requires --omega or --jstd");
      }
      return emit(rep, c.report_options(), elapsed());
    }
    if (*vt) {
      Model model = model_from_string(c.model);
      int n = model == Model::Riemannian ? mdim : 2 * mdim;
      StructureReport all;
      all.accept = true;
      all.kind = "commutator tables (" + c.model + ", n = " + std::to_string(n) + ")";
      for (const auto& table : tables_for_model(model)) {
        StructureReport r = verify_table(table, n, c.degree);
        for (auto& cond : r.conditions)
          all.add(table.name + ": " + cond.name, cond.pass, cond.witness);
      }
      all.put("degree bound", std::to_string(c.degree));
      Json rep = report_skeleton("verify-tables", {c.model});
      fill_report(rep, all);
      return emit(rep, c.report_options(), elapsed());
    }
    if (*interp) {
      Rational t = rational_from_string(t_str);
      Multivector omega_c = parse_constant(expr_a, c.dim);
      Multivector rho = interpolation_family(omega_c, k_param, t);
      StructureReport r;
      r.accept = true;
      r.kind = "interpolation family";
      Annihilator a = annihilator(rho);
      r.add("pure", a.pure);
      Scalar pairing = mukai(rho, conj(rho));
      r.put("mukai(rho_t, conj rho_t)", to_string(pairing));
      r.add("mukai(rho_t, conj rho_t) != 0", !pairing.is_zero());
      if (a.pure) r.type = type_of(a.space);
      // coefficientwise limit t -> 0: top power of omega_c
      Multivector power = Multivector::one(omega_c.dim());
      Rational fact = 1;
      for (int j = 1; j <= k_param; ++j) {
        power = wedge(power, omega_c);
        fact *= j;
      }
      r.put("rho_t", to_string(rho));
      r.put("limit (t -> 0)", to_string(power * Scalar(Rational(1) / fact)));
      Json rep = report_skeleton("interpolate", {t_str, expr_a});
      fill_report(rep, r);
      return emit(rep, c.report_options(), elapsed());
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace bform::cli

int main(int argc, char** argv) { return bform::cli::run(argc, argv); }
