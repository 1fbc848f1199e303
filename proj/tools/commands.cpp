#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "drcskit/af.hpp"
#include "drcskit/bounds.hpp"
#include "drcskit/butson.hpp"
#include "drcskit/drcs.hpp"
#include "drcskit/finite_field.hpp"
#include "drcskit/manifest.hpp"
#include "drcskit/rectangle.hpp"
#include "drcskit/registry.hpp"
#include "drcskit/version.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace drcskit::cli {

namespace {

std::string fmt_sig6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string fmt_rho4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string poly_echo(const std::vector<int>& poly) {
  std::string s;
  for (size_t i = 0; i < poly.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(poly[i]);
  }
  return s;
}

// Emit to stdout or atomically to a file (with a manifest sidecar).
void emit(const std::string& content, const std::string& out,
          const std::string& command,
          std::vector<std::pair<std::string, std::string>> params,
          const std::vector<fs::path>& inputs) {
  if (out.empty()) {
    std::cout << content;
    return;
  }
  atomic_write(out, content);
  write_manifest(make_manifest(command, std::move(params), inputs), out);
}

json report_to_json(const BoundReport& r) {
  json j;
  j["bound"] = r.name;
  json params;
  params["K"] = r.K;
  params["M"] = r.M;
  params["N"] = r.N;
  params["Zx"] = r.Zx;
  params["Zy"] = r.Zy;
  if (r.m > 0) params["m"] = r.m;
  if (r.gamma > 0.0) {
    params["gamma"] = r.gamma;
    params["gamma0"] = r.gamma0;
  }
  j["params"] = params;
  j["theta_sq"] = r.theta_sq;
  j["theta"] = r.theta;
  j["vacuous"] = r.vacuous;
  j["applicable"] = r.applicable;
  if (r.combined) {
    j["combined"] = {{"coeff_theta_a_sq", r.combined->coeff_a},
                     {"coeff_theta_c_sq", r.combined->coeff_c},
                     {"rhs", r.combined->rhs}};
  }
  if (r.theta_sq_weak) j["theta_sq_weak"] = *r.theta_sq_weak;
  return j;
}

json metrics_to_json(const ZoneMetrics& zm, const DrcsSet& s, Zone zone) {
  json j;
  j["K"] = s.num_sets;
  j["M"] = s.num_seqs;
  j["L"] = s.length;
  j["r"] = s.root;
  j["zone"] = {{"zx", zone.zx}, {"zy", zone.zy}};
  j["theta_a"] = zm.theta_a;
  j["theta_c"] = zm.theta_c;
  j["theta_max"] = zm.theta_max;
  j["argmax_a"] = {{"k", zm.argmax_a.k1},
                   {"tau", zm.argmax_a.tau},
                   {"v", zm.argmax_a.v},
                   {"mag", zm.argmax_a.mag}};
  j["argmax_c"] = {{"k1", zm.argmax_c.k1},
                   {"k2", zm.argmax_c.k2},
                   {"tau", zm.argmax_c.tau},
                   {"v", zm.argmax_c.v},
                   {"mag", zm.argmax_c.mag}};
  return j;
}

ButsonMatrix bh_from_spec(const std::string& spec) {
  if (spec.starts_with("dft:")) return bh_dft(std::stoi(spec.substr(4)));
  if (spec.starts_with("walsh:")) return bh_walsh(std::stoi(spec.substr(6)));
  if (spec.starts_with("seed:")) return bh_seed(spec.substr(5));
  return bh_load(spec);
}

// The p^2-family comparison rows behind the published figure and table.
std::string p2_family_csv(long pmax) {
  if (pmax > 127) {
    throw ParamError("BadParameter", "pmax must be <= 127");
  }
  std::ostringstream out;
  out << "K,M,N,theta,rho_shen,rho_new\n";
  for (long p : registry::primes_in_range(3, pmax)) {
    const auto row = registry::p2_family_row(p);
    const BoundReport shen =
        bound_shen(row.K, row.M, row.N, row.Zx, row.Zy);
    const BoundReport lev = bound_lev(row.K, row.M, row.N, row.Zy);
    out << row.K << ',' << row.M << ',' << row.N << ',' << row.theta << ','
        << fmt_rho4(rho(static_cast<double>(row.theta), shen)) << ','
        << fmt_rho4(rho(static_cast<double>(row.theta), lev)) << '\n';
  }
  return out.str();
}

struct ReproArtifacts {
  Rectangle rect;
  ButsonMatrix bh;
  DrcsSet set;
  ZoneMetrics metrics;
  Zone zone;
};

// Shared tail of the repro commands: write the bundle, print per-check
// verdict lines, return the exit code.
int finish_repro(const std::string& command, const std::string& outdir,
                 const ReproArtifacts& art, const std::string& paper_text,
                 double expected_theta, bool check_cross_levels,
                 json extra_checks) {
  fs::create_directories(outdir);
  const fs::path dir(outdir);

  rect_save(art.rect, dir / "rectangle.txt");
  write_manifest(make_manifest(command, {{"artifact", "rectangle"}}, {}),
                 dir / "rectangle.txt");
  drcs_save(art.set, dir / "set.drcs");
  write_manifest(make_manifest(command, {{"artifact", "drcs-set"}}, {}),
                 dir / "set.drcs");
  atomic_write(dir / "paper_tables.txt", paper_text);
  write_manifest(make_manifest(command, {{"artifact", "paper-tables"}}, {}),
                 dir / "paper_tables.txt");

  const double ml =
      static_cast<double>(art.set.num_seqs) * art.set.length;
  bool ok = true;
  auto check = [&](const std::string& name, bool pass) {
    std::cout << "check " << name << ": " << (pass ? "pass" : "FAIL")
              << '\n';
    if (!pass) ok = false;
    return pass;
  };

  json j = metrics_to_json(art.metrics, art.set, art.zone);
  j["command"] = command;
  json checks;
  checks["c1"] = check("rectangle-c1", validate_c1(art.rect).ok);
  checks["c2"] = check("rectangle-c2", validate_c2(art.rect).ok);
  checks["butson"] = check("butson-orthogonality", bh_validate(art.bh).ok);
  checks["theta_a_zero"] =
      check("theta_a-zero", art.metrics.theta_a <= 1e-6 * ml);
  checks["theta_max"] =
      check("theta_max-" + fmt_sig6(expected_theta),
            std::abs(art.metrics.theta_max - expected_theta) <= 1e-6);
  if (check_cross_levels) {
    // Construction contract: every cross cell magnitude is 0 or the Butson
    // order N.
    bool levels = true;
    const double n_level = static_cast<double>(art.set.num_seqs);
    for (int k1 = 0; k1 < art.set.num_sets && levels; ++k1) {
      for (int k2 = 0; k2 < art.set.num_sets && levels; ++k2) {
        if (k1 == k2) continue;
        const AFGrid g = af_grid(art.set, k1, k2, art.zone);
        for (const cplx& c : g.vals) {
          const double mag = std::abs(c);
          if (mag > 1e-6 * ml && std::abs(mag - n_level) > 1e-6 * ml) {
            levels = false;
            break;
          }
        }
      }
    }
    checks["cross_levels"] = check("cross-af-levels", levels);
  }
  for (auto& [key, value] : extra_checks.items()) {
    checks[key] = check(key, value.get<bool>());
  }
  j["checks"] = checks;
  j["verdict"] = ok ? "pass" : "fail";

  atomic_write(dir / "metrics.json", j.dump(2) + "\n");
  write_manifest(make_manifest(command, {{"artifact", "metrics"}}, {}),
                 dir / "metrics.json");

  std::cout << "verdict: " << (ok ? "pass" : "fail") << '\n';
  return ok ? 0 : 2;
}

}  // namespace

int cmd_field_check(const FieldCheckOpts& o) {
  const FieldProbe probe = probe_field(o.p, o.n, o.poly);
  std::cout << "p=" << o.p << " n=" << o.n << " poly=[" << poly_echo(o.poly)
            << "]\n";
  if (!probe.prime) {
    std::cout << "NotPrime: p is not prime\n";
    return 4;
  }
  if (!probe.monic) {
    std::cout << "BadPoly: expected a monic degree-" << o.n
              << " polynomial over Z_" << o.p << "\n";
    return 4;
  }
  if (!probe.irreducible) {
    std::cout << "NotIrreducible: polynomial factors over Z_" << o.p << "\n";
    return 2;
  }
  long q = 1;
  for (int i = 0; i < o.n; ++i) q *= o.p;
  std::cout << "order(alpha) = " << probe.order_of_alpha << " of " << q - 1
            << (probe.primitive ? " (primitive)" : " (NOT primitive)")
            << '\n';
  if (!probe.primitive) return 2;

  FieldCtx ctx(o.p, o.n, o.poly);
  std::cout << "psi(0) = 0\n";
  for (long j = 0; j < q - 1; ++j) {
    const FieldElem e = ctx.alpha_pow(j);
    std::cout << "psi(alpha^" << j << ") = " << ctx.psi(e) << "  coeffs=[";
    for (int i = 0; i < o.n; ++i) {
      if (i) std::cout << ',';
      std::cout << e.coeffs[static_cast<size_t>(i)];
    }
    std::cout << "]\n";
  }
  return 0;
}

int cmd_rect_build_qf(const RectBuildQfOpts& o) {
  FieldCtx ctx(o.p, o.n, o.poly);
  Rectangle r = build_quasi_florentine(ctx);
  if (o.extend) {
    const ExtendSide side =
        o.side == "left" ? ExtendSide::left : ExtendSide::right;
    r = extend_quasi_florentine(r, r.alphabet, side);
  }
  emit(rect_to_text(r), o.out, "rect build-qf",
       {{"p", std::to_string(o.p)},
        {"n", std::to_string(o.n)},
        {"poly", poly_echo(o.poly)},
        {"extend", o.extend ? "true" : "false"},
        {"side", o.side}},
       {});
  return 0;
}

int cmd_rect_build_florentine(const RectBuildFlorentineOpts& o) {
  Rectangle r = build_florentine_circulant(o.q);
  emit(rect_to_text(r), o.out, "rect build-florentine",
       {{"q", std::to_string(o.q)}}, {});
  return 0;
}

int cmd_rect_validate(const std::string& file) {
  Rectangle r = rect_load(file);
  const auto c1 = validate_c1(r);
  const auto c2 = validate_c2(r);
  std::cout << "C1: " << (c1.ok ? "pass" : "FAIL " + c1.detail) << '\n';
  std::cout << "C2: " << (c2.ok ? "pass" : "FAIL " + c2.detail) << '\n';
  return c1.ok && c2.ok ? 0 : 2;
}

int cmd_bh_build(const BhBuildOpts& o) {
  ButsonMatrix b;
  std::vector<std::pair<std::string, std::string>> params = {
      {"kind", o.kind}};
  for (size_t i = 0; i < o.args.size(); ++i) {
    params.emplace_back("arg" + std::to_string(i), o.args[i]);
  }
  if (o.kind == "dft") {
    if (o.args.size() != 1) {
      throw ParamError("BadParameter", "dft takes one argument: the order");
    }
    b = bh_dft(std::stoi(o.args[0]));
  } else if (o.kind == "walsh") {
    if (o.args.size() != 1) {
      throw ParamError("BadParameter",
                       "walsh takes one argument: the exponent m");
    }
    b = bh_walsh(std::stoi(o.args[0]));
  } else if (o.kind == "seed") {
    if (o.args.size() != 1) {
      throw ParamError("BadParameter", "seed takes one argument: the name");
    }
    b = bh_seed(o.args[0]);
  } else if (o.kind == "kron") {
    if (o.args.size() != 2) {
      throw ParamError("BadParameter",
                       "kron takes two arguments (dft:N, walsh:M, seed:NAME "
                       "or a file path)");
    }
    b = bh_kronecker(bh_from_spec(o.args[0]), bh_from_spec(o.args[1]));
  } else {
    throw ParamError("BadParameter", "unknown kind '" + o.kind + "'");
  }
  emit(bh_to_text(b), o.out, "bh build", std::move(params), {});
  return 0;
}

int cmd_bh_validate(const std::string& file) {
  ButsonMatrix b = bh_load(file);
  const auto report = bh_validate(b);
  std::cout << "BH(" << b.order << "," << b.root << "): "
            << (report.ok ? "pass" : "FAIL " + report.detail)
            << " (worst off-diagonal " << fmt_sig6(report.worst) << ")\n";
  return report.ok ? 0 : 2;
}

int cmd_drcs_construct(const DrcsConstructOpts& o) {
  Rectangle rect = rect_load(o.rect_file);
  ButsonMatrix b = bh_load(o.bh_file);
  DrcsSet s = construct_drcs(rect, b);
  const std::vector<std::pair<std::string, std::string>> params = {
      {"rect", o.rect_file}, {"bh", o.bh_file}};
  emit(drcs_to_text(s), o.out, "drcs construct", params,
       {o.rect_file, o.bh_file});
  if (!o.paper_layout_file.empty()) {
    std::string text;
    for (int k = 0; k < s.num_sets; ++k) {
      text += paper_layout_text(s, k, PaperLayout::position_rows);
    }
    emit(text, o.paper_layout_file, "drcs construct --paper-layout", params,
         {o.rect_file, o.bh_file});
  }
  return 0;
}

int cmd_af_grid(const AfGridOpts& o) {
  DrcsSet s = drcs_load(o.drcs_file);
  const Zone zone{o.zx, o.zy};
  const AFGrid g = af_grid(s, o.k1, o.k2, zone);
  std::ostringstream out;
  out << "tau,v,re,im,mag\n";
  for (int tau = -(zone.zx - 1); tau <= zone.zx - 1; ++tau) {
    for (int v = -(zone.zy - 1); v <= zone.zy - 1; ++v) {
      const cplx c = g.at(tau, v);
      out << tau << ',' << v << ',' << fmt_sig6(c.real()) << ','
          << fmt_sig6(c.imag()) << ',' << fmt_sig6(std::abs(c)) << '\n';
    }
  }
  emit(out.str(), o.out, "af grid",
       {{"drcs", o.drcs_file},
        {"k1", std::to_string(o.k1)},
        {"k2", std::to_string(o.k2)},
        {"zx", std::to_string(o.zx)},
        {"zy", std::to_string(o.zy)}},
       {o.drcs_file});
  return 0;
}

int cmd_af_metrics(const AfMetricsOpts& o) {
  DrcsSet s = drcs_load(o.drcs_file);
  const Zone zone{o.zx, o.zy};
  const ZoneMetrics zm = zone_metrics(s, zone);
  const std::string text = metrics_to_json(zm, s, zone).dump(2) + "\n";
  std::cout << text;
  if (!o.out.empty()) {
    emit(text, o.out, "af metrics",
         {{"drcs", o.drcs_file},
          {"zx", std::to_string(o.zx)},
          {"zy", std::to_string(o.zy)}},
         {o.drcs_file});
  }
  return 0;
}

namespace {

WeightVector load_weights(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("ParseError", "cannot open " + file);
  WeightVector w;
  double v;
  while (in >> v) w.w.push_back(v);
  if (w.w.empty()) {
    throw ParseError("ParseError", "no weights in " + file);
  }
  return w;
}

}  // namespace

int cmd_bounds_eval(const BoundsEvalOpts& o) {
  BoundReport r;
  if (o.which == "shen") {
    r = bound_shen(o.K, o.M, o.N, o.Zx, o.Zy);
  } else if (o.which == "thm2") {
    const WeightVector w = o.weights_file.empty()
                               ? weights_uniform_full(o.N)
                               : load_weights(o.weights_file);
    r = bound_thm2(o.K, o.M, o.N, o.Zy, w);
  } else if (o.which == "thm3") {
    const WeightVector w =
        o.weights_file.empty()
            ? weights_uniform_truncated(o.m > 0 ? o.m : o.Zx, o.Zx)
            : load_weights(o.weights_file);
    r = bound_thm3(o.K, o.M, o.N, o.Zx, o.Zy, w);
  } else if (o.which == "uniform") {
    r = bound_uniform_full(o.K, o.M, o.N, o.Zy);
  } else if (o.which == "trunc") {
    r = bound_truncated(o.K, o.M, o.N, o.Zy, o.m);
  } else if (o.which == "lev") {
    r = bound_lev(o.K, o.M, o.N, o.Zy);
  } else if (o.which == "sin") {
    r = bound_sin(o.K, o.M, o.N, o.Zx, o.Zy, o.m);
  } else if (o.which == "c5") {
    r = bound_c5(o.K, o.M, o.N, o.Zx, o.Zy);
  } else {
    throw ParamError("BadParameter", "unknown bound '" + o.which + "'");
  }
  json j = report_to_json(r);
  if (o.theta) {
    j["theta_achieved"] = *o.theta;
    j["rho"] = rho(*o.theta, r);
  }
  const std::string text = j.dump(2) + "\n";
  std::cout << text;
  if (!o.out.empty()) {
    std::vector<std::pair<std::string, std::string>> params = {
        {"which", o.which},       {"K", std::to_string(o.K)},
        {"M", std::to_string(o.M)}, {"N", std::to_string(o.N)},
        {"zx", std::to_string(o.Zx)}, {"zy", std::to_string(o.Zy)},
        {"m", std::to_string(o.m)}};
    if (!o.weights_file.empty()) params.emplace_back("weights", o.weights_file);
    if (o.theta) params.emplace_back("theta", std::to_string(*o.theta));
    std::vector<fs::path> inputs;
    if (!o.weights_file.empty()) inputs.emplace_back(o.weights_file);
    emit(text, o.out, "bounds eval", std::move(params), inputs);
  }
  return 0;
}

int cmd_bounds_table(const BoundsTableOpts& o) {
  if (o.family != "p2") {
    throw ParamError("BadParameter", "unknown family '" + o.family + "'");
  }
  emit(p2_family_csv(o.pmax), o.out, "bounds table",
       {{"family", o.family}, {"pmax", std::to_string(o.pmax)}}, {});
  return 0;
}

int cmd_small_alphabet_table(const std::string& out) {
  std::ostringstream csv;
  csv << "alphabet,K,M,N,theta,Zx,Zy,rho,bh,rectangle\n";
  for (const auto& row : registry::small_alphabet_rows()) {
    const BoundReport lev = bound_lev(row.K, row.M, row.N, row.Zy);
    csv << row.alphabet << ',' << row.K << ',' << row.M << ',' << row.N
        << ',' << row.theta << ',' << row.Zx << ',' << row.Zy << ','
        << fmt_rho4(rho(static_cast<double>(row.theta), lev)) << ','
        << csv_field(row.bh) << ',' << csv_field(row.rectangle) << '\n';
  }
  emit(csv.str(), out, "bounds small-alphabet-table", {}, {});
  return 0;
}

int cmd_repro_example1(const std::string& outdir) {
  ReproArtifacts art;
  FieldCtx ctx(registry::example1_p(), registry::example1_n(),
               registry::example1_poly());
  art.rect = extend_quasi_florentine(build_quasi_florentine(ctx), 9);
  art.bh = registry::example1_bh();
  art.set = construct_drcs(art.rect, art.bh);
  art.zone = Zone{9, 9};
  art.metrics = zone_metrics(art.set, art.zone);

  std::string paper_text;
  for (int k = 0; k < 4; ++k) {
    paper_text += paper_layout_text(art.set, k, PaperLayout::position_rows);
  }
  json extra;
  extra["theta_c-is-butson-order"] =
      std::abs(art.metrics.theta_c - 10.0) <= 1e-6;
  return finish_repro("repro example1", outdir, art, paper_text, 10.0, true,
                      extra);
}

int cmd_repro_example2(const std::string& outdir) {
  ReproArtifacts art;
  art.rect = build_florentine_circulant(registry::example2_q());
  art.bh = bh_walsh(registry::example2_walsh_m());
  art.set = construct_drcs(art.rect, art.bh);
  art.zone = Zone{16, 16};
  art.metrics = zone_metrics(art.set, art.zone);

  // This example's tables are printed one row per sequence.
  std::string paper_text;
  for (int k = 0; k < 2; ++k) {
    paper_text += paper_layout_text(art.set, k, PaperLayout::sequence_rows);
  }
  json extra;
  extra["binary-alphabet"] = art.set.root == 2;
  return finish_repro("repro example2", outdir, art, paper_text, 16.0, true,
                      extra);
}

int cmd_repro_fig_rho(const FigRhoOpts& o) {
  emit(p2_family_csv(o.pmax), o.out, "repro fig-rho",
       {{"pmax", std::to_string(o.pmax)}}, {});
  return 0;
}

}  // namespace drcskit::cli
