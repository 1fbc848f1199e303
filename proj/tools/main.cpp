#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "drcskit/errors.hpp"
#include "drcskit/version.hpp"

using namespace drcskit;

namespace {

std::vector<int> parse_poly(const std::string& csv) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(csv);
  while (std::getline(in, token, ',')) {
    try {
      out.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw ParamError("BadPoly", "cannot parse coefficient '" + token + "'");
    }
  }
  if (out.empty()) throw ParamError("BadPoly", "empty coefficient list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Doppler-resilient complementary sequence sets: construction, "
               "ambiguity-function evaluation, and lower bounds"};
  app.set_version_flag("--version", kVersion);
  app.footer("DRCS_THREADS caps worker threads (0 or unset = all cores); "
             "results are identical for any setting.");
  app.require_subcommand(1);
  int rc = 0;

  // field check
  auto* field = app.add_subcommand("field", "GF(p^n) checks");
  field->require_subcommand(1);
  cli::FieldCheckOpts fc;
  std::string fc_poly;
  auto* field_check =
      field->add_subcommand("check", "validate a primitive polynomial and "
                                     "print the psi table");
  field_check->add_option("--p", fc.p, "prime modulus")->required();
  field_check->add_option("--n", fc.n, "extension degree")->required();
  field_check->add_option("--poly", fc_poly,
                          "coefficients c0,c1,...,cn (low degree first)")
      ->required();
  field_check->callback([&] {
    fc.poly = parse_poly(fc_poly);
    rc = cli::cmd_field_check(fc);
  });

  // rect build-qf | build-florentine | validate
  auto* rect = app.add_subcommand("rect", "quasi-Florentine and Florentine "
                                          "rectangles");
  rect->require_subcommand(1);
  cli::RectBuildQfOpts rq;
  std::string rq_poly;
  auto* rect_qf = rect->add_subcommand("build-qf",
                                       "finite-field quasi-Florentine "
                                       "rectangle");
  rect_qf->add_option("--p", rq.p, "prime modulus")->required();
  rect_qf->add_option("--n", rq.n, "extension degree")->required();
  rect_qf->add_option("--poly", rq_poly, "coefficients c0,c1,...,cn")
      ->required();
  rect_qf->add_flag("--extend", rq.extend,
                    "append the constant column, extending the alphabet");
  rect_qf->add_option("--side", rq.side, "constant column placement")
      ->check(CLI::IsMember({"left", "right"}))
      ->default_val("right");
  rect_qf->add_option("-o,--out", rq.out, "output file (default stdout)");
  rect_qf->callback([&] {
    rq.poly = parse_poly(rq_poly);
    rc = cli::cmd_rect_build_qf(rq);
  });

  cli::RectBuildFlorentineOpts rf;
  auto* rect_fl = rect->add_subcommand("build-florentine",
                                       "circulant Florentine rectangle from "
                                       "a prime q");
  rect_fl->add_option("--q", rf.q, "prime >= 3")->required();
  rect_fl->add_option("-o,--out", rf.out, "output file (default stdout)");
  rect_fl->callback([&] { rc = cli::cmd_rect_build_florentine(rf); });

  std::string rect_file;
  auto* rect_val = rect->add_subcommand("validate", "check C1 and C2");
  rect_val->add_option("file", rect_file, "rectangle file")->required();
  rect_val->callback([&] { rc = cli::cmd_rect_validate(rect_file); });

  // bh build | validate
  auto* bh = app.add_subcommand("bh", "Butson-type Hadamard matrices");
  bh->require_subcommand(1);
  cli::BhBuildOpts bb;
  auto* bh_build = bh->add_subcommand("build", "build a Butson matrix");
  bh_build->add_option("--kind", bb.kind, "dft | walsh | seed | kron")
      ->required()
      ->check(CLI::IsMember({"dft", "walsh", "seed", "kron"}));
  bh_build->add_option("--args", bb.args,
                       "kind arguments (kron accepts dft:N walsh:M "
                       "seed:NAME or file paths)");
  bh_build->add_option("-o,--out", bb.out, "output file (default stdout)");
  bh_build->callback([&] { rc = cli::cmd_bh_build(bb); });

  std::string bh_file;
  auto* bh_val = bh->add_subcommand("validate", "check B B^H = N I");
  bh_val->add_option("file", bh_file, "Butson file")->required();
  bh_val->callback([&] { rc = cli::cmd_bh_validate(bh_file); });

  // drcs construct
  auto* drcs = app.add_subcommand("drcs", "sequence-set assembly");
  drcs->require_subcommand(1);
  cli::DrcsConstructOpts dc;
  auto* drcs_con = drcs->add_subcommand("construct",
                                        "assemble a sequence set from a "
                                        "rectangle and a Butson matrix");
  drcs_con->add_option("--rect", dc.rect_file, "rectangle file")->required();
  drcs_con->add_option("--bh", dc.bh_file, "Butson file")->required();
  drcs_con->add_option("-o,--out", dc.out, "output file")->required();
  drcs_con->add_option("--paper-layout", dc.paper_layout_file,
                       "also write per-set tables (one row per position)");
  drcs_con->callback([&] { rc = cli::cmd_drcs_construct(dc); });

  // af grid | metrics
  auto* af = app.add_subcommand("af", "ambiguity-function evaluation");
  af->require_subcommand(1);
  cli::AfGridOpts ag;
  auto* af_grid = af->add_subcommand("grid", "full AF-sum grid as CSV");
  af_grid->add_option("--drcs", ag.drcs_file, "sequence-set file")
      ->required();
  af_grid->add_option("--k1", ag.k1, "first set index")->required();
  af_grid->add_option("--k2", ag.k2, "second set index")->required();
  af_grid->add_option("--zx", ag.zx, "delay zone bound")->required();
  af_grid->add_option("--zy", ag.zy, "Doppler zone bound")->required();
  af_grid->add_option("-o,--out", ag.out, "CSV output file");
  af_grid->callback([&] { rc = cli::cmd_af_grid(ag); });

  cli::AfMetricsOpts am;
  auto* af_metrics = af->add_subcommand("metrics",
                                        "zone sidelobe maxima as JSON");
  af_metrics->add_option("--drcs", am.drcs_file, "sequence-set file")
      ->required();
  af_metrics->add_option("--zx", am.zx, "delay zone bound")->required();
  af_metrics->add_option("--zy", am.zy, "Doppler zone bound")->required();
  af_metrics->add_option("-o,--out", am.out, "also write the JSON here");
  af_metrics->callback([&] { rc = cli::cmd_af_metrics(am); });

  // bounds eval | table | small-alphabet-table
  auto* bounds = app.add_subcommand("bounds", "lower-bound evaluation");
  bounds->require_subcommand(1);
  cli::BoundsEvalOpts be;
  double be_theta = 0.0;
  auto* bounds_eval = bounds->add_subcommand("eval", "evaluate one bound");
  bounds_eval
      ->add_option("--which", be.which,
                   "shen | thm2 | thm3 | uniform | trunc | lev | sin | c5")
      ->required()
      ->check(CLI::IsMember(
          {"shen", "thm2", "thm3", "uniform", "trunc", "lev", "sin", "c5"}));
  bounds_eval->add_option("--K", be.K, "number of sets")->required();
  bounds_eval->add_option("--M", be.M, "sequences per set")->required();
  bounds_eval->add_option("--N", be.N, "sequence length")->required();
  bounds_eval->add_option("--zx", be.Zx, "delay zone bound");
  bounds_eval->add_option("--zy", be.Zy, "Doppler zone bound");
  bounds_eval->add_option("--m", be.m, "weight support size");
  bounds_eval->add_option("--weights", be.weights_file,
                          "whitespace-separated weight file");
  auto* theta_opt = bounds_eval->add_option(
      "--theta", be_theta, "achieved theta_max; adds rho to the report");
  bounds_eval->add_option("-o,--out", be.out, "also write the JSON here");
  bounds_eval->callback([&] {
    if (*theta_opt) be.theta = be_theta;
    rc = cli::cmd_bounds_eval(be);
  });

  cli::BoundsTableOpts bt;
  auto* bounds_table = bounds->add_subcommand(
      "table", "optimality-factor comparison for the p^2 family");
  bounds_table->add_option("--family", bt.family, "row family")
      ->check(CLI::IsMember({"p2"}))
      ->default_val("p2");
  bounds_table->add_option("--pmax", bt.pmax, "largest prime p")->required();
  bounds_table->add_option("-o,--out", bt.out, "CSV output file");
  bounds_table->callback([&] { rc = cli::cmd_bounds_table(bt); });

  std::string sat_out;
  auto* sat = bounds->add_subcommand(
      "small-alphabet-table",
      "published small-alphabet parameter rows with computed rho");
  sat->add_option("-o,--out", sat_out, "CSV output file");
  sat->callback([&] { rc = cli::cmd_small_alphabet_table(sat_out); });

  // repro example1 | example2 | fig-rho
  auto* repro = app.add_subcommand("repro",
                                   "reproduce the published artifacts");
  repro->require_subcommand(1);
  std::string ex1_dir = "repro-example1";
  auto* ex1 = repro->add_subcommand("example1",
                                    "GF(9) rectangle + BH(10,5) bundle");
  ex1->add_option("--outdir", ex1_dir, "output directory");
  ex1->callback([&] { rc = cli::cmd_repro_example1(ex1_dir); });

  std::string ex2_dir = "repro-example2";
  auto* ex2 = repro->add_subcommand("example2",
                                    "q=17 Florentine + Walsh(16) bundle");
  ex2->add_option("--outdir", ex2_dir, "output directory");
  ex2->callback([&] { rc = cli::cmd_repro_example2(ex2_dir); });

  cli::FigRhoOpts fr;
  auto* fig = repro->add_subcommand("fig-rho",
                                    "optimality-factor comparison CSV");
  fig->add_option("--pmax", fr.pmax, "largest prime p (<= 127)");
  fig->add_option("-o,--out", fr.out, "CSV output file");
  fig->callback([&] { rc = cli::cmd_repro_fig_rho(fr); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 4;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const ParamError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return rc;
}
