#pragma once

#include <optional>
#include <string>
#include <vector>

namespace drcskit::cli {

// Every command returns the process exit code: 0 success, 2 validation
// failure, 3 parse error, 4 parameter error (thrown errors are mapped by
// main's handler to the same codes).

struct FieldCheckOpts {
  int p = 0;
  int n = 0;
  std::vector<int> poly;
};
int cmd_field_check(const FieldCheckOpts& o);

struct RectBuildQfOpts {
  int p = 0;
  int n = 0;
  std::vector<int> poly;
  bool extend = false;
  std::string side = "right";
  std::string out;  // empty -> stdout
};
int cmd_rect_build_qf(const RectBuildQfOpts& o);

struct RectBuildFlorentineOpts {
  int q = 0;
  std::string out;
};
int cmd_rect_build_florentine(const RectBuildFlorentineOpts& o);

int cmd_rect_validate(const std::string& file);

struct BhBuildOpts {
  std::string kind;               // dft | walsh | seed | kron
  std::vector<std::string> args;  // kind-specific
  std::string out;
};
int cmd_bh_build(const BhBuildOpts& o);

int cmd_bh_validate(const std::string& file);

struct DrcsConstructOpts {
  std::string rect_file;
  std::string bh_file;
  std::string out;
  std::string paper_layout_file;  // optional
};
int cmd_drcs_construct(const DrcsConstructOpts& o);

struct AfGridOpts {
  std::string drcs_file;
  int k1 = 0;
  int k2 = 0;
  int zx = 1;
  int zy = 1;
  std::string out;
};
int cmd_af_grid(const AfGridOpts& o);

struct AfMetricsOpts {
  std::string drcs_file;
  int zx = 1;
  int zy = 1;
  std::string out;  // optional; stdout always gets the JSON
};
int cmd_af_metrics(const AfMetricsOpts& o);

struct BoundsEvalOpts {
  std::string which;
  long K = 0, M = 0, N = 0, Zx = 0, Zy = 0;
  long m = 0;
  std::string weights_file;
  std::optional<double> theta;  // achieved value; adds rho to the report
  std::string out;
};
int cmd_bounds_eval(const BoundsEvalOpts& o);

struct BoundsTableOpts {
  std::string family = "p2";
  long pmax = 23;
  std::string out;
};
int cmd_bounds_table(const BoundsTableOpts& o);

int cmd_small_alphabet_table(const std::string& out);

int cmd_repro_example1(const std::string& outdir);
int cmd_repro_example2(const std::string& outdir);

struct FigRhoOpts {
  long pmax = 119;
  std::string out;
};
int cmd_repro_fig_rho(const FigRhoOpts& o);

}  // namespace drcskit::cli
