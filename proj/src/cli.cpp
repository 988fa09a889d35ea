#include "vpwave/cli.hpp"

#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "vpwave/chebgrid.hpp"
#include "vpwave/coeff_file.hpp"
#include "vpwave/expr.hpp"
#include "vpwave/scaling.hpp"
#include "vpwave/transform.hpp"
#include "vpwave/wavelet.hpp"

namespace vpwave::cli {

namespace {

struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, std::string message) { throw Failure{code, std::move(message)}; }

struct Common {
  std::string out_path = "-";
  bool decimal = false;
  bool no_timestamp = false;
};

void add_common(CLI::App* cmd, Common& c, bool file_output) {
  cmd->add_option("--out,-o", c.out_path, "Output path, '-' for stdout")->capture_default_str();
  if (file_output) {
    cmd->add_flag("--decimal", c.decimal, "Write decimal numbers instead of hex floats");
    cmd->add_flag("--no-timestamp", c.no_timestamp, "Omit the creation timestamp");
  }
}

std::string now_utc() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::array<char, 32> buf{};
  std::strftime(buf.data(), buf.size(), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf.data();
}

CoeffFile load(const std::string& path, std::istream& in) {
  if (path == "-") return read_coeff_file(in);
  std::ifstream file(path);
  if (!file) fail(kUsage, "cannot open '" + path + "'");
  return read_coeff_file(file);
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file || !(file << text)) fail(kUsage, "cannot write '" + path + "'");
}

void emit_file(CoeffFile f, const Common& c, std::ostream& out) {
  f.meta.created.reset();
  if (!c.no_timestamp) f.meta.created = now_utc();
  emit(c.out_path, serialize(f, WriteOptions{c.decimal}), out);
}

std::string num(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

// Uniform-in-angle grid, returned in ascending x.
std::vector<double> plot_grid(int size) {
  std::vector<double> xs(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) {
    xs[static_cast<std::size_t>(i)] = std::cos(std::numbers::pi * (size - 1 - i) / (size - 1));
  }
  xs.front() = -1.0;
  xs.back() = 1.0;
  return xs;
}

std::string csv(const std::vector<double>& xs, const std::vector<std::string>& names,
                const std::vector<std::vector<double>>& columns) {
  std::ostringstream os;
  os << "x";
  for (const auto& name : names) os << ',' << name;
  os << '\n';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    os << num(xs[i]);
    for (const auto& col : columns) os << ',' << num(col[i]);
    os << '\n';
  }
  return os.str();
}

void require_finite(const std::vector<double>& v, const char* what) {
  for (double x : v) {
    if (!std::isfinite(x)) fail(kNumeric, std::string(what) + " produced a non-finite value");
  }
}

// ---- sample ---------------------------------------------------------------

struct SampleArgs {
  std::string expr;
  int n0 = 0;
  int levels = 0;
  Common common;
};

void cmd_sample(const SampleArgs& a, std::ostream& out) {
  expr::ExprPtr tree;
  try {
    tree = expr::parse(a.expr);
  } catch (const expr::ParseError& e) {
    fail(kUsage, std::string("expression: ") + e.what());
  }
  long long total = a.n0;
  for (int j = 0; j < a.levels; ++j) {
    total *= 3;
    if (total > (1 << 26)) fail(kUsage, "grid size n0 * 3^levels is too large");
  }
  const ChebGrid grid(static_cast<int>(total));
  std::vector<double> samples;
  samples.reserve(static_cast<std::size_t>(total));
  for (int k = 1; k <= grid.size(); ++k) {
    try {
      samples.push_back(expr::evaluate(*tree, grid.node(k)));
    } catch (const expr::EvalError& e) {
      fail(kNumeric, "evaluation failed at x_" + std::to_string(k) + " = " + num(grid.node(k)) + ": " + e.what());
    }
  }
  CoeffFile f = CoeffFile::from_samples(std::move(samples), a.n0);
  f.meta.source_expr = a.expr;
  emit_file(std::move(f), a.common, out);
}

// ---- decompose --------------------------------------------------------------

struct DecomposeArgs {
  std::string input = "-";
  std::optional<double> theta;
  std::vector<int> m_list;
  std::optional<int> n0;
  std::optional<int> levels;
  Common common;
};

void cmd_decompose(const DecomposeArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  const CoeffFile src = load(a.input, in);
  if (src.kind != FileKind::samples) fail(kValidation, "decompose expects a samples file");
  const int total = src.coarse_n;

  int n0 = src.n0;
  if (a.n0) {
    n0 = *a.n0;
  } else if (a.levels) {
    int q = total;
    for (int j = 0; j < *a.levels; ++j) {
      if (q % 3 != 0) fail(kValidation, "length " + std::to_string(total) + " has fewer than " +
                                            std::to_string(*a.levels) + " factors of 3");
      q /= 3;
    }
    n0 = q;
  }
  int levels = 0;
  try {
    levels = count_levels(total, n0);
  } catch (const std::invalid_argument& e) {
    fail(kValidation, e.what());
  }
  if (levels < 1) fail(kValidation, "nothing to decompose: samples are already at n0=" + std::to_string(n0));

  const bool use_list = !a.m_list.empty();
  const double theta = a.theta.value_or(0.7);
  if (use_list && static_cast<int>(a.m_list.size()) != levels) {
    fail(kValidation, "m-list has " + std::to_string(a.m_list.size()) + " entries but the pyramid has " +
                          std::to_string(levels) + " levels");
  }
  const MSchedule schedule = use_list ? MSchedule::explicit_list(a.m_list) : MSchedule::theta(theta);

  std::vector<int> sizes;
  for (int j = 0, n = n0; j < levels; ++j, n *= 3) sizes.push_back(n);
  if (schedule.clamps(sizes)) {
    for (int n : sizes) {
      if (std::floor(theta * n + 1e-9) < 1.0) {
        err << "warning: theta*n < 1 at level n=" << n << "; using m=1\n";
      }
    }
  }

  Pyramid p;
  try {
    p = multi_decompose(src.coarse, n0, schedule);
  } catch (const std::invalid_argument& e) {
    fail(kValidation, e.what());
  }
  CoeffFile f = CoeffFile::from_pyramid(p);
  if (!use_list) f.meta.theta = theta;
  f.meta.source_expr = src.meta.source_expr;
  emit_file(std::move(f), a.common, out);
}

// ---- reconstruct ------------------------------------------------------------

struct ReconstructArgs {
  std::string input = "-";
  Common common;
};

void cmd_reconstruct(const ReconstructArgs& a, std::istream& in, std::ostream& out) {
  const CoeffFile src = load(a.input, in);
  const Pyramid p = src.to_pyramid();
  std::vector<double> values = multi_reconstruct(p);
  require_finite(values, "reconstruction");
  CoeffFile f = CoeffFile::from_samples(std::move(values), p.n0);
  f.meta.source_expr = src.meta.source_expr;
  emit_file(std::move(f), a.common, out);
}

// ---- threshold --------------------------------------------------------------

struct ThresholdArgs {
  std::string input = "-";
  double tau = 0.0;
  std::string mode = "hard";
  Common common;
};

void cmd_threshold(const ThresholdArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  CoeffFile f = load(a.input, in);
  if (f.kind != FileKind::pyramid) fail(kValidation, "threshold expects a pyramid file");
  for (auto& lv : f.levels) {
    std::size_t kept = 0;
    for (double& b : lv.details) {
      if (std::abs(b) < a.tau) {
        b = 0.0;
      } else if (b != 0.0) {
        ++kept;
      }
    }
    err << "level n=" << lv.n << " m=" << lv.m << ": kept " << kept << "/" << lv.details.size() << '\n';
  }
  f.meta.tau = a.tau;
  emit_file(std::move(f), a.common, out);
}

// ---- plotdata ---------------------------------------------------------------

struct PlotArgs {
  std::string what;
  std::string input = "-";
  std::optional<int> n;
  std::optional<int> m;
  std::optional<double> theta;
  std::optional<int> k;
  int grid = 2000;
  Common common;
};

VpParams plot_params(const PlotArgs& a, int n) {
  const int m = a.m ? *a.m : m_from_theta(a.theta.value_or(0.7), n);
  try {
    return VpParams(n, m);
  } catch (const std::invalid_argument& e) {
    fail(kUsage, e.what());
  }
}

std::vector<int> selected(const std::optional<int>& k, int count, const char* what) {
  if (k) {
    if (*k < 1 || *k > count) {
      fail(kUsage, std::string(what) + " index k=" + std::to_string(*k) + " outside 1.." + std::to_string(count));
    }
    return {*k};
  }
  std::vector<int> all(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) all[static_cast<std::size_t>(i)] = i + 1;
  return all;
}

void cmd_plotdata(const PlotArgs& a, std::istream& in, std::ostream& out) {
  const std::vector<double> xs = plot_grid(a.grid);
  std::vector<std::string> names;
  std::vector<std::vector<double>> cols;

  if (a.what == "scaling" || a.what == "wavelet") {
    if (!a.n) fail(kUsage, "plotdata " + a.what + " needs --n");
    if (*a.n < 2) fail(kUsage, "--n must be at least 2");
    const VpParams params = plot_params(a, *a.n);
    const bool scaling = a.what == "scaling";
    for (int k : selected(a.k, scaling ? params.n() : 2 * params.n(), a.what.c_str())) {
      names.push_back((scaling ? "phi_" : "psi_") + std::to_string(k));
      std::vector<double> col;
      col.reserve(xs.size());
      for (double x : xs) col.push_back(scaling ? eval_scaling(params, k, x) : eval_wavelet(params, k, x));
      cols.push_back(std::move(col));
    }
  } else if (a.what == "function") {
    const CoeffFile f = load(a.input, in);
    if (f.kind == FileKind::samples) {
      const VpParams params = plot_params(a, f.coarse_n);
      cols.push_back(eval_coeffs(ScalingCoeffs{params, f.coarse}, xs));
      names.push_back("f_" + std::to_string(f.coarse_n));
    } else {
      const Pyramid p = f.to_pyramid();
      const VpParams params(p.finest_size(), p.levels.back().m);
      cols.push_back(eval_coeffs(ScalingCoeffs{params, multi_reconstruct(p)}, xs));
      names.push_back("f_" + std::to_string(p.finest_size()));
    }
  } else {  // levels
    const CoeffFile f = load(a.input, in);
    const Pyramid p = f.to_pyramid();
    // Every component is read in the finest space so the columns add up.
    const VpParams finest(p.finest_size(), p.levels.back().m);
    names.push_back("f_" + std::to_string(p.finest_size()));
    cols.push_back(eval_coeffs(ScalingCoeffs{finest, multi_reconstruct(p)}, xs));
    names.push_back("f_" + std::to_string(p.n0));
    for (const auto& lv : p.levels) names.push_back("g_" + std::to_string(2 * lv.n));
    for (auto& comp : pyramid_components(p)) cols.push_back(eval_coeffs(ScalingCoeffs{finest, std::move(comp)}, xs));
  }
  for (const auto& col : cols) require_finite(col, "plot evaluation");
  emit(a.common.out_path, csv(xs, names, cols), out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial wavelets on [-1,1]: sampling, multilevel transforms and plot data.", "vpwave"};
  app.require_subcommand(1);
  app.fallthrough(false);

  SampleArgs sample;
  auto* sample_cmd = app.add_subcommand("sample", "Sample an expression in x at the Chebyshev grid X_{n0 3^J}");
  sample_cmd->add_option("expr", sample.expr, "Expression, e.g. 'sin(6*x)+sign(x)'")->required();
  sample_cmd->add_option("--n0", sample.n0, "Coarsest grid size")->required()->check(CLI::PositiveNumber);
  sample_cmd->add_option("--levels", sample.levels, "Number of tripling levels J")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_common(sample_cmd, sample.common, true);

  DecomposeArgs dec;
  auto* dec_cmd = app.add_subcommand("decompose", "Multilevel decomposition of a samples file");
  dec_cmd->add_option("input", dec.input, "Samples file, '-' for stdin")->capture_default_str();
  auto* theta_opt = dec_cmd->add_option("--theta", dec.theta, "m = floor(theta n) per level (default 0.7)")
                        ->check(CLI::Range(0.0, 1.0));
  auto* mlist_opt = dec_cmd->add_option("--m-list", dec.m_list, "Explicit m per level, coarse to fine")
                        ->delimiter(',');
  theta_opt->excludes(mlist_opt);
  auto* n0_opt = dec_cmd->add_option("--n0", dec.n0, "Coarsest size (overrides the file)")->check(CLI::PositiveNumber);
  auto* lv_opt = dec_cmd->add_option("--levels", dec.levels, "Number of levels (overrides the file)")
                     ->check(CLI::PositiveNumber);
  n0_opt->excludes(lv_opt);
  add_common(dec_cmd, dec.common, true);

  ReconstructArgs rec;
  auto* rec_cmd = app.add_subcommand("reconstruct", "Rebuild finest-grid samples from a pyramid");
  rec_cmd->add_option("input", rec.input, "Pyramid file, '-' for stdin")->capture_default_str();
  add_common(rec_cmd, rec.common, true);

  ThresholdArgs thr;
  auto* thr_cmd = app.add_subcommand("threshold", "Zero detail coefficients below tau");
  thr_cmd->add_option("input", thr.input, "Pyramid file, '-' for stdin")->capture_default_str();
  thr_cmd->add_option("--tau", thr.tau, "Threshold")->required()->check(CLI::NonNegativeNumber);
  thr_cmd->add_option("--mode", thr.mode, "Thresholding rule")->check(CLI::IsMember({"hard"}))->capture_default_str();
  add_common(thr_cmd, thr.common, true);

  PlotArgs plot;
  auto* plot_cmd = app.add_subcommand("plotdata", "CSV series on a uniform-in-angle grid");
  plot_cmd->add_option("what", plot.what, "function | scaling | wavelet | levels")
      ->required()
      ->check(CLI::IsMember({"function", "scaling", "wavelet", "levels"}));
  plot_cmd->add_option("input", plot.input, "Samples or pyramid file for function/levels")->capture_default_str();
  plot_cmd->add_option("--n", plot.n, "Level size for scaling/wavelet");
  auto* pm = plot_cmd->add_option("--m", plot.m, "Filter parameter m");
  auto* pt = plot_cmd->add_option("--theta", plot.theta, "m = floor(theta n) (default 0.7)")->check(CLI::Range(0.0, 1.0));
  pm->excludes(pt);
  plot_cmd->add_option("--k", plot.k, "Single basis index (default: all)");
  plot_cmd->add_option("--grid", plot.grid, "Number of plot points")->check(CLI::Range(2, 10000000))->capture_default_str();
  add_common(plot_cmd, plot.common, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  auto check_theta = [&](const std::optional<double>& t) {
    if (t && !(*t > 0.0 && *t < 1.0)) fail(kUsage, "--theta must lie strictly between 0 and 1");
  };

  try {
    check_theta(dec.theta);
    check_theta(plot.theta);
    if (*sample_cmd) {
      cmd_sample(sample, out);
    } else if (*dec_cmd) {
      cmd_decompose(dec, in, out, err);
    } else if (*rec_cmd) {
      cmd_reconstruct(rec, in, out);
    } else if (*thr_cmd) {
      cmd_threshold(thr, in, out, err);
    } else {
      cmd_plotdata(plot, in, out);
    }
  } catch (const Failure& f) {
    err << "error: " << f.message << '\n';
    return f.code;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const expr::EvalError& e) {
    err << "error: " << e.what() << '\n';
    return kNumeric;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kNumeric;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumeric;
  }
  return kOk;
}

}  // namespace vpwave::cli
