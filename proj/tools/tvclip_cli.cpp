// Command-line front end for the tvclip library. Subcommands cover synthetic
// signal generation, denoising, L-curve parameter selection, quality metrics,
// WAV denoising, and oracle cross-checks. Data goes to files or stdout;
// diagnostics go to stderr. Exit codes: 0 success, 1 runtime error, 2 usage.
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tvclip/tvclip.h"

namespace {

using json = nlohmann::json;

struct SignalDeleter {
  void operator()(tvc_signal* s) const { tvc_signal_free(s); }
};
using SignalPtr = std::unique_ptr<tvc_signal, SignalDeleter>;

struct ResultDeleter {
  void operator()(tvc_denoise_result* r) const { tvc_denoise_result_free(r); }
};
using ResultPtr = std::unique_ptr<tvc_denoise_result, ResultDeleter>;

struct SweepDeleter {
  void operator()(tvc_lcurve_sweep* s) const { tvc_lcurve_sweep_free(s); }
};
using SweepPtr = std::unique_ptr<tvc_lcurve_sweep, SweepDeleter>;

void check(tvc_status st) {
  if (st != TVC_OK) throw std::runtime_error(tvc_last_error());
}

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Signal CSV: one sample per line, optional "# sample_rate=<int>" comment.
SignalPtr read_signal_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::vector<double> samples;
  double rate = 0.0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string key = "# sample_rate=";
      if (line.rfind(key, 0) == 0) rate = std::stod(line.substr(key.size()));
      continue;
    }
    try {
      std::size_t pos = 0;
      samples.push_back(std::stod(line, &pos));
    } catch (const std::exception&) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": not a number: " + line);
    }
  }
  if (samples.empty()) throw std::runtime_error(path + ": no samples");
  tvc_signal* s = nullptr;
  check(tvc_signal_create(samples.data(), samples.size(), &s));
  SignalPtr out(s);
  if (rate > 0.0) check(tvc_signal_set_rate(out.get(), rate));
  return out;
}

void write_signal_csv(const std::string& path, const tvc_signal* s) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  if (tvc_signal_has_rate(s))
    out << "# sample_rate=" << static_cast<std::uint64_t>(tvc_signal_rate(s)) << "\n";
  const double* data = tvc_signal_samples(s);
  const std::size_t n = tvc_signal_size(s);
  for (std::size_t i = 0; i < n; ++i) out << fmt_double(data[i]) << "\n";
  if (!out) throw std::runtime_error("write failed: " + path);
}

SignalPtr read_wav_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  tvc_signal* s = nullptr;
  check(tvc_read_wav(bytes.data(), bytes.size(), &s));
  return SignalPtr(s);
}

void write_wav_file(const std::string& path, const tvc_signal* s) {
  std::uint8_t* bytes = nullptr;
  std::size_t len = 0;
  check(tvc_write_wav(s, &bytes, &len));
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    tvc_buffer_free(bytes);
    throw std::runtime_error("cannot open output file: " + path);
  }
  out.write(reinterpret_cast<const char*>(bytes), static_cast<std::streamsize>(len));
  tvc_buffer_free(bytes);
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_signal(const std::string& path, const tvc_signal* s) {
  if (ends_with(path, ".wav"))
    write_wav_file(path, s);
  else
    write_signal_csv(path, s);
}

SignalPtr read_signal(const std::string& path) {
  if (ends_with(path, ".wav")) return read_wav_file(path);
  return read_signal_csv(path);
}

// ---- subcommand configs ----

struct SynthCfg {
  std::string kind = "step";
  std::size_t n = 256;
  std::size_t edge = 128;
  double low = 0.0, high = 1.0;
  std::size_t period = 64;
  double amplitude = 1.0;
  std::string noise = "none";
  double level = 10.0;
  std::uint64_t seed = 0;
  double seconds = 10.0;
  std::uint32_t rate = 8000;
  std::string out, clean_out;
};

int run_synth(const SynthCfg& c) {
  if (c.kind == "vuvuzela") {
    tvc_signal *clean = nullptr, *noisy = nullptr;
    check(tvc_gen_vuvuzela(c.seconds, c.rate, c.seed, &clean, &noisy));
    SignalPtr cp(clean), np(noisy);
    write_signal(c.out, np.get());
    if (!c.clean_out.empty()) write_signal(c.clean_out, cp.get());
    return 0;
  }

  tvc_signal* base = nullptr;
  if (c.kind == "step")
    check(tvc_gen_step(c.n, c.edge, c.low, c.high, &base));
  else if (c.kind == "square")
    check(tvc_gen_square(c.n, c.period, c.amplitude, &base));
  else
    throw std::runtime_error("unknown --kind: " + c.kind);
  SignalPtr clean(base);

  SignalPtr noisy;
  if (c.noise == "none") {
    // no-op
  } else if (c.noise == "gaussian" || c.noise == "laplacian") {
    const tvc_noise_kind kind =
        c.noise == "gaussian" ? TVC_NOISE_GAUSSIAN : TVC_NOISE_LAPLACIAN;
    tvc_signal* s = nullptr;
    check(tvc_add_noise(clean.get(), kind, c.level, c.seed, &s));
    noisy.reset(s);
  } else {
    throw std::runtime_error("unknown --noise: " + c.noise);
  }

  write_signal(c.out, noisy ? noisy.get() : clean.get());
  if (!c.clean_out.empty()) write_signal(c.clean_out, clean.get());
  return 0;
}

struct DenoiseCfg {
  std::string in, out, history;
  std::string solver = "clip";
  tvc_denoise_params p{};
};

int run_denoise(const DenoiseCfg& c) {
  SignalPtr y = read_signal(c.in);
  if (c.solver == "exact") {
    tvc_signal* x = nullptr;
    check(tvc_denoise_exact(y.get(), c.p.lambda, &x));
    SignalPtr xp(x);
    if (tvc_signal_has_rate(y.get()))
      check(tvc_signal_set_rate(xp.get(), tvc_signal_rate(y.get())));
    write_signal(c.out, xp.get());
    return 0;
  }
  if (c.solver != "clip") throw std::runtime_error("unknown --solver: " + c.solver);

  tvc_denoise_result* r = nullptr;
  check(tvc_denoise_clip(y.get(), &c.p, &r));
  ResultPtr rp(r);
  const tvc_signal* x = tvc_result_signal(r);
  // preserve the rate tag for WAV output
  SignalPtr xc;
  {
    tvc_signal* tmp = nullptr;
    check(tvc_signal_create(tvc_signal_samples(x), tvc_signal_size(x), &tmp));
    xc.reset(tmp);
    if (tvc_signal_has_rate(y.get()))
      check(tvc_signal_set_rate(xc.get(), tvc_signal_rate(y.get())));
  }
  write_signal(c.out, xc.get());

  if (!c.history.empty()) {
    std::ofstream out(c.history);
    if (!out) throw std::runtime_error("cannot open output file: " + c.history);
    out << "iteration,cost\n";
    std::size_t len = 0;
    const double* hist = tvc_result_cost_history(r, &len);
    for (std::size_t i = 0; i < len; ++i)
      out << (i + 1) << "," << fmt_double(hist[i]) << "\n";
  }
  std::cerr << "iterations=" << tvc_result_iterations(r)
            << " converged=" << tvc_result_converged(r) << "\n";
  return 0;
}

struct LcurveCfg {
  std::string in, out;
  double lo = 0.0, hi = 0.0;
  std::size_t count = 30;
  std::string solver = "exact";
  std::string format = "csv";
  bool want_corner = false;
  tvc_denoise_params p{};
};

int run_lcurve(const LcurveCfg& c) {
  SignalPtr y = read_signal(c.in);
  const tvc_solver solver =
      c.solver == "clip" ? TVC_SOLVER_CLIP : TVC_SOLVER_EXACT;
  if (c.solver != "clip" && c.solver != "exact")
    throw std::runtime_error("unknown --solver: " + c.solver);

  tvc_lcurve_sweep* sw = nullptr;
  check(tvc_lcurve_sweep_run(y.get(), c.lo, c.hi, c.count, solver, &c.p, &sw));
  SweepPtr swp(sw);

  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!c.out.empty() && c.out != "-") {
    file.open(c.out);
    if (!file) throw std::runtime_error("cannot open output file: " + c.out);
    os = &file;
  }

  const std::size_t count = tvc_lcurve_sweep_size(sw);
  if (c.format == "json") {
    json arr = json::array();
    for (std::size_t i = 0; i < count; ++i) {
      tvc_lcurve_point pt{};
      check(tvc_lcurve_sweep_point(sw, i, &pt));
      arr.push_back({{"lambda", pt.lambda},
                     {"residual_norm", pt.residual_norm},
                     {"tv_norm", pt.tv_norm},
                     {"cost", pt.cost}});
    }
    *os << arr.dump(2) << "\n";
  } else if (c.format == "csv") {
    *os << "lambda,residual_norm,tv_norm,cost\n";
    for (std::size_t i = 0; i < count; ++i) {
      tvc_lcurve_point pt{};
      check(tvc_lcurve_sweep_point(sw, i, &pt));
      *os << fmt_double(pt.lambda) << "," << fmt_double(pt.residual_norm) << ","
          << fmt_double(pt.tv_norm) << "," << fmt_double(pt.cost) << "\n";
    }
  } else {
    throw std::runtime_error("unknown --format: " + c.format);
  }

  if (c.want_corner) {
    double lam = 0.0;
    check(tvc_lcurve_corner(sw, &lam));
    double lmax = 0.0;
    check(tvc_lambda_max(y.get(), &lmax));
    std::cout << "corner_lambda " << fmt_double(lam) << "\n";
    if (lmax > 0.0)
      std::cout << "corner_lambda_normalized " << fmt_double(lam / lmax) << "\n";
  }
  return 0;
}

struct MetricsCfg {
  std::string clean, estimate, noisy;
  std::string format = "csv";
};

int run_metrics(const MetricsCfg& c) {
  SignalPtr clean = read_signal(c.clean);
  SignalPtr est = read_signal(c.estimate);
  double r = 0.0;
  check(tvc_rmse(clean.get(), est.get(), &r));
  int exact = 0;
  double snr = 0.0;
  check(tvc_snr_db(clean.get(), est.get(), &exact, &snr));

  json out;
  out["rmse"] = r;
  if (exact)
    out["snr_db"] = "exact";
  else
    out["snr_db"] = snr;
  if (!c.noisy.empty()) {
    SignalPtr noisy = read_signal(c.noisy);
    double rn = 0.0;
    check(tvc_rmse(clean.get(), noisy.get(), &rn));
    int exact_n = 0;
    double snr_n = 0.0;
    check(tvc_snr_db(clean.get(), noisy.get(), &exact_n, &snr_n));
    out["rmse_noisy"] = rn;
    if (!exact && !exact_n) out["snr_improvement_db"] = snr - snr_n;
  }

  if (c.format == "json") {
    std::cout << out.dump(2) << "\n";
  } else if (c.format == "csv") {
    std::string header, row;
    for (auto it = out.begin(); it != out.end(); ++it) {
      if (!header.empty()) {
        header += ",";
        row += ",";
      }
      header += it.key();
      row += it->is_string() ? it->get<std::string>()
                             : fmt_double(it->get<double>());
    }
    std::cout << header << "\n" << row << "\n";
  } else {
    throw std::runtime_error("unknown --format: " + c.format);
  }
  return 0;
}

struct WavDenoiseCfg {
  std::string in, out;
  double lambda = -1.0;  // < 0 means auto-select via the L-curve
  double lo = 0.0, hi = 0.0;
  std::size_t count = 30;
  std::string solver = "clip";
  std::size_t window = 0;  // 0 = whole-signal
  tvc_denoise_params p{};
};

int run_wav_denoise(const WavDenoiseCfg& c) {
  SignalPtr y = read_wav_file(c.in);

  double lam = c.lambda;
  if (lam < 0.0) {
    double lmax = 0.0;
    check(tvc_lambda_max(y.get(), &lmax));
    if (lmax <= 0.0) throw std::runtime_error("constant input; nothing to select");
    const double lo = c.lo > 0.0 ? c.lo : lmax / 1000.0;
    const double hi = c.hi > 0.0 ? c.hi : lmax;
    tvc_lcurve_sweep* sw = nullptr;
    check(tvc_lcurve_sweep_run(y.get(), lo, hi, c.count, TVC_SOLVER_EXACT, &c.p, &sw));
    SweepPtr swp(sw);
    check(tvc_lcurve_corner(sw, &lam));
    std::cerr << "selected lambda=" << fmt_double(lam)
              << " (lambda/lambda_max=" << fmt_double(lam / lmax) << ")\n";
  }

  tvc_denoise_params p = c.p;
  p.lambda = lam;
  SignalPtr x;
  if (c.solver == "exact") {
    tvc_signal* s = nullptr;
    check(tvc_denoise_exact(y.get(), lam, &s));
    x.reset(s);
  } else if (c.solver == "clip") {
    tvc_signal* s = nullptr;
    if (c.window > 0) {
      check(tvc_denoise_overlap_add(y.get(), &p, c.window, &s));
      x.reset(s);
    } else {
      tvc_denoise_result* r = nullptr;
      check(tvc_denoise_clip(y.get(), &p, &r));
      ResultPtr rp(r);
      const tvc_signal* xr = tvc_result_signal(r);
      check(tvc_signal_create(tvc_signal_samples(xr), tvc_signal_size(xr), &s));
      x.reset(s);
    }
  } else {
    throw std::runtime_error("unknown --solver: " + c.solver);
  }
  check(tvc_signal_set_rate(x.get(), tvc_signal_rate(y.get())));
  write_wav_file(c.out, x.get());
  return 0;
}

struct OracleCheckCfg {
  std::string in;
  double lambda = 1.0;
  tvc_denoise_params p{};
};

int run_oracle_check(const OracleCheckCfg& c) {
  SignalPtr y = read_signal(c.in);
  tvc_denoise_params p = c.p;
  p.lambda = c.lambda;

  tvc_denoise_result* r = nullptr;
  check(tvc_denoise_clip(y.get(), &p, &r));
  ResultPtr rp(r);
  const tvc_signal* x_clip = tvc_result_signal(r);

  tvc_signal* xe = nullptr;
  check(tvc_denoise_exact(y.get(), c.lambda, &xe));
  SignalPtr x_exact(xe);

  tvc_certificate cert_clip{}, cert_exact{};
  check(tvc_check_optimality(y.get(), x_clip, c.lambda, -1.0, &cert_clip));
  check(tvc_check_optimality(y.get(), x_exact.get(), c.lambda, -1.0, &cert_exact));

  double disagreement = 0.0;
  check(tvc_rmse(x_clip, x_exact.get(), &disagreement));
  double cost_clip = 0.0, cost_exact = 0.0;
  check(tvc_cost(y.get(), x_clip, c.lambda, &cost_clip));
  check(tvc_cost(y.get(), x_exact.get(), c.lambda, &cost_exact));

  std::cout << "lambda " << fmt_double(c.lambda) << "\n"
            << "iterations " << tvc_result_iterations(r) << "\n"
            << "rmse_clip_vs_exact " << fmt_double(disagreement) << "\n"
            << "cost_clip " << fmt_double(cost_clip) << "\n"
            << "cost_exact " << fmt_double(cost_exact) << "\n"
            << "clip_feasibility " << fmt_double(cert_clip.max_feasibility_violation) << "\n"
            << "clip_complementarity " << fmt_double(cert_clip.max_complementarity_violation)
            << "\n"
            << "clip_balance " << fmt_double(cert_clip.balance_residual) << "\n"
            << "exact_feasibility " << fmt_double(cert_exact.max_feasibility_violation) << "\n"
            << "exact_complementarity "
            << fmt_double(cert_exact.max_complementarity_violation) << "\n"
            << "exact_balance " << fmt_double(cert_exact.balance_residual) << "\n";
  return 0;
}

void add_solver_params(CLI::App* cmd, tvc_denoise_params* p) {
  cmd->add_option("--iters", p->max_iter, "iteration budget for the clip solver");
  cmd->add_option("--alpha", p->alpha, "step scale (>= 4)");
  cmd->add_option("--tol", p->tol, "early stop on relative cost decrease (0 disables)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"1D total-variation denoising by iterative clipping"};
  app.require_subcommand(1);

  SynthCfg synth;
  CLI::App* c_synth = app.add_subcommand("synth", "generate a test signal");
  c_synth->add_option("--kind", synth.kind, "step | square | vuvuzela")->required();
  c_synth->add_option("--n", synth.n, "number of samples");
  c_synth->add_option("--edge", synth.edge, "step edge index");
  c_synth->add_option("--low", synth.low, "step low level");
  c_synth->add_option("--high", synth.high, "step high level");
  c_synth->add_option("--period", synth.period, "square full period");
  c_synth->add_option("--amplitude", synth.amplitude, "square amplitude");
  c_synth->add_option("--noise", synth.noise, "none | gaussian | laplacian");
  c_synth->add_option("--level", synth.level, "noise level, % of peak-to-peak");
  c_synth->add_option("--seed", synth.seed, "noise seed");
  c_synth->add_option("--seconds", synth.seconds, "vuvuzela clip length");
  c_synth->add_option("--rate", synth.rate, "vuvuzela sample rate");
  c_synth->add_option("--out", synth.out, "output file (.csv or .wav)")->required();
  c_synth->add_option("--clean-out", synth.clean_out, "also write the clean signal");

  DenoiseCfg den;
  tvc_denoise_params_init(&den.p);
  CLI::App* c_den = app.add_subcommand("denoise", "denoise a signal file");
  c_den->add_option("--in", den.in, "input signal (.csv or .wav)")->required();
  c_den->add_option("--lambda", den.p.lambda, "regularization weight")->required();
  c_den->add_option("--solver", den.solver, "clip | exact");
  c_den->add_option("--out", den.out, "output file")->required();
  c_den->add_option("--history", den.history, "write per-iteration cost CSV");
  add_solver_params(c_den, &den.p);

  LcurveCfg lc;
  tvc_denoise_params_init(&lc.p);
  CLI::App* c_lc = app.add_subcommand("lcurve", "sweep lambda and export the L-curve");
  c_lc->add_option("--in", lc.in, "input signal")->required();
  c_lc->add_option("--lo", lc.lo, "smallest lambda")->required();
  c_lc->add_option("--hi", lc.hi, "largest lambda")->required();
  c_lc->add_option("--count", lc.count, "number of lambda values");
  c_lc->add_option("--solver", lc.solver, "exact | clip");
  c_lc->add_option("--out", lc.out, "output file, '-' for stdout");
  c_lc->add_option("--format", lc.format, "csv | json");
  c_lc->add_flag("--corner", lc.want_corner, "also print the corner lambda");
  add_solver_params(c_lc, &lc.p);

  MetricsCfg met;
  CLI::App* c_met = app.add_subcommand("metrics", "quality metrics for an estimate");
  c_met->add_option("--clean", met.clean, "clean reference")->required();
  c_met->add_option("--estimate", met.estimate, "estimate to score")->required();
  c_met->add_option("--noisy", met.noisy, "noisy input, for improvement figures");
  c_met->add_option("--format", met.format, "csv | json");

  WavDenoiseCfg wav;
  tvc_denoise_params_init(&wav.p);
  wav.p.max_iter = 200;
  CLI::App* c_wav = app.add_subcommand("wav-denoise", "denoise a WAV file");
  c_wav->add_option("--in", wav.in, "input WAV")->required();
  c_wav->add_option("--out", wav.out, "output WAV")->required();
  c_wav->add_option("--lambda", wav.lambda, "fixed lambda (omit for L-curve auto)");
  c_wav->add_option("--lo", wav.lo, "sweep lower bound for auto");
  c_wav->add_option("--hi", wav.hi, "sweep upper bound for auto");
  c_wav->add_option("--count", wav.count, "sweep point count for auto");
  c_wav->add_option("--solver", wav.solver, "clip | exact");
  c_wav->add_option("--window", wav.window, "overlap-add window (0 = whole signal)");
  add_solver_params(c_wav, &wav.p);

  OracleCheckCfg orc;
  tvc_denoise_params_init(&orc.p);
  orc.p.max_iter = 10000;
  CLI::App* c_orc = app.add_subcommand("oracle-check",
                                       "cross-check clip solver against the exact oracle");
  c_orc->add_option("--in", orc.in, "input signal")->required();
  c_orc->add_option("--lambda", orc.lambda, "regularization weight")->required();
  add_solver_params(c_orc, &orc.p);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (c_synth->parsed()) return run_synth(synth);
    if (c_den->parsed()) return run_denoise(den);
    if (c_lc->parsed()) return run_lcurve(lc);
    if (c_met->parsed()) return run_metrics(met);
    if (c_wav->parsed()) return run_wav_denoise(wav);
    if (c_orc->parsed()) return run_oracle_check(orc);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
