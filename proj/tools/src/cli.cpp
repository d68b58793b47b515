#include "qharmonics_cli/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "CLI11.hpp"
#include "qharmonics/error.hpp"
#include "qharmonics/fixtures.hpp"
#include "qharmonics/format.hpp"
#include "qharmonics/qft.hpp"
#include "qharmonics/qlct.hpp"
#include "qharmonics/qsig_io.hpp"
#include "qharmonics/smoothing.hpp"
#include "qharmonics/variation.hpp"

namespace qh::cli {
namespace {

namespace fs = std::filesystem;

/// Bad flag values detected before any compute starts.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string in;
  std::string out;
  std::string fixture;
  std::string side = "two";
  std::string mu1 = "1,0,0";
  std::string mu2 = "0,1,0";
  double a1 = 0.0, b1 = 1.0, c1 = -1.0, d1 = 0.0;
  double a2 = 0.0, b2 = 1.0, c2 = -1.0, d2 = 0.0;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<std::size_t> grid;
  std::optional<double> extent;
  std::string window = "8";
  std::string schedule = "1,0.1,0.01";
  std::optional<std::string> point;
  std::string m_list = "25,50,100";
  std::string eps = "0.1,0.1";
  std::string transform = "qft";
  std::string clamp = "clip";
  bool phase_corrected = false;
};

/// Paths written by the running command; removed again on runtime failure.
class Outputs {
 public:
  void write(const fs::path& path, std::span<const std::uint8_t> bytes) {
    written_.push_back(path);
    write_file(path, bytes);
  }
  void discard() {
    for (const auto& p : written_) {
      std::error_code ec;
      fs::remove(p, ec);
    }
    written_.clear();
  }

 private:
  std::vector<fs::path> written_;
};

using Job = std::function<void(Outputs&, std::ostream&)>;

std::vector<double> parse_list(const std::string& text, const char* flag) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      if (used != item.size() || !std::isfinite(v)) throw std::invalid_argument(item);
      values.push_back(v);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": '" + text + "' is not a list of reals");
    }
  }
  if (values.empty()) throw UsageError(std::string(flag) + ": empty list");
  return values;
}

std::vector<double> parse_fixed(const std::string& text, std::size_t n, const char* flag) {
  const auto v = parse_list(text, flag);
  if (v.size() != n) {
    throw UsageError(std::string(flag) + ": expected " + std::to_string(n) + " values");
  }
  return v;
}

template <class F>
auto validated(const char* flag, F&& make) {
  try {
    return make();
  } catch (const Error& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

Side parse_side(const std::string& s) {
  if (s == "right") return Side::RightSided;
  if (s == "left") return Side::LeftSided;
  return Side::TwoSided;
}

AxisPair parse_axes(const Options& o) {
  const auto m1 = parse_fixed(o.mu1, 3, "--mu1");
  const auto m2 = parse_fixed(o.mu2, 3, "--mu2");
  return validated("--mu1/--mu2", [&] {
    return AxisPair::make(PureUnit::make(m1[0], m1[1], m1[2]),
                          PureUnit::make(m2[0], m2[1], m2[2]));
  });
}

LctKind parse_lct(const Options& o, const AxisPair& axes) {
  LctKind kind;
  kind.side = parse_side(o.side);
  kind.axes = axes;
  kind.a1 = validated("--a1..--d1", [&] { return LctParams::make(o.a1, o.b1, o.c1, o.d1); });
  kind.a2 = validated("--a2..--d2", [&] { return LctParams::make(o.a2, o.b2, o.c2, o.d2); });
  return kind;
}

std::pair<double, double> parse_window(const Options& o) {
  const auto w = parse_list(o.window, "--window");
  if (w.size() > 2) throw UsageError("--window: expected M or M,N");
  const double M = w[0], N = w.size() == 2 ? w[1] : w[0];
  if (!(M > 0.0) || !(N > 0.0)) throw UsageError("--window: bounds must be positive");
  return {M, N};
}

std::pair<double, double> parse_point(const Options& o, double s, double t) {
  if (!o.point) return {s, t};
  const auto p = parse_fixed(*o.point, 2, "--point");
  return {p[0], p[1]};
}

double extent_or(const Options& o, double fallback) {
  const double e = o.extent.value_or(fallback);
  if (!(e > 0.0)) throw UsageError("--extent must be positive");
  return e;
}

std::size_t grid_or(const Options& o, std::size_t fallback) {
  const std::size_t n = o.grid.value_or(fallback);
  if (n < 2) throw UsageError("--grid must be at least 2");
  return n;
}

fixtures::Fixture fixture_named(const std::string& name) {
  return validated("--fixture", [&] { return fixtures::by_name(name); });
}

void require_out(const Options& o) {
  if (o.out.empty()) throw UsageError("--out is required");
}

/// Signal source: either --in or --fixture sampled on --grid/--extent.
std::function<QSignal2D()> signal_source(const Options& o) {
  if (o.in.empty() == o.fixture.empty()) {
    throw UsageError("exactly one of --in or --fixture is required");
  }
  if (!o.in.empty()) {
    if (o.grid || o.extent) throw UsageError("--grid/--extent only apply to --fixture input");
    const std::string path = o.in;
    return [path] { return load_qsig(path); };
  }
  const fixtures::Fixture fx = fixture_named(o.fixture);
  const GridSpec g = GridSpec::centered(grid_or(o, 256), extent_or(o, 8.0));
  return [fx, g] { return sample(fx.fn, g); };
}

FreqWindow window_for(const Options& o, std::size_t n) {
  const auto [M, N] = parse_window(o);
  FreqWindow w{M, N, n, n};
  validated("--window", [&] {
    w.validate();
    return 0;
  });
  return w;
}

std::string csv(std::initializer_list<double> values) {
  std::string line;
  for (double v : values) {
    if (!line.empty()) line += ',';
    line += format_real(v);
  }
  return line;
}

// Subcommand planners: validate every flag, then return the compute step.

Job plan_qft(const Options& o) {
  const auto source = signal_source(o);
  require_out(o);
  const QftKind kind{parse_side(o.side), parse_axes(o)};
  const auto [M, N] = parse_window(o);
  const std::optional<std::size_t> n = o.grid;
  const std::string out = o.out;
  return [=](Outputs& outputs, std::ostream&) {
    const QSignal2D f = source();
    FreqWindow w{M, N, n.value_or(f.grid().ns), n.value_or(f.grid().nt)};
    outputs.write(out, encode_qspec(qft_forward(f, kind, w)));
  };
}

Job plan_qlct(const Options& o) {
  const auto source = signal_source(o);
  require_out(o);
  const LctKind kind = parse_lct(o, parse_axes(o));
  const auto [M, N] = parse_window(o);
  const std::optional<std::size_t> n = o.grid;
  const std::string out = o.out;
  return [=](Outputs& outputs, std::ostream&) {
    const QSignal2D f = source();
    FreqWindow w{M, N, n.value_or(f.grid().ns), n.value_or(f.grid().nt)};
    const GridSpec og = qlct_output_grid(f.grid(), kind, w);
    outputs.write(out, encode_qspec(qlct_forward(f, kind, og)));
  };
}

Job plan_qfrft(const Options& o) {
  const auto source = signal_source(o);
  require_out(o);
  if (!o.alpha || !o.beta) throw UsageError("--alpha and --beta are required");
  const AxisPair axes = parse_axes(o);
  const Side side = parse_side(o.side);
  const double alpha = *o.alpha, beta = *o.beta;
  if (LctParams::rotation(alpha).degenerate() || LctParams::rotation(beta).degenerate()) {
    throw UsageError("--alpha/--beta: sin(alpha) and sin(beta) must be nonzero");
  }
  const auto [M, N] = parse_window(o);
  const std::optional<std::size_t> n = o.grid;
  const bool pc = o.phase_corrected;
  const std::string out = o.out;
  return [=](Outputs& outputs, std::ostream&) {
    const QSignal2D f = source();
    const GridSpec og =
        FreqWindow{M, N, n.value_or(f.grid().ns), n.value_or(f.grid().nt)}.grid();
    outputs.write(out, encode_qspec(qfrft(f, alpha, beta, side, og, pc, axes)));
  };
}

Job plan_inverse(const Options& o, bool lct) {
  require_out(o);
  if (o.in.empty()) throw UsageError("--in is required");
  const std::string in = o.in, out = o.out;
  const std::optional<std::size_t> n = o.grid;
  const double extent = extent_or(o, 8.0);
  if (n) grid_or(o, 0);
  return [=](Outputs& outputs, std::ostream&) {
    const QSpectrum2D spec = load_qspec(in);
    const Provenance& p = spec.provenance();
    const GridSpec g = GridSpec::centered(n.value_or(spec.grid().ns), extent);
    QSignal2D f(g);
    if (!lct) {
      if (is_qlct(p.kind)) throw Error(Errc::ProvenanceMismatch, "spectrum is not a QFT");
      f = qft_inverse(spec, {side_of(p.kind), p.axes}, g);
    } else {
      if (!is_qlct(p.kind)) throw Error(Errc::ProvenanceMismatch, "spectrum is not a QLCT");
      f = p.phase_corrected ? qfrft_inverse(spec, g) : qlct_inverse(spec, lct_kind_from(p), g);
    }
    outputs.write(out, encode_qsig(f));
  };
}

Job plan_roundtrip(const Options& o) {
  const fixtures::Fixture fx = fixture_named(o.fixture.empty() ? "gaussian" : o.fixture);
  if (!o.in.empty()) throw UsageError("roundtrip takes --fixture, not --in");
  if (o.transform != "qft" && o.transform != "qlct") {
    throw UsageError("--transform must be qft or qlct");
  }
  const GridSpec g = GridSpec::centered(grid_or(o, 256), extent_or(o, 10.0));
  const FreqWindow w = window_for(o, g.ns);
  const AxisPair axes = parse_axes(o);
  const bool lct = o.transform == "qlct";
  const LctKind lk = parse_lct(o, axes);
  const QftKind qk{parse_side(o.side), axes};
  return [=](Outputs&, std::ostream& out) {
    const QSignal2D f = sample(fx.fn, g);
    QSignal2D back(g);
    if (lct) {
      back = qlct_inverse(qlct_forward(f, lk, qlct_output_grid(g, lk, w)), lk, g);
    } else {
      back = qft_inverse(qft_forward(f, qk, w), qk, g);
    }
    out << "l1_error,linf_error\n" << csv({l1_diff(back, f), linf_diff(back, f)}) << '\n';
  };
}

Job plan_jump_demo(const Options& o) {
  const fixtures::Fixture fx = fixture_named(o.fixture.empty() ? "indicator" : o.fixture);
  const auto Ms = parse_list(o.m_list, "--M");
  for (double M : Ms) {
    if (!(M > 0.0)) throw UsageError("--M values must be positive");
  }
  const auto [x0, y0] = parse_point(o, 1.0, 1.0);
  SincQuadrature quad;
  const double extent = extent_or(o, 8.0);
  quad.s_lo = quad.t_lo = -extent;
  quad.s_hi = quad.t_hi = extent;
  // Fixtures with jump lines vanish outside them.
  if (!fx.s_breaks.empty() && !o.extent) {
    quad.s_lo = *std::min_element(fx.s_breaks.begin(), fx.s_breaks.end());
    quad.s_hi = *std::max_element(fx.s_breaks.begin(), fx.s_breaks.end());
  }
  if (!fx.t_breaks.empty() && !o.extent) {
    quad.t_lo = *std::min_element(fx.t_breaks.begin(), fx.t_breaks.end());
    quad.t_hi = *std::max_element(fx.t_breaks.begin(), fx.t_breaks.end());
  }
  quad.s_breaks = fx.s_breaks;
  quad.t_breaks = fx.t_breaks;
  return [=](Outputs&, std::ostream& out) {
    const Quaternion eta = eta_jump_average(fx.fn, x0, y0).value;
    out << sweep_csv_header() << '\n';
    for (double M : Ms) {
      const Quaternion I = dirichlet_sinc_inverse(fx.fn, x0, y0, M, M, quad);
      out << to_csv_row({M, M, I, qabs(I - eta)}) << '\n';
    }
  };
}

Job plan_gauss_mean(const Options& o) {
  GaussMeanParams params;
  params.schedule = parse_list(o.schedule, "--schedule");
  validated("--schedule", [&] {
    params.validate();
    return 0;
  });
  const std::string out_path = o.out;
  if (o.in.empty() == o.fixture.empty()) {
    throw UsageError("exactly one of --in or --fixture is required");
  }
  if (!o.in.empty()) {
    const std::string in = o.in;
    const std::optional<std::size_t> n = o.grid;
    if (n) grid_or(o, 0);
    const double extent = extent_or(o, 8.0);
    return [=](Outputs& outputs, std::ostream& out) {
      const QSpectrum2D spec = load_qspec(in);
      const GridSpec g = GridSpec::centered(n.value_or(spec.grid().ns), extent);
      const auto steps = gauss_mean_inverse(spec, params, g);
      out << "alpha,l1_error\n";
      for (const auto& s : steps) out << format_real(s.alpha) << ",\n";
      if (!out_path.empty()) outputs.write(out_path, encode_qsig(steps.back().signal));
    };
  }
  const fixtures::Fixture fx = fixture_named(o.fixture);
  const GridSpec g = GridSpec::centered(grid_or(o, 128), extent_or(o, 8.0));
  const FreqWindow w = window_for(o, g.ns);
  const QftKind kind{Side::TwoSided, parse_axes(o)};
  return [=](Outputs& outputs, std::ostream& out) {
    const QSignal2D f = sample(fx.fn, g);
    const auto steps = gauss_mean_inverse(qft_forward(f, kind, w), params, g, f);
    out << "alpha,l1_error\n";
    for (const auto& s : steps) out << csv({s.alpha, *s.l1_error}) << '\n';
    if (!out_path.empty()) outputs.write(out_path, encode_qsig(steps.back().signal));
  };
}

Job plan_variation(const Options& o) {
  const auto source = signal_source(o);
  return [=](Outputs&, std::ostream& out) {
    const QSignal2D f = source();
    const GridSpec& g = f.grid();
    std::vector<double> s(g.ns), t(g.nt), values(g.size());
    for (std::size_t i = 0; i < g.ns; ++i) s[i] = g.s(i);
    for (std::size_t j = 0; j < g.nt; ++j) t[j] = g.t(j);
    for (std::size_t k = 0; k < values.size(); ++k) values[k] = f.data()[k].w;
    const NetField field(Net::make(s, t), values);
    const VariationReport report = hardy_bvf_check(field);
    out << csv_header(report) << '\n' << to_csv_row(report) << '\n';
  };
}

Job plan_lc_diag(const Options& o) {
  const fixtures::Fixture fx = fixture_named(o.fixture.empty() ? "gaussian" : o.fixture);
  const auto [x0, y0] = parse_point(o, 0.0, 0.0);
  const auto eps = parse_fixed(o.eps, 2, "--eps");
  const double R = extent_or(o, 4.0);
  if (!(eps[0] > 0.0) || !(eps[1] > 0.0) || !(eps[0] < R) || !(eps[1] < R)) {
    throw UsageError("--eps values must lie in (0, extent)");
  }
  return [=](Outputs&, std::ostream& out) {
    const LcDiagnostic d = lc_class_diagnostic(fx.fn, x0, y0, eps[0], eps[1], R);
    out << "val1,val2,a,b\n" << csv({d.val1, d.val2, d.a, d.b}) << '\n';
  };
}

Job plan_img2qsig(const Options& o) {
  if (o.in.empty()) throw UsageError("--in is required");
  require_out(o);
  const std::string in = o.in, out = o.out;
  return [=](Outputs& outputs, std::ostream&) {
    outputs.write(out, encode_qsig(image_to_qsig(read_file(in))));
  };
}

Job plan_qsig2img(const Options& o) {
  if (o.in.empty()) throw UsageError("--in is required");
  require_out(o);
  if (o.clamp != "clip" && o.clamp != "rescale") {
    throw UsageError("--clamp must be clip or rescale");
  }
  const ClampMode mode = o.clamp == "clip" ? ClampMode::Clip : ClampMode::Rescale;
  const std::string in = o.in, out_path = o.out;
  return [=](Outputs& outputs, std::ostream& out) {
    ImageStats stats;
    const auto ppm = qsig_to_image(load_qsig(in), mode, &stats);
    outputs.write(out_path, ppm);
    out << "scalar_min,scalar_max,clipped_channels\n"
        << csv({stats.scalar_min, stats.scalar_max}) << ',' << stats.clipped_channels << '\n';
  };
}

Job plan_fixtures(const Options& o) {
  require_out(o);
  std::vector<fixtures::Fixture> chosen;
  if (o.fixture.empty()) {
    for (const auto& name : fixtures::names()) chosen.push_back(fixtures::by_name(name));
  } else {
    chosen.push_back(fixture_named(o.fixture));
  }
  const GridSpec g = GridSpec::centered(grid_or(o, 256), extent_or(o, 8.0));
  const fs::path dir = o.out;
  return [=](Outputs& outputs, std::ostream& out) {
    fs::create_directories(dir);
    for (const auto& fx : chosen) {
      const fs::path path = dir / (fx.name + ".qsig");
      outputs.write(path, encode_qsig(sample(fx.fn, g)));
      out << path.string() << '\n';
    }
  };
}

void add_signal_flags(CLI::App* app, Options& o) {
  app->add_option("--in", o.in, "Input QSIG file");
  app->add_option("--fixture", o.fixture, "Built-in fixture name");
  app->add_option("--grid", o.grid, "Samples per axis");
  app->add_option("--extent", o.extent, "Half-width of the square domain");
}

void add_axis_flags(CLI::App* app, Options& o) {
  app->add_option("--side", o.side, "Kernel placement")
      ->check(CLI::IsMember({"two", "right", "left"}));
  app->add_option("--mu1", o.mu1, "First axis as x,y,z");
  app->add_option("--mu2", o.mu2, "Second axis as x,y,z");
}

void add_lct_flags(CLI::App* app, Options& o) {
  app->add_option("--a1", o.a1);
  app->add_option("--b1", o.b1);
  app->add_option("--c1", o.c1);
  app->add_option("--d1", o.d1);
  app->add_option("--a2", o.a2);
  app->add_option("--b2", o.b2);
  app->add_option("--c2", o.c2);
  app->add_option("--d2", o.d2);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quaternion Fourier and linear canonical transforms", "qharmonics"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  Options o;

  struct Entry {
    CLI::App* app;
    std::function<Job()> plan;
  };
  std::vector<Entry> entries;
  auto sub = [&](const char* name, const char* desc, std::function<Job()> plan) {
    CLI::App* s = app.add_subcommand(name, desc);
    entries.push_back({s, std::move(plan)});
    return s;
  };

  CLI::App* s = sub("qft", "Forward QFT to a spectrum file", [&] { return plan_qft(o); });
  add_signal_flags(s, o);
  add_axis_flags(s, o);
  s->add_option("--window", o.window, "Frequency half-widths M[,N]");
  s->add_option("--out", o.out, "Output spectrum file");

  s = sub("iqft", "Inverse QFT of a spectrum file", [&] { return plan_inverse(o, false); });
  s->add_option("--in", o.in, "Input spectrum file");
  s->add_option("--out", o.out, "Output QSIG file");
  s->add_option("--grid", o.grid);
  s->add_option("--extent", o.extent);

  s = sub("qlct", "Forward QLCT to a spectrum file", [&] { return plan_qlct(o); });
  add_signal_flags(s, o);
  add_axis_flags(s, o);
  add_lct_flags(s, o);
  s->add_option("--window", o.window);
  s->add_option("--out", o.out);

  s = sub("iqlct", "Inverse QLCT of a spectrum file", [&] { return plan_inverse(o, true); });
  s->add_option("--in", o.in);
  s->add_option("--out", o.out);
  s->add_option("--grid", o.grid);
  s->add_option("--extent", o.extent);

  s = sub("qfrft", "Fractional QFT to a spectrum file", [&] { return plan_qfrft(o); });
  add_signal_flags(s, o);
  add_axis_flags(s, o);
  s->add_option("--alpha", o.alpha);
  s->add_option("--beta", o.beta);
  s->add_option("--window", o.window);
  s->add_option("--out", o.out);
  s->add_flag("--phase-corrected", o.phase_corrected);

  s = sub("roundtrip", "Forward and inverse transform of a fixture",
          [&] { return plan_roundtrip(o); });
  s->add_option("--fixture", o.fixture);
  s->add_option("--in", o.in);
  s->add_option("--grid", o.grid);
  s->add_option("--extent", o.extent);
  s->add_option("--window", o.window);
  s->add_option("--transform", o.transform);
  add_axis_flags(s, o);
  add_lct_flags(s, o);

  s = sub("jump-demo", "Partial-sum sweep at a jump point", [&] { return plan_jump_demo(o); });
  s->add_option("--fixture", o.fixture);
  s->add_option("--M", o.m_list, "Comma-separated window sizes");
  s->add_option("--point", o.point);
  s->add_option("--extent", o.extent);

  s = sub("gauss-mean", "Gauss-Weierstrass means", [&] { return plan_gauss_mean(o); });
  add_signal_flags(s, o);
  s->add_option("--mu1", o.mu1);
  s->add_option("--mu2", o.mu2);
  s->add_option("--window", o.window);
  s->add_option("--schedule", o.schedule);
  s->add_option("--out", o.out);

  s = sub("variation", "Bounded-variation report of the scalar part",
          [&] { return plan_variation(o); });
  add_signal_flags(s, o);

  s = sub("lc-diag", "LC-class diagnostic at a point", [&] { return plan_lc_diag(o); });
  s->add_option("--fixture", o.fixture);
  s->add_option("--point", o.point);
  s->add_option("--eps", o.eps, "eps1,eps2");
  s->add_option("--extent", o.extent, "Outer radius R");

  s = sub("img2qsig", "PPM image to QSIG", [&] { return plan_img2qsig(o); });
  s->add_option("--in", o.in);
  s->add_option("--out", o.out);

  s = sub("qsig2img", "QSIG to PPM image", [&] { return plan_qsig2img(o); });
  s->add_option("--in", o.in);
  s->add_option("--out", o.out);
  s->add_option("--clamp", o.clamp);

  s = sub("fixtures", "Write built-in fixtures as QSIG files", [&] { return plan_fixtures(o); });
  s->add_option("--fixture", o.fixture);
  s->add_option("--grid", o.grid);
  s->add_option("--extent", o.extent);
  s->add_option("--out", o.out, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Job job;
  try {
    for (const auto& e : entries) {
      if (e.app->parsed()) job = e.plan();
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  Outputs outputs;
  std::ostringstream buffer;
  try {
    job(outputs, buffer);
  } catch (const std::exception& e) {
    outputs.discard();
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  out << buffer.str();
  return kExitOk;
}

}  // namespace qh::cli
