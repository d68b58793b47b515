#include "qharmonics/smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qharmonics/error.hpp"
#include "qharmonics/fixtures.hpp"
#include "qharmonics/format.hpp"
#include "qharmonics/kernel_pass.hpp"
#include "qharmonics/quadrature.hpp"

namespace qh {
namespace {

constexpr double kPi = std::numbers::pi;

void check_window(double M, double N) {
  if (!(M > 0.0) || !(N > 0.0) || !std::isfinite(M) || !std::isfinite(N)) {
    throw Error(Errc::NonPositiveWindow, "partial-sum window must be positive");
  }
}

// sin(M s) / (pi s)
double dirichlet(double M, double s) {
  if (s == 0.0) return M / kPi;
  return std::sin(M * s) / (kPi * s);
}

CompositeRule sinc_axis_rule(double x0, double lo, double hi, const std::vector<double>& breaks,
                             double M, std::size_t order) {
  // f(x0 - s) is supported on s in [x0 - hi, x0 - lo]; its jumps sit at x0 - b.
  std::vector<double> extra;
  for (double b : breaks) extra.push_back(x0 - b);
  return composite_rule(panel_breaks(x0 - hi, x0 - lo, kPi / M, extra), order);
}

std::vector<double> dyadic_to_zero(double eps, std::size_t levels) {
  std::vector<double> b{0.0};
  for (std::size_t k = levels; k > 0; --k) b.push_back(std::ldexp(eps, -static_cast<int>(k)));
  b.push_back(eps);
  return b;
}

}  // namespace

Quaternion dirichlet_partial_inverse(const QSpectrum2D& spec, double x0, double y0, double M,
                                     double N) {
  check_window(M, N);
  const Provenance& prov = spec.provenance();
  if (is_qlct(prov.kind)) {
    throw Error(Errc::ProvenanceMismatch, "partial-sum inversion needs a QFT spectrum");
  }
  const Side side = side_of(prov.kind);
  const GridSpec& g = spec.grid();
  const double tol = 1e-12 * std::max(M, N);
  Quaternion acc;
  for (std::size_t l = 0; l < g.nt; ++l) {
    const double v = g.t(l);
    if (std::abs(v) > N + tol) continue;
    const Quaternion ev = qexp_pure(prov.axes.mu2(), v * y0);
    for (std::size_t k = 0; k < g.ns; ++k) {
      const double u = g.s(k);
      if (std::abs(u) > M + tol) continue;
      const Quaternion eu = qexp_pure(prov.axes.mu1(), u * x0);
      const Quaternion& F = spec.at(k, l);
      switch (side) {
        case Side::TwoSided: acc += eu * F * ev; break;
        case Side::RightSided: acc += F * ev * eu; break;
        case Side::LeftSided: acc += ev * eu * F; break;
      }
    }
  }
  return acc * (g.cell_area() / (4.0 * kPi * kPi));
}

Quaternion dirichlet_partial_inverse(const QFunction& spectrum, const AxisPair& axes, double x0,
                                     double y0, double M, double N,
                                     const SpectrumQuadrature& quad) {
  check_window(M, N);
  const CompositeRule ru =
      composite_rule(panel_breaks(-M, M, kPi / (std::abs(x0) + quad.bandwidth)), quad.order);
  const CompositeRule rv =
      composite_rule(panel_breaks(-N, N, kPi / (std::abs(y0) + quad.bandwidth)), quad.order);
  std::vector<Quaternion> eu(ru.nodes.size());
  for (std::size_t k = 0; k < eu.size(); ++k) {
    eu[k] = qexp_pure(axes.mu1(), ru.nodes[k] * x0) * ru.weights[k];
  }
  Quaternion acc;
  for (std::size_t l = 0; l < rv.nodes.size(); ++l) {
    const Quaternion ev = qexp_pure(axes.mu2(), rv.nodes[l] * y0) * rv.weights[l];
    Quaternion row;
    for (std::size_t k = 0; k < eu.size(); ++k) row += eu[k] * spectrum(ru.nodes[k], rv.nodes[l]);
    acc += row * ev;
  }
  return acc * (1.0 / (4.0 * kPi * kPi));
}

Quaternion dirichlet_sinc_inverse(const QFunction& f, double x0, double y0, double M, double N,
                                  const SincQuadrature& quad) {
  check_window(M, N);
  const CompositeRule rs = sinc_axis_rule(x0, quad.s_lo, quad.s_hi, quad.s_breaks, M, quad.order);
  const CompositeRule rt = sinc_axis_rule(y0, quad.t_lo, quad.t_hi, quad.t_breaks, N, quad.order);
  std::vector<double> ws(rs.nodes.size());
  for (std::size_t k = 0; k < ws.size(); ++k) ws[k] = rs.weights[k] * dirichlet(M, rs.nodes[k]);
  Quaternion acc;
  for (std::size_t l = 0; l < rt.nodes.size(); ++l) {
    const double t = rt.nodes[l];
    Quaternion row;
    for (std::size_t k = 0; k < ws.size(); ++k) row += f(x0 - rs.nodes[k], y0 - t) * ws[k];
    acc += row * (rt.weights[l] * dirichlet(N, t));
  }
  return acc;
}

double sinc_quadrant_mass(double M, double N, double R) {
  check_window(M, N);
  auto half = [R](double W) {
    return integrate([W](double s) { return dirichlet(W, s); }, panel_breaks(0.0, R, kPi / W),
                     16);
  };
  return half(M) * half(N);
}

JumpAverage eta_jump_average(const QFunction& f, double x0, double y0,
                             const JumpOptions& options) {
  if (options.levels < 3 || !(options.h0 > 0.0)) {
    throw Error(Errc::InvalidArgument, "jump average needs h0 > 0 and at least 3 levels");
  }
  JumpAverage out;
  for (std::size_t k = 0; k < options.levels; ++k) {
    out.h_sequence.push_back(std::ldexp(options.h0, -static_cast<int>(k)));
  }
  const double signs[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  Quaternion sum;
  for (int q = 0; q < 4; ++q) {
    std::vector<Quaternion> g;
    for (double h : out.h_sequence) g.push_back(f(x0 + signs[q][0] * h, y0 + signs[q][1] * h));
    Quaternion prev = 2.0 * g[1] - g[0];
    Quaternion last = prev;
    for (std::size_t k = 2; k < g.size(); ++k) {
      prev = last;
      last = 2.0 * g[k] - g[k - 1];
    }
    if (qabs(last - prev) > options.tol * std::max(1.0, qabs(last))) {
      throw Error(Errc::NonConvergent, "quadrant limit did not settle along the h sequence");
    }
    out.quadrant_values[q] = last;
    sum += last;
  }
  out.value = sum * 0.25;
  return out;
}

double sinc_integral_bound_check(double a, double b) {
  return std::abs(sine_integral(b) - sine_integral(a));
}

QSignal2D gauss_weierstrass_kernel(double alpha, const GridSpec& grid) {
  if (!(alpha > 0.0)) throw Error(Errc::InvalidArgument, "Gauss parameter must be positive");
  return sample(fixtures::gw_kernel(alpha), grid);
}

QSignal2D gauss_convolve(const QSignal2D& sig, double alpha) {
  if (!(alpha > 0.0)) throw Error(Errc::InvalidArgument, "Gauss parameter must be positive");
  const GridSpec& g = sig.grid();
  const double norm = 1.0 / std::sqrt(4.0 * kPi * alpha);
  auto table = [&](const std::vector<double>& x, double step) {
    return detail::make_table(x.size(), x.size(), [&](std::size_t o, std::size_t i) {
      const double d = x[o] - x[i];
      return Quaternion(norm * std::exp(-d * d / (4.0 * alpha)) * step);
    });
  };
  detail::Plane p = detail::to_plane(sig);
  p = detail::contract(p, detail::Dim::S, table(detail::s_coords(g), g.ds),
                       detail::KernelSide::Left);
  p = detail::contract(p, detail::Dim::T, table(detail::t_coords(g), g.dt),
                       detail::KernelSide::Left);
  return QSignal2D(g, std::move(p.values));
}

void GaussMeanParams::validate() const {
  if (schedule.empty()) throw Error(Errc::InvalidArgument, "empty Gauss schedule");
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    if (!(schedule[k] > 0.0) || !std::isfinite(schedule[k])) {
      throw Error(Errc::InvalidArgument, "Gauss parameters must be positive");
    }
    if (k > 0 && !(schedule[k] < schedule[k - 1])) {
      throw Error(Errc::InvalidArgument, "Gauss schedule must be strictly decreasing");
    }
  }
}

std::vector<GaussMeanStep> gauss_mean_inverse(const QSpectrum2D& spec,
                                              const GaussMeanParams& params,
                                              const GridSpec& out_grid,
                                              const std::optional<QSignal2D>& reference) {
  params.validate();
  const Provenance& prov = spec.provenance();
  if (is_qlct(prov.kind)) {
    throw Error(Errc::ProvenanceMismatch, "Gauss means need a QFT spectrum");
  }
  const QftKind kind{side_of(prov.kind), prov.axes};
  const GridSpec& g = spec.grid();
  std::vector<GaussMeanStep> steps;
  for (double alpha : params.schedule) {
    std::vector<Quaternion> damped(g.size());
    for (std::size_t l = 0; l < g.nt; ++l) {
      for (std::size_t k = 0; k < g.ns; ++k) {
        const double u = g.s(k);
        const double v = g.t(l);
        damped[l * g.ns + k] = spec.at(k, l) * std::exp(-alpha * (u * u + v * v));
      }
    }
    QSignal2D rec = qft_inverse(QSpectrum2D(g, std::move(damped), prov), kind, out_grid);
    std::optional<double> err;
    if (reference) err = l1_diff(rec, *reference);
    steps.push_back({alpha, std::move(rec), err});
  }
  return steps;
}

LcDiagnostic lc_class_diagnostic(const QFunction& f, double x0, double y0, double eps1,
                                 double eps2, double R, const LcOptions& options) {
  if (!(eps1 > 0.0) || !(eps2 > 0.0) || !(R > eps1) || !(R > eps2) || !std::isfinite(R)) {
    throw Error(Errc::InvalidArgument, "LC diagnostic needs 0 < eps < R");
  }
  auto quad_sum = [&](double s, double t) {
    return f(x0 - s, y0 - t) + f(x0 + s, y0 + t) + f(x0 - s, y0 + t) + f(x0 + s, y0 - t);
  };
  auto section_mass = [&](double fixed, bool fixed_is_s, double radius) {
    return integrate(
        [&](double x) {
          return qabs(fixed_is_s ? quad_sum(fixed, x) : quad_sum(x, fixed));
        },
        panel_breaks(-radius, radius, options.outer_panel), options.order);
  };
  auto pick = [&](const std::vector<double>& candidates, bool fixed_is_s) {
    for (double c : candidates) {
      const double m1 = section_mass(c, fixed_is_s, R);
      const double m2 = section_mass(c, fixed_is_s, 2.0 * R);
      if (std::isfinite(m1) && std::isfinite(m2) && std::abs(m2 - m1) <= 0.05 * m1 + 1e-12) {
        return c;
      }
    }
    throw Error(Errc::NoIntegrableSection,
                std::string("no admissible ") + (fixed_is_s ? "a" : "b") + " section");
  };

  LcDiagnostic out;
  out.a = pick(options.a_candidates, true);
  out.b = pick(options.b_candidates, false);

  const CompositeRule in1 = composite_rule(dyadic_to_zero(eps1, options.inner_levels),
                                           options.order);
  const CompositeRule in2 = composite_rule(dyadic_to_zero(eps2, options.inner_levels),
                                           options.order);
  const CompositeRule out1 =
      composite_rule(panel_breaks(eps2, R, options.outer_panel), options.order);
  const CompositeRule out2 =
      composite_rule(panel_breaks(eps1, R, options.outer_panel), options.order);

  for (std::size_t l = 0; l < out1.nodes.size(); ++l) {
    const double t = out1.nodes[l];
    const Quaternion ref = quad_sum(out.a, t);
    double inner = 0.0;
    for (std::size_t k = 0; k < in1.nodes.size(); ++k) {
      const double s = in1.nodes[k];
      inner += in1.weights[k] * qabs(quad_sum(s, t) - ref) / s;
    }
    out.val1 += out1.weights[l] * inner;
  }
  for (std::size_t l = 0; l < out2.nodes.size(); ++l) {
    const double s = out2.nodes[l];
    const Quaternion ref = quad_sum(s, out.b);
    double inner = 0.0;
    for (std::size_t k = 0; k < in2.nodes.size(); ++k) {
      const double t = in2.nodes[k];
      inner += in2.weights[k] * qabs(quad_sum(s, t) - ref) / t;
    }
    out.val2 += out2.weights[l] * inner;
  }
  return out;
}

std::string sweep_csv_header() { return "M,N,w,x,y,z,abs_error"; }

std::string to_csv_row(const SweepRow& r) {
  return format_real(r.M) + "," + format_real(r.N) + "," + format_real(r.value.w) + "," +
         format_real(r.value.x) + "," + format_real(r.value.y) + "," + format_real(r.value.z) +
         "," + format_real(r.error);
}

}  // namespace qh
