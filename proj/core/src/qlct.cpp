#include "qharmonics/qlct.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qharmonics/error.hpp"
#include "qharmonics/kernel_pass.hpp"

namespace qh {
namespace {

using detail::contract;
using detail::Dim;
using detail::KernelSide;
using detail::KernelTable;
using detail::make_table;
using detail::Plane;
using detail::s_coords;
using detail::t_coords;
using detail::to_plane;

constexpr double kPi = std::numbers::pi;

double extent(double lo, double hi) { return std::max(std::abs(lo), std::abs(hi)); }

Provenance qlct_provenance(const LctKind& kind, const GridSpec& g) {
  Provenance p;
  p.kind = qlct_kind_for(kind.side);
  p.axes = kind.axes;
  p.a1 = kind.a1;
  p.a2 = kind.a2;
  p.phase_corrected = kind.phase_corrected;
  p.window_u = extent(g.s_min, g.s_max());
  p.window_v = extent(g.t_min, g.t_max());
  return p;
}

double phase_angle(const LctParams& A, bool corrected) {
  return corrected ? std::atan2(A.b(), A.a()) / 2.0 : 0.0;
}

// Kernel table for one axis: out coordinate o, input coordinate i,
// value K(x = in_i, xi = out_o) * in_step.
KernelTable lct_table(const LctParams& A, const PureUnit& mu, const std::vector<double>& out,
                      const std::vector<double>& in, double in_step, bool corrected) {
  if (A.degenerate()) {
    if (!(A.d() > 0.0)) {
      throw Error(Errc::InvalidArgument, "b == 0 branch requires d > 0");
    }
    KernelTable table{out.size(), in.size(), std::vector<Quaternion>(out.size() * in.size())};
    const double root_d = std::sqrt(A.d());
    for (std::size_t o = 0; o < out.size(); ++o) {
      const double x = A.d() * out[o];
      const double pos = (x - in.front()) / in_step;
      const double r = std::round(pos);
      if (std::abs(pos - r) > 1e-6 || r < 0.0 || r >= static_cast<double>(in.size())) {
        throw Error(Errc::InvalidGrid,
                    "b == 0 axis: output grid must be the input grid scaled by 1/d");
      }
      table.values[o * in.size() + static_cast<std::size_t>(r)] =
          qexp_pure(mu, A.c() * A.d() * out[o] * out[o] / 2.0) * root_d;
    }
    return table;
  }
  const double sgn = A.b() > 0.0 ? 1.0 : -1.0;
  const double amp = in_step / std::sqrt(2.0 * kPi * std::abs(A.b()));
  const double base = -sgn * kPi / 4.0 + phase_angle(A, corrected);
  const double inv_b = 1.0 / A.b();
  return make_table(out.size(), in.size(), [&](std::size_t o, std::size_t i) {
    const double x = in[i];
    const double xi = out[o];
    const double phase =
        base + (A.a() * x * x / 2.0 - x * xi + A.d() * xi * xi / 2.0) * inv_b;
    return qexp_pure(mu, phase) * amp;
  });
}

Plane forward_passes(const Plane& in, Side side, const KernelTable& k1, const KernelTable& k2) {
  switch (side) {
    case Side::TwoSided:
      return contract(contract(in, Dim::S, k1, KernelSide::Left), Dim::T, k2, KernelSide::Right);
    case Side::RightSided:
      return contract(contract(in, Dim::S, k1, KernelSide::Right), Dim::T, k2,
                      KernelSide::Right);
    case Side::LeftSided:
      return contract(contract(in, Dim::T, k2, KernelSide::Left), Dim::S, k1, KernelSide::Left);
  }
  return in;
}

void check_provenance(const QSpectrum2D& spec, const LctKind& kind) {
  const Provenance& p = spec.provenance();
  if (p.kind != qlct_kind_for(kind.side) || !(p.axes == kind.axes) || !(p.a1 == kind.a1) ||
      !(p.a2 == kind.a2) || p.phase_corrected != kind.phase_corrected) {
    throw Error(Errc::ProvenanceMismatch,
                "spectrum was not produced by the requested QLCT parameters");
  }
}

struct InverseTables {
  KernelTable k1;  // (s, u)
  KernelTable k2;  // (t, v)
};

InverseTables inverse_tables(const QSpectrum2D& spec, const LctKind& kind,
                             const GridSpec& out_grid) {
  out_grid.validate();
  if (kind.a1.degenerate() || kind.a2.degenerate()) {
    throw Error(Errc::DegenerateB, "inversion through a b == 0 axis is not defined");
  }
  check_provenance(spec, kind);
  const GridSpec& f = spec.grid();
  return {lct_table(kind.a1.inverse(), kind.axes.mu1(), s_coords(out_grid), s_coords(f), f.ds,
                    kind.phase_corrected),
          lct_table(kind.a2.inverse(), kind.axes.mu2(), t_coords(out_grid), t_coords(f), f.dt,
                    kind.phase_corrected)};
}

void require_positive_b(const LctParams& A) {
  if (A.degenerate()) throw Error(Errc::DegenerateB, "QLCT via QFT needs b != 0");
  if (A.b() < 0.0) throw Error(Errc::InvalidArgument, "QLCT via QFT needs b > 0");
}

QSignal2D chirp_premultiply(const QSignal2D& sig, const LctKind& kind) {
  const GridSpec& g = sig.grid();
  std::vector<Quaternion> p(g.size());
  for (std::size_t it = 0; it < g.nt; ++it) {
    const double t = g.t(it);
    const Quaternion right =
        qexp_pure(kind.axes.mu2(), kind.a2.a() * t * t / (2.0 * kind.a2.b()));
    for (std::size_t is = 0; is < g.ns; ++is) {
      const double s = g.s(is);
      const Quaternion left =
          qexp_pure(kind.axes.mu1(), kind.a1.a() * s * s / (2.0 * kind.a1.b()));
      p[it * g.ns + is] = left * sig.at(is, it) * right;
    }
  }
  return QSignal2D(g, std::move(p));
}

// c e^{mu d xi^2 / 2b} with c = e^{-mu pi/4} / sqrt(2 pi b), plus the optional phase.
Quaternion output_chirp(const LctParams& A, const PureUnit& mu, double xi, bool corrected) {
  return qexp_pure(mu, -kPi / 4.0 + A.d() * xi * xi / (2.0 * A.b()) + phase_angle(A, corrected)) *
         (1.0 / std::sqrt(2.0 * kPi * A.b()));
}

QSpectrum2D chirp_postmultiply(const QSpectrum2D& qft_spec, const LctKind& kind,
                               const GridSpec& out_grid) {
  std::vector<Quaternion> data(out_grid.size());
  for (std::size_t iv = 0; iv < out_grid.nt; ++iv) {
    const Quaternion right =
        output_chirp(kind.a2, kind.axes.mu2(), out_grid.t(iv), kind.phase_corrected);
    for (std::size_t iu = 0; iu < out_grid.ns; ++iu) {
      const Quaternion left =
          output_chirp(kind.a1, kind.axes.mu1(), out_grid.s(iu), kind.phase_corrected);
      data[iv * out_grid.ns + iu] = left * qft_spec.at(iu, iv) * right;
    }
  }
  return QSpectrum2D(out_grid, std::move(data), qlct_provenance(kind, out_grid));
}

QSignal2D component_field(const QSignal2D& sig, SplitFlavor flavor, const AxisPair& axes,
                          bool second) {
  const PureUnit& unit = flavor == SplitFlavor::Right ? axes.mu1() : axes.mu2();
  std::vector<Quaternion> out(sig.size());
  for (std::size_t k = 0; k < sig.size(); ++k) {
    const SymplecticSplit sp = symplectic_split(sig.data()[k], flavor, axes);
    const double re = second ? sp.b_re : sp.a_re;
    const double im = second ? sp.b_im : sp.a_im;
    out[k] = Quaternion(re) + unit.as_quaternion() * im;
  }
  return QSignal2D(sig.grid(), std::move(out));
}

}  // namespace

Quaternion lct_kernel(const LctParams& A, const PureUnit& axis, double x, double xi) {
  if (A.degenerate()) throw Error(Errc::DegenerateB, "LCT kernel undefined for b == 0");
  const double sgn = A.b() > 0.0 ? 1.0 : -1.0;
  const double phase =
      -sgn * kPi / 4.0 + (A.a() * x * x / 2.0 - x * xi + A.d() * xi * xi / 2.0) / A.b();
  return qexp_pure(axis, phase) * (1.0 / std::sqrt(2.0 * kPi * std::abs(A.b())));
}

GridSpec qlct_output_grid(const GridSpec& g, const LctKind& kind, const FreqWindow& window) {
  GridSpec out = window.grid();
  auto scale_axis = [](const LctParams& A, double lo, double step, double& out_lo,
                       double& out_step, std::size_t n, std::size_t& out_n) {
    if (!(A.d() > 0.0)) throw Error(Errc::InvalidArgument, "b == 0 branch requires d > 0");
    out_lo = lo / A.d();
    out_step = step / A.d();
    out_n = n;
  };
  if (kind.a1.degenerate()) scale_axis(kind.a1, g.s_min, g.ds, out.s_min, out.ds, g.ns, out.ns);
  if (kind.a2.degenerate()) scale_axis(kind.a2, g.t_min, g.dt, out.t_min, out.dt, g.nt, out.nt);
  return out;
}

QSpectrum2D qlct_forward(const QSignal2D& sig, const LctKind& kind, const GridSpec& out_grid) {
  out_grid.validate();
  const GridSpec& g = sig.grid();
  const KernelTable k1 = lct_table(kind.a1, kind.axes.mu1(), s_coords(out_grid), s_coords(g),
                                   g.ds, kind.phase_corrected);
  const KernelTable k2 = lct_table(kind.a2, kind.axes.mu2(), t_coords(out_grid), t_coords(g),
                                   g.dt, kind.phase_corrected);
  Plane p = forward_passes(to_plane(sig), kind.side, k1, k2);
  return QSpectrum2D(out_grid, std::move(p.values), qlct_provenance(kind, out_grid));
}

QSignal2D qlct_inverse_two_sided(const QSpectrum2D& spec, const LctKind& kind,
                                 const GridSpec& out_grid, const QlctInverseOptions& options) {
  if (kind.side != Side::TwoSided) {
    throw Error(Errc::SideMismatch, "two-sided inversion needs a two-sided kind");
  }
  const InverseTables t = inverse_tables(spec, kind, out_grid);
  Plane p = contract(contract(to_plane(spec), Dim::S, t.k1, KernelSide::Left), Dim::T, t.k2,
                     KernelSide::Right);
  if (options.include_prefactor) {
    for (auto& q : p.values) q *= 1.0 / (4.0 * kPi * kPi);
  }
  return QSignal2D(out_grid, std::move(p.values));
}

QSignal2D qlct_inverse_sided(const QSpectrum2D& spec, const LctKind& kind,
                             const GridSpec& out_grid, const QlctInverseOptions& options) {
  if (kind.side == Side::TwoSided) {
    throw Error(Errc::SideMismatch, "sided inversion needs a right- or left-sided kind");
  }
  const InverseTables t = inverse_tables(spec, kind, out_grid);
  const bool swap = options.swap_kernel_order;
  Plane p = to_plane(spec);
  if (kind.side == Side::RightSided) {
    // L K2inv K1inv: contract v first, then u; swapped: u first.
    if (!swap) {
      p = contract(contract(p, Dim::T, t.k2, KernelSide::Right), Dim::S, t.k1, KernelSide::Right);
    } else {
      p = contract(contract(p, Dim::S, t.k1, KernelSide::Right), Dim::T, t.k2, KernelSide::Right);
    }
  } else {
    // K2inv K1inv L: contract u first, then v; swapped: v first.
    if (!swap) {
      p = contract(contract(p, Dim::S, t.k1, KernelSide::Left), Dim::T, t.k2, KernelSide::Left);
    } else {
      p = contract(contract(p, Dim::T, t.k2, KernelSide::Left), Dim::S, t.k1, KernelSide::Left);
    }
  }
  return QSignal2D(out_grid, std::move(p.values));
}

QSignal2D qlct_inverse(const QSpectrum2D& spec, const LctKind& kind, const GridSpec& out_grid) {
  return kind.side == Side::TwoSided ? qlct_inverse_two_sided(spec, kind, out_grid)
                                     : qlct_inverse_sided(spec, kind, out_grid);
}

QSpectrum2D qlct_via_qft(const QSignal2D& sig, const LctKind& kind, const GridSpec& out_grid) {
  if (kind.side != Side::TwoSided) {
    throw Error(Errc::SideMismatch, "QLCT via QFT is the two-sided relation");
  }
  require_positive_b(kind.a1);
  require_positive_b(kind.a2);
  out_grid.validate();
  GridSpec freq = out_grid;
  freq.s_min /= kind.a1.b();
  freq.ds /= kind.a1.b();
  freq.t_min /= kind.a2.b();
  freq.dt /= kind.a2.b();
  const QSpectrum2D pt = qft_forward(chirp_premultiply(sig, kind), {Side::TwoSided, kind.axes}, freq);
  return chirp_postmultiply(pt, kind, out_grid);
}

QSpectrum2D qlct_via_qft_fast(const QSignal2D& sig, const LctKind& kind) {
  if (kind.side != Side::TwoSided) {
    throw Error(Errc::SideMismatch, "QLCT via QFT is the two-sided relation");
  }
  require_positive_b(kind.a1);
  require_positive_b(kind.a2);
  const QSpectrum2D pt = qft_fast(chirp_premultiply(sig, kind), {Side::TwoSided, kind.axes});
  GridSpec out = pt.grid();
  out.s_min *= kind.a1.b();
  out.ds *= kind.a1.b();
  out.t_min *= kind.a2.b();
  out.dt *= kind.a2.b();
  return chirp_postmultiply(pt, kind, out);
}

QSpectrum2D sided_decompose_transform(const QSignal2D& sig, const LctKind& kind,
                                      const GridSpec& out_grid) {
  if (kind.side == Side::TwoSided) {
    throw Error(Errc::SideMismatch, "decomposition applies to sided kinds");
  }
  const bool right = kind.side == Side::RightSided;
  const SplitFlavor flavor = right ? SplitFlavor::Right : SplitFlavor::Left;
  const QSignal2D first = component_field(sig, flavor, kind.axes, false);
  const QSignal2D second = component_field(sig, flavor, kind.axes, true);

  LctKind direct = kind;
  direct.side = Side::TwoSided;
  LctKind flipped = direct;
  flipped.axes = right ? AxisPair::make(-kind.axes.mu1(), kind.axes.mu2())
                       : AxisPair::make(kind.axes.mu1(), -kind.axes.mu2());

  const QSpectrum2D a = qlct_forward(first, direct, out_grid);
  const QSpectrum2D b = qlct_forward(second, flipped, out_grid);
  const Quaternion mu1 = kind.axes.mu1().as_quaternion();
  const Quaternion mu2 = kind.axes.mu2().as_quaternion();
  std::vector<Quaternion> data(out_grid.size());
  for (std::size_t k = 0; k < data.size(); ++k) {
    data[k] = right ? a.data()[k] + b.data()[k] * mu2 : a.data()[k] + mu1 * b.data()[k];
  }
  return QSpectrum2D(out_grid, std::move(data), qlct_provenance(kind, out_grid));
}

QSpectrum2D qfrft(const QSignal2D& sig, double alpha, double beta, Side side,
                  const GridSpec& out_grid, bool phase_corrected, const AxisPair& axes) {
  if (std::abs(std::sin(alpha)) < 1e-12 || std::abs(std::sin(beta)) < 1e-12) {
    throw Error(Errc::DegenerateAngle, "fractional angles with sin = 0 are degenerate");
  }
  LctKind kind{side, LctParams::rotation(alpha), LctParams::rotation(beta), axes,
               phase_corrected};
  return qlct_forward(sig, kind, out_grid);
}

QSignal2D qfrft_inverse(const QSpectrum2D& spec, const GridSpec& out_grid) {
  return qlct_inverse(spec, lct_kind_from(spec.provenance()), out_grid);
}

LctKind lct_kind_from(const Provenance& p) {
  if (!is_qlct(p.kind)) throw Error(Errc::ProvenanceMismatch, "spectrum is not a QLCT");
  return {side_of(p.kind), p.a1, p.a2, p.axes, p.phase_corrected};
}

}  // namespace qh
