#include "qharmonics/qft.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>

#include "qharmonics/error.hpp"
#include "qharmonics/fft.hpp"
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

// table(o, i) = e^{sign mu out_o in_i} * weight
KernelTable exp_table(const PureUnit& mu, double sign, const std::vector<double>& out,
                      const std::vector<double>& in, double weight) {
  return make_table(out.size(), in.size(), [&](std::size_t o, std::size_t i) {
    return qexp_pure(mu, sign * out[o] * in[i]) * weight;
  });
}

double window_extent(double lo, double hi) { return std::max(std::abs(lo), std::abs(hi)); }

std::optional<std::size_t> reflect_index(double lo, double step, std::size_t n, std::size_t l) {
  const double x = lo + (static_cast<double>(l) + 0.5) * step;
  const double pos = (-x - lo) / step - 0.5;
  const double r = std::round(pos);
  if (std::abs(pos - r) > 1e-6 || r < 0.0 || r >= static_cast<double>(n)) return std::nullopt;
  return static_cast<std::size_t>(r);
}

Quaternion as_quaternion(std::complex<double> z) { return {z.real(), z.imag(), 0.0, 0.0}; }

const Quaternion kOneMinusK{1.0, 0.0, 0.0, -1.0};
const Quaternion kOnePlusK{1.0, 0.0, 0.0, 1.0};

// [H(u,v)(1 - k) + H(u,-v)(1 + k)] / 2
Quaternion fold_to_qft(std::complex<double> h, std::complex<double> h_reflected) {
  return (as_quaternion(h) * kOneMinusK + as_quaternion(h_reflected) * kOnePlusK) * 0.5;
}

Quaternion integer_power(const Quaternion& q, int m) {
  Quaternion r = Quaternion::one();
  for (int p = 0; p < m; ++p) r = r * q;
  return r;
}

}  // namespace

void FreqWindow::validate() const {
  if (!(u_max > 0.0) || !(v_max > 0.0) || !std::isfinite(u_max) || !std::isfinite(v_max)) {
    throw Error(Errc::InvalidWindow, "frequency window extents must be positive and finite");
  }
  if (nu == 0 || nv == 0) throw Error(Errc::InvalidWindow, "frequency window needs samples");
}

GridSpec FreqWindow::grid() const {
  validate();
  return GridSpec::centered(nu, nv, u_max, v_max);
}

QSpectrum2D qft_forward(const QSignal2D& sig, const QftKind& kind, const FreqWindow& window) {
  return qft_forward(sig, kind, window.grid());
}

QSpectrum2D qft_forward(const QSignal2D& sig, const QftKind& kind, const GridSpec& freq_grid) {
  freq_grid.validate();
  const GridSpec& g = sig.grid();
  const KernelTable k1 =
      exp_table(kind.axes.mu1(), -1.0, s_coords(freq_grid), s_coords(g), g.ds);
  const KernelTable k2 =
      exp_table(kind.axes.mu2(), -1.0, t_coords(freq_grid), t_coords(g), g.dt);
  Plane p = to_plane(sig);
  switch (kind.side) {
    case Side::TwoSided:
      p = contract(contract(p, Dim::S, k1, KernelSide::Left), Dim::T, k2, KernelSide::Right);
      break;
    case Side::RightSided:
      p = contract(contract(p, Dim::S, k1, KernelSide::Right), Dim::T, k2, KernelSide::Right);
      break;
    case Side::LeftSided:
      p = contract(contract(p, Dim::T, k2, KernelSide::Left), Dim::S, k1, KernelSide::Left);
      break;
  }
  Provenance prov;
  prov.kind = qft_kind_for(kind.side);
  prov.axes = kind.axes;
  prov.window_u = window_extent(freq_grid.s_min, freq_grid.s_max());
  prov.window_v = window_extent(freq_grid.t_min, freq_grid.t_max());
  return QSpectrum2D(freq_grid, std::move(p.values), prov);
}

QSignal2D qft_inverse(const QSpectrum2D& spec, const QftKind& kind, const GridSpec& out_grid) {
  out_grid.validate();
  const Provenance& prov = spec.provenance();
  if (prov.kind != qft_kind_for(kind.side) || !(prov.axes == kind.axes)) {
    throw Error(Errc::ProvenanceMismatch,
                "spectrum was not produced by the requested QFT side/axes");
  }
  const GridSpec& f = spec.grid();
  const KernelTable e1 = exp_table(kind.axes.mu1(), 1.0, s_coords(out_grid), s_coords(f), f.ds);
  const KernelTable e2 = exp_table(kind.axes.mu2(), 1.0, t_coords(out_grid), t_coords(f), f.dt);
  Plane p = to_plane(spec);
  switch (kind.side) {
    case Side::TwoSided:
      p = contract(contract(p, Dim::S, e1, KernelSide::Left), Dim::T, e2, KernelSide::Right);
      break;
    case Side::RightSided:
      p = contract(contract(p, Dim::T, e2, KernelSide::Right), Dim::S, e1, KernelSide::Right);
      break;
    case Side::LeftSided:
      p = contract(contract(p, Dim::S, e1, KernelSide::Left), Dim::T, e2, KernelSide::Left);
      break;
  }
  const double norm = 1.0 / (4.0 * kPi * kPi);
  for (auto& q : p.values) q *= norm;
  return QSignal2D(out_grid, std::move(p.values));
}

ComplexField ft2d_complex(const SampledField& real_field, const GridSpec& freq_grid, int sign) {
  if (!real_field.is_real()) {
    throw Error(Errc::NonRealInput, "ft2d_complex needs a real-valued field");
  }
  freq_grid.validate();
  const GridSpec& g = real_field.grid();
  const double sg = sign < 0 ? -1.0 : 1.0;
  // Separable: first contract s, then t, each as a complex matrix product.
  const auto us = s_coords(freq_grid);
  const auto vs = t_coords(freq_grid);
  std::vector<std::complex<double>> ex(freq_grid.ns * g.ns), ey(freq_grid.nt * g.nt);
  for (std::size_t a = 0; a < freq_grid.ns; ++a) {
    for (std::size_t m = 0; m < g.ns; ++m) ex[a * g.ns + m] = std::polar(g.ds, sg * us[a] * g.s(m));
  }
  for (std::size_t b = 0; b < freq_grid.nt; ++b) {
    for (std::size_t p = 0; p < g.nt; ++p) ey[b * g.nt + p] = std::polar(g.dt, sg * vs[b] * g.t(p));
  }
  std::vector<std::complex<double>> partial(freq_grid.ns * g.nt);
  for (std::size_t p = 0; p < g.nt; ++p) {
    for (std::size_t a = 0; a < freq_grid.ns; ++a) {
      std::complex<double> acc;
      for (std::size_t m = 0; m < g.ns; ++m) acc += ex[a * g.ns + m] * real_field.at(m, p).w;
      partial[p * freq_grid.ns + a] = acc;
    }
  }
  ComplexField out{freq_grid, std::vector<std::complex<double>>(freq_grid.size())};
  for (std::size_t b = 0; b < freq_grid.nt; ++b) {
    for (std::size_t p = 0; p < g.nt; ++p) {
      const auto e = ey[b * g.nt + p];
      for (std::size_t a = 0; a < freq_grid.ns; ++a) {
        out.data[b * freq_grid.ns + a] += partial[p * freq_grid.ns + a] * e;
      }
    }
  }
  return out;
}

QSpectrum2D qft_from_ft(const ComplexField& ft) {
  const GridSpec& g = ft.grid;
  g.validate();
  std::vector<Quaternion> data(g.size());
  for (std::size_t l = 0; l < g.nt; ++l) {
    const auto lr = reflect_index(g.t_min, g.dt, g.nt, l);
    if (!lr) throw Error(Errc::InvalidGrid, "frequency grid is not symmetric in v");
    for (std::size_t k = 0; k < g.ns; ++k) {
      data[l * g.ns + k] = fold_to_qft(ft.at(k, l), ft.at(k, *lr));
    }
  }
  Provenance prov;
  prov.window_u = window_extent(g.s_min, g.s_max());
  prov.window_v = window_extent(g.t_min, g.t_max());
  return QSpectrum2D(g, std::move(data), prov);
}

ComplexField ft_from_qft(const QSpectrum2D& two_sided) {
  const GridSpec& g = two_sided.grid();
  ComplexField out{g, std::vector<std::complex<double>>(g.size())};
  const double scale = std::max(linf_norm(two_sided), 1e-300);
  for (std::size_t l = 0; l < g.nt; ++l) {
    const auto lr = reflect_index(g.t_min, g.dt, g.nt, l);
    if (!lr) throw Error(Errc::InvalidGrid, "frequency grid is not symmetric in v");
    for (std::size_t k = 0; k < g.ns; ++k) {
      const Quaternion h =
          (two_sided.at(k, l) * kOnePlusK + two_sided.at(k, *lr) * kOneMinusK) * 0.5;
      if (std::hypot(h.y, h.z) > 1e-9 * scale) {
        throw Error(Errc::NonRealInput, "spectrum is not the two-sided QFT of a real field");
      }
      out.data[l * g.ns + k] = {h.w, h.x};
    }
  }
  return out;
}

GridSpec fft_frequency_grid(const GridSpec& g) {
  g.validate();
  const double du = 2.0 * kPi / (static_cast<double>(g.ns) * g.ds);
  const double dv = 2.0 * kPi / (static_cast<double>(g.nt) * g.dt);
  GridSpec f;
  f.ns = g.ns;
  f.nt = g.nt;
  f.ds = du;
  f.dt = dv;
  f.s_min = -(static_cast<double>(g.ns / 2) + 0.5) * du;
  f.t_min = -(static_cast<double>(g.nt / 2) + 0.5) * dv;
  return f;
}

QSpectrum2D qft_fast(const QSignal2D& sig, const QftKind& kind) {
  const GridSpec& g = sig.grid();
  if (!is_power_of_two(g.ns) || !is_power_of_two(g.nt)) {
    throw Error(Errc::NotPowerOfTwo, "fast QFT needs power-of-two sample counts");
  }
  if (!kind.axes.is_canonical()) {
    throw Error(Errc::NonCanonicalAxes, "fast QFT supports the (i, j) axes only");
  }
  const GridSpec fg = fft_frequency_grid(g);
  const std::size_t ns = g.ns;
  const std::size_t nt = g.nt;
  const double s0 = g.s(0);
  const double t0 = g.t(0);

  // DFT of each real component with the (-1)^{m+p} centering modulation.
  std::array<std::vector<std::complex<double>>, 4> dft;
  for (int c = 0; c < 4; ++c) {
    auto& buf = dft[c];
    buf.resize(ns * nt);
    for (std::size_t p = 0; p < nt; ++p) {
      for (std::size_t m = 0; m < ns; ++m) {
        const Quaternion& q = sig.at(m, p);
        const double v = c == 0 ? q.w : c == 1 ? q.x : c == 2 ? q.y : q.z;
        buf[p * ns + m] = ((m + p) % 2 == 0) ? v : -v;
      }
    }
    fft2d_inplace(buf, ns, nt);
  }

  // Complex FT of component c at (su u_k, sv v_l), su, sv in {+1, -1}.
  auto ft = [&](int c, std::size_t k, bool flip_u, std::size_t l, bool flip_v) {
    const std::size_t kk = flip_u ? (ns - k) % ns : k;
    const std::size_t ll = flip_v ? (nt - l) % nt : l;
    const double u = (flip_u ? -1.0 : 1.0) * fg.s(k);
    const double v = (flip_v ? -1.0 : 1.0) * fg.t(l);
    return g.ds * g.dt * std::polar(1.0, -(u * s0 + v * t0)) * dft[c][ll * ns + kk];
  };
  // Two-sided QFT of real component c at (+-u_k, v_l).
  auto two_sided = [&](int c, std::size_t k, bool flip_u, std::size_t l) {
    return fold_to_qft(ft(c, k, flip_u, l, false), ft(c, k, flip_u, l, true));
  };

  const Quaternion basis[4] = {Quaternion::one(), Quaternion::i(), Quaternion::j(),
                               Quaternion::k()};
  std::vector<Quaternion> data(fg.size());
  for (std::size_t l = 0; l < nt; ++l) {
    for (std::size_t k = 0; k < ns; ++k) {
      Quaternion acc;
      for (int c = 0; c < 4; ++c) {
        switch (kind.side) {
          case Side::TwoSided:
            // j and k anticommute with e^{-ius}: they see the kernel at -u.
            acc += basis[c] * two_sided(c, k, c >= 2, l);
            break;
          case Side::RightSided:
            acc += basis[c] * two_sided(c, k, false, l);
            break;
          case Side::LeftSided:
            acc += two_sided(c, k, false, l) * basis[c];
            break;
        }
      }
      data[l * ns + k] = acc;
    }
  }
  Provenance prov;
  prov.kind = qft_kind_for(kind.side);
  prov.axes = kind.axes;
  prov.window_u = window_extent(fg.s_min, fg.s_max());
  prov.window_v = window_extent(fg.t_min, fg.t_max());
  return QSpectrum2D(fg, std::move(data), prov);
}

QSpectrum2D derivative_multiplier(const QSpectrum2D& spec, int m, int n) {
  if (m < 0 || n < 0) throw Error(Errc::InvalidArgument, "derivative orders must be >= 0");
  const Provenance& prov = spec.provenance();
  if (is_qlct(prov.kind)) {
    throw Error(Errc::SideMismatch, "derivative multipliers apply to QFT spectra only");
  }
  const Side side = side_of(prov.kind);
  if (side == Side::RightSided && m != 0) {
    throw Error(Errc::SideMismatch, "right-sided spectra admit only the (mu2 v)^n factor");
  }
  if (side == Side::LeftSided && n != 0) {
    throw Error(Errc::SideMismatch, "left-sided spectra admit only the (mu1 u)^m factor");
  }
  const GridSpec& g = spec.grid();
  const Quaternion mu1 = prov.axes.mu1().as_quaternion();
  const Quaternion mu2 = prov.axes.mu2().as_quaternion();
  std::vector<Quaternion> data(g.size());
  for (std::size_t l = 0; l < g.nt; ++l) {
    const Quaternion right = integer_power(mu2 * g.t(l), n);
    for (std::size_t k = 0; k < g.ns; ++k) {
      const Quaternion left = integer_power(mu1 * g.s(k), m);
      data[l * g.ns + k] = left * spec.at(k, l) * right;
    }
  }
  return QSpectrum2D(g, std::move(data), prov);
}

}  // namespace qh
