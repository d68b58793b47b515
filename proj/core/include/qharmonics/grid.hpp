#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qharmonics/lct_params.hpp"
#include "qharmonics/quaternion.hpp"

namespace qh {

/// Uniform rectangular sampling geometry. Sample k sits at the cell midpoint
/// s_min + (k + 1/2) ds, so the midpoint rule is exact for constants.
struct GridSpec {
  double s_min = 0.0;
  double t_min = 0.0;
  double ds = 1.0;
  double dt = 1.0;
  std::size_t ns = 1;
  std::size_t nt = 1;

  /// Throws Errc::InvalidGrid.
  void validate() const;

  double s(std::size_t k) const { return s_min + (static_cast<double>(k) + 0.5) * ds; }
  double t(std::size_t k) const { return t_min + (static_cast<double>(k) + 0.5) * dt; }
  double s_max() const { return s_min + static_cast<double>(ns) * ds; }
  double t_max() const { return t_min + static_cast<double>(nt) * dt; }
  std::size_t size() const { return ns * nt; }
  double cell_area() const { return ds * dt; }

  /// n x n cells covering [-extent, extent]^2.
  static GridSpec centered(std::size_t n, double extent);
  static GridSpec centered(std::size_t ns, std::size_t nt, double extent_s,
                           double extent_t);

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

enum class Side : std::uint8_t { TwoSided, RightSided, LeftSided };

enum class TransformKind : std::uint8_t {
  TwoSidedQft = 0,
  RightQft = 1,
  LeftQft = 2,
  TwoSidedQlct = 3,
  RightQlct = 4,
  LeftQlct = 5,
};

TransformKind qft_kind_for(Side side);
TransformKind qlct_kind_for(Side side);
Side side_of(TransformKind kind);
bool is_qlct(TransformKind kind);
const char* to_string(Side side);

/// Which transform produced a spectrum, with every parameter needed to invert it.
struct Provenance {
  TransformKind kind = TransformKind::TwoSidedQft;
  AxisPair axes = AxisPair::canonical();
  double window_u = 0.0;
  double window_v = 0.0;
  LctParams a1 = LctParams::fourier();
  LctParams a2 = LctParams::fourier();
  /// QFRFT output with the e^{mu alpha/2} phases folded back in.
  bool phase_corrected = false;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Row-major quaternion samples on a GridSpec: index = it * ns + is.
class SampledField {
 public:
  SampledField(GridSpec grid, std::vector<Quaternion> data);
  /// All-zero field.
  explicit SampledField(GridSpec grid);

  const GridSpec& grid() const { return grid_; }
  std::span<const Quaternion> data() const { return data_; }
  std::span<Quaternion> data() { return data_; }
  std::size_t size() const { return data_.size(); }

  const Quaternion& at(std::size_t is, std::size_t it) const {
    return data_[it * grid_.ns + is];
  }
  Quaternion& at(std::size_t is, std::size_t it) { return data_[it * grid_.ns + is]; }

  /// True when every sample has zero vector part.
  bool is_real() const;

 protected:
  GridSpec grid_;
  std::vector<Quaternion> data_;
};

class QSignal2D : public SampledField {
 public:
  using SampledField::SampledField;
};

class QSpectrum2D : public SampledField {
 public:
  QSpectrum2D(GridSpec grid, std::vector<Quaternion> data, Provenance provenance);
  QSpectrum2D(GridSpec grid, Provenance provenance);

  const Provenance& provenance() const { return provenance_; }

 private:
  Provenance provenance_;
};

using QFunction = std::function<Quaternion(double s, double t)>;

/// data[k] = fn(midpoint of cell k). Throws Errc::NonFinite.
QSignal2D sample(const QFunction& fn, const GridSpec& grid);

/// Midpoint-rule sum of |f| ds dt.
double l1_norm(const SampledField& field);
/// Midpoint-rule L1 norm of the difference. Throws Errc::ShapeMismatch.
double l1_diff(const SampledField& a, const SampledField& b);
/// max |a - b| over samples. Throws Errc::ShapeMismatch.
double linf_diff(const SampledField& a, const SampledField& b);
/// max |a|.
double linf_norm(const SampledField& field);

QSignal2D scaled(const QSignal2D& sig, double factor);

}  // namespace qh
