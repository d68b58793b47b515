#include "qharmonics/grid.hpp"

#include <cmath>
#include <string>

#include "qharmonics/error.hpp"

namespace qh {

void GridSpec::validate() const {
  if (!(std::isfinite(s_min) && std::isfinite(t_min))) {
    throw Error(Errc::InvalidGrid, "grid origin is not finite");
  }
  if (!(ds > 0.0 && dt > 0.0 && std::isfinite(ds) && std::isfinite(dt))) {
    throw Error(Errc::InvalidGrid, "grid spacing must be positive and finite");
  }
  if (ns == 0 || nt == 0) {
    throw Error(Errc::InvalidGrid, "grid must have at least one sample per axis");
  }
}

GridSpec GridSpec::centered(std::size_t n, double extent) {
  return centered(n, n, extent, extent);
}

GridSpec GridSpec::centered(std::size_t ns, std::size_t nt, double extent_s,
                            double extent_t) {
  if (!(extent_s > 0.0 && extent_t > 0.0)) {
    throw Error(Errc::InvalidGrid, "extent must be positive");
  }
  if (ns == 0 || nt == 0) {
    throw Error(Errc::InvalidGrid, "grid must have at least one sample per axis");
  }
  GridSpec g;
  g.s_min = -extent_s;
  g.t_min = -extent_t;
  g.ds = 2.0 * extent_s / static_cast<double>(ns);
  g.dt = 2.0 * extent_t / static_cast<double>(nt);
  g.ns = ns;
  g.nt = nt;
  return g;
}

TransformKind qft_kind_for(Side side) {
  switch (side) {
    case Side::TwoSided: return TransformKind::TwoSidedQft;
    case Side::RightSided: return TransformKind::RightQft;
    case Side::LeftSided: return TransformKind::LeftQft;
  }
  return TransformKind::TwoSidedQft;
}

TransformKind qlct_kind_for(Side side) {
  switch (side) {
    case Side::TwoSided: return TransformKind::TwoSidedQlct;
    case Side::RightSided: return TransformKind::RightQlct;
    case Side::LeftSided: return TransformKind::LeftQlct;
  }
  return TransformKind::TwoSidedQlct;
}

Side side_of(TransformKind kind) {
  switch (kind) {
    case TransformKind::TwoSidedQft:
    case TransformKind::TwoSidedQlct: return Side::TwoSided;
    case TransformKind::RightQft:
    case TransformKind::RightQlct: return Side::RightSided;
    case TransformKind::LeftQft:
    case TransformKind::LeftQlct: return Side::LeftSided;
  }
  return Side::TwoSided;
}

bool is_qlct(TransformKind kind) {
  return kind == TransformKind::TwoSidedQlct || kind == TransformKind::RightQlct ||
         kind == TransformKind::LeftQlct;
}

const char* to_string(Side side) {
  switch (side) {
    case Side::TwoSided: return "two";
    case Side::RightSided: return "right";
    case Side::LeftSided: return "left";
  }
  return "?";
}

SampledField::SampledField(GridSpec grid, std::vector<Quaternion> data)
    : grid_(grid), data_(std::move(data)) {
  grid_.validate();
  if (data_.size() != grid_.size()) {
    throw Error(Errc::ShapeMismatch,
                "data length " + std::to_string(data_.size()) +
                    " does not match grid size " + std::to_string(grid_.size()));
  }
  for (const Quaternion& q : data_) {
    if (!q.is_finite()) {
      throw Error(Errc::NonFinite, "field contains a non-finite sample");
    }
  }
}

SampledField::SampledField(GridSpec grid) : grid_(grid) {
  grid_.validate();
  data_.assign(grid_.size(), Quaternion{});
}

bool SampledField::is_real() const {
  for (const Quaternion& q : data_) {
    if (!q.is_real()) return false;
  }
  return true;
}

QSpectrum2D::QSpectrum2D(GridSpec grid, std::vector<Quaternion> data,
                         Provenance provenance)
    : SampledField(grid, std::move(data)), provenance_(provenance) {}

QSpectrum2D::QSpectrum2D(GridSpec grid, Provenance provenance)
    : SampledField(grid), provenance_(provenance) {}

QSignal2D sample(const QFunction& fn, const GridSpec& grid) {
  grid.validate();
  std::vector<Quaternion> data(grid.size());
  for (std::size_t it = 0; it < grid.nt; ++it) {
    const double t = grid.t(it);
    for (std::size_t is = 0; is < grid.ns; ++is) {
      const Quaternion q = fn(grid.s(is), t);
      if (!q.is_finite()) {
        throw Error(Errc::NonFinite, "sampled function is not finite at cell (" +
                                         std::to_string(is) + ", " +
                                         std::to_string(it) + ")");
      }
      data[it * grid.ns + is] = q;
    }
  }
  return QSignal2D(grid, std::move(data));
}

namespace {

void require_same_shape(const SampledField& a, const SampledField& b) {
  if (a.grid().ns != b.grid().ns || a.grid().nt != b.grid().nt) {
    throw Error(Errc::ShapeMismatch, "fields have different sample counts");
  }
}

// Neumaier-compensated running sum; serial so the result is order-stable.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace

double l1_norm(const SampledField& field) {
  CompensatedSum acc;
  for (const Quaternion& q : field.data()) acc.add(qabs(q));
  return acc.value() * field.grid().cell_area();
}

double l1_diff(const SampledField& a, const SampledField& b) {
  require_same_shape(a, b);
  CompensatedSum acc;
  for (std::size_t k = 0; k < a.size(); ++k) acc.add(qabs(a.data()[k] - b.data()[k]));
  return acc.value() * a.grid().cell_area();
}

double linf_diff(const SampledField& a, const SampledField& b) {
  require_same_shape(a, b);
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    m = std::max(m, qabs(a.data()[k] - b.data()[k]));
  }
  return m;
}

double linf_norm(const SampledField& field) {
  double m = 0.0;
  for (const Quaternion& q : field.data()) m = std::max(m, qabs(q));
  return m;
}

QSignal2D scaled(const QSignal2D& sig, double factor) {
  std::vector<Quaternion> data(sig.data().begin(), sig.data().end());
  for (Quaternion& q : data) q *= factor;
  return QSignal2D(sig.grid(), std::move(data));
}

}  // namespace qh
