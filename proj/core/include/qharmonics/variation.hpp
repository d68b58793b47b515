#pragma once

// Bounded-variation tools for real functions sampled on the nodes of a net.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qh {

/// Strictly increasing cut coordinates along each axis (at least two each).
class Net {
 public:
  /// Throws Errc::InvalidNet.
  static Net make(std::vector<double> s_cuts, std::vector<double> t_cuts);
  /// n_s x n_t equally spaced cuts covering [s0, s1] x [t0, t1].
  static Net uniform(double s0, double s1, std::size_t n_s, double t0, double t1,
                     std::size_t n_t);

  const std::vector<double>& s_cuts() const { return s_; }
  const std::vector<double>& t_cuts() const { return t_; }
  std::size_t ns() const { return s_.size(); }
  std::size_t nt() const { return t_.size(); }

 private:
  Net(std::vector<double> s, std::vector<double> t) : s_(std::move(s)), t_(std::move(t)) {}
  std::vector<double> s_;
  std::vector<double> t_;
};

/// Real values at the nodes of a net; values[j * ns + i] = f(s_i, t_j).
class NetField {
 public:
  /// Throws Errc::ShapeMismatch or Errc::NonFinite.
  NetField(Net net, std::vector<double> values);
  static NetField sample(const std::function<double(double, double)>& fn, const Net& net);

  const Net& net() const { return net_; }
  std::size_t ns() const { return net_.ns(); }
  std::size_t nt() const { return net_.nt(); }
  double at(std::size_t i, std::size_t j) const { return values_[j * ns() + i]; }
  const std::vector<double>& values() const { return values_; }

 private:
  Net net_;
  std::vector<double> values_;
};

struct MixedDifference {
  double d11 = 0.0;  // f(i+1,j+1) - f(i+1,j) - f(i,j+1) + f(i,j)
  double d10 = 0.0;  // f(i+1,j) - f(i,j)
  double d01 = 0.0;  // f(i,j+1) - f(i,j)
};

/// Differences on the cell with lower-left node (i, j). Throws Errc::IndexOutOfRange.
MixedDifference mixed_difference(const NetField& f, std::size_t i, std::size_t j);

/// Sum of |d11| over all cells of the field's own net.
double vitali_variation(const NetField& f);
/// Sum of |d11| over the cells of a coarser net whose cuts are nodes of `f`.
/// Throws Errc::InvalidNet when a cut is not a node.
double vitali_variation(const NetField& f, const Net& net);

/// 1D variation along row j (function of s) or column i (function of t).
double row_variation(const NetField& f, std::size_t j);
double column_variation(const NetField& f, std::size_t i);

struct HardyOptions {
  /// Every reported quantity must stay at or below this for the BVF flag.
  double bound = 1e3;
  /// Row / column used for the 1D section checks; middle by default.
  std::optional<std::size_t> row;
  std::optional<std::size_t> column;
};

struct VariationReport {
  double vitali = 0.0;
  double line_var_s = 0.0;
  double line_var_t = 0.0;
  bool is_hardy_bvf = true;
  std::size_t nets_tested = 0;
};

/// Vitali variation maximized over dyadic sub-nets of the sample net (strides
/// 1, 2, 4, ... keeping both end cuts) plus section variations.
VariationReport hardy_bvf_check(const NetField& f, const HardyOptions& options = {});

/// "vitali,line_var_s,line_var_t,is_hardy_bvf,nets_tested".
std::string csv_header(const VariationReport&);
std::string to_csv_row(const VariationReport& report);

inline constexpr double kQuasiMonotoneTolerance = 1e-12;

/// True iff d11, d10 and d01 are >= -1e-12 everywhere on the net.
bool quasi_monotone_check(const NetField& f);

/// f = first - second with both parts quasi-monotone.
struct JordanSplit {
  NetField first;
  NetField second;
};
JordanSplit jordan_split(const NetField& f);

}  // namespace qh
