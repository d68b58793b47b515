#include "qharmonics/variation.hpp"

#include <algorithm>
#include <cmath>

#include "qharmonics/error.hpp"
#include "qharmonics/format.hpp"

namespace qh {
namespace {

void check_axis(const std::vector<double>& cuts, const char* axis) {
  if (cuts.size() < 2) {
    throw Error(Errc::InvalidNet, std::string("net needs at least two ") + axis + " cuts");
  }
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    if (!std::isfinite(cuts[k])) throw Error(Errc::InvalidNet, "non-finite cut");
    if (k > 0 && !(cuts[k] > cuts[k - 1])) {
      throw Error(Errc::InvalidNet, std::string(axis) + " cuts must be strictly increasing");
    }
  }
}

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = n == 1 ? a : a + (b - a) * static_cast<double>(k) / static_cast<double>(n - 1);
  }
  if (n > 1) out.back() = b;
  return out;
}

// Indices of `cuts` within `nodes`, matching to a relative 1e-12.
std::vector<std::size_t> locate(const std::vector<double>& cuts,
                                const std::vector<double>& nodes) {
  std::vector<std::size_t> idx;
  idx.reserve(cuts.size());
  for (double c : cuts) {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), c);
    std::size_t best = nodes.size();
    const double tol = 1e-12 * std::max(1.0, std::abs(c));
    for (auto cand : {it, it == nodes.begin() ? it : it - 1}) {
      if (cand != nodes.end() && std::abs(*cand - c) <= tol) {
        best = static_cast<std::size_t>(cand - nodes.begin());
      }
    }
    if (best == nodes.size()) throw Error(Errc::InvalidNet, "net cut is not a sample node");
    idx.push_back(best);
  }
  return idx;
}

double vitali_on(const NetField& f, const std::vector<std::size_t>& is,
                 const std::vector<std::size_t>& js) {
  double sum = 0.0;
  for (std::size_t b = 0; b + 1 < js.size(); ++b) {
    for (std::size_t a = 0; a + 1 < is.size(); ++a) {
      sum += std::abs(f.at(is[a + 1], js[b + 1]) - f.at(is[a + 1], js[b]) -
                      f.at(is[a], js[b + 1]) + f.at(is[a], js[b]));
    }
  }
  return sum;
}

std::vector<std::size_t> dyadic(std::size_t n, std::size_t stride) {
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < n; k += stride) idx.push_back(k);
  if (idx.back() != n - 1) idx.push_back(n - 1);
  return idx;
}

std::vector<std::size_t> all(std::size_t n) { return dyadic(n, 1); }

}  // namespace

Net Net::make(std::vector<double> s_cuts, std::vector<double> t_cuts) {
  check_axis(s_cuts, "s");
  check_axis(t_cuts, "t");
  return Net(std::move(s_cuts), std::move(t_cuts));
}

Net Net::uniform(double s0, double s1, std::size_t n_s, double t0, double t1,
                 std::size_t n_t) {
  return make(linspace(s0, s1, n_s), linspace(t0, t1, n_t));
}

NetField::NetField(Net net, std::vector<double> values)
    : net_(std::move(net)), values_(std::move(values)) {
  if (values_.size() != net_.ns() * net_.nt()) {
    throw Error(Errc::ShapeMismatch, "net field size does not match the net");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw Error(Errc::NonFinite, "non-finite net field value");
  }
}

NetField NetField::sample(const std::function<double(double, double)>& fn, const Net& net) {
  std::vector<double> values(net.ns() * net.nt());
  for (std::size_t j = 0; j < net.nt(); ++j) {
    for (std::size_t i = 0; i < net.ns(); ++i) {
      values[j * net.ns() + i] = fn(net.s_cuts()[i], net.t_cuts()[j]);
    }
  }
  return NetField(net, std::move(values));
}

MixedDifference mixed_difference(const NetField& f, std::size_t i, std::size_t j) {
  if (i + 1 >= f.ns() || j + 1 >= f.nt()) {
    throw Error(Errc::IndexOutOfRange, "cell (" + std::to_string(i) + ", " +
                                           std::to_string(j) + ") outside the net");
  }
  MixedDifference d;
  d.d10 = f.at(i + 1, j) - f.at(i, j);
  d.d01 = f.at(i, j + 1) - f.at(i, j);
  d.d11 = f.at(i + 1, j + 1) - f.at(i + 1, j) - f.at(i, j + 1) + f.at(i, j);
  return d;
}

double vitali_variation(const NetField& f) {
  return vitali_on(f, all(f.ns()), all(f.nt()));
}

double vitali_variation(const NetField& f, const Net& net) {
  return vitali_on(f, locate(net.s_cuts(), f.net().s_cuts()),
                   locate(net.t_cuts(), f.net().t_cuts()));
}

double row_variation(const NetField& f, std::size_t j) {
  if (j >= f.nt()) throw Error(Errc::IndexOutOfRange, "row outside the net");
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < f.ns(); ++i) sum += std::abs(f.at(i + 1, j) - f.at(i, j));
  return sum;
}

double column_variation(const NetField& f, std::size_t i) {
  if (i >= f.ns()) throw Error(Errc::IndexOutOfRange, "column outside the net");
  double sum = 0.0;
  for (std::size_t j = 0; j + 1 < f.nt(); ++j) sum += std::abs(f.at(i, j + 1) - f.at(i, j));
  return sum;
}

VariationReport hardy_bvf_check(const NetField& f, const HardyOptions& options) {
  VariationReport report;
  const std::size_t longest = std::max(f.ns(), f.nt());
  for (std::size_t stride = 1;; stride *= 2) {
    report.vitali = std::max(
        report.vitali, vitali_on(f, dyadic(f.ns(), stride), dyadic(f.nt(), stride)));
    ++report.nets_tested;
    if (stride >= longest - 1) break;
  }
  report.line_var_s = row_variation(f, options.row.value_or(f.nt() / 2));
  report.line_var_t = column_variation(f, options.column.value_or(f.ns() / 2));
  auto ok = [&](double v) { return std::isfinite(v) && v <= options.bound; };
  report.is_hardy_bvf = ok(report.vitali) && ok(report.line_var_s) && ok(report.line_var_t);
  return report;
}

std::string csv_header(const VariationReport&) {
  return "vitali,line_var_s,line_var_t,is_hardy_bvf,nets_tested";
}

std::string to_csv_row(const VariationReport& r) {
  return format_real(r.vitali) + "," + format_real(r.line_var_s) + "," +
         format_real(r.line_var_t) + "," + (r.is_hardy_bvf ? "true" : "false") + "," +
         std::to_string(r.nets_tested);
}

bool quasi_monotone_check(const NetField& f) {
  const double tol = -kQuasiMonotoneTolerance;
  for (std::size_t j = 0; j < f.nt(); ++j) {
    for (std::size_t i = 0; i < f.ns(); ++i) {
      if (i + 1 < f.ns() && f.at(i + 1, j) - f.at(i, j) < tol) return false;
      if (j + 1 < f.nt() && f.at(i, j + 1) - f.at(i, j) < tol) return false;
      if (i + 1 < f.ns() && j + 1 < f.nt() && mixed_difference(f, i, j).d11 < tol) {
        return false;
      }
    }
  }
  return true;
}

JordanSplit jordan_split(const NetField& f) {
  const std::size_t ns = f.ns();
  const std::size_t nt = f.nt();
  // Positive / negative increment sums of the bottom row and left column.
  std::vector<double> gp(ns, 0.0), gm(ns, 0.0), hp(nt, 0.0), hm(nt, 0.0);
  for (std::size_t i = 1; i < ns; ++i) {
    const double d = f.at(i, 0) - f.at(i - 1, 0);
    gp[i] = gp[i - 1] + std::max(d, 0.0);
    gm[i] = gm[i - 1] + std::max(-d, 0.0);
  }
  for (std::size_t j = 1; j < nt; ++j) {
    const double d = f.at(0, j) - f.at(0, j - 1);
    hp[j] = hp[j - 1] + std::max(d, 0.0);
    hm[j] = hm[j - 1] + std::max(-d, 0.0);
  }
  // Cumulative positive / negative parts of d11 over the lower-left block.
  std::vector<double> cp(ns * nt, 0.0), cm(ns * nt, 0.0);
  for (std::size_t j = 1; j < nt; ++j) {
    for (std::size_t i = 1; i < ns; ++i) {
      const double d11 = mixed_difference(f, i - 1, j - 1).d11;
      const std::size_t k = j * ns + i;
      cp[k] = cp[k - 1] + cp[k - ns] - cp[k - ns - 1] + std::max(d11, 0.0);
      cm[k] = cm[k - 1] + cm[k - ns] - cm[k - ns - 1] + std::max(-d11, 0.0);
    }
  }
  std::vector<double> first(ns * nt), second(ns * nt);
  for (std::size_t j = 0; j < nt; ++j) {
    for (std::size_t i = 0; i < ns; ++i) {
      const std::size_t k = j * ns + i;
      first[k] = f.at(0, 0) + gp[i] + hp[j] + cp[k];
      second[k] = gm[i] + hm[j] + cm[k];
    }
  }
  return {NetField(f.net(), std::move(first)), NetField(f.net(), std::move(second))};
}

}  // namespace qh
