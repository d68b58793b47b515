#pragma once

// Separable quadrature engine shared by the QFT and QLCT code. A 2D kernel
// sandwich is evaluated as two 1D contractions, each contracting one grid
// axis against a precomputed (output x input) kernel table with the
// quadrature weight already folded in.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "qharmonics/grid.hpp"
#include "qharmonics/quaternion.hpp"

namespace qh::detail {

enum class Dim { S, T };
enum class KernelSide { Left, Right };

struct KernelTable {
  std::size_t n_out = 0;
  std::size_t n_in = 0;
  std::vector<Quaternion> values;  // values[out * n_in + in]

  const Quaternion& at(std::size_t out, std::size_t in) const {
    return values[out * n_in + in];
  }
};

KernelTable make_table(std::size_t n_out, std::size_t n_in,
                       const std::function<Quaternion(std::size_t out, std::size_t in)>& fn);

/// Row-major buffer of ns x nt quaternions (index it * ns + is).
struct Plane {
  std::size_t ns = 0;
  std::size_t nt = 0;
  std::vector<Quaternion> values;
};

/// Contracts `dim` of `in` against the table. Left: out = sum K * in;
/// Right: out = sum in * K. Each output sample is accumulated serially in
/// increasing input index, independent of the worker count.
Plane to_plane(const SampledField& field);

/// Midpoint coordinates along each grid axis.
std::vector<double> s_coords(const GridSpec& grid);
std::vector<double> t_coords(const GridSpec& grid);

Plane contract(const Plane& in, Dim dim, const KernelTable& table, KernelSide side);

}  // namespace qh::detail
