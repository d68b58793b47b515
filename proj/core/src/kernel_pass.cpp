#include "qharmonics/kernel_pass.hpp"

#include "qharmonics/error.hpp"
#include "qharmonics/parallel.hpp"

namespace qh::detail {

KernelTable make_table(std::size_t n_out, std::size_t n_in,
                       const std::function<Quaternion(std::size_t, std::size_t)>& fn) {
  KernelTable table{n_out, n_in, std::vector<Quaternion>(n_out * n_in)};
  parallel_for(n_out, [&](std::size_t begin, std::size_t end) {
    for (std::size_t o = begin; o < end; ++o) {
      for (std::size_t i = 0; i < n_in; ++i) table.values[o * n_in + i] = fn(o, i);
    }
  });
  return table;
}

Plane to_plane(const SampledField& f) {
  return {f.grid().ns, f.grid().nt, std::vector<Quaternion>(f.data().begin(), f.data().end())};
}

std::vector<double> s_coords(const GridSpec& g) {
  std::vector<double> c(g.ns);
  for (std::size_t k = 0; k < g.ns; ++k) c[k] = g.s(k);
  return c;
}

std::vector<double> t_coords(const GridSpec& g) {
  std::vector<double> c(g.nt);
  for (std::size_t k = 0; k < g.nt; ++k) c[k] = g.t(k);
  return c;
}

Plane contract(const Plane& in, Dim dim, const KernelTable& table, KernelSide side) {
  const bool left = side == KernelSide::Left;
  if (dim == Dim::S) {
    if (table.n_in != in.ns) throw Error(Errc::ShapeMismatch, "kernel/input mismatch along s");
    Plane out{table.n_out, in.nt, std::vector<Quaternion>(table.n_out * in.nt)};
    parallel_for(in.nt, [&](std::size_t begin, std::size_t end) {
      for (std::size_t it = begin; it < end; ++it) {
        const Quaternion* row = in.values.data() + it * in.ns;
        for (std::size_t o = 0; o < table.n_out; ++o) {
          const Quaternion* k = table.values.data() + o * table.n_in;
          Quaternion acc;
          if (left) {
            for (std::size_t i = 0; i < in.ns; ++i) acc += qmul(k[i], row[i]);
          } else {
            for (std::size_t i = 0; i < in.ns; ++i) acc += qmul(row[i], k[i]);
          }
          out.values[it * table.n_out + o] = acc;
        }
      }
    });
    return out;
  }

  if (table.n_in != in.nt) throw Error(Errc::ShapeMismatch, "kernel/input mismatch along t");
  Plane out{in.ns, table.n_out, std::vector<Quaternion>(in.ns * table.n_out)};
  parallel_for(table.n_out, [&](std::size_t begin, std::size_t end) {
    for (std::size_t o = begin; o < end; ++o) {
      Quaternion* dst = out.values.data() + o * in.ns;
      for (std::size_t it = 0; it < in.nt; ++it) {
        const Quaternion& k = table.at(o, it);
        const Quaternion* row = in.values.data() + it * in.ns;
        if (left) {
          for (std::size_t is = 0; is < in.ns; ++is) dst[is] += qmul(k, row[is]);
        } else {
          for (std::size_t is = 0; is < in.ns; ++is) dst[is] += qmul(row[is], k);
        }
      }
    }
  });
  return out;
}

}  // namespace qh::detail
