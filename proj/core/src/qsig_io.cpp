#include "qharmonics/qsig_io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>
#include <string>

#include "qharmonics/error.hpp"

namespace qh {
namespace {

class ByteWriter {
 public:
  void raw(const char* bytes, std::size_t n) { out_.insert(out_.end(), bytes, bytes + n); }
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u32(std::uint32_t v) {
    for (int k = 0; k < 4; ++k) out_.push_back(static_cast<std::uint8_t>(v >> (8 * k)));
  }
  void f64(double v) {
    const auto bits = std::bit_cast<std::uint64_t>(v);
    for (int k = 0; k < 8; ++k) out_.push_back(static_cast<std::uint8_t>(bits >> (8 * k)));
  }
  std::vector<std::uint8_t> take() { return std::move(out_); }

 private:
  std::vector<std::uint8_t> out_;
};

class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::size_t remaining() const { return bytes_.size() - pos_; }
  void need(std::size_t n, const char* what) const {
    if (remaining() < n) {
      throw Error(Errc::TruncatedPayload, std::string("file ends inside ") + what);
    }
  }
  std::uint8_t u8() { return bytes_[pos_++]; }
  std::uint32_t u32() {
    std::uint32_t v = 0;
    for (int k = 0; k < 4; ++k) v |= static_cast<std::uint32_t>(bytes_[pos_++]) << (8 * k);
    return v;
  }
  double f64() {
    std::uint64_t bits = 0;
    for (int k = 0; k < 8; ++k) bits |= static_cast<std::uint64_t>(bytes_[pos_++]) << (8 * k);
    return std::bit_cast<double>(bits);
  }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

void write_header(ByteWriter& w, char version, const GridSpec& g) {
  const char magic[4] = {'Q', 'S', 'G', version};
  w.raw(magic, 4);
  if (g.ns > std::numeric_limits<std::uint32_t>::max() ||
      g.nt > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(Errc::InvalidGrid, "grid too large for QSIG");
  }
  w.u32(static_cast<std::uint32_t>(g.ns));
  w.u32(static_cast<std::uint32_t>(g.nt));
  w.f64(g.s_min);
  w.f64(g.t_min);
  w.f64(g.ds);
  w.f64(g.dt);
}

void write_payload(ByteWriter& w, const SampledField& f) {
  for (const Quaternion& q : f.data()) {
    w.f64(q.w);
    w.f64(q.x);
    w.f64(q.y);
    w.f64(q.z);
  }
}

struct Decoded {
  char version = '1';
  GridSpec grid;
  Provenance provenance;
  std::vector<Quaternion> data;
};

Decoded decode(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes);
  if (bytes.size() < 3 || bytes[0] != 'Q' || bytes[1] != 'S' || bytes[2] != 'G') {
    throw Error(Errc::BadMagic, "not a QSIG file");
  }
  r.need(kQsigHeaderBytes, "header");
  r.u8(); r.u8(); r.u8();
  Decoded out;
  out.version = static_cast<char>(r.u8());
  if (out.version != '1' && out.version != '2') {
    throw Error(Errc::BadVersion, std::string("unsupported QSIG version '") +
                                      out.version + "'");
  }
  out.grid.ns = r.u32();
  out.grid.nt = r.u32();
  out.grid.s_min = r.f64();
  out.grid.t_min = r.f64();
  out.grid.ds = r.f64();
  out.grid.dt = r.f64();
  out.grid.validate();

  if (out.version == '2') {
    r.need(kQspecExtensionBytes, "provenance block");
    const std::uint8_t kind = r.u8();
    const std::uint8_t flags = r.u8();
    if (kind > static_cast<std::uint8_t>(TransformKind::LeftQlct)) {
      throw Error(Errc::BadVersion, "unknown transform kind tag " + std::to_string(kind));
    }
    Provenance& p = out.provenance;
    p.kind = static_cast<TransformKind>(kind);
    p.phase_corrected = (flags & 1u) != 0;
    const double m1x = r.f64(), m1y = r.f64(), m1z = r.f64();
    const double m2x = r.f64(), m2y = r.f64(), m2z = r.f64();
    p.axes = AxisPair::make(PureUnit::make(m1x, m1y, m1z), PureUnit::make(m2x, m2y, m2z));
    p.window_u = r.f64();
    p.window_v = r.f64();
    double l[8];
    for (double& v : l) v = r.f64();
    p.a1 = LctParams::make(l[0], l[1], l[2], l[3]);
    p.a2 = LctParams::make(l[4], l[5], l[6], l[7]);
  }

  const std::size_t n = out.grid.size();
  if (r.remaining() < n * 32) {
    throw Error(Errc::TruncatedPayload,
                "payload holds " + std::to_string(r.remaining() / 32) + " of " +
                    std::to_string(n) + " quaternions");
  }
  out.data.resize(n);
  for (Quaternion& q : out.data) {
    q.w = r.f64();
    q.x = r.f64();
    q.y = r.f64();
    q.z = r.f64();
  }
  return out;
}

}  // namespace

std::vector<std::uint8_t> encode_qsig(const QSignal2D& sig) {
  ByteWriter w;
  write_header(w, '1', sig.grid());
  write_payload(w, sig);
  return w.take();
}

std::vector<std::uint8_t> encode_qspec(const QSpectrum2D& spec) {
  ByteWriter w;
  write_header(w, '2', spec.grid());
  const Provenance& p = spec.provenance();
  w.u8(static_cast<std::uint8_t>(p.kind));
  w.u8(p.phase_corrected ? 1u : 0u);
  for (const PureUnit& mu : {p.axes.mu1(), p.axes.mu2()}) {
    w.f64(mu.x());
    w.f64(mu.y());
    w.f64(mu.z());
  }
  w.f64(p.window_u);
  w.f64(p.window_v);
  for (const LctParams& a : {p.a1, p.a2}) {
    w.f64(a.a());
    w.f64(a.b());
    w.f64(a.c());
    w.f64(a.d());
  }
  write_payload(w, spec);
  return w.take();
}

QSignal2D decode_qsig(std::span<const std::uint8_t> bytes) {
  Decoded d = decode(bytes);
  return QSignal2D(d.grid, std::move(d.data));
}

QSpectrum2D decode_qspec(std::span<const std::uint8_t> bytes) {
  Decoded d = decode(bytes);
  if (d.version != '2') {
    throw Error(Errc::BadVersion, "file holds a signal, not a spectrum");
  }
  return QSpectrum2D(d.grid, std::move(d.data), d.provenance);
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string() + " for reading");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(Errc::Io, "read failed for " + path.string());
  return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::Io, "cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(Errc::Io, "write failed for " + path.string());
}

void save_qsig(const QSignal2D& sig, const std::filesystem::path& path) {
  write_file(path, encode_qsig(sig));
}

QSignal2D load_qsig(const std::filesystem::path& path) {
  return decode_qsig(read_file(path));
}

void save_qspec(const QSpectrum2D& spec, const std::filesystem::path& path) {
  write_file(path, encode_qspec(spec));
}

QSpectrum2D load_qspec(const std::filesystem::path& path) {
  return decode_qspec(read_file(path));
}

// --- PPM -------------------------------------------------------------------

namespace {

class PpmHeaderParser {
 public:
  explicit PpmHeaderParser(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::size_t number(const char* field) {
    skip_space_and_comments();
    std::size_t v = 0;
    std::size_t digits = 0;
    while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
      v = v * 10 + (bytes_[pos_] - '0');
      if (v > (1u << 24)) throw Error(Errc::BadPpm, std::string(field) + " too large");
      ++pos_;
      ++digits;
    }
    if (digits == 0) throw Error(Errc::BadPpm, std::string("cannot parse ") + field);
    return v;
  }

  /// Exactly one whitespace byte separates maxval from the raster.
  std::size_t raster_offset() {
    if (pos_ >= bytes_.size() || !is_space(bytes_[pos_])) {
      throw Error(Errc::BadPpm, "missing whitespace before raster");
    }
    return pos_ + 1;
  }

 private:
  static bool is_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
  }
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (is_space(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 2;
};

}  // namespace

QSignal2D image_to_qsig(std::span<const std::uint8_t> ppm) {
  if (ppm.size() < 2 || ppm[0] != 'P' || ppm[1] != '6') {
    throw Error(Errc::BadPpm, "only binary P6 images are supported");
  }
  PpmHeaderParser parser(ppm);
  const std::size_t width = parser.number("width");
  const std::size_t height = parser.number("height");
  const std::size_t maxval = parser.number("maxval");
  if (width == 0 || height == 0) throw Error(Errc::BadPpm, "zero image dimension");
  if (maxval != 255) throw Error(Errc::BadPpm, "maxval must be 255");
  const std::size_t offset = parser.raster_offset();
  const std::size_t need = width * height * 3;
  if (ppm.size() < offset + need) throw Error(Errc::BadPpm, "raster is truncated");

  GridSpec grid{0.0, 0.0, 1.0, 1.0, width, height};
  std::vector<Quaternion> data(width * height);
  const std::uint8_t* px = ppm.data() + offset;
  for (std::size_t k = 0; k < data.size(); ++k) {
    data[k] = {0.0, px[3 * k] / 255.0, px[3 * k + 1] / 255.0, px[3 * k + 2] / 255.0};
  }
  return QSignal2D(grid, std::move(data));
}

std::vector<std::uint8_t> qsig_to_image(const QSignal2D& sig, ClampMode mode,
                                        ImageStats* stats) {
  const GridSpec& g = sig.grid();
  ImageStats st;
  st.scalar_min = std::numeric_limits<double>::infinity();
  st.scalar_max = -std::numeric_limits<double>::infinity();
  double lo = 0.0, hi = 1.0;
  if (mode == ClampMode::Rescale) {
    lo = std::numeric_limits<double>::infinity();
    hi = -std::numeric_limits<double>::infinity();
    for (const Quaternion& q : sig.data()) {
      lo = std::min({lo, q.x, q.y, q.z});
      hi = std::max({hi, q.x, q.y, q.z});
    }
    if (!(hi > lo)) hi = lo + 1.0;
  }

  const std::string header = "P6\n" + std::to_string(g.ns) + " " +
                             std::to_string(g.nt) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(header.size() + 3 * sig.size());
  auto channel = [&](double v) {
    double c = (v - lo) / (hi - lo);
    if (c < 0.0 || c > 1.0) {
      ++st.clipped_channels;
      c = std::clamp(c, 0.0, 1.0);
    }
    return static_cast<std::uint8_t>(std::lround(c * 255.0));
  };
  for (const Quaternion& q : sig.data()) {
    st.scalar_min = std::min(st.scalar_min, q.w);
    st.scalar_max = std::max(st.scalar_max, q.w);
    out.push_back(channel(q.x));
    out.push_back(channel(q.y));
    out.push_back(channel(q.z));
  }
  if (stats) *stats = st;
  return out;
}

}  // namespace qh
