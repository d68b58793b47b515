#include <cmath>
#include <algorithm>
#include <cstring>
#include <filesystem>
#include <numbers>
#include <string>

#include "doctest.h"
#include "oracles/oracles.hpp"
#include "qharmonics/fixtures.hpp"
#include "qharmonics/grid.hpp"
#include "qharmonics/qft.hpp"
#include "qharmonics/qsig_io.hpp"
#include "support/test_util.hpp"

using namespace qh;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& s) {
  return std::vector<std::uint8_t>(s.begin(), s.end());
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qh_test_grid_" + name);
}

}  // namespace

TEST_CASE("grid geometry") {
  const GridSpec g{0.0, 0.0, 0.1, 0.1, 10, 10};
  CHECK(g.s(0) == doctest::Approx(0.05));
  CHECK(g.s_max() == doctest::Approx(1.0));
  CHECK_ERRC((GridSpec{0, 0, 0.0, 1, 2, 2}.validate()), Errc::InvalidGrid);
  CHECK_ERRC((GridSpec{0, 0, 1, 1, 0, 2}.validate()), Errc::InvalidGrid);
  const GridSpec c = GridSpec::centered(4, 2.0);
  CHECK(c.s_min == -2.0);
  CHECK(c.ds == 1.0);
}

TEST_CASE("sampling") {
  const GridSpec g = GridSpec::centered(8, 3.0);
  const QSignal2D ones = sample([](double, double) { return Quaternion(1.0); }, g);
  for (const auto& q : ones.data()) CHECK(q == Quaternion(1.0));

  const QSignal2D gauss = sample(fixtures::gaussian(), g);
  for (std::size_t it = 0; it < g.nt; ++it) {
    for (std::size_t is = 0; is < g.ns; ++is) {
      CHECK(gauss.at(is, it) == gauss.at(g.ns - 1 - is, g.nt - 1 - it));
    }
  }

  const QSignal2D ind = sample(fixtures::indicator(), GridSpec::centered(4, 2.0));
  int count = 0;
  for (const auto& q : ind.data()) count += q.w == 1.0 ? 1 : 0;
  CHECK(count == 4);

  CHECK_ERRC(sample([](double, double) { return Quaternion(NAN); }, g), Errc::NonFinite);
}

TEST_CASE("norms") {
  const GridSpec unit{0, 0, 0.1, 0.1, 10, 10};
  const QSignal2D ones = sample([](double, double) { return Quaternion(1.0); }, unit);
  CHECK(l1_norm(ones) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(linf_diff(ones, ones) == 0.0);
  CHECK(l1_norm(scaled(ones, -2.5)) == doctest::Approx(2.5).epsilon(1e-12));

  const QSignal2D g = sample(fixtures::gaussian(), GridSpec::centered(256, 6.0));
  CHECK(std::abs(l1_norm(g) - std::numbers::pi) / std::numbers::pi < 1e-6);
  CHECK_ERRC(linf_diff(ones, g), Errc::ShapeMismatch);
}

TEST_CASE("QSIG round trip is bit exact") {
  const GridSpec g{-1.25, 0.5, 0.3, 0.7, 8, 8};
  const QSignal2D sig(g, oracle::random_data(g.size(), 42));
  const auto path = temp_path("rt.qsig");
  save_qsig(sig, path);
  const QSignal2D back = load_qsig(path);
  CHECK(back.grid() == g);
  CHECK(std::memcmp(back.data().data(), sig.data().data(), sizeof(Quaternion) * g.size()) == 0);
  std::filesystem::remove(path);
}

TEST_CASE("QSIG errors") {
  const GridSpec g{0, 0, 1, 1, 4, 4};
  const QSignal2D sig(g, oracle::random_data(g.size(), 1));
  auto bytes = encode_qsig(sig);
  CHECK(bytes.size() == kQsigHeaderBytes + 16 * 32);
  auto bad_magic = bytes;
  bad_magic[0] = 'X';
  CHECK_ERRC(decode_qsig(bad_magic), Errc::BadMagic);
  auto bad_version = bytes;
  bad_version[3] = '7';
  CHECK_ERRC(decode_qsig(bad_version), Errc::BadVersion);
  auto truncated = bytes;
  truncated.resize(kQsigHeaderBytes + 3 * 32);
  CHECK_ERRC(decode_qsig(truncated), Errc::TruncatedPayload);
  CHECK_ERRC(load_qsig("/nonexistent/dir/file.qsig"), Errc::Io);
  CHECK_ERRC(decode_qspec(bytes), Errc::BadVersion);
}

TEST_CASE("spectrum files keep provenance") {
  const GridSpec g = GridSpec::centered(8, 2.0);
  Provenance p;
  p.kind = TransformKind::RightQlct;
  p.axes = AxisPair::make(PureUnit::k(), PureUnit::i());
  p.window_u = 3.5;
  p.window_v = 2.0;
  p.a1 = LctParams::make(1, 1, 0, 1);
  p.a2 = LctParams::rotation(0.3);
  p.phase_corrected = true;
  const QSpectrum2D spec(g, oracle::random_data(g.size(), 9), p);
  const QSpectrum2D back = decode_qspec(encode_qspec(spec));
  CHECK(back.provenance() == p);
  CHECK(back.grid() == g);
  CHECK(std::memcmp(back.data().data(), spec.data().data(), sizeof(Quaternion) * g.size()) == 0);
  // A spectrum file still reads as plain samples.
  CHECK(decode_qsig(encode_qspec(spec)).grid() == g);
}

TEST_CASE("PPM encoding") {
  std::string white = "P6\n1 1\n255\n";
  white += std::string("\xff\xff\xff", 3);
  const QSignal2D px = image_to_qsig(bytes_of(white));
  CHECK(px.at(0, 0) == Quaternion(0, 1, 1, 1));
  CHECK(px.grid().ns == 1);

  CHECK_ERRC(image_to_qsig(bytes_of("P5\n1 1\n255\n\x01")), Errc::BadPpm);
  CHECK_ERRC(image_to_qsig(bytes_of("P6\n1 1\n65535\n\x01\x01\x01")), Errc::BadPpm);
  CHECK_ERRC(image_to_qsig(bytes_of("P6\n2 2\n255\n\x01\x01\x01")), Errc::BadPpm);
  CHECK_ERRC(image_to_qsig(bytes_of("P6\nx 2\n255\n")), Errc::BadPpm);
}

TEST_CASE("PPM round trip over every byte value") {
  // 16 x 16 image, all 256 values appear in every channel.
  std::string ppm = "P6\n# comment line\n16 16\n255\n";
  for (int k = 0; k < 256; ++k) {
    ppm.push_back(static_cast<char>(k));
    ppm.push_back(static_cast<char>(255 - k));
    ppm.push_back(static_cast<char>((k * 37) % 256));
  }
  const QSignal2D sig = image_to_qsig(bytes_of(ppm));
  for (const auto& q : sig.data()) CHECK(q.w == 0.0);
  ImageStats stats;
  const auto out = qsig_to_image(sig, ClampMode::Clip, &stats);
  const std::string header = "P6\n16 16\n255\n";
  REQUIRE(out.size() == header.size() + 768);
  const auto in = bytes_of(ppm);
  CHECK(std::equal(out.begin() + static_cast<long>(header.size()), out.end(), in.end() - 768));
  CHECK(stats.clipped_channels == 0);
}

TEST_CASE("image clamping reports the scalar part") {
  const GridSpec g{0, 0, 1, 1, 2, 1};
  const QSignal2D sig(g, {Quaternion(0.5, 1.5, -0.2, 0.5), Quaternion(-1.0, 0, 0, 0)});
  ImageStats stats;
  const auto out = qsig_to_image(sig, ClampMode::Clip, &stats);
  CHECK(stats.clipped_channels == 2);
  CHECK(stats.scalar_min == -1.0);
  CHECK(stats.scalar_max == 0.5);
  const std::size_t off = out.size() - 6;
  CHECK(out[off] == 255);
  CHECK(out[off + 1] == 0);
  CHECK(out[off + 2] == 128);
}
