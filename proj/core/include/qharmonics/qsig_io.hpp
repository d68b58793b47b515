#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "qharmonics/grid.hpp"

namespace qh {

// QSIG container, little-endian throughout:
//
//   "QSG" version(1 byte: '1' signal, '2' spectrum)
//   u32 ns | u32 nt | f64 s_min | f64 t_min | f64 ds | f64 dt
//   [version '2' only] extended provenance block, 130 bytes:
//     u8 kind | u8 flags (bit0 phase_corrected)
//     f64 mu1.x mu1.y mu1.z mu2.x mu2.y mu2.z
//     f64 window_u window_v
//     f64 a1 b1 c1 d1 a2 b2 c2 d2
//   payload: ns*nt*4 f64 (w, x, y, z per sample, rows of constant t)

inline constexpr std::size_t kQsigHeaderBytes = 4 + 2 * 4 + 4 * 8;
inline constexpr std::size_t kQspecExtensionBytes = 2 + 16 * 8;

std::vector<std::uint8_t> encode_qsig(const QSignal2D& sig);
std::vector<std::uint8_t> encode_qspec(const QSpectrum2D& spec);

/// Accepts both versions; a spectrum decodes to its samples on the frequency grid.
/// Throws BadMagic, BadVersion, TruncatedPayload.
QSignal2D decode_qsig(std::span<const std::uint8_t> bytes);
/// Requires version '2'.
QSpectrum2D decode_qspec(std::span<const std::uint8_t> bytes);

void save_qsig(const QSignal2D& sig, const std::filesystem::path& path);
QSignal2D load_qsig(const std::filesystem::path& path);
void save_qspec(const QSpectrum2D& spec, const std::filesystem::path& path);
QSpectrum2D load_qspec(const std::filesystem::path& path);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

// Color images: binary P6 with maxval 255. Pixel (R, G, B) maps to the pure
// quaternion (0, R/255, G/255, B/255); column x is sample s, row y is sample t.

enum class ClampMode {
  Clip,     // each channel clipped to [0, 1]
  Rescale,  // vector parts mapped affinely from [min, max] onto [0, 1]
};

/// Scalar-part and clipping statistics from qsig_to_image.
struct ImageStats {
  double scalar_min = 0.0;
  double scalar_max = 0.0;
  std::size_t clipped_channels = 0;
};

/// Throws Errc::BadPpm.
QSignal2D image_to_qsig(std::span<const std::uint8_t> ppm);
std::vector<std::uint8_t> qsig_to_image(const QSignal2D& sig, ClampMode mode,
                                        ImageStats* stats = nullptr);

}  // namespace qh
