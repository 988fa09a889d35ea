#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vpwave/transform.hpp"

namespace vpwave {

/// Malformed or inconsistent coefficient document.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FileKind { samples, pyramid };

struct FileMetadata {
  std::optional<double> theta;
  std::optional<std::string> source_expr;
  std::optional<double> tau;
  std::optional<std::string> created;

  bool operator==(const FileMetadata&) const = default;
};

/// In-memory form of the JSON coefficient document.
///
/// samples: coarse holds f at X_N in index order, coarse_n = N, levels empty,
///          n0 is the intended coarsest size (N = n0 3^J).
/// pyramid: coarse holds the level-n0 scaling values, levels coarse to fine.
struct CoeffFile {
  static constexpr int kSchema = 1;

  FileKind kind = FileKind::samples;
  int n0 = 0;
  std::vector<PyramidLevel> levels;
  int coarse_n = 0;
  std::optional<int> coarse_m;
  std::vector<double> coarse;
  FileMetadata meta;

  static CoeffFile from_samples(std::vector<double> samples, int n0);
  static CoeffFile from_pyramid(const Pyramid& p);

  Pyramid to_pyramid() const;

  /// Throws SchemaError on any violation.
  void validate() const;

  bool operator==(const CoeffFile&) const = default;
};

struct WriteOptions {
  bool decimal = false;
};

std::string serialize(const CoeffFile& f, const WriteOptions& opts = {});
CoeffFile parse_coeff_file(const std::string& text);
CoeffFile read_coeff_file(std::istream& in);

/// Lossless "0x1.8p+0" spelling and its inverse.
std::string hex_float(double v);
double parse_hex_float(const std::string& s);

}  // namespace vpwave
