#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace heiskit {

// Shortest round-trip decimal form of v (std::to_chars); byte-stable across
// reruns, which the result tables rely on.
std::string format_double(double v);

// FNV-1a 64-bit; used for config hashes in manifests.
std::uint64_t fnv1a64(std::string_view s);

// Comma-delimited table with a one-line header.
class TableWriter {
 public:
  TableWriter(std::ostream& os, const std::vector<std::string>& header);
  void row(std::span<const std::string> cells);
  void row_values(std::span<const double> values);

 private:
  std::ostream& os_;
  std::size_t columns_;
};

// Key-value manifest. Lines are written in insertion order, then a final
// config_hash line holding the FNV-1a hash of everything above it.
class Manifest {
 public:
  void set(std::string key, std::string value);
  void set(std::string key, double value);
  void set(std::string key, std::uint64_t value);
  void set(std::string key, std::int64_t value);
  void write(std::ostream& os) const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace heiskit
