#include "heiskit/io.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <system_error>

#include "heiskit/errors.hpp"

namespace heiskit {

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw ValidationError("format_double: conversion failed");
  return std::string(buf, ptr);
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

TableWriter::TableWriter(std::ostream& os, const std::vector<std::string>& header)
    : os_(os), columns_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i > 0) os_ << ',';
    os_ << header[i];
  }
  os_ << '\n';
}

void TableWriter::row(std::span<const std::string> cells) {
  if (cells.size() != columns_) throw ValidationError("TableWriter: column count mismatch");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) os_ << ',';
    os_ << cells[i];
  }
  os_ << '\n';
}

void TableWriter::row_values(std::span<const double> values) {
  if (values.size() != columns_) throw ValidationError("TableWriter: column count mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) os_ << ',';
    os_ << format_double(values[i]);
  }
  os_ << '\n';
}

void Manifest::set(std::string key, std::string value) {
  entries_.emplace_back(std::move(key), std::move(value));
}

void Manifest::set(std::string key, double value) {
  entries_.emplace_back(std::move(key), format_double(value));
}

void Manifest::set(std::string key, std::uint64_t value) {
  entries_.emplace_back(std::move(key), std::to_string(value));
}

void Manifest::set(std::string key, std::int64_t value) {
  entries_.emplace_back(std::move(key), std::to_string(value));
}

void Manifest::write(std::ostream& os) const {
  std::string body;
  for (const auto& [key, value] : entries_) {
    body += key;
    body += " = ";
    body += value;
    body += '\n';
  }
  os << body;
  char hex[32];
  const auto [ptr, ec] = std::to_chars(hex, hex + sizeof(hex), fnv1a64(body), 16);
  os << "config_hash = " << std::string_view(hex, ptr) << '\n';
}

}  // namespace heiskit
