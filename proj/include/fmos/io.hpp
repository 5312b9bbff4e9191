#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fmos/grid.hpp"

namespace fmos {

// Canonical float formatting used in every artifact (CSV, stdout): shortest
// round-trippable representation so outputs are bitwise reproducible.
std::string fmt_double(double v);

std::string sha256_hex(const std::string& data);

// Run manifest written next to every command's outputs.
struct RunManifest {
  std::string command;
  std::string config_digest_source;  // canonical config serialization
  Grid grid;
  std::string family;
  std::string potential;
  std::vector<double> s_ladder;
  std::vector<std::string> outputs;
  long long wall_ms = 0;
};

void write_manifest(const std::string& path, const RunManifest& m);

void ensure_directory(const std::string& path);

// Minimal CSV writer: header + rows of preformatted cells.
class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path,
                     const std::vector<std::string>& header);
  ~CsvWriter();
  void row(const std::vector<std::string>& cells);

 private:
  struct Impl;
  Impl* impl_;
};

}  // namespace fmos
