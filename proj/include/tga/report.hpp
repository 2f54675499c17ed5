#pragma once
#include <string>
#include <utility>
#include <vector>

#include "tga/io.hpp"

namespace tga {

// 64-bit FNV-1a of a byte string, rendered as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);
// Hash of a file's contents; input_error when unreadable.
std::string hash_file(const std::string& path);

// Envelope around a command's results. Reports are byte-identical across
// repeated runs on identical inputs; wall-clock timing therefore only
// appears when explicitly requested.
struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // path -> content hash
  Json results;
  bool with_timing = false;
  double seconds = 0.0;
  std::string version;
};

Json report_to_json(const RunReport& r);
// format is "json" (indented dump) or "text" (flattened key: value lines).
std::string render_report(const RunReport& r, const std::string& format);

}  // namespace tga
