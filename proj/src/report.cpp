#include "tga/report.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "tga/errors.hpp"
#include "tga/version.hpp"

namespace tga {

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
  return buf;
}

std::string hash_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  check_input(in.good(), "cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return fnv1a_hex(buf.str());
}

Json report_to_json(const RunReport& r) {
  Json j;
  j["command"] = r.command;
  Json inputs = Json::array();
  for (const auto& [path, hash] : r.inputs) {
    Json e;
    e["file"] = path;
    e["fnv1a"] = hash;
    inputs.push_back(std::move(e));
  }
  j["inputs"] = std::move(inputs);
  j["results"] = r.results;
  if (r.with_timing) j["seconds"] = r.seconds;
  j["version"] = r.version.empty() ? kVersion : r.version;
  return j;
}

namespace {

void render_text(const Json& j, const std::string& indent, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || value.is_array()) {
        out << indent << key << ":\n";
        render_text(value, indent + "  ", out);
      } else {
        out << indent << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
            << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const Json& value : j) {
      if (value.is_object() || value.is_array()) {
        out << indent << "-\n";
        render_text(value, indent + "  ", out);
      } else {
        out << indent << "- "
            << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
      }
    }
  } else {
    out << indent << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string render_report(const RunReport& r, const std::string& format) {
  Json j = report_to_json(r);
  if (format == "json") return j.dump(2) + "\n";
  check_input(format == "text", "unknown output format: " + format);
  std::ostringstream out;
  render_text(j, "", out);
  return out.str();
}

}  // namespace tga
