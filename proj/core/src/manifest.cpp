#include "drcskit/manifest.hpp"

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <random>
#include <sstream>

#include "drcskit/errors.hpp"
#include "drcskit/version.hpp"

namespace drcskit {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t fnv1a64_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("ParseError", "cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return fnv1a64(buf.str());
}

std::string digest_hex(std::uint64_t digest) {
  char out[32];
  std::snprintf(out, sizeof(out), "fnv1a64:%016llx",
                static_cast<unsigned long long>(digest));
  return out;
}

void atomic_write(const std::filesystem::path& path,
                  std::string_view content) {
  namespace fs = std::filesystem;
  fs::path dir = path.parent_path();
  if (dir.empty()) dir = ".";
  std::random_device rd;
  fs::path tmp =
      dir / (path.filename().string() + ".tmp." + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw ParamError("WriteFailed", "cannot create " + tmp.string());
    }
    out.write(content.data(),
              static_cast<std::streamsize>(content.size()));
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw ParamError("WriteFailed", "short write to " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw ParamError("WriteFailed",
                     "cannot move output into place at " + path.string());
  }
}

namespace {

std::string now_rfc3339() {
  std::time_t t;
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  } else {
    t = std::time(nullptr);
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string json_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

RunManifest make_manifest(
    std::string command,
    std::vector<std::pair<std::string, std::string>> parameters,
    const std::vector<std::filesystem::path>& inputs) {
  RunManifest m;
  m.command = std::move(command);
  m.parameters = std::move(parameters);
  for (const auto& path : inputs) {
    m.inputs.emplace_back(path.string(), digest_hex(fnv1a64_file(path)));
  }
  m.version = kVersion;
  m.timestamp = now_rfc3339();
  return m;
}

std::string manifest_to_json(const RunManifest& m) {
  std::ostringstream out;
  out << "{\n  \"command\": \"" << json_escape(m.command) << "\",\n";
  out << "  \"parameters\": {";
  for (size_t i = 0; i < m.parameters.size(); ++i) {
    if (i) out << ", ";
    out << '"' << json_escape(m.parameters[i].first) << "\": \""
        << json_escape(m.parameters[i].second) << '"';
  }
  out << "},\n  \"inputs\": {";
  for (size_t i = 0; i < m.inputs.size(); ++i) {
    if (i) out << ", ";
    out << '"' << json_escape(m.inputs[i].first) << "\": \""
        << json_escape(m.inputs[i].second) << '"';
  }
  out << "},\n  \"version\": \"" << json_escape(m.version) << "\",\n";
  out << "  \"timestamp\": \"" << json_escape(m.timestamp) << "\"\n}\n";
  return out.str();
}

void write_manifest(const RunManifest& m,
                    const std::filesystem::path& output_path) {
  std::filesystem::path p = output_path;
  p += ".manifest.json";
  atomic_write(p, manifest_to_json(m));
}

}  // namespace drcskit
