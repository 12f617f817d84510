#include "manifest.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "flowfilter/errors.hpp"

namespace flowfilter::cli {

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kInvalidArgument, "cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::kInvalidArgument, "cannot write '" + path.string() + "'");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(Errc::kInvalidArgument, "write to '" + path.string() + "' failed");
}

nlohmann::json Manifest::to_json() const {
  nlohmann::json j;
  j["tool"] = "flowfilter";
  j["version"] = FLOWFILTER_VERSION;
  j["command"] = command;
  j["argv"] = argv;
  j["input"] = input;
  j["parameters"] = parameters;
  j["outputs"] = nlohmann::json::array();
  for (const OutputRecord& o : outputs) {
    j["outputs"].push_back(
        {{"path", o.path}, {"bytes", o.bytes}, {"fnv1a64", o.digest}, {"reproducible", o.reproducible}});
  }
  return j;
}

Manifest Manifest::from_json(const nlohmann::json& j) {
  Manifest m;
  try {
    m.command = j.at("command").get<std::string>();
    m.argv = j.at("argv").get<std::vector<std::string>>();
    m.input = j.value("input", nlohmann::json());
    m.parameters = j.value("parameters", nlohmann::json());
    for (const auto& o : j.at("outputs")) {
      m.outputs.push_back({o.at("path").get<std::string>(), o.at("bytes").get<std::uint64_t>(),
                           o.at("fnv1a64").get<std::string>(), o.value("reproducible", true)});
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::kParse, std::string("malformed manifest: ") + e.what());
  }
  return m;
}

std::string manifest_path_for(const std::string& output) { return output + ".manifest.json"; }

void write_manifests(const Manifest& m) {
  const std::string text = m.to_json().dump(2) + "\n";
  for (const OutputRecord& o : m.outputs) write_file(manifest_path_for(o.path), text);
}

}  // namespace flowfilter::cli
