#include "tcyc/io.hpp"

#include <fstream>

#include "tcyc/check.hpp"

namespace tcyc {

using nlohmann::json;

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::hypothesis_not_met: return "hypothesis-not-met";
  }
  return "unknown";
}

json to_json(const Permutation& p) { return p.image(); }

json to_json(const PermFamily& family) {
  json perms = json::array();
  for (const auto& p : family) perms.push_back(p.image());
  return {{"n", family.degree()}, {"perms", std::move(perms)}};
}

json to_json(const Subset& s) { return s.members(); }

json to_json(const SetSystem& system) {
  json sets = json::array();
  for (const auto& s : system) sets.push_back(s.members());
  return {{"n", system.ground()}, {"sets", std::move(sets)}};
}

namespace {

int read_degree(const json& j, const char* what) {
  if (!j.is_object()) throw FormatError(std::string(what) + ": expected a JSON object at /");
  if (!j.contains("n")) throw FormatError(std::string(what) + ": missing field /n");
  const auto& n = j.at("n");
  if (!n.is_number_integer()) throw FormatError(std::string(what) + ": /n must be an integer");
  const auto v = n.get<long long>();
  if (v < 1 || v > kMaxGround) throw FormatError(std::string(what) + ": /n = " + std::to_string(v) + " outside [1, 64]");
  return static_cast<int>(v);
}

const json& read_array(const json& j, const char* key, const char* what) {
  if (!j.contains(key)) throw FormatError(std::string(what) + ": missing field /" + key);
  const auto& a = j.at(key);
  if (!a.is_array()) throw FormatError(std::string(what) + ": /" + key + " must be an array");
  return a;
}

}  // namespace

Permutation permutation_from_json(const json& j, int n, const std::string& where) {
  try {
    if (j.is_string()) return Permutation::parse_cycles(n, j.get<std::string>());
    if (!j.is_array()) throw FormatError("expected an image array or cycle string");
    std::vector<int> image;
    for (std::size_t k = 0; k < j.size(); ++k) {
      if (!j[k].is_number_integer()) throw FormatError("entry " + std::to_string(k) + " is not an integer");
      image.push_back(j[k].get<int>());
    }
    if (static_cast<int>(image.size()) != n)
      throw FormatError("has " + std::to_string(image.size()) + " entries, expected n = " + std::to_string(n));
    return Permutation(std::move(image));
  } catch (const std::exception& e) {
    throw FormatError(where + ": " + e.what());
  }
}

PermFamily family_from_json(const json& j) {
  const int n = read_degree(j, "family");
  const auto& perms = read_array(j, "perms", "family");
  std::vector<Permutation> members;
  members.reserve(perms.size());
  for (std::size_t k = 0; k < perms.size(); ++k)
    members.push_back(permutation_from_json(perms[k], n, "family: /perms/" + std::to_string(k)));
  return PermFamily(n, std::move(members));
}

SetSystem set_system_from_json(const json& j) {
  const int n = read_degree(j, "set system");
  const auto& sets = read_array(j, "sets", "set system");
  std::vector<Subset> out;
  for (std::size_t k = 0; k < sets.size(); ++k) {
    const std::string where = "set system: /sets/" + std::to_string(k);
    const auto& s = sets[k];
    if (!s.is_array()) throw FormatError(where + ": expected an array of points");
    std::vector<int> pts;
    for (std::size_t e = 0; e < s.size(); ++e) {
      if (!s[e].is_number_integer())
        throw FormatError(where + "/" + std::to_string(e) + ": expected an integer point");
      const int x = s[e].get<int>();
      if (x < 1 || x > n) throw FormatError(where + "/" + std::to_string(e) + ": point " + std::to_string(x) + " outside [n]");
      for (int seen : pts)
        if (seen == x) throw FormatError(where + "/" + std::to_string(e) + ": repeated point " + std::to_string(x));
      pts.push_back(x);
    }
    out.emplace_back(n, std::span<const int>(pts));
  }
  return SetSystem(n, std::move(out));
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path.string() + ": cannot open for reading");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError(path.string() + ": cannot open for writing");
  out << j.dump(2) << '\n';
  if (!out) throw FormatError(path.string() + ": write failed");
}

}  // namespace tcyc
