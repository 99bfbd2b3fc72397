#ifndef TCYC_IO_HPP
#define TCYC_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "tcyc/family.hpp"
#include "tcyc/subset.hpp"

namespace tcyc {

/// Malformed input; the message names the offending JSON location.
class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

nlohmann::json to_json(const Permutation& p);
nlohmann::json to_json(const PermFamily& family);
nlohmann::json to_json(const Subset& s);
nlohmann::json to_json(const SetSystem& system);

/// A permutation is either a one-line image array [2,1,3] or a cycle string "(1 2)".
Permutation permutation_from_json(const nlohmann::json& j, int n, const std::string& where = "");

/// {"n": 5, "perms": [[1,2,3,4,5], ...]}
PermFamily family_from_json(const nlohmann::json& j);

/// {"n": 5, "sets": [[1,2],[1,3]]}
SetSystem set_system_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace tcyc

#endif  // TCYC_IO_HPP
