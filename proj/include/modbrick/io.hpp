#pragma once

// JSON forms of fields, matrices, groups and modules.
//
//   field:  {"p": 2, "n": 2, "modulus": [1, 1, 1]}       low degree first
//   matrix: {"rows": r, "cols": c, "entries": [[c0, c1], ...]}  row-major
//   group:  {"degree": 4, "generators": {"a": [1, 2, 3, 0], ...}}
//   module: {"field": ..., "group": <group or builtin name>, "dim": d,
//            "action": {"a": <matrix>, ...}, "name": "S2"}

#include "modbrick/module.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

namespace modbrick {

using Json = nlohmann::ordered_json;

Json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const Json& j);

Json matrix_to_json(const FieldSpec& f, const Matrix& m);
Matrix matrix_from_json(const FieldSpec& f, const Json& j);

Json group_to_json(const Group& g);
/// Accepts a group object or the name of a built-in group (see builtin_group).
Group group_from_json(const Json& j);

Json module_to_json(const Module& m, bool inline_group = true);
Module module_from_json(const Json& j);

Json perm_to_json(const Perm& p);

/// Built-in groups: trivial, S4, A4, N1 (Klein four in S4), C4, C2in4 (squares
/// in C4), D4, C4inD4 (rotations in D4), S3.
std::optional<Group> builtin_group(const std::string& name);
/// The builtin name of a group, when it is one.
std::optional<std::string> builtin_group_name(const Group& g);

Json read_json_file(const std::filesystem::path& path);
Module read_module_file(const std::filesystem::path& path);
/// Objects are indented; short arrays stay on one line.
std::string pretty_json(const Json& j, int indent = 2);
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace modbrick
