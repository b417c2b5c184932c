#include "modbrick/io.hpp"

#include "modbrick/error.hpp"

#include <fstream>
#include <sstream>

namespace modbrick {

namespace {

template <class T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) raise(ErrorKind::ParseError, std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorKind::ParseError, std::string("field \"") + key + "\": " + e.what());
  }
}

}  // namespace

Json field_to_json(const FieldSpec& f) {
  return Json{{"p", f.characteristic()}, {"n", f.degree()}, {"modulus", f.modulus()}};
}

FieldSpec field_from_json(const Json& j) {
  std::optional<std::vector<int>> modulus;
  if (j.contains("modulus")) modulus = get<std::vector<int>>(j, "modulus");
  return gf_make(get<int>(j, "p"), get<int>(j, "n"), modulus);
}

Json matrix_to_json(const FieldSpec& f, const Matrix& m) {
  Json entries = Json::array();
  for (Index i = 0; i < m.rows(); ++i)
    for (Index k = 0; k < m.cols(); ++k) entries.push_back(f.coeffs(m(i, k)));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Matrix matrix_from_json(const FieldSpec& f, const Json& j) {
  const auto rows = get<Index>(j, "rows");
  const auto cols = get<Index>(j, "cols");
  const auto& entries = j.at("entries");
  if (rows < 0 || cols < 0 || !entries.is_array() || static_cast<Index>(entries.size()) != rows * cols)
    raise(ErrorKind::ParseError, "matrix entries do not match rows x cols");
  Matrix m = zeros(f, rows, cols);
  for (Index i = 0; i < rows * cols; ++i) {
    const auto& e = entries[static_cast<std::size_t>(i)];
    std::vector<int> coeffs;
    if (e.is_number_integer()) {
      coeffs.push_back(e.get<int>());
    } else if (e.is_array()) {
      coeffs = e.get<std::vector<int>>();
    } else {
      raise(ErrorKind::ParseError, "matrix entry must be a coefficient list");
    }
    m(i / cols, i % cols) = f.from_coeffs(coeffs);
  }
  return m;
}

Json perm_to_json(const Perm& p) { return Json(p); }

Json group_to_json(const Group& g) {
  Json gens = Json::object();
  for (const auto& [name, p] : g.generators()) gens[name] = p;
  return Json{{"degree", g.degree()}, {"generators", gens}};
}

Group group_from_json(const Json& j) {
  if (j.is_string()) {
    auto g = builtin_group(j.get<std::string>());
    if (!g) raise(ErrorKind::ParseError, "unknown builtin group \"" + j.get<std::string>() + "\"");
    return *g;
  }
  const int degree = get<int>(j, "degree");
  Group::Generators gens;
  if (!j.contains("generators") || !j.at("generators").is_object())
    raise(ErrorKind::ParseError, "group generators must be an object of image lists");
  for (const auto& [name, p] : j.at("generators").items()) {
    try {
      gens.emplace_back(name, p.get<Perm>());
    } catch (const nlohmann::json::exception&) {
      raise(ErrorKind::ParseError, "generator " + name + " is not an image list");
    }
  }
  return group_from_generators(degree, std::move(gens));
}

Json module_to_json(const Module& m, bool inline_group) {
  Json out;
  if (!m.name().empty()) out["name"] = m.name();
  out["field"] = field_to_json(m.field());
  auto builtin = builtin_group_name(m.group());
  out["group"] = (!inline_group && builtin) ? Json(*builtin) : group_to_json(m.group());
  out["dim"] = m.dim();
  Json action = Json::object();
  for (std::size_t s = 0; s < m.group().num_generators(); ++s)
    action[m.group().generator_name(s)] = matrix_to_json(m.field(), m.generator_matrix(s));
  out["action"] = action;
  return out;
}

Module module_from_json(const Json& j) {
  if (!j.is_object()) raise(ErrorKind::ParseError, "module must be a JSON object");
  const FieldSpec f = field_from_json(j.contains("field") ? j.at("field") : Json());
  if (!j.contains("group")) raise(ErrorKind::ParseError, "missing field \"group\"");
  const Group g = group_from_json(j.at("group"));
  const auto dim = get<Index>(j, "dim");
  if (!j.contains("action") || !j.at("action").is_object()) raise(ErrorKind::ParseError, "missing action object");
  std::vector<Matrix> action;
  for (std::size_t s = 0; s < g.num_generators(); ++s) {
    const auto& name = g.generator_name(s);
    if (!j.at("action").contains(name)) raise(ErrorKind::ParseError, "no matrix for generator " + name);
    action.push_back(matrix_from_json(f, j.at("action").at(name)));
  }
  const std::string name = j.contains("name") ? get<std::string>(j, "name") : std::string();
  return module_make(g, f, dim, std::move(action), name);
}

std::optional<Group> builtin_group(const std::string& name) {
  if (name == "trivial") return groups::trivial();
  if (name == "S4") return groups::symmetric(4);
  if (name == "S3") return groups::symmetric(3);
  if (name == "A4") return groups::alternating4();
  if (name == "N1") return groups::klein4();
  if (name == "C4") return groups::cyclic(4);
  if (name == "C2in4") return groups::cyclic2_in_cyclic4();
  if (name == "D4") return groups::dihedral(4);
  if (name == "C4inD4") return groups::rotations_in_dihedral4();
  return std::nullopt;
}

std::optional<std::string> builtin_group_name(const Group& g) {
  for (const char* name : {"trivial", "S4", "S3", "A4", "N1", "C4", "C2in4", "D4", "C4inD4"})
    if (*builtin_group(name) == g) return std::string(name);
  return std::nullopt;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::ParseError, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorKind::ParseError, path.string() + ": " + e.what());
  }
}

Module read_module_file(const std::filesystem::path& path) { return module_from_json(read_json_file(path)); }

namespace {

bool is_flat(const Json& j) {
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

void pretty(const Json& j, int indent, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(indent * depth), ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += pad + Json(it.key()).dump() + ": ";
      pretty(it.value(), indent, depth + 1, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += close + "}";
  } else if (j.is_array() && !is_flat(j) && j.dump().size() > 80) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      pretty(j[i], indent, depth + 1, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += close + "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string pretty_json(const Json& j, int indent) {
  std::string out;
  pretty(j, indent, 0, out);
  return out + "\n";
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) raise(ErrorKind::ParseError, "cannot write " + path.string());
  out << pretty_json(j);
}

}  // namespace modbrick
