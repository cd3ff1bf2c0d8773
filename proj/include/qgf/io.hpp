#ifndef QGF_IO_HPP
#define QGF_IO_HPP

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "qgf/crossed.hpp"

namespace qgf {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Group spec: either {"cyclic": [n1, n2, ...]} for a product of cyclic
// groups, or {"name": ..., "order": n, "labels": [...], "cayley": [[...]]}
// with a full 0-based Cayley table whose identity has index 0.
inline FiniteGroup group_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("group spec: expected an object");
  if (j.contains("cyclic")) {
    const auto& f = j.at("cyclic");
    if (!f.is_array() || f.empty()) throw ParseError("group spec: 'cyclic' must be a nonempty array");
    FiniteGroup g = cyclic(f.at(0).get<int>());
    for (size_t i = 1; i < f.size(); ++i) g = group_product(g, cyclic(f.at(i).get<int>()));
    if (j.contains("name")) g.name = j.at("name").get<std::string>();
    return g;
  }
  if (!j.contains("cayley")) throw ParseError("group spec: need 'cayley' or 'cyclic'");
  std::vector<std::vector<int>> table;
  for (const auto& row : j.at("cayley")) {
    std::vector<int> r;
    for (const auto& v : row) r.push_back(v.get<int>());
    table.push_back(std::move(r));
  }
  if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(table.size()))
    throw ParseError("group spec: 'order' does not match the table size");
  std::vector<std::string> labels;
  if (j.contains("labels"))
    for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
  std::string name = j.value("name", "group");
  try {
    return make_group(name, std::move(table), std::move(labels));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("group spec: ") + e.what());
  }
}

inline FiniteGroup group_from_file(const std::filesystem::path& p) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(p));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("group file " + p.string() + ": " + e.what());
  }
  return group_from_json(j);
}

// A group spec may be given inline or as a path string relative to base_dir.
inline FiniteGroup group_from_spec(const nlohmann::json& j,
                                   const std::filesystem::path& base_dir) {
  if (j.is_string()) return group_from_file(base_dir / j.get<std::string>());
  return group_from_json(j);
}

inline Operator operator_from_json(const nlohmann::json& j, int n) {
  if (j.contains("perm")) {
    const auto& p = j.at("perm");
    if (static_cast<int>(p.size()) != n) throw ParseError("action: perm size mismatch");
    Matrix m = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      int t = p.at(i).get<int>();
      if (t < 0 || t >= n) throw ParseError("action: perm entry out of range");
      m(t, i) = 1.0;
    }
    return {TensorLayout{n}, std::move(m)};
  }
  if (j.contains("matrix")) {
    const auto& rows = j.at("matrix");
    if (static_cast<int>(rows.size()) != n) throw ParseError("action: matrix size mismatch");
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(rows.at(i).size()) != n)
        throw ParseError("action: matrix row size mismatch");
      for (int k = 0; k < n; ++k) {
        const auto& z = rows.at(i).at(k);
        m(i, k) = complex(z.at(0).get<double>(), z.at(1).get<double>());
      }
    }
    return {TensorLayout{n}, std::move(m)};
  }
  throw ParseError("action: unitary entry needs 'perm' or 'matrix'");
}

// Action file:
// {
//   "group":  <group spec or path>,
//   "target": {"dual_group_frame": <group spec>} or {"group_frame": <group spec>},
//   "u":      [one entry per group element, {"perm": [...]} or
//              {"matrix": [[[re, im], ...], ...]}]
// }
inline GroupAction action_from_json(const nlohmann::json& j,
                                    const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw ParseError("action spec: expected an object");
  if (!j.contains("group") || !j.contains("target") || !j.contains("u"))
    throw ParseError("action spec: need 'group', 'target' and 'u'");
  FiniteGroup g = group_from_spec(j.at("group"), base_dir);
  const auto& t = j.at("target");
  std::optional<Frame> target;
  if (t.contains("dual_group_frame"))
    target = dual_group_frame(group_from_spec(t.at("dual_group_frame"), base_dir));
  else if (t.contains("group_frame"))
    target = group_frame(group_from_spec(t.at("group_frame"), base_dir));
  else
    throw ParseError("action spec: target needs 'dual_group_frame' or 'group_frame'");
  const auto& uj = j.at("u");
  if (static_cast<int>(uj.size()) != g.order)
    throw ParseError("action spec: 'u' must have one entry per group element");
  std::vector<Operator> u;
  for (const auto& e : uj) u.push_back(operator_from_json(e, target->w.hdim()));
  return GroupAction(std::move(g), std::move(*target), std::move(u));
}

inline GroupAction action_from_file(const std::filesystem::path& p) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(p));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("action file " + p.string() + ": " + e.what());
  }
  return action_from_json(j, p.parent_path());
}

// Semidirect spec:
// {
//   "h": <group spec or path>, "g": <group spec or path>,
//   "alpha": "inversion" or [one permutation of H per element of G]
// }
struct SemidirectSpec {
  FiniteGroup h, g;
  std::vector<Automorphism> alpha;
};

inline SemidirectSpec semidirect_from_json(const nlohmann::json& j,
                                           const std::filesystem::path& base_dir) {
  if (!j.is_object() || !j.contains("h") || !j.contains("g") || !j.contains("alpha"))
    throw ParseError("semidirect spec: need 'h', 'g' and 'alpha'");
  SemidirectSpec out{group_from_spec(j.at("h"), base_dir),
                     group_from_spec(j.at("g"), base_dir),
                     {}};
  const auto& a = j.at("alpha");
  if (a.is_string()) {
    std::string s = a.get<std::string>();
    if (s == "inversion")
      out.alpha = inversion_action(out.h, out.g);
    else if (s == "trivial") {
      Automorphism id(out.h.order);
      for (int x = 0; x < out.h.order; ++x) id[x] = x;
      out.alpha.assign(out.g.order, id);
    } else
      throw ParseError("semidirect spec: unknown alpha shorthand '" + s + "'");
  } else {
    for (const auto& row : a) {
      Automorphism perm;
      for (const auto& v : row) perm.push_back(v.get<int>());
      out.alpha.push_back(std::move(perm));
    }
  }
  try {
    check_action(out.h, out.g, out.alpha);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("semidirect spec: ") + e.what());
  }
  return out;
}

inline SemidirectSpec semidirect_from_file(const std::filesystem::path& p) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(p));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("semidirect file " + p.string() + ": " + e.what());
  }
  return semidirect_from_json(j, p.parent_path());
}

}  // namespace qgf

#endif
