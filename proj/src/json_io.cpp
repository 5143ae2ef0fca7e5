#include "parwb/json_io.hpp"

#include <fstream>
#include <unordered_map>

namespace parwb {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InputError(path + ": " + what);
}

const json& require(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path + "." + key, "missing");
  return *it;
}

int require_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

std::vector<std::vector<int>> require_matrix(const json& j,
                                             const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of arrays");
  std::vector<std::vector<int>> out;
  for (size_t i = 0; i < j.size(); ++i) {
    const auto& row = j[i];
    const std::string row_path = path + "[" + std::to_string(i) + "]";
    if (!row.is_array()) fail(row_path, "expected an array");
    std::vector<int> r;
    for (size_t k = 0; k < row.size(); ++k) {
      r.push_back(require_int(row[k], row_path + "[" + std::to_string(k) + "]"));
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::string> require_names(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of strings");
  std::vector<std::string> out;
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) {
      fail(path + "[" + std::to_string(i) + "]", "expected a string");
    }
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

}  // namespace

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw InputError(path.string() + ": invalid JSON");
  return j;
}

json semigroup_to_json(const FiniteSemigroup& s) {
  return json{{"elements", s.names()}, {"table", s.rows()}};
}

json monoid_to_json(const FiniteMonoid& m) {
  json j = semigroup_to_json(m.sg);
  j["identity"] = m.identity;
  return j;
}

json group_to_json(const FiniteGroup& g) {
  json j = monoid_to_json(g.monoid);
  j["inverse"] = g.inverse;
  return j;
}

FiniteSemigroup semigroup_from_json(const json& j, const std::string& path) {
  auto names = require_names(require(j, "elements", path), path + ".elements");
  auto table = require_matrix(require(j, "table", path), path + ".table");
  try {
    auto checked = validate_semigroup(std::move(names), table);
    if (auto* v = std::get_if<AssocViolation>(&checked)) {
      fail(path + ".table", "not associative at (" + std::to_string(v->x) +
                                "," + std::to_string(v->y) + "," +
                                std::to_string(v->z) + ")");
    }
    return std::get<FiniteSemigroup>(std::move(checked));
  } catch (const InputError& e) {
    fail(path + ".table", e.what());
  }
}

FiniteMonoid monoid_from_json(const json& j, const std::string& path) {
  auto sg = semigroup_from_json(j, path);
  const int e = require_int(require(j, "identity", path), path + ".identity");
  try {
    return make_monoid(std::move(sg), e);
  } catch (const InputError& err) {
    fail(path + ".identity", err.what());
  }
}

FiniteGroup group_from_json(const json& j, const std::string& path) {
  auto m = monoid_from_json(j, path);
  auto g = as_group(m);
  if (!g) fail(path, "monoid is not a group");
  if (auto it = j.find("inverse"); it != j.end()) {
    std::vector<int> given;
    for (size_t i = 0; i < it->size(); ++i) {
      given.push_back(
          require_int((*it)[i], path + ".inverse[" + std::to_string(i) + "]"));
    }
    if (given != g->inverse) fail(path + ".inverse", "wrong inverse table");
  }
  return *g;
}

json action_to_json(const PartialAction& a) {
  json maps = json::object();
  for (int m = 0; m < a.monoid.size(); ++m) {
    json map = json::object();
    for (int x = 0; x < a.carrier.size(); ++x) {
      if (a.defined(m, x)) map[a.carrier.name(x)] = a.carrier.name(a.apply(m, x));
    }
    maps[a.monoid.name(m)] = std::move(map);
  }
  return json{{"monoid", monoid_to_json(a.monoid)},
              {"carrier", semigroup_to_json(a.carrier)},
              {"maps", std::move(maps)}};
}

PartialAction action_from_json(const json& j,
                               const std::filesystem::path& base_dir,
                               const std::string& path) {
  auto resolve = [&](const json& node, const std::string& node_path) -> json {
    if (node.is_string()) {
      return load_json_file(base_dir / node.get<std::string>());
    }
    if (!node.is_object()) {
      fail(node_path, "expected an object or a file-path string");
    }
    return node;
  };
  const json monoid_json =
      resolve(require(j, "monoid", path), path + ".monoid");
  const json carrier_json =
      resolve(require(j, "carrier", path), path + ".carrier");

  PartialAction a;
  a.monoid = monoid_from_json(monoid_json, path + ".monoid");
  a.carrier = semigroup_from_json(carrier_json, path + ".carrier");

  std::unordered_map<std::string, int> monoid_index, carrier_index;
  for (int m = 0; m < a.monoid.size(); ++m) monoid_index[a.monoid.name(m)] = m;
  for (int x = 0; x < a.carrier.size(); ++x) carrier_index[a.carrier.name(x)] = x;

  a.maps.assign(a.monoid.size(),
                std::vector<int>(a.carrier.size(), PartialAction::kUndefined));
  const json& maps = require(j, "maps", path);
  if (!maps.is_object()) fail(path + ".maps", "expected an object");
  for (const auto& [m_name, map] : maps.items()) {
    const std::string m_path = path + ".maps." + m_name;
    auto m_it = monoid_index.find(m_name);
    if (m_it == monoid_index.end()) fail(m_path, "unknown monoid element");
    if (!map.is_object()) fail(m_path, "expected an object");
    for (const auto& [x_name, y] : map.items()) {
      const std::string x_path = m_path + "." + x_name;
      auto x_it = carrier_index.find(x_name);
      if (x_it == carrier_index.end()) fail(x_path, "unknown carrier element");
      if (!y.is_string()) fail(x_path, "expected a carrier element name");
      auto y_it = carrier_index.find(y.get<std::string>());
      if (y_it == carrier_index.end()) {
        fail(x_path, "unknown carrier element: " + y.get<std::string>());
      }
      a.maps[m_it->second][x_it->second] = y_it->second;
    }
  }
  return a;
}

PartialAction load_action_file(const std::filesystem::path& file) {
  return action_from_json(load_json_file(file), file.parent_path());
}

json linear_pa01_to_json(const LinearPA01& pa) {
  return json{{"p", pa.algebra.p},
              {"dim", pa.algebra.dim},
              {"basis_names", pa.algebra.basis_names},
              {"structure", pa.algebra.structure},
              {"dom0_basis", pa.dom0_basis},
              {"alpha0_matrix", pa.alpha0_rows}};
}

LinearPA01 linear_pa01_from_json(const json& j, const std::string& path) {
  const int p = require_int(require(j, "p", path), path + ".p");
  const int dim = require_int(require(j, "dim", path), path + ".dim");
  const json& structure = require(j, "structure", path);
  if (!structure.is_array() || static_cast<int>(structure.size()) != dim) {
    fail(path + ".structure", "expected dim x dim x dim constants");
  }
  std::vector<std::vector<FpVec>> cube;
  for (int i = 0; i < dim; ++i) {
    cube.push_back(require_matrix(structure[i], path + ".structure[" +
                                                    std::to_string(i) + "]"));
  }
  std::vector<std::string> names;
  if (auto it = j.find("basis_names"); it != j.end()) {
    names = require_names(*it, path + ".basis_names");
  }
  try {
    auto algebra = make_algebra(p, dim, std::move(cube), std::move(names));
    auto dom0 =
        require_matrix(require(j, "dom0_basis", path), path + ".dom0_basis");
    auto alpha0 = require_matrix(require(j, "alpha0_matrix", path),
                                 path + ".alpha0_matrix");
    return make_linear_pa01(std::move(algebra), std::move(dom0),
                            std::move(alpha0));
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

LinearPA01 load_algebra_action_file(const std::filesystem::path& file) {
  return linear_pa01_from_json(load_json_file(file));
}

namespace {

json condition_to_json(const ConditionResult& c) {
  return json{{"verdict", to_string(c.verdict)},
              {"witness", c.witness},
              {"witness_text", c.witness_text},
              {"reason", c.reason}};
}

ConditionResult condition_from_json(const json& j) {
  ConditionResult c;
  const std::string verdict = j.at("verdict").get<std::string>();
  c.verdict = verdict == "pass"   ? Verdict::kPass
              : verdict == "fail" ? Verdict::kFail
                                  : Verdict::kNotApplicable;
  c.witness = j.at("witness").get<std::vector<int>>();
  c.witness_text = j.at("witness_text").get<std::string>();
  c.reason = j.at("reason").get<std::string>();
  return c;
}

}  // namespace

json criteria_report_to_json(const CriteriaReport& r) {
  json hypotheses = json::array();
  for (const auto& h : r.hypotheses) {
    hypotheses.push_back(json{{"element", h.element},
                              {"dom_ideal", h.dom_ideal},
                              {"im_ideal", h.im_ideal},
                              {"dom_unital", h.dom_unital},
                              {"im_unital", h.im_unital}});
  }
  return json{{"action_valid", r.action_valid},
              {"axiom_failures", r.axiom_failures},
              {"hypotheses", std::move(hypotheses)},
              {"conditions",
               json{{"LC1", condition_to_json(r.lc1)},
                    {"LC1'", condition_to_json(r.lc1_prime)},
                    {"LC2", condition_to_json(r.lc2)},
                    {"LC2'", condition_to_json(r.lc2_prime)},
                    {"LC3", condition_to_json(r.lc3)},
                    {"H", condition_to_json(r.h)},
                    {"left-zero", condition_to_json(r.left_zero)}}},
              {"confluence",
               json{{"status", r.confluence.status},
                    {"witness", r.confluence.witness}}},
              {"globalizable", r.globalizable},
              {"globalizable_reason", r.globalizable_reason},
              {"locally_confluent", r.locally_confluent},
              {"locally_confluent_reason", r.locally_confluent_reason}};
}

CriteriaReport criteria_report_from_json(const json& j) {
  CriteriaReport r;
  r.action_valid = j.at("action_valid").get<bool>();
  r.axiom_failures = j.at("axiom_failures").get<std::vector<std::string>>();
  for (const auto& h : j.at("hypotheses")) {
    r.hypotheses.push_back(IdealHypothesisEntry{
        h.at("element").get<std::string>(), h.at("dom_ideal").get<bool>(),
        h.at("im_ideal").get<bool>(), h.at("dom_unital").get<bool>(),
        h.at("im_unital").get<bool>()});
  }
  const auto& c = j.at("conditions");
  r.lc1 = condition_from_json(c.at("LC1"));
  r.lc1_prime = condition_from_json(c.at("LC1'"));
  r.lc2 = condition_from_json(c.at("LC2"));
  r.lc2_prime = condition_from_json(c.at("LC2'"));
  r.lc3 = condition_from_json(c.at("LC3"));
  r.h = condition_from_json(c.at("H"));
  r.left_zero = condition_from_json(c.at("left-zero"));
  r.confluence.status = j.at("confluence").at("status").get<std::string>();
  r.confluence.witness =
      j.at("confluence").at("witness").get<std::vector<std::string>>();
  r.globalizable = j.at("globalizable").get<std::string>();
  r.globalizable_reason = j.at("globalizable_reason").get<std::string>();
  r.locally_confluent = j.at("locally_confluent").get<std::string>();
  r.locally_confluent_reason =
      j.at("locally_confluent_reason").get<std::string>();
  return r;
}

}  // namespace parwb
