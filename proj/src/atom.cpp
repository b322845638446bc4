#include <bqed/atom.hpp>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace bqed {

namespace {

using nlohmann::json;

const Level* find_level(const AtomSpec& spec, const std::string& id) {
  for (const auto& lvl : spec.levels) {
    if (lvl.id == id) return &lvl;
  }
  return nullptr;
}

bool is_zero(const std::array<std::complex<double>, 3>& v) {
  return v[0] == 0.0 && v[1] == 0.0 && v[2] == 0.0;
}

void reject_unknown_keys(const json& obj, std::set<std::string> allowed,
                         const std::string& where) {
  for (const auto& item : obj.items()) {
    if (!allowed.count(item.key())) {
      throw AtomParseError("unknown key \"" + item.key() + "\" in " + where);
    }
  }
}

std::array<double, 3> parse_vec3(const json& arr, const std::string& where) {
  if (!arr.is_array() || arr.size() != 3) {
    throw AtomParseError(where + " must be an array of 3 numbers");
  }
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i) {
    if (!arr[i].is_number()) {
      throw AtomParseError(where + " must contain only numbers");
    }
    out[i] = arr[i].get<double>();
  }
  return out;
}

std::string require_string(const json& obj, const char* key,
                           const std::string& where) {
  if (!obj.contains(key) || !obj[key].is_string()) {
    throw AtomParseError(where + " needs a string \"" + key + "\"");
  }
  return obj[key].get<std::string>();
}

}  // namespace

std::vector<std::string> validate(const AtomSpec& spec) {
  std::vector<std::string> problems;
  if (spec.levels.empty()) {
    problems.push_back("atom has no levels");
  }
  std::set<std::string> ids;
  for (const auto& lvl : spec.levels) {
    if (lvl.id.empty()) {
      problems.push_back("level with empty id");
    }
    if (!ids.insert(lvl.id).second) {
      problems.push_back("duplicate level id \"" + lvl.id + "\"");
    }
    if (!std::isfinite(lvl.energy)) {
      problems.push_back("level \"" + lvl.id + "\" has non-finite energy");
    }
  }
  if (!ids.count(spec.initial_state)) {
    problems.push_back("initial_state \"" + spec.initial_state +
                       "\" is not a level id");
  }
  std::map<std::pair<std::string, std::string>,
           const std::array<std::complex<double>, 3>*>
      seen;
  for (const auto& d : spec.dipoles) {
    if (d.from == d.to) {
      problems.push_back("dipole element couples \"" + d.from +
                         "\" to itself");
      continue;
    }
    for (const auto& id : {d.from, d.to}) {
      if (!ids.count(id)) {
        problems.push_back("dipole element references unknown level \"" + id +
                           "\"");
      }
    }
    for (const auto& c : d.vector) {
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
        problems.push_back("dipole element " + d.from + "->" + d.to +
                           " has a non-finite component");
        break;
      }
    }
    auto key = std::make_pair(d.from, d.to);
    if (!seen.emplace(key, &d.vector).second) {
      problems.push_back("duplicate dipole element " + d.from + "->" + d.to);
    }
  }
  for (const auto& [key, vec] : seen) {
    auto rev = seen.find({key.second, key.first});
    if (rev == seen.end() || key.first > key.second) continue;
    for (int i = 0; i < 3; ++i) {
      if ((*vec)[i] != std::conj((*rev->second)[i])) {
        problems.push_back("dipole elements " + key.first + "->" + key.second +
                           " and " + key.second + "->" + key.first +
                           " are not conjugates");
        break;
      }
    }
  }
  return problems;
}

std::vector<Transition> transitions_from(const AtomSpec& spec,
                                         const std::string& b) {
  const Level* from = find_level(spec, b);
  if (from == nullptr) {
    throw std::invalid_argument("unknown level \"" + b + "\"");
  }
  std::map<std::string, std::array<std::complex<double>, 3>> partner_vec;
  for (const auto& d : spec.dipoles) {
    if (d.from == b) {
      partner_vec.emplace(d.to, d.vector);
    } else if (d.to == b) {
      std::array<std::complex<double>, 3> v{
          std::conj(d.vector[0]), std::conj(d.vector[1]),
          std::conj(d.vector[2])};
      partner_vec.emplace(d.from, v);
    }
  }
  std::vector<Transition> out;
  for (const auto& [partner, v] : partner_vec) {
    if (is_zero(v)) continue;
    const Level* to = find_level(spec, partner);
    if (to == nullptr) {
      throw std::invalid_argument("dipole references unknown level \"" +
                                  partner + "\"");
    }
    Transition t;
    t.partner = partner;
    t.omega = from->energy - to->energy;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        t.polarization[i][j] = (v[i] * std::conj(v[j])).real();
      }
    }
    out.push_back(std::move(t));
  }
  // std::map iteration already sorts by partner id.
  return out;
}

AtomSpec parse_atom_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw AtomParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) {
    throw AtomParseError("top level must be an object");
  }
  reject_unknown_keys(root, {"name", "levels", "dipoles", "initial_state"},
                      "the top-level object");
  AtomSpec spec;
  spec.name = require_string(root, "name", "the top-level object");
  spec.initial_state =
      require_string(root, "initial_state", "the top-level object");
  if (!root.contains("levels") || !root["levels"].is_array()) {
    throw AtomParseError("\"levels\" must be an array");
  }
  for (const auto& lj : root["levels"]) {
    if (!lj.is_object()) {
      throw AtomParseError("each level must be an object");
    }
    reject_unknown_keys(lj, {"id", "energy"}, "a level");
    Level lvl;
    lvl.id = require_string(lj, "id", "a level");
    if (!lj.contains("energy") || !lj["energy"].is_number()) {
      throw AtomParseError("level \"" + lvl.id + "\" needs a numeric energy");
    }
    lvl.energy = lj["energy"].get<double>();
    spec.levels.push_back(std::move(lvl));
  }
  if (!root.contains("dipoles") || !root["dipoles"].is_array()) {
    throw AtomParseError("\"dipoles\" must be an array");
  }
  for (const auto& dj : root["dipoles"]) {
    if (!dj.is_object()) {
      throw AtomParseError("each dipole element must be an object");
    }
    reject_unknown_keys(dj, {"from", "to", "re", "im"}, "a dipole element");
    DipoleElement d;
    d.from = require_string(dj, "from", "a dipole element");
    d.to = require_string(dj, "to", "a dipole element");
    if (!dj.contains("re")) {
      throw AtomParseError("dipole element " + d.from + "->" + d.to +
                           " needs \"re\"");
    }
    auto re = parse_vec3(dj["re"], "\"re\" of " + d.from + "->" + d.to);
    std::array<double, 3> im{};
    if (dj.contains("im")) {
      im = parse_vec3(dj["im"], "\"im\" of " + d.from + "->" + d.to);
    }
    for (int i = 0; i < 3; ++i) d.vector[i] = {re[i], im[i]};
    spec.dipoles.push_back(std::move(d));
  }
  return spec;
}

AtomSpec load_atom_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw AtomParseError("cannot read atom file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_atom_json(buf.str());
}

}  // namespace bqed
