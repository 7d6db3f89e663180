#include "topal/model_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "topal/error.hpp"

namespace topal {

namespace {

using nlohmann::json;

const json& member(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ModelError(where + ": missing \"" + key + "\"");
  return *it;
}

std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw ModelError(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_string()) throw ModelError(where + "[" + std::to_string(k) + "]: expected a string");
    out.push_back(j[k].get<std::string>());
  }
  return out;
}

Subset point_set(const json& j, const PointSpace& space, const std::string& where) {
  auto ids = string_list(j, where);
  Subset s;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (!space.contains(ids[k]))
      throw ModelError(where + "[" + std::to_string(k) + "]: unknown point '" + ids[k] + "'");
    s |= Subset::singleton(space.index_of(ids[k]));
  }
  return s;
}

json point_list(const PointSpace& space, Subset s) { return space.names(s); }

}  // namespace

TopoModel load_model_json(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ModelError(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw ModelError("model: expected a JSON object");

  PointSpace space = [&] {
    try {
      return PointSpace(string_list(member(root, "points", "model"), "points"));
    } catch (const ModelError& e) {
      throw ModelError(std::string("points: ") + e.what());
    }
  }();

  auto agents = string_list(member(root, "agents", "model"), "agents");
  if (agents.empty()) throw ModelError("agents: at least one agent is required");
  std::set<std::string> agent_set(agents.begin(), agents.end());
  if (agent_set.size() != agents.size()) throw ModelError("agents: duplicate agent id");

  std::vector<Subset> subbase;
  if (auto it = root.find("subbase"); it != root.end()) {
    if (!it->is_array()) throw ModelError("subbase: expected an array of point lists");
    for (std::size_t k = 0; k < it->size(); ++k)
      subbase.push_back(point_set((*it)[k], space, "subbase[" + std::to_string(k) + "]"));
  }
  Topology topology = Topology::from_subbase(space, subbase);

  const json& gens = member(root, "generators", "model");
  if (!gens.is_array()) throw ModelError("generators: expected an array");
  std::vector<NamedFunction> generators;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const std::string where = "generators[" + std::to_string(g) + "]";
    if (!gens[g].is_object()) throw ModelError(where + ": expected an object");
    const json& name = member(gens[g], "name", where);
    if (!name.is_string()) throw ModelError(where + ".name: expected a string");
    const json& cells = member(gens[g], "cells", where);
    if (!cells.is_object()) throw ModelError(where + ".cells: expected an object keyed by agent");
    for (auto it = cells.begin(); it != cells.end(); ++it)
      if (!agent_set.count(it.key())) throw ModelError(where + ".cells: unknown agent '" + it.key() + "'");

    std::vector<std::vector<Subset>> per_agent;
    for (const auto& a : agents) {
      const std::string aw = where + ".cells." + a;
      const json& list = member(cells, a.c_str(), where + ".cells");
      if (!list.is_array()) throw ModelError(aw + ": expected an array of point lists");
      std::vector<Subset> agent_cells;
      for (std::size_t c = 0; c < list.size(); ++c)
        agent_cells.push_back(point_set(list[c], space, aw + "[" + std::to_string(c) + "]"));
      per_agent.push_back(std::move(agent_cells));
    }
    generators.push_back({name.get<std::string>(), NeighbourhoodFunction::from_partitions(space.size(), per_agent)});
  }

  std::map<PropId, Subset> valuation;
  if (auto it = root.find("valuation"); it != root.end()) {
    if (!it->is_object()) throw ModelError("valuation: expected an object");
    for (auto v = it->begin(); v != it->end(); ++v) {
      if (v.key() == kFalsumAtom) throw ModelError("valuation: '" + v.key() + "' is reserved");
      valuation.emplace(v.key(), point_set(v.value(), space, "valuation." + v.key()));
    }
  }

  return TopoModel(TopoFrame(std::move(topology), std::move(agents), std::move(generators)), std::move(valuation));
}

TopoModel load_model_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return load_model_json(buf.str());
  } catch (const ModelError& e) {
    throw ModelError(path.string() + ": " + e.what());
  }
}

std::string model_to_json(const TopoModel& model, int indent) {
  const TopoFrame& frame = model.frame();
  const PointSpace& space = frame.space();
  json root;
  root["points"] = space.ids();
  root["agents"] = frame.agents();

  std::vector<Subset> base;
  for (int p = 0; p < space.size(); ++p) {
    Subset n = frame.topology().minimal_neighbourhood(p);
    if (std::find(base.begin(), base.end(), n) == base.end()) base.push_back(n);
  }
  json subbase = json::array();
  for (Subset b : base) subbase.push_back(point_list(space, b));
  root["subbase"] = subbase;

  json gens = json::array();
  for (const auto& g : frame.generators()) {
    json cells = json::object();
    for (int i = 0; i < frame.num_agents(); ++i) {
      json list = json::array();
      for (Subset c : g.theta.cells_of(i)) list.push_back(point_list(space, c));
      cells[frame.agents()[i]] = list;
    }
    gens.push_back({{"name", g.name}, {"cells", cells}});
  }
  root["generators"] = gens;

  json val = json::object();
  for (const auto& [p, s] : model.valuation()) val[p] = point_list(space, s);
  root["valuation"] = val;
  return root.dump(indent);
}

}  // namespace topal
