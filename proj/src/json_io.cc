// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "inputsel/json_io.h"

#include <fstream>
#include <stdexcept>

namespace inputsel {

Json ToJson(const StructuredMatrix& m) {
  Json fixed = Json::array();
  for (const auto& [pos, v] : m.fixed())
    fixed.push_back({pos.first, pos.second, FormatRational(v)});
  Json free = Json::array();
  for (const auto& pos : m.free()) free.push_back({pos.first, pos.second});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"fixed", fixed}, {"free", free}};
}

StructuredMatrix StructuredFromJson(const Json& j) {
  StructuredMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
  for (const auto& e : j.value("fixed", Json::array())) {
    const Json& v = e.at(2);
    const Rational r = v.is_string() ? ParseRational(v.get<std::string>())
                                     : Rational(v.get<long long>());
    m.SetFixed(e.at(0).get<int>(), e.at(1).get<int>(), r);
  }
  for (const auto& e : j.value("free", Json::array()))
    m.AddFree(e.at(0).get<int>(), e.at(1).get<int>());
  return m;
}

Json ToJson(const Graph& g) {
  Json edges = Json::array();
  if (g.undirected) {
    for (const auto& [i, j] : g.UndirectedEdges()) edges.push_back({i, j});
  } else {
    for (const auto& [i, j] : g.edges) edges.push_back({i, j});
  }
  return {{"n", g.n}, {"edges", edges}, {"undirected", g.undirected}};
}

Graph GraphFromJson(const Json& j) {
  Graph g(j.at("n").get<int>(), j.value("undirected", false));
  for (const auto& e : j.at("edges")) g.AddEdge(e.at(0).get<int>(), e.at(1).get<int>());
  return g;
}

Json ToJson(const DescriptorSystem& sys) {
  Json out = {{"kind", KindName(sys.kind)},
              {"n", sys.n},
              {"F", ToJson(sys.F)},
              {"A", ToJson(sys.A)},
              {"eligible", sys.eligible}};
  if (sys.graph) out["graph"] = ToJson(*sys.graph);
  return out;
}

DescriptorSystem SystemFromJson(const Json& j) {
  const SystemKind kind = ParseKind(j.value("kind", std::string("custom")));
  if (kind != SystemKind::kCustom) {
    if (!j.contains("graph"))
      throw std::invalid_argument("system JSON of this kind needs a graph");
    const Graph g = GraphFromJson(j.at("graph"));
    switch (kind) {
      case SystemKind::kConsensus: return ConsensusSystem(g);
      case SystemKind::kDoubleIntegrator: return DoubleIntegratorSystem(g);
      default: return FreeParameterSystem(g);
    }
  }
  std::optional<std::vector<int>> eligible;
  if (j.contains("eligible")) eligible = j.at("eligible").get<std::vector<int>>();
  return CustomSystem(StructuredFromJson(j.at("F")), StructuredFromJson(j.at("A")),
                      eligible);
}

Json ToJson(const Certificate& c) {
  return {{"passed", c.passed()},
          {"rank_AB_ok", c.rank_AB_ok},
          {"pencil_ok", c.pencil_ok},
          {"pencil_exact_ok", c.pencil_exact_ok},
          {"z_samples", c.z_samples},
          {"failure_bound", c.failure_bound},
          {"trials_run", c.trials_run},
          {"prime", c.prime}};
}

Json ToJson(const SelectionResult& r) {
  Json trace = Json::array();
  for (const auto& step : r.trace)
    trace.push_back({{"note", step.note}, {"set", step.set}, {"value", step.value}});
  Json out = {{"algorithm", r.algorithm},
              {"S", r.states},
              {"ground", r.ground},
              {"size", r.ground.size()},
              {"objective", r.objective},
              {"seed", r.seed},
              {"queries", r.queries}};
  if (!r.decomposition.empty()) {
    Json d = Json::object();
    for (const auto& [k, v] : r.decomposition) d[k] = v;
    out["decomposition"] = d;
  }
  out["certificate"] = r.certificate ? ToJson(*r.certificate) : Json(nullptr);
  out["trace"] = trace;
  return out;
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return Json::parse(in);
}

void WriteJsonFile(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace inputsel
