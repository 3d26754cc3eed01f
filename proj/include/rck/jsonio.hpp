#pragma once

#include <json.hpp>

#include "rck/bijection.hpp"
#include "rck/rigged.hpp"
#include "rck/spinchain.hpp"

namespace rck {

using Json = nlohmann::ordered_json;

inline Json to_json(const Partition& p) {
  Json j = Json::array();
  for (int x : p.parts()) j.push_back(x);
  return j;
}

inline Partition partition_from_json(const Json& j) {
  std::vector<int> parts;
  for (auto& x : j) parts.push_back(x.get<int>());
  return Partition(std::move(parts));
}

inline Json to_json(const RiggedConfiguration& rc) {
  Json j;
  j["algebra"] = algebra_name(rc.algebra());
  j["n"] = rc.rank();
  Json mu = Json::array(), nu = Json::array(), rig = Json::array();
  for (int i = 0; i < rc.rank(); ++i) mu.push_back(to_json(rc.mu(i)));
  for (int a = 1; a <= rc.rank(); ++a) {
    Json lens = Json::array(), rigs = Json::array();
    for (auto& s : rc.strings(a)) {
      lens.push_back(s.length);
      rigs.push_back(s.rigging);
    }
    nu.push_back(lens);
    rig.push_back(rigs);
  }
  j["mu"] = mu;
  j["nu"] = nu;
  j["J"] = rig;
  return j;
}

inline RiggedConfiguration rc_from_json(const Json& j) {
  Algebra g = algebra_from_name(j.at("algebra").get<std::string>());
  int n = j.at("n").get<int>();
  std::vector<Partition> mu;
  for (auto& m : j.at("mu")) mu.push_back(partition_from_json(m));
  RiggedConfiguration rc(g, n, mu);
  for (int a = 1; a <= n; ++a) {
    auto& lens = j.at("nu").at(a - 1);
    auto& rigs = j.at("J").at(a - 1);
    if (lens.size() != rigs.size())
      throw std::invalid_argument("rc json: nu/J size mismatch");
    for (std::size_t i = 0; i < lens.size(); ++i)
      rc.strings_mut(a).push_back({lens[i].get<int>(), rigs[i].get<int>()});
  }
  rc.canonicalize();
  return rc;
}

inline Json to_json(const Tableau& t) {
  Json j;
  Json rows = Json::array();
  for (auto& r : t.rows()) {
    Json row = Json::array();
    for (Letter x : r) row.push_back(x);
    rows.push_back(row);
  }
  j["rows"] = rows;
  if (!t.inner().empty()) j["inner"] = to_json(t.inner());
  return j;
}

inline Tableau tableau_from_json(const Json& j) {
  std::vector<std::vector<Letter>> rows;
  for (auto& r : j.at("rows")) {
    std::vector<Letter> row;
    for (auto& x : r) row.push_back(x.get<int>());
    rows.push_back(row);
  }
  Partition inner;
  if (j.contains("inner")) inner = partition_from_json(j.at("inner"));
  return Tableau(std::move(rows), inner);
}

inline Json to_json(const CrystalPath& p) {
  Json j;
  j["algebra"] = algebra_name(p.algebra);
  j["n"] = p.n;
  Json f = Json::array();
  for (auto& t : p.factors) f.push_back(to_json(t));
  j["factors"] = f;
  return j;
}

inline CrystalPath path_from_json(const Json& j) {
  CrystalPath p;
  p.algebra = algebra_from_name(j.at("algebra").get<std::string>());
  p.n = j.at("n").get<int>();
  for (auto& f : j.at("factors")) p.factors.push_back(tableau_from_json(f));
  return p;
}

inline Json to_json(const spinchain::BetheSolution& s) {
  Json j;
  Json roots = Json::array();
  for (auto& z : s.roots) roots.push_back(Json::array({z.real(), z.imag()}));
  j["roots"] = roots;
  j["N"] = s.N;
  j["ell"] = s.ell;
  j["regular"] = s.regular;
  j["singular"] = s.singular;
  j["physical_singular"] = s.physical_singular;
  j["non_distinct"] = s.non_distinct;
  j["residual"] = s.residual;
  return j;
}

inline Json to_json(const bijection::Trace& trace) {
  Json list = Json::array();
  for (auto& step : trace) {
    Json j;
    j["height"] = step.height;
    j["width"] = step.width;
    j["letter"] = step.letter;
    Json boxes = Json::array();
    for (auto& b : step.boxes)
      boxes.push_back(Json::array({b[0], b[1], b[2]}));
    j["boxes"] = boxes;
    list.push_back(j);
  }
  return list;
}

}  // namespace rck
