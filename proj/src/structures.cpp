/* SPDX-License-Identifier: Apache-2.0 */

#include "exlog/structures.hpp"

#include <algorithm>

#include <json.hpp>

#include "exlog/errors.hpp"

namespace exlog {

using nlohmann::json;

const World* WorldSet::find(const std::string& id) const {
  for (const auto& w : worlds)
    if (w.id == id) return &w;
  return nullptr;
}

std::vector<std::string> WorldSet::ids() const {
  std::vector<std::string> out;
  out.reserve(worlds.size());
  for (const auto& w : worlds) out.push_back(w.id);
  return out;
}

StructKind kind_of(const Structure& s) {
  return static_cast<StructKind>(s.index());
}

const WorldSet& worlds_of(const Structure& s) {
  return std::visit([](const auto& x) -> const WorldSet& { return x.worlds; }, s);
}

std::string kind_name(StructKind k) {
  switch (k) {
    case StructKind::plain: return "plain";
    case StructKind::prob: return "prob";
    case StructKind::credal: return "credal";
    case StructKind::belief: return "belief";
    case StructKind::poss: return "poss";
  }
  return "?";
}

namespace {

Rat json_rat(const json& v, const std::string& where) {
  if (!v.is_string())
    throw SchemaError("expected a rational string at " + where);
  try {
    return parse_rational(v.get<std::string>());
  } catch (const Error& e) {
    throw SchemaError(std::string(e.what()) + " at " + where);
  }
}

WorldSet parse_worlds(const json& doc) {
  if (!doc.contains("worlds") || !doc["worlds"].is_array())
    throw SchemaError("missing or malformed 'worlds' array");
  WorldSet ws;
  for (const auto& jw : doc["worlds"]) {
    if (!jw.is_object() || !jw.contains("id") || !jw["id"].is_string())
      throw SchemaError("world entries need an 'id' string");
    World w;
    w.id = jw["id"].get<std::string>();
    if (jw.contains("props")) {
      if (!jw["props"].is_array()) throw SchemaError("'props' must be an array of names");
      for (const auto& p : jw["props"]) {
        if (!p.is_string()) throw SchemaError("'props' must be an array of names");
        w.props.insert(p.get<std::string>());
      }
    }
    ws.worlds.push_back(std::move(w));
  }
  std::set<std::string> seen;
  for (const auto& w : ws.worlds)
    if (!seen.insert(w.id).second) throw SchemaError("duplicate world id '" + w.id + "'");
  return ws;
}

std::map<std::string, Rat> parse_measure(const json& jm, const WorldSet& ws,
                                         const std::string& where) {
  if (!jm.is_object()) throw SchemaError("expected an object of world weights at " + where);
  std::map<std::string, Rat> mu;
  for (auto it = jm.begin(); it != jm.end(); ++it) {
    if (!ws.find(it.key())) throw SchemaError("unknown world id '" + it.key() + "' in " + where);
    mu[it.key()] = json_rat(it.value(), where + "[" + it.key() + "]");
  }
  for (const auto& w : ws.worlds)
    if (!mu.count(w.id)) throw SchemaError("world '" + w.id + "' has no weight in " + where);
  return mu;
}

void check_probability(const std::map<std::string, Rat>& mu, const std::string& where,
                       std::vector<std::string>& out) {
  Rat total(0);
  for (const auto& [id, v] : mu) {
    if (v < 0) out.push_back(where + ": negative weight on '" + id + "'");
    total += v;
  }
  if (total != 1) out.push_back(where + ": mass not 1 (got " + rat_string(total) + ")");
}

}  // namespace

Structure load_structure(const std::string& document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
    throw SchemaError("document needs a 'kind' string");
  const std::string kind = doc["kind"].get<std::string>();
  WorldSet ws = parse_worlds(doc);
  if (ws.worlds.empty()) throw SchemaError("'worlds' must be nonempty");

  Structure s;
  if (kind == "plain") {
    s = PlainStructure{std::move(ws)};
  } else if (kind == "prob") {
    if (!doc.contains("mu")) throw SchemaError("prob document needs 'mu'");
    auto mu = parse_measure(doc["mu"], ws, "mu");
    s = ProbabilityStructure{std::move(ws), std::move(mu)};
  } else if (kind == "credal") {
    if (!doc.contains("measures") || !doc["measures"].is_array() || doc["measures"].empty())
      throw SchemaError("credal document needs a nonempty 'measures' array");
    CredalStructure c;
    for (std::size_t i = 0; i < doc["measures"].size(); ++i)
      c.measures.push_back(parse_measure(doc["measures"][i], ws, "measures[" + std::to_string(i) + "]"));
    c.worlds = std::move(ws);
    s = std::move(c);
  } else if (kind == "belief") {
    if (!doc.contains("mass") || !doc["mass"].is_array())
      throw SchemaError("belief document needs a 'mass' array");
    BeliefStructure b;
    std::set<std::vector<std::string>> seen;
    for (std::size_t i = 0; i < doc["mass"].size(); ++i) {
      const auto& e = doc["mass"][i];
      const std::string where = "mass[" + std::to_string(i) + "]";
      if (!e.is_object() || !e.contains("set") || !e["set"].is_array() || !e.contains("m"))
        throw SchemaError(where + " needs 'set' and 'm'");
      FocalMass fm;
      for (const auto& id : e["set"]) {
        if (!id.is_string() || !ws.find(id.get<std::string>()))
          throw SchemaError("unknown world id in " + where);
        fm.set.push_back(id.get<std::string>());
      }
      std::sort(fm.set.begin(), fm.set.end());
      fm.set.erase(std::unique(fm.set.begin(), fm.set.end()), fm.set.end());
      if (fm.set.empty()) throw SchemaError(where + ": focal element empty");
      if (!seen.insert(fm.set).second) throw SchemaError(where + ": duplicate focal set");
      fm.m = json_rat(e["m"], where);
      b.mass.push_back(std::move(fm));
    }
    b.worlds = std::move(ws);
    s = std::move(b);
  } else if (kind == "poss") {
    if (!doc.contains("poss")) throw SchemaError("poss document needs 'poss'");
    auto p = parse_measure(doc["poss"], ws, "poss");
    s = PossibilityStructure{std::move(ws), std::move(p)};
  } else {
    throw SchemaError("unknown structure kind '" + kind + "'");
  }

  auto violations = validate(s);
  if (!violations.empty()) {
    std::string msg = "structure fails validation:";
    for (const auto& v : violations) msg += "\n  - " + v;
    throw ValidationError(msg);
  }
  return s;
}

std::string save_structure(const Structure& s) {
  json doc;
  doc["kind"] = kind_name(kind_of(s));
  json jw = json::array();
  for (const auto& w : worlds_of(s).worlds) {
    json e;
    e["id"] = w.id;
    e["props"] = json::array();
    for (const auto& p : w.props) e["props"].push_back(p);
    jw.push_back(std::move(e));
  }
  doc["worlds"] = std::move(jw);

  auto dump_measure = [](const std::map<std::string, Rat>& mu) {
    json m = json::object();
    for (const auto& [id, v] : mu) m[id] = rat_string(v);
    return m;
  };

  if (const auto* p = std::get_if<ProbabilityStructure>(&s)) {
    doc["mu"] = dump_measure(p->mu);
  } else if (const auto* c = std::get_if<CredalStructure>(&s)) {
    doc["measures"] = json::array();
    for (const auto& m : c->measures) doc["measures"].push_back(dump_measure(m));
  } else if (const auto* b = std::get_if<BeliefStructure>(&s)) {
    doc["mass"] = json::array();
    for (const auto& fm : b->mass) {
      json e;
      e["set"] = fm.set;
      e["m"] = rat_string(fm.m);
      doc["mass"].push_back(std::move(e));
    }
  } else if (const auto* q = std::get_if<PossibilityStructure>(&s)) {
    doc["poss"] = dump_measure(q->poss);
  }
  return doc.dump(2);
}

std::vector<std::string> validate(const Structure& s) {
  std::vector<std::string> out;
  const WorldSet& ws = worlds_of(s);
  if (ws.worlds.empty()) out.push_back("world set is empty");

  if (const auto* p = std::get_if<ProbabilityStructure>(&s)) {
    check_probability(p->mu, "mu", out);
  } else if (const auto* c = std::get_if<CredalStructure>(&s)) {
    if (c->measures.empty()) out.push_back("credal set is empty");
    for (std::size_t i = 0; i < c->measures.size(); ++i)
      check_probability(c->measures[i], "measures[" + std::to_string(i) + "]", out);
  } else if (const auto* b = std::get_if<BeliefStructure>(&s)) {
    Rat total(0);
    for (const auto& fm : b->mass) {
      if (fm.set.empty()) out.push_back("focal element empty");
      if (fm.m < 0) out.push_back("negative mass on a focal element");
      total += fm.m;
    }
    if (total != 1) out.push_back("mass not 1 (got " + rat_string(total) + ")");
  } else if (const auto* q = std::get_if<PossibilityStructure>(&s)) {
    Rat best(0);
    for (const auto& [id, v] : q->poss) {
      if (v < 0) out.push_back("negative possibility on '" + id + "'");
      if (v > 1) out.push_back("possibility above 1 on '" + id + "'");
      if (v > best) best = v;
    }
    if (best != 1) out.push_back("Poss(W) != 1 (max possibility is " + rat_string(best) + ")");
  }
  return out;
}

namespace {

void check_event(const WorldSet& ws, const std::set<std::string>& event) {
  for (const auto& id : event)
    if (!ws.find(id)) throw KindError("unknown world id '" + id + "'");
}

}  // namespace

Rat belief_of(const BeliefStructure& s, const std::set<std::string>& event) {
  check_event(s.worlds, event);
  Rat total(0);
  for (const auto& fm : s.mass) {
    bool inside = true;
    for (const auto& id : fm.set)
      if (!event.count(id)) {
        inside = false;
        break;
      }
    if (inside) total += fm.m;
  }
  return total;
}

Rat plausibility_of(const BeliefStructure& s, const std::set<std::string>& event) {
  check_event(s.worlds, event);
  std::set<std::string> complement;
  for (const auto& w : s.worlds.worlds)
    if (!event.count(w.id)) complement.insert(w.id);
  return Rat(1) - belief_of(s, complement);
}

Rat event_weight(const Structure& s, const std::set<std::string>& event, WeightMode mode) {
  check_event(worlds_of(s), event);

  if (const auto* p = std::get_if<ProbabilityStructure>(&s)) {
    if (mode != WeightMode::point)
      throw KindError("probability structures support only the point mode");
    Rat total(0);
    for (const auto& id : event) total += p->mu.at(id);
    return total;
  }
  if (const auto* c = std::get_if<CredalStructure>(&s)) {
    if (mode == WeightMode::point)
      throw KindError("credal structures support only lower/upper modes");
    std::optional<Rat> best;
    for (const auto& m : c->measures) {
      Rat total(0);
      for (const auto& id : event) total += m.at(id);
      if (!best || (mode == WeightMode::lower ? total < *best : total > *best)) best = total;
    }
    return *best;
  }
  if (const auto* b = std::get_if<BeliefStructure>(&s)) {
    if (mode == WeightMode::upper) return plausibility_of(*b, event);
    return belief_of(*b, event);
  }
  if (const auto* q = std::get_if<PossibilityStructure>(&s)) {
    if (mode == WeightMode::lower)
      throw KindError("possibility structures support only point/upper modes");
    Rat best(0);
    for (const auto& id : event)
      if (q->poss.at(id) > best) best = q->poss.at(id);
    return best;
  }
  throw KindError("plain structures carry no event weights");
}

}  // namespace exlog
