#include "fbca/io.hpp"

#include <fstream>

namespace fbca {

using nlohmann::json;

Rat rat_from_string(const std::string &s) {
  try {
    return Rat(s);
  } catch (const std::exception &) {
    throw ParseError("bad rational: " + s);
  }
}

json load_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in, nullptr, true, true); // allow comments
  } catch (const json::exception &e) {
    throw ParseError(path + ": " + e.what());
  }
}

static Quiver quiver_from_json(const json &j) {
  Quiver q;
  try {
    for (const auto &v : j.at("vertices")) q.vertices.push_back(v.get<std::string>());
    for (const auto &a : j.at("arrows")) {
      Arrow ar;
      ar.name = a.at("name").get<std::string>();
      ar.label = a.value("label", ar.name);
      ar.source = q.vertex_index(a.at("source").get<std::string>());
      ar.target = q.vertex_index(a.at("target").get<std::string>());
      if (ar.source < 0 || ar.target < 0)
        throw ParseError("arrow " + ar.name + " has an unknown endpoint");
      q.arrows.push_back(std::move(ar));
    }
    validate_quiver(q);
  } catch (const json::exception &e) {
    throw ParseError(std::string("bad quiver: ") + e.what());
  } catch (const std::invalid_argument &e) {
    throw ParseError(std::string("bad quiver: ") + e.what());
  }
  return q;
}

AlgebraInput algebra_from_json(const json &j) {
  AlgebraInput in;
  in.quiver = quiver_from_json(j);
  try {
    for (const auto &rel : j.value("relations", json::array())) {
      std::vector<std::string> names;
      for (const auto &n : rel) names.push_back(n.get<std::string>());
      in.generators.push_back(path_from_names(in.quiver, names));
    }
  } catch (const json::exception &e) {
    throw ParseError(std::string("bad relations: ") + e.what());
  } catch (const std::invalid_argument &e) {
    throw ParseError(std::string("bad relations: ") + e.what());
  }
  return in;
}

static json quiver_json(const Quiver &q) {
  json j;
  j["vertices"] = q.vertices;
  j["arrows"] = json::array();
  for (const Arrow &a : q.arrows) {
    json ja{{"name", a.name}, {"source", q.vertices[a.source]}, {"target", q.vertices[a.target]}};
    if (!a.label.empty() && a.label != a.name) ja["label"] = a.label;
    j["arrows"].push_back(std::move(ja));
  }
  return j;
}

json algebra_to_json(const Quiver &q, const std::vector<Path> &generators) {
  json j = quiver_json(q);
  j["relations"] = json::array();
  for (const Path &g : generators) {
    json w = json::array();
    for (int a : g.word) w.push_back(q.arrows[a].name);
    j["relations"].push_back(std::move(w));
  }
  return j;
}

Fbc fbc_from_json(const json &j) {
  try {
    std::vector<std::string> angles;
    for (const auto &a : j.at("angles")) angles.push_back(a.get<std::string>());
    std::map<std::string, std::string> g;
    for (const auto &[k, v] : j.at("g").items()) g[k] = v.get<std::string>();
    auto blocks = [](const json &arr) {
      std::vector<std::vector<std::string>> out;
      for (const auto &b : arr) {
        std::vector<std::string> blk;
        for (const auto &a : b) blk.push_back(a.get<std::string>());
        out.push_back(std::move(blk));
      }
      return out;
    };
    std::map<std::string, long> d;
    const json &jd = j.at("d");
    if (!(jd.is_string() && jd.get<std::string>() == "trivial"))
      for (const auto &[k, v] : jd.items()) d[k] = v.get<long>();
    Fbc E = make_fbc(std::move(angles), g, blocks(j.at("P")), blocks(j.at("L")), d);
    if (j.contains("p_labels"))
      for (const auto &s : j.at("p_labels")) E.p_labels.push_back(s.get<std::string>());
    if (j.contains("l_labels"))
      for (const auto &s : j.at("l_labels")) E.l_labels.push_back(s.get<std::string>());
    return E;
  } catch (const json::exception &e) {
    throw ParseError(std::string("bad FBC: ") + e.what());
  }
}

json fbc_to_json(const Fbc &E) {
  json j;
  j["angles"] = E.angles;
  json g = json::object();
  for (int e = 0; e < E.n_angles(); ++e) g[E.angles[e]] = E.angles[E.g[e]];
  j["g"] = std::move(g);
  auto blocks = [&](const std::vector<std::vector<int>> &bs) {
    json arr = json::array();
    for (const auto &b : bs) {
      json blk = json::array();
      for (int e : b) blk.push_back(E.angles[e]);
      arr.push_back(std::move(blk));
    }
    return arr;
  };
  j["P"] = blocks(E.p_blocks);
  j["L"] = blocks(E.l_blocks);
  if (has_trivial_degree(E)) {
    j["d"] = "trivial";
  } else {
    json d = json::object();
    for (int e = 0; e < E.n_angles(); ++e) d[E.angles[e]] = E.degree[e];
    j["d"] = std::move(d);
  }
  if (!E.p_labels.empty()) j["p_labels"] = E.p_labels;
  if (!E.l_labels.empty()) j["l_labels"] = E.l_labels;
  return j;
}

Presentation presentation_from_json(const json &j) {
  Presentation P;
  P.quiver = quiver_from_json(j);
  try {
    for (const auto &jr : j.value("relations", json::array())) {
      Relation r;
      std::string kind = jr.value("kind", "external");
      for (RelKind k : {RelKind::type1, RelKind::type2, RelKind::type3, RelKind::r1prime,
                        RelKind::r2prime, RelKind::external})
        if (rel_kind_name(k) == kind) r.kind = k;
      for (const auto &jt : jr.at("terms")) {
        Rat c = rat_from_string(jt.at("coeff").get<std::string>());
        std::vector<std::string> names;
        for (const auto &n : jt.at("path")) names.push_back(n.get<std::string>());
        r.terms.emplace_back(c, path_from_names(P.quiver, names));
      }
      P.relations.push_back(std::move(r));
    }
  } catch (const json::exception &e) {
    throw ParseError(std::string("bad presentation: ") + e.what());
  } catch (const std::invalid_argument &e) {
    throw ParseError(std::string("bad presentation: ") + e.what());
  }
  return P;
}

json presentation_to_json(const Presentation &P) {
  json j = quiver_json(P.quiver);
  j["relations"] = json::array();
  for (const Relation &r : P.relations) {
    json jr{{"kind", rel_kind_name(r.kind)}, {"terms", json::array()}};
    for (const auto &[c, p] : r.terms) {
      json w = json::array();
      for (int a : p.word) w.push_back(P.quiver.arrows[a].name);
      jr["terms"].push_back(json{{"coeff", rat_to_string(c)}, {"path", std::move(w)}});
    }
    j["relations"].push_back(std::move(jr));
  }
  return j;
}

static std::string dot_escape(const std::string &s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string quiver_to_dot(const Quiver &q, const std::string &name) {
  std::string out = "digraph \"" + dot_escape(name) + "\" {\n";
  for (size_t v = 0; v < q.vertices.size(); ++v)
    out += "  n" + std::to_string(v) + " [label=\"" + dot_escape(q.vertices[v]) + "\"];\n";
  for (const Arrow &a : q.arrows)
    out += "  n" + std::to_string(a.source) + " -> n" + std::to_string(a.target) +
           " [label=\"" + dot_escape(a.label.empty() ? a.name : a.label) + "\"];\n";
  out += "}\n";
  return out;
}

} // namespace fbca
