#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "gzbt/count.hpp"
#include "gzbt/error.hpp"
#include "json.hpp"

namespace gzbt {

/// A vertex of a quotient graph. Ray vertices carry their level; lifts of
/// v_* carry the k*-coset they represent.
struct QuotientVertex {
  std::string id;
  long level = 0;
  std::string stabilizer;
  std::string coset_witness;

  bool operator==(const QuotientVertex&) const = default;
};

struct QuotientEdge {
  std::string from;
  std::string to;
  Count multiplicity = 1;
  std::vector<std::string> witnesses;
  std::string stabilizer;

  bool operator==(const QuotientEdge&) const = default;
};

/// The ray v_0 .. v_N (continuing past v_N), the lifts of v_* and the edges
/// between them.
struct QuotientGraph {
  std::vector<QuotientVertex> ray;
  std::vector<QuotientVertex> vstar_lifts;
  std::vector<QuotientEdge> edges;
  long truncated_at = 0;

  bool operator==(const QuotientGraph&) const = default;
};

inline std::string ray_id(long n) { return "v" + std::to_string(n); }
inline std::string vstar_id(std::size_t i) { return "vstar_" + std::to_string(i); }

inline bool is_vstar_id(const std::string& id) { return id.rfind("vstar_", 0) == 0; }

/// Rank of the fundamental group: edges above e_* minus the number of lifts.
/// The ray is a tree hanging off v_0 and contributes nothing.
inline Count free_rank(const QuotientGraph& g) {
  Count e = 0;
  for (const auto& ed : g.edges)
    if (is_vstar_id(ed.from) || is_vstar_id(ed.to)) e = e + ed.multiplicity;
  if (e.is_omega()) return e;
  const auto v = static_cast<std::uint64_t>(g.vstar_lifts.size());
  if (e.value() < v) raise(ErrorCode::VerificationIncomplete, "fewer edges than lifts of v_*: graph is disconnected");
  return Count(e.value() - v);
}

/// Structural checks: the ray is the path v0 .. vN and every lift is joined
/// to v0 only.
inline std::vector<std::string> graph_violations(const QuotientGraph& g) {
  std::vector<std::string> out;
  if (g.ray.size() != static_cast<std::size_t>(g.truncated_at) + 1) out.push_back("ray length differs from depth + 1");
  for (std::size_t i = 0; i < g.ray.size(); ++i)
    if (g.ray[i].id != ray_id(static_cast<long>(i)) || g.ray[i].level != static_cast<long>(i))
      out.push_back("ray vertex " + std::to_string(i) + " is mislabelled");
  for (std::size_t i = 0; i < g.vstar_lifts.size(); ++i)
    if (g.vstar_lifts[i].id != vstar_id(i)) out.push_back("lift " + std::to_string(i) + " is mislabelled");
  std::vector<int> ray_edges(g.ray.size(), 0);
  std::vector<int> lift_edges(g.vstar_lifts.size(), 0);
  for (const auto& e : g.edges) {
    if (is_vstar_id(e.from)) {
      auto i = std::stoul(e.from.substr(6));
      if (i >= lift_edges.size() || e.to != ray_id(0)) out.push_back("lift edge " + e.from + " - " + e.to);
      else ++lift_edges[i];
      continue;
    }
    bool path = false;
    for (std::size_t n = 0; n + 1 < g.ray.size(); ++n)
      if (e.from == ray_id(static_cast<long>(n)) && e.to == ray_id(static_cast<long>(n + 1))) {
        ++ray_edges[n];
        path = e.multiplicity == Count(1);
      }
    if (!path) out.push_back("edge " + e.from + " - " + e.to + " is not a ray edge of multiplicity 1");
  }
  for (std::size_t n = 0; n + 1 < g.ray.size(); ++n)
    if (ray_edges[n] != 1) out.push_back("ray edge at level " + std::to_string(n) + " missing or repeated");
  for (std::size_t i = 0; i < lift_edges.size(); ++i)
    if (lift_edges[i] != 1) out.push_back("lift " + vstar_id(i) + " needs exactly one edge entry");
  return out;
}

namespace detail {

inline nlohmann::ordered_json count_json(Count c) {
  if (c.is_omega()) return "omega";
  return c.value();
}

inline Count count_from_json(const nlohmann::ordered_json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "omega") raise(ErrorCode::Parse, "count must be an integer or \"omega\"");
    return Count::omega();
  }
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    raise(ErrorCode::Parse, "count must be a non-negative integer or \"omega\"");
  return Count(j.get<std::uint64_t>());
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const QuotientGraph& g) {
  using J = nlohmann::ordered_json;
  J out = J::object();
  out["ray"] = J::array();
  for (const auto& v : g.ray) out["ray"].push_back({{"id", v.id}, {"level", v.level}, {"stabilizer", v.stabilizer}});
  out["vstar_lifts"] = J::array();
  for (const auto& v : g.vstar_lifts)
    out["vstar_lifts"].push_back({{"id", v.id}, {"coset_witness", v.coset_witness}, {"stabilizer", v.stabilizer}});
  out["edges"] = J::array();
  for (const auto& e : g.edges) {
    J je = J::object();
    je["from"] = e.from;
    je["to"] = e.to;
    je["multiplicity"] = detail::count_json(e.multiplicity);
    je["witnesses"] = e.witnesses;
    je["stabilizer"] = e.stabilizer;
    out["edges"].push_back(std::move(je));
  }
  out["free_rank"] = detail::count_json(free_rank(g));
  out["truncated_at"] = g.truncated_at;
  return out;
}

inline std::string export_json(const QuotientGraph& g) { return to_json(g).dump(2) + "\n"; }

/// Inverse of export_json. The stored free rank must match the edges.
inline QuotientGraph graph_from_json(std::string_view text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
    QuotientGraph g;
    for (const auto& v : j.at("ray"))
      g.ray.push_back({v.at("id").get<std::string>(), v.at("level").get<long>(), v.at("stabilizer").get<std::string>(), ""});
    for (const auto& v : j.at("vstar_lifts"))
      g.vstar_lifts.push_back(
          {v.at("id").get<std::string>(), 0, v.at("stabilizer").get<std::string>(), v.at("coset_witness").get<std::string>()});
    for (const auto& e : j.at("edges"))
      g.edges.push_back({e.at("from").get<std::string>(), e.at("to").get<std::string>(),
                         detail::count_from_json(e.at("multiplicity")),
                         e.at("witnesses").get<std::vector<std::string>>(), e.at("stabilizer").get<std::string>()});
    g.truncated_at = j.at("truncated_at").get<long>();
    if (!(detail::count_from_json(j.at("free_rank")) == free_rank(g)))
      raise(ErrorCode::Parse, "free_rank disagrees with the edges");
    return g;
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::Parse, std::string("graph JSON: ") + e.what());
  }
}

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

/// DOT rendering: edges labelled by multiplicity, omega edges dashed, and a
/// dotted continuation past v_N.
inline std::string export_dot(const QuotientGraph& g) {
  using detail::dot_quote;
  std::ostringstream o;
  o << "graph quotient {\n  rankdir=RL;\n";
  for (const auto& v : g.vstar_lifts)
    o << "  " << v.id << " [label=" << dot_quote(v.id + " (" + v.coset_witness + ")") << "];\n";
  for (const auto& v : g.ray) o << "  " << v.id << " [label=" << dot_quote(v.id) << "];\n";
  for (const auto& e : g.edges) {
    o << "  " << e.from << " -- " << e.to << " [label=" << dot_quote(e.multiplicity.to_string());
    if (e.multiplicity.is_omega()) o << ", style=dashed";
    o << "];\n";
  }
  if (!g.ray.empty()) {
    o << "  more [shape=plaintext, label=\"...\"];\n";
    o << "  " << g.ray.back().id << " -- more [style=dotted];\n";
  }
  o << "}\n";
  return o.str();
}

}  // namespace gzbt
