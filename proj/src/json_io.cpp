#include "toricgraph/json_io.hpp"

namespace toric {

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges) edges.push_back({u, v});
  return json{{"n", g.n}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw error(errc::malformed_line, "graph JSON needs {\"n\":..., \"edges\":[...]}");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw error(errc::malformed_line, "each edge must be a pair [u,v]");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return make_graph(j.at("n").get<int>(), edges);
}

namespace {

json side_to_json(const std::vector<Exp>& v) {
  json out = json::array();
  for (size_t e = 0; e < v.size(); ++e)
    if (v[e] != 0) out.push_back({e, v[e]});
  return out;
}

std::vector<Exp> side_from_json(const Graph& g, const json& j, const char* name) {
  std::vector<Exp> v(g.m(), 0);
  if (!j.is_array()) throw error(errc::malformed_line, std::string(name) + " must be an array");
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2)
      throw error(errc::malformed_line, std::string(name) + " entries must be [edgeIndex, exp]");
    long long e = item[0].get<long long>();
    long long x = item[1].get<long long>();
    if (e < 0 || e >= g.m())
      throw error(errc::bad_edge_index, "unknown edge index " + std::to_string(e));
    if (x < 0) throw error(errc::negative_exponent, "negative exponent");
    if (v[e] != 0) throw error(errc::malformed_line, "repeated edge index " + std::to_string(e));
    v[e] = x;
  }
  return v;
}

}  // namespace

json binomial_to_json(const Binomial& b) {
  return json{{"plus", side_to_json(b.plus)}, {"minus", side_to_json(b.minus)}};
}

Binomial binomial_from_json(const Graph& g, const json& j) {
  if (!j.is_object() || !j.contains("plus") || !j.contains("minus"))
    throw error(errc::malformed_line, "binomial JSON needs {\"plus\":[...], \"minus\":[...]}");
  return make_binomial(g, side_from_json(g, j.at("plus"), "plus"),
                       side_from_json(g, j.at("minus"), "minus"));
}

json classification_to_json(const Graph& g, const Binomial& b) {
  WalkAnalysis a = analyze_walk(g, b);
  bool mixed = a.primitive && is_mixed(a);
  return json{{"circuit", to_string(classify_circuit(g, b))},
              {"primitive", a.primitive},
              {"mixed", mixed},
              {"ugb", a.primitive && mixed},
              {"degree", b.degree()}};
}

json block_decomposition_to_json(const BlockDecomposition& d) {
  json tree = json::object();
  for (const auto& [v, bs] : d.block_tree) tree[std::to_string(v)] = bs;
  return json{{"blocks", d.blocks},
              {"cut_vertices", d.cut_vertices},
              {"cut_edges", d.cut_edges},
              {"block_tree", tree}};
}

json tagged_to_json(const TaggedBinomial& t) {
  json j = binomial_to_json(t.b);
  j["degree"] = t.degree;
  j["circuit"] = to_string(t.kind);
  j["primitive"] = t.primitive;
  j["mixed"] = t.mixed;
  j["ugb"] = t.ugb;
  if (t.true_degree) j["true_degree"] = t.true_degree->get_str();
  return j;
}

json report_to_json(const BasisReport& r) {
  json elems = json::array();
  for (const auto& t : r.elements) elems.push_back(tagged_to_json(t));
  json j{{"provenance", r.provenance},
         {"count", r.elements.size()},
         {"elements", elems}};
  j["max_degree"] = r.elements.empty() ? 0 : r.max_degree();
  return j;
}

json intmat_to_json(const IntMat& A) {
  json rows = json::array();
  for (int i = 0; i < A.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < A.cols; ++j) row.push_back(A.at(i, j).get_str());
    rows.push_back(row);
  }
  return rows;
}

}  // namespace toric
