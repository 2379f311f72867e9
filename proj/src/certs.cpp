#include "oddear/certs.hpp"

#include <algorithm>
#include <set>

#include "oddear/errors.hpp"
#include "oddear/linegraph.hpp"
#include "oddear/oracles.hpp"

namespace oddear {

namespace {

Json edge_ids(const Graph& g, std::span<const EdgeId> edges) {
  Json out = Json::array();
  for (auto e : edges) out.push_back(g.edge_id(e));
  return out;
}

Json element_ids(const BinaryMatroid& m, const ElementSet& x) {
  Json out = Json::array();
  for (auto i : x) out.push_back(m.element_id(i));
  return out;
}

Json ear_list(const Graph& g, const EarDecomposition& d) {
  Json out = Json::array();
  for (std::size_t i = 0; i < d.size(); ++i) out.push_back(edge_ids(g, d.ear_edges(i)));
  return out;
}

Json graph_object(const Graph& g) {
  Json vs = Json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) vs.push_back(g.vertex_id(v));
  Json es = Json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.endpoints(e);
    es.push_back({g.edge_id(e), g.vertex_id(a), g.vertex_id(b)});
  }
  Json out;
  out["name"] = g.name();
  out["vertices"] = std::move(vs);
  out["edges"] = std::move(es);
  return out;
}

const char* block_kind(BlockCert::Kind k) {
  switch (k) {
    case BlockCert::Kind::bridge: return "bridge";
    case BlockCert::Kind::bipartite: return "bipartite";
    case BlockCert::Kind::basis: return "basis";
  }
  return "";
}

const char* block_kind(MatroidBlockCert::Kind k) {
  switch (k) {
    case MatroidBlockCert::Kind::coloop: return "coloop";
    case MatroidBlockCert::Kind::bipartite: return "bipartite";
    case MatroidBlockCert::Kind::basis: return "basis";
  }
  return "";
}

Json header(const char* type, const std::string& name, const char* key = "graph") {
  Json out;
  out["type"] = type;
  out[key] = name;
  return out;
}

}  // namespace

Json oddc3_json(const Graph& g, const OddC3Cert& c, const Graph* line) {
  Json out = header("odd-c3-plus", line ? line->name() : g.name());
  if (line) out["root"] = graph_object(g);
  out["ends"] = {g.vertex_id(c.u), g.vertex_id(c.v)};
  Json ps = Json::array();
  for (const auto& p : c.paths) ps.push_back(edge_ids(g, p.edges));
  out["paths"] = std::move(ps);
  out["strict"] = c.strict;
  return out;
}

Json free_json(const Graph& g, const FreeCert& c) {
  Json out = header("free", g.name());
  Json bs = Json::array();
  for (const auto& b : c.blocks) {
    Json cs = Json::array();
    for (const auto& circ : b.circuits) cs.push_back(edge_ids(g, circ.edges));
    Json jb;
    jb["kind"] = block_kind(b.kind);
    jb["edges"] = edge_ids(g, b.edges);
    jb["circuits"] = std::move(cs);
    bs.push_back(std::move(jb));
  }
  out["blocks"] = std::move(bs);
  return out;
}

Json tok4_json(const Graph& g, const Tok4Cert& c) {
  Json out = header("tok4", g.name());
  Json br = Json::array();
  for (auto v : c.branch) br.push_back(g.vertex_id(v));
  out["branch"] = std::move(br);
  Json ps = Json::array();
  for (const auto& p : c.paths) ps.push_back(edge_ids(g, p.edges));
  out["paths"] = std::move(ps);
  return out;
}

Json ears_json(const Graph& g, const EarDecomposition& d) {
  Json out = header("ear-decomposition", g.name());
  out["odd_ears"] = odd_ear_count(d);
  out["ears"] = ear_list(g, d);
  return out;
}

Json beta_json(const Graph& g, const BetaResult& r) {
  Json out = header("beta", g.name());
  out["value"] = r.value;
  out["subgraph"] = edge_ids(g, r.subgraph);
  out["ears"] = r.witness ? ear_list(g, *r.witness) : Json::array();
  return out;
}

Json phibar_json(const Graph& g, const OddEarResult& r) {
  Json out = header("phibar", g.name());
  out["value"] = r.value;
  out["ears"] = ear_list(g, r.witness);
  return out;
}

Json no_tok4_json(const Graph& g, const Tok4Verdict& v, const OddEarResult& best) {
  Json out = header("no-tok4", g.name());
  out["reason"] = v.bipartite ? "bipartite" : "phibar-at-most-1";
  out["phibar"] = best.value;
  out["ears"] = ear_list(g, best.witness);
  return out;
}

Json h_perfect_json(const Graph& g, const Graph* root) {
  Json out = header("h-perfect", g.name());
  out["mode"] = root ? "line" : "source";
  if (root) out["root"] = graph_object(*root);
  return out;
}

Json matroid_oddc3_json(const BinaryMatroid& m, const MatroidOddC3Cert& c) {
  Json out = header("matroid-odd-c3-plus", m.name(), "matroid");
  out["c1"] = element_ids(m, c.c1);
  out["c2"] = element_ids(m, c.c2);
  return out;
}

Json matroid_free_json(const BinaryMatroid& m, const MatroidDecision& d) {
  Json out = header("matroid-free", m.name(), "matroid");
  Json bs = Json::array();
  for (const auto& b : d.blocks) {
    Json cs = Json::array();
    for (const auto& c : b.circuits) cs.push_back(element_ids(m, c));
    Json jb;
    jb["kind"] = block_kind(b.kind);
    jb["elements"] = element_ids(m, b.elements);
    jb["circuits"] = std::move(cs);
    bs.push_back(std::move(jb));
  }
  out["blocks"] = std::move(bs);
  return out;
}

Json matroid_bipartite_json(const BinaryMatroid& m, const MatroidBipartite& b) {
  Json out = header("matroid-bipartite", m.name(), "matroid");
  out["bipartite"] = b.bipartite;
  Json cs = Json::array();
  for (const auto& c : b.circuits) cs.push_back(element_ids(m, c));
  out["circuits"] = std::move(cs);
  return out;
}

namespace {

struct Reject {
  std::string reason;
};

[[noreturn]] void reject(std::string reason) { throw Reject{std::move(reason)}; }

void require(const Validation& v, const std::string& what) {
  if (!v) reject(what + ": " + v.reason);
}

EdgeId edge_at(const Graph& g, const Json& id) {
  auto e = g.find_edge(id.get<std::string>());
  if (!e) reject("unknown edge '" + id.get<std::string>() + "'");
  return *e;
}

VertexId vertex_at(const Graph& g, const Json& id) {
  auto v = g.find_vertex(id.get<std::string>());
  if (!v) reject("unknown vertex '" + id.get<std::string>() + "'");
  return *v;
}

std::vector<EdgeId> edges_at(const Graph& g, const Json& ids) {
  std::vector<EdgeId> out;
  for (const auto& id : ids) out.push_back(edge_at(g, id));
  return out;
}

// The listed edges walked in order from start.
Path walk(const Graph& g, VertexId start, const Json& ids) {
  Path p{{start}, {}};
  for (const auto& id : ids) {
    EdgeId e = edge_at(g, id);
    if (!g.incident_to(e, p.back())) reject("edge '" + g.edge_id(e) + "' does not continue the path");
    p.edges.push_back(e);
    p.vertices.push_back(g.opposite(e, p.back()));
  }
  if (!is_valid_path(g, p)) reject("not a path");
  return p;
}

Circuit circuit_at(const Graph& g, const Json& ids) {
  auto c = circuit_from_edges(g, edges_at(g, ids));
  if (!c) reject("not a circuit");
  return *c;
}

EarDecomposition ears_at(const Graph& g, const Json& ears) {
  EarDecomposition d;
  d.host = &g;
  if (ears.empty()) reject("no ears");
  d.circuit = circuit_at(g, ears.at(0));
  for (std::size_t i = 1; i < ears.size(); ++i) {
    auto p = path_from_edges(g, edges_at(g, ears[i]));
    if (!p) reject("ear " + std::to_string(i) + " is not a path");
    d.paths.push_back(*p);
  }
  return d;
}

Graph root_at(const Json& j) {
  std::vector<std::string> vs = j.at("vertices").get<std::vector<std::string>>();
  std::vector<EdgeSpec> es;
  for (const auto& e : j.at("edges")) es.push_back({e.at(0).get<std::string>(), e.at(1).get<std::string>(), e.at(2).get<std::string>()});
  try {
    return Graph(j.at("name").get<std::string>(), std::move(vs), std::move(es));
  } catch (const PreconditionError& e) {
    reject(std::string("bad root graph: ") + e.what());
  }
}

// g equals line_graph(root) under its naming.
void require_line_of(const Graph& g, const Graph& root) {
  Graph l = line_graph(root);
  if (l.vertex_count() != g.vertex_count() || l.edge_count() != g.edge_count()) reject("input is not the line graph of the root");
  auto pairs = [](const Graph& h) {
    std::set<std::pair<std::string, std::string>> out;
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
      auto a = h.vertex_id(h.endpoints(e).first);
      auto b = h.vertex_id(h.endpoints(e).second);
      out.insert(std::minmax(a, b));
    }
    return out;
  };
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!l.find_vertex(g.vertex_id(v))) reject("input is not the line graph of the root");
  }
  if (pairs(g) != pairs(l)) reject("input is not the line graph of the root");
}

void check_oddc3(const Graph& g, const Json& c) {
  std::optional<Graph> root;
  if (c.contains("root")) {
    root = root_at(c.at("root"));
    require_line_of(g, *root);
  }
  const Graph& h = root ? *root : g;
  OddC3Cert cert;
  cert.u = vertex_at(h, c.at("ends").at(0));
  cert.v = vertex_at(h, c.at("ends").at(1));
  const auto& ps = c.at("paths");
  if (ps.size() != 3) reject("need three paths");
  for (std::size_t i = 0; i < 3; ++i) cert.paths[i] = walk(h, cert.u, ps[i]);
  cert.strict = c.at("strict").get<bool>();
  require(verify_oddc3(h, cert), "odd-c3-plus");
}

void check_free(const Graph& g, const Json& c) {
  FreeCert cert;
  for (const auto& jb : c.at("blocks")) {
    BlockCert b;
    auto kind = jb.at("kind").get<std::string>();
    if (kind == "bridge") b.kind = BlockCert::Kind::bridge;
    else if (kind == "bipartite") b.kind = BlockCert::Kind::bipartite;
    else if (kind == "basis") b.kind = BlockCert::Kind::basis;
    else reject("unknown block kind '" + kind + "'");
    b.edges = edges_at(g, jb.at("edges"));
    for (const auto& jc : jb.at("circuits")) b.circuits.push_back(circuit_at(g, jc));
    cert.blocks.push_back(std::move(b));
  }
  require(verify_free(g, cert), "free");
}

void check_tok4(const Graph& g, const Json& c) {
  Tok4Cert cert;
  const auto& br = c.at("branch");
  const auto& ps = c.at("paths");
  if (br.size() != 4 || ps.size() != 6) reject("need four branch vertices and six paths");
  for (std::size_t i = 0; i < 4; ++i) cert.branch[i] = vertex_at(g, br[i]);
  for (std::size_t k = 0; k < 6; ++k) cert.paths[k] = walk(g, cert.branch[kTok4Pairs[k].first], ps[k]);
  require(verify_tok4(g, cert), "tok4");
}

void check_ears(const Graph& g, const Json& c) {
  auto d = ears_at(g, c.at("ears"));
  require(validate(d), "ear-decomposition");
  if (odd_ear_count(d) != c.at("odd_ears").get<std::size_t>()) reject("odd ear count mismatch");
}

void check_beta(const Graph& g, const Json& c, const VerifyOptions& opt) {
  auto value = c.at("value").get<std::size_t>();
  auto sub = edges_at(g, c.at("subgraph"));
  std::sort(sub.begin(), sub.end());
  if (value == 0) {
    if (!sub.empty() || !c.at("ears").empty()) reject("value 0 carries no witness");
  } else {
    auto d = ears_at(g, c.at("ears"));
    require(validate_partial(d), "beta witness");
    if (d.size() != value || odd_ear_count(d) != value) reject("witness needs exactly value ears, all odd");
    auto cov = d.covered_edges();
    std::sort(cov.begin(), cov.end());
    if (cov != sub) reject("witness does not cover the subgraph");
  }
  if (g.edge_count() <= opt.beta_max_edges && beta_brute(g, opt.beta_max_edges).value != value) reject("value is not the maximum");
}

std::size_t recheck_phibar(const Graph& g, const VerifyOptions& opt) {
  if (g.edge_count() > opt.phibar_max_edges) reject("optimality cannot be rechecked beyond " + std::to_string(opt.phibar_max_edges) + " edges");
  return max_odd_ears(g, opt.phibar_max_edges).value;
}

void check_phibar(const Graph& g, const Json& c, const VerifyOptions& opt) {
  auto value = c.at("value").get<std::size_t>();
  auto d = ears_at(g, c.at("ears"));
  require(validate(d), "phibar witness");
  if (odd_ear_count(d) != value) reject("witness odd ear count mismatch");
  if (recheck_phibar(g, opt) != value) reject("value is not the maximum");
}

void check_no_tok4(const Graph& g, const Json& c, const VerifyOptions& opt) {
  if (!g.is_simple() || !is_two_connected(g)) reject("input must be simple and 2-connected");
  auto reason = c.at("reason").get<std::string>();
  auto phibar = c.at("phibar").get<std::size_t>();
  auto d = ears_at(g, c.at("ears"));
  require(validate(d), "no-tok4 witness");
  if (odd_ear_count(d) != phibar) reject("witness odd ear count mismatch");
  if (reason == "bipartite") {
    if (!is_bipartite(g).bipartite) reject("input is not bipartite");
  } else if (reason == "phibar-at-most-1") {
    if (phibar > 1) reject("phibar exceeds 1");
    if (!decide_oddc3_free(g).is_free()) reject("input is not odd-C3+-free");
    if (recheck_phibar(g, opt) != phibar) reject("phibar is not the maximum");
  } else {
    reject("unknown reason '" + reason + "'");
  }
  if (g.edge_count() <= opt.oracle_max_edges && oracle::brute_tok4(g, opt.oracle_max_edges)) reject("subset search finds a totally odd K4 subdivision");
}

void check_h_perfect(const Graph& g, const Json& c) {
  auto mode = c.at("mode").get<std::string>();
  if (mode == "source") {
    if (find_strict_oddc3(g)) reject("source graph contains a strict odd-C3+");
  } else if (mode == "line") {
    Graph root = root_at(c.at("root"));
    require_line_of(g, root);
    if (find_strict_oddc3(root)) reject("root graph contains a strict odd-C3+");
  } else {
    reject("unknown mode '" + mode + "'");
  }
}

ElementSet elements_at(const BinaryMatroid& m, const Json& ids) {
  ElementSet out;
  for (const auto& id : ids) {
    auto i = m.find_element(id.get<std::string>());
    if (!i) reject("unknown element '" + id.get<std::string>() + "'");
    out.push_back(*i);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) reject("repeated element");
  return out;
}

template <class Body>
Validation guarded(const Json& cert, const char* key, const std::string& name, Body body) {
  try {
    if (cert.at(key).get<std::string>() != name) reject("certificate is for '" + cert.at(key).get<std::string>() + "'");
    body();
    return {};
  } catch (const Reject& r) {
    return {false, r.reason};
  } catch (const Json::exception& e) {
    return {false, std::string("malformed certificate: ") + e.what()};
  } catch (const PreconditionError& e) {
    return {false, e.what()};
  } catch (const ScaleBoundExceeded& e) {
    return {false, e.what()};
  }
}

}  // namespace

Validation verify_certificate(const Graph& g, const Json& cert, const VerifyOptions& opt) {
  return guarded(cert, "graph", g.name(), [&] {
    auto type = cert.at("type").get<std::string>();
    if (type == "odd-c3-plus") check_oddc3(g, cert);
    else if (type == "free") check_free(g, cert);
    else if (type == "tok4") check_tok4(g, cert);
    else if (type == "ear-decomposition") check_ears(g, cert);
    else if (type == "beta") check_beta(g, cert, opt);
    else if (type == "phibar") check_phibar(g, cert, opt);
    else if (type == "no-tok4") check_no_tok4(g, cert, opt);
    else if (type == "h-perfect") check_h_perfect(g, cert);
    else reject("unknown graph certificate type '" + type + "'");
  });
}

Validation verify_certificate(const BinaryMatroid& m, const Json& cert) {
  return guarded(cert, "matroid", m.name(), [&] {
    auto type = cert.at("type").get<std::string>();
    if (type == "matroid-odd-c3-plus") {
      require(verify_matroid_oddc3(m, {elements_at(m, cert.at("c1")), elements_at(m, cert.at("c2"))}), "matroid-odd-c3-plus");
    } else if (type == "matroid-free") {
      std::vector<MatroidBlockCert> blocks;
      for (const auto& jb : cert.at("blocks")) {
        MatroidBlockCert b;
        auto kind = jb.at("kind").get<std::string>();
        if (kind == "coloop") b.kind = MatroidBlockCert::Kind::coloop;
        else if (kind == "bipartite") b.kind = MatroidBlockCert::Kind::bipartite;
        else if (kind == "basis") b.kind = MatroidBlockCert::Kind::basis;
        else reject("unknown block kind '" + kind + "'");
        b.elements = elements_at(m, jb.at("elements"));
        for (const auto& jc : jb.at("circuits")) b.circuits.push_back(elements_at(m, jc));
        blocks.push_back(std::move(b));
      }
      require(verify_matroid_free(m, blocks), "matroid-free");
    } else if (type == "matroid-bipartite") {
      MatroidBipartite b;
      b.bipartite = cert.at("bipartite").get<bool>();
      for (const auto& jc : cert.at("circuits")) b.circuits.push_back(elements_at(m, jc));
      require(verify_matroid_bipartite(m, b), "matroid-bipartite");
    } else {
      reject("unknown matroid certificate type '" + type + "'");
    }
  });
}

}  // namespace oddear
