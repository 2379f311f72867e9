#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>

#include "corpus.hpp"
#include "graph_enum.hpp"
#include "oddear/beta_phi.hpp"
#include "oddear/errors.hpp"
#include "oddear/io.hpp"
#include "oddear/linegraph.hpp"
#include "oddear/oracles.hpp"
#include "oddear/tok4.hpp"
#include "random_graphs.hpp"

using namespace oddear;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;  // extra informational lines
};

class Timer {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  return parse_graph(in);
}

std::string secs(double s) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(2) << s << " s";
  return o.str();
}

// All ears odd, value ears, partial decomposition.
bool all_odd_witness(const BetaResult& r) {
  return r.witness && validate_partial(*r.witness) && r.witness->size() == r.value && odd_ear_count(*r.witness) == r.value;
}

Outcome criterion1() {
  Timer t;
  auto g = gen_petersen_minus_vertex();
  auto r = beta_brute(g);
  double s = t.seconds();
  Outcome o;
  o.pass = r.value == 4 && all_odd_witness(r) && s < 10;
  o.detail = "beta(Petersen - v) = " + std::to_string(r.value) + ", witness " + (all_odd_witness(r) ? "valid" : "invalid") + ", " + secs(s);
  return o;
}

Outcome criterion2() {
  Timer t;
  Outcome o;
  std::string betas;
  for (int k : {2, 3}) {
    auto hk = gen_hk(k);
    auto r = beta_brute(hk);
    betas += " beta(H_" + std::to_string(k) + ") = " + std::to_string(r.value);
    o.pass = o.pass && r.value == 2 && all_odd_witness(r);
  }
  std::string odds;
  for (int k = 2; k <= 6; ++k) {
    auto hk = gen_hk(k);
    auto d = hk_witness(hk, k);
    bool ok = validate(d) && odd_ear_count(d) >= static_cast<std::size_t>(k);
    odds += " " + std::to_string(odd_ear_count(d));
    o.pass = o.pass && ok;
  }
  double s = t.seconds();
  o.pass = o.pass && s < 60;
  o.detail = betas.substr(1) + "; odd ears of hk_witness(2..6):" + odds + ", " + secs(s);
  return o;
}

Outcome criterion3() {
  Timer t;
  std::size_t graphs = 0;
  std::size_t disagreements = 0;
  std::size_t bad_certs = 0;
  std::string first_bad;
  auto check = [&](const Graph& g) {
    ++graphs;
    auto d = decide_oddc3_free(g);
    if (d.is_free() != oracle::brute_oddc3_free(g)) {
      if (disagreements++ == 0) first_bad = format_graph(g);
    }
    if (d.obstruction && !verify_oddc3(g, *d.obstruction)) ++bad_certs;
  };
  // Exhaustive: every connected labelled multigraph on n <= 5 vertices with at most 9 edges.
  std::size_t exhaustive = 0;
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) pairs.emplace_back(a, b);
    }
    std::vector<std::pair<int, int>> es;
    auto rec = [&](auto&& self, std::size_t from) -> void {
      std::vector<int> parent(n + 1);
      for (int v = 1; v <= n; ++v) parent[v] = v;
      auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      int parts = n;
      for (auto [a, b] : es) {
        int ra = find(a);
        int rb = find(b);
        if (ra != rb) {
          parent[ra] = rb;
          --parts;
        }
      }
      if (parts == 1) {
        ++exhaustive;
        check(Graph::from_pairs("x", n, es));
      }
      if (es.size() == 9) return;
      for (std::size_t i = from; i < pairs.size(); ++i) {
        es.push_back(pairs[i]);
        self(self, i);
        es.pop_back();
      }
    };
    rec(rec, 0);
  }
  std::mt19937 rng(20240601);
  const std::size_t random_count = 10000;
  std::uniform_int_distribution<int> nd(2, 9);
  for (std::size_t i = 0; i < random_count; ++i) {
    int n = nd(rng);
    std::uniform_int_distribution<int> md(n - 1, 16);
    check(testing::random_multigraph(rng, n, md(rng), true));
  }
  double s = t.seconds();
  Outcome o;
  o.pass = disagreements == 0 && bad_certs == 0 && s < 300;
  o.detail = std::to_string(exhaustive) + " exhaustive + " + std::to_string(random_count) + " random multigraphs, " + std::to_string(disagreements) +
             " disagreements, " + std::to_string(bad_certs) + " invalid certificates, " + secs(s);
  if (!first_bad.empty()) o.notes.push_back("first disagreement:\n" + first_bad);
  return o;
}

Outcome criterion4() {
  auto k4 = gen_complete(4);
  Outcome o;
  auto d = decide_oddc3_free(k4);
  bool basis_ok = d.is_free() && d.free.blocks.size() == 1 && d.free.blocks[0].kind == BlockCert::Kind::basis && d.free.blocks[0].circuits.size() == 3;
  if (basis_ok) {
    const auto& cs = d.free.blocks[0].circuits;
    for (std::size_t i = 0; i < 3; ++i) {
      basis_ok = basis_ok && cs[i].length() == 3;
      for (std::size_t j = i + 1; j < 3; ++j) {
        auto a = cs[i].edges;
        auto b = cs[j].edges;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        std::vector<EdgeId> both;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
        basis_ok = basis_ok && both.size() == 1;
      }
    }
    basis_ok = basis_ok && verify_free(k4, d.free);
  }
  auto beta = beta_brute(k4).value;
  auto phibar = max_odd_ears(k4).value;
  auto t = detect_tok4(k4);
  bool tok4_ok = t.kind == Tok4Verdict::Kind::tok4 && verify_tok4(k4, *t.tok4);
  if (tok4_ok) {
    std::set<VertexId> br(t.tok4->branch.begin(), t.tok4->branch.end());
    tok4_ok = br.size() == 4;
    for (const auto& p : t.tok4->paths) tok4_ok = tok4_ok && p.length() == 1;
  }
  o.pass = basis_ok && beta == 1 && phibar == 2 && tok4_ok;
  o.detail = std::string("triangle basis ") + (basis_ok ? "totally odd" : "wrong") + ", beta = " + std::to_string(beta) + ", phibar = " + std::to_string(phibar) +
             ", detect_tok4 " + (tok4_ok ? "returns K4 itself" : "wrong");
  return o;
}

Outcome criterion5() {
  Outcome o;
  auto k4 = gen_complete(4);
  bool a = line_graph_h_perfect(k4).h_perfect;
  auto c5p = gen_c5plus();
  auto v = line_graph_h_perfect(c5p);
  bool b = !v.h_perfect && v.obstruction && verify_oddc3(c5p, *v.obstruction) && v.obstruction->strict;
  bool c = !find_strict_oddc3(gen_c3plus()).has_value();
  auto lk4 = line_graph(k4);
  auto p = h_perfect_line_pipeline(lk4);
  bool d = p.kind == LinePipelineVerdict::Kind::h_perfect && p.root && p.root->vertex_count() == 4 && p.root->edge_count() == 6 &&
           format_graph(line_graph(*p.root)).substr(format_graph(line_graph(*p.root)).find('\n')) == format_graph(lk4).substr(format_graph(lk4).find('\n'));
  o.pass = a && b && c && d;
  o.detail = std::string("L(K4) ") + (a ? "h-perfect" : "wrong") + ", L(C5plus) " + (b ? "not h-perfect (certified)" : "wrong") + ", C3plus strict " +
             (c ? "absent" : "wrong") + ", L(K4) pipeline " + (d ? "h-perfect with root" : "wrong");
  return o;
}

bool odd_meet(const ElementSet& a, const ElementSet& b) {
  ElementSet both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  return both.size() % 2 == 1;
}

Outcome criterion6() {
  Timer t;
  Outcome o;
  auto f = fano();
  auto circuits = oracle::enum_matroid_circuits(f);
  auto d = decide_oddc3_free_matroid(f);
  bool fano_ok = !is_bipartite_matroid(f).bipartite && d.is_free() && d.blocks.size() == 1 && d.blocks[0].kind == MatroidBlockCert::Kind::basis;
  if (fano_ok) {
    const auto& cs = d.blocks[0].circuits;
    fano_ok = cs.size() == 4 && verify_matroid_free(f, d.blocks);
    for (std::size_t i = 0; i < cs.size(); ++i) {
      fano_ok = fano_ok && cs[i].size() % 2 == 1 && std::find(circuits.begin(), circuits.end(), cs[i]) != circuits.end();
      for (std::size_t j = i + 1; j < cs.size(); ++j) fano_ok = fano_ok && odd_meet(cs[i], cs[j]);
    }
  }
  // Corpus: unlabelled simple 2-connected graphs, plus labelled 2-connected multigraphs on at most 4 vertices.
  std::vector<Graph> corpus = testing::two_connected_graphs(9);
  std::size_t simple = corpus.size();
  for (int n = 2; n <= 4; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) pairs.emplace_back(a, b);
    }
    std::vector<std::pair<int, int>> es;
    auto rec = [&](auto&& self, std::size_t from) -> void {
      if (es.size() >= 2) {
        Graph g = Graph::from_pairs("multi", n, es);
        if (!g.is_simple() && (n == 2 || is_two_connected(g))) corpus.push_back(std::move(g));
      }
      if (es.size() == 9) return;
      for (std::size_t i = from; i < pairs.size(); ++i) {
        es.push_back(pairs[i]);
        self(self, i);
        es.pop_back();
      }
    };
    rec(rec, 0);
  }
  std::size_t verdicts = 0;
  std::size_t bipartite = 0;
  for (const auto& g : corpus) {
    auto m = from_graph(g);
    auto md = decide_oddc3_free_matroid(m);
    if (md.is_free() != decide_oddc3_free(g).is_free()) ++verdicts;
    if (md.obstruction && !verify_matroid_oddc3(m, *md.obstruction)) ++verdicts;
    if (is_bipartite_matroid(m).bipartite != is_bipartite(g).bipartite) ++bipartite;
  }
  double s = t.seconds();
  o.pass = fano_ok && verdicts == 0 && bipartite == 0 && s < 300;
  o.detail = std::string("F7 ") + (fano_ok ? "non-bipartite, free, 4-circuit totally odd basis" : "wrong") + "; " + std::to_string(simple) + " simple + " +
             std::to_string(corpus.size() - simple) + " multigraph inputs, " + std::to_string(verdicts) + " verdict and " + std::to_string(bipartite) +
             " bipartiteness disagreements, " + secs(s);
  return o;
}

Outcome criterion7() {
  Timer t;
  std::size_t free = 0;
  std::size_t found = 0;
  std::size_t bad_certs = 0;
  std::size_t disagree_bip = 0;
  std::size_t disagree_nonbip = 0;
  std::string example;
  for (const auto& g : testing::two_connected_graphs(12)) {
    if (!decide_oddc3_free(g).is_free()) continue;
    ++free;
    auto detected = detect_tok4(g, 12);
    auto brute = oracle::brute_tok4(g, 12);
    auto phibar = max_odd_ears(g, 12).value;
    bool a = detected.kind == Tok4Verdict::Kind::tok4;
    if (a) ++found;
    if (detected.kind == Tok4Verdict::Kind::breach) ++bad_certs;
    if (a && !verify_tok4(g, *detected.tok4)) ++bad_certs;
    if (brute && !verify_tok4(g, *brute)) ++bad_certs;
    if (a == brute.has_value() && a == (phibar >= 2)) continue;
    if (detected.bipartite) {
      if (disagree_bip++ == 0) example = format_graph(g) + "  detect_tok4: " + (a ? "found" : "none") + ", brute_tok4: " + (brute ? "found" : "none") +
                                         ", phibar = " + std::to_string(phibar);
    } else {
      ++disagree_nonbip;
    }
  }
  double s = t.seconds();
  Outcome o;
  o.pass = disagree_bip + disagree_nonbip == 0 && bad_certs == 0 && s < 600;
  o.detail = std::to_string(free) + " free graphs, " + std::to_string(found) + " TOK4s found, " + std::to_string(disagree_bip + disagree_nonbip) +
             " disagreements (" + std::to_string(disagree_bip) + " bipartite), " + std::to_string(bad_certs) + " invalid certificates, " + secs(s);
  o.notes.push_back(std::string("criterion 7 restricted to non-bipartite graphs: ") + (disagree_nonbip == 0 && bad_certs == 0 ? "PASS" : "FAIL") + ", " +
                    std::to_string(disagree_nonbip) + " disagreements");
  if (!example.empty()) o.notes.push_back("bipartite counterexample to 'TOK4 iff phibar >= 2':\n" + example);
  return o;
}

Outcome criterion8() {
  Timer t;
  std::mt19937 rng(8);
  std::size_t graphs = 0;
  std::size_t matroids = 0;
  std::size_t failures = 0;
  while (graphs < 1000) {
    Graph g = testing::random_two_connected(rng, 4 + static_cast<int>(graphs % 40), graphs % 3 != 0);
    if (!is_two_connected(g) || is_bipartite(g).bipartite) continue;
    ++graphs;
    auto b = odd_circuit_basis(g);
    bool ok = b.size() == cyclomatic_number(g) && gf2_rank(b.vectors) == b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      ok = ok && is_valid_circuit(g, b.circuits[i]) && b.circuits[i].odd() && b.vectors[i] == edge_vector(g, b.circuits[i].edges);
    }
    if (!ok) ++failures;
  }
  while (matroids < 1000) {
    auto m = testing::random_matroid(rng, 2 + matroids % 6, 5 + matroids % 12);
    if (!m.connected() || is_bipartite_matroid(m).bipartite) continue;
    ++matroids;
    auto b = odd_circuit_basis_matroid(m);
    bool ok = b.circuits.size() == m.size() - m.rank() && gf2_rank(b.vectors) == b.circuits.size();
    for (std::size_t i = 0; i < b.circuits.size(); ++i) {
      ok = ok && m.is_circuit(b.circuits[i]) && b.circuits[i].size() % 2 == 1 && b.vectors[i] == m.indicator(b.circuits[i]);
    }
    if (!ok) ++failures;
  }
  Outcome o;
  o.pass = failures == 0;
  o.detail = std::to_string(graphs) + " graphs + " + std::to_string(matroids) + " binary matroids, " + std::to_string(failures) + " invalid bases, " + secs(t.seconds());
  return o;
}

std::string write_temp(const std::string& name, const Json& j) {
  auto p = std::filesystem::temp_directory_path() / ("oddear-acceptance-" + name);
  std::ofstream(p) << j.dump(2) << "\n";
  return p.string();
}

// Positions of edge or element ids inside a certificate.
std::vector<Json::json_pointer> id_positions(const Json& cert) {
  static const std::set<std::string> keys{"paths", "edges", "circuits", "ears", "subgraph", "c1", "c2", "elements"};
  std::vector<Json::json_pointer> out;
  auto strings = [&](auto&& self, const Json& j, const Json::json_pointer& at) -> void {
    if (j.is_string()) out.push_back(at);
    if (j.is_array()) {
      for (std::size_t i = 0; i < j.size(); ++i) self(self, j[i], at / i);
    }
  };
  for (const auto& [k, v] : cert.items()) {
    if (keys.count(k) != 0) strings(strings, v, Json::json_pointer("/" + k));
  }
  if (cert.contains("blocks")) {
    for (std::size_t i = 0; i < cert["blocks"].size(); ++i) {
      for (const char* k : {"edges", "elements", "circuits"}) {
        if (cert["blocks"][i].contains(k)) strings(strings, cert["blocks"][i][k], Json::json_pointer("/blocks") / i / k);
      }
    }
  }
  if (cert.contains("root")) {
    for (std::size_t i = 0; i < cert["root"]["edges"].size(); ++i) out.push_back(Json::json_pointer("/root/edges") / i / 0);
  }
  return out;
}

Outcome criterion9() {
  Timer t;
  auto emitted = testing::emit_corpus();
  std::set<std::string> types;
  std::size_t accepted = 0;
  std::size_t mutants = 0;
  std::size_t survived = 0;
  std::string first_survivor;
  for (std::size_t n = 0; n < emitted.size(); ++n) {
    const auto& em = emitted[n];
    types.insert(em.cert["type"].get<std::string>());
    auto r = testing::run_cli({"verify", em.input, write_temp("cert.json", em.cert)});
    if (r.code == 0) ++accepted;
    bool matroid = em.input.ends_with(".matroid");
    std::vector<std::string> ids;
    bool simple = false;
    if (!matroid) {
      Graph g = load_graph_file(em.input);
      simple = g.is_simple();
      for (EdgeId e = 0; e < g.edge_count(); ++e) ids.push_back(g.edge_id(e));
      if (em.cert.contains("root")) {
        ids.clear();
        for (const auto& e : em.cert["root"]["edges"]) ids.push_back(e[0].get<std::string>());
      }
    }
    for (const auto& at : id_positions(em.cert)) {
      const std::string old = em.cert[at].get<std::string>();
      std::vector<std::string> replacements{old + "?"};
      if (simple && ids.size() > 1) {
        auto it = std::find(ids.begin(), ids.end(), old);
        if (it != ids.end()) replacements.push_back(std::next(it) == ids.end() ? ids.front() : *std::next(it));
      }
      for (const auto& rep : replacements) {
        Json mutant = em.cert;
        mutant[at] = rep;
        ++mutants;
        if (testing::run_cli({"verify", em.input, write_temp("mutant.json", mutant)}).code != kExitRejected) {
          if (survived++ == 0) first_survivor = em.input + " " + at.to_string() + " -> " + rep;
        }
      }
    }
  }
  Outcome o;
  o.pass = accepted == emitted.size() && survived == 0 && !emitted.empty();
  std::string ts;
  for (const auto& x : types) ts += (ts.empty() ? "" : " ") + x;
  o.detail = std::to_string(accepted) + "/" + std::to_string(emitted.size()) + " certificates accepted, " + std::to_string(mutants - survived) + "/" +
             std::to_string(mutants) + " single-id mutants rejected, " + secs(t.seconds());
  o.notes.push_back("certificate types exercised: " + ts);
  if (!first_survivor.empty()) o.notes.push_back("first surviving mutant: " + first_survivor);
  return o;
}

Outcome smoke() {
  std::mt19937 rng(10000);
  Graph g = testing::random_two_connected(rng, 10000, true);
  Timer t;
  auto d = decide_oddc3_free(g);
  double s = t.seconds();
  Outcome o;
  o.pass = s < 60 && (d.is_free() || verify_oddc3(g, *d.obstruction));
  o.detail = "decide_oddc3_free on " + std::to_string(g.edge_count()) + " edges, " + std::to_string(g.vertex_count()) + " vertices: " +
             (d.is_free() ? "free" : "obstruction") + ", " + secs(s);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> expect_fail;
  std::vector<int> only;
  app.add_option("--expect-fail", expect_fail, "criteria known to fail; exit status treats them as expected");
  app.add_option("--only", only, "run only these criteria (0 = smoke)");
  CLI11_PARSE(app, argc, argv);
  std::vector<std::pair<int, Outcome (*)()>> all{{1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
                                                  {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}, {0, smoke}};
  bool as_expected = true;
  for (auto [id, fn] : all) {
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::string label = id == 0 ? "smoke" : "criterion " + std::to_string(id);
    std::cout << label << ": " << (o.pass ? "PASS" : "FAIL") << ", " << o.detail << "\n";
    for (const auto& n : o.notes) std::cout << "  " << n << "\n";
    std::cout.flush();
    bool expected_fail = std::find(expect_fail.begin(), expect_fail.end(), id) != expect_fail.end();
    if (o.pass == expected_fail) as_expected = false;
  }
  return as_expected ? 0 : 1;
}
