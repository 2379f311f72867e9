#include "oddear/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>

#include "oddear/certs.hpp"
#include "oddear/errors.hpp"
#include "oddear/io.hpp"
#include "oddear/linegraph.hpp"

namespace oddear {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load_graph(const std::string& path) { return parse_graph_string(slurp(path)); }

BinaryMatroid load_matroid(const std::string& path) {
  std::istringstream in(slurp(path));
  return parse_matroid(in);
}

std::string first_token(const std::string& text) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::istringstream ls(line.substr(0, line.find('#')));
    std::string t;
    if (ls >> t) return t;
  }
  return {};
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool pretty = false;

  void emit(const Json& j) const { out << j.dump(2) << "\n"; }
  void summary(const std::string& s) const {
    if (pretty) out << s << "\n";
  }
};

std::map<std::string, int> parse_lengths(const std::vector<std::string>& items) {
  std::map<std::string, int> out;
  for (const auto& it : items) {
    auto eq = it.find('=');
    if (eq == std::string::npos) throw ParseError("expected <edge-id>=<length>, got '" + it + "'");
    try {
      out[it.substr(0, eq)] = std::stoi(it.substr(eq + 1));
    } catch (const std::exception&) {
      throw ParseError("bad length in '" + it + "'");
    }
  }
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Odd ear-decompositions, odd-C3+ freeness and their certificates", "oddear"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx{out, err};
  app.add_flag("--pretty", ctx.pretty, "append a human-readable summary");
  std::function<int()> action;
  std::string file;
  std::string cert_file;

  auto* oddc3 = app.add_subcommand("oddc3", "decide odd-C3+ freeness");
  oddc3->add_option("graph", file)->required();
  oddc3->callback([&] {
    action = [&] {
      Graph g = load_graph(file);
      auto d = decide_oddc3_free(g);
      if (d.obstruction) {
        ctx.emit(oddc3_json(g, *d.obstruction));
        ctx.summary(std::string("odd-C3+ found") + (d.obstruction->strict ? " (strict)" : " (C3+)"));
        return kExitObstruction;
      }
      ctx.emit(free_json(g, d.free));
      ctx.summary("odd-C3+-free: " + std::to_string(d.free.blocks.size()) + " blocks certified");
      return kExitHolds;
    };
  });

  auto* strict = app.add_subcommand("strict", "search for a strict odd-C3+");
  strict->add_option("graph", file)->required();
  strict->callback([&] {
    action = [&] {
      Graph g = load_graph(file);
      if (auto c = find_strict_oddc3(g)) {
        ctx.emit(oddc3_json(g, *c));
        ctx.summary("strict odd-C3+ found");
        return kExitObstruction;
      }
      ctx.emit(h_perfect_json(g));
      ctx.summary("no strict odd-C3+");
      return kExitHolds;
    };
  });

  std::string source;
  std::string line;
  auto* hperfect = app.add_subcommand("hperfect", "h-perfection of a line graph");
  auto* src_opt = hperfect->add_option("--source", source, "graph H, deciding L(H)");
  auto* line_opt = hperfect->add_option("--line", line, "graph G, recognized as a line graph first");
  src_opt->excludes(line_opt);
  hperfect->callback([&] {
    action = [&] {
      if (source.empty() == line.empty()) throw ParseError("hperfect needs exactly one of --source or --line");
      if (!source.empty()) {
        Graph h = load_graph(source);
        auto v = line_graph_h_perfect(h);
        if (!v.h_perfect) {
          ctx.emit(oddc3_json(h, *v.obstruction));
          ctx.summary("L(" + h.name() + ") is not h-perfect");
          return kExitObstruction;
        }
        ctx.emit(h_perfect_json(h));
        ctx.summary("L(" + h.name() + ") is h-perfect");
        return kExitHolds;
      }
      Graph g = load_graph(line);
      auto v = h_perfect_line_pipeline(g);
      switch (v.kind) {
        case LinePipelineVerdict::Kind::not_line_graph:
          err << "precondition violated: '" << g.name() << "' is not a line graph\n";
          return kExitPrecondition;
        case LinePipelineVerdict::Kind::not_h_perfect:
          ctx.emit(oddc3_json(*v.root, *v.obstruction, &g));
          ctx.summary(g.name() + " is not h-perfect");
          return kExitObstruction;
        case LinePipelineVerdict::Kind::h_perfect:
          break;
      }
      ctx.emit(h_perfect_json(g, &*v.root));
      ctx.summary(g.name() + " is h-perfect");
      return kExitHolds;
    };
  });

  auto* ears = app.add_subcommand("ears", "an ear-decomposition");
  ears->add_option("graph", file)->required();
  ears->callback([&] {
    action = [&] {
      Graph g = load_graph(file);
      auto d = ear_decomposition(g);
      ctx.emit(ears_json(g, d));
      ctx.summary(std::to_string(d.size()) + " ears, " + std::to_string(odd_ear_count(d)) + " odd");
      return kExitHolds;
    };
  });

  std::size_t beta_max = 16;
  auto* beta = app.add_subcommand("beta", "largest ear count of a factor-critical 2-connected subgraph");
  beta->add_option("graph", file)->required();
  beta->add_option("--max-edges", beta_max, "scale bound")->capture_default_str();
  beta->callback([&] {
    action = [&] {
      Graph g = load_graph(file);
      auto r = beta_brute(g, beta_max);
      ctx.emit(beta_json(g, r));
      ctx.summary("beta = " + std::to_string(r.value));
      return kExitHolds;
    };
  });

  std::size_t phibar_max = 13;
  auto* phibar = app.add_subcommand("phibar", "largest number of odd ears");
  phibar->add_option("graph", file)->required();
  phibar->add_option("--max-edges", phibar_max, "scale bound")->capture_default_str();
  phibar->callback([&] {
    action = [&] {
      Graph g = load_graph(file);
      auto r = max_odd_ears(g, phibar_max);
      ctx.emit(phibar_json(g, r));
      ctx.summary("phibar = " + std::to_string(r.value) + ", phi = " + std::to_string(g.edge_count() - g.vertex_count() + 1 - r.value));
      return kExitHolds;
    };
  });

  std::size_t tok4_max = 13;
  auto* tok4 = app.add_subcommand("tok4", "totally odd K4 subdivision in an odd-C3+-free graph");
  tok4->add_option("graph", file)->required();
  tok4->add_option("--max-edges", tok4_max, "scale bound")->capture_default_str();
  tok4->callback([&] {
    action = [&] {
      Graph g = load_graph(file);
      auto v = detect_tok4(g, tok4_max);
      switch (v.kind) {
        case Tok4Verdict::Kind::breach:
          ctx.emit(oddc3_json(g, *v.breach));
          err << "precondition violated: '" << g.name() << "' contains an odd-C3+\n";
          return kExitPrecondition;
        case Tok4Verdict::Kind::tok4:
          ctx.emit(tok4_json(g, *v.tok4));
          ctx.summary("totally odd K4 subdivision found, phibar = " + std::to_string(v.phibar));
          return kExitObstruction;
        case Tok4Verdict::Kind::none:
          break;
      }
      ctx.emit(no_tok4_json(g, v, max_odd_ears(g, tok4_max)));
      ctx.summary("no totally odd K4 subdivision, phibar = " + std::to_string(v.phibar));
      return kExitHolds;
    };
  });

  auto* matroid = app.add_subcommand("matroid", "binary matroid decisions");
  matroid->require_subcommand(1);
  auto* m_oddc3 = matroid->add_subcommand("oddc3", "decide odd-C3+ freeness");
  m_oddc3->add_option("matroid", file)->required();
  m_oddc3->callback([&] {
    action = [&] {
      auto m = load_matroid(file);
      auto d = decide_oddc3_free_matroid(m);
      if (d.obstruction) {
        ctx.emit(matroid_oddc3_json(m, *d.obstruction));
        ctx.summary("odd-C3+ minor found");
        return kExitObstruction;
      }
      ctx.emit(matroid_free_json(m, d));
      ctx.summary("odd-C3+-free: " + std::to_string(d.blocks.size()) + " blocks certified");
      return kExitHolds;
    };
  });
  auto* m_bip = matroid->add_subcommand("bipartite", "decide whether every circuit is even");
  m_bip->add_option("matroid", file)->required();
  m_bip->callback([&] {
    action = [&] {
      auto m = load_matroid(file);
      auto b = is_bipartite_matroid(m);
      ctx.emit(matroid_bipartite_json(m, b));
      ctx.summary(b.bipartite ? "bipartite" : "not bipartite");
      return b.bipartite ? kExitHolds : kExitObstruction;
    };
  });

  std::string format = "text";
  auto write_graph = [&](const Graph& g) {
    out << (format == "dot" ? format_dot(g) : format_graph(g));
    return kExitHolds;
  };
  auto* gen = app.add_subcommand("gen", "emit a named graph");
  gen->require_subcommand(1);
  gen->fallthrough();
  gen->add_option("--format", format, "text or dot")->check(CLI::IsMember({"text", "dot"}))->capture_default_str();
  int k = 0;
  auto* g_hk = gen->add_subcommand("hk", "the graph H_k");
  g_hk->add_option("k", k)->required()->check(CLI::Range(1, 1000));
  g_hk->callback([&] { action = [&] { return write_graph(gen_hk(k)); }; });
  gen->add_subcommand("petersen-minus-vertex", "Petersen graph minus a vertex")->callback([&] {
    action = [&] { return write_graph(gen_petersen_minus_vertex()); };
  });
  std::vector<std::string> lengths;
  auto* g_tok4 = gen->add_subcommand("tok4", "totally odd subdivision of K4 (edges e1..e6)");
  g_tok4->add_option("--lengths", lengths, "odd lengths as <edge-id>=<n>")->delimiter(',');
  g_tok4->callback([&] { action = [&] { return write_graph(gen_totally_odd_subdivision(gen_complete(4, "K4"), parse_lengths(lengths))); }; });
  auto* g_complete = gen->add_subcommand("complete", "complete graph K_n");
  g_complete->add_option("n", k)->required()->check(CLI::Range(1, 1000));
  g_complete->callback([&] { action = [&] { return write_graph(gen_complete(k)); }; });
  auto* g_cycle = gen->add_subcommand("cycle", "circuit C_n");
  g_cycle->add_option("n", k)->required()->check(CLI::Range(2, 100000));
  g_cycle->callback([&] { action = [&] { return write_graph(gen_cycle(k)); }; });
  gen->add_subcommand("c3plus", "triangle with one doubled edge")->callback([&] { action = [&] { return write_graph(gen_c3plus()); }; });
  gen->add_subcommand("c5plus", "C5 with one chord")->callback([&] { action = [&] { return write_graph(gen_c5plus()); }; });
  auto* g_line = gen->add_subcommand("line", "line graph of a simple graph file");
  g_line->add_option("graph", file)->required();
  g_line->callback([&] { action = [&] { return write_graph(line_graph(load_graph(file))); }; });
  gen->add_subcommand("fano", "the Fano matroid")->callback([&] {
    action = [&] {
      out << format_matroid(fano());
      return kExitHolds;
    };
  });

  auto* convert = app.add_subcommand("convert", "re-emit a graph file");
  convert->add_option("graph", file)->required();
  convert->add_option("--format", format, "text, dot or matroid (the cycle matroid)")->check(CLI::IsMember({"text", "dot", "matroid"}))->capture_default_str();
  convert->callback([&] {
    action = [&] {
      Graph g = load_graph(file);
      if (format == "matroid") {
        out << format_matroid(from_graph(g));
        return kExitHolds;
      }
      return write_graph(g);
    };
  });

  auto* verify = app.add_subcommand("verify", "check a certificate against its input");
  verify->add_option("input", file, "graph or matroid file")->required();
  verify->add_option("certificate", cert_file)->required();
  verify->callback([&] {
    action = [&] {
      std::string text = slurp(file);
      Json cert;
      try {
        cert = Json::parse(slurp(cert_file));
      } catch (const Json::parse_error& e) {
        throw ParseError(std::string("certificate: ") + e.what());
      }
      Validation v;
      if (first_token(text) == "matroid") {
        std::istringstream in(text);
        v = verify_certificate(parse_matroid(in), cert);
      } else {
        v = verify_certificate(parse_graph_string(text), cert);
      }
      if (!v) {
        err << "rejected: " << v.reason << "\n";
        return kExitRejected;
      }
      out << "ok\n";
      return kExitHolds;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitHolds : kExitUsage;
  }
  try {
    return action();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const ScaleBoundExceeded& e) {
    err << "scale bound exceeded: " << e.what() << "\n";
    return kExitScale;
  }
}

}  // namespace oddear
