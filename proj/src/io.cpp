#include "oddear/io.hpp"

#include <set>
#include <sstream>
#include <vector>

#include "oddear/errors.hpp"

namespace oddear {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> tokens(const std::string& raw) {
  std::string line = raw.substr(0, raw.find('#'));
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string name;
  bool header = false;
  bool in_edges = false;
  std::vector<std::string> vs;
  std::set<std::string> seen;
  std::vector<EdgeSpec> es;
  std::size_t no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++no;
    auto t = tokens(raw);
    if (t.empty()) continue;
    if (!header) {
      if (t[0] != "graph" || t.size() != 2) fail(no, "expected 'graph <name>'");
      name = t[1];
      header = true;
      continue;
    }
    if (t[0] == "v") {
      if (t.size() != 2) fail(no, "expected 'v <id>'");
      if (in_edges) fail(no, "vertex line after edge lines");
      if (!seen.insert(t[1]).second) fail(no, "duplicate vertex '" + t[1] + "'");
      vs.push_back(t[1]);
    } else if (t[0] == "e") {
      if (t.size() != 4) fail(no, "expected 'e <edge-id> <u> <v>'");
      in_edges = true;
      if (t[2] == t[3]) fail(no, "loop at '" + t[2] + "'");
      for (std::size_t k : {2, 3}) {
        if (seen.count(t[k]) == 0) fail(no, "unknown vertex '" + t[k] + "'");
      }
      es.push_back({t[1], t[2], t[3]});
    } else {
      fail(no, "unknown record '" + t[0] + "'");
    }
  }
  if (!header) fail(no, "missing 'graph <name>' header");
  try {
    return Graph(name, std::move(vs), std::move(es));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

Graph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "graph " << (g.name().empty() ? "g" : g.name()) << "\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) out << "v " << g.vertex_id(v) << "\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.endpoints(e);
    out << "e " << g.edge_id(e) << " " << g.vertex_id(a) << " " << g.vertex_id(b) << "\n";
  }
  return out.str();
}

std::string format_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph " << quoted(g.name()) << " {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) out << "  " << quoted(g.vertex_id(v)) << ";\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.endpoints(e);
    out << "  " << quoted(g.vertex_id(a)) << " -- " << quoted(g.vertex_id(b)) << " [label=" << quoted(g.edge_id(e)) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace oddear
