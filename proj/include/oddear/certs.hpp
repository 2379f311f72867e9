#pragma once

#include <json.hpp>

#include "oddear/beta_phi.hpp"
#include "oddear/ears.hpp"
#include "oddear/graph.hpp"
#include "oddear/matroid.hpp"
#include "oddear/oddc3.hpp"
#include "oddear/tok4.hpp"

namespace oddear {

using Json = nlohmann::ordered_json;

// Certificate documents. Field order is fixed; edges, vertices and elements
// appear by external id. Every document starts with "type" and the input name.
Json oddc3_json(const Graph& g, const OddC3Cert& c, const Graph* line = nullptr);  // "odd-c3-plus"; line: the input whose root is g
Json free_json(const Graph& g, const FreeCert& c);                                  // "free"
Json tok4_json(const Graph& g, const Tok4Cert& c);                                  // "tok4"
Json ears_json(const Graph& g, const EarDecomposition& d);                          // "ear-decomposition"
Json beta_json(const Graph& g, const BetaResult& r);                                // "beta"
Json phibar_json(const Graph& g, const OddEarResult& r);                            // "phibar"
Json no_tok4_json(const Graph& g, const Tok4Verdict& v, const OddEarResult& best);   // "no-tok4"
Json h_perfect_json(const Graph& g, const Graph* root = nullptr);                   // "h-perfect"
Json matroid_oddc3_json(const BinaryMatroid& m, const MatroidOddC3Cert& c);         // "matroid-odd-c3-plus"
Json matroid_free_json(const BinaryMatroid& m, const MatroidDecision& d);           // "matroid-free"
Json matroid_bipartite_json(const BinaryMatroid& m, const MatroidBipartite& b);     // "matroid-bipartite"

struct VerifyOptions {
  std::size_t beta_max_edges = 16;    // optimality of "beta" is rechecked up to here
  std::size_t phibar_max_edges = 13;  // same for "phibar" and "no-tok4"
  std::size_t oracle_max_edges = 14;  // "no-tok4" rechecked by subset search up to here
};

// Dispatch on "type". Malformed documents, unknown ids and wrong input names are rejected.
Validation verify_certificate(const Graph& g, const Json& cert, const VerifyOptions& opt = {});
Validation verify_certificate(const BinaryMatroid& m, const Json& cert);

}  // namespace oddear
