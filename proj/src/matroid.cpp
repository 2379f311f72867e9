#include "oddear/matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "oddear/errors.hpp"

namespace oddear {

BinaryMatroid::BinaryMatroid(std::string name, std::vector<std::string> elements, std::vector<Gf2Vec> rows)
    : name_(std::move(name)), elements_(std::move(elements)), rows_(std::move(rows)) {
  const std::size_t n = elements_.size();
  std::set<std::string> seen;
  for (const auto& e : elements_) {
    if (e.empty() || !seen.insert(e).second) throw PreconditionError("matroid: duplicate or empty element id '" + e + "'");
  }
  for (const auto& r : rows_) {
    if (r.dim() != n) throw PreconditionError("matroid: row width differs from element count");
  }
  std::vector<Gf2Vec> red = rows_;
  std::size_t cur = 0;
  for (std::uint32_t j = 0; j < n && cur < red.size(); ++j) {
    std::size_t at = cur;
    while (at < red.size() && !red[at].get(j)) ++at;
    if (at == red.size()) continue;
    std::swap(red[cur], red[at]);
    for (std::size_t i = 0; i < red.size(); ++i) {
      if (i != cur && red[i].get(j)) red[i] ^= red[cur];
    }
    pivots_.push_back(j);
    ++cur;
  }
  columns_.assign(n, Gf2Vec(pivots_.size()));
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    for (auto j : red[i].support()) columns_[j].set(i);
  }
  for (std::uint32_t j = 0; j < n; ++j) {
    if (columns_[j].zero()) throw PreconditionError("matroid: element '" + elements_[j] + "' is a loop");
  }
  std::vector<char> is_pivot(n, 0);
  for (auto p : pivots_) is_pivot[p] = 1;
  for (std::uint32_t j = 0; j < n; ++j) {
    if (is_pivot[j] != 0) continue;
    ElementSet c{j};
    for (auto i : columns_[j].support()) c.push_back(pivots_[i]);
    std::sort(c.begin(), c.end());
    fundamental_.push_back(std::move(c));
  }
}

std::optional<std::uint32_t> BinaryMatroid::find_element(const std::string& id) const {
  for (std::uint32_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] == id) return i;
  }
  return std::nullopt;
}

std::uint32_t BinaryMatroid::element(const std::string& id) const {
  auto e = find_element(id);
  if (!e) throw PreconditionError("unknown element '" + id + "'");
  return *e;
}

std::size_t BinaryMatroid::rank_of(const ElementSet& x) const {
  std::vector<Gf2Vec> vs;
  for (auto e : x) vs.push_back(columns_[e]);
  return gf2_rank(std::move(vs));
}

bool BinaryMatroid::is_cycle(const ElementSet& x) const {
  Gf2Vec sum(rank());
  for (auto e : x) sum ^= columns_[e];
  return sum.zero();
}

bool BinaryMatroid::is_circuit(const ElementSet& x) const {
  if (x.empty()) return false;
  if (std::adjacent_find(x.begin(), x.end()) != x.end()) return false;
  for (auto e : x) {
    if (e >= size()) return false;
  }
  return is_cycle(x) && rank_of(x) + 1 == x.size();
}

Gf2Vec BinaryMatroid::indicator(const ElementSet& x) const { return Gf2Vec::from_support(size(), x); }

BinaryMatroid BinaryMatroid::restrict_to(const ElementSet& x) const {
  std::vector<std::string> names;
  for (auto e : x) names.push_back(elements_[e]);
  std::vector<Gf2Vec> rows;
  for (const auto& r : rows_) {
    Gf2Vec s(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (r.get(x[i])) s.set(i);
    }
    if (!s.zero()) rows.push_back(std::move(s));
  }
  return BinaryMatroid(name_, std::move(names), std::move(rows));
}

std::vector<ElementSet> BinaryMatroid::blocks() const {
  std::vector<std::uint32_t> parent(size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& c : fundamental_) {
    for (auto e : c) parent[find(e)] = find(c.front());
  }
  std::vector<ElementSet> out;
  std::vector<int> slot(size(), -1);
  for (std::uint32_t e = 0; e < size(); ++e) {
    auto r = find(e);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(e);
  }
  return out;
}

BinaryMatroid from_graph(const Graph& g) {
  std::vector<std::string> names;
  for (EdgeId e = 0; e < g.edge_count(); ++e) names.push_back(g.edge_id(e));
  std::vector<Gf2Vec> rows(g.vertex_count(), Gf2Vec(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.endpoints(e);
    rows[a].set(e);
    rows[b].set(e);
  }
  return BinaryMatroid(g.name(), std::move(names), std::move(rows));
}

OracleBuild from_oracle(const IndependenceOracle& oracle, std::vector<std::string> elements, std::string name) {
  const auto n = static_cast<std::uint32_t>(elements.size());
  std::size_t calls = 0;
  auto ask = [&](ElementSet s) {
    std::sort(s.begin(), s.end());
    ++calls;
    return oracle(s);
  };
  ElementSet basis;
  for (std::uint32_t e = 0; e < n; ++e) {
    ElementSet t = basis;
    t.push_back(e);
    if (ask(t)) basis.push_back(e);
  }
  std::vector<char> in_basis(n, 0);
  for (auto b : basis) in_basis[b] = 1;
  std::vector<ElementSet> fundamental;
  std::vector<std::uint32_t> others;
  for (std::uint32_t f = 0; f < n; ++f) {
    if (in_basis[f] != 0) continue;
    ElementSet c{f};
    for (std::size_t i = 0; i < basis.size(); ++i) {
      ElementSet t;
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (j != i) t.push_back(basis[j]);
      }
      t.push_back(f);
      if (ask(t)) c.push_back(basis[i]);
    }
    if (c.size() == 1) throw PreconditionError("oracle: element '" + elements[f] + "' is a loop");
    std::sort(c.begin(), c.end());
    fundamental.push_back(std::move(c));
    others.push_back(f);
  }
  // Binarity spot checks: symmetric differences of fundamental circuits are dependent.
  const std::size_t budget = basis.size() * basis.size();
  std::size_t spent = 0;
  for (std::size_t i = 0; i < fundamental.size() && spent < budget; ++i) {
    for (std::size_t j = i + 1; j < fundamental.size() && spent < budget; ++j) {
      ElementSet d;
      std::set_symmetric_difference(fundamental[i].begin(), fundamental[i].end(), fundamental[j].begin(),
                                    fundamental[j].end(), std::back_inserter(d));
      ++spent;
      if (ask(d)) throw PreconditionError("oracle is not binary: symmetric difference of two fundamental circuits is independent");
    }
  }
  std::vector<Gf2Vec> rows(basis.size(), Gf2Vec(n));
  for (std::size_t i = 0; i < basis.size(); ++i) rows[i].set(basis[i]);
  for (std::size_t k = 0; k < others.size(); ++k) {
    for (auto b : fundamental[k]) {
      if (b == others[k]) continue;
      auto at = std::find(basis.begin(), basis.end(), b) - basis.begin();
      rows[at].set(others[k]);
    }
  }
  return OracleBuild{BinaryMatroid(std::move(name), std::move(elements), std::move(rows)), calls};
}

BinaryMatroid parse_matroid(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::string> name;
  std::optional<std::vector<std::string>> elements;
  std::vector<Gf2Vec> rows;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string word;
    if (!(ss >> word) || word[0] == '#') continue;
    auto where = " (line " + std::to_string(lineno) + ")";
    if (word == "matroid") {
      std::string nm;
      if (name || !(ss >> nm)) throw ParseError("bad matroid header" + where);
      name = nm;
    } else if (word == "elements") {
      if (!name || elements) throw ParseError("unexpected elements line" + where);
      elements.emplace();
      for (std::string id; ss >> id;) elements->push_back(id);
    } else if (word == "row") {
      if (!elements) throw ParseError("row before elements" + where);
      std::string bits;
      std::string extra;
      if (!(ss >> bits) || (ss >> extra)) throw ParseError("row needs one 0/1 string" + where);
      if (bits.size() != elements->size()) throw ParseError("row length differs from element count" + where);
      Gf2Vec r(bits.size());
      for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
          r.set(i);
        } else if (bits[i] != '0') {
          throw ParseError("row has a character other than 0/1" + where);
        }
      }
      rows.push_back(std::move(r));
    } else {
      throw ParseError("unknown keyword '" + word + "'" + where);
    }
  }
  if (!name || !elements) throw ParseError("missing matroid or elements line");
  try {
    return BinaryMatroid(*name, *elements, std::move(rows));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

std::string format_matroid(const BinaryMatroid& m) {
  std::ostringstream os;
  os << "matroid " << m.name() << "\nelements";
  for (std::uint32_t i = 0; i < m.size(); ++i) os << ' ' << m.element_id(i);
  os << '\n';
  for (const auto& r : m.rows()) {
    os << "row ";
    for (std::size_t i = 0; i < m.size(); ++i) os << (r.get(i) ? '1' : '0');
    os << '\n';
  }
  return os.str();
}

namespace {

Validation fail(std::string why) { return Validation{false, std::move(why)}; }

ElementSet unite(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElementSet meet(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElementSet minus(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElementSet sym_diff(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Position of x in the sorted set s (x must be present).
std::uint32_t slot(const ElementSet& s, std::uint32_t x) {
  return static_cast<std::uint32_t>(std::lower_bound(s.begin(), s.end(), x) - s.begin());
}

ElementSet lift(const ElementSet& ground, const ElementSet& local) {
  ElementSet out;
  for (auto i : local) out.push_back(ground[i]);
  return out;
}

bool is_sorted_set(const ElementSet& x, std::size_t n) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] >= n || (i > 0 && x[i - 1] >= x[i])) return false;
  }
  return true;
}

// e and f share a circuit of m restricted to x (for e == f: e lies on a circuit).
bool linked(const BinaryMatroid& m, const ElementSet& x, std::uint32_t e, std::uint32_t f) {
  auto r = m.restrict_to(x);
  auto le = slot(x, e);
  auto lf = slot(x, f);
  for (const auto& b : r.blocks()) {
    if (!std::binary_search(b.begin(), b.end(), le)) continue;
    return std::binary_search(b.begin(), b.end(), lf) && b.size() >= 2;
  }
  return false;
}

std::uint32_t non_basis_element(const BinaryMatroid& m, const ElementSet& fundamental) {
  for (auto x : fundamental) {
    if (!std::binary_search(m.basis().begin(), m.basis().end(), x)) return x;
  }
  return fundamental.front();
}

}  // namespace

MatroidBipartite is_bipartite_matroid(const BinaryMatroid& m) {
  MatroidBipartite out;
  for (const auto& c : m.fundamental_circuits()) {
    if (c.size() % 2 == 1) return MatroidBipartite{false, {c}};
  }
  out.circuits = m.fundamental_circuits();
  return out;
}

std::optional<ElementSet> circuit_through_pair(const BinaryMatroid& m, std::uint32_t e, std::uint32_t f) {
  if (e >= m.size() || f >= m.size()) throw PreconditionError("circuit_through_pair: element out of range");
  ElementSet x(m.size());
  std::iota(x.begin(), x.end(), 0);
  if (!linked(m, x, e, f)) return std::nullopt;
  for (std::uint32_t d = 0; d < m.size(); ++d) {
    if (d == e || d == f) continue;
    ElementSet y;
    for (auto z : x) {
      if (z != d) y.push_back(z);
    }
    if (linked(m, y, e, f)) x = std::move(y);
  }
  return x;
}

BinaryMatroid parity_extension(const BinaryMatroid& m) {
  std::vector<std::string> names;
  for (std::uint32_t i = 0; i < m.size(); ++i) names.push_back(m.element_id(i));
  std::string p = "p";
  while (m.find_element(p)) p += "'";
  names.push_back(p);
  std::vector<Gf2Vec> rows;
  for (const auto& r : m.rows()) {
    Gf2Vec w(m.size() + 1);
    for (auto i : r.support()) w.set(i);
    rows.push_back(std::move(w));
  }
  Gf2Vec ones(m.size() + 1);
  for (std::size_t i = 0; i <= m.size(); ++i) ones.set(i);
  rows.push_back(std::move(ones));
  return BinaryMatroid(m.name() + "+p", std::move(names), std::move(rows));
}

namespace {

void require_connected_odd(const BinaryMatroid& m, const char* who) {
  if (m.size() < 2 || !m.connected()) throw PreconditionError(std::string(who) + ": matroid must be connected");
  if (is_bipartite_matroid(m).bipartite) throw PreconditionError(std::string(who) + ": matroid must be non-bipartite");
}

// Odd circuit of m inside x through e, via circuits through p in the parity extension.
std::optional<ElementSet> odd_circuit_within(const BinaryMatroid& mp, const ElementSet& x, std::uint32_t e) {
  const auto p = static_cast<std::uint32_t>(mp.size() - 1);
  ElementSet ground = x;
  ground.push_back(p);
  auto r = mp.restrict_to(ground);
  auto c = circuit_through_pair(r, slot(ground, p), slot(ground, e));
  if (!c) return std::nullopt;
  c->pop_back();
  return lift(ground, *c);
}

}  // namespace

ElementSet odd_circuit_through(const BinaryMatroid& m, std::uint32_t e) {
  require_connected_odd(m, "odd_circuit_through");
  if (e >= m.size()) throw PreconditionError("odd_circuit_through: element out of range");
  ElementSet all(m.size());
  std::iota(all.begin(), all.end(), 0);
  auto c = odd_circuit_within(parity_extension(m), all, e);
  if (!c) throw PreconditionError("odd_circuit_through: no odd circuit through the element");
  return *c;
}

MatroidBasis odd_circuit_basis_matroid(const BinaryMatroid& m) {
  require_connected_odd(m, "odd_circuit_basis_matroid");
  const auto& fc = m.fundamental_circuits();
  const auto mp = parity_extension(m);
  MatroidBasis out;
  std::vector<char> done(fc.size(), 0);
  ElementSet k;
  for (std::size_t i = 0; i < fc.size(); ++i) {
    if (fc[i].size() % 2 == 1) {
      k = fc[i];
      done[i] = 1;
      out.circuits.push_back(fc[i]);
      break;
    }
  }
  // Grow K by one fundamental circuit meeting it; the new non-basis element lies
  // only on the new odd circuit, so the family stays independent.
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < fc.size(); ++i) {
      if (done[i] != 0 || meet(fc[i], k).empty()) continue;
      k = unite(k, fc[i]);
      auto c = odd_circuit_within(mp, k, non_basis_element(m, fc[i]));
      if (!c) throw PreconditionError("odd_circuit_basis_matroid: growth step found no odd circuit");
      out.circuits.push_back(*c);
      done[i] = 1;
      grew = true;
      break;
    }
  }
  if (out.circuits.size() != m.size() - m.rank()) throw PreconditionError("odd_circuit_basis_matroid: matroid not connected");
  for (const auto& c : out.circuits) out.vectors.push_back(m.indicator(c));
  return out;
}

namespace {

// Every circuit of m, smallest first. Throws ScaleBoundExceeded past 20 cycle-space dimensions.
std::vector<ElementSet> circuits_of(const BinaryMatroid& m) {
  const auto& fc = m.fundamental_circuits();
  if (fc.size() > 20) throw ScaleBoundExceeded("cycle space of dimension " + std::to_string(fc.size()) + " exceeds 20");
  std::vector<Gf2Vec> gens;
  for (const auto& c : fc) gens.push_back(m.indicator(c));
  std::vector<ElementSet> out;
  Gf2Vec cur(m.size());
  for (std::uint64_t i = 1; i < (1ULL << fc.size()); ++i) {
    cur ^= gens[std::countr_zero(i)];
    auto s = cur.support();
    if (m.is_circuit(s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

// Pair (a, b) with a odd, a and b meeting, |b \ a| odd: a minimal pair inside a u b is an odd-C3+.
MatroidOddC3Cert minimal_pair(const BinaryMatroid& m, const ElementSet& a, const ElementSet& b) {
  MatroidOddC3Cert direct{a, b};
  if (verify_matroid_oddc3(m, direct)) return direct;
  ElementSet u = unite(a, b);
  auto r = m.restrict_to(u);
  auto cs = circuits_of(r);
  for (const auto& x : cs) {
    if (x.size() % 2 == 0) continue;
    for (const auto& y : cs) {
      if (x == y || meet(x, y).empty() || minus(y, x).size() % 2 == 0) continue;
      MatroidOddC3Cert local{x, y};
      if (verify_matroid_oddc3(r, local)) return MatroidOddC3Cert{lift(u, x), lift(u, y)};
    }
  }
  throw std::logic_error("minimal_pair: no odd-C3+ inside the union");
}

}  // namespace

Validation verify_matroid_oddc3(const BinaryMatroid& m, const MatroidOddC3Cert& cert) {
  const auto& c1 = cert.c1;
  const auto& c2 = cert.c2;
  if (!is_sorted_set(c1, m.size()) || !is_sorted_set(c2, m.size())) return fail("circuits must be sorted element sets");
  if (!m.is_circuit(c1) || !m.is_circuit(c2)) return fail("c1 and c2 must be circuits");
  if (c1 == c2) return fail("c1 and c2 coincide");
  if (c1.size() % 2 == 0) return fail("c1 is even");
  if (minus(c2, c1).size() % 2 == 0) return fail("c2 \\ c1 is even");
  if (meet(c1, c2).empty()) return fail("c1 and c2 are disjoint");
  ElementSet u = unite(c1, c2);
  if (u.size() - m.rank_of(u) != 2) return fail("union carries more than three circuits");
  if (!m.is_circuit(sym_diff(c1, c2))) return fail("symmetric difference is not a circuit");
  return {};
}

MatroidOddC3Cert extract_oddc3_matroid(const BinaryMatroid& m, const ElementSet& c1, const ElementSet& c2) {
  if (!is_sorted_set(c1, m.size()) || !is_sorted_set(c2, m.size()) || !m.is_circuit(c1) || !m.is_circuit(c2)) {
    throw PreconditionError("extract_oddc3_matroid: inputs must be circuits");
  }
  if (c1.size() % 2 == 0 || c2.size() % 2 == 0) throw PreconditionError("extract_oddc3_matroid: circuits must be odd");
  if (meet(c1, c2).size() % 2 == 1) throw PreconditionError("extract_oddc3_matroid: circuits meet oddly");
  if (c1 == c2) throw PreconditionError("extract_oddc3_matroid: circuits coincide");
  if (!meet(c1, c2).empty()) return minimal_pair(m, c1, c2);
  auto start = circuit_through_pair(m, c1.front(), c2.front());
  if (!start) throw PreconditionError("extract_oddc3_matroid: circuits lie in different blocks");
  // Circuit meeting both with c \ c2 inclusion-minimal.
  ElementSet c = *start;
  for (bool shrunk = true; shrunk;) {
    shrunk = false;
    ElementSet out = minus(c, c2);
    for (auto x : out) {
      ElementSet w = unite(minus(out, {x}), c2);
      auto r = m.restrict_to(w);
      for (const auto& b : r.blocks()) {
        ElementSet bl = lift(w, b);
        auto in1 = meet(bl, c1);
        auto in2 = meet(bl, c2);
        if (b.size() < 2 || in1.empty() || in2.empty()) continue;
        c = lift(w, *circuit_through_pair(r, slot(w, in1.front()), slot(w, in2.front())));
        shrunk = true;
        break;
      }
      if (shrunk) break;
    }
  }
  ElementSet d = minus(c, c1).size() % 2 == 1 ? c : sym_diff(c, c2);
  if (!m.is_circuit(d) || meet(d, c1).empty()) throw std::logic_error("extract_oddc3_matroid: folding step failed");
  return minimal_pair(m, c1, d);
}

MatroidDecision decide_oddc3_free_matroid(const BinaryMatroid& m) {
  MatroidDecision out;
  for (const auto& block : m.blocks()) {
    MatroidBlockCert bc;
    bc.elements = block;
    if (block.size() == 1) {
      out.blocks.push_back(std::move(bc));
      continue;
    }
    auto r = m.restrict_to(block);
    auto bip = is_bipartite_matroid(r);
    if (bip.bipartite) {
      bc.kind = MatroidBlockCert::Kind::bipartite;
      for (const auto& c : bip.circuits) bc.circuits.push_back(lift(block, c));
      out.blocks.push_back(std::move(bc));
      continue;
    }
    auto basis = odd_circuit_basis_matroid(r);
    for (std::size_t i = 0; i < basis.circuits.size(); ++i) {
      for (std::size_t j = i + 1; j < basis.circuits.size(); ++j) {
        if (intersection_parity(basis.vectors[i], basis.vectors[j]) == Parity::even) {
          auto cert = extract_oddc3_matroid(r, basis.circuits[i], basis.circuits[j]);
          out.obstruction = MatroidOddC3Cert{lift(block, cert.c1), lift(block, cert.c2)};
          out.blocks.clear();
          return out;
        }
      }
    }
    bc.kind = MatroidBlockCert::Kind::basis;
    for (const auto& c : basis.circuits) bc.circuits.push_back(lift(block, c));
    out.blocks.push_back(std::move(bc));
  }
  return out;
}

Validation verify_matroid_bipartite(const BinaryMatroid& m, const MatroidBipartite& cert) {
  for (const auto& c : cert.circuits) {
    if (!is_sorted_set(c, m.size()) || !m.is_circuit(c)) return fail("witness member is not a circuit");
  }
  if (!cert.bipartite) {
    if (cert.circuits.size() != 1 || cert.circuits[0].size() % 2 == 0) return fail("expected one odd circuit");
    return {};
  }
  if (cert.circuits.size() != m.size() - m.rank()) return fail("basis size differs from the cycle-space dimension");
  std::vector<Gf2Vec> vs;
  for (const auto& c : cert.circuits) {
    if (c.size() % 2 == 1) return fail("basis member is odd");
    vs.push_back(m.indicator(c));
  }
  if (gf2_rank(vs) != vs.size()) return fail("basis members are dependent");
  return {};
}

Validation verify_matroid_free(const BinaryMatroid& m, const std::vector<MatroidBlockCert>& blocks) {
  auto expected = m.blocks();
  if (blocks.size() != expected.size()) return fail("block count differs");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& bc = blocks[i];
    if (bc.elements != expected[i]) return fail("block " + std::to_string(i) + " differs from the matroid's blocks");
    auto r = m.restrict_to(bc.elements);
    std::vector<ElementSet> local;
    for (const auto& c : bc.circuits) {
      if (!is_sorted_set(c, m.size()) || !minus(c, bc.elements).empty()) return fail("circuit leaves its block");
      ElementSet l;
      for (auto x : c) l.push_back(slot(bc.elements, x));
      local.push_back(std::move(l));
    }
    switch (bc.kind) {
      case MatroidBlockCert::Kind::coloop:
        if (bc.elements.size() != 1 || !bc.circuits.empty()) return fail("coloop block must be a single element");
        break;
      case MatroidBlockCert::Kind::bipartite:
        if (auto v = verify_matroid_bipartite(r, MatroidBipartite{true, local}); !v) return v;
        break;
      case MatroidBlockCert::Kind::basis: {
        if (local.size() != r.size() - r.rank()) return fail("basis size differs from the cycle-space dimension");
        std::vector<Gf2Vec> vs;
        for (const auto& c : local) {
          if (!r.is_circuit(c) || c.size() % 2 == 0) return fail("basis member is not an odd circuit");
          vs.push_back(r.indicator(c));
        }
        if (gf2_rank(vs) != vs.size()) return fail("basis members are dependent");
        for (std::size_t a = 0; a < vs.size(); ++a) {
          for (std::size_t b = a + 1; b < vs.size(); ++b) {
            if (intersection_parity(vs[a], vs[b]) == Parity::even) return fail("basis is not totally odd");
          }
        }
        break;
      }
    }
  }
  return {};
}

bool is_oddc3_matroid(const BinaryMatroid& m) {
  if (m.size() - m.rank() != 2) return false;
  auto cs = circuits_of(m);
  if (cs.size() != 3) return false;
  ElementSet cover = unite(unite(cs[0], cs[1]), cs[2]);
  if (cover.size() != m.size()) return false;
  std::vector<ElementSet> odd;
  for (const auto& c : cs) {
    if (c.size() % 2 == 1) odd.push_back(c);
  }
  return odd.size() == 2 && verify_matroid_oddc3(m, MatroidOddC3Cert{odd[0], odd[1]}).ok;
}

BinaryMatroid fano() {
  const char* bits[] = {"1001101", "0101011", "0010111"};
  std::vector<Gf2Vec> rows;
  for (const char* b : bits) {
    Gf2Vec r(7);
    for (std::size_t i = 0; i < 7; ++i) {
      if (b[i] == '1') r.set(i);
    }
    rows.push_back(r);
  }
  return BinaryMatroid("F7", {"1", "2", "3", "4", "5", "6", "7"}, std::move(rows));
}

}  // namespace oddear
