#include "phasecomp/pattern_graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "phasecomp/errors.hpp"

namespace phasecomp {

namespace {

void check_size(int n) {
  if (n <= 0) throw InvalidArgument("pattern size must be positive");
}

std::size_t cell(int n, int u, int v) {
  return static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
         static_cast<std::size_t>(v);
}

}  // namespace

// PatternGraph -------------------------------------------------------------

PatternGraph::PatternGraph(int n) : n_(n) {
  check_size(n);
  adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u) adj_[cell(n_, u, u)] = 1;
}

PatternGraph::PatternGraph(int n, std::span<const Edge> edges)
    : PatternGraph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

PatternGraph PatternGraph::complete(int n) {
  PatternGraph g(n);
  std::fill(g.adj_.begin(), g.adj_.end(), 1);
  return g;
}

PatternGraph PatternGraph::path(int n) { return banded(n, 1); }

PatternGraph PatternGraph::cycle(int n) {
  PatternGraph g = path(n);
  if (n > 2) g.add_edge(0, n - 1);
  return g;
}

PatternGraph PatternGraph::banded(int n, int bandwidth) {
  PatternGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n && v - u <= bandwidth; ++v) g.add_edge(u, v);
  }
  return g;
}

void PatternGraph::check_vertex(int u) const {
  if (u < 0 || u >= n_) {
    throw InvalidArgument("vertex " + std::to_string(u) + " out of range");
  }
}

bool PatternGraph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[cell(n_, u, v)] != 0;
}

void PatternGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[cell(n_, u, v)] = 1;
  adj_[cell(n_, v, u)] = 1;
}

std::vector<int> PatternGraph::neighbors(int u) const {
  check_vertex(u);
  std::vector<int> out;
  for (int v = 0; v < n_; ++v) {
    if (v != u && adj_[cell(n_, u, v)]) out.push_back(v);
  }
  return out;
}

std::vector<Edge> PatternGraph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (adj_[cell(n_, u, v)]) out.emplace_back(u, v);
    }
  }
  return out;
}

// PatternMask --------------------------------------------------------------

PatternMask::PatternMask(int n) : n_(n) {
  check_size(n);
  adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

bool PatternMask::contains(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return adj_[cell(n_, u, v)] != 0;
}

void PatternMask::insert(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw InvalidArgument("mask position out of range");
  }
  adj_[cell(n_, u, v)] = 1;
  adj_[cell(n_, v, u)] = 1;
}

std::vector<Edge> PatternMask::pairs() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u; v < n_; ++v) {
      if (adj_[cell(n_, u, v)]) out.emplace_back(u, v);
    }
  }
  return out;
}

bool PatternMask::empty() const {
  return std::none_of(adj_.begin(), adj_.end(), [](char c) { return c != 0; });
}

// DirectedPatternGraph -----------------------------------------------------

DirectedPatternGraph::DirectedPatternGraph(int n) : n_(n) {
  check_size(n);
  adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

DirectedPatternGraph::DirectedPatternGraph(int n, std::span<const Edge> arcs)
    : DirectedPatternGraph(n) {
  for (const auto& [u, v] : arcs) add_arc(u, v);
}

bool DirectedPatternGraph::has_arc(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw InvalidArgument("arc endpoint out of range");
  }
  return adj_[cell(n_, u, v)] != 0;
}

void DirectedPatternGraph::add_arc(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw InvalidArgument("arc endpoint out of range");
  }
  adj_[cell(n_, u, v)] = 1;
}

std::vector<Edge> DirectedPatternGraph::arcs() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      if (adj_[cell(n_, u, v)]) out.emplace_back(u, v);
    }
  }
  return out;
}

// Orderings ----------------------------------------------------------------

std::vector<int> EliminationOrdering::position() const {
  std::vector<int> pos(order.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  }
  return pos;
}

bool EliminationOrdering::is_permutation_of(int n) const {
  if (size() != n) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

EliminationOrdering EliminationOrdering::identity(int n) {
  EliminationOrdering o;
  o.order.resize(static_cast<std::size_t>(n));
  std::iota(o.order.begin(), o.order.end(), 0);
  return o;
}

EliminationOrdering max_cardinality_search(const PatternGraph& g) {
  const int n = g.size();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  std::vector<int> visit;
  visit.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (visited[static_cast<std::size_t>(v)]) continue;
      if (best < 0 || weight[static_cast<std::size_t>(v)] >
                          weight[static_cast<std::size_t>(best)]) {
        best = v;
      }
    }
    visited[static_cast<std::size_t>(best)] = 1;
    visit.push_back(best);
    for (int w : g.neighbors(best)) {
      if (!visited[static_cast<std::size_t>(w)]) {
        ++weight[static_cast<std::size_t>(w)];
      }
    }
  }
  std::reverse(visit.begin(), visit.end());
  return EliminationOrdering{std::move(visit)};
}

std::vector<int> later_neighbors(const PatternGraph& g,
                                 const EliminationOrdering& peo, int step) {
  const auto pos = peo.position();
  const int v = peo.order[static_cast<std::size_t>(step)];
  std::vector<int> out;
  for (int w : g.neighbors(v)) {
    if (pos[static_cast<std::size_t>(w)] > step) out.push_back(w);
  }
  return out;
}

bool verify_peo(const PatternGraph& g, const EliminationOrdering& peo) {
  if (!peo.is_permutation_of(g.size())) {
    throw InvalidArgument("ordering is not a permutation of the vertices");
  }
  for (int i = 0; i < peo.size(); ++i) {
    if (!is_clique(g, later_neighbors(g, peo, i))) return false;
  }
  return true;
}

ChordalityResult is_chordal(const PatternGraph& g) {
  auto order = max_cardinality_search(g);
  if (verify_peo(g, order)) return {true, std::move(order)};
  return {false, std::nullopt};
}

bool is_clique(const PatternGraph& g, std::span<const int> vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (!g.has_edge(vertices[a], vertices[b])) return false;
    }
  }
  return true;
}

namespace {

bool is_subset(const Clique& small, const Clique& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

CliqueList keep_maximal(CliqueList candidates) {
  for (auto& c : candidates) std::sort(c.begin(), c.end());
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  CliqueList out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < candidates.size() && !dominated; ++j) {
      dominated = i != j && candidates[j].size() > candidates[i].size() &&
                  is_subset(candidates[i], candidates[j]);
    }
    if (!dominated) out.push_back(candidates[i]);
  }
  return out;
}

void bron_kerbosch(const PatternGraph& g, Clique& r, std::vector<int> p,
                   std::vector<int> x, CliqueList& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  int pivot = p.empty() ? x.front() : p.front();
  std::size_t best = 0;
  for (const auto& cand : {p, x}) {
    for (int u : cand) {
      std::size_t cnt = 0;
      for (int v : p) cnt += (u != v && g.has_edge(u, v)) ? 1 : 0;
      if (cnt > best) {
        best = cnt;
        pivot = u;
      }
    }
  }
  const std::vector<int> frontier = p;
  for (int v : frontier) {
    if (v != pivot && g.has_edge(pivot, v)) continue;
    std::vector<int> np, nx;
    for (int w : p) {
      if (w != v && g.has_edge(v, w)) np.push_back(w);
    }
    for (int w : x) {
      if (w != v && g.has_edge(v, w)) nx.push_back(w);
    }
    r.push_back(v);
    bron_kerbosch(g, r, std::move(np), std::move(nx), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

CliqueList maximal_cliques(const PatternGraph& g,
                           const EliminationOrdering& peo) {
  if (!verify_peo(g, peo)) {
    throw NonChordalPattern(
        "ordering is not a perfect elimination ordering; pattern is not "
        "chordal");
  }
  CliqueList candidates;
  for (int i = 0; i < peo.size(); ++i) {
    Clique c = later_neighbors(g, peo, i);
    c.push_back(peo.order[static_cast<std::size_t>(i)]);
    candidates.push_back(std::move(c));
  }
  return keep_maximal(std::move(candidates));
}

CliqueList enumerate_maximal_cliques(const PatternGraph& g) {
  std::vector<int> all(static_cast<std::size_t>(g.size()));
  std::iota(all.begin(), all.end(), 0);
  CliqueList found;
  Clique r;
  bron_kerbosch(g, r, all, {}, found);
  return keep_maximal(std::move(found));
}

bool is_banded(const PatternGraph& g) {
  const int n = g.size();
  // J(i) = farthest neighbor to the right; banded iff every row i is full
  // up to J(i) and J is nondecreasing.
  int prev_reach = 0;
  for (int i = 0; i < n; ++i) {
    int reach = i;
    for (int j = i + 1; j < n; ++j) {
      if (g.has_edge(i, j)) reach = j;
    }
    for (int j = i + 1; j <= reach; ++j) {
      if (!g.has_edge(i, j)) return false;
    }
    if (reach < prev_reach) return false;
    prev_reach = reach;
  }
  return true;
}

PatternMask complement(const PatternGraph& g) {
  PatternMask mask(g.size());
  for (int u = 0; u < g.size(); ++u) {
    for (int v = u; v < g.size(); ++v) {
      if (!g.has_edge(u, v)) mask.insert(u, v);
    }
  }
  return mask;
}

PatternGraph induced_subgraph(const PatternGraph& g,
                              std::span<const int> vertices) {
  const int k = static_cast<int>(vertices.size());
  if (k == 0) throw InvalidArgument("induced subgraph on no vertices");
  PatternGraph sub(k);
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (g.has_edge(vertices[static_cast<std::size_t>(a)],
                     vertices[static_cast<std::size_t>(b)])) {
        sub.add_edge(a, b);
      }
    }
  }
  return sub;
}

ReflexivePart reflexive_part(const DirectedPatternGraph& g) {
  std::vector<int> loops;
  for (int u = 0; u < g.size(); ++u) {
    if (g.has_loop(u)) loops.push_back(u);
  }
  if (loops.empty()) {
    throw InvalidArgument("digraph has no self-looped vertices");
  }
  PatternGraph sub(static_cast<int>(loops.size()));
  for (std::size_t a = 0; a < loops.size(); ++a) {
    for (std::size_t b = a + 1; b < loops.size(); ++b) {
      const bool fwd = g.has_arc(loops[a], loops[b]);
      const bool bwd = g.has_arc(loops[b], loops[a]);
      if (fwd != bwd) {
        throw InvalidArgument("reflexive part is not undirected: arc between " +
                              std::to_string(loops[a] + 1) + " and " +
                              std::to_string(loops[b] + 1) +
                              " is one-directional");
      }
      if (fwd) sub.add_edge(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return {std::move(loops), std::move(sub)};
}

}  // namespace phasecomp
