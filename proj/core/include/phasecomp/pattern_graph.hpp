#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace phasecomp {

using Edge = std::pair<int, int>;
using Clique = std::vector<int>;
using CliqueList = std::vector<Clique>;

/// Undirected sparsity pattern on vertices 0..n-1. Every vertex carries a
/// self-loop; edges are unordered pairs.
class PatternGraph {
 public:
  explicit PatternGraph(int n);
  PatternGraph(int n, std::span<const Edge> edges);

  static PatternGraph complete(int n);
  static PatternGraph path(int n);
  static PatternGraph cycle(int n);
  /// Band of half-width `bandwidth`: {i,j} is an edge iff |i-j| <= bandwidth.
  static PatternGraph banded(int n, int bandwidth);

  int size() const noexcept { return n_; }
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);

  /// Neighbors of u other than u itself, ascending.
  std::vector<int> neighbors(int u) const;
  /// Off-diagonal edges {u,v} with u < v, lexicographic.
  std::vector<Edge> edges() const;

  friend bool operator==(const PatternGraph&, const PatternGraph&) = default;

 private:
  void check_vertex(int u) const;

  int n_;
  std::vector<char> adj_;
};

/// Mask of unordered positions; unlike PatternGraph it need not contain
/// self-loops. Used for the complement of a pattern.
class PatternMask {
 public:
  explicit PatternMask(int n);

  int size() const noexcept { return n_; }
  bool contains(int u, int v) const;
  void insert(int u, int v);
  /// Pairs {u,v} with u <= v, lexicographic.
  std::vector<Edge> pairs() const;
  bool empty() const;

 private:
  int n_;
  std::vector<char> adj_;
};

/// Directed pattern: arcs are ordered pairs, self-loops are explicit.
class DirectedPatternGraph {
 public:
  explicit DirectedPatternGraph(int n);
  DirectedPatternGraph(int n, std::span<const Edge> arcs);

  int size() const noexcept { return n_; }
  bool has_arc(int u, int v) const;
  bool has_loop(int u) const { return has_arc(u, u); }
  void add_arc(int u, int v);
  std::vector<Edge> arcs() const;

 private:
  int n_;
  std::vector<char> adj_;
};

/// An ordering of the vertices: order[i] is the vertex eliminated at step i.
struct EliminationOrdering {
  std::vector<int> order;

  int size() const noexcept { return static_cast<int>(order.size()); }
  /// position()[v] = step at which v is eliminated.
  std::vector<int> position() const;
  bool is_permutation_of(int n) const;

  static EliminationOrdering identity(int n);
};

struct ChordalityResult {
  bool chordal = false;
  std::optional<EliminationOrdering> peo;
};

/// Maximum-cardinality search with lowest-index tie-breaking. Returns the
/// visit order reversed, which is a perfect elimination ordering exactly
/// when the graph is chordal.
EliminationOrdering max_cardinality_search(const PatternGraph& g);

ChordalityResult is_chordal(const PatternGraph& g);

/// True iff, for every step i, the neighbors of order[i] among the vertices
/// eliminated later are pairwise adjacent.
bool verify_peo(const PatternGraph& g, const EliminationOrdering& peo);

/// Vertices eliminated after `step` that are adjacent to order[step],
/// ascending by vertex index.
std::vector<int> later_neighbors(const PatternGraph& g,
                                 const EliminationOrdering& peo, int step);

/// Maximal cliques of a chordal graph read off a PEO. Throws
/// NonChordalPattern when `peo` is not a perfect elimination ordering.
CliqueList maximal_cliques(const PatternGraph& g,
                           const EliminationOrdering& peo);

/// Maximal cliques of an arbitrary pattern (Bron-Kerbosch with pivoting).
/// Only intended for the small patterns handled by the membership checks.
CliqueList enumerate_maximal_cliques(const PatternGraph& g);

bool is_banded(const PatternGraph& g);

PatternMask complement(const PatternGraph& g);

/// Subgraph induced by `vertices`, relabelled 0..k-1 in the given order.
PatternGraph induced_subgraph(const PatternGraph& g,
                              std::span<const int> vertices);

bool is_clique(const PatternGraph& g, std::span<const int> vertices);

struct ReflexivePart {
  std::vector<int> vertices;  ///< self-looped vertices, ascending
  PatternGraph subgraph;      ///< induced undirected pattern, relabelled
};

/// Throws InvalidArgument when arcs among self-looped vertices are not
/// symmetric.
ReflexivePart reflexive_part(const DirectedPatternGraph& g);

}  // namespace phasecomp
