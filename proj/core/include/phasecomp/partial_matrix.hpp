#pragma once

#include <span>

#include "phasecomp/linalg.hpp"
#include "phasecomp/pattern_graph.hpp"

namespace phasecomp {

/// Complex matrix specified exactly on the positions of an undirected pattern
/// (both orientations of every edge, plus the diagonal). Values need not be
/// Hermitian. Unspecified positions are stored as zero and never read.
class PartialMatrix {
 public:
  PartialMatrix(PatternGraph pattern, const ComplexMatrix& values);

  /// Restriction of a full matrix to `pattern`.
  static PartialMatrix mask(const ComplexMatrix& full, PatternGraph pattern);

  int size() const noexcept { return pattern_.size(); }
  const PatternGraph& pattern() const noexcept { return pattern_; }
  /// Zero outside the pattern.
  const ComplexMatrix& values() const noexcept { return values_; }
  bool specified(int i, int j) const { return pattern_.has_edge(i, j); }

  /// Principal submatrix on a clique of the pattern.
  ComplexMatrix clique_block(std::span<const int> clique) const;

  /// Copy the specified entries into `full`, leaving the rest untouched.
  void overwrite_pattern(ComplexMatrix& full) const;

 private:
  PatternGraph pattern_;
  ComplexMatrix values_;
};

/// Partial matrix over a directed pattern: position (i, j) is specified iff
/// arc i -> j is present. Vertices without a self-loop have a free diagonal.
class DirectedPartialMatrix {
 public:
  DirectedPartialMatrix(DirectedPatternGraph pattern,
                        const ComplexMatrix& values);

  int size() const noexcept { return pattern_.size(); }
  const DirectedPatternGraph& pattern() const noexcept { return pattern_; }
  const ComplexMatrix& values() const noexcept { return values_; }
  bool specified(int i, int j) const { return pattern_.has_arc(i, j); }

  void overwrite_pattern(ComplexMatrix& full) const;

 private:
  DirectedPatternGraph pattern_;
  ComplexMatrix values_;
};

}  // namespace phasecomp
