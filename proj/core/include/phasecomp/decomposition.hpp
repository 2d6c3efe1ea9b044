#pragma once

#include <optional>

#include "phasecomp/cones.hpp"
#include "phasecomp/pattern_graph.hpp"
#include "phasecomp/phases.hpp"

namespace phasecomp {

/// One step of a symmetric elimination: pivot vertex, elimination clique
/// (pivot plus its later neighbors, ascending) and the rank-one term removed.
struct EliminationStep {
  int pivot = 0;
  Clique clique;
  ComplexMatrix factor;  ///< n x n, zero outside clique x clique
  bool skipped = false;  ///< pivot was numerically zero; factor is zero
};

/// Sequential rank-one elimination of a PSD matrix with chordal pattern `g`
/// along `peo`. Pivots below tol * |m| are skipped after checking that their
/// row is null. Throws ConeViolation for negative pivots or a nonzero row
/// behind a zero pivot.
std::vector<EliminationStep> chordal_psd_decompose(const ComplexMatrix& m,
                                                   const PatternGraph& g,
                                                   const EliminationOrdering& peo,
                                                   double tol = kDefaultTol);

struct CliqueSummand {
  Clique clique;
  ComplexMatrix matrix;  ///< n x n, bitwise zero outside clique x clique
};

struct RankOneEntry {
  Clique clique;
  double phi = 0.0;
  ComplexVector t;  ///< indexed like `clique`
};

struct CliqueDecomposition {
  std::vector<CliqueSummand> summands;
  std::optional<std::vector<RankOneEntry>> rank_one;
};

/// Splits c in C[alpha, beta] with chordal pattern g into summands in the
/// same cone, each supported on an elimination clique. With `rank_one`, each
/// summand is further written as a sum of e^{i phi} t t^*.
CliqueDecomposition pb_decompose(const ComplexMatrix& c, const PhaseSector& sec,
                                 const PatternGraph& g,
                                 double tol = kDefaultTol,
                                 bool rank_one = false);

/// Reconstruction to 1e-8 relative, summand support and membership, clique
/// containment in g, and rank-one phases inside the sector.
bool verify_decomposition(const CliqueDecomposition& d, const ComplexMatrix& c,
                          const PhaseSector& sec, const PatternGraph& g,
                          double tol = kDefaultTol);

/// Merges summands by the lowest-index maximal clique of g containing them.
CliqueDecomposition aggregate_by_maximal_clique(const CliqueDecomposition& d,
                                                const PatternGraph& g);

}  // namespace phasecomp
