#pragma once

#include <optional>
#include <random>

#include "phasecomp/cones.hpp"
#include "phasecomp/partial_matrix.hpp"

namespace phasecomp {

struct PartialMembership {
  bool member = false;
  std::optional<Clique> violating_clique;  ///< set when member is false
};

/// Every maximal-clique principal block lies in C[alpha, beta]. The pattern
/// need not be chordal.
PartialMembership check_partial_membership(const PartialMatrix& pm,
                                           const PhaseSector& sec,
                                           double tol = kDefaultTol);

/// Completability for chordal patterns (clique-wise membership is then
/// necessary and sufficient). Throws NonChordalPattern otherwise.
bool is_completable(const PartialMatrix& pm, const PhaseSector& sec,
                    double tol = kDefaultTol);

/// Central PSD completion of a partially PSD matrix with banded pattern,
/// computed by the staircase fill X-Y-Z with T13 = T12 T22^+ T23.
ComplexMatrix central_psd_completion(const PartialMatrix& hm,
                                     double tol = kDefaultTol);

/// Central completion with triangular factors h_c = l_c^* l_c = r_c^* r_c
/// (l_c lower, r_c upper) and a unitary w_c with r_c = w_c l_c.
struct CentralCompletionData {
  ComplexMatrix h_c;
  ComplexMatrix l_c;
  ComplexMatrix r_c;
  ComplexMatrix w_c;
  PatternGraph pattern{1};
  double tol = kDefaultTol;
};

/// Triangular factors of a PSD matrix via its eigen square root followed by
/// QR (and QL) factorizations; handles singular input.
CentralCompletionData factor_completion(const ComplexMatrix& h_c,
                                        PatternGraph pattern,
                                        double tol = kDefaultTol);

CentralCompletionData build_parameterization(const PartialMatrix& hm,
                                             double tol = kDefaultTol);

/// Throws InvalidArgument unless gamma is strictly upper triangular on the
/// pattern complement, has spectral norm < 1 - tol and vanishes from
/// range(r_c)^perp and onto range(l_c)^perp.
void validate_gamma(const CentralCompletionData& data,
                    const ComplexMatrix& gamma);

/// PSD completion attached to a strict contraction gamma:
///   r_c^* (I + w_c gamma)^{-*} (I - gamma^* gamma) (I + w_c gamma)^{-1} r_c.
/// gamma = 0 returns h_c itself.
ComplexMatrix apply_psd_param(const CentralCompletionData& data,
                              const ComplexMatrix& gamma);

/// Everything needed to enumerate the phase-bounded completions of a
/// partial matrix with banded pattern.
struct PbParameterization {
  PartialMatrix source;
  PhaseSector sector;
  CentralCompletionData alpha_side;  ///< from the m_alpha rotated partial
  CentralCompletionData beta_side;   ///< from the m_beta rotated partial
};

PbParameterization build_pb_parameterization(const PartialMatrix& pm,
                                             const PhaseSector& sec,
                                             double tol = kDefaultTol);

/// (e^{i beta} f(g1) + e^{i alpha} f(g2)) / sin(beta - alpha), with the
/// specified entries copied from the source.
ComplexMatrix apply_pb_param(const PbParameterization& param,
                             const ComplexMatrix& g1, const ComplexMatrix& g2);

/// Same combination from bare completion data; no pattern copy-back.
ComplexMatrix apply_pb_param(const CentralCompletionData& data_alpha,
                             const CentralCompletionData& data_beta,
                             const ComplexMatrix& g1, const ComplexMatrix& g2,
                             const PhaseSector& sec);

/// The completion at (g1, g2) = (0, 0).
ComplexMatrix central_pb_completion(const PartialMatrix& pm,
                                    const PhaseSector& sec,
                                    double tol = kDefaultTol);

/// Vertex-by-vertex fill of a Hermitian partial matrix along the reverse of
/// `peo`: each new vertex v is joined to the completed block through
/// m(v, Z) = m(v, N) m(N)^+ m(N, Z), N = later neighbors of v.
ComplexMatrix fill_hermitian_chordal(const ComplexMatrix& partial,
                                     const PatternGraph& g,
                                     const EliminationOrdering& peo,
                                     double tol = kDefaultTol);

/// Chordal fill of both rotated components without the membership
/// precondition. The result agrees with pm on the pattern; it lies in the
/// cone only when pm is completable.
ComplexMatrix complete_chordal_unchecked(const PartialMatrix& pm,
                                         const PhaseSector& sec,
                                         double tol = kDefaultTol);

/// Completion in C[alpha, beta] for any chordal pattern.
ComplexMatrix complete_chordal(const PartialMatrix& pm, const PhaseSector& sec,
                               double tol = kDefaultTol);

/// Completion into the open cone for a digraph pattern whose reflexive part
/// is undirected and chordal, each reflexive clique strictly inside.
ComplexMatrix complete_asymmetric(const DirectedPartialMatrix& pm,
                                  const PhaseSector& sec,
                                  double tol = kDefaultTol);

/// Random strictly upper triangular gamma supported on the complement of g,
/// scaled to spectral norm `norm` (zero if the complement is empty).
ComplexMatrix random_gamma(const PatternGraph& g, std::mt19937_64& rng,
                           double norm = 0.5);

}  // namespace phasecomp
