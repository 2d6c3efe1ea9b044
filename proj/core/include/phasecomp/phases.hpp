#pragma once

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "phasecomp/cones.hpp"
#include "phasecomp/partial_matrix.hpp"

namespace phasecomp {

enum class PhaseClass {
  sectorial,
  quasisectorial,
  semisectorial_parabolic,
  non_semisectorial,
  zero,
};

std::string_view to_string(PhaseClass c);

/// Smallest and largest phase. The representative is chosen so that the
/// midpoint lies in (-pi, pi].
struct PhaseInterval {
  double phi_min = 0.0;
  double phi_max = 0.0;

  double width() const noexcept { return phi_max - phi_min; }
  double center() const noexcept { return 0.5 * (phi_min + phi_max); }
};

/// Extreme phases by scanning the rotation circle (720 points) and bisecting
/// the PSD test of the rotated Hermitian part to 1e-10 rad. Returns nullopt
/// for non-semisectorial input; throws Unsupported for the zero matrix.
std::optional<PhaseInterval> extreme_phases(const ComplexMatrix& c,
                                            double tol = kDefaultTol);

PhaseClass classify(const ComplexMatrix& c, double tol = kDefaultTol);

struct PhaseList {
  std::vector<double> phases;  ///< nonincreasing, one per unit of rank
  PhaseClass classification = PhaseClass::zero;
  double reference_angle = 0.0;  ///< rotation used to make the real part PD
};

/// Full phase list of a sectorial or quasisectorial matrix. Parabolic and
/// non-semisectorial inputs throw Unsupported.
PhaseList phases(const ComplexMatrix& c, double tol = kDefaultTol);

struct RankOneTerm {
  double phi = 0.0;
  ComplexVector t;
};
using RankOneTermList = std::vector<RankOneTerm>;

/// c = sum_k e^{i phi_k} t_k t_k^*, with phi_k the phases of c.
RankOneTermList sectorial_rank_one_terms(const ComplexMatrix& c,
                                         double tol = kDefaultTol);

ComplexMatrix reconstruct(const RankOneTermList& terms, int n);

struct BoundarySample {
  double angle = 0.0;  ///< support direction t_j = 2 pi j / m
  Complex point;       ///< boundary point of the numerical range
};

/// m points x_j^* c x_j with x_j a top eigenvector of the Hermitian part of
/// e^{-i t_j} c. Requires m >= 3.
std::vector<BoundarySample> numerical_range_boundary(const ComplexMatrix& c,
                                                     int m);

/// Width-zero outcome of minimal_sector: all clique phases coincide.
struct PhaseRay {
  double angle = 0.0;
};

using MinimalSector = std::variant<PhaseSector, PhaseRay>;

/// Smallest [alpha, beta] containing the phases of every maximal-clique
/// block, after placing all clique intervals in one common window. Throws
/// ConeViolation for a non-semisectorial clique or when no window of width
/// < pi fits.
MinimalSector minimal_sector(const PartialMatrix& pm, double tol = kDefaultTol);

}  // namespace phasecomp
