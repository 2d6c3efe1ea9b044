#pragma once

#include "phasecomp/linalg.hpp"

namespace phasecomp {

/// The pair (alpha, beta) bounding the phase-bounded cone C[alpha, beta].
/// Construction enforces 0 < beta - alpha < pi; the two degenerate widths
/// {0, pi} raise DegenerateSector (they reduce to ordinary PSD problems).
class PhaseSector {
 public:
  PhaseSector(double alpha, double beta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double width() const noexcept { return beta_ - alpha_; }
  double center() const noexcept { return 0.5 * (alpha_ + beta_); }

 private:
  double alpha_;
  double beta_;
};

/// Toeplitz realification C = H + iS with H, S Hermitian.
struct RealifiedPair {
  ComplexMatrix h;
  ComplexMatrix s;
};

/// Image of a RealifiedPair under the rotation map of a sector:
///   m_alpha = -sin(alpha) H + cos(alpha) S
///   m_beta  =  sin(beta)  H - cos(beta)  S
/// C lies in C[alpha, beta] iff both are PSD.
struct RotatedPair {
  ComplexMatrix m_alpha;
  ComplexMatrix m_beta;
};

RealifiedPair toeplitz_decompose(const ComplexMatrix& c);

/// h + i s. Inputs that are Hermitian up to kHermitianSlack are symmetrized;
/// anything worse throws InvalidArgument.
ComplexMatrix complexify(const RealifiedPair& p);

RotatedPair rotate_pair(const RealifiedPair& p, const PhaseSector& sec);
RealifiedPair rotate_pair_inverse(const RotatedPair& r, const PhaseSector& sec);

/// Shorthand for rotate_pair(toeplitz_decompose(c), sec).
RotatedPair rotate(const ComplexMatrix& c, const PhaseSector& sec);

/// (e^{i beta} m_alpha + e^{i alpha} m_beta) / sin(beta - alpha), i.e.
/// complexify(rotate_pair_inverse({m_alpha, m_beta}, sec)) in closed form.
ComplexMatrix combine_rotated(const ComplexMatrix& m_alpha,
                              const ComplexMatrix& m_beta,
                              const PhaseSector& sec);

/// lambda_min(m) / max(1, |m|_2) for Hermitian m.
double psd_margin(const ComplexMatrix& m);

/// lambda_min(m) >= -tol * max(1, |m|_2). Throws on non-Hermitian input.
bool is_psd(const ComplexMatrix& m, double tol = kDefaultTol);

/// lambda_min(m) > tol * max(1, |m|_2).
bool is_pd(const ComplexMatrix& m, double tol = kDefaultTol);

bool in_phase_cone(const ComplexMatrix& c, const PhaseSector& sec,
                   double tol = kDefaultTol);

/// Both rotated components positive definite (open cone).
bool in_strict_phase_cone(const ComplexMatrix& c, const PhaseSector& sec,
                          double tol = kDefaultTol);

/// <p1, p2>_{alpha,beta}: trace inner product of the rotated images, summed
/// over both components. Real by construction.
double inner_product(const RealifiedPair& p1, const RealifiedPair& p2,
                     const PhaseSector& sec);

}  // namespace phasecomp
