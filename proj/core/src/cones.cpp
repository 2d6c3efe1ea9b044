#include "phasecomp/cones.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "phasecomp/errors.hpp"

namespace phasecomp {

namespace {

constexpr double kWidthSlack = 1e-14;

void check_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidArgument("matrix pair has mismatched shapes");
  }
}

double trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  // Re Tr(a* b)
  return (a.conjugate().cwiseProduct(b)).sum().real();
}

}  // namespace

PhaseSector::PhaseSector(double alpha, double beta)
    : alpha_(alpha), beta_(beta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta)) {
    throw InvalidArgument("sector bounds must be finite");
  }
  const double w = beta - alpha;
  if (std::abs(w) <= kWidthSlack || std::abs(w - std::numbers::pi) <= kWidthSlack) {
    throw DegenerateSector(
        "sector width beta - alpha = " + std::to_string(w) +
        " is degenerate (0 or pi); use a plain PSD routine on e^{-i alpha} C");
  }
  if (w < 0.0 || w > std::numbers::pi) {
    throw InvalidArgument("sector must satisfy 0 < beta - alpha < pi (got " +
                          std::to_string(w) + ")");
  }
}

RealifiedPair toeplitz_decompose(const ComplexMatrix& c) {
  if (c.rows() != c.cols()) throw InvalidArgument("matrix is not square");
  const ComplexMatrix adj = c.adjoint();
  // multiply by -i/2 rather than divide by 2i so that s is exactly Hermitian
  return {(c + adj) * 0.5, (c - adj) * Complex(0.0, -0.5)};
}

ComplexMatrix complexify(const RealifiedPair& p) {
  check_same_shape(p.h, p.s);
  return linalg::symmetrized(p.h, "h") +
         Complex(0.0, 1.0) * linalg::symmetrized(p.s, "s");
}

RotatedPair rotate_pair(const RealifiedPair& p, const PhaseSector& sec) {
  check_same_shape(p.h, p.s);
  const double sa = std::sin(sec.alpha()), ca = std::cos(sec.alpha());
  const double sb = std::sin(sec.beta()), cb = std::cos(sec.beta());
  return {-sa * p.h + ca * p.s, sb * p.h - cb * p.s};
}

RealifiedPair rotate_pair_inverse(const RotatedPair& r, const PhaseSector& sec) {
  check_same_shape(r.m_alpha, r.m_beta);
  // [[-sa, ca], [sb, -cb]]^{-1} = [[cb, ca], [sb, sa]] / sin(beta - alpha)
  const double sa = std::sin(sec.alpha()), ca = std::cos(sec.alpha());
  const double sb = std::sin(sec.beta()), cb = std::cos(sec.beta());
  const double d = std::sin(sec.width());
  return {(cb * r.m_alpha + ca * r.m_beta) / d,
          (sb * r.m_alpha + sa * r.m_beta) / d};
}

RotatedPair rotate(const ComplexMatrix& c, const PhaseSector& sec) {
  return rotate_pair(toeplitz_decompose(c), sec);
}

ComplexMatrix combine_rotated(const ComplexMatrix& m_alpha,
                              const ComplexMatrix& m_beta,
                              const PhaseSector& sec) {
  check_same_shape(m_alpha, m_beta);
  const Complex eb = std::polar(1.0, sec.beta());
  const Complex ea = std::polar(1.0, sec.alpha());
  return (eb * m_alpha + ea * m_beta) / std::sin(sec.width());
}

double psd_margin(const ComplexMatrix& m) {
  const ComplexMatrix h = linalg::symmetrized(m);
  if (h.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  const RealVector& w = es.eigenvalues();
  const double norm = std::max(std::abs(w(0)), std::abs(w(w.size() - 1)));
  return w(0) / std::max(1.0, norm);
}

bool is_psd(const ComplexMatrix& m, double tol) {
  if (tol < 0.0) throw InvalidArgument("tolerance must be nonnegative");
  return psd_margin(m) >= -tol;
}

bool is_pd(const ComplexMatrix& m, double tol) {
  if (tol < 0.0) throw InvalidArgument("tolerance must be nonnegative");
  return psd_margin(m) > tol;
}

bool in_phase_cone(const ComplexMatrix& c, const PhaseSector& sec, double tol) {
  const RotatedPair r = rotate(c, sec);
  return is_psd(r.m_alpha, tol) && is_psd(r.m_beta, tol);
}

bool in_strict_phase_cone(const ComplexMatrix& c, const PhaseSector& sec,
                          double tol) {
  const RotatedPair r = rotate(c, sec);
  return is_pd(r.m_alpha, tol) && is_pd(r.m_beta, tol);
}

double inner_product(const RealifiedPair& p1, const RealifiedPair& p2,
                     const PhaseSector& sec) {
  check_same_shape(p1.h, p2.h);
  const RotatedPair r1 = rotate_pair(p1, sec);
  const RotatedPair r2 = rotate_pair(p2, sec);
  return trace_product(r1.m_alpha, r2.m_alpha) +
         trace_product(r1.m_beta, r2.m_beta);
}

}  // namespace phasecomp
