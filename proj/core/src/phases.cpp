#include "phasecomp/phases.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "phasecomp/errors.hpp"

namespace phasecomp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kScanPoints = 720;
constexpr double kAngleTol = 1e-10;

// Orthonormal basis of range(c) together with the compression onto it. For a
// semisectorial matrix ker(c) = ker(c^*), so x^* c x only sees the
// compression and the extreme phases can be read off a nonsingular block.
struct RangeCompression {
  int rank = 0;
  ComplexMatrix basis;
  ComplexMatrix compressed;
  bool kernels_match = true;
};

RangeCompression compress(const ComplexMatrix& c, double tol) {
  const Eigen::Index n = c.rows();
  Eigen::JacobiSVD<ComplexMatrix> svd(c, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RealVector& s = svd.singularValues();
  RangeCompression out;
  while (out.rank < n && s(out.rank) > tol * s(0)) ++out.rank;
  out.basis = svd.matrixU().leftCols(out.rank);
  out.compressed = out.basis.adjoint() * c * out.basis;
  if (out.rank < n) {
    const ComplexMatrix kernel = svd.matrixV().rightCols(n - out.rank);
    const double leak = linalg::spectral_norm(c.adjoint() * kernel) / s(0);
    out.kernels_match = leak <= std::sqrt(tol);
  }
  return out;
}

// lambda_min of the rotated imaginary part -sin(a) H + cos(a) S along the
// circle; a is feasible iff every point of W(c) has argument in [a, a + pi].
class RotationScan {
 public:
  explicit RotationScan(const ComplexMatrix& c) {
    const RealifiedPair p = toeplitz_decompose(c);
    h_ = p.h;
    s_ = p.s;
  }

  ComplexMatrix at(double a) const { return -std::sin(a) * h_ + std::cos(a) * s_; }
  double margin(double a) const { return psd_margin(at(a)); }
  bool feasible(double a, double tol) const { return margin(a) >= -tol; }

  // d/da lambda_min, valid where the smallest eigenvalue is simple.
  double slope(double a) const {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(at(a));
    const ComplexVector v = es.eigenvectors().col(0);
    const ComplexMatrix d = -std::cos(a) * h_ - std::sin(a) * s_;
    return (v.adjoint() * d * v)(0, 0).real();
  }

 private:
  ComplexMatrix h_;
  ComplexMatrix s_;
};

double refine_peak(const RotationScan& scan, double a0, double h) {
  double lo = a0 - h, hi = a0 + h;
  double best = a0;
  if (scan.slope(lo) > 0.0 && scan.slope(hi) < 0.0) {
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
      const double mid = 0.5 * (lo + hi);
      (scan.slope(mid) > 0.0 ? lo : hi) = mid;
    }
    best = 0.5 * (lo + hi);
  } else {
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
    double f1 = scan.margin(x1), f2 = scan.margin(x2);
    for (int it = 0; it < 120 && hi - lo > 1e-15; ++it) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + g * (hi - lo);
        f2 = scan.margin(x2);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - g * (hi - lo);
        f1 = scan.margin(x1);
      }
    }
    best = 0.5 * (lo + hi);
  }
  return scan.margin(best) >= scan.margin(a0) ? best : a0;
}

// Last feasible angle walking from `start` in direction `dir` (+1 or -1).
double arc_end(const RotationScan& scan, double start, int dir, double step,
               double tol) {
  double inside = start;
  double outside = start;
  bool closed = false;
  for (int k = 0; k < kScanPoints; ++k) {
    const double next = inside + dir * step;
    if (!scan.feasible(next, tol)) {
      outside = next;
      closed = true;
      break;
    }
    inside = next;
  }
  if (!closed) {
    throw Unsupported("rotation test feasible on the whole circle");
  }
  while (std::abs(outside - inside) > kAngleTol * 1e-2) {
    const double mid = 0.5 * (inside + outside);
    (scan.feasible(mid, tol) ? inside : outside) = mid;
  }
  return inside;
}

PhaseInterval normalized(PhaseInterval iv) {
  const double k = std::ceil((iv.center() - kPi) / (2.0 * kPi));
  iv.phi_min -= 2.0 * kPi * k;
  iv.phi_max -= 2.0 * kPi * k;
  return iv;
}

struct Analysis {
  PhaseClass cls = PhaseClass::zero;
  std::optional<PhaseInterval> extremes;
  RangeCompression range;
};

Analysis analyze(const ComplexMatrix& c, double tol) {
  if (c.rows() != c.cols()) throw InvalidArgument("matrix is not square");
  if (!c.allFinite()) throw InvalidArgument("matrix has non-finite entries");
  if (tol < 0.0) throw InvalidArgument("tolerance must be nonnegative");
  Analysis out;
  if (c.size() == 0 || c.cwiseAbs().maxCoeff() == 0.0) return out;

  const ComplexMatrix unit = c / linalg::spectral_norm(c);
  out.range = compress(unit, tol);
  if (!out.range.kernels_match) {
    out.cls = PhaseClass::non_semisectorial;
    return out;
  }

  const RotationScan scan(out.range.compressed);
  const double step = 2.0 * kPi / kScanPoints;
  double best_angle = -kPi;
  double best_margin = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < kScanPoints; ++k) {
    const double a = -kPi + k * step;
    const double m = scan.margin(a);
    if (m > best_margin) {
      best_margin = m;
      best_angle = a;
    }
  }
  const double peak = refine_peak(scan, best_angle, step);
  const double peak_margin = scan.margin(peak);
  if (peak_margin < -tol) {
    out.cls = PhaseClass::non_semisectorial;
    return out;
  }

  PhaseInterval iv;
  if (peak_margin <= tol) {
    // Feasible set collapses to a point: the angular numerical range is a
    // half-plane, so the extreme phases sit pi apart.
    iv = {peak, peak + kPi};
    out.cls = PhaseClass::semisectorial_parabolic;
  } else {
    // The peak is strictly feasible here, so the arc ends are located with
    // the exact sign test; a tolerance would shift them by tol / slope.
    const double upper = arc_end(scan, peak, +1, step, 0.0);
    const double lower = arc_end(scan, peak, -1, step, 0.0);
    iv = {upper, lower + kPi};
    if (iv.phi_max < iv.phi_min) {
      // tolerance widened a width-zero arc
      const double mid = iv.center();
      iv = {mid, mid};
    }
    out.cls = PhaseClass::quasisectorial;
    if (out.range.rank == c.rows()) {
      const ComplexMatrix rotated = std::polar(1.0, -iv.center()) * unit;
      if (is_pd(toeplitz_decompose(rotated).h, tol)) {
        out.cls = PhaseClass::sectorial;
      }
    }
  }
  out.extremes = normalized(iv);
  return out;
}

struct SpectralSplit {
  PhaseClass cls = PhaseClass::zero;
  double theta = 0.0;
  ComplexMatrix basis;     // n x r
  ComplexMatrix sqrt_a;    // A^{1/2}
  RealVector mu;           // ascending eigenvalues of A^{-1/2} B A^{-1/2}
  ComplexMatrix vectors;   // matching eigenvectors
};

SpectralSplit split(const ComplexMatrix& c, double tol) {
  const Analysis an = analyze(c, tol);
  switch (an.cls) {
    case PhaseClass::sectorial:
    case PhaseClass::quasisectorial:
      break;
    case PhaseClass::zero:
      throw Unsupported("phases of the zero matrix are not representable");
    case PhaseClass::semisectorial_parabolic:
      throw Unsupported(
          "matrix has a parabolic congruence block; only its extreme phases "
          "are available");
    case PhaseClass::non_semisectorial:
      throw Unsupported("matrix is not semisectorial; phases are undefined");
  }
  SpectralSplit out;
  out.cls = an.cls;
  out.theta = an.extremes->center();
  out.basis = an.range.basis;
  const ComplexMatrix compressed = out.basis.adjoint() * c * out.basis;
  const RealifiedPair ab = toeplitz_decompose(std::polar(1.0, -out.theta) * compressed);

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> ea(ab.h);
  const RealVector& w = ea.eigenvalues();
  if (!(w(0) > tol * w(w.size() - 1))) {
    throw Unsupported("rotated Hermitian part is not positive definite");
  }
  const ComplexMatrix& q = ea.eigenvectors();
  const RealVector root = w.cwiseSqrt();
  out.sqrt_a = q * root.cast<Complex>().asDiagonal() * q.adjoint();
  const ComplexMatrix inv_root =
      q * root.cwiseInverse().cast<Complex>().asDiagonal() * q.adjoint();
  ComplexMatrix k = inv_root * ab.s * inv_root;
  k = (k + k.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> ek(k);
  out.mu = ek.eigenvalues();
  out.vectors = ek.eigenvectors();
  return out;
}

}  // namespace

std::string_view to_string(PhaseClass c) {
  switch (c) {
    case PhaseClass::sectorial: return "sectorial";
    case PhaseClass::quasisectorial: return "quasisectorial";
    case PhaseClass::semisectorial_parabolic: return "semisectorial-parabolic";
    case PhaseClass::non_semisectorial: return "non-semisectorial";
    case PhaseClass::zero: return "zero";
  }
  return "unknown";
}

std::optional<PhaseInterval> extreme_phases(const ComplexMatrix& c, double tol) {
  const Analysis an = analyze(c, tol);
  if (an.cls == PhaseClass::zero) {
    throw Unsupported("extreme phases of the zero matrix are +-infinity");
  }
  return an.extremes;
}

PhaseClass classify(const ComplexMatrix& c, double tol) {
  return analyze(c, tol).cls;
}

PhaseList phases(const ComplexMatrix& c, double tol) {
  const SpectralSplit sp = split(c, tol);
  PhaseList out;
  out.reference_angle = sp.theta;
  out.classification = sp.cls;
  for (Eigen::Index k = sp.mu.size() - 1; k >= 0; --k) {
    out.phases.push_back(sp.theta + std::atan(sp.mu(k)));
  }
  return out;
}

RankOneTermList sectorial_rank_one_terms(const ComplexMatrix& c, double tol) {
  const SpectralSplit sp = split(c, tol);
  RankOneTermList out;
  for (Eigen::Index k = sp.mu.size() - 1; k >= 0; --k) {
    const double mu = sp.mu(k);
    const double scale = std::pow(1.0 + mu * mu, 0.25);
    out.push_back({sp.theta + std::atan(mu),
                   scale * (sp.basis * (sp.sqrt_a * sp.vectors.col(k)))});
  }
  return out;
}

ComplexMatrix reconstruct(const RankOneTermList& terms, int n) {
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (const auto& term : terms) {
    if (term.t.size() != n) throw InvalidArgument("term has wrong length");
    out += std::polar(1.0, term.phi) * (term.t * term.t.adjoint());
  }
  return out;
}

std::vector<BoundarySample> numerical_range_boundary(const ComplexMatrix& c,
                                                     int m) {
  if (m < 3) throw InvalidArgument("need at least 3 boundary samples");
  if (c.rows() != c.cols() || c.size() == 0) {
    throw InvalidArgument("matrix must be square and nonempty");
  }
  std::vector<BoundarySample> out;
  out.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    const double t = 2.0 * kPi * j / m;
    const ComplexMatrix rotated = std::polar(1.0, -t) * c;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(toeplitz_decompose(rotated).h);
    const ComplexVector x = es.eigenvectors().col(es.eigenvalues().size() - 1);
    out.push_back({t, (x.adjoint() * c * x)(0, 0)});
  }
  return out;
}

MinimalSector minimal_sector(const PartialMatrix& pm, double tol) {
  std::vector<PhaseInterval> intervals;
  for (const Clique& k : enumerate_maximal_cliques(pm.pattern())) {
    const ComplexMatrix block = pm.clique_block(k);
    const Analysis an = analyze(block, tol);
    if (an.cls == PhaseClass::zero) continue;
    if (!an.extremes) {
      throw ConeViolation("clique block is not semisectorial", k);
    }
    intervals.push_back(*an.extremes);
  }
  if (intervals.empty()) {
    throw Unsupported("every clique block is zero; no sector is determined");
  }

  // Anchor the window at each interval's lower end and lift the others
  // above it by multiples of 2 pi; the narrowest window wins.
  double best_lo = 0.0, best_hi = 0.0;
  double best_width = std::numeric_limits<double>::infinity();
  for (const auto& anchor : intervals) {
    double lo = anchor.phi_min, hi = anchor.phi_max;
    for (const auto& iv : intervals) {
      const double lift =
          2.0 * kPi * std::ceil((anchor.phi_min - iv.phi_min - 1e-12) / (2.0 * kPi));
      lo = std::min(lo, iv.phi_min + lift);
      hi = std::max(hi, iv.phi_max + lift);
    }
    if (hi - lo < best_width) {
      best_width = hi - lo;
      best_lo = lo;
      best_hi = hi;
    }
  }
  if (best_width >= kPi) {
    throw ConeViolation(
        "clique phases do not fit in a window of width less than pi");
  }
  const PhaseInterval iv = normalized({best_lo, best_hi});
  if (iv.width() <= std::max(10.0 * tol, 1e-12)) return PhaseRay{iv.center()};
  return PhaseSector(iv.phi_min, iv.phi_max);
}

}  // namespace phasecomp
