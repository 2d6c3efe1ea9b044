#include "phasecomp/completion.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "phasecomp/errors.hpp"

namespace phasecomp {

namespace {

std::vector<int> iota_range(int first, int last) {  // [first, last)
  std::vector<int> v;
  for (int i = first; i < last; ++i) v.push_back(i);
  return v;
}

void write_block(ComplexMatrix& m, std::span<const int> rows,
                 std::span<const int> cols, const ComplexMatrix& b) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      m(rows[i], cols[j]) = b(static_cast<Eigen::Index>(i),
                              static_cast<Eigen::Index>(j));
    }
  }
}

// Hermitian off-diagonal block pair: m(rows, cols) = b, m(cols, rows) = b^*.
void write_hermitian_block(ComplexMatrix& m, std::span<const int> rows,
                           std::span<const int> cols, const ComplexMatrix& b) {
  write_block(m, rows, cols, b);
  write_block(m, cols, rows, b.adjoint());
}

ComplexMatrix checked_hermitian_values(const PartialMatrix& hm) {
  try {
    return linalg::symmetrized(hm.values(), "partial matrix");
  } catch (const InvalidArgument&) {
    throw InvalidArgument(
        "partial matrix is not Hermitian on its specified entries");
  }
}

void require_psd_cliques(const ComplexMatrix& values, const PatternGraph& g,
                         double tol) {
  for (const Clique& k : enumerate_maximal_cliques(g)) {
    if (!is_psd(linalg::principal(values, k), tol)) {
      throw ConeViolation("clique block is not positive semidefinite", k);
    }
  }
}

// Unit-modulus phase that rotates z onto the nonnegative real axis.
Complex unphase(Complex z) {
  const double a = std::abs(z);
  return a > 0.0 ? std::conj(z) / a : Complex(1.0, 0.0);
}

void require_square(const ComplexMatrix& m, int n, const char* what) {
  if (m.rows() != n || m.cols() != n) {
    throw InvalidArgument(std::string(what) + " has the wrong dimensions");
  }
}

}  // namespace

PartialMembership check_partial_membership(const PartialMatrix& pm,
                                           const PhaseSector& sec,
                                           double tol) {
  for (const Clique& k : enumerate_maximal_cliques(pm.pattern())) {
    if (!in_phase_cone(pm.clique_block(k), sec, tol)) return {false, k};
  }
  return {true, std::nullopt};
}

bool is_completable(const PartialMatrix& pm, const PhaseSector& sec,
                    double tol) {
  if (!is_chordal(pm.pattern()).chordal) {
    throw NonChordalPattern(
        "completability is only decided for chordal patterns; complete a "
        "chordal extension instead");
  }
  return check_partial_membership(pm, sec, tol).member;
}

ComplexMatrix central_psd_completion(const PartialMatrix& hm, double tol) {
  const PatternGraph& g = hm.pattern();
  if (!is_banded(g)) {
    throw InvalidArgument("central completion requires a banded pattern");
  }
  ComplexMatrix h = checked_hermitian_values(hm);
  require_psd_cliques(h, g, tol);

  const int n = g.size();
  // 1-based staircase bookkeeping; jmax[i] is the last column of row i.
  std::vector<int> jmax(n + 1, 0);
  int l0 = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = n; j >= 1; --j) {
      if (g.has_edge(i - 1, j - 1)) {
        jmax[i] = j;
        break;
      }
    }
    if (jmax[i] > jmax[i - 1] && i >= 2) {
      const int x = i;
      const int y = jmax[l0];
      const int z = jmax[i];
      l0 = i;
      const std::vector<int> xs = iota_range(0, x - 1);
      const std::vector<int> ys = iota_range(x - 1, y);
      const std::vector<int> zs = iota_range(y, z);
      ComplexMatrix t13;
      if (!ys.empty()) {
        const ComplexMatrix t22 = linalg::principal(h, ys);
        t13 = linalg::block(h, xs, ys) * linalg::hermitian_pinv(t22, tol) *
              linalg::block(h, ys, zs);
      } else {
        t13 = ComplexMatrix::Zero(static_cast<Eigen::Index>(xs.size()),
                                  static_cast<Eigen::Index>(zs.size()));
      }
      write_hermitian_block(h, xs, zs, t13);
    }
  }
  return h;
}

CentralCompletionData factor_completion(const ComplexMatrix& h_c,
                                        PatternGraph pattern, double tol) {
  const int n = pattern.size();
  require_square(h_c, n, "central completion");
  const ComplexMatrix h = linalg::symmetrized(h_c, "central completion");

  CentralCompletionData d;
  d.h_c = h;
  d.pattern = std::move(pattern);
  d.tol = tol;
  d.l_c = ComplexMatrix::Zero(n, n);
  d.r_c = ComplexMatrix::Zero(n, n);
  d.w_c = ComplexMatrix::Identity(n, n);
  if (n == 0) return d;

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  const RealVector& lam = es.eigenvalues();
  const double lmax = std::max(lam.cwiseAbs().maxCoeff(), 0.0);
  std::vector<int> keep;
  for (int k = n - 1; k >= 0; --k) {
    if (lam(k) > tol * lmax) keep.push_back(k);
  }
  const int r = static_cast<int>(keep.size());
  if (r == 0) return d;

  // Square root rows: h = s^* s with s of size r x n.
  ComplexMatrix s(r, n);
  for (int k = 0; k < r; ++k) {
    s.row(k) = std::sqrt(lam(keep[k])) * es.eigenvectors().col(keep[k]).adjoint();
  }
  const ComplexMatrix rev = ComplexMatrix::Identity(n, n).rowwise().reverse();

  Eigen::HouseholderQR<ComplexMatrix> qr_r(s);
  Eigen::HouseholderQR<ComplexMatrix> qr_l(s * rev);
  const ComplexMatrix q_r = qr_r.householderQ() * ComplexMatrix::Identity(r, r);
  const ComplexMatrix q_l = qr_l.householderQ() * ComplexMatrix::Identity(r, r);

  ComplexMatrix r_c = ComplexMatrix::Zero(n, n);
  r_c.topRows(r) = qr_r.matrixQR().topRows(r).triangularView<Eigen::Upper>();
  ComplexMatrix l_rev = ComplexMatrix::Zero(n, n);
  l_rev.topRows(r) = qr_l.matrixQR().topRows(r).triangularView<Eigen::Upper>();
  ComplexMatrix l_c = rev * l_rev * rev;

  ComplexMatrix link = ComplexMatrix::Identity(n, n);
  link.topLeftCorner(r, r) = q_r.adjoint() * q_l;
  ComplexMatrix w_c = link * rev;

  // Fix the diagonal phases of both factors; w_c absorbs the change.
  Eigen::VectorXcd d1(n), d2(n);
  for (int i = 0; i < n; ++i) {
    d1(i) = unphase(r_c(i, i));
    d2(i) = unphase(l_c(i, i));
  }
  r_c = d1.asDiagonal() * r_c;
  l_c = d2.asDiagonal() * l_c;
  w_c = d1.asDiagonal() * w_c * d2.conjugate().asDiagonal();

  d.r_c = std::move(r_c);
  d.l_c = std::move(l_c);
  d.w_c = std::move(w_c);
  return d;
}

CentralCompletionData build_parameterization(const PartialMatrix& hm,
                                             double tol) {
  return factor_completion(central_psd_completion(hm, tol), hm.pattern(), tol);
}

void validate_gamma(const CentralCompletionData& data,
                    const ComplexMatrix& gamma) {
  const int n = data.pattern.size();
  require_square(gamma, n, "gamma");
  const double tol = data.tol;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (gamma(i, j) == Complex(0.0, 0.0)) continue;
      if (j <= i || data.pattern.has_edge(i, j)) {
        throw InvalidArgument(
            "gamma must be strictly upper triangular and vanish on the "
            "pattern (entry " + std::to_string(i + 1) + "," +
            std::to_string(j + 1) + ")");
      }
    }
  }
  const double norm = linalg::spectral_norm(gamma);
  if (norm >= 1.0 - tol) {
    throw InvalidArgument("gamma must be a strict contraction (norm " +
                          std::to_string(norm) + ")");
  }
  if (norm == 0.0) return;
  const ComplexMatrix eye = ComplexMatrix::Identity(n, n);
  const double slack = std::max(1e3 * tol, 1e-12);
  const ComplexMatrix p_r = linalg::range_projector(data.r_c, tol);
  const ComplexMatrix p_l = linalg::range_projector(data.l_c, tol);
  if (linalg::spectral_norm(gamma * (eye - p_r)) > slack ||
      linalg::spectral_norm((eye - p_l) * gamma) > slack) {
    throw InvalidArgument(
        "gamma is not compatible with the range of the singular central "
        "completion");
  }
}

ComplexMatrix apply_psd_param(const CentralCompletionData& data,
                              const ComplexMatrix& gamma) {
  validate_gamma(data, gamma);
  if (gamma.isZero(0.0)) return data.h_c;
  const int n = data.pattern.size();
  const ComplexMatrix eye = ComplexMatrix::Identity(n, n);
  const ComplexMatrix y =
      (eye + data.w_c * gamma).partialPivLu().solve(data.r_c);
  ComplexMatrix f = y.adjoint() * (eye - gamma.adjoint() * gamma) * y;
  f = (f + f.adjoint()) * 0.5;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (data.pattern.has_edge(i, j)) f(i, j) = data.h_c(i, j);
    }
  }
  return f;
}

PbParameterization build_pb_parameterization(const PartialMatrix& pm,
                                             const PhaseSector& sec,
                                             double tol) {
  if (!is_banded(pm.pattern())) {
    throw InvalidArgument("parameterization requires a banded pattern");
  }
  const PartialMembership mem = check_partial_membership(pm, sec, tol);
  if (!mem.member) {
    throw ConeViolation("clique block is not in the phase-bounded cone",
                        *mem.violating_clique);
  }
  const RotatedPair rp = rotate(pm.values(), sec);
  return PbParameterization{
      pm, sec,
      build_parameterization(PartialMatrix(pm.pattern(), rp.m_alpha), tol),
      build_parameterization(PartialMatrix(pm.pattern(), rp.m_beta), tol)};
}

ComplexMatrix apply_pb_param(const CentralCompletionData& data_alpha,
                             const CentralCompletionData& data_beta,
                             const ComplexMatrix& g1, const ComplexMatrix& g2,
                             const PhaseSector& sec) {
  return combine_rotated(apply_psd_param(data_alpha, g1),
                         apply_psd_param(data_beta, g2), sec);
}

ComplexMatrix apply_pb_param(const PbParameterization& param,
                             const ComplexMatrix& g1,
                             const ComplexMatrix& g2) {
  ComplexMatrix c =
      apply_pb_param(param.alpha_side, param.beta_side, g1, g2, param.sector);
  param.source.overwrite_pattern(c);
  return c;
}

ComplexMatrix central_pb_completion(const PartialMatrix& pm,
                                    const PhaseSector& sec, double tol) {
  const PbParameterization p = build_pb_parameterization(pm, sec, tol);
  const int n = pm.size();
  const ComplexMatrix zero = ComplexMatrix::Zero(n, n);
  return apply_pb_param(p, zero, zero);
}

ComplexMatrix fill_hermitian_chordal(const ComplexMatrix& partial,
                                     const PatternGraph& g,
                                     const EliminationOrdering& peo,
                                     double tol) {
  const int n = g.size();
  require_square(partial, n, "partial matrix");
  if (!verify_peo(g, peo)) {
    throw NonChordalPattern("ordering is not a perfect elimination ordering");
  }
  ComplexMatrix m = partial;
  std::vector<int> done;
  for (int step = n - 1; step >= 0; --step) {
    const int v = peo.order[step];
    const std::vector<int> nb = later_neighbors(g, peo, step);
    std::vector<int> rest;
    for (int u : done) {
      if (!g.has_edge(u, v)) rest.push_back(u);
    }
    if (!rest.empty()) {
      const std::vector<int> vs{v};
      ComplexMatrix row;
      if (nb.empty()) {
        row = ComplexMatrix::Zero(1, static_cast<Eigen::Index>(rest.size()));
      } else {
        row = linalg::block(m, vs, nb) *
              linalg::hermitian_pinv(linalg::principal(m, nb), tol) *
              linalg::block(m, nb, rest);
      }
      write_hermitian_block(m, vs, rest, row);
    }
    done.push_back(v);
  }
  return m;
}

ComplexMatrix complete_chordal_unchecked(const PartialMatrix& pm,
                                         const PhaseSector& sec, double tol) {
  const ChordalityResult cr = is_chordal(pm.pattern());
  if (!cr.chordal) throw NonChordalPattern("pattern is not chordal");
  const RotatedPair rp = rotate(pm.values(), sec);
  ComplexMatrix c = combine_rotated(
      fill_hermitian_chordal(rp.m_alpha, pm.pattern(), *cr.peo, tol),
      fill_hermitian_chordal(rp.m_beta, pm.pattern(), *cr.peo, tol), sec);
  pm.overwrite_pattern(c);
  return c;
}

ComplexMatrix complete_chordal(const PartialMatrix& pm, const PhaseSector& sec,
                               double tol) {
  if (!is_chordal(pm.pattern()).chordal) {
    throw NonChordalPattern("pattern is not chordal");
  }
  const PartialMembership mem = check_partial_membership(pm, sec, tol);
  if (!mem.member) {
    throw ConeViolation("clique block is not in the phase-bounded cone",
                        *mem.violating_clique);
  }
  return complete_chordal_unchecked(pm, sec, tol);
}

ComplexMatrix complete_asymmetric(const DirectedPartialMatrix& pm,
                                  const PhaseSector& sec, double tol) {
  const int n = pm.size();
  std::vector<int> refl, free_v;
  for (int v = 0; v < n; ++v) {
    (pm.pattern().has_loop(v) ? refl : free_v).push_back(v);
  }

  ComplexMatrix c = pm.values();
  if (!refl.empty()) {
    const ReflexivePart rp = reflexive_part(pm.pattern());
    if (!is_chordal(rp.subgraph).chordal) {
      throw NonChordalPattern("reflexive part is not chordal");
    }
    const PartialMatrix sub(rp.subgraph, linalg::principal(pm.values(), refl));
    for (const Clique& k : enumerate_maximal_cliques(rp.subgraph)) {
      if (!in_strict_phase_cone(sub.clique_block(k), sec, tol)) {
        Clique orig;
        for (int u : k) orig.push_back(refl[u]);
        throw ConeViolation(
            "reflexive clique is not strictly inside the phase-bounded cone",
            orig);
      }
    }
    write_block(c, refl, refl, complete_chordal_unchecked(sub, sec, tol));
  }
  if (free_v.empty()) return c;

  // Row sums of the Schur complement of the reflexive block in each rotated
  // component, with the free diagonal still at zero.
  const double half_sin = std::sin(0.5 * sec.width());
  std::vector<double> bound(free_v.size(), 0.0);
  const RotatedPair rot = rotate(c, sec);
  for (const ComplexMatrix* m : {&rot.m_alpha, &rot.m_beta}) {
    ComplexMatrix schur = linalg::principal(*m, free_v);
    if (!refl.empty()) {
      const ComplexMatrix b = linalg::block(*m, refl, free_v);
      schur -= b.adjoint() *
               linalg::principal(*m, refl).ldlt().solve(b);
    }
    for (std::size_t i = 0; i < free_v.size(); ++i) {
      bound[i] = std::max(bound[i], schur.row(static_cast<Eigen::Index>(i))
                                        .cwiseAbs()
                                        .sum());
    }
  }
  const Complex dir = std::polar(1.0, sec.center());
  for (std::size_t i = 0; i < free_v.size(); ++i) {
    const double mag = std::max(1.0, 2.0 * bound[i] / half_sin);
    c(free_v[i], free_v[i]) = mag * dir;
  }
  return c;
}

ComplexMatrix random_gamma(const PatternGraph& g, std::mt19937_64& rng,
                           double norm) {
  const int n = g.size();
  ComplexMatrix gamma = ComplexMatrix::Zero(n, n);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.has_edge(i, j)) continue;
      const double re = gauss(rng);
      const double im = gauss(rng);
      gamma(i, j) = Complex(re, im);
    }
  }
  const double s = linalg::spectral_norm(gamma);
  if (s > 0.0) gamma *= norm / s;
  return gamma;
}

}  // namespace phasecomp
