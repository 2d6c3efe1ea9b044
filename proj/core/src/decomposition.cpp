#include "phasecomp/decomposition.hpp"

#include <algorithm>
#include <cmath>

#include "phasecomp/errors.hpp"

namespace phasecomp {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool contains_all(const Clique& outer, const Clique& inner) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

void require_pattern_support(const ComplexMatrix& c, const PatternGraph& g,
                             double tol) {
  const double scale = std::max(1.0, c.cwiseAbs().maxCoeff());
  for (int i = 0; i < g.size(); ++i) {
    for (int j = 0; j < g.size(); ++j) {
      if (!g.has_edge(i, j) && std::abs(c(i, j)) > tol * scale) {
        throw InvalidArgument("matrix has entries outside its pattern (" +
                              std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + ")");
      }
    }
  }
}

}  // namespace

std::vector<EliminationStep> chordal_psd_decompose(const ComplexMatrix& m,
                                                   const PatternGraph& g,
                                                   const EliminationOrdering& peo,
                                                   double tol) {
  const int n = g.size();
  if (m.rows() != n || m.cols() != n) {
    throw InvalidArgument("matrix and pattern sizes differ");
  }
  if (!verify_peo(g, peo)) {
    throw NonChordalPattern("ordering is not a perfect elimination ordering");
  }
  ComplexMatrix res = linalg::symmetrized(m, "matrix");
  const double thresh = tol * std::max(1.0, linalg::spectral_norm(res));

  std::vector<EliminationStep> steps;
  steps.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    const int v = peo.order[step];
    EliminationStep s;
    s.pivot = v;
    s.clique = later_neighbors(g, peo, step);
    s.clique.push_back(v);
    std::sort(s.clique.begin(), s.clique.end());
    s.factor = ComplexMatrix::Zero(n, n);

    const double pivot = res(v, v).real();
    if (pivot < -thresh) {
      throw ConeViolation("negative pivot in elimination", s.clique);
    }
    if (pivot <= thresh) {
      for (int u : s.clique) {
        if (u != v && std::abs(res(u, v)) > thresh) {
          throw ConeViolation("zero pivot with a nonzero row in elimination",
                              s.clique);
        }
      }
      s.skipped = true;
    } else {
      for (int a : s.clique) {
        for (int b : s.clique) {
          s.factor(a, b) = res(a, v) * std::conj(res(b, v)) / pivot;
        }
      }
      for (int a : s.clique) {
        for (int b : s.clique) res(a, b) -= s.factor(a, b);
      }
    }
    // the pivot row is finished either way
    for (int u = 0; u < n; ++u) {
      res(v, u) = 0.0;
      res(u, v) = 0.0;
    }
    steps.push_back(std::move(s));
  }
  return steps;
}

CliqueDecomposition pb_decompose(const ComplexMatrix& c, const PhaseSector& sec,
                                 const PatternGraph& g, double tol,
                                 bool rank_one) {
  const int n = g.size();
  if (c.rows() != n || c.cols() != n) {
    throw InvalidArgument("matrix and pattern sizes differ");
  }
  const ChordalityResult cr = is_chordal(g);
  if (!cr.chordal) throw NonChordalPattern("pattern is not chordal");
  require_pattern_support(c, g, tol);

  const RotatedPair rp = rotate(c, sec);
  const auto sa = chordal_psd_decompose(rp.m_alpha, g, *cr.peo, tol);
  const auto sb = chordal_psd_decompose(rp.m_beta, g, *cr.peo, tol);

  CliqueDecomposition d;
  if (rank_one) d.rank_one.emplace();
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (sa[i].skipped && sb[i].skipped) continue;
    const Clique& k = sa[i].clique;
    const ComplexMatrix full = combine_rotated(sa[i].factor, sb[i].factor, sec);
    CliqueSummand s{k, ComplexMatrix::Zero(n, n)};
    for (int a : k) {
      for (int b : k) s.matrix(a, b) = full(a, b);
    }
    if (rank_one) {
      for (RankOneTerm& t :
           sectorial_rank_one_terms(linalg::principal(s.matrix, k), tol)) {
        // report the phase in the sector's own 2 pi window
        const double phi =
            t.phi + 2.0 * kPi * std::round((sec.center() - t.phi) / (2.0 * kPi));
        d.rank_one->push_back({k, phi, std::move(t.t)});
      }
    }
    d.summands.push_back(std::move(s));
  }
  return d;
}

bool verify_decomposition(const CliqueDecomposition& d, const ComplexMatrix& c,
                          const PhaseSector& sec, const PatternGraph& g,
                          double tol) {
  const int n = g.size();
  if (c.rows() != n || c.cols() != n) return false;
  const CliqueList maximal = enumerate_maximal_cliques(g);
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (const CliqueSummand& s : d.summands) {
    if (s.matrix.rows() != n || s.matrix.cols() != n) return false;
    if (!std::is_sorted(s.clique.begin(), s.clique.end())) return false;
    std::vector<char> in(n, 0);
    for (int u : s.clique) {
      if (u < 0 || u >= n) return false;
      in[u] = 1;
    }
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if ((!in[a] || !in[b]) && s.matrix(a, b) != Complex(0.0, 0.0)) {
          return false;
        }
      }
    }
    if (std::none_of(maximal.begin(), maximal.end(), [&](const Clique& m) {
          return contains_all(m, s.clique);
        })) {
      return false;
    }
    try {
      if (!in_phase_cone(s.matrix, sec, tol)) return false;
    } catch (const Error&) {
      return false;
    }
    sum += s.matrix;
  }
  const double scale = std::max(1.0, c.cwiseAbs().maxCoeff());
  if ((sum - c).cwiseAbs().maxCoeff() > 1e-8 * scale) return false;
  if (d.rank_one) {
    for (const RankOneEntry& e : *d.rank_one) {
      if (e.phi < sec.alpha() - tol || e.phi > sec.beta() + tol) return false;
    }
  }
  return true;
}

CliqueDecomposition aggregate_by_maximal_clique(const CliqueDecomposition& d,
                                                const PatternGraph& g) {
  const int n = g.size();
  CliqueList maximal = enumerate_maximal_cliques(g);
  std::sort(maximal.begin(), maximal.end());
  std::vector<ComplexMatrix> acc(maximal.size());
  std::vector<char> used(maximal.size(), 0);
  for (const CliqueSummand& s : d.summands) {
    std::size_t owner = maximal.size();
    for (std::size_t m = 0; m < maximal.size(); ++m) {
      if (contains_all(maximal[m], s.clique)) {
        owner = m;
        break;
      }
    }
    if (owner == maximal.size()) {
      throw InvalidArgument("summand clique is not inside any maximal clique");
    }
    if (!used[owner]) acc[owner] = ComplexMatrix::Zero(n, n);
    used[owner] = 1;
    acc[owner] += s.matrix;
  }
  CliqueDecomposition out;
  for (std::size_t m = 0; m < maximal.size(); ++m) {
    if (used[m]) out.summands.push_back({maximal[m], std::move(acc[m])});
  }
  return out;
}

}  // namespace phasecomp
