// Test-side generators and brute-force reference checks. Nothing here calls
// into the library's own decision procedures; the point is to have a second,
// independent opinion.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "phasecomp/pattern_graph.hpp"

namespace oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using phasecomp::PatternGraph;

inline constexpr double kPi = std::numbers::pi;

inline Complex cis(double t) { return std::polar(1.0, t); }

// toep(lower..., diag, upper...) with constant diagonals: value(k - j).
template <class F>
Matrix toeplitz(int n, F&& value) {
  Matrix m(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) m(j, k) = value(k - j);
  return m;
}

// (K_theta)_{jk} = e^{i (k - j) theta}
inline Matrix k_theta(int n, double theta) {
  return toeplitz(n, [&](int d) { return cis(d * theta); });
}

// (F_gamma)_{jk} = e^{i (k - j + 1) gamma}
inline Matrix f_gamma(int n, double gamma) {
  return toeplitz(n, [&](int d) { return cis((d + 1) * gamma); });
}

inline Vector random_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = Complex(g(rng), g(rng));
  return v;
}

inline Matrix random_matrix(int r, int c, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// --- graphs -----------------------------------------------------------------

// Every maximal clique, by subset enumeration (n <= ~16).
inline std::vector<std::vector<int>> brute_maximal_cliques(const PatternGraph& g) {
  const int n = g.size();
  std::vector<unsigned> cliques;
  for (unsigned s = 1; s < (1u << n); ++s) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = a + 1; b < n && ok; ++b)
        if ((s >> a & 1u) && (s >> b & 1u) && !g.has_edge(a, b)) ok = false;
    if (ok) cliques.push_back(s);
  }
  std::vector<std::vector<int>> out;
  for (unsigned s : cliques) {
    const bool maximal = std::none_of(cliques.begin(), cliques.end(), [&](unsigned t) {
      return t != s && (t & s) == s;
    });
    if (!maximal) continue;
    std::vector<int> k;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1u) k.push_back(v);
    out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Chordality by repeatedly deleting a simplicial vertex.
inline bool brute_is_chordal(const PatternGraph& g) {
  const int n = g.size();
  std::vector<char> alive(n, 1);
  for (int round = 0; round < n; ++round) {
    int pick = -1;
    for (int v = 0; v < n && pick < 0; ++v) {
      if (!alive[v]) continue;
      std::vector<int> nb;
      for (int u = 0; u < n; ++u)
        if (u != v && alive[u] && g.has_edge(u, v)) nb.push_back(u);
      bool simplicial = true;
      for (std::size_t a = 0; a < nb.size() && simplicial; ++a)
        for (std::size_t b = a + 1; b < nb.size() && simplicial; ++b)
          if (!g.has_edge(nb[a], nb[b])) simplicial = false;
      if (simplicial) pick = v;
    }
    if (pick < 0) return false;
    alive[pick] = 0;
  }
  return true;
}

// Does `order` eliminate each vertex while its later neighbors form a clique?
inline bool brute_is_peo(const PatternGraph& g, const std::vector<int>& order) {
  const int n = g.size();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    std::vector<int> later;
    for (int u = 0; u < n; ++u)
      if (u != v && g.has_edge(u, v) && pos[u] > i) later.push_back(u);
    for (std::size_t a = 0; a < later.size(); ++a)
      for (std::size_t b = a + 1; b < later.size(); ++b)
        if (!g.has_edge(later[a], later[b])) return false;
  }
  return true;
}

// Random chordal graph: each new vertex attaches to a clique of the graph so
// far, then labels are shuffled.
inline PatternGraph random_chordal(int n, std::mt19937_64& rng, double density = 0.6) {
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (int v = 1; v < n; ++v) {
    const int anchor = uniform_int(rng, 0, v - 1);
    std::vector<int> clique{anchor};
    std::vector<int> cand;
    for (int u = 0; u < v; ++u)
      if (u != anchor && adj[u][anchor]) cand.push_back(u);
    std::shuffle(cand.begin(), cand.end(), rng);
    for (int u : cand) {
      if (uniform(rng, 0, 1) > density) continue;
      if (std::all_of(clique.begin(), clique.end(), [&](int w) { return adj[u][w]; }))
        clique.push_back(u);
    }
    if (uniform(rng, 0, 1) < 0.1) clique.clear();  // occasionally disconnected
    for (int u : clique) adj[u][v] = adj[v][u] = 1;
  }
  std::vector<int> label(n);
  for (int i = 0; i < n; ++i) label[i] = i;
  std::shuffle(label.begin(), label.end(), rng);
  PatternGraph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (adj[a][b]) g.add_edge(label[a], label[b]);
  return g;
}

inline PatternGraph random_graph(int n, double p, std::mt19937_64& rng) {
  PatternGraph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (uniform(rng, 0, 1) < p) g.add_edge(a, b);
  return g;
}

// Staircase pattern: row i is full up to a nondecreasing last column.
inline PatternGraph random_banded(int n, std::mt19937_64& rng, int max_reach = 3) {
  PatternGraph g(n);
  int last = 0;
  for (int i = 0; i < n; ++i) {
    last = std::min(n - 1, std::max(last, i + uniform_int(rng, 0, max_reach)));
    for (int j = i + 1; j <= last; ++j) g.add_edge(i, j);
  }
  return g;
}

// --- matrices -----------------------------------------------------------------

inline Matrix embed(const Matrix& block, const std::vector<int>& idx, int n) {
  Matrix m = Matrix::Zero(n, n);
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) m(idx[a], idx[b]) = block(a, b);
  return m;
}

inline Matrix mask(const Matrix& m, const PatternGraph& g) {
  Matrix out = Matrix::Zero(m.rows(), m.cols());
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b)
      if (g.has_edge(a, b)) out(a, b) = m(a, b);
  return out;
}

// sum_k e^{i phi_k} t_k t_k^* with phi_k uniform in [lo, hi]: numerical range
// inside the sector by construction.
inline Matrix random_sector_member(int n, double lo, double hi, std::mt19937_64& rng,
                                   int terms = -1) {
  if (terms < 0) terms = n;
  Matrix m = Matrix::Zero(n, n);
  for (int k = 0; k < terms; ++k) {
    const Vector t = random_vector(n, rng);
    m += cis(uniform(rng, lo, hi)) * t * t.adjoint();
  }
  return m;
}

// Sum over maximal cliques of sector members supported on the clique: lies in
// the sparse cone of g and is decomposable by construction.
inline Matrix random_clique_sum(const PatternGraph& g, double lo, double hi,
                                std::mt19937_64& rng) {
  const int n = g.size();
  Matrix m = Matrix::Zero(n, n);
  for (const auto& k : brute_maximal_cliques(g)) {
    const int kk = static_cast<int>(k.size());
    m += embed(random_sector_member(kk, lo, hi, rng, uniform_int(rng, 1, kk)), k, n);
  }
  return m;
}

inline Matrix random_psd(int n, std::mt19937_64& rng, int rank = -1) {
  if (rank < 0) rank = n;
  const Matrix t = random_matrix(n, rank, rng);
  return t * t.adjoint();
}

inline double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return Eigen::JacobiSVD<Matrix>(m).singularValues()(0);
}

// Rotated Hermitian parts written from the definition of the sector:
// Im-type Hermitian parts of e^{-i alpha} C and -e^{-i beta} C.
inline Matrix lower_rotation(const Matrix& c, double alpha) {
  const Matrix r = cis(-alpha) * c;
  return (r - r.adjoint()) / Complex(0.0, 2.0);
}
inline Matrix upper_rotation(const Matrix& c, double beta) {
  const Matrix r = cis(-beta) * c;
  return -(r - r.adjoint()) / Complex(0.0, 2.0);
}

// PSD up to tol * max(1, |m|), decided by a shifted Cholesky attempt.
inline bool psd_by_cholesky(const Matrix& m, double tol) {
  if (m.size() == 0) return true;
  const double shift = tol * std::max(1.0, spectral_norm(m));
  Matrix h = (m + m.adjoint()) / 2.0;
  h += shift * Matrix::Identity(m.rows(), m.cols());
  Eigen::LLT<Matrix> llt(h);
  return llt.info() == Eigen::Success;
}

inline bool in_sector(const Matrix& c, double alpha, double beta, double tol = 1e-9) {
  return psd_by_cholesky(lower_rotation(c, alpha), tol) &&
         psd_by_cholesky(upper_rotation(c, beta), tol);
}

// Smallest eigenvalue of both rotated parts, relative to max(1, |.|).
inline double sector_margin(const Matrix& c, double alpha, double beta) {
  double out = 1e300;
  for (const Matrix& m : {lower_rotation(c, alpha), upper_rotation(c, beta)}) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    out = std::min(out, es.eigenvalues()(0) / std::max(1.0, spectral_norm(m)));
  }
  return out;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline double wrap(double t) {  // into (-pi, pi]
  t = std::remainder(t, 2.0 * kPi);
  return t <= -kPi ? t + 2.0 * kPi : t;
}

}  // namespace oracle
