#pragma once

#include <random>

#include "phasecomp/cones.hpp"
#include "phasecomp/pattern_graph.hpp"

namespace bench {

using phasecomp::Complex;
using phasecomp::ComplexMatrix;

inline ComplexMatrix random_complex(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

// T diag(e^{i phi}) T^* with phases spread over [lo, hi].
inline ComplexMatrix sector_member(int n, double lo, double hi, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(lo, hi);
  phasecomp::ComplexVector d(n);
  for (int i = 0; i < n; ++i) d(i) = std::polar(1.0, u(rng));
  const ComplexMatrix t = random_complex(n, rng);
  return t * d.asDiagonal() * t.adjoint();
}

// Sum of sector members supported on the maximal cliques of a banded pattern.
inline ComplexMatrix banded_member(const phasecomp::PatternGraph& g, double lo, double hi,
                                   std::mt19937_64& rng) {
  const int n = g.size();
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  const auto peo = *phasecomp::is_chordal(g).peo;
  for (const auto& k : phasecomp::maximal_cliques(g, peo)) {
    const int kk = static_cast<int>(k.size());
    const ComplexMatrix b = sector_member(kk, lo, hi, rng);
    for (int a = 0; a < kk; ++a)
      for (int c = 0; c < kk; ++c) m(k[a], k[c]) += b(a, c);
  }
  return m;
}

}  // namespace bench
