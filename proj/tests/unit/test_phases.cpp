#include <algorithm>

#include "doctest.h"
#include "phasecomp/errors.hpp"
#include "phasecomp/phases.hpp"
#include "support/oracles.hpp"

using namespace phasecomp;
using oracle::cis;
using oracle::kPi;

namespace {

ComplexMatrix diag(const std::vector<Complex>& d) {
  ComplexVector v(static_cast<Eigen::Index>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) v(static_cast<Eigen::Index>(i)) = d[i];
  return v.asDiagonal();
}

ComplexMatrix jordan() {
  ComplexMatrix j(2, 2);
  j << 1.0, 2.0, 0.0, 1.0;
  return j;
}

// Phases, shifted by a common multiple of 2 pi to sit next to `ref`.
std::vector<double> aligned(std::vector<double> got, const std::vector<double>& ref) {
  double dg = 0.0, dr = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i) {
    dg += got[i];
    dr += ref[i];
  }
  const double k = 2 * kPi * std::round((dg - dr) / got.size() / (2 * kPi));
  for (double& g : got) g -= k;
  return got;
}

}  // namespace

TEST_CASE("extreme phases of simple matrices") {
  std::mt19937_64 rng(31);
  const auto w = oracle::random_vector(4, rng);
  auto iv = extreme_phases(cis(0.9) * w * w.adjoint());
  REQUIRE(iv);
  CHECK(iv->phi_min == doctest::Approx(0.9).epsilon(1e-9));
  CHECK(iv->phi_max == doctest::Approx(0.9).epsilon(1e-9));

  iv = extreme_phases(jordan());
  REQUIRE(iv);
  CHECK(iv->phi_min == doctest::Approx(-kPi / 2).epsilon(1e-9));
  CHECK(iv->phi_max == doctest::Approx(kPi / 2).epsilon(1e-9));

  iv = extreme_phases(diag({cis(kPi / 4), cis(-kPi / 4)}));
  REQUIRE(iv);
  CHECK(iv->phi_min == doctest::Approx(-kPi / 4).epsilon(1e-9));
  CHECK(iv->phi_max == doctest::Approx(kPi / 4).epsilon(1e-9));

  CHECK_FALSE(extreme_phases(diag({1.0, cis(2 * kPi / 3), cis(-2 * kPi / 3)})));
  CHECK_THROWS_AS(extreme_phases(ComplexMatrix::Zero(2, 2)), Unsupported);
}

TEST_CASE("extreme phases near the branch cut keep the midpoint in (-pi, pi]") {
  const auto c = diag({cis(3.0), cis(3.3)});
  const auto iv = extreme_phases(c);
  REQUIRE(iv);
  CHECK(iv->width() == doctest::Approx(0.3).epsilon(1e-9));
  CHECK(iv->center() > -kPi);
  CHECK(iv->center() <= kPi);
  CHECK(std::abs(oracle::wrap(iv->phi_min - 3.0)) < 1e-9);
}

TEST_CASE("classification") {
  CHECK(classify(cis(0.3) * ComplexMatrix::Identity(3, 3)) == PhaseClass::sectorial);
  std::mt19937_64 rng(32);
  const auto v = oracle::random_vector(3, rng);
  ComplexMatrix padded = ComplexMatrix::Zero(4, 4);
  padded.topLeftCorner(3, 3) = v * v.adjoint();
  CHECK(classify(padded) == PhaseClass::quasisectorial);
  CHECK(classify(jordan()) == PhaseClass::semisectorial_parabolic);
  CHECK(classify(diag({1.0, cis(2 * kPi / 3), cis(-2 * kPi / 3)})) ==
        PhaseClass::non_semisectorial);
  CHECK(classify(ComplexMatrix::Zero(3, 3)) == PhaseClass::zero);
  // a nilpotent block: kernel of c differs from kernel of c^*
  ComplexMatrix nil = ComplexMatrix::Zero(2, 2);
  nil(0, 1) = 1.0;
  CHECK(classify(nil) == PhaseClass::non_semisectorial);
  CHECK(to_string(PhaseClass::semisectorial_parabolic) == "semisectorial-parabolic");
}

TEST_CASE("phases of normal and congruent matrices") {
  const std::vector<double> phi{0.2, -0.7, 1.3, 0.5};
  std::vector<Complex> d;
  for (double p : phi) d.push_back(cis(p));
  const auto pl = phases(diag(d));
  auto sorted = phi;
  std::sort(sorted.rbegin(), sorted.rend());
  REQUIRE(pl.phases.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(pl.phases[i] == doctest::Approx(sorted[i]).epsilon(1e-12));
  CHECK(pl.classification == PhaseClass::sectorial);

  std::mt19937_64 rng(33);
  for (int t = 0; t < 40; ++t) {
    const int n = oracle::uniform_int(rng, 1, 6);
    const double c0 = oracle::uniform(rng, -kPi, kPi);
    std::vector<double> ph(n);
    for (double& p : ph) p = c0 + oracle::uniform(rng, -1.4, 1.4);
    ComplexVector dv(n);
    for (int i = 0; i < n; ++i) dv(i) = cis(ph[i]);
    const auto tt = oracle::random_matrix(n, n, rng);
    const ComplexMatrix c = tt * dv.asDiagonal() * tt.adjoint();
    std::sort(ph.rbegin(), ph.rend());
    const auto got = aligned(phases(c).phases, ph);
    for (int i = 0; i < n; ++i) CHECK(std::abs(got[i] - ph[i]) < 1e-6);
  }

  const auto w = oracle::random_vector(3, rng);
  const auto one = phases(cis(-2.0) * w * w.adjoint());
  REQUIRE(one.phases.size() == 1);
  CHECK(std::abs(oracle::wrap(one.phases[0] + 2.0)) < 1e-9);
  CHECK(one.classification == PhaseClass::quasisectorial);

  CHECK_THROWS_AS(phases(jordan()), Unsupported);
  CHECK_THROWS_AS(phases(diag({1.0, cis(2 * kPi / 3), cis(-2 * kPi / 3)})), Unsupported);
}

TEST_CASE("rank-one terms reconstruct the matrix") {
  auto terms = sectorial_rank_one_terms(cis(0.4) * ComplexMatrix::Identity(2, 2));
  REQUIRE(terms.size() == 2);
  for (const auto& t : terms) {
    CHECK(t.phi == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(t.t.norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(std::abs(terms[0].t.dot(terms[1].t)) < 1e-12);

  std::mt19937_64 rng(34);
  const auto w = oracle::random_vector(4, rng);
  const ComplexMatrix r1 = cis(1.1) * w * w.adjoint();
  terms = sectorial_rank_one_terms(r1);
  REQUIRE(terms.size() == 1);
  CHECK(oracle::max_abs_diff(reconstruct(terms, 4), r1) < 1e-10 * r1.norm());

  for (int t = 0; t < 30; ++t) {
    const int n = oracle::uniform_int(rng, 1, 7);
    const double a = oracle::uniform(rng, -kPi, kPi);
    const auto c = oracle::random_sector_member(n, a, a + oracle::uniform(rng, 0.0, 3.0), rng,
                                                oracle::uniform_int(rng, 1, n));
    terms = sectorial_rank_one_terms(c);
    const double scale = std::max(1.0, c.cwiseAbs().maxCoeff());
    CHECK(oracle::max_abs_diff(reconstruct(terms, n), c) <= 1e-8 * scale);
  }
}

TEST_CASE("numerical range boundary samples") {
  auto pts = numerical_range_boundary(ComplexMatrix::Identity(3, 3), 8);
  REQUIRE(pts.size() == 8);
  for (const auto& p : pts) CHECK(std::abs(p.point - Complex(1.0, 0.0)) < 1e-12);

  pts = numerical_range_boundary(diag({1.0, -1.0}), 16);
  for (const auto& p : pts) {
    CHECK(std::abs(p.point.imag()) < 1e-12);
    CHECK(std::abs(p.point.real()) <= 1.0 + 1e-12);
  }
  CHECK_THROWS_AS(numerical_range_boundary(diag({1.0}), 2), InvalidArgument);

  std::mt19937_64 rng(35);
  for (int t = 0; t < 10; ++t) {
    const double a = oracle::uniform(rng, -1.0, 0.0);
    const auto c = oracle::random_sector_member(4, a, a + 1.5, rng);
    const auto iv = extreme_phases(c);
    REQUIRE(iv);
    double lo = 1e9, hi = -1e9;
    for (const auto& p : numerical_range_boundary(c, 4000)) {
      const double ang = std::arg(p.point);
      lo = std::min(lo, ang);
      hi = std::max(hi, ang);
    }
    CHECK(std::abs(lo - iv->phi_min) < 1e-3);
    CHECK(std::abs(hi - iv->phi_max) < 1e-3);
  }
}

TEST_CASE("minimal sector of partial matrices") {
  const double gamma = 0.4;
  const auto path = PatternGraph::path(5);
  const auto pm = PartialMatrix::mask(oracle::f_gamma(5, gamma), path);
  // every 2x2 clique block is e^{i gamma} times a rank-one PSD matrix
  const auto ms = minimal_sector(pm);
  REQUIRE(std::holds_alternative<PhaseRay>(ms));
  CHECK(std::get<PhaseRay>(ms).angle == doctest::Approx(gamma).epsilon(1e-9));

  std::mt19937_64 rng(36);
  const auto h = oracle::random_psd(4, rng);
  const auto herm = minimal_sector(PartialMatrix::mask(h, PatternGraph::path(4)));
  REQUIRE(std::holds_alternative<PhaseRay>(herm));
  CHECK(std::abs(std::get<PhaseRay>(herm).angle) < 1e-9);

  const auto c = oracle::random_sector_member(4, 0.2, 1.4, rng);
  const auto full = minimal_sector(PartialMatrix::mask(c, PatternGraph::complete(4)));
  const auto iv = extreme_phases(c);
  REQUIRE(std::holds_alternative<PhaseSector>(full));
  CHECK(std::get<PhaseSector>(full).alpha() == doctest::Approx(iv->phi_min).epsilon(1e-9));
  CHECK(std::get<PhaseSector>(full).beta() == doctest::Approx(iv->phi_max).epsilon(1e-9));

  // two cliques pointing in opposite directions cannot share a window
  ComplexMatrix opp = ComplexMatrix::Zero(3, 3);
  opp(0, 0) = cis(0.1);
  opp(1, 1) = cis(1.0);
  opp(2, 2) = cis(2.0 + 0.5);
  opp(0, 1) = opp(1, 0) = 0.0;
  const auto g = PatternGraph::path(3);
  ComplexMatrix far = opp;
  far(2, 2) = cis(0.1 + kPi + 0.3);
  CHECK_THROWS_AS(minimal_sector(PartialMatrix::mask(far, g)), ConeViolation);
  const auto wide = minimal_sector(PartialMatrix::mask(opp, g));
  REQUIRE(std::holds_alternative<PhaseSector>(wide));
  CHECK(std::get<PhaseSector>(wide).alpha() == doctest::Approx(0.1).epsilon(1e-9));
  CHECK(std::get<PhaseSector>(wide).beta() == doctest::Approx(2.5).epsilon(1e-9));
}
