#include "phasecomp/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "phasecomp/errors.hpp"

namespace phasecomp::linalg {

double spectral_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

bool is_hermitian(const ComplexMatrix& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= rel_tol * scale;
}

ComplexMatrix symmetrized(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw InvalidArgument(std::string(what) + " is not square");
  }
  if (m.size() == 0) return m;
  if (!is_hermitian(m)) {
    throw InvalidArgument(std::string(what) + " is not Hermitian");
  }
  return (m + m.adjoint()) / 2.0;
}

double min_eigenvalue(const ComplexMatrix& h) {
  if (h.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

int numerical_rank(const ComplexMatrix& m, double tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto& s = svd.singularValues();
  if (s(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > tol * s(0)) ++r;
  }
  return r;
}

ComplexMatrix hermitian_pinv(const ComplexMatrix& h, double tol) {
  const Eigen::Index n = h.rows();
  if (n == 0) return h;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  const RealVector& w = es.eigenvalues();
  const double wmax = w.cwiseAbs().maxCoeff();
  RealVector inv = RealVector::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(w(i)) > tol * wmax) inv(i) = 1.0 / w(i);
  }
  const ComplexMatrix& v = es.eigenvectors();
  return v * inv.cast<Complex>().asDiagonal() * v.adjoint();
}

ComplexMatrix range_basis(const ComplexMatrix& m, double tol) {
  if (m.size() == 0) return ComplexMatrix(m.rows(), 0);
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU);
  const auto& s = svd.singularValues();
  Eigen::Index r = 0;
  if (s(0) > 0.0) {
    while (r < s.size() && s(r) > tol * s(0)) ++r;
  }
  return svd.matrixU().leftCols(r);
}

ComplexMatrix range_projector(const ComplexMatrix& m, double tol) {
  const ComplexMatrix q = range_basis(m, tol);
  return q * q.adjoint();
}

ComplexMatrix principal(const ComplexMatrix& m, std::span<const int> idx) {
  return block(m, idx, idx);
}

ComplexMatrix block(const ComplexMatrix& m, std::span<const int> rows,
                    std::span<const int> cols) {
  ComplexMatrix out(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          m(rows[i], cols[j]);
    }
  }
  return out;
}

double max_rel_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.size() == 0) return 0.0;
  const double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
  return (a - b).cwiseAbs().maxCoeff() / scale;
}

}  // namespace phasecomp::linalg
