#include "phasecomp/partial_matrix.hpp"

#include "phasecomp/errors.hpp"

namespace phasecomp {

PartialMatrix::PartialMatrix(PatternGraph pattern, const ComplexMatrix& values)
    : pattern_(std::move(pattern)) {
  const int n = pattern_.size();
  if (values.rows() != n || values.cols() != n) {
    throw InvalidArgument("partial matrix values do not match pattern size");
  }
  values_ = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!pattern_.has_edge(i, j)) continue;
      if (!std::isfinite(values(i, j).real()) ||
          !std::isfinite(values(i, j).imag())) {
        throw InvalidArgument("partial matrix has a non-finite entry");
      }
      values_(i, j) = values(i, j);
    }
  }
}

PartialMatrix PartialMatrix::mask(const ComplexMatrix& full,
                                  PatternGraph pattern) {
  return PartialMatrix(std::move(pattern), full);
}

ComplexMatrix PartialMatrix::clique_block(std::span<const int> clique) const {
  if (!is_clique(pattern_, clique)) {
    throw InvalidArgument("index set is not a clique of the pattern");
  }
  return linalg::principal(values_, clique);
}

void PartialMatrix::overwrite_pattern(ComplexMatrix& full) const {
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) {
      if (pattern_.has_edge(i, j)) full(i, j) = values_(i, j);
    }
  }
}

DirectedPartialMatrix::DirectedPartialMatrix(DirectedPatternGraph pattern,
                                             const ComplexMatrix& values)
    : pattern_(std::move(pattern)) {
  const int n = pattern_.size();
  if (values.rows() != n || values.cols() != n) {
    throw InvalidArgument("partial matrix values do not match pattern size");
  }
  values_ = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (pattern_.has_arc(i, j)) values_(i, j) = values(i, j);
    }
  }
}

void DirectedPartialMatrix::overwrite_pattern(ComplexMatrix& full) const {
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) {
      if (pattern_.has_arc(i, j)) full(i, j) = values_(i, j);
    }
  }
}

}  // namespace phasecomp
