#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace phasecomp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: size mismatches, non-Hermitian input, bad sector, ...
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Sector with beta - alpha in {0, pi} (or outside (0, pi)). These reduce to
/// plain PSD problems and are not handled by the phase-bounded routines.
class DegenerateSector : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A pattern that must be chordal (or banded) is not.
class NonChordalPattern : public Error {
 public:
  using Error::Error;
};

/// An input is outside the cone it is required to live in. Carries the
/// offending clique (0-based, ascending) when one is known.
class ConeViolation : public Error {
 public:
  ConeViolation(const std::string& what, std::vector<int> clique = {})
      : Error(what), clique_(std::move(clique)) {}

  const std::vector<int>& clique() const noexcept { return clique_; }

 private:
  std::vector<int> clique_;
};

/// The operation is mathematically undefined for this input (zero matrix
/// phases, interior phases of a parabolic block, ...).
class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace phasecomp
