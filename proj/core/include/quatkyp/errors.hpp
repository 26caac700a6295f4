#pragma once

#include <stdexcept>
#include <string>

namespace quatkyp {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input-shaped errors: the caller handed us something malformed.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};
class DimensionError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};
class StructureError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};
class NotHermitian : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};
class NotMinimal : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Numerical conditions tied to a specific point or pivot.
class ZeroDivision : public Error {
 public:
  using Error::Error;
};
class SingularError : public Error {
 public:
  using Error::Error;
};
class PoleError : public SingularError {
 public:
  using SingularError::SingularError;
};
class CayleyPivotSingular : public SingularError {
 public:
  using SingularError::SingularError;
};
class IllConditioned : public Error {
 public:
  using Error::Error;
};

/// The certificate search concluded that no admissible H exists.
class Infeasible : public Error {
 public:
  using Error::Error;
};
/// Hamiltonian spectrum touches the imaginary axis and the fallback failed too.
class BoundarySpectrum : public Error {
 public:
  using Error::Error;
};
class ExhaustedSampling : public Error {
 public:
  using Error::Error;
};
/// Eigensolver output violated an invariant that holds in exact arithmetic.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace quatkyp
