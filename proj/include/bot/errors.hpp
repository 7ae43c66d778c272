#ifndef BOT_ERRORS_HPP
#define BOT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bot {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Every value of a grid function is the infinity sentinel.
class EmptyDomainError : public Error {
 public:
  using Error::Error;
};

/// A point lies outside the hull of a sampled grid.
class OutOfDomainError : public Error {
 public:
  using Error::Error;
};

/// A construction requires a convex (or concave) input and got neither.
class NonConvexInputError : public Error {
 public:
  using Error::Error;
};

/// An iterative solve hit its iteration cap before reaching tolerance.
class NoConvergenceError : public Error {
 public:
  using Error::Error;
};

/// The transportation problem admits no finite-cost plan.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

class SizeMismatchError : public Error {
 public:
  using Error::Error;
};

class DimensionUnsupportedError : public Error {
 public:
  using Error::Error;
};

class GridMismatchError : public Error {
 public:
  using Error::Error;
};

/// A density/velocity path violates the continuity-equation tolerance.
class InfeasiblePathError : public Error {
 public:
  using Error::Error;
};

/// A flow sampled a nonfinite derivative.
class StepUnderflowError : public Error {
 public:
  using Error::Error;
};

class VariantUnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A 1-D map cannot be extracted (degenerate intermediate measure).
class MapUnavailableError : public Error {
 public:
  using Error::Error;
};

/// Finite-difference gradients oscillate across step sizes at this point.
class UnstableGradientError : public Error {
 public:
  using Error::Error;
};

}  // namespace bot

#endif  // BOT_ERRORS_HPP
