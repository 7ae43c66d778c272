#ifndef BOT_CONVEX_HPP
#define BOT_CONVEX_HPP

#include <optional>
#include <vector>

#include "bot/grid_function.hpp"

namespace bot {

/// f*(q) = max over grid nodes x of <q,x> - f(x), computed by exhaustive
/// scan (the reference semantics). Output is flagged convex.
/// Throws EmptyDomainError when every value of f is the sentinel.
GridFunction legendre_conjugate(const GridFunction& f,
                                std::vector<Axis> dual_axes);

/// Concave transform g~(v) = min over grid nodes x of <v,x> - g(x).
/// Output is flagged concave. Satisfies g~(v) = -(-g)*(-v) exactly.
GridFunction concave_conjugate(const GridFunction& g,
                               std::vector<Axis> dual_axes);

/// Pointwise conjugate values without building a dual grid.
double conjugate_value(const GridFunction& f, const Vec& q);
double concave_conjugate_value(const GridFunction& g, const Vec& v);

struct ConvexityReport {
  bool convex = true;
  /// Largest amount by which a chord dips below a sampled value
  /// (0 for convex data); location of the worst violation.
  double worst_violation = 0.0;
  Vec where;
};

/// Chord test along every grid line and (in 2-D) both diagonals:
/// convex iff midpoint values exceed the chord by at most tol.
ConvexityReport is_convex(const GridFunction& f, double tol);

/// Negates finite values (sentinel stays sentinel), flips the flag.
GridFunction negate(const GridFunction& f);

inline ConvexityReport is_concave(const GridFunction& f, double tol) {
  return is_convex(negate(f), tol);
}

/// Central-difference gradient at nodes (one-sided at the boundary),
/// multilinearly interpolated at x. Exact for linear data, O(h^2) for
/// smooth convex data. Throws OutOfDomainError outside the hull.
Vec grid_gradient(const GridFunction& f, const Vec& x);

/// Gradient with a stability probe: compares stride-1, stride-2 and
/// stride-4 central differences and refuses (nullopt) when they spread
/// by more than tol. Used where subgradients may be set-valued.
std::optional<Vec> stable_gradient(const GridFunction& f, const Vec& x,
                                   double tol);

}  // namespace bot

#endif  // BOT_CONVEX_HPP
