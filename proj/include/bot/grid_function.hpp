#ifndef BOT_GRID_FUNCTION_HPP
#define BOT_GRID_FUNCTION_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "bot/errors.hpp"
#include "bot/vec.hpp"

namespace bot {

/// One strictly increasing list of sample coordinates.
using Axis = std::vector<double>;

/// Absorbing +infinity sentinel for grid values. Values at or above
/// kSentinelThreshold are treated as infinite by every scan.
inline constexpr double kSentinel = 1e300;
inline constexpr double kSentinelThreshold = 1e299;

inline bool is_sentinel(double v) { return v >= kSentinelThreshold; }

/// Addition that absorbs the sentinel instead of overflowing.
inline double sat_add(double a, double b) {
  if (is_sentinel(a) || is_sentinel(b)) return kSentinel;
  return a + b;
}

/// Uniform axis with n nodes spanning [lo, hi].
Axis uniform_axis(double lo, double hi, std::size_t n);

/// Uniform axis with the given spacing; hi is included (within rounding).
Axis uniform_axis_step(double lo, double hi, double step);

enum class Convexity { kUnknown, kConvex, kConcave };

/// Scalar function sampled on a rectangular grid (d = 1 or 2), the carrier
/// for potentials, conjugates and value functions. Values are finite or the
/// +infinity sentinel, never NaN.
class GridFunction {
 public:
  GridFunction(std::vector<Axis> axes, std::vector<double> values,
               Convexity flag = Convexity::kUnknown);

  /// Samples fn at every node.
  static GridFunction sample(std::vector<Axis> axes,
                             const std::function<double(const Vec&)>& fn,
                             Convexity flag = Convexity::kUnknown);

  int dim() const { return static_cast<int>(axes_.size()); }
  const Axis& axis(int k) const { return axes_[static_cast<std::size_t>(k)]; }
  const std::vector<Axis>& axes() const { return axes_; }
  std::size_t node_count() const { return values_.size(); }

  double value(std::size_t flat) const { return values_[flat]; }
  double& value(std::size_t flat) { return values_[flat]; }
  const std::vector<double>& values() const { return values_; }

  std::size_t flat_index(std::size_t i0, std::size_t i1 = 0) const;
  Vec node(std::size_t flat) const;

  /// Largest absolute finite value (at least 1), used to scale tolerances.
  double value_scale() const;

  bool inside(const Vec& x) const;

  /// Multilinear interpolation; sentinel if any stencil corner is sentinel.
  /// Throws OutOfDomainError outside the grid hull.
  double interpolate(const Vec& x) const;

  Convexity convexity() const { return flag_; }
  void set_convexity(Convexity flag);

  /// True if no finite value exists.
  bool all_sentinel() const;

  /// Coarsest axis spacing, the "grid resolution" of error bounds.
  double max_spacing() const;

 private:
  std::vector<Axis> axes_;
  std::vector<double> values_;
  Convexity flag_ = Convexity::kUnknown;
};

}  // namespace bot

#endif  // BOT_GRID_FUNCTION_HPP
