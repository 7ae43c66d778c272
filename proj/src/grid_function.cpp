#include "bot/grid_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bot {

namespace {

void validate_axis(const Axis& axis) {
  if (axis.size() < 2)
    throw std::invalid_argument("grid axis needs at least 2 samples");
  for (std::size_t i = 1; i < axis.size(); ++i)
    if (!(axis[i] > axis[i - 1]))
      throw std::invalid_argument("grid axis must be strictly increasing");
}

// Locate the cell [axis[i], axis[i+1]] containing x; returns i and the
// barycentric weight of the right node.
std::pair<std::size_t, double> locate(const Axis& axis, double x) {
  auto it = std::upper_bound(axis.begin(), axis.end(), x);
  std::size_t hi = static_cast<std::size_t>(it - axis.begin());
  if (hi == 0) hi = 1;
  if (hi == axis.size()) hi = axis.size() - 1;
  std::size_t lo = hi - 1;
  double t = (x - axis[lo]) / (axis[hi] - axis[lo]);
  return {lo, t};
}

}  // namespace

Axis uniform_axis(double lo, double hi, std::size_t n) {
  if (n < 2) throw std::invalid_argument("uniform_axis: n < 2");
  Axis a(n);
  for (std::size_t i = 0; i < n; ++i)
    a[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  a.back() = hi;
  return a;
}

Axis uniform_axis_step(double lo, double hi, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("uniform_axis_step: step <= 0");
  std::size_t n = static_cast<std::size_t>(std::llround((hi - lo) / step)) + 1;
  if (n < 2) n = 2;
  return uniform_axis(lo, lo + step * static_cast<double>(n - 1), n);
}

GridFunction::GridFunction(std::vector<Axis> axes, std::vector<double> values,
                           Convexity flag)
    : axes_(std::move(axes)), values_(std::move(values)) {
  if (axes_.empty() || axes_.size() > 2)
    throw std::invalid_argument("GridFunction supports d = 1 or 2");
  std::size_t n = 1;
  for (const Axis& a : axes_) {
    validate_axis(a);
    n *= a.size();
  }
  if (values_.size() != n)
    throw std::invalid_argument("GridFunction: value count does not match grid");
  for (double v : values_)
    if (std::isnan(v)) throw std::invalid_argument("GridFunction: NaN value");
  set_convexity(flag);
}

GridFunction GridFunction::sample(std::vector<Axis> axes,
                                  const std::function<double(const Vec&)>& fn,
                                  Convexity flag) {
  std::size_t n = 1;
  for (const Axis& a : axes) n *= a.size();
  std::vector<double> values(n);
  GridFunction tmp(axes, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) values[i] = fn(tmp.node(i));
  return GridFunction(std::move(axes), std::move(values), flag);
}

std::size_t GridFunction::flat_index(std::size_t i0, std::size_t i1) const {
  if (dim() == 1) return i0;
  return i0 * axes_[1].size() + i1;
}

Vec GridFunction::node(std::size_t flat) const {
  if (dim() == 1) return Vec(axes_[0][flat]);
  std::size_t n1 = axes_[1].size();
  return Vec(axes_[0][flat / n1], axes_[1][flat % n1]);
}

double GridFunction::value_scale() const {
  double s = 1.0;
  for (double v : values_)
    if (!is_sentinel(v)) s = std::max(s, std::abs(v));
  return s;
}

bool GridFunction::inside(const Vec& x) const {
  if (x.dim() != dim()) return false;
  for (int k = 0; k < dim(); ++k) {
    const Axis& a = axes_[static_cast<std::size_t>(k)];
    if (x[k] < a.front() || x[k] > a.back()) return false;
  }
  return true;
}

double GridFunction::interpolate(const Vec& x) const {
  if (!inside(x))
    throw OutOfDomainError("interpolate: point outside grid hull at " +
                           to_string(x));
  if (dim() == 1) {
    auto [i, t] = locate(axes_[0], x[0]);
    double a = values_[i], b = values_[i + 1];
    if (is_sentinel(a) || is_sentinel(b)) return kSentinel;
    return (1.0 - t) * a + t * b;
  }
  auto [i, s] = locate(axes_[0], x[0]);
  auto [j, t] = locate(axes_[1], x[1]);
  double v00 = values_[flat_index(i, j)];
  double v01 = values_[flat_index(i, j + 1)];
  double v10 = values_[flat_index(i + 1, j)];
  double v11 = values_[flat_index(i + 1, j + 1)];
  if (is_sentinel(v00) || is_sentinel(v01) || is_sentinel(v10) ||
      is_sentinel(v11))
    return kSentinel;
  return (1.0 - s) * ((1.0 - t) * v00 + t * v01) +
         s * ((1.0 - t) * v10 + t * v11);
}

void GridFunction::set_convexity(Convexity flag) {
  // The convex flag is a contract: enforce discrete midpoint convexity at
  // 1e-9 * value scale on every grid line.
  if (flag == Convexity::kConvex || flag == Convexity::kConcave) {
    double tol = 1e-9 * value_scale();
    double worst = 0.0;
    double sign = flag == Convexity::kConvex ? 1.0 : -1.0;
    auto check_triple = [&](double fa, double fm, double fb, double xa,
                            double xm, double xb) {
      if (is_sentinel(fa) || is_sentinel(fb)) return;
      if (is_sentinel(fm)) {
        worst = kSentinel;
        return;
      }
      double lam = (xb - xm) / (xb - xa);
      double chord = lam * fa + (1.0 - lam) * fb;
      worst = std::max(worst, sign * (fm - chord));
    };
    if (dim() == 1) {
      for (std::size_t i = 1; i + 1 < axes_[0].size(); ++i)
        check_triple(values_[i - 1], values_[i], values_[i + 1],
                     axes_[0][i - 1], axes_[0][i], axes_[0][i + 1]);
    } else {
      std::size_t n0 = axes_[0].size(), n1 = axes_[1].size();
      for (std::size_t i = 0; i < n0; ++i)
        for (std::size_t j = 1; j + 1 < n1; ++j)
          check_triple(values_[flat_index(i, j - 1)], values_[flat_index(i, j)],
                       values_[flat_index(i, j + 1)], axes_[1][j - 1],
                       axes_[1][j], axes_[1][j + 1]);
      for (std::size_t j = 0; j < n1; ++j)
        for (std::size_t i = 1; i + 1 < n0; ++i)
          check_triple(values_[flat_index(i - 1, j)], values_[flat_index(i, j)],
                       values_[flat_index(i + 1, j)], axes_[0][i - 1],
                       axes_[0][i], axes_[0][i + 1]);
    }
    if (worst > tol)
      throw NonConvexInputError(
          "convexity flag contradicts sampled values (violation " +
          std::to_string(worst) + ")");
  }
  flag_ = flag;
}

bool GridFunction::all_sentinel() const {
  for (double v : values_)
    if (!is_sentinel(v)) return false;
  return true;
}

double GridFunction::max_spacing() const {
  double h = 0.0;
  for (const Axis& a : axes_)
    for (std::size_t i = 1; i < a.size(); ++i)
      h = std::max(h, a[i] - a[i - 1]);
  return h;
}

}  // namespace bot
