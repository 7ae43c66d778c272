#include "bot/convex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bot {

namespace {

// Sentinel nodes are excluded from conjugate scans entirely.
template <typename Better>
double scan_conjugate(const GridFunction& f, const Vec& q, Better better,
                      double init) {
  double best = init;
  bool found = false;
  for (std::size_t i = 0; i < f.node_count(); ++i) {
    double fv = f.value(i);
    if (is_sentinel(fv)) continue;
    double cand = dot(q, f.node(i)) - fv;
    if (!found || better(cand, best)) {
      best = cand;
      found = true;
    }
  }
  if (!found) throw EmptyDomainError("conjugate of an all-sentinel function");
  return best;
}

}  // namespace

double conjugate_value(const GridFunction& f, const Vec& q) {
  return scan_conjugate(f, q, [](double a, double b) { return a > b; },
                        -std::numeric_limits<double>::infinity());
}

double concave_conjugate_value(const GridFunction& g, const Vec& v) {
  return scan_conjugate(g, v, [](double a, double b) { return a < b; },
                        std::numeric_limits<double>::infinity());
}

namespace {

std::size_t grid_size(const std::vector<Axis>& axes) {
  std::size_t n = 1;
  for (const Axis& a : axes) n *= a.size();
  return n;
}

}  // namespace

GridFunction legendre_conjugate(const GridFunction& f,
                                std::vector<Axis> dual_axes) {
  if (f.all_sentinel())
    throw EmptyDomainError("legendre_conjugate: empty effective domain");
  std::size_t n = grid_size(dual_axes);
  GridFunction out(std::move(dual_axes), std::vector<double>(n, 0.0));
  for (std::size_t j = 0; j < n; ++j)
    out.value(j) = conjugate_value(f, out.node(j));
  out.set_convexity(Convexity::kConvex);
  return out;
}

GridFunction concave_conjugate(const GridFunction& g,
                               std::vector<Axis> dual_axes) {
  if (g.all_sentinel())
    throw EmptyDomainError("concave_conjugate: empty effective domain");
  std::size_t n = grid_size(dual_axes);
  GridFunction out(std::move(dual_axes), std::vector<double>(n, 0.0));
  for (std::size_t j = 0; j < n; ++j)
    out.value(j) = concave_conjugate_value(g, out.node(j));
  out.set_convexity(Convexity::kConcave);
  return out;
}

GridFunction negate(const GridFunction& f) {
  std::vector<double> v = f.values();
  for (double& x : v)
    if (!is_sentinel(x)) x = -x;
  Convexity flag = Convexity::kUnknown;
  if (f.convexity() == Convexity::kConvex) flag = Convexity::kConcave;
  if (f.convexity() == Convexity::kConcave) flag = Convexity::kConvex;
  return GridFunction(f.axes(), std::move(v), flag);
}

ConvexityReport is_convex(const GridFunction& f, double tol) {
  ConvexityReport report;
  report.where = f.node(0);
  auto check = [&](std::size_t a, std::size_t m, std::size_t b, double lam) {
    double fa = f.value(a), fm = f.value(m), fb = f.value(b);
    if (is_sentinel(fa) || is_sentinel(fb)) return;
    double viol;
    if (is_sentinel(fm)) {
      viol = kSentinel;
    } else {
      viol = fm - (lam * fa + (1.0 - lam) * fb);
    }
    if (viol > report.worst_violation) {
      report.worst_violation = viol;
      report.where = f.node(m);
    }
  };

  if (f.dim() == 1) {
    const Axis& x = f.axis(0);
    for (std::size_t i = 1; i + 1 < x.size(); ++i)
      check(i - 1, i, i + 1, (x[i + 1] - x[i]) / (x[i + 1] - x[i - 1]));
  } else {
    const Axis& x0 = f.axis(0);
    const Axis& x1 = f.axis(1);
    std::size_t n0 = x0.size(), n1 = x1.size();
    for (std::size_t i = 0; i < n0; ++i)
      for (std::size_t j = 1; j + 1 < n1; ++j)
        check(f.flat_index(i, j - 1), f.flat_index(i, j),
              f.flat_index(i, j + 1),
              (x1[j + 1] - x1[j]) / (x1[j + 1] - x1[j - 1]));
    for (std::size_t j = 0; j < n1; ++j)
      for (std::size_t i = 1; i + 1 < n0; ++i)
        check(f.flat_index(i - 1, j), f.flat_index(i, j),
              f.flat_index(i + 1, j),
              (x0[i + 1] - x0[i]) / (x0[i + 1] - x0[i - 1]));
    // Diagonal triples, only where the three nodes are collinear.
    for (std::size_t i = 1; i + 1 < n0; ++i)
      for (std::size_t j = 1; j + 1 < n1; ++j) {
        double l0 = (x0[i + 1] - x0[i]) / (x0[i + 1] - x0[i - 1]);
        double l1p = (x1[j + 1] - x1[j]) / (x1[j + 1] - x1[j - 1]);
        if (std::abs(l0 - l1p) < 1e-12)
          check(f.flat_index(i - 1, j - 1), f.flat_index(i, j),
                f.flat_index(i + 1, j + 1), l0);
        double l1m = (x1[j - 1] - x1[j]) / (x1[j - 1] - x1[j + 1]);
        if (std::abs(l0 - l1m) < 1e-12)
          check(f.flat_index(i - 1, j + 1), f.flat_index(i, j),
                f.flat_index(i + 1, j - 1), l0);
      }
  }
  report.convex = report.worst_violation <= tol;
  return report;
}

namespace {

// Derivative along axis k at x with half-width w, clamped to the domain.
double directional_difference(const GridFunction& f, const Vec& x, int k,
                              double w) {
  const Axis& a = f.axis(k);
  double lo = a.front(), hi = a.back();
  Vec xp = x, xm = x;
  xp[k] = std::min(x[k] + w, hi);
  xm[k] = std::max(x[k] - w, lo);
  if (xp[k] == xm[k]) throw OutOfDomainError("degenerate gradient stencil");
  double fp = f.interpolate(xp);
  double fm = f.interpolate(xm);
  if (is_sentinel(fp) || is_sentinel(fm))
    throw OutOfDomainError("gradient stencil hits a sentinel value");
  return (fp - fm) / (xp[k] - xm[k]);
}

double local_spacing(const Axis& a, double x) {
  auto it = std::upper_bound(a.begin(), a.end(), x);
  std::size_t hi = static_cast<std::size_t>(it - a.begin());
  if (hi == 0) hi = 1;
  if (hi == a.size()) hi = a.size() - 1;
  return a[hi] - a[hi - 1];
}

}  // namespace

Vec grid_gradient(const GridFunction& f, const Vec& x) {
  if (!f.inside(x))
    throw OutOfDomainError("grid_gradient: point outside hull at " +
                           to_string(x));
  Vec g = Vec::zero(f.dim());
  for (int k = 0; k < f.dim(); ++k) {
    double h = local_spacing(f.axis(k), x[k]);
    g[k] = directional_difference(f, x, k, h);
  }
  return g;
}

std::optional<Vec> stable_gradient(const GridFunction& f, const Vec& x,
                                   double tol) {
  if (!f.inside(x)) return std::nullopt;
  Vec g = Vec::zero(f.dim());
  for (int k = 0; k < f.dim(); ++k) {
    double h = local_spacing(f.axis(k), x[k]);
    double d[3];
    try {
      for (int s = 0; s < 3; ++s)
        d[s] = directional_difference(f, x, k, h * static_cast<double>(1 << s));
    } catch (const OutOfDomainError&) {
      return std::nullopt;
    }
    double spread = std::max({d[0], d[1], d[2]}) - std::min({d[0], d[1], d[2]});
    if (spread > tol) return std::nullopt;
    g[k] = d[0];
  }
  return g;
}

}  // namespace bot
