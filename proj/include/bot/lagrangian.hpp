#ifndef BOT_LAGRANGIAN_HPP
#define BOT_LAGRANGIAN_HPP

#include <memory>
#include <optional>
#include <vector>

#include "bot/convex.hpp"
#include "bot/grid_function.hpp"

namespace bot {

/// Convex scalar function of a d-vector, either the closed-form isotropic
/// quadratic (c/2)|z|^2 or a sampled convex grid function. The common
/// currency for kinetic terms L0, potentials U and their conjugates.
class ScalarField {
 public:
  /// (curvature/2) |z|^2; conjugate is (1/(2 curvature)) |q|^2.
  static ScalarField quadratic(double curvature);
  static ScalarField sampled(GridFunction f);

  bool is_quadratic() const { return grid_ == nullptr; }
  double curvature() const { return curvature_; }
  const GridFunction* grid() const { return grid_.get(); }

  /// Sentinel outside a sampled domain.
  double value(const Vec& z) const;
  Vec gradient(const Vec& z) const;

  /// Pointwise conjugate sup_z <q,z> - f(z); exhaustive scan for sampled
  /// fields, closed form for quadratics.
  double conjugate_value(const Vec& q) const;

  /// Argmax of the conjugate scan; equals the conjugate's gradient where
  /// the maximizer is unique (envelope rule). Closed form for quadratics.
  Vec conjugate_gradient(const Vec& q) const;

  /// Conjugate as a ScalarField: analytic for quadratics, a sampled grid
  /// over dual_axes otherwise.
  ScalarField conjugate(const std::vector<Axis>& dual_axes) const;

 private:
  ScalarField() = default;
  double curvature_ = 1.0;
  std::shared_ptr<const GridFunction> grid_;
};

/// Parameters of the coercivity/growth hypotheses: L(x,p) is required to be
/// jointly convex (A1), to have a nonempty finiteness set F(x) with
/// dist(0, F(x)) <= rho (1+|x|) (A2), and to dominate
/// theta(max{0, |p| - alpha |x|}) - beta |x| (A3).
struct AssumptionParams {
  double rho = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  /// Non-decreasing coercive minorant on [0, inf).
  std::optional<GridFunction> theta;
};

enum class LagrangianKind { kQuadratic, kStateIndependent, kSeparable };

/// Time-independent Lagrangian L(x,p), jointly convex by construction:
///   Quadratic(m):        L = (m/2)|p|^2
///   StateIndependent:    L = L0(p), L0 convex
///   SeparableConvex:     L = L0(p) + U(x), both convex
class LagrangianSpec {
 public:
  static LagrangianSpec quadratic(double mass);
  static LagrangianSpec state_independent(ScalarField kinetic);
  static LagrangianSpec separable(ScalarField kinetic, ScalarField potential);

  LagrangianKind kind() const { return kind_; }
  bool state_dependent() const { return kind_ == LagrangianKind::kSeparable; }
  double mass() const { return mass_; }
  const ScalarField& kinetic() const { return kinetic_; }
  const ScalarField& potential() const { return potential_; }

  double value(const Vec& x, const Vec& p) const;
  Vec grad_p(const Vec& x, const Vec& p) const;
  Vec grad_x(const Vec& x, const Vec& p) const;

  AssumptionParams assumptions;

 private:
  LagrangianKind kind_ = LagrangianKind::kQuadratic;
  double mass_ = 1.0;
  ScalarField kinetic_;
  ScalarField potential_;
};

/// H(x,q) = sup_p <p,q> - L(x,p); convex in q, concave in x on the
/// covered variants: H = H0(q) for state-independent L, H0(q) - U(x) for
/// the separable family.
class HamiltonianSpec {
 public:
  LagrangianKind kind() const { return kind_; }
  double mass() const { return mass_; }
  const ScalarField& h0() const { return h0_; }
  const ScalarField& potential() const { return potential_; }

  double value(const Vec& x, const Vec& q) const;
  Vec dq(const Vec& x, const Vec& q) const;
  Vec dx(const Vec& x, const Vec& q) const;

 private:
  friend HamiltonianSpec hamiltonian_of(const LagrangianSpec&);
  LagrangianKind kind_ = LagrangianKind::kQuadratic;
  double mass_ = 1.0;
  ScalarField h0_;
  ScalarField potential_;
};

/// Conjugate of L0 (closed form for quadratics, scan otherwise), with a
/// biconjugation consistency check on sampled kinetics.
HamiltonianSpec hamiltonian_of(const LagrangianSpec& lagrangian);

/// Dual Lagrangian on M* x M*:
///   Ltilde(v,q) = sup_{y,p} { <q,y> + <v,p> - L(y,p) }.
/// State-independent L constrains q to 0 with value L0*(v); the separable
/// family gives Ltilde(v,q) = L0*(v) + U*(q).
struct DualLagrangian {
  /// True when feasibility forces q = 0 (state-independent family).
  bool velocity_constrained = true;
  /// L0* as a function of the dual state v.
  ScalarField state_cost;
  /// U* as a function of the dual velocity q (separable family only).
  std::optional<ScalarField> velocity_cost;

  /// Sentinel when the q = 0 constraint is violated beyond q_tol.
  double value(const Vec& v, const Vec& q, double q_tol = 1e-9) const;
};

DualLagrangian dual_lagrangian(const LagrangianSpec& lagrangian,
                               const std::vector<Axis>& dual_axes);

struct AssumptionWitness {
  Vec x;
  Vec p;
  double violation = 0.0;
};

struct AssumptionReport {
  bool a1 = true;
  bool a2 = true;
  bool a3 = true;
  std::optional<AssumptionWitness> a1_witness;
  std::optional<AssumptionWitness> a2_witness;
  std::optional<AssumptionWitness> a3_witness;
  bool all() const { return a1 && a2 && a3; }
};

/// Samples (A1) midpoint convexity on random joint pairs, (A2) the nearest
/// finite velocity against rho (1+|x|), and (A3) the growth minorant.
/// Report-only: failures come back with a witness point.
AssumptionReport validate_assumptions(const LagrangianSpec& lagrangian,
                                      const Vec& box_lo, const Vec& box_hi,
                                      int n_samples, std::uint64_t seed = 17);

}  // namespace bot

#endif  // BOT_LAGRANGIAN_HPP
