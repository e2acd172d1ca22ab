#pragma once

#include <functional>

namespace qdiss {

/// Measurement-basis parameters (theta, phi), wrapped into [0, 2pi) on construction.
class BasisAngles {
 public:
  BasisAngles() = default;
  BasisAngles(double theta, double phi);

  double theta() const { return theta_; }
  double phi() const { return phi_; }

  /// Representative with theta in [0, pi). theta -> theta + pi negates both
  /// basis vectors and leaves every projector unchanged.
  BasisAngles canonical() const;

  friend bool operator==(const BasisAngles&, const BasisAngles&) = default;

 private:
  double theta_ = 0.0;
  double phi_ = 0.0;
};

struct MinimizerSettings {
  int grid_n = 64;         // grid_n x grid_n scan of [0, 2pi)^2
  int refine_iters = 200;  // simplex iterations after the scan; 0 = grid only
  double tol = 1e-6;       // absolute tolerance on the reported minimum
  double xtol = 1e-7;      // simplex diameter at which refinement stops

  void validate() const;
};

struct AngleMinimum {
  double value = 0.0;
  BasisAngles argmin;
  int evaluations = 0;
};

using AngleObjective = std::function<double(const BasisAngles&)>;

/// Global minimum of a periodic objective on the (theta, phi) torus: a grid
/// scan (ties resolved to the lexicographically first (theta, phi)) followed
/// by Nelder-Mead refinement from the best grid point. The returned argmin is
/// canonicalized. Throws NumericalError on a non-finite objective value.
AngleMinimum minimize_over_angles(const AngleObjective& objective, const MinimizerSettings& settings);

}  // namespace qdiss
