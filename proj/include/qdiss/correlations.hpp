#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "qdiss/matrix.hpp"
#include "qdiss/minimize.hpp"
#include "qdiss/states.hpp"

namespace qdiss {

// Eigenvalues in (-kPsdClampTol, 0) are treated as zero; anything lower is a StateError.
inline constexpr double kPsdClampTol = 1e-10;
// Measurement outcomes rarer than this contribute nothing to conditional entropies.
inline constexpr double kNegligibleBranch = 1e-14;

/// Von Neumann entropy in bits.
double vn_entropy(const DensityMatrix& rho);

/// Projectors onto u1 = cos t|0> + e^{i f} sin t|1>, u2 = sin t|0> - e^{i f} cos t|1>.
std::array<ComplexMatrix, 2> one_particle_projectors(const BasisAngles& angles);

/// Projectors onto
///   v1 = cos t|00> + e^{i f} sin t|11>,  v2 = sin t|00> - e^{i f} cos t|11>,
///   v3 = cos t|01> + e^{i f} sin t|10>,  v4 = sin t|01> - e^{i f} cos t|10>.
std::array<ComplexMatrix, 4> two_particle_projectors(const BasisAngles& angles);

struct ConditionalBranch {
  double probability = 0.0;
  /// Normalized state of the unmeasured qubits; the zero matrix when the
  /// outcome probability is below kNegligibleBranch.
  DensityMatrix post_state;
};

/// Outcomes of a projective measurement on one or two qubits of rho. The
/// one-particle basis is used for a single measured qubit, the two-particle
/// basis for a pair (lower index is the left factor).
std::vector<ConditionalBranch> conditional_branches(const DensityMatrix& rho, const QubitIndexSet& measured,
                                                    const BasisAngles& angles);

/// sum_j p_j S(post_j) over conditional_branches.
double avg_conditional_entropy(const DensityMatrix& rho, const QubitIndexSet& measured, const BasisAngles& angles);

/// Three-party quantum mutual information
/// S(X)+S(Y)+S(Z) - [S(XY)+S(YZ)+S(XZ)] + S(XYZ).
double mutual_info_i3(const DensityMatrix& rho);

/// Measurement-based three-party information with every one-particle
/// measurement taken in the same basis:
/// S(XY) - S(Y|X) - S(X|Y) - S(X|Z) - S(Y|Z) + S(XY|Z).
/// Each two-party term is evaluated on the corresponding two-qubit reduced state.
double j3(const DensityMatrix& rho, const BasisAngles& angles);

/// D1 = J3 - I3 at fixed angles.
double dissension1_at(const DensityMatrix& rho, const BasisAngles& angles);

/// D2 = S(X|YZ) + S(YZ) - S(XYZ) at fixed angles, measuring qubits {1,2}.
double dissension2_at(const DensityMatrix& rho, const BasisAngles& angles);

/// delta1 = min over angles of D1.
AngleMinimum delta1(const DensityMatrix& rho, const MinimizerSettings& settings = {});

/// delta2 = min over angles of D2.
AngleMinimum delta2(const DensityMatrix& rho, const MinimizerSettings& settings = {});

/// Two-qubit discord with measurement on measured_qubit (0 or 1):
/// S(rho_measured) + min S(other | measured) - S(rho2).
AngleMinimum discord_pair(const DensityMatrix& rho2, std::size_t measured_qubit,
                          const MinimizerSettings& settings = {});

/// delta_m = D(rho_AB) + D(rho_AC) - delta2(rho), A = qubit 0, discords measured on B and C.
double monogamy_score(const DensityMatrix& rho, const MinimizerSettings& settings = {});

struct CorrelationTriple {
  double delta1 = 0.0;
  double delta2 = 0.0;
  double delta_m = 0.0;
  BasisAngles argmin1;
  BasisAngles argmin2;
};

/// All three measures; delta2 is minimized once and reused for delta_m.
CorrelationTriple evaluate_correlations(const DensityMatrix& rho, const MinimizerSettings& settings = {});

}  // namespace qdiss
