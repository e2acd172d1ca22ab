#include "qdiss/correlations.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "qdiss/errors.hpp"

namespace qdiss {

namespace {

ComplexMatrix projector(std::span<const Complex> ket) { return ComplexMatrix::outer(ket); }

// Full basis index built from a kept-subsystem index and a measured-subsystem
// index, each read high bit first over its qubit list.
std::size_t scatter(std::size_t kept_index, const std::vector<std::size_t>& kept, std::size_t measured_index,
                    const std::vector<std::size_t>& measured, std::size_t n) {
  std::size_t full = 0;
  for (std::size_t k = 0; k < kept.size(); ++k) {
    const std::size_t bit = (kept_index >> (kept.size() - 1 - k)) & 1U;
    full |= bit << (n - 1 - kept[k]);
  }
  for (std::size_t k = 0; k < measured.size(); ++k) {
    const std::size_t bit = (measured_index >> (measured.size() - 1 - k)) & 1U;
    full |= bit << (n - 1 - measured[k]);
  }
  return full;
}

// Precomputed pieces shared by every J3 evaluation of one state.
struct J3Terms {
  explicit J3Terms(const DensityMatrix& rho)
      : full(rho),
        xy(partial_trace(rho, {2})),
        xz(partial_trace(rho, {1})),
        yz(partial_trace(rho, {0})),
        s_xy(vn_entropy(xy)) {}

  double at(const BasisAngles& a) const {
    return s_xy - avg_conditional_entropy(xy, {0}, a)  // S(Y | Pi_X)
           - avg_conditional_entropy(xy, {1}, a)       // S(X | Pi_Y)
           - avg_conditional_entropy(xz, {1}, a)       // S(X | Pi_Z)
           - avg_conditional_entropy(yz, {1}, a)       // S(Y | Pi_Z)
           + avg_conditional_entropy(full, {2}, a);    // S(XY | Pi_Z)
  }

  const DensityMatrix& full;
  DensityMatrix xy;
  DensityMatrix xz;
  DensityMatrix yz;
  double s_xy;
};

void require_three_qubits(const DensityMatrix& rho, const char* what) {
  if (rho.dim() != 8) {
    throw ArgumentError(std::string(what) + ": expected an 8x8 three-qubit density matrix, got dim " +
                        std::to_string(rho.dim()));
  }
}

}  // namespace

double vn_entropy(const DensityMatrix& rho) {
  const auto eig = hermitian_eigenvalues(rho);
  double s = 0.0;
  for (double lambda : eig) {
    if (lambda <= -kPsdClampTol) {
      std::ostringstream msg;
      msg << "vn_entropy: matrix is not positive semidefinite (eigenvalue " << lambda << ")";
      throw StateError(msg.str());
    }
    if (lambda > 0.0) s -= lambda * std::log2(lambda);
  }
  return s;
}

std::array<ComplexMatrix, 2> one_particle_projectors(const BasisAngles& angles) {
  const double c = std::cos(angles.theta());
  const double s = std::sin(angles.theta());
  const Complex ph = std::polar(1.0, angles.phi());
  const std::array<Complex, 2> u1{c, ph * s};
  const std::array<Complex, 2> u2{s, -ph * c};
  return {projector(u1), projector(u2)};
}

std::array<ComplexMatrix, 4> two_particle_projectors(const BasisAngles& angles) {
  const double c = std::cos(angles.theta());
  const double s = std::sin(angles.theta());
  const Complex ph = std::polar(1.0, angles.phi());
  // Basis order |00>, |01>, |10>, |11>.
  const std::array<Complex, 4> v1{c, 0.0, 0.0, ph * s};
  const std::array<Complex, 4> v2{s, 0.0, 0.0, -ph * c};
  const std::array<Complex, 4> v3{0.0, c, ph * s, 0.0};
  const std::array<Complex, 4> v4{0.0, s, -ph * c, 0.0};
  return {projector(v1), projector(v2), projector(v3), projector(v4)};
}

std::vector<ConditionalBranch> conditional_branches(const DensityMatrix& rho, const QubitIndexSet& measured,
                                                    const BasisAngles& angles) {
  const std::size_t n = rho.qubits();
  if (measured.empty() || measured.size() >= n) {
    throw ArgumentError("conditional_branches: measured set must be non-empty and leave at least one qubit");
  }
  if (measured.size() > 2) throw ArgumentError("conditional_branches: at most two qubits can be measured");
  for (std::size_t q : measured) {
    if (q >= n) throw ArgumentError("conditional_branches: qubit " + std::to_string(q) + " out of range");
  }

  std::vector<ComplexMatrix> projectors;
  if (measured.size() == 1) {
    const auto pr = one_particle_projectors(angles);
    projectors.assign(pr.begin(), pr.end());
  } else {
    const auto pr = two_particle_projectors(angles);
    projectors.assign(pr.begin(), pr.end());
  }

  const auto kept = measured.complement(n).indices();
  const auto& meas = measured.indices();
  const std::size_t kdim = std::size_t{1} << kept.size();
  const std::size_t mdim = std::size_t{1} << meas.size();

  std::vector<ConditionalBranch> branches;
  branches.reserve(projectors.size());
  ComplexMatrix block(mdim);
  for (const auto& proj : projectors) {
    // post(a,b) = tr_measured[ Pi rho_ab Pi ], rho_ab the measured block at kept (a,b).
    DensityMatrix post(kdim);
    for (std::size_t a = 0; a < kdim; ++a) {
      for (std::size_t b = 0; b < kdim; ++b) {
        for (std::size_t m = 0; m < mdim; ++m) {
          for (std::size_t k = 0; k < mdim; ++k) block(m, k) = rho(scatter(a, kept, m, meas, n), scatter(b, kept, k, meas, n));
        }
        Complex acc{};
        for (std::size_t m = 0; m < mdim; ++m) {
          for (std::size_t k = 0; k < mdim; ++k) {
            const Complex left = proj(m, k);
            if (left == Complex{}) continue;
            for (std::size_t l = 0; l < mdim; ++l) acc += left * block(k, l) * proj(l, m);
          }
        }
        post(a, b) = acc;
      }
    }
    double prob = trace(post).real();
    if (prob < kNegligibleBranch) {
      branches.push_back({std::max(prob, 0.0), DensityMatrix(kdim)});
      continue;
    }
    post *= 1.0 / prob;
    branches.push_back({prob, std::move(post)});
  }
  return branches;
}

double avg_conditional_entropy(const DensityMatrix& rho, const QubitIndexSet& measured, const BasisAngles& angles) {
  double s = 0.0;
  for (const auto& br : conditional_branches(rho, measured, angles)) {
    if (br.probability < kNegligibleBranch) continue;
    s += br.probability * vn_entropy(br.post_state);
  }
  return s;
}

double mutual_info_i3(const DensityMatrix& rho) {
  require_three_qubits(rho, "mutual_info_i3");
  return vn_entropy(partial_trace(rho, {1, 2})) + vn_entropy(partial_trace(rho, {0, 2})) +
         vn_entropy(partial_trace(rho, {0, 1})) -
         (vn_entropy(partial_trace(rho, {2})) + vn_entropy(partial_trace(rho, {0})) +
          vn_entropy(partial_trace(rho, {1}))) +
         vn_entropy(rho);
}

double j3(const DensityMatrix& rho, const BasisAngles& angles) {
  require_three_qubits(rho, "j3");
  return J3Terms(rho).at(angles);
}

double dissension1_at(const DensityMatrix& rho, const BasisAngles& angles) {
  return j3(rho, angles) - mutual_info_i3(rho);
}

double dissension2_at(const DensityMatrix& rho, const BasisAngles& angles) {
  require_three_qubits(rho, "dissension2_at");
  return avg_conditional_entropy(rho, {1, 2}, angles) + vn_entropy(partial_trace(rho, {0})) - vn_entropy(rho);
}

AngleMinimum delta1(const DensityMatrix& rho, const MinimizerSettings& settings) {
  require_three_qubits(rho, "delta1");
  const J3Terms terms(rho);
  const double i3 = mutual_info_i3(rho);
  return minimize_over_angles([&](const BasisAngles& a) { return terms.at(a) - i3; }, settings);
}

AngleMinimum delta2(const DensityMatrix& rho, const MinimizerSettings& settings) {
  require_three_qubits(rho, "delta2");
  const double constant = vn_entropy(partial_trace(rho, {0})) - vn_entropy(rho);
  return minimize_over_angles(
      [&](const BasisAngles& a) { return avg_conditional_entropy(rho, {1, 2}, a) + constant; }, settings);
}

AngleMinimum discord_pair(const DensityMatrix& rho2, std::size_t measured_qubit, const MinimizerSettings& settings) {
  if (rho2.dim() != 4) throw ArgumentError("discord_pair: expected a 4x4 two-qubit density matrix");
  if (measured_qubit > 1) throw ArgumentError("discord_pair: measured qubit must be 0 or 1");
  const QubitIndexSet measured{measured_qubit};
  const double constant = vn_entropy(partial_trace(rho2, {1 - measured_qubit})) - vn_entropy(rho2);
  return minimize_over_angles(
      [&](const BasisAngles& a) { return avg_conditional_entropy(rho2, measured, a) + constant; }, settings);
}

namespace {

double pairwise_discord_sum(const DensityMatrix& rho, const MinimizerSettings& settings) {
  return discord_pair(partial_trace(rho, {2}), 1, settings).value + discord_pair(partial_trace(rho, {1}), 1, settings).value;
}

}  // namespace

double monogamy_score(const DensityMatrix& rho, const MinimizerSettings& settings) {
  require_three_qubits(rho, "monogamy_score");
  return pairwise_discord_sum(rho, settings) - delta2(rho, settings).value;
}

CorrelationTriple evaluate_correlations(const DensityMatrix& rho, const MinimizerSettings& settings) {
  require_three_qubits(rho, "evaluate_correlations");
  const AngleMinimum d1 = delta1(rho, settings);
  const AngleMinimum d2 = delta2(rho, settings);
  return CorrelationTriple{d1.value, d2.value, pairwise_discord_sum(rho, settings) - d2.value, d1.argmin, d2.argmin};
}

}  // namespace qdiss
