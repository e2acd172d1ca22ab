#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "qdiss/matrix.hpp"
#include "qdiss/states.hpp"

namespace qdiss {

enum class ChannelFamily { GAD, Dephasing, Depolarizing };

inline constexpr std::array<ChannelFamily, 3> kAllChannelFamilies = {ChannelFamily::GAD, ChannelFamily::Dephasing,
                                                                     ChannelFamily::Depolarizing};

inline constexpr double kDefaultDecayRate = 0.5;  // 1/s

/// One homogeneous single-qubit channel applied independently to every qubit.
struct ChannelSpec {
  ChannelFamily family = ChannelFamily::GAD;
  double q = 1.0;                         // GAD asymptotic bias; ignored for other families
  double decay_rate = kDefaultDecayRate;  // Gamma, 1/s

  void validate() const;
};

/// CLI names: gad, dephasing, depolarizing.
std::string_view channel_name(ChannelFamily family);
ChannelFamily parse_channel_family(std::string_view name);

/// Human-readable label, e.g. "gad(q=0.5)".
std::string describe(const ChannelSpec& spec);

struct KrausSet {
  std::vector<ComplexMatrix> ops;
};

/// max_ij |(sum_k K_k^dagger K_k - I)_ij|.
double completeness_error(const KrausSet& k);

/// gamma = 1 - exp(-rate * t); t >= 0, rate > 0.
double gamma_of_t(double rate, double t);

KrausSet gad_kraus(double q, double gamma);
KrausSet dephasing_kraus(double gamma);
KrausSet depolarizing_kraus(double gamma);
KrausSet kraus_for(const ChannelSpec& spec, double gamma);

/// rho -> sum_k K_k rho K_k^dagger with K_k acting on one qubit.
DensityMatrix apply_single_qubit_channel(const DensityMatrix& rho, const KrausSet& k, std::size_t qubit);

/// rho -> sum_{l,m,n} (K_l x K_m x K_n) rho (K_l x K_m x K_n)^dagger, evaluated
/// as three successive single-qubit applications. Works for any qubit count.
DensityMatrix apply_product_channel(const DensityMatrix& rho, const KrausSet& k);

/// True when a closed-form evolved-state table exists for the pair.
bool is_tabulated(StateKind kind, const ChannelSpec& spec);

struct TabulatedCombination {
  StateKind kind;
  ChannelSpec channel;
};

/// The thirteen (state, channel) pairs with closed forms, in a fixed order.
std::vector<TabulatedCombination> tabulated_combinations();

/// Closed-form evolved density matrix. Throws UnsupportedCombination for pairs
/// without a table.
DensityMatrix analytic_state(const StateFamily& family, const ChannelSpec& spec, double gamma);

}  // namespace qdiss
