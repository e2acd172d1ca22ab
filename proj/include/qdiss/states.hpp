#pragma once

#include <array>
#include <string>
#include <string_view>

#include "qdiss/matrix.hpp"

namespace qdiss {

using DensityMatrix = ComplexMatrix;

enum class StateKind { MixedGHZ, MixedW, SeparableMixture, MixedBiseparable };

inline constexpr std::array<StateKind, 4> kAllStateKinds = {StateKind::MixedGHZ, StateKind::MixedW,
                                                            StateKind::SeparableMixture, StateKind::MixedBiseparable};

/// Initial-state family with its classical randomness p in [0,1].
struct StateFamily {
  StateKind kind = StateKind::MixedGHZ;
  double p = 1.0;
};

/// CLI names: ghz, w, sepmix, bisep.
std::string_view state_name(StateKind kind);
/// Throws ArgumentError on an unknown name.
StateKind parse_state_kind(std::string_view name);

/// Builds the 8x8 initial density matrix:
///   ghz    (1-p) I/8 + p |GHZ><GHZ|
///   w      (1-p) I/8 + p |W><W|
///   sepmix p |000><000| + (1-p) |+++><+++|
///   bisep  (1-p) I/8 + (p/2) (|0,phi+><0,phi+| + |0,psi-><0,psi-|)
DensityMatrix build_state(const StateFamily& family);

}  // namespace qdiss
