#include "qdiss/states.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "qdiss/errors.hpp"

namespace qdiss {

namespace {

std::vector<Complex> basis_ket(std::size_t index) {
  std::vector<Complex> v(8);
  v[index] = 1.0;
  return v;
}

DensityMatrix white_noise_mix(double p, const DensityMatrix& target) {
  DensityMatrix rho = ComplexMatrix::identity(8);
  rho *= (1.0 - p) / 8.0;
  rho += Complex(p) * target;
  return rho;
}

}  // namespace

std::string_view state_name(StateKind kind) {
  switch (kind) {
    case StateKind::MixedGHZ: return "ghz";
    case StateKind::MixedW: return "w";
    case StateKind::SeparableMixture: return "sepmix";
    case StateKind::MixedBiseparable: return "bisep";
  }
  return "?";
}

StateKind parse_state_kind(std::string_view name) {
  for (StateKind k : kAllStateKinds) {
    if (state_name(k) == name) return k;
  }
  throw ArgumentError("unknown state family '" + std::string(name) + "' (expected ghz, w, sepmix, bisep)");
}

DensityMatrix build_state(const StateFamily& family) {
  const double p = family.p;
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ArgumentError("classical randomness p must lie in [0,1], got " + std::to_string(p));
  }
  const double r2 = 1.0 / std::sqrt(2.0);
  switch (family.kind) {
    case StateKind::MixedGHZ: {
      std::vector<Complex> ghz(8);
      ghz[0b000] = r2;
      ghz[0b111] = r2;
      return white_noise_mix(p, ComplexMatrix::outer(ghz));
    }
    case StateKind::MixedW: {
      const double r3 = 1.0 / std::sqrt(3.0);
      std::vector<Complex> w(8);
      w[0b001] = r3;
      w[0b010] = r3;
      w[0b100] = r3;
      return white_noise_mix(p, ComplexMatrix::outer(w));
    }
    case StateKind::SeparableMixture: {
      // |+++><+++| has every entry 1/8.
      DensityMatrix rho(8, std::vector<Complex>(64, Complex((1.0 - p) / 8.0)));
      rho += Complex(p) * ComplexMatrix::outer(basis_ket(0b000));
      return rho;
    }
    case StateKind::MixedBiseparable: {
      std::vector<Complex> phi_plus(8);  // |0>(|00>+|11>)/sqrt2
      phi_plus[0b000] = r2;
      phi_plus[0b011] = r2;
      std::vector<Complex> psi_minus(8);  // |0>(|01>-|10>)/sqrt2
      psi_minus[0b001] = r2;
      psi_minus[0b010] = -r2;
      DensityMatrix target = ComplexMatrix::outer(phi_plus) + ComplexMatrix::outer(psi_minus);
      target *= 0.5;
      return white_noise_mix(p, target);
    }
  }
  throw ArgumentError("unknown state kind");
}

}  // namespace qdiss
