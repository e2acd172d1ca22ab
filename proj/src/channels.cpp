#include "qdiss/channels.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "qdiss/errors.hpp"

namespace qdiss {

namespace {

void require_unit_interval(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream msg;
    msg << name << " must lie in [0,1], got " << x;
    throw ArgumentError(msg.str());
  }
}

}  // namespace

void ChannelSpec::validate() const {
  require_unit_interval(q, "q");
  if (!(decay_rate > 0.0) || !std::isfinite(decay_rate)) {
    std::ostringstream msg;
    msg << "decay rate must be positive, got " << decay_rate;
    throw ArgumentError(msg.str());
  }
}

std::string_view channel_name(ChannelFamily family) {
  switch (family) {
    case ChannelFamily::GAD: return "gad";
    case ChannelFamily::Dephasing: return "dephasing";
    case ChannelFamily::Depolarizing: return "depolarizing";
  }
  return "?";
}

ChannelFamily parse_channel_family(std::string_view name) {
  for (ChannelFamily f : kAllChannelFamilies) {
    if (channel_name(f) == name) return f;
  }
  throw ArgumentError("unknown channel '" + std::string(name) + "' (expected gad, dephasing, depolarizing)");
}

std::string describe(const ChannelSpec& spec) {
  std::ostringstream out;
  out << channel_name(spec.family);
  if (spec.family == ChannelFamily::GAD) out << "(q=" << spec.q << ")";
  return out.str();
}

double completeness_error(const KrausSet& k) {
  if (k.ops.empty()) throw ArgumentError("empty Kraus set");
  ComplexMatrix sum(k.ops.front().dim());
  for (const auto& op : k.ops) sum += matmul(dagger(op), op);
  return max_abs_diff(sum, ComplexMatrix::identity(sum.dim()));
}

double gamma_of_t(double rate, double t) {
  if (!(t >= 0.0)) throw ArgumentError("time must be non-negative, got " + std::to_string(t));
  if (!(rate > 0.0)) throw ArgumentError("decay rate must be positive, got " + std::to_string(rate));
  return -std::expm1(-rate * t);
}

KrausSet gad_kraus(double q, double gamma) {
  require_unit_interval(q, "q");
  require_unit_interval(gamma, "gamma");
  const double keep = std::sqrt(1.0 - gamma);
  const double a = std::sqrt(q);
  const double b = std::sqrt(1.0 - q);
  const double lower = std::sqrt(q * gamma);           // sqrt(q gamma) (sigma1 + i sigma2)/2 = |0><1|
  const double raise = std::sqrt((1.0 - q) * gamma);   // sqrt((1-q) gamma) (sigma1 - i sigma2)/2 = |1><0|
  return KrausSet{{
      ComplexMatrix{{a, 0.0}, {0.0, a * keep}},
      ComplexMatrix{{0.0, lower}, {0.0, 0.0}},
      ComplexMatrix{{b * keep, 0.0}, {0.0, b}},
      ComplexMatrix{{0.0, 0.0}, {raise, 0.0}},
  }};
}

KrausSet dephasing_kraus(double gamma) {
  require_unit_interval(gamma, "gamma");
  return KrausSet{{
      ComplexMatrix{{1.0, 0.0}, {0.0, std::sqrt(1.0 - gamma)}},
      ComplexMatrix{{0.0, 0.0}, {0.0, std::sqrt(gamma)}},
  }};
}

KrausSet depolarizing_kraus(double gamma) {
  require_unit_interval(gamma, "gamma");
  const double id = std::sqrt(1.0 - 0.75 * gamma);
  const double pauli = std::sqrt(0.25 * gamma);
  const Complex i{0.0, 1.0};
  return KrausSet{{
      ComplexMatrix{{id, 0.0}, {0.0, id}},
      ComplexMatrix{{0.0, pauli}, {pauli, 0.0}},
      ComplexMatrix{{0.0, -i * pauli}, {i * pauli, 0.0}},
      ComplexMatrix{{pauli, 0.0}, {0.0, -pauli}},
  }};
}

KrausSet kraus_for(const ChannelSpec& spec, double gamma) {
  switch (spec.family) {
    case ChannelFamily::GAD: return gad_kraus(spec.q, gamma);
    case ChannelFamily::Dephasing: return dephasing_kraus(gamma);
    case ChannelFamily::Depolarizing: return depolarizing_kraus(gamma);
  }
  throw ArgumentError("unknown channel family");
}

DensityMatrix apply_single_qubit_channel(const DensityMatrix& rho, const KrausSet& k, std::size_t qubit) {
  const std::size_t n = rho.qubits();
  if (qubit >= n) throw ArgumentError("channel target qubit " + std::to_string(qubit) + " out of range");
  for (const auto& op : k.ops) {
    if (op.dim() != 2) throw ArgumentError("single-qubit Kraus operators must be 2x2");
  }
  const std::size_t mask = std::size_t{1} << (n - 1 - qubit);
  const std::size_t dim = rho.dim();
  DensityMatrix out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::size_t bi = (i & mask) ? 1 : 0;
    const std::size_t i0 = i & ~mask;
    for (std::size_t j = 0; j < dim; ++j) {
      const std::size_t bj = (j & mask) ? 1 : 0;
      const std::size_t j0 = j & ~mask;
      Complex acc{};
      for (const auto& op : k.ops) {
        for (std::size_t a = 0; a < 2; ++a) {
          const Complex left = op(bi, a);
          if (left == Complex{}) continue;
          const std::size_t ia = a ? (i0 | mask) : i0;
          for (std::size_t b = 0; b < 2; ++b) {
            const Complex right = std::conj(op(bj, b));
            if (right == Complex{}) continue;
            acc += left * rho(ia, b ? (j0 | mask) : j0) * right;
          }
        }
      }
      out(i, j) = acc;
    }
  }
  return out;
}

DensityMatrix apply_product_channel(const DensityMatrix& rho, const KrausSet& k) {
  DensityMatrix out = rho;
  for (std::size_t q = 0; q < rho.qubits(); ++q) out = apply_single_qubit_channel(out, k, q);
  return out;
}

}  // namespace qdiss
