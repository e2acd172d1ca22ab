#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "qdiss/matrix.hpp"
#include "qdiss/minimize.hpp"

namespace qdiss::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline double uniform(double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline Complex gaussian_complex() {
  std::normal_distribution<double> n(0.0, 1.0);
  return {n(rng()), n(rng())};
}

inline ComplexMatrix ginibre(std::size_t dim) {
  ComplexMatrix g(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) g(r, c) = gaussian_complex();
  }
  return g;
}

/// Random full-rank density matrix G G^dagger / tr(G G^dagger).
inline ComplexMatrix random_density(std::size_t dim) {
  const ComplexMatrix g = ginibre(dim);
  ComplexMatrix rho = g * dagger(g);
  rho *= 1.0 / trace(rho).real();
  return rho;
}

/// Haar-ish random unitary from Gram-Schmidt on a Ginibre matrix (columns).
inline ComplexMatrix random_unitary(std::size_t dim) {
  ComplexMatrix u = ginibre(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t k = 0; k < c; ++k) {
      Complex dot{};
      for (std::size_t r = 0; r < dim; ++r) dot += std::conj(u(r, k)) * u(r, c);
      for (std::size_t r = 0; r < dim; ++r) u(r, c) -= dot * u(r, k);
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < dim; ++r) norm += std::norm(u(r, c));
    norm = std::sqrt(norm);
    for (std::size_t r = 0; r < dim; ++r) u(r, c) /= norm;
  }
  return u;
}

/// Normalized random ket as a column density |v><v|.
inline ComplexMatrix random_pure(std::size_t dim) {
  std::vector<Complex> v(dim);
  double norm = 0.0;
  for (auto& x : v) {
    x = gaussian_complex();
    norm += std::norm(x);
  }
  for (auto& x : v) x /= std::sqrt(norm);
  return ComplexMatrix::outer(v);
}

inline BasisAngles random_angles() {
  return BasisAngles(uniform(0.0, 2.0 * std::numbers::pi), uniform(0.0, 2.0 * std::numbers::pi));
}

/// Minimum eigenvalue, used for PSD checks.
inline double min_eigenvalue(const ComplexMatrix& a) { return hermitian_eigenvalues(a).front(); }

/// Cheap minimizer for property suites where the objective is flat or only a bound is checked.
inline MinimizerSettings coarse_minimizer() {
  MinimizerSettings m;
  m.grid_n = 6;
  m.refine_iters = 20;
  return m;
}

}  // namespace qdiss::testing
