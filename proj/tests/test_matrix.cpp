#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "qdiss/errors.hpp"
#include "qdiss/matrix.hpp"
#include "support.hpp"

using namespace qdiss;
using namespace qdiss::testing;

namespace {

double max_spectrum_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

// Direct element formula for ptrace over the last factor of a (da*db)-square matrix.
ComplexMatrix trace_last_factor(const ComplexMatrix& m, std::size_t db) {
  const std::size_t da = m.dim() / db;
  ComplexMatrix out(da);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) {
      for (std::size_t k = 0; k < db; ++k) out(i, j) += m(i * db + k, j * db + k);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("constructors validate dimension") {
  CHECK_THROWS_AS(ComplexMatrix(3), ArgumentError);
  CHECK_THROWS_AS(ComplexMatrix(2, std::vector<Complex>(3)), ArgumentError);
  CHECK_NOTHROW(ComplexMatrix(8));
  const ComplexMatrix m{{1, 2}, {3, 4}};
  CHECK(m(1, 0) == Complex(3));
  CHECK(m.qubits() == 1);
}

TEST_CASE("kron of Pauli matrices") {
  const ComplexMatrix x{{0, 1}, {1, 0}};
  const ComplexMatrix z{{1, 0}, {0, -1}};
  const ComplexMatrix xz = kron(x, z);
  // X (x) Z = [[0, Z], [Z, 0]]
  CHECK(xz(0, 2) == Complex(1));
  CHECK(xz(1, 3) == Complex(-1));
  CHECK(xz(2, 0) == Complex(1));
  CHECK(xz(0, 0) == Complex(0));
  CHECK(max_abs_diff(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(4)), ComplexMatrix::identity(8)) == 0.0);
}

TEST_CASE("qubit index set") {
  const QubitIndexSet s{2, 0};
  CHECK(s.indices() == std::vector<std::size_t>{0, 2});
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(1));
  CHECK(s.complement(3).indices() == std::vector<std::size_t>{1});
  CHECK_THROWS_AS((QubitIndexSet{1, 1}), ArgumentError);
}

TEST_CASE("partial trace of product states recovers factors") {
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_density(2);
    const auto b = random_density(2);
    const auto c = random_density(2);
    const auto abc = kron(kron(a, b), c);
    CHECK(max_abs_diff(partial_trace(abc, {1, 2}), a) < 1e-14);
    CHECK(max_abs_diff(partial_trace(abc, {0, 2}), b) < 1e-14);
    CHECK(max_abs_diff(partial_trace(abc, {0, 1}), c) < 1e-14);
    CHECK(max_abs_diff(partial_trace(abc, {1}), kron(a, c)) < 1e-14);
    CHECK(max_abs_diff(partial_trace(abc, {0}), kron(b, c)) < 1e-14);
  }
}

TEST_CASE("partial trace over the last qubit matches the block formula") {
  for (int trial = 0; trial < 100; ++trial) {
    const auto rho = random_density(8);
    CHECK(max_abs_diff(partial_trace(rho, {2}), trace_last_factor(rho, 2)) < 1e-15);
    CHECK(max_abs_diff(partial_trace(rho, {1, 2}), trace_last_factor(rho, 4)) < 1e-15);
  }
}

TEST_CASE("partial trace rejects bad qubits") {
  const auto rho = ComplexMatrix::identity(8);
  CHECK_THROWS_AS(partial_trace(rho, {3}), ArgumentError);
  CHECK(partial_trace(rho, {}).dim() == 8);
  CHECK(trace(partial_trace(rho, {0, 1, 2})) == Complex(8));
}

TEST_CASE("eigenvalues of known matrices") {
  const ComplexMatrix y{{0, Complex(0, -1)}, {Complex(0, 1), 0}};
  const auto ey = hermitian_eigenvalues(y);
  CHECK(ey[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(ey[1] == doctest::Approx(1.0).epsilon(1e-14));

  const std::vector<double> diag{3.0, -1.0, 0.5, 2.0};
  const auto ed = hermitian_eigenvalues(ComplexMatrix::diagonal(diag));
  CHECK(ed == std::vector<double>{-1.0, 0.5, 2.0, 3.0});

  const auto e8 = hermitian_eigenvalues(ComplexMatrix::identity(8));
  for (double e : e8) CHECK(e == doctest::Approx(1.0));
}

TEST_CASE("eigenvalues are invariant under unitary conjugation") {
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t dim = std::size_t{2} << (trial % 3);
    std::vector<double> spectrum(dim);
    for (auto& s : spectrum) s = uniform(-2.0, 2.0);
    const auto u = random_unitary(dim);
    const auto a = u * ComplexMatrix::diagonal(spectrum) * dagger(u);
    std::sort(spectrum.begin(), spectrum.end());
    CHECK(max_spectrum_diff(hermitian_eigenvalues(a), spectrum) < 1e-12);
  }
}

TEST_CASE("eigenvalues of degenerate spectra") {
  const std::vector<double> spectrum{0.25, 0.25, 0.25, 0.25, 0.0, 0.0, 0.0, 0.0};
  const auto u = random_unitary(8);
  auto e = hermitian_eigenvalues(u * ComplexMatrix::diagonal(spectrum) * dagger(u));
  auto sorted = spectrum;
  std::sort(sorted.begin(), sorted.end());
  CHECK(max_spectrum_diff(e, sorted) < 1e-13);
}

TEST_CASE("eigensolver rejects non-Hermitian input") {
  ComplexMatrix a{{1, 2}, {0, 1}};
  CHECK_THROWS_AS(hermitian_eigenvalues(a), StateError);
  ComplexMatrix tiny{{1, Complex(1e-12, 0)}, {0, 1}};
  CHECK_NOTHROW(hermitian_eigenvalues(tiny));
}

TEST_CASE("hermiticity violation and dagger") {
  const auto g = ginibre(4);
  CHECK(hermiticity_violation(g + dagger(g)) < 1e-15);
  CHECK(max_abs_diff(dagger(dagger(g)), g) == 0.0);
  CHECK_THROWS_AS(max_abs_diff(g, ComplexMatrix(2)), ArgumentError);
}

TEST_CASE("partial trace is linear under mixing") {
  for (int trial = 0; trial < 200; ++trial) {
    const auto rho = random_density(8);
    const auto sigma = random_density(8);
    const double a = uniform();
    const auto mixed = a * rho + (1.0 - a) * sigma;
    for (const QubitIndexSet& t : {QubitIndexSet{0}, QubitIndexSet{1}, QubitIndexSet{2}, QubitIndexSet{0, 2}}) {
      CHECK(max_abs_diff(partial_trace(mixed, t), a * partial_trace(rho, t) + (1.0 - a) * partial_trace(sigma, t)) <
            1e-12);
    }
  }
}

TEST_CASE("trace and spectrum of Kronecker products") {
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = ginibre(2);
    const auto h = ginibre(4);
    CHECK(std::abs(trace(kron(g, h)) - trace(g) * trace(h)) < 1e-12);

    const auto a = g + dagger(g);
    const auto b = h + dagger(h);
    std::vector<double> products;
    for (double x : hermitian_eigenvalues(a)) {
      for (double y : hermitian_eigenvalues(b)) products.push_back(x * y);
    }
    std::sort(products.begin(), products.end());
    CHECK(max_spectrum_diff(hermitian_eigenvalues(kron(a, b)), products) < 1e-9);
  }
}
