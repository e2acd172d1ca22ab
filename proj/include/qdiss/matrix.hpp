#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qdiss {

using Complex = std::complex<double>;

// Hermiticity tolerance used by the eigensolver and density-matrix checks.
inline constexpr double kHermitianTol = 1e-10;

/// Dense square complex matrix with power-of-two dimension, row-major storage.
///
/// Qubit 0 is the leftmost tensor factor, so for an n-qubit operator the bit of
/// qubit k inside a basis index is bit (n - 1 - k).
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// Zero matrix. Throws ArgumentError unless dim is a power of two.
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> diag);
  /// |v><v| for an unnormalized ket v.
  static ComplexMatrix outer(std::span<const Complex> ket);

  std::size_t dim() const { return dim_; }
  std::size_t qubits() const;

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

  std::span<const Complex> data() const { return data_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// Ordered set of distinct zero-based qubit positions, stored ascending.
class QubitIndexSet {
 public:
  QubitIndexSet() = default;
  QubitIndexSet(std::initializer_list<std::size_t> indices);
  explicit QubitIndexSet(std::vector<std::size_t> indices);

  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  bool contains(std::size_t q) const;
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }
  const std::vector<std::size_t>& indices() const { return indices_; }

  /// Positions in {0..n-1} not in this set.
  QubitIndexSet complement(std::size_t n) const;

 private:
  std::vector<std::size_t> indices_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix dagger(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Traces out the listed qubits; the result acts on the remaining qubits in
/// their original order.
ComplexMatrix partial_trace(const ComplexMatrix& rho, const QubitIndexSet& traced);

/// max_ij |a_ij - conj(a_ji)|.
double hermiticity_violation(const ComplexMatrix& a);

/// max_ij |a_ij - b_ij|; dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Ascending eigenvalues of a Hermitian matrix via cyclic complex Jacobi
/// rotations. Throws StateError if the input is non-Hermitian beyond
/// kHermitianTol.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

}  // namespace qdiss
