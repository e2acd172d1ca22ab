#include "qdiss/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <string>

#include "qdiss/errors.hpp"

namespace qdiss {

namespace {

constexpr double kJacobiOffTol = 1e-13;
constexpr int kJacobiMaxSweeps = 100;

void require_power_of_two(std::size_t dim) {
  if (dim == 0 || !std::has_single_bit(dim)) {
    throw ArgumentError("matrix dimension must be a positive power of two, got " + std::to_string(dim));
  }
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    std::ostringstream msg;
    msg << what << ": dimension mismatch " << a.dim() << " vs " << b.dim();
    throw ArgumentError(msg.str());
  }
}

// Index of a basis state restricted to the listed qubits, listed qubits read
// high bit first.
std::size_t gather_bits(std::size_t index, std::size_t n, const std::vector<std::size_t>& qubits) {
  std::size_t out = 0;
  for (std::size_t q : qubits) {
    out = (out << 1) | ((index >> (n - 1 - q)) & 1U);
  }
  return out;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) { require_power_of_two(dim); }

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries) : dim_(dim), data_(std::move(entries)) {
  require_power_of_two(dim);
  if (data_.size() != dim * dim) {
    throw ArgumentError("expected " + std::to_string(dim * dim) + " entries, got " + std::to_string(data_.size()));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) : dim_(rows.size()) {
  require_power_of_two(dim_);
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw ArgumentError("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> ket) {
  ComplexMatrix m(ket.size());
  for (std::size_t i = 0; i < ket.size(); ++i) {
    for (std::size_t j = 0; j < ket.size(); ++j) m(i, j) = ket[i] * std::conj(ket[j]);
  }
  return m;
}

std::size_t ComplexMatrix::qubits() const { return static_cast<std::size_t>(std::countr_zero(dim_)); }

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "operator+=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "operator-=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& x : data_) x *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex scale, ComplexMatrix a) { return a *= scale; }
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }

QubitIndexSet::QubitIndexSet(std::initializer_list<std::size_t> indices)
    : QubitIndexSet(std::vector<std::size_t>(indices)) {}

QubitIndexSet::QubitIndexSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw ArgumentError("qubit index set contains duplicates");
  }
}

bool QubitIndexSet::contains(std::size_t q) const { return std::binary_search(indices_.begin(), indices_.end(), q); }

QubitIndexSet QubitIndexSet::complement(std::size_t n) const {
  std::vector<std::size_t> rest;
  for (std::size_t q = 0; q < n; ++q) {
    if (!contains(q)) rest.push_back(q);
  }
  return QubitIndexSet(std::move(rest));
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "matmul");
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
  ComplexMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) out(j, i) = std::conj(a(i, j));
  }
  return out;
}

Complex trace(const ComplexMatrix& a) {
  Complex t{};
  for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < nb; ++k) {
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const QubitIndexSet& traced) {
  const std::size_t n = rho.qubits();
  for (std::size_t q : traced) {
    if (q >= n) {
      throw ArgumentError("partial_trace: qubit " + std::to_string(q) + " out of range for " + std::to_string(n) +
                          "-qubit matrix");
    }
  }
  if (traced.size() == n) {
    ComplexMatrix scalar(1);
    scalar(0, 0) = trace(rho);
    return scalar;
  }
  const auto kept = traced.complement(n).indices();
  const auto& gone = traced.indices();
  ComplexMatrix out(std::size_t{1} << kept.size());
  for (std::size_t i = 0; i < rho.dim(); ++i) {
    const std::size_t ti = gather_bits(i, n, gone);
    const std::size_t ki = gather_bits(i, n, kept);
    for (std::size_t j = 0; j < rho.dim(); ++j) {
      if (gather_bits(j, n, gone) != ti) continue;
      out(ki, gather_bits(j, n, kept)) += rho(i, j);
    }
  }
  return out;
}

double hermiticity_violation(const ComplexMatrix& a) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i; j < a.dim(); ++j) worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
  }
  return worst;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  return worst;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
  const double violation = hermiticity_violation(a);
  if (violation > kHermitianTol) {
    std::ostringstream msg;
    msg << "hermitian_eigenvalues: input is not Hermitian (max |a - a^dagger| = " << violation << ")";
    throw StateError(msg.str());
  }
  const std::size_t n = a.dim();
  // Symmetrize so rounding-level anti-Hermitian parts do not feed the rotations.
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
      m(j, i) = std::conj(m(i, j));
    }
  }

  double scale = 0.0;
  for (const auto& x : m.data()) scale += std::norm(x);
  const double off_tol = kJacobiOffTol * std::max(1.0, std::sqrt(scale));

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * std::norm(m(i, j));
    }
    return std::sqrt(s);
  };

  int sweep = 0;
  for (; sweep < kJacobiMaxSweeps && off_norm() >= off_tol; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = m(p, q);
        const double h = std::abs(apq);
        if (h == 0.0) continue;
        // Remove the phase of a_pq, then a real symmetric Schur rotation.
        const Complex phase = apq / h;
        const double tau = (m(q, q).real() - m(p, p).real()) / (2.0 * h);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex gpp = c;
        const Complex gpq = s;
        const Complex gqp = -s * std::conj(phase);
        const Complex gqq = c * std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) {
          const Complex x = m(k, p);
          const Complex y = m(k, q);
          m(k, p) = x * gpp + y * gqp;
          m(k, q) = x * gpq + y * gqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex x = m(p, k);
          const Complex y = m(q, k);
          m(p, k) = std::conj(gpp) * x + std::conj(gqp) * y;
          m(q, k) = std::conj(gpq) * x + std::conj(gqq) * y;
        }
        m(p, q) = 0.0;
        m(q, p) = 0.0;
        m(p, p) = m(p, p).real();
        m(q, q) = m(q, q).real();
      }
    }
  }
  if (off_norm() >= off_tol) {
    throw NumericalError("hermitian_eigenvalues: Jacobi iteration did not converge");
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = m(i, i).real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace qdiss
