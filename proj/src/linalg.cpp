#include "anrcert/linalg.hpp"

#include <string>
#include <utility>

namespace anrcert {

namespace {

void require_uniform_field(const FpVector& entries) {
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].modulus() != entries[0].modulus()) {
      throw ModulusMismatchError("matrix entries span different moduli");
    }
  }
}

}  // namespace

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, FpVector entries)
    : rows_(rows),
      cols_(cols),
      field_(entries.empty() ? throw DimensionMismatchError("empty matrix")
                             : PrimeField(entries[0].modulus())),
      data_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0 || data_.size() != rows_ * cols_) {
    throw DimensionMismatchError("entry count " + std::to_string(data_.size()) +
                                 " does not fill " + std::to_string(rows_) +
                                 "x" + std::to_string(cols_));
  }
  require_uniform_field(data_);
}

FpMatrix FpMatrix::identity(const PrimeField& field, std::size_t n) {
  FpVector entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      entries.push_back(i == j ? field.one() : field.zero());
    }
  }
  return FpMatrix(n, n, std::move(entries));
}

FpMatrix vandermonde(const FpVector& nodes) {
  if (nodes.empty()) throw EmptyInputError("vandermonde of no nodes");
  require_uniform_field(nodes);
  const std::size_t m = nodes.size();
  FpVector entries;
  entries.reserve(m * m);
  // Build by rows: row i holds the i-th powers, starting from the all-ones
  // row (a^0 = 1 for every a, including a = 0).
  FpVector powers = nodes;
  PrimeField field(nodes[0].modulus());
  for (std::size_t j = 0; j < m; ++j) powers[j] = field.one();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      entries.push_back(powers[j]);
    }
    if (i + 1 < m) {
      for (std::size_t j = 0; j < m; ++j) powers[j] = powers[j] * nodes[j];
    }
  }
  return FpMatrix(m, m, std::move(entries));
}

Fp vandermonde_det(const FpVector& nodes) {
  if (nodes.empty()) throw EmptyInputError("vandermonde_det of no nodes");
  require_uniform_field(nodes);
  PrimeField field(nodes[0].modulus());
  Fp det = field.one();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      det = det * (nodes[j] - nodes[i]);
    }
  }
  return det;
}

FpVector solve(FpMatrix m, FpVector b) {
  const std::size_t n = m.rows();
  if (m.cols() != n) {
    throw DimensionMismatchError("solve requires a square matrix");
  }
  if (b.size() != n) {
    throw DimensionMismatchError("right-hand side length " +
                                 std::to_string(b.size()) +
                                 " does not match dimension " +
                                 std::to_string(n));
  }
  for (const Fp& v : b) {
    if (v.modulus() != m.field().modulus()) {
      throw ModulusMismatchError("right-hand side from a different field");
    }
  }

  // Forward elimination with first-nonzero pivoting.
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) {
      throw SingularMatrixError("no pivot in column " + std::to_string(col));
    }
    if (pivot != col) {
      for (std::size_t j = col; j < n; ++j) {
        std::swap(m.at(col, j), m.at(pivot, j));
      }
      std::swap(b[col], b[pivot]);
    }
    const Fp pivot_inv = inverse(m.at(col, col));
    for (std::size_t row = col + 1; row < n; ++row) {
      const Fp factor = m.at(row, col) * pivot_inv;
      if (factor.is_zero()) continue;
      for (std::size_t j = col; j < n; ++j) {
        m.at(row, j) = m.at(row, j) - factor * m.at(col, j);
      }
      b[row] = b[row] - factor * b[col];
    }
  }

  // Back substitution.
  FpVector x(b);
  for (std::size_t i = n; i-- > 0;) {
    Fp acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      acc = acc - m.at(i, j) * x[j];
    }
    x[i] = acc * inverse(m.at(i, i));
  }
  return x;
}

FpVector mat_vec(const FpMatrix& m, const FpVector& x) {
  if (x.size() != m.cols()) {
    throw DimensionMismatchError("vector length does not match matrix width");
  }
  FpVector out;
  out.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Fp acc = m.field().zero();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      acc = acc + m.at(i, j) * x[j];
    }
    out.push_back(acc);
  }
  return out;
}

}  // namespace anrcert
