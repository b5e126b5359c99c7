#ifndef ANRCERT_LINALG_HPP
#define ANRCERT_LINALG_HPP

#include <cstddef>
#include <vector>

#include "anrcert/prime_field.hpp"

namespace anrcert {

using FpVector = std::vector<Fp>;

/// Dense row-major matrix over one prime field.
class FpMatrix {
 public:
  FpMatrix(std::size_t rows, std::size_t cols, FpVector entries);

  static FpMatrix identity(const PrimeField& field, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeField& field() const { return field_; }

  Fp at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Fp& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  PrimeField field_;
  FpVector data_;
};

/// Square Vandermonde matrix on the given nodes: row i (0-based) holds
/// nodes[j]^i, so the first row is all ones.
FpMatrix vandermonde(const FpVector& nodes);

/// Determinant of vandermonde(nodes) by the closed product formula
/// prod_{i<j} (nodes[j] - nodes[i]); nonzero iff the nodes are distinct.
Fp vandermonde_det(const FpVector& nodes);

/// Gaussian elimination over the field. Pivoting takes the first row with
/// a nonzero entry in the pivot column (there is no magnitude to compare
/// in GF(p)), lowest row index first, which makes the elimination order
/// deterministic. Throws SingularMatrixError when no pivot exists.
FpVector solve(FpMatrix m, FpVector b);

/// Matrix-vector product, used to re-verify solutions exactly.
FpVector mat_vec(const FpMatrix& m, const FpVector& x);

}  // namespace anrcert

#endif  // ANRCERT_LINALG_HPP
