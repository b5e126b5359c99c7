#ifndef ANRCERT_MOMENTS_HPP
#define ANRCERT_MOMENTS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "anrcert/linalg.hpp"
#include "anrcert/sumsets.hpp"

namespace anrcert {

/// Field values attached to the elements of a set, aligned positionally
/// with the sorted support. Serialization pairs each element with its
/// weight explicitly, so the alignment never depends on transport order.
class WeightSequence {
 public:
  WeightSequence(FpSet support, FpVector weights);

  const FpSet& support() const { return support_; }
  const FpVector& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  /// True when at least one weight is nonzero.
  bool nonzero() const;

 private:
  FpSet support_;
  FpVector weights_;
};

/// Weighted power sum sum_j w(a_j) * a_j^i, the i-th moment of the
/// weighted set. Computed directly from the definition.
Fp power_sum(const WeightSequence& w, std::uint64_t index);

/// Least index i with a nonzero i-th moment. For a nonzero weight
/// sequence on a set of distinct residues this is at most |S|-1; the scan
/// therefore stops there and a miss signals an arithmetic bug
/// (InternalInconsistencyError) rather than a representable state.
std::size_t excess_index(const WeightSequence& w);

/// The unique weights solving the Vandermonde system with right side
/// (0,...,0,1): all moments below |S|-1 vanish and the |S|-1 moment is 1,
/// which makes the excess index exactly |S|-1.
WeightSequence extremal_weights(const FpSet& s);

/// Weights induced on C = A+.B by w(c) = sum_{a+b=c} w1(a) w2(b) (a-b).
/// The sum runs over all of A x B; diagonal pairs contribute (a-b) = 0, so
/// restricting to a != b would change nothing.
WeightSequence induced_weights(const FpSet& a, const WeightSequence& w1,
                               const FpSet& b, const WeightSequence& w2);

/// Moments of one weighted set, computed incrementally and cached. The
/// cache belongs to the value (copies copy it); extend from a single
/// thread and share only after the needed prefix is materialized.
class MomentProfile {
 public:
  explicit MomentProfile(WeightSequence w);

  /// i-th moment, extending the cache as needed.
  Fp moment(std::size_t i);
  /// Number of moments currently materialized.
  std::size_t computed() const { return cache_.size(); }
  const WeightSequence& weight_sequence() const { return weights_; }

  /// Moments 0..n as a vector (extends the cache).
  FpVector prefix(std::size_t n);

  /// Excess index via the cached moments; same contract as the free
  /// function.
  std::size_t excess();

 private:
  WeightSequence weights_;
  FpVector cache_;
  FpVector running_powers_;  // a_j^cache_.size() for each support element
};

/// gamma_n from the binomial convolution of the alpha and beta moment
/// lists:
///   sum_i C(n,i) alpha_{i+1} beta_{n-i} - sum_i C(n,i) alpha_i beta_{n+1-i}.
/// Both lists must reach index n+1 (InsufficientMomentsError otherwise).
Fp gamma_convolution(std::span<const Fp> alpha, std::span<const Fp> beta,
                     std::uint64_t n, const PrimeField& field);

/// Convenience overload extending lazy profiles as needed.
Fp gamma_convolution(MomentProfile& alpha, MomentProfile& beta,
                     std::uint64_t n);

/// Closed form of the first potentially nonzero induced moment when
/// alpha_0..alpha_r and beta_0..beta_s all vanish:
///   gamma_{r+s+1} = (C(r+s+1, r) - C(r+s+1, s)) * alpha_{r+1} * beta_{s+1}.
Fp leading_gamma(std::uint64_t r, std::uint64_t s, Fp alpha_r1, Fp beta_s1);

}  // namespace anrcert

#endif  // ANRCERT_MOMENTS_HPP
