#include "anrcert/moments.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace anrcert {

WeightSequence::WeightSequence(FpSet support, FpVector weights)
    : support_(std::move(support)), weights_(std::move(weights)) {
  if (support_.size() != weights_.size()) {
    throw AlignmentError("support size " + std::to_string(support_.size()) +
                         " does not match weight count " +
                         std::to_string(weights_.size()));
  }
  for (const Fp& w : weights_) {
    if (w.modulus() != support_.modulus()) {
      throw ModulusMismatchError("weights from a different field");
    }
  }
}

bool WeightSequence::nonzero() const {
  return std::any_of(weights_.begin(), weights_.end(),
                     [](const Fp& w) { return !w.is_zero(); });
}

Fp power_sum(const WeightSequence& w, std::uint64_t index) {
  const PrimeField& field = w.support().field();
  Fp acc = field.zero();
  const auto& elements = w.support().elements();
  for (std::size_t j = 0; j < elements.size(); ++j) {
    acc = acc + w.weights()[j] * pow(field.element(elements[j]), index);
  }
  return acc;
}

std::size_t excess_index(const WeightSequence& w) {
  if (!w.nonzero()) {
    throw ZeroWeightsError("excess index undefined for the zero sequence");
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!power_sum(w, i).is_zero()) return i;
  }
  // Impossible for nonzero weights on distinct residues: the moments
  // 0..|S|-1 are a nonsingular Vandermonde image of the weights.
  throw InternalInconsistencyError(
      "no nonzero moment up to |S|-1 for a nonzero sequence");
}

WeightSequence extremal_weights(const FpSet& s) {
  if (s.empty()) throw EmptyInputError("extremal weights of the empty set");
  const PrimeField& field = s.field();
  FpVector nodes;
  nodes.reserve(s.size());
  for (std::uint64_t e : s.elements()) nodes.push_back(field.element(e));
  FpVector rhs(s.size(), field.zero());
  rhs.back() = field.one();
  return WeightSequence(s, solve(vandermonde(nodes), std::move(rhs)));
}

WeightSequence induced_weights(const FpSet& a, const WeightSequence& w1,
                               const FpSet& b, const WeightSequence& w2) {
  if (a != w1.support() || b != w2.support()) {
    throw AlignmentError("weight sequences do not match the given sets");
  }
  const FpSet c = restricted_sumset(a, b);
  const PrimeField& field = a.field();
  const std::uint64_t p = field.modulus();
  FpVector acc(c.size(), field.zero());
  const auto& ce = c.elements();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint64_t x = a.elements()[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      const std::uint64_t y = b.elements()[j];
      std::uint64_t s = x + y;
      if (s >= p) s -= p;
      const Fp term = w1.weights()[i] * w2.weights()[j] *
                      (field.element(x) - field.element(y));
      auto it = std::lower_bound(ce.begin(), ce.end(), s);
      if (it == ce.end() || *it != s) {
        // Only diagonal pairs fall outside C, and their (a-b) factor is 0.
        if (!term.is_zero()) {
          throw InternalInconsistencyError(
              "nonzero induced contribution outside the restricted sumset");
        }
        continue;
      }
      const std::size_t idx = static_cast<std::size_t>(it - ce.begin());
      acc[idx] = acc[idx] + term;
    }
  }
  return WeightSequence(c, std::move(acc));
}

MomentProfile::MomentProfile(WeightSequence w) : weights_(std::move(w)) {
  const PrimeField& field = weights_.support().field();
  running_powers_.reserve(weights_.size());
  for (std::size_t j = 0; j < weights_.size(); ++j) {
    running_powers_.push_back(field.one());  // a^0 = 1, also for a = 0
  }
}

Fp MomentProfile::moment(std::size_t i) {
  const PrimeField& field = weights_.support().field();
  while (cache_.size() <= i) {
    Fp acc = field.zero();
    for (std::size_t j = 0; j < weights_.size(); ++j) {
      acc = acc + weights_.weights()[j] * running_powers_[j];
    }
    cache_.push_back(acc);
    for (std::size_t j = 0; j < weights_.size(); ++j) {
      running_powers_[j] =
          running_powers_[j] * field.element(weights_.support().elements()[j]);
    }
  }
  return cache_[i];
}

FpVector MomentProfile::prefix(std::size_t n) {
  moment(n);
  return FpVector(cache_.begin(), cache_.begin() + n + 1);
}

std::size_t MomentProfile::excess() {
  if (!weights_.nonzero()) {
    throw ZeroWeightsError("excess index undefined for the zero sequence");
  }
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!moment(i).is_zero()) return i;
  }
  throw InternalInconsistencyError(
      "no nonzero moment up to |S|-1 for a nonzero sequence");
}

Fp gamma_convolution(std::span<const Fp> alpha, std::span<const Fp> beta,
                     std::uint64_t n, const PrimeField& field) {
  if (alpha.size() < n + 2 || beta.size() < n + 2) {
    throw InsufficientMomentsError(
        "gamma_" + std::to_string(n) + " needs moments through index " +
        std::to_string(n + 1));
  }
  Fp acc = field.zero();
  for (std::uint64_t i = 0; i <= n; ++i) {
    const Fp coeff = binomial_mod_p(n, i, field);
    acc = acc + coeff * (alpha[i + 1] * beta[n - i] - alpha[i] * beta[n + 1 - i]);
  }
  return acc;
}

Fp gamma_convolution(MomentProfile& alpha, MomentProfile& beta,
                     std::uint64_t n) {
  const PrimeField& field = alpha.weight_sequence().support().field();
  const FpVector a = alpha.prefix(n + 1);
  const FpVector b = beta.prefix(n + 1);
  return gamma_convolution(a, b, n, field);
}

Fp leading_gamma(std::uint64_t r, std::uint64_t s, Fp alpha_r1, Fp beta_s1) {
  PrimeField field(alpha_r1.modulus());
  const Fp diff = binomial_mod_p(r + s + 1, r, field) -
                  binomial_mod_p(r + s + 1, s, field);
  return diff * alpha_r1 * beta_s1;
}

}  // namespace anrcert
