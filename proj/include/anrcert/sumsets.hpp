#ifndef ANRCERT_SUMSETS_HPP
#define ANRCERT_SUMSETS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "anrcert/prime_field.hpp"

namespace anrcert {

/// A set of distinct residues mod p, stored sorted ascending so that set
/// equality is list equality and serialization is canonical.
///
/// The empty set is representable (restricted sumsets can be empty) but
/// the enumeration operations below reject empty operands.
class FpSet {
 public:
  /// Canonicalizes (sorts) the residues; rejects duplicates and values
  /// outside [0, p) rather than repairing them.
  FpSet(const PrimeField& field, std::vector<std::uint64_t> elements);

  static FpSet empty_set(const PrimeField& field);

  /// Parses the textual form "r1,r2,...". Rejects empty literals,
  /// duplicates, and out-of-range residues.
  static FpSet parse(const PrimeField& field, std::string_view text);

  const std::vector<std::uint64_t>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const PrimeField& field() const { return field_; }
  std::uint64_t modulus() const { return field_.modulus(); }

  bool contains(std::uint64_t residue) const;
  /// Copy of this set with one residue removed; the residue must be present.
  FpSet without(std::uint64_t residue) const;
  bool subset_of(const FpSet& other) const;

  std::string to_string() const;

  friend bool operator==(const FpSet& a, const FpSet& b) {
    return a.modulus() == b.modulus() && a.elements_ == b.elements_;
  }
  friend bool operator!=(const FpSet& a, const FpSet& b) { return !(a == b); }

 private:
  PrimeField field_;
  std::vector<std::uint64_t> elements_;
};

/// Classical sumset {a+b : a in A, b in B}.
FpSet sumset(const FpSet& a, const FpSet& b);

/// Restricted sumset {a+b : a in A, b in B, a != b}; may be empty.
FpSet restricted_sumset(const FpSet& a, const FpSet& b);

/// min{p, m+k-2}, clamped below at 0.
std::uint64_t anr_bound(std::uint64_t p, std::uint64_t m, std::uint64_t k);
/// min{p, 2m-3}, clamped below at 0.
std::uint64_t eh_bound(std::uint64_t p, std::uint64_t m);
/// min{p, m+k-1}, clamped below at 0.
std::uint64_t cd_bound(std::uint64_t p, std::uint64_t m, std::uint64_t k);

}  // namespace anrcert

#endif  // ANRCERT_SUMSETS_HPP
