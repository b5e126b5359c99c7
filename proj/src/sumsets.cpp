#include "anrcert/sumsets.hpp"

#include <algorithm>
#include <charconv>
#include <utility>

namespace anrcert {

namespace {

// Past this modulus a presence bitmap of size p stops being cheap and the
// enumeration falls back to sort-and-unique.
constexpr std::uint64_t kBitmapLimit = std::uint64_t{1} << 22;

void require_same_field(const FpSet& a, const FpSet& b) {
  if (a.modulus() != b.modulus()) {
    throw ModulusMismatchError("sets over different moduli: " +
                               std::to_string(a.modulus()) + " vs " +
                               std::to_string(b.modulus()));
  }
}

void require_nonempty(const FpSet& s, const char* role) {
  if (s.empty()) {
    throw EmptyInputError(std::string(role) + " must be nonempty");
  }
}

template <typename KeepPair>
FpSet enumerate_sums(const FpSet& a, const FpSet& b, KeepPair keep) {
  const std::uint64_t p = a.modulus();
  std::vector<std::uint64_t> out;
  if (p <= kBitmapLimit) {
    std::vector<char> seen(static_cast<std::size_t>(p), 0);
    for (std::uint64_t x : a.elements()) {
      for (std::uint64_t y : b.elements()) {
        if (!keep(x, y)) continue;
        std::uint64_t s = x + y;
        if (s >= p) s -= p;
        if (!seen[s]) {
          seen[s] = 1;
          out.push_back(s);
        }
      }
    }
    std::sort(out.begin(), out.end());
  } else {
    out.reserve(a.size() * b.size());
    for (std::uint64_t x : a.elements()) {
      for (std::uint64_t y : b.elements()) {
        if (!keep(x, y)) continue;
        std::uint64_t s = x + y;
        if (s >= p) s -= p;
        out.push_back(s);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return FpSet(a.field(), std::move(out));
}

}  // namespace

FpSet::FpSet(const PrimeField& field, std::vector<std::uint64_t> elements)
    : field_(field), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] >= field_.modulus()) {
      throw InvalidSetError("residue " + std::to_string(elements_[i]) +
                            " out of range for modulus " +
                            std::to_string(field_.modulus()));
    }
    if (i > 0 && elements_[i] == elements_[i - 1]) {
      throw InvalidSetError("duplicate residue " +
                            std::to_string(elements_[i]));
    }
  }
}

FpSet FpSet::empty_set(const PrimeField& field) {
  return FpSet(field, {});
}

FpSet FpSet::parse(const PrimeField& field, std::string_view text) {
  std::vector<std::uint64_t> elements;
  std::size_t pos = 0;
  if (text.empty()) throw InvalidSetError("empty set literal");
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view token = text.substr(
        pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    std::uint64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() ||
        token.empty()) {
      throw InvalidSetError("bad residue token '" + std::string(token) + "'");
    }
    elements.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return FpSet(field, std::move(elements));
}

bool FpSet::contains(std::uint64_t residue) const {
  return std::binary_search(elements_.begin(), elements_.end(), residue);
}

FpSet FpSet::without(std::uint64_t residue) const {
  if (!contains(residue)) {
    throw InvalidSetError("residue " + std::to_string(residue) +
                          " not in set");
  }
  std::vector<std::uint64_t> rest;
  rest.reserve(elements_.size() - 1);
  for (std::uint64_t e : elements_) {
    if (e != residue) rest.push_back(e);
  }
  return FpSet(field_, std::move(rest));
}

bool FpSet::subset_of(const FpSet& other) const {
  if (modulus() != other.modulus()) return false;
  return std::includes(other.elements_.begin(), other.elements_.end(),
                       elements_.begin(), elements_.end());
}

std::string FpSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(elements_[i]);
  }
  out += "}";
  return out;
}

FpSet sumset(const FpSet& a, const FpSet& b) {
  require_same_field(a, b);
  require_nonempty(a, "A");
  require_nonempty(b, "B");
  return enumerate_sums(a, b, [](std::uint64_t, std::uint64_t) { return true; });
}

FpSet restricted_sumset(const FpSet& a, const FpSet& b) {
  require_same_field(a, b);
  require_nonempty(a, "A");
  require_nonempty(b, "B");
  return enumerate_sums(a, b,
                        [](std::uint64_t x, std::uint64_t y) { return x != y; });
}

namespace {

std::uint64_t clamped_min(std::uint64_t p, std::int64_t value) {
  if (value < 0) return 0;
  return std::min<std::uint64_t>(p, static_cast<std::uint64_t>(value));
}

}  // namespace

std::uint64_t anr_bound(std::uint64_t p, std::uint64_t m, std::uint64_t k) {
  return clamped_min(p, static_cast<std::int64_t>(m + k) - 2);
}

std::uint64_t eh_bound(std::uint64_t p, std::uint64_t m) {
  return clamped_min(p, 2 * static_cast<std::int64_t>(m) - 3);
}

std::uint64_t cd_bound(std::uint64_t p, std::uint64_t m, std::uint64_t k) {
  return clamped_min(p, static_cast<std::int64_t>(m + k) - 1);
}

}  // namespace anrcert
