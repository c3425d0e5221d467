#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bioclass/errors.hpp"
#include "bioclass/sequence.hpp"

namespace bioclass {

namespace detail {

inline void check_window(const Sequence& s, std::size_t l, const char* op) {
  if (l == 0) throw DomainError(std::string(op) + ": L must be >= 1");
  if (l > s.size()) {
    throw DomainError(std::string(op) + ": L=" + std::to_string(l) + " exceeds sequence length " +
                      std::to_string(s.size()));
  }
}

// Distinct L-mers as sorted 2-bit packed keys (L <= 32), rolled in O(W).
inline std::vector<std::uint64_t> packed_kmers(const Sequence& s, std::size_t l) {
  const std::uint64_t mask = l == 32 ? ~0ULL : ((1ULL << (2 * l)) - 1);
  std::vector<std::uint64_t> out;
  out.reserve(s.size() - l + 1);
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    key = ((key << 2) | base_code(s[i])) & mask;
    if (i + 1 >= l) out.push_back(key);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<std::string_view> view_kmers(const Sequence& s, std::size_t l) {
  std::vector<std::string_view> out;
  out.reserve(s.size() - l + 1);
  for (std::size_t i = 0; i + l <= s.size(); ++i) out.push_back(s.view().substr(i, l));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct KmerCounts {
  std::size_t distinct_x;
  std::size_t shared;
};

template <typename Keys>
KmerCounts count_shared(const Keys& x, const Keys& y) {
  std::size_t shared = 0;
  auto a = x.begin();
  auto b = y.begin();
  while (a != x.end() && b != y.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++shared;
      ++a;
      ++b;
    }
  }
  return {x.size(), shared};
}

inline KmerCounts kmer_counts(const Sequence& x, const Sequence& y, std::size_t l, const char* op) {
  check_window(x, l, op);
  check_window(y, l, op);
  if (l <= 32) return count_shared(packed_kmers(x, l), packed_kmers(y, l));
  return count_shared(view_kmers(x, l), view_kmers(y, l));
}

}  // namespace detail

/// Number of distinct length-L windows of `s`.
inline std::size_t distinct_kmers(const Sequence& s, std::size_t l) {
  detail::check_window(s, l, "distinct_kmers");
  return l <= 32 ? detail::packed_kmers(s, l).size() : detail::view_kmers(s, l).size();
}

/// Distinct L-mers present in both x and y, divided by W - L + 1 (W = |x|).
inline double overlap(const Sequence& x, const Sequence& y, std::size_t l) {
  if (x.size() != y.size()) throw DimensionError("overlap: sequences differ in length");
  const auto counts = detail::kmer_counts(x, y, l, "overlap");
  return static_cast<double>(counts.shared) / static_cast<double>(x.size() - l + 1);
}

/// Distinct L-mers of x absent from y, divided by W - L + 1.
inline double negative_overlap(const Sequence& x, const Sequence& y, std::size_t l) {
  if (x.size() != y.size()) throw DimensionError("negative_overlap: sequences differ in length");
  const auto counts = detail::kmer_counts(x, y, l, "negative_overlap");
  return static_cast<double>(counts.distinct_x - counts.shared) / static_cast<double>(x.size() - l + 1);
}

}  // namespace bioclass
