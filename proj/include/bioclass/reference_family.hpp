#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "bioclass/errors.hpp"
#include "bioclass/random.hpp"
#include "bioclass/sequence.hpp"

namespace bioclass {

/// Eight related reference sequences of length W.
///
///   0  random
///   1  0 with a point mutation at W/2
///   2  0 shifted left by one base, fresh base at the tail
///   3  2 with a point mutation at W/2
///   4  0 with its two halves exchanged (split at W/2)
///   5  second half of 0, then random
///   6  random, carries a shared gene of length W/3 at offset 0
///   7  random, carries the same gene right-aligned (offset W - W/3)
///
/// All divisions are integer divisions.
struct ReferenceFamily {
  static constexpr std::size_t kSize = 8;

  std::array<Sequence, kSize> seqs;

  [[nodiscard]] std::size_t width() const noexcept { return seqs[0].size(); }
  [[nodiscard]] std::size_t midpoint() const noexcept { return width() / 2; }
  [[nodiscard]] std::size_t gene_length() const noexcept { return width() / 3; }
  [[nodiscard]] std::size_t gene_offset_7() const noexcept { return width() - gene_length(); }

  const Sequence& operator[](std::size_t i) const { return seqs[i]; }
  [[nodiscard]] SampleSet samples() const { return SampleSet({seqs.begin(), seqs.end()}); }
};

namespace detail {

inline std::string point_mutation(std::string s, std::size_t pos, RandomStream& rng) {
  const std::uint8_t old = base_code(s[pos]);
  s[pos] = kBases[(old + 1 + rng.below(3)) & 3];
  return s;
}

}  // namespace detail

inline ReferenceFamily reference_family(std::size_t width, RandomStream& rng) {
  if (width < 6) throw DomainError("reference_family: W must be >= 6, got " + std::to_string(width));
  const std::size_t half = width / 2;
  const std::size_t gene_len = width / 3;

  const std::string s0 = random_sequence(width, rng).str();
  std::string s1 = detail::point_mutation(s0, half, rng);

  std::string s2 = s0.substr(1);
  s2.push_back(random_base(rng));
  std::string s3 = detail::point_mutation(s2, half, rng);

  std::string s4 = s0.substr(half) + s0.substr(0, half);
  std::string s5 = s0.substr(half) + random_sequence(half, rng).str();

  std::string s6 = random_sequence(width, rng).str();
  std::string s7 = random_sequence(width, rng).str();
  const std::string gene = random_sequence(gene_len, rng).str();
  s6.replace(0, gene_len, gene);
  s7.replace(width - gene_len, gene_len, gene);

  return {{Sequence(s0), Sequence(std::move(s1)), Sequence(std::move(s2)), Sequence(std::move(s3)),
           Sequence(std::move(s4)), Sequence(std::move(s5)), Sequence(std::move(s6)), Sequence(std::move(s7))}};
}

}  // namespace bioclass
