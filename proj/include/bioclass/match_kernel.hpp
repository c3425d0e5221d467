#pragma once

// Ungapped maximum complementary match between a sample and a probe.
//
// Sequences are packed into two bit planes (low and high bit of the 2-bit
// base code). A position matches when the sample base equals the complement
// of the probe base, so after complementing the probe once a window score is
//   popcount(~((s_lo ^ p_lo) | (s_hi ^ p_hi)) & mask)
// evaluated 64 positions per word.

#include <Eigen/Core>

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bioclass/errors.hpp"
#include "bioclass/sequence.hpp"

namespace bioclass {

/// Two-bit-plane packing of a sequence, one trailing zero word for unaligned reads.
class PackedSequence {
 public:
  explicit PackedSequence(const Sequence& seq) : size_(seq.size()) {
    const std::size_t words = (size_ + 63) / 64 + 1;
    lo_.assign(words, 0);
    hi_.assign(words, 0);
    for (std::size_t i = 0; i < size_; ++i) {
      const std::uint64_t code = base_code(seq[i]);
      lo_[i >> 6] |= (code & 1U) << (i & 63);
      hi_[i >> 6] |= (code >> 1) << (i & 63);
    }
  }

  [[nodiscard]] std::size_t size() const noexcept { return size_; }

  // 64 bits of each plane starting at base position `pos` (pos < size()).
  [[nodiscard]] std::uint64_t lo_at(std::size_t pos) const noexcept { return extract(lo_, pos); }
  [[nodiscard]] std::uint64_t hi_at(std::size_t pos) const noexcept { return extract(hi_, pos); }

 private:
  static std::uint64_t extract(const std::vector<std::uint64_t>& plane, std::size_t pos) noexcept {
    const std::size_t w = pos >> 6;
    const unsigned b = pos & 63;
    if (b == 0) return plane[w];
    return (plane[w] >> b) | (plane[w + 1] << (64 - b));
  }

  std::size_t size_;
  std::vector<std::uint64_t> lo_;
  std::vector<std::uint64_t> hi_;
};

/// Every length-L window of a sample, pre-sliced into 64-base chunks so that
/// scoring a probe touches only contiguous memory.
class SampleWindows {
 public:
  SampleWindows(const Sequence& sample, std::size_t probe_length)
      : length_(probe_length), chunks_((probe_length + 63) / 64) {
    if (probe_length == 0) throw DomainError("max_complementary_match: probe is empty");
    if (probe_length > sample.size()) {
      throw DomainError("max_complementary_match: probe length " + std::to_string(probe_length) +
                        " exceeds sample length " + std::to_string(sample.size()));
    }
    offsets_ = sample.size() - probe_length + 1;
    const PackedSequence packed(sample);
    words_.resize(offsets_ * chunks_ * 2);
    std::uint64_t* out = words_.data();
    for (std::size_t o = 0; o < offsets_; ++o) {
      for (std::size_t c = 0; c < chunks_; ++c) {
        *out++ = packed.lo_at(o + 64 * c);
        *out++ = packed.hi_at(o + 64 * c);
      }
    }
  }

  [[nodiscard]] std::size_t probe_length() const noexcept { return length_; }
  [[nodiscard]] std::size_t chunks() const noexcept { return chunks_; }
  [[nodiscard]] std::size_t offsets() const noexcept { return offsets_; }
  [[nodiscard]] const std::uint64_t* data() const noexcept { return words_.data(); }

 private:
  std::size_t length_;
  std::size_t chunks_;
  std::size_t offsets_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A probe complemented and packed into the same chunk layout, with the
/// validity mask of each chunk.
class ProbePattern {
 public:
  explicit ProbePattern(const Sequence& probe) : length_(probe.size()), chunks_((probe.size() + 63) / 64) {
    const PackedSequence packed(complement(probe));
    words_.reserve(chunks_ * 3);
    for (std::size_t c = 0; c < chunks_; ++c) {
      const std::size_t remaining = length_ - 64 * c;
      const std::uint64_t mask = remaining >= 64 ? ~0ULL : ((1ULL << remaining) - 1);
      words_.push_back(packed.lo_at(64 * c) & mask);
      words_.push_back(packed.hi_at(64 * c) & mask);
      words_.push_back(mask);
    }
  }

  [[nodiscard]] std::size_t length() const noexcept { return length_; }
  [[nodiscard]] std::size_t chunks() const noexcept { return chunks_; }
  [[nodiscard]] const std::uint64_t* data() const noexcept { return words_.data(); }

 private:
  std::size_t length_;
  std::size_t chunks_;
  std::vector<std::uint64_t> words_;
};

inline int max_complementary_match(const SampleWindows& windows, const ProbePattern& probe) {
  if (windows.probe_length() != probe.length()) {
    throw DimensionError("max_complementary_match: window length differs from probe length");
  }
  const auto target = static_cast<int>(probe.length());
  const std::size_t chunks = probe.chunks();
  const std::uint64_t* p = probe.data();
  const std::uint64_t* w = windows.data();
  int best = 0;
  for (std::size_t o = 0; o < windows.offsets(); ++o, w += 2 * chunks) {
    int score = 0;
    for (std::size_t c = 0; c < chunks; ++c) {
      const std::uint64_t diff = (w[2 * c] ^ p[3 * c]) | (w[2 * c + 1] ^ p[3 * c + 1]);
      score += std::popcount(~diff & p[3 * c + 2]);
    }
    if (score > best) {
      best = score;
      if (best == target) break;
    }
  }
  return best;
}

/// Best count, over offsets 0..W-L, of positions where the sample holds the
/// Watson-Crick complement of the probe. Result in [0, L].
inline int max_complementary_match(const Sequence& sample, const Sequence& probe) {
  return max_complementary_match(SampleWindows(sample, probe.size()), ProbePattern(probe));
}

/// m(i, k) for sample i and probe k; N x M.
using MatchMatrix = Eigen::MatrixXi;

inline MatchMatrix match_matrix(const SampleSet& samples, const ProbeSet& probes) {
  std::vector<ProbePattern> patterns;
  patterns.reserve(probes.count());
  for (const auto& p : probes) patterns.emplace_back(p);

  MatchMatrix m(static_cast<Eigen::Index>(samples.count()), static_cast<Eigen::Index>(probes.count()));
  for (std::size_t i = 0; i < samples.count(); ++i) {
    const SampleWindows windows(samples[i], probes.length());
    for (std::size_t k = 0; k < patterns.size(); ++k) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = max_complementary_match(windows, patterns[k]);
    }
  }
  return m;
}

}  // namespace bioclass
