#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bioclass/errors.hpp"
#include "bioclass/random.hpp"

namespace bioclass {

inline constexpr std::array<char, 4> kBases = {'A', 'C', 'G', 'T'};

// 2-bit code with A=0 C=1 G=2 T=3, so the Watson-Crick partner is code ^ 3.
// Returns 4 for anything else.
constexpr std::uint8_t base_code(char b) noexcept {
  switch (b) {
    case 'A': return 0;
    case 'C': return 1;
    case 'G': return 2;
    case 'T': return 3;
    default: return 4;
  }
}

constexpr char complement_base(char b) noexcept {
  switch (b) {
    case 'A': return 'T';
    case 'T': return 'A';
    case 'C': return 'G';
    case 'G': return 'C';
    default: return b;
  }
}

/// A non-empty string over {A, C, G, T}.
class Sequence {
 public:
  Sequence() = default;

  explicit Sequence(std::string bases) : bases_(std::move(bases)) {
    if (bases_.empty()) throw DomainError("Sequence: empty");
    for (std::size_t i = 0; i < bases_.size(); ++i) {
      if (base_code(bases_[i]) > 3) {
        throw DomainError("Sequence: invalid symbol '" + std::string(1, bases_[i]) + "' at position " +
                          std::to_string(i));
      }
    }
  }

  [[nodiscard]] std::size_t size() const noexcept { return bases_.size(); }
  [[nodiscard]] bool empty() const noexcept { return bases_.empty(); }
  [[nodiscard]] const std::string& str() const noexcept { return bases_; }
  [[nodiscard]] std::string_view view() const noexcept { return bases_; }
  char operator[](std::size_t i) const { return bases_[i]; }

  auto begin() const noexcept { return bases_.begin(); }
  auto end() const noexcept { return bases_.end(); }

  friend bool operator==(const Sequence&, const Sequence&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Sequence& s) { return os << s.bases_; }

 private:
  std::string bases_;
};

/// Positionwise Watson-Crick complement, no reversal.
inline Sequence complement(const Sequence& seq) {
  std::string out(seq.str());
  for (char& c : out) c = complement_base(c);
  return Sequence(std::move(out));
}

inline char random_base(RandomStream& rng) { return kBases[rng.next() >> 62]; }

inline Sequence random_sequence(std::size_t length, RandomStream& rng) {
  if (length == 0) throw DomainError("random_sequence: length must be > 0");
  std::string out(length, 'A');
  for (char& c : out) c = random_base(rng);
  return Sequence(std::move(out));
}

inline std::size_t hamming_distance(const Sequence& a, const Sequence& b) {
  if (a.size() != b.size()) throw DimensionError("hamming_distance: lengths differ");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

/// Uniform-length collection (probes of length L, or samples of length W).
class SequenceSet {
 public:
  SequenceSet() = default;

  explicit SequenceSet(std::vector<Sequence> seqs) : seqs_(std::move(seqs)) {
    if (seqs_.empty()) throw ConfigError("SequenceSet: need at least one sequence");
    for (const auto& s : seqs_) {
      if (s.size() != seqs_.front().size()) throw DimensionError("SequenceSet: sequences differ in length");
    }
  }

  static SequenceSet random(std::size_t count, std::size_t length, RandomStream& rng) {
    if (count == 0) throw ConfigError("SequenceSet: count must be >= 1");
    std::vector<Sequence> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_sequence(length, rng));
    return SequenceSet(std::move(out));
  }

  [[nodiscard]] std::size_t count() const noexcept { return seqs_.size(); }
  [[nodiscard]] std::size_t length() const noexcept { return seqs_.empty() ? 0 : seqs_.front().size(); }
  const Sequence& operator[](std::size_t i) const { return seqs_[i]; }
  [[nodiscard]] const std::vector<Sequence>& sequences() const noexcept { return seqs_; }

  auto begin() const noexcept { return seqs_.begin(); }
  auto end() const noexcept { return seqs_.end(); }

 private:
  std::vector<Sequence> seqs_;
};

using ProbeSet = SequenceSet;
using SampleSet = SequenceSet;

// ---------------------------------------------------------------------------
// FASTA

struct FastaRecord {
  std::string id;
  Sequence seq;
};

inline void write_fasta(std::ostream& os, const std::vector<FastaRecord>& records, std::size_t width = 60) {
  for (const auto& r : records) {
    os << '>' << r.id << '\n';
    const std::string& s = r.seq.str();
    for (std::size_t i = 0; i < s.size(); i += width) os << s.substr(i, width) << '\n';
  }
}

/// Reads uppercase-only FASTA. Blank lines are skipped; the identifier is the
/// header text up to the first whitespace.
inline std::vector<FastaRecord> read_fasta(std::istream& is) {
  std::vector<FastaRecord> out;
  std::string line, id, body;
  bool open = false;
  auto flush = [&] {
    if (open) out.push_back({id, Sequence(body)});
    body.clear();
  };
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '>') {
      flush();
      id = line.substr(1, line.find_first_of(" \t") - 1);
      open = true;
    } else {
      if (!open) throw DomainError("read_fasta: sequence data before first header");
      body += line;
    }
  }
  flush();
  return out;
}

}  // namespace bioclass
