#pragma once

#include <stdexcept>
#include <string>

namespace bioclass {

// Invalid parameters (counts, ranges, grids).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input outside an operation's mathematical domain (e.g. L > W).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Operands whose shapes do not agree.
class DimensionError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace bioclass
