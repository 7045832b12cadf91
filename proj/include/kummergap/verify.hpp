#pragma once

// Runs every structural invariant of the library over a built-in corpus of
// curves and semigroups plus a seeded random corpus.

#include <cstdint>
#include <string>
#include <vector>

#include "kummergap/checked.hpp"

namespace kummergap {

struct VerifyOptions {
  std::uint64_t seed = 20240917;
  std::size_t random_curves = 2000;
  // exhaustive part of the corpus: all lambda vectors with m <= max_m, r <= max_r
  Int exhaustive_max_m = 7;
  std::size_t exhaustive_max_r = 4;
};

struct InvariantOutcome {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0 && checked > 0; }
};

// One entry per invariant, in a fixed order.
std::vector<InvariantOutcome> verify_invariants(const VerifyOptions& options);

}  // namespace kummergap
