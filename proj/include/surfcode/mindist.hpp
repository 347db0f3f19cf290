#pragma once

#include "surfcode/linear_code.hpp"

namespace surfcode {

inline constexpr long long kDefaultDistanceBudget = 10'000'000;

// Exact minimum distance by enumerating one representative per projective
// class of messages ((q^k - 1)/(q - 1) of them).  Throws BudgetExceededError
// up front when the class count exceeds the budget.
long long min_distance_exhaustive(const LinearCode& C,
                                  long long budget = kDefaultDistanceBudget);

struct DistanceComputation {
  long long distance = 0;   // exact, or the best upper bound found
  bool exact = false;
  long long candidates = 0; // codewords examined
  std::string method;
};

// Exact minimum distance via systematic generator matrices over several
// information sets (greedy leftmost pivots, then cyclic column shifts),
// enumerating messages by ascending weight until the combined lower bound
// meets the best codeword found.  Falls back to full enumeration for small
// codes unless force_information_sets is set.  Runs to completion
// regardless of cost.
long long min_distance_bz(const LinearCode& C,
                          bool force_information_sets = false);

// Same algorithm with a cap on examined codewords; exact == false when the
// cap was hit (distance then holds the best upper bound so far).
DistanceComputation min_distance_budgeted(const LinearCode& C,
                                          long long budget,
                                          bool force_information_sets = false);

}  // namespace surfcode
