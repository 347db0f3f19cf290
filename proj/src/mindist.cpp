#include "surfcode/mindist.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "surfcode/errors.hpp"
#include "surfcode/field.hpp"

namespace surfcode {

namespace {

// Number of projective message classes (q^k - 1)/(q - 1), saturated at cap+1.
long long class_count_capped(long long q, size_t k, long long cap) {
  cap = std::min(cap, std::numeric_limits<long long>::max() - 1);
  long long classes = 0;
  long long power = 1;  // q^i
  for (size_t i = 0; i < k; ++i) {
    classes += power;
    if (classes > cap) return cap + 1;
    if (i + 1 < k) {
      if (power > cap / q) return cap + 1;
      power *= q;
    }
  }
  return classes;
}

long long weight_of_row(const gfe* acc, size_t n) {
  long long w = 0;
  for (size_t j = 0; j < n; ++j) w += (acc[j] != 0);
  return w;
}

// Enumerates one representative per projective class (first nonzero message
// coordinate fixed to 1), maintaining the codeword incrementally.
long long exhaustive_scan(const LinearCode& C) {
  const Field& F = *C.field();
  const long long q = F.q();
  const size_t k = C.k();
  const size_t n = C.n();
  long long best = (long long)n;
  std::vector<gfe> acc(n);
  std::vector<gfe> digits(k);
  for (size_t lead = 0; lead < k; ++lead) {
    auto rl = C.row(lead);
    std::copy(rl.begin(), rl.end(), acc.begin());
    std::fill(digits.begin() + lead, digits.end(), 0);
    while (true) {
      best = std::min(best, weight_of_row(acc.data(), n));
      if (best == 1) return 1;
      bool tail_wrapped = true;
      if (lead + 1 < k) {
        size_t t = k - 1;
        while (true) {
          const gfe old = digits[t];
          const bool wraps = (long long)old + 1 >= q;
          const gfe next = wraps ? gfe{0} : gfe(old + 1);
          digits[t] = next;
          const gfe delta = F.sub(next, old);
          auto rt = C.row(t);
          for (size_t j = 0; j < n; ++j)
            acc[j] = F.add(acc[j], F.mul(delta, rt[j]));
          if (!wraps) {
            tail_wrapped = false;
            break;
          }
          if (t == lead + 1) break;
          --t;
        }
      }
      if (tail_wrapped) break;
    }
  }
  return best;
}

struct SystematicSystem {
  std::vector<gfe> rows;       // k x n, reduced echelon under scan order
  std::vector<size_t> pivots;  // pivot columns, in scan-preference order
  long long rho = 0;           // pivots not seen in earlier systems
};

// Gaussian elimination preferring pivot columns in the cyclic order
// start, start+1, ..., n-1, 0, ..., start-1.
SystematicSystem reduce_with_scan_order(const Field& F, std::vector<gfe> rows,
                                        size_t k, size_t n, size_t start) {
  SystematicSystem sys;
  size_t rank = 0;
  for (size_t step = 0; step < n && rank < k; ++step) {
    const size_t c = (start + step) % n;
    size_t pivot_row = k;
    for (size_t r = rank; r < k; ++r) {
      if (rows[r * n + c] != 0) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row == k) continue;
    if (pivot_row != rank) {
      for (size_t j = 0; j < n; ++j)
        std::swap(rows[rank * n + j], rows[pivot_row * n + j]);
    }
    const gfe scale = F.inv(rows[rank * n + c]);
    for (size_t j = 0; j < n; ++j)
      rows[rank * n + j] = F.mul(scale, rows[rank * n + j]);
    for (size_t r = 0; r < k; ++r) {
      if (r == rank) continue;
      const gfe factor = rows[r * n + c];
      if (factor == 0) continue;
      for (size_t j = 0; j < n; ++j)
        rows[r * n + j] =
            F.sub(rows[r * n + j], F.mul(factor, rows[rank * n + j]));
    }
    sys.pivots.push_back(c);
    ++rank;
  }
  if (rank != k)
    throw InvalidInputError("systematic form: generator rows are dependent");
  sys.rows = std::move(rows);
  return sys;
}

std::vector<SystematicSystem> build_systems(const LinearCode& C) {
  const Field& F = *C.field();
  const size_t k = C.k();
  const size_t n = C.n();
  std::vector<SystematicSystem> systems;
  std::vector<char> covered(n, 0);
  for (size_t i = 0; i < n; ++i) {
    const size_t start = (i * k) % n;
    SystematicSystem sys = reduce_with_scan_order(F, C.matrix(), k, n, start);
    for (size_t c : sys.pivots)
      if (!covered[c]) ++sys.rho;
    if (sys.rho == 0 && !systems.empty()) break;
    for (size_t c : sys.pivots) covered[c] = 1;
    systems.push_back(std::move(sys));
    if (std::all_of(covered.begin(), covered.end(),
                    [](char x) { return x != 0; }))
      break;
  }
  return systems;
}

bool next_combination(std::vector<size_t>& supp, size_t k) {
  const size_t w = supp.size();
  size_t i = w;
  while (i > 0 && supp[i - 1] == k - w + (i - 1)) --i;
  if (i == 0) return false;
  ++supp[i - 1];
  for (size_t j = i; j < w; ++j) supp[j] = supp[j - 1] + 1;
  return true;
}

// Minimum distance via systematic forms over several information sets.
// After enumerating all messages of weight <= w in every system, a codeword
// not yet seen restricts to a message of weight >= w+1 in each system; on the
// rho_i pivot columns new to system i (disjoint across systems) it therefore
// has weight >= (w+1) - (k - rho_i), giving the combined lower bound.
DistanceComputation run_bz(const LinearCode& C, long long budget) {
  const Field& F = *C.field();
  const long long q = F.q();
  const size_t k = C.k();
  const size_t n = C.n();

  DistanceComputation result;
  result.method = "bz";

  const std::vector<SystematicSystem> systems = build_systems(C);
  long long best = (long long)n;

  for (size_t w = 1; w <= k; ++w) {
    for (const SystematicSystem& sys : systems) {
      std::vector<size_t> supp(w);
      for (size_t j = 0; j < w; ++j) supp[j] = j;
      std::vector<gfe> acc(n);
      std::vector<gfe> vals(w);
      do {
        std::fill(acc.begin(), acc.end(), gfe{0});
        std::fill(vals.begin(), vals.end(), gfe{1});
        for (size_t j = 0; j < w; ++j) {
          const gfe* rj = sys.rows.data() + supp[j] * n;
          for (size_t c = 0; c < n; ++c) acc[c] = F.add(acc[c], rj[c]);
        }
        while (true) {
          best = std::min(best, weight_of_row(acc.data(), n));
          ++result.candidates;
          if (best == 1) {
            result.distance = 1;
            result.exact = true;
            return result;
          }
          if (result.candidates >= budget) {
            result.distance = best;
            result.exact = false;
            return result;
          }
          bool tail_wrapped = true;
          if (w > 1) {
            size_t t = w - 1;
            while (true) {
              const gfe old = vals[t];
              const bool wraps = (long long)old + 1 >= q;
              const gfe next = wraps ? gfe{1} : gfe(old + 1);
              vals[t] = next;
              const gfe delta = F.sub(next, old);
              const gfe* rt = sys.rows.data() + supp[t] * n;
              for (size_t c = 0; c < n; ++c)
                acc[c] = F.add(acc[c], F.mul(delta, rt[c]));
              if (!wraps) {
                tail_wrapped = false;
                break;
              }
              if (t == 1) break;
              --t;
            }
          }
          if (tail_wrapped) break;
        }
      } while (next_combination(supp, k));
    }
    long long lower = 0;
    for (const SystematicSystem& sys : systems)
      lower += std::max<long long>(
          0, (long long)(w + 1) - ((long long)k - sys.rho));
    if (lower >= best) {
      result.distance = best;
      result.exact = true;
      return result;
    }
  }
  // Every message of every system was enumerated.
  result.distance = best;
  result.exact = true;
  return result;
}

}  // namespace

long long min_distance_exhaustive(const LinearCode& C, long long budget) {
  if (C.k() == 0)
    throw InvalidInputError(
        "min_distance_exhaustive: code has no nonzero codewords");
  if (budget <= 0) throw InvalidInputError("distance budget must be positive");
  const long long classes = class_count_capped(C.field()->q(), C.k(), budget);
  if (classes > budget)
    throw BudgetExceededError(
        "min_distance_exhaustive: message space over GF(" +
        std::to_string(C.field()->q()) + ") with k=" + std::to_string(C.k()) +
        " exceeds the budget of " + std::to_string(budget) +
        " codeword classes");
  return exhaustive_scan(C);
}

long long min_distance_bz(const LinearCode& C, bool force_information_sets) {
  return min_distance_budgeted(C, std::numeric_limits<long long>::max(),
                               force_information_sets)
      .distance;
}

DistanceComputation min_distance_budgeted(const LinearCode& C,
                                          long long budget,
                                          bool force_information_sets) {
  if (C.k() == 0)
    throw InvalidInputError(
        "min_distance_budgeted: code has no nonzero codewords");
  if (budget <= 0) throw InvalidInputError("distance budget must be positive");
  constexpr long long kExhaustiveFallback = 65536;
  const long long classes =
      class_count_capped(C.field()->q(), C.k(), kExhaustiveFallback);
  if (!force_information_sets && classes <= kExhaustiveFallback &&
      classes <= budget) {
    DistanceComputation result;
    result.distance = exhaustive_scan(C);
    result.exact = true;
    result.candidates = classes;
    result.method = "exhaustive";
    return result;
  }
  return run_bz(C, budget);
}

}  // namespace surfcode
