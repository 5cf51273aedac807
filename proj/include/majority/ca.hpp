#pragma once

#include <span>
#include <vector>

#include "majority/configuration.hpp"
#include "majority/rule.hpp"

namespace majority {

inline constexpr int kDefaultMaxSteps = 320;

enum class Verdict { AllZeros, AllOnes, Undecided };

/// `step` is the first time index at which the lattice is a uniform fixed
/// point, or `max_steps` when undecided.
struct Outcome {
  Verdict verdict = Verdict::Undecided;
  int step = 0;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

/// True when the outcome is the uniform fixed point matching the IC majority.
inline bool is_correct(const Outcome& outcome, const Configuration& ic) {
  return outcome.verdict == (ic.majority() ? Verdict::AllOnes : Verdict::AllZeros);
}

// Serial reference. Straightforward cell-by-cell simulation with modular
// indexing; kept as the oracle for the batch kernel.

Configuration step(const Rule& rule, const Configuration& config);
Outcome evolve(const Rule& rule, const Configuration& ic, int max_steps = kDefaultMaxSteps);

// Bit-sliced kernel. ICs are packed 256 to a block (one bit per IC in each
// cell word) and the rule table is evaluated as a multiplexer tree over the
// packed lanes. Blocks are distributed across OpenMP threads; the result is
// in input order and identical to mapping `evolve`.

std::vector<Outcome> classify_batch(const Rule& rule, std::span<const Configuration> ics,
                                    int max_steps = kDefaultMaxSteps);

/// Number of ICs classified correctly; same as counting `is_correct` over
/// `classify_batch` but without materializing the outcomes.
std::size_t count_correct(const Rule& rule, std::span<const Configuration> ics,
                          int max_steps = kDefaultMaxSteps);

}  // namespace majority
