#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "bipdeg/core.hpp"

namespace bipdeg {

class GenerationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GenSpec {
    int n = 0;
    int d1 = 0;  ///< required largest term
    int dn = 0;  ///< required smallest term
    std::uint64_t seed = 0;
    int count = 1;
};

inline constexpr long kMaxGenerationAttempts = 1'000'000;

/// Rejection sampler for zero-free graphical sequences with exact extremes.
///
/// One term is pinned to d1 and one to dn; the rest are uniform on [dn, d1].
/// An odd weight is repaired by moving a random free term one step inside
/// the range, and the draw is kept only if it is graphical. Not uniform over
/// the target set.
class SequenceGenerator {
public:
    /// Throws GenerationFailure for specs no graphical sequence can meet.
    explicit SequenceGenerator(const GenSpec& spec);

    /// Throws GenerationFailure after kMaxGenerationAttempts rejections.
    DegreeSequence next();

private:
    GenSpec spec_;
    std::mt19937_64 rng_;
};

/// First sequence drawn for spec.seed.
DegreeSequence random_graphical(const GenSpec& spec);

/// spec.count sequences from one seeded stream.
std::vector<DegreeSequence> random_graphical_batch(const GenSpec& spec);

/// GenSpec in the range where the structured search does the most work:
/// 0.5n <= d1 <= 0.6n and 1 <= dn <= max(1, 0.1n), drawn from rng.
GenSpec hard_spec(int n, std::mt19937_64& rng);

}  // namespace bipdeg
