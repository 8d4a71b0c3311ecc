#pragma once

#include <optional>
#include <string_view>

#include "bipdeg/core.hpp"

namespace bipdeg {

/// The seven polynomial-time rejection rules, in evaluation order.
enum class RuleId {
    NoCandidateBipartition,
    Mantel,
    SmallDegrees,
    LargeDegrees,
    FixedDegrees,
    Residue,
    MurphyBound,
};

std::string_view rule_name(RuleId rule) noexcept;
/// Inverse of rule_name; nullopt for unknown names.
std::optional<RuleId> rule_from_name(std::string_view name) noexcept;

/// Result of the first phase: the first rule that fires, or nothing.
struct Phase1Outcome {
    std::optional<RuleId> rejected_by;

    bool undecided() const noexcept { return !rejected_by.has_value(); }
    static Phase1Outcome undecided_outcome() { return {}; }
    static Phase1Outcome rejected(RuleId r) { return {r}; }

    friend bool operator==(const Phase1Outcome&, const Phase1Outcome&) = default;
};

// Each rule_* predicate returns true when the rule rejects d.

/// Some submultiset of d sums to |d|/2 (reachable-sums table).
/// Throws InvalidInput on odd weight.
bool has_candidate_bipartition(const DegreeSequence& d);
bool rule_mantel(const DegreeSequence& d);
bool rule_small_degrees(const DegreeSequence& d);
bool rule_large_degrees(const DegreeSequence& d);
bool rule_fixed_degrees(const DegreeSequence& d);

/// Zeros left after iterated Havel–Hakimi reduction. Zeros in d are allowed.
/// Throws InvalidInput if the reduction runs out of terms to decrement.
int residue(const DegreeSequence& d);

/// Greedy jump bound on the independence number: with degrees sorted
/// nondecreasing e_1 <= ... <= e_n, count the jumps i <- i + e_i + 1 from
/// i = 1 that land inside the list.
int murphy_bound(const DegreeSequence& d);

/// Runs the rules in order and reports the first one that fires.
/// Expects a zero-free graphical sequence.
Phase1Outcome phase1(const DegreeSequence& d);

}  // namespace bipdeg
