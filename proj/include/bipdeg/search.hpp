#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bipdeg/combinations.hpp"
#include "bipdeg/core.hpp"
#include "bipdeg/rules.hpp"

namespace bipdeg {

/// Restrictions on the left side a that every enumerated candidate obeys.
struct SearchBounds {
    Partition a_f;      ///< degrees > n - d_1; forced into a
    Weight S = 0;       ///< |d|/2 - |a_f|
    int d_m = 0;        ///< least possible largest degree of b
    int l_1 = 0;        ///< most degrees with sum <= |d|/2
    int l_2 = 0;        ///< fewest degrees with sum >= |d|/2
    int ell_lo = 0;     ///< max(d_m, l_2)
    int ell_hi = 0;     ///< min(n - d_1, l_1)
    int x_0 = 0;        ///< longest prefix of d that a can contain

    friend bool operator==(const SearchBounds&, const SearchBounds&) = default;
};

/// Limit on the number of small-term combinations tried per search node.
class LcPolicy {
public:
    enum class Kind { Constant, LinearInN, Unlimited };

    static LcPolicy constant(std::int64_t c);
    static LcPolicy linear_in_n(std::int64_t multiplier);
    static LcPolicy unlimited() { return LcPolicy(Kind::Unlimited, 0); }
    /// Accepts an integer, "n", "<k>n", or "unlimited". Throws InvalidInput.
    static LcPolicy parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    std::int64_t value() const noexcept { return value_; }
    /// Concrete per-node budget for a sequence of length n.
    std::optional<std::size_t> resolve(std::size_t n) const noexcept;
    std::string to_string() const;

    friend bool operator==(const LcPolicy&, const LcPolicy&) = default;

private:
    LcPolicy(Kind k, std::int64_t v) : kind_(k), value_(v) {}
    Kind kind_;
    std::int64_t value_;
};

enum class DyOrder { LargestFirst, SmallestFirst };

struct SearchConfig {
    LcPolicy lc = LcPolicy::linear_in_n(1);
    DyOrder dy_order = DyOrder::LargestFirst;
    ComboOrder combo_order = ComboOrder::SmallestTermsFirst;
    int parallel_width = 1;
};

/// Outcome of a decision.
///
/// A "yes" always carries a witness that passes the Gale-Ryser test. A "no"
/// carries either the rule that fired or a search-exhausted certificate; the
/// latter is unconditionally correct only when `exact` is set.
struct Verdict {
    bool potentially_bipartite = false;
    std::optional<Bipartition> witness;
    std::optional<RuleId> rule;
    bool exact = true;
    int phase = 1;

    static Verdict yes(Bipartition witness, int phase);
    static Verdict rejected_by(RuleId rule);
    static Verdict exhausted(bool exact);

    /// Rule name, or "search_exhausted"; empty for a yes verdict.
    std::string certificate() const;
};

/// Everything except x_0, which compute_x0 fills in.
SearchBounds compute_bounds(const DegreeSequence& d);

/// Largest x such that every prefix d_1..d_x' (x' <= x) extends with later
/// terms to weight |d|/2 using at least ell_lo terms in total; 0 if x = 1
/// already fails. The upper end of the window is enforced per search node.
int compute_x0(const DegreeSequence& d, const SearchBounds& bounds);

/// Observes every fully assembled left side before its Gale-Ryser test.
using CandidateHook = std::function<void(const Partition& a)>;

/// Budget-limited structured enumeration. Expects phase1 to be undecided,
/// bounds from compute_bounds + compute_x0, and bounds.S > 0.
Verdict search(const DegreeSequence& d, const SearchBounds& bounds, const SearchConfig& config,
               const CandidateHook& hook = {});

/// Full pipeline: normalize, graphicality, rules, bounds, shortcuts, search.
/// Throws InvalidInput on negative terms and NotGraphical on non-graphical
/// input.
Verdict decide(std::span<const int> raw, const SearchConfig& config = {});
Verdict decide(const DegreeSequence& d, const SearchConfig& config = {});

}  // namespace bipdeg
