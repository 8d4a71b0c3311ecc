#include "bipdeg/rules.hpp"

#include <array>
#include <vector>

namespace bipdeg {

namespace {

constexpr std::array<std::string_view, 7> kRuleNames = {
    "NoCandidateBipartition", "Mantel", "SmallDegrees", "LargeDegrees",
    "FixedDegrees",           "Residue", "MurphyBound",
};

// Counting sort, nonincreasing, for terms in [0, bound).
void sort_desc_bounded(std::vector<int>& xs, int bound) {
    std::vector<int> count(static_cast<std::size_t>(bound) + 1, 0);
    for (int x : xs) ++count[static_cast<std::size_t>(x)];
    std::size_t i = 0;
    for (int v = bound; v >= 0; --v)
        for (int c = count[static_cast<std::size_t>(v)]; c > 0; --c) xs[i++] = v;
}

}  // namespace

std::string_view rule_name(RuleId rule) noexcept {
    return kRuleNames[static_cast<std::size_t>(rule)];
}

std::optional<RuleId> rule_from_name(std::string_view name) noexcept {
    for (std::size_t i = 0; i < kRuleNames.size(); ++i)
        if (kRuleNames[i] == name) return static_cast<RuleId>(i);
    return std::nullopt;
}

bool has_candidate_bipartition(const DegreeSequence& d) {
    if (d.weight() % 2 != 0) throw InvalidInput("odd weight: " + d.to_string());
    const auto half = static_cast<std::size_t>(d.weight() / 2);
    std::vector<char> reach(half + 1, 0);
    reach[0] = 1;
    for (int x : d) {
        const auto step = static_cast<std::size_t>(x);
        if (step == 0) continue;
        for (std::size_t s = half; s >= step; --s)
            if (reach[s - step]) reach[s] = 1;
        if (reach[half]) return true;
    }
    return reach[half] != 0;
}

bool rule_mantel(const DegreeSequence& d) {
    const auto n = static_cast<Weight>(d.size());
    return 2 * d.weight() > n * n;
}

bool rule_small_degrees(const DegreeSequence& d) {
    const auto n = static_cast<int>(d.size());
    if (n == 0) return false;
    const int d1 = d.max();
    // d_{n+1-d_1}, 1-based.
    const int idx = n - d1;
    if (idx < 0 || idx >= n) return false;
    return d1 + d[static_cast<std::size_t>(idx)] > n;
}

bool rule_large_degrees(const DegreeSequence& d) {
    const auto n = static_cast<int>(d.size());
    const int left_max = n - d.max();
    Weight top = 0;
    for (int i = 0; i < left_max && i < n; ++i) top += d[static_cast<std::size_t>(i)];
    return 2 * top < d.weight();
}

bool rule_fixed_degrees(const DegreeSequence& d) {
    const int threshold = static_cast<int>(d.size()) - d.max();
    Weight fixed = 0;
    for (int x : d) {
        if (x <= threshold) break;
        fixed += x;
    }
    return 2 * fixed > d.weight();
}

int residue(const DegreeSequence& d) {
    std::vector<int> terms(d.begin(), d.end());
    const int bound = d.max();
    while (!terms.empty() && terms.front() > 0) {
        const int top = terms.front();
        if (static_cast<std::size_t>(top) >= terms.size())
            throw InvalidInput("Havel-Hakimi reduction failed on " + d.to_string());
        terms.erase(terms.begin());
        for (int i = 0; i < top; ++i) {
            if (--terms[static_cast<std::size_t>(i)] < 0)
                throw InvalidInput("Havel-Hakimi reduction failed on " + d.to_string());
        }
        sort_desc_bounded(terms, bound);
    }
    return static_cast<int>(terms.size());
}

int murphy_bound(const DegreeSequence& d) {
    // d is nonincreasing, so e_i (1-based, nondecreasing) = d[n - i].
    const std::size_t n = d.size();
    int beta = 0;
    std::size_t i = 1;
    while (i <= n) {
        ++beta;
        i += static_cast<std::size_t>(d[n - i]) + 1;
    }
    return beta;
}

Phase1Outcome phase1(const DegreeSequence& d) {
    if (!has_candidate_bipartition(d)) return Phase1Outcome::rejected(RuleId::NoCandidateBipartition);
    if (rule_mantel(d)) return Phase1Outcome::rejected(RuleId::Mantel);
    if (rule_small_degrees(d)) return Phase1Outcome::rejected(RuleId::SmallDegrees);
    if (rule_large_degrees(d)) return Phase1Outcome::rejected(RuleId::LargeDegrees);
    if (rule_fixed_degrees(d)) return Phase1Outcome::rejected(RuleId::FixedDegrees);
    const DegreeSequence comp = complement(d);
    if (residue(comp) >= 3) return Phase1Outcome::rejected(RuleId::Residue);
    if (murphy_bound(comp) >= 3) return Phase1Outcome::rejected(RuleId::MurphyBound);
    return Phase1Outcome::undecided_outcome();
}

}  // namespace bipdeg
