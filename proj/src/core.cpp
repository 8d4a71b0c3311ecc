#include "bipdeg/core.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace bipdeg {

namespace {

std::string join(std::span<const int> xs) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out << ',';
        out << xs[i];
    }
    out << ')';
    return out.str();
}

Weight sum(std::span<const int> xs) {
    Weight s = 0;
    for (int x : xs) s += x;
    return s;
}

}  // namespace

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
        if (degrees_[i] < 0) throw InvalidInput("degree sequence has a negative term");
        if (i && degrees_[i] > degrees_[i - 1])
            throw InvalidInput("degree sequence is not nonincreasing: " + join(degrees_));
    }
    weight_ = sum(degrees_);
}

DegreeSequence::DegreeSequence(std::initializer_list<int> degrees)
    : DegreeSequence(std::vector<int>(degrees)) {}

std::string DegreeSequence::to_string() const { return join(degrees_); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (std::ranges::any_of(parts_, [](int p) { return p < 0; }))
        throw InvalidInput("partition has a negative part");
    std::ranges::sort(parts_, std::greater<>());
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    weight_ = sum(parts_);
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

std::string Partition::to_string() const { return join(parts_); }

Normalized normalize(std::span<const int> raw) {
    std::vector<int> kept;
    kept.reserve(raw.size());
    std::size_t zeros = 0;
    for (int x : raw) {
        if (x < 0) throw InvalidInput("negative degree " + std::to_string(x));
        if (x == 0)
            ++zeros;
        else
            kept.push_back(x);
    }
    std::ranges::sort(kept, std::greater<>());
    return {DegreeSequence(std::move(kept)), zeros};
}

bool is_graphical(const DegreeSequence& d) {
    const auto n = static_cast<Weight>(d.size());
    if (d.weight() % 2 != 0) return false;
    if (n == 0) return true;
    if (d.max() > n - 1) return false;

    // Erdős–Gallai with the standard "corrected" tail: for each k,
    //   sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(k, d_i).
    // Terms are nonincreasing, so the tail splits at the last index whose
    // degree exceeds k.
    std::vector<Weight> suffix(d.size() + 1, 0);
    for (std::size_t i = d.size(); i-- > 0;) suffix[i] = suffix[i + 1] + d[i];

    Weight prefix = 0;
    std::size_t split = d.size();  // first index (0-based) with d_i <= k
    for (Weight k = 1; k <= n; ++k) {
        prefix += d[static_cast<std::size_t>(k - 1)];
        while (split > 0 && d[split - 1] <= k) --split;
        std::size_t big = std::max<std::size_t>(split, static_cast<std::size_t>(k));
        Weight tail = static_cast<Weight>(big - static_cast<std::size_t>(k)) * k + suffix[big];
        if (prefix > k * (k - 1) + tail) return false;
    }
    return true;
}

DegreeSequence complement(const DegreeSequence& d) {
    const int n = static_cast<int>(d.size());
    std::vector<int> out(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] >= n)
            throw InvalidInput("term " + std::to_string(d[i]) + " too large for length " +
                               std::to_string(n));
        out[d.size() - 1 - i] = n - 1 - d[i];
    }
    return DegreeSequence(std::move(out));
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    const int top = p.part(0);
    std::vector<int> out(static_cast<std::size_t>(top), 0);
    // count[k-1] = number of parts >= k, by a counting scan.
    for (int part : p.parts()) ++out[static_cast<std::size_t>(part - 1)];
    for (std::size_t k = out.size() - 1; k-- > 0;) out[k] += out[k + 1];
    return Partition(std::move(out));
}

bool dominates(const Partition& p, const Partition& q) {
    if (p.weight() != q.weight())
        throw InvalidInput("domination compares partitions of different weights: " +
                           p.to_string() + " vs " + q.to_string());
    Weight sp = 0, sq = 0;
    const std::size_t len = std::max(p.length(), q.length());
    for (std::size_t j = 0; j < len; ++j) {
        sp += p.part(j);
        sq += q.part(j);
        if (sp < sq) return false;
    }
    return true;
}

bool gale_ryser(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight())
        throw InvalidInput("Gale-Ryser test needs equal weights: " + a.to_string() + " vs " +
                           b.to_string());
    return dominates(conjugate(a), b);
}

bool gale_ryser_sorted(std::span<const int> a, std::span<const int> b) noexcept {
    // Walks conjugate(a) implicitly: its j-th part is the number of a_i >= j.
    std::size_t above = a.size();
    const std::size_t len = std::max(b.size(), a.empty() ? std::size_t{0}
                                                         : static_cast<std::size_t>(a[0]));
    Weight sa = 0, sb = 0;
    for (std::size_t j = 1; j <= len; ++j) {
        while (above > 0 && static_cast<std::size_t>(a[above - 1]) < j) --above;
        sa += static_cast<Weight>(above);
        if (j <= b.size()) sb += b[j - 1];
        if (sa < sb) return false;
    }
    return true;
}

Partition multiset_difference(const DegreeSequence& d, const Partition& a) {
    std::vector<int> rest;
    rest.reserve(d.size());
    std::size_t j = 0;
    for (int x : d) {
        if (j < a.length() && a.part(j) == x)
            ++j;
        else
            rest.push_back(x);
    }
    if (j != a.length())
        throw InvalidInput(a.to_string() + " is not a submultiset of " + d.to_string());
    return Partition(std::move(rest));
}

}  // namespace bipdeg
