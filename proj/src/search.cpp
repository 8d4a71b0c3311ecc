#include "bipdeg/search.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <limits>
#include <mutex>
#include <thread>

namespace bipdeg {

// ---------------------------------------------------------------------------
// LcPolicy

LcPolicy LcPolicy::constant(std::int64_t c) {
    if (c < 1) throw InvalidInput("l_c must be at least 1");
    return LcPolicy(Kind::Constant, c);
}

LcPolicy LcPolicy::linear_in_n(std::int64_t multiplier) {
    if (multiplier < 1) throw InvalidInput("l_c multiplier must be at least 1");
    return LcPolicy(Kind::LinearInN, multiplier);
}

LcPolicy LcPolicy::parse(std::string_view text) {
    if (text == "unlimited" || text == "inf") return unlimited();
    if (text == "n") return linear_in_n(1);
    std::int64_t v = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr == first)
        throw InvalidInput("bad l_c value '" + std::string(text) + "'");
    if (ptr == last) return constant(v);
    if (std::string_view(ptr, static_cast<std::size_t>(last - ptr)) == "n") return linear_in_n(v);
    throw InvalidInput("bad l_c value '" + std::string(text) + "'");
}

std::optional<std::size_t> LcPolicy::resolve(std::size_t n) const noexcept {
    switch (kind_) {
        case Kind::Constant: return static_cast<std::size_t>(value_);
        case Kind::LinearInN: return std::max<std::size_t>(1, static_cast<std::size_t>(value_) * n);
        case Kind::Unlimited: return std::nullopt;
    }
    return std::nullopt;
}

std::string LcPolicy::to_string() const {
    switch (kind_) {
        case Kind::Constant: return std::to_string(value_);
        case Kind::LinearInN: return value_ == 1 ? "n" : std::to_string(value_) + "n";
        case Kind::Unlimited: return "unlimited";
    }
    return {};
}

// ---------------------------------------------------------------------------
// Verdict

Verdict Verdict::yes(Bipartition witness, int phase) {
    Verdict v;
    v.potentially_bipartite = true;
    v.witness = std::move(witness);
    v.phase = phase;
    return v;
}

Verdict Verdict::rejected_by(RuleId rule) {
    Verdict v;
    v.rule = rule;
    v.phase = 1;
    return v;
}

Verdict Verdict::exhausted(bool exact) {
    Verdict v;
    v.exact = exact;
    v.phase = 2;
    return v;
}

std::string Verdict::certificate() const {
    if (potentially_bipartite) return {};
    if (rule) return std::string(rule_name(*rule));
    return "search_exhausted";
}

// ---------------------------------------------------------------------------
// Bounds

SearchBounds compute_bounds(const DegreeSequence& d) {
    SearchBounds b;
    const int n = static_cast<int>(d.size());
    if (n == 0) return b;
    const Weight half = d.weight() / 2;
    const int threshold = n - d.max();

    std::vector<int> forced;
    for (int x : d) {
        if (x <= threshold) break;
        forced.push_back(x);
    }
    b.a_f = Partition(std::move(forced));
    b.S = half - b.a_f.weight();

    Weight acc = 0;
    for (auto it = d.vec().rbegin(); it != d.vec().rend() && acc + *it <= half; ++it) {
        acc += *it;
        ++b.l_1;
    }
    acc = 0;
    for (int x : d) {
        if (acc >= half) break;
        acc += x;
        ++b.l_2;
    }
    // Smallest-first suffix reaching half: its first term is the least
    // possible maximum of any subsequence with sum >= half.
    acc = 0;
    for (int i = n - 1; i >= 0; --i) {
        acc += d[static_cast<std::size_t>(i)];
        if (acc >= half) {
            b.d_m = d[static_cast<std::size_t>(i)];
            break;
        }
    }
    b.ell_lo = std::max(b.d_m, b.l_2);
    b.ell_hi = std::min(threshold, b.l_1);
    b.x_0 = compute_x0(d, b);
    return b;
}

int compute_x0(const DegreeSequence& d, const SearchBounds& bounds) {
    const std::size_t n = d.size();
    if (n == 0) return 0;
    const Weight half = d.weight() / 2;
    const auto width = static_cast<std::size_t>(half) + 1;

    std::vector<Weight> prefix(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + d[i];

    // most[s] = largest number of terms of d_{x+1..n} summing to s (or -1),
    // grown one term at a time as x decreases.
    constexpr int kUnreachable = -1;
    std::vector<int> most(width, kUnreachable);
    most[0] = 0;
    std::vector<char> feasible(n + 1, 0);
    for (std::size_t x = n; x >= 1; --x) {
        if (prefix[x] <= half) {
            const int extra = most[static_cast<std::size_t>(half - prefix[x])];
            feasible[x] = extra != kUnreachable &&
                          static_cast<int>(x) + extra >= bounds.ell_lo;
        }
        const auto term = static_cast<std::size_t>(d[x - 1]);
        for (std::size_t s = width; s-- > term;)
            if (most[s - term] != kUnreachable) most[s] = std::max(most[s], most[s - term] + 1);
    }
    int x0 = 0;
    while (static_cast<std::size_t>(x0) < n && feasible[static_cast<std::size_t>(x0) + 1]) ++x0;
    return x0;
}

// ---------------------------------------------------------------------------
// Search

namespace {

struct Outcome {
    std::optional<Bipartition> witness;
    bool truncated = false;
};

class Searcher {
public:
    Searcher(const DegreeSequence& d, const SearchBounds& bounds, const SearchConfig& config,
             const CandidateHook& hook, const std::atomic<bool>* stop)
        : d_(d),
          bounds_(bounds),
          config_(config),
          hook_(hook),
          stop_(stop),
          n_(static_cast<int>(d.size())),
          half_(d.weight() / 2),
          budget_(config.lc.resolve(d.size())) {
        prefix_.assign(d.size() + 1, 0);
        for (std::size_t i = 0; i < d.size(); ++i) prefix_[i + 1] = prefix_[i] + d[i];
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (i == 0 || d[i] != d[i - 1]) {
                values_.push_back(d[i]);
                first_.push_back(i);
            }
        }
        first_.push_back(d.size());
        a_.reserve(d.size());
        b_.reserve(d.size());
    }

    int stop_x() const {
        if (!bounds_.a_f.empty()) return static_cast<int>(bounds_.a_f.length());
        const auto top_copies = static_cast<int>(first_[1] - first_[0]);
        return (top_copies + 1) / 2;
    }

    /// Every node under d_S = (d_1..d_x). Returns true on success.
    bool run_prefix(int x, Outcome& out) {
        const Weight rest = half_ - prefix_[static_cast<std::size_t>(x)];
        if (rest < 0) return false;
        const int hi = bounds_.ell_hi;
        // d_{x+1} is left out of a, so b's largest term is at least d_{x+1}.
        int lo = bounds_.ell_lo;
        if (x < n_) lo = std::max(lo, d_[static_cast<std::size_t>(x)]);
        if (lo > hi || x > hi) return false;

        if (rest == 0) return x >= lo && test_left_side(x, 0, 0, {}, out);

        // Distinct values that may serve as d_y are those below the boundary
        // of d_{S'}: below d_x if copies of d_x remain, else below the next
        // smaller value.
        if (x >= n_) return false;
        const std::size_t boundary_value = value_index(d_[static_cast<std::size_t>(x)]);
        const std::size_t first_y = boundary_value + 1;
        if (first_y >= values_.size()) return false;

        const bool largest_first = config_.dy_order == DyOrder::LargestFirst;
        const std::size_t count = values_.size() - first_y;
        for (std::size_t t = 0; t < count; ++t) {
            if (stopped()) return false;
            const std::size_t yi = largest_first ? first_y + t : values_.size() - 1 - t;
            if (run_dy(x, yi, rest, lo, hi, out)) return true;
        }
        return false;
    }

private:
    bool stopped() const { return stop_ && stop_->load(std::memory_order_relaxed); }

    std::size_t value_index(int value) const {
        // values_ is strictly decreasing.
        auto it = std::lower_bound(values_.begin(), values_.end(), value, std::greater<>());
        return static_cast<std::size_t>(it - values_.begin());
    }

    bool run_dy(int x, std::size_t yi, Weight rest, int lo, int hi, Outcome& out) {
        const int dy = values_[yi];
        const int copies = static_cast<int>(first_[yi + 1] - first_[yi]);
        const Weight max_target = rest - dy;
        const int max_small = hi - x - 1;
        if (max_target < 0 || max_small < 0) return false;

        const std::size_t pool_begin = first_[yi + 1];
        const Partition pool(std::vector<int>(d_.begin() + static_cast<std::ptrdiff_t>(pool_begin),
                                              d_.end()));
        const CombinationTable table(pool, std::min(max_target, pool.weight()),
                                     std::min(max_small, static_cast<int>(pool.length())));
        std::vector<int> combo;
        for (int c = 1; c <= copies; ++c) {
            const Weight target = rest - static_cast<Weight>(c) * dy;
            const int placed = x + c;
            if (target < 0 || placed > hi) break;
            const int small_lo = std::max(0, lo - placed);
            const int small_hi = hi - placed;
            if (small_lo > small_hi) continue;
            CombinationStream stream(table, target, small_lo, small_hi, budget_,
                                     config_.combo_order);
            while (stream.next(combo)) {
                if (test_left_side(x, dy, c, combo, out)) return true;
            }
            if (stream.truncated()) out.truncated = true;
        }
        return false;
    }

    bool test_left_side(int x, int dy, int copies, const std::vector<int>& small, Outcome& out) {
        a_.assign(d_.begin(), d_.begin() + x);
        a_.insert(a_.end(), static_cast<std::size_t>(copies), dy);
        a_.insert(a_.end(), small.begin(), small.end());
        if (hook_) hook_(Partition(a_));

        // b = d - a, merging two nonincreasing lists.
        b_.clear();
        std::size_t j = 0;
        for (std::size_t i = 0; i < d_.size(); ++i) {
            if (j < a_.size() && a_[j] == d_[i])
                ++j;
            else
                b_.push_back(d_[i]);
        }
        if (!gale_ryser_sorted(a_, b_)) return false;
        out.witness = Bipartition{Partition(a_), Partition(b_)};
        return true;
    }

    const DegreeSequence& d_;
    const SearchBounds& bounds_;
    const SearchConfig& config_;
    const CandidateHook& hook_;
    const std::atomic<bool>* stop_;
    int n_;
    Weight half_;
    std::optional<std::size_t> budget_;
    std::vector<Weight> prefix_;
    std::vector<int> values_;         // distinct, decreasing
    std::vector<std::size_t> first_;  // first index of each value; sentinel n
    std::vector<int> a_, b_;
};

}  // namespace

Verdict search(const DegreeSequence& d, const SearchBounds& bounds, const SearchConfig& config,
               const CandidateHook& hook) {
    const int width = std::max(1, config.parallel_width);
    if (width == 1) {
        Searcher searcher(d, bounds, config, hook, nullptr);
        Outcome out;
        for (int x = bounds.x_0; x >= std::max(1, searcher.stop_x()); --x) {
            if (searcher.run_prefix(x, out)) return Verdict::yes(std::move(*out.witness), 2);
        }
        return Verdict::exhausted(!out.truncated);
    }

    // Workers take prefixes in descending order from a shared counter; the
    // first success stops everyone.
    std::atomic<bool> found{false};
    std::atomic<int> next_x{bounds.x_0};
    std::atomic<bool> truncated{false};
    std::mutex mu;
    std::optional<Bipartition> witness;
    int lowest = 1;
    {
        Searcher probe(d, bounds, config, hook, nullptr);
        lowest = std::max(1, probe.stop_x());
    }
    auto work = [&] {
        Searcher searcher(d, bounds, config, hook, &found);
        Outcome out;
        for (int x = next_x.fetch_sub(1); x >= lowest && !found.load(); x = next_x.fetch_sub(1)) {
            if (searcher.run_prefix(x, out)) {
                std::lock_guard lock(mu);
                if (!witness) witness = std::move(out.witness);
                found.store(true);
                break;
            }
        }
        if (out.truncated) truncated.store(true);
    };
    std::vector<std::jthread> pool;
    for (int i = 0; i < width; ++i) pool.emplace_back(work);
    pool.clear();
    if (witness) return Verdict::yes(std::move(*witness), 2);
    return Verdict::exhausted(!truncated.load());
}

Verdict decide(std::span<const int> raw, const SearchConfig& config) {
    Normalized norm = normalize(raw);
    if (!is_graphical(norm.sequence))
        throw NotGraphical("not graphical: " + norm.sequence.to_string());
    return decide(norm.sequence, config);
}

Verdict decide(const DegreeSequence& input, const SearchConfig& config) {
    if (!input.zero_free()) return decide(input.degrees(), config);
    const DegreeSequence& d = input;
    if (!is_graphical(d)) throw NotGraphical("not graphical: " + d.to_string());
    if (d.empty()) return Verdict::yes({}, 1);

    const Phase1Outcome p1 = phase1(d);
    if (!p1.undecided()) return Verdict::rejected_by(*p1.rejected_by);

    const SearchBounds bounds = compute_bounds(d);
    if (bounds.ell_lo > bounds.ell_hi) return Verdict::exhausted(true);
    if (bounds.S == 0) {
        Partition b = multiset_difference(d, bounds.a_f);
        if (gale_ryser(bounds.a_f, b)) return Verdict::yes({bounds.a_f, std::move(b)}, 2);
        return Verdict::exhausted(true);
    }
    return search(d, bounds, config);
}

}  // namespace bipdeg
