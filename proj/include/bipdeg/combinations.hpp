#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bipdeg/core.hpp"

namespace bipdeg {

enum class ComboOrder {
    /// Descending cardinality; ties prefer more copies of the smallest values.
    SmallestTermsFirst,
    /// The exact reverse of SmallestTermsFirst.
    LargestTermsFirst,
};

/// Reachability of (sum, count) pairs over suffixes of a multiset's distinct
/// values, taken in ascending order. Entry (i, s) is a bitset of every count k
/// such that some submultiset of the values u_i < u_{i+1} < ... sums to s with
/// exactly k terms. Sums above max_target and counts above max_count are not
/// tracked.
class CombinationTable {
public:
    CombinationTable() = default;
    CombinationTable(const Partition& pool, Weight max_target, int max_count);

    std::size_t distinct() const noexcept { return values_.size(); }
    int value(std::size_t i) const noexcept { return values_[i]; }
    int multiplicity(std::size_t i) const noexcept { return mult_[i]; }
    Weight max_target() const noexcept { return max_target_; }
    int max_count() const noexcept { return max_count_; }

    /// Can values u_i, u_{i+1}, ... reach sum s with exactly k terms?
    bool reachable(std::size_t i, Weight s, int k) const noexcept;

private:
    const std::uint64_t* cell(std::size_t i, Weight s) const noexcept {
        return bits_.data() + (i * static_cast<std::size_t>(max_target_ + 1) +
                               static_cast<std::size_t>(s)) * words_;
    }

    std::vector<int> values_;  // ascending
    std::vector<int> mult_;
    Weight max_target_ = -1;
    int max_count_ = -1;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Ordered stream of the distinct submultisets of a pool that sum to a target
/// and whose size lies in [lo, hi]. Each successive combination costs O(n)
/// once the table exists. The table must outlive the stream.
class CombinationStream {
public:
    CombinationStream(const CombinationTable& table, Weight target, int lo, int hi,
                      std::optional<std::size_t> budget, ComboOrder order);

    /// Writes the next combination (nonincreasing) into out. Returns false
    /// when the stream is exhausted or the budget is spent.
    bool next(std::vector<int>& out);
    std::optional<Partition> next();

    /// True once the budget stopped the stream with combinations left over.
    bool truncated() const noexcept { return truncated_; }
    std::size_t emitted() const noexcept { return emitted_; }

private:
    bool feasible(std::size_t i, Weight s, int k) const noexcept;
    int cap(std::size_t i) const noexcept;
    bool pick(std::size_t i, bool fresh);
    void descend(std::size_t from);
    bool advance();
    bool start_next_cardinality();
    void emit(std::vector<int>& out) const;

    const CombinationTable* table_;
    Weight target_;
    int lo_, hi_;
    std::optional<std::size_t> budget_;
    bool largest_first_;

    int k_;
    bool started_ = false;
    bool done_ = false;
    bool truncated_ = false;
    std::size_t emitted_ = 0;
    std::vector<int> count_;
    std::vector<Weight> rem_sum_;
    std::vector<int> rem_k_;
};

/// Convenience wrapper owning its table: the whole small-term enumeration for
/// one pool.
class SmallTermCombinations {
public:
    SmallTermCombinations(const Partition& pool, Weight target, int lo, int hi,
                          std::optional<std::size_t> budget,
                          ComboOrder order = ComboOrder::SmallestTermsFirst);
    SmallTermCombinations(const SmallTermCombinations&) = delete;
    SmallTermCombinations& operator=(const SmallTermCombinations&) = delete;

    std::optional<Partition> next() { return stream_.next(); }
    bool next(std::vector<int>& out) { return stream_.next(out); }
    bool truncated() const noexcept { return stream_.truncated(); }

    /// Drains the stream.
    std::vector<Partition> collect();

private:
    CombinationTable table_;
    CombinationStream stream_;
};

}  // namespace bipdeg
