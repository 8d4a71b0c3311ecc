#include "bipdeg/combinations.hpp"

#include <algorithm>

namespace bipdeg {

namespace {

// dst |= (src << shift), both `words` long, truncated at `words` words.
void or_shifted(std::uint64_t* dst, const std::uint64_t* src, std::size_t words, int shift) {
    const std::size_t ws = static_cast<std::size_t>(shift) / 64;
    const unsigned bs = static_cast<unsigned>(shift) % 64;
    for (std::size_t w = words; w-- > ws;) {
        std::uint64_t v = src[w - ws] << bs;
        if (bs && w > ws) v |= src[w - ws - 1] >> (64 - bs);
        dst[w] |= v;
    }
}

}  // namespace

CombinationTable::CombinationTable(const Partition& pool, Weight max_target, int max_count)
    : max_target_(max_target), max_count_(max_count) {
    for (auto it = pool.parts().rbegin(); it != pool.parts().rend(); ++it) {
        if (!values_.empty() && values_.back() == *it)
            ++mult_.back();
        else {
            values_.push_back(*it);
            mult_.push_back(1);
        }
    }
    if (max_target_ < 0 || max_count_ < 0) {
        words_ = 0;
        return;
    }
    words_ = static_cast<std::size_t>(max_count_) / 64 + 1;
    const std::size_t r = values_.size();
    const auto width = static_cast<std::size_t>(max_target_ + 1);
    bits_.assign((r + 1) * width * words_, 0);
    const std::uint64_t last_mask =
        (max_count_ % 64 == 63) ? ~0ULL : ((1ULL << (max_count_ % 64 + 1)) - 1);

    bits_[r * width * words_] = 1;  // empty suffix: sum 0 with 0 terms
    for (std::size_t i = r; i-- > 0;) {
        const Weight u = values_[i];
        const int m = std::min(mult_[i], max_count_);
        for (Weight s = 0; s <= max_target_; ++s) {
            auto* dst = bits_.data() + (i * width + static_cast<std::size_t>(s)) * words_;
            for (int c = 0; c <= m && c * u <= s; ++c)
                or_shifted(dst, cell(i + 1, s - c * u), words_, c);
            dst[words_ - 1] &= last_mask;
        }
    }
}

bool CombinationTable::reachable(std::size_t i, Weight s, int k) const noexcept {
    if (s < 0 || s > max_target_ || k < 0 || k > max_count_) return false;
    const auto* c = cell(i, s);
    return (c[static_cast<std::size_t>(k) / 64] >> (static_cast<unsigned>(k) % 64)) & 1U;
}

CombinationStream::CombinationStream(const CombinationTable& table, Weight target, int lo, int hi,
                                     std::optional<std::size_t> budget, ComboOrder order)
    : table_(&table),
      target_(target),
      lo_(std::max(lo, 0)),
      hi_(std::min(hi, table.max_count())),
      budget_(budget),
      largest_first_(order == ComboOrder::LargestTermsFirst),
      k_(largest_first_ ? lo_ - 1 : hi_ + 1),
      count_(table.distinct(), 0),
      rem_sum_(table.distinct() + 1, 0),
      rem_k_(table.distinct() + 1, 0) {}

bool CombinationStream::feasible(std::size_t i, Weight s, int k) const noexcept {
    return table_->reachable(i, s, k);
}

int CombinationStream::cap(std::size_t i) const noexcept {
    const Weight by_sum = rem_sum_[i] / table_->value(i);
    return static_cast<int>(
        std::min<Weight>({table_->multiplicity(i), rem_k_[i], by_sum}));
}

bool CombinationStream::pick(std::size_t i, bool fresh) {
    const int top = cap(i);
    const int step = largest_first_ ? 1 : -1;
    int c = fresh ? (largest_first_ ? 0 : top) : count_[i] + step;
    for (; c >= 0 && c <= top; c += step) {
        const Weight s = rem_sum_[i] - static_cast<Weight>(c) * table_->value(i);
        const int k = rem_k_[i] - c;
        if (feasible(i + 1, s, k)) {
            count_[i] = c;
            rem_sum_[i + 1] = s;
            rem_k_[i + 1] = k;
            return true;
        }
    }
    return false;
}

void CombinationStream::descend(std::size_t from) {
    for (std::size_t i = from; i < count_.size(); ++i) pick(i, true);
}

bool CombinationStream::advance() {
    for (std::size_t i = count_.size(); i-- > 0;) {
        if (pick(i, false)) {
            descend(i + 1);
            return true;
        }
    }
    return false;
}

bool CombinationStream::start_next_cardinality() {
    const int step = largest_first_ ? 1 : -1;
    for (k_ += step; k_ >= lo_ && k_ <= hi_; k_ += step) {
        if (feasible(0, target_, k_)) {
            rem_sum_[0] = target_;
            rem_k_[0] = k_;
            descend(0);
            return true;
        }
    }
    return false;
}

void CombinationStream::emit(std::vector<int>& out) const {
    out.clear();
    for (std::size_t i = count_.size(); i-- > 0;)
        out.insert(out.end(), static_cast<std::size_t>(count_[i]), table_->value(i));
}

bool CombinationStream::next(std::vector<int>& out) {
    if (done_) return false;
    const bool budget_spent = budget_ && emitted_ >= *budget_;
    bool found;
    if (!started_) {
        started_ = true;
        found = start_next_cardinality();
    } else {
        found = advance() || start_next_cardinality();
    }
    if (!found || budget_spent) {
        truncated_ = found && budget_spent;
        done_ = true;
        return false;
    }
    ++emitted_;
    emit(out);
    return true;
}

std::optional<Partition> CombinationStream::next() {
    std::vector<int> out;
    if (!next(out)) return std::nullopt;
    return Partition(std::move(out));
}

SmallTermCombinations::SmallTermCombinations(const Partition& pool, Weight target, int lo, int hi,
                                             std::optional<std::size_t> budget, ComboOrder order)
    : table_(pool, std::min(target, pool.weight()), std::min<int>(hi, static_cast<int>(pool.length()))),
      stream_(table_, target, lo, hi, budget, order) {}

std::vector<Partition> SmallTermCombinations::collect() {
    std::vector<Partition> out;
    while (auto p = next()) out.push_back(std::move(*p));
    return out;
}

}  // namespace bipdeg
