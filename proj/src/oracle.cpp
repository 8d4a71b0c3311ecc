#include "bipdeg/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace bipdeg {

namespace {

struct ValueCounts {
    std::vector<int> values;  // decreasing
    std::vector<int> mult;
};

ValueCounts group(const DegreeSequence& d) {
    ValueCounts g;
    for (int x : d) {
        if (!g.values.empty() && g.values.back() == x)
            ++g.mult.back();
        else {
            g.values.push_back(x);
            g.mult.push_back(1);
        }
    }
    return g;
}

// Walks every multiplicity vector whose weighted sum is `half`; stops early
// when `leaf` returns true.
class CandidateWalk {
public:
    CandidateWalk(const DegreeSequence& d, std::function<bool(const std::vector<int>&)> leaf)
        : g_(group(d)), leaf_(std::move(leaf)), half_(d.weight() / 2) {
        tail_.assign(g_.values.size() + 1, 0);
        for (std::size_t i = g_.values.size(); i-- > 0;)
            tail_[i] = tail_[i + 1] + static_cast<Weight>(g_.values[i]) * g_.mult[i];
        chosen_.reserve(d.size());
    }

    bool run() {
        if (g_.values.empty()) return half_ == 0 && leaf_(chosen_);
        return visit(0, half_);
    }

private:
    bool visit(std::size_t i, Weight rem) {
        if (rem == 0) return leaf_(chosen_);
        if (i == g_.values.size() || tail_[i] < rem) return false;
        const int v = g_.values[i];
        const auto top = static_cast<int>(std::min<Weight>(g_.mult[i], rem / v));
        const std::size_t mark = chosen_.size();
        for (int c = top; c >= 0; --c) {
            chosen_.resize(mark);
            chosen_.insert(chosen_.end(), static_cast<std::size_t>(c), v);
            if (visit(i + 1, rem - static_cast<Weight>(c) * v)) return true;
        }
        chosen_.resize(mark);
        return false;
    }

    ValueCounts g_;
    std::function<bool(const std::vector<int>&)> leaf_;
    Weight half_;
    std::vector<Weight> tail_;
    std::vector<int> chosen_;
};

class SequenceEnumerator {
public:
    SequenceEnumerator(int n, const SequenceVisitor& visit, int shard_index, int shard_count)
        : n_(n), visit_(visit), shard_index_(shard_index), shard_count_(shard_count) {
        seq_.resize(static_cast<std::size_t>(n));
    }

    void run() {
        if (n_ <= 0) return;
        extend(0, n_ - 1);
    }

private:
    // Necessary Erdős–Gallai conditions for the chosen prefix d_1..d_k, with
    // every unchosen term taken at its largest allowed value d_k.
    bool prefix_feasible(int k) const {
        const int last = seq_[static_cast<std::size_t>(k - 1)];
        Weight lhs = 0;
        for (int r = 1; r <= k; ++r) {
            lhs += seq_[static_cast<std::size_t>(r - 1)];
            Weight rhs = static_cast<Weight>(r) * (r - 1);
            for (int i = r; i < k; ++i) rhs += std::min(r, seq_[static_cast<std::size_t>(i)]);
            rhs += static_cast<Weight>(n_ - k) * std::min(r, last);
            if (lhs > rhs) return false;
        }
        return true;
    }

    void extend(int k, int cap) {
        if (k == n_) {
            DegreeSequence d(seq_);
            if (is_graphical(d)) visit_(d);
            return;
        }
        for (int v = cap; v >= 1; --v) {
            seq_[static_cast<std::size_t>(k)] = v;
            if (k == std::min(1, n_ - 1)) {
                const bool mine = prefix_ordinal_++ % shard_count_ == shard_index_;
                if (!mine) continue;
            }
            if (!prefix_feasible(k + 1)) continue;
            extend(k + 1, v);
        }
    }

    int n_;
    const SequenceVisitor& visit_;
    int shard_index_, shard_count_;
    long long prefix_ordinal_ = 0;
    std::vector<int> seq_;
};

}  // namespace

Verdict oracle_decide(const DegreeSequence& d) {
    if (d.weight() % 2 != 0) return Verdict::exhausted(true);
    std::optional<Bipartition> found;
    std::vector<int> b;
    CandidateWalk walk(d, [&](const std::vector<int>& a) {
        b.clear();
        std::size_t j = 0;
        for (int x : d) {
            if (j < a.size() && a[j] == x)
                ++j;
            else
                b.push_back(x);
        }
        if (!gale_ryser_sorted(a, b)) return false;
        found = Bipartition{Partition(a), Partition(b)};
        return true;
    });
    if (walk.run()) return Verdict::yes(std::move(*found), 2);
    return Verdict::exhausted(true);
}

std::uint64_t count_candidate_bipartitions(const DegreeSequence& d) {
    if (d.weight() % 2 != 0) return 0;
    std::uint64_t count = 0;
    CandidateWalk walk(d, [&](const std::vector<int>&) {
        ++count;
        return false;
    });
    walk.run();
    return count;
}

void enumerate_graphical_sequences(int n, const SequenceVisitor& visit, int shard_index,
                                   int shard_count) {
    if (shard_count < 1 || shard_index < 0 || shard_index >= shard_count)
        throw InvalidInput("bad shard " + std::to_string(shard_index) + "/" +
                           std::to_string(shard_count));
    SequenceEnumerator(n, visit, shard_index, shard_count).run();
}

std::vector<DegreeSequence> graphical_sequences(int n) {
    std::vector<DegreeSequence> out;
    enumerate_graphical_sequences(n, [&](const DegreeSequence& d) { out.push_back(d); });
    return out;
}

TableRow& TableRow::operator+=(const TableRow& o) {
    D += o.D;
    r += o.r;
    B += o.B;
    B_w += o.B_w;
    return *this;
}

TableRow tabulate(int n, const SearchConfig& config, int threads) {
    threads = std::max(1, threads);
    // Sharding needs a few times more prefixes than workers to balance.
    const int shards = threads == 1 ? 1 : threads * 8;
    std::vector<TableRow> partial(static_cast<std::size_t>(shards));
    SearchConfig serial = config;
    serial.parallel_width = 1;

    auto run_shard = [&](int shard) {
        TableRow& row = partial[static_cast<std::size_t>(shard)];
        enumerate_graphical_sequences(
            n,
            [&](const DegreeSequence& d) {
                ++row.D;
                if (!phase1(d).undecided()) ++row.r;
                if (oracle_decide(d).potentially_bipartite) {
                    ++row.B;
                    if (!decide(d, serial).potentially_bipartite) ++row.B_w;
                }
            },
            shard, shards);
    };

    if (threads == 1) {
        run_shard(0);
    } else {
        std::atomic<int> next{0};
        std::vector<std::jthread> workers;
        for (int t = 0; t < threads; ++t)
            workers.emplace_back([&] {
                for (int s = next++; s < shards; s = next++) run_shard(s);
            });
    }
    TableRow total;
    total.n = n;
    for (const auto& p : partial) total += p;
    return total;
}

}  // namespace bipdeg
