#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "bipdeg/core.hpp"
#include "bipdeg/search.hpp"

namespace bipdeg {

/// Exhaustive decision: tries every distinct candidate bipartition (one per
/// multiplicity vector) against Gale-Ryser. Always exact. Expects a zero-free
/// graphical sequence; meant for small n.
Verdict oracle_decide(const DegreeSequence& d);

/// Number of distinct candidate bipartitions of d (left sides counted as
/// multisets).
std::uint64_t count_candidate_bipartitions(const DegreeSequence& d);

using SequenceVisitor = std::function<void(const DegreeSequence&)>;

/// Visits every zero-free graphical sequence of length n exactly once, in
/// reverse-lexicographic order.
///
/// With shard_count > 1 only the sequences whose two-term prefix falls in
/// this shard (prefix ordinal % shard_count == shard_index) are visited; the
/// shards partition the full enumeration.
void enumerate_graphical_sequences(int n, const SequenceVisitor& visit, int shard_index = 0,
                                   int shard_count = 1);

std::vector<DegreeSequence> graphical_sequences(int n);

/// One row of the census tables.
struct TableRow {
    int n = 0;
    std::uint64_t D = 0;    ///< zero-free graphical sequences of length n
    std::uint64_t r = 0;    ///< rejected by one of the seven rules
    std::uint64_t B = 0;    ///< potentially bipartite (oracle)
    std::uint64_t B_w = 0;  ///< oracle yes, decide no at the configured budget

    TableRow& operator+=(const TableRow& o);
    friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// Full census for length n, sharded over `threads` workers. Totals do not
/// depend on the worker count.
TableRow tabulate(int n, const SearchConfig& config, int threads = 1);

}  // namespace bipdeg
