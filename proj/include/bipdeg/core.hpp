#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bipdeg {

using Weight = std::int64_t;

/// Raised for malformed input: negative degrees, out-of-range terms,
/// weight mismatches between partitions that must be compared.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by the decision pipeline when the input cannot be realized by any
/// simple graph. Never reported as a bipartiteness verdict.
class NotGraphical : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A nonincreasing list of nonnegative degrees.
///
/// Zero terms are allowed so that complements keep their full length; the
/// decision pipeline only ever works on zero-free sequences (see normalize).
class DegreeSequence {
public:
    DegreeSequence() = default;
    /// Throws InvalidInput unless the terms are nonnegative and nonincreasing.
    explicit DegreeSequence(std::vector<int> degrees);
    DegreeSequence(std::initializer_list<int> degrees);

    std::span<const int> degrees() const noexcept { return degrees_; }
    const std::vector<int>& vec() const noexcept { return degrees_; }
    std::size_t size() const noexcept { return degrees_.size(); }
    bool empty() const noexcept { return degrees_.empty(); }
    Weight weight() const noexcept { return weight_; }
    int max() const noexcept { return degrees_.empty() ? 0 : degrees_.front(); }
    int min() const noexcept { return degrees_.empty() ? 0 : degrees_.back(); }
    bool zero_free() const noexcept { return degrees_.empty() || degrees_.back() > 0; }

    /// 0-based access.
    int operator[](std::size_t i) const noexcept { return degrees_[i]; }
    auto begin() const noexcept { return degrees_.begin(); }
    auto end() const noexcept { return degrees_.end(); }

    std::string to_string() const;

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

private:
    std::vector<int> degrees_;
    Weight weight_ = 0;
};

/// An integer partition in canonical form: nonincreasing parts, trailing
/// zeros trimmed.
class Partition {
public:
    Partition() = default;
    /// Sorts and trims its input; throws InvalidInput on negative parts.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    std::span<const int> parts() const noexcept { return parts_; }
    const std::vector<int>& vec() const noexcept { return parts_; }
    /// Number of nonzero parts.
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    Weight weight() const noexcept { return weight_; }
    /// Part j (0-based); parts past the end read as 0.
    int part(std::size_t j) const noexcept { return j < parts_.size() ? parts_[j] : 0; }

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    Weight weight_ = 0;
};

/// A split of a degree sequence into a left side and a right side of equal
/// weight.
struct Bipartition {
    Partition a;
    Partition b;

    friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

struct Normalized {
    DegreeSequence sequence;
    std::size_t zeros_dropped = 0;
};

/// Sorts nonincreasing and strips zero entries. Throws InvalidInput on a
/// negative entry.
Normalized normalize(std::span<const int> raw);

/// Erdős–Gallai test. The empty sequence is graphical.
bool is_graphical(const DegreeSequence& d);

/// Degree sequence of the complement graph, zeros retained.
/// Throws InvalidInput if some term is >= n.
DegreeSequence complement(const DegreeSequence& d);

/// Part k of the result counts the parts of p that are >= k.
Partition conjugate(const Partition& p);

/// Prefix-sum domination. Throws InvalidInput when the weights differ.
bool dominates(const Partition& p, const Partition& q);

/// True iff a bipartite graph with partite degree lists a and b exists,
/// i.e. conjugate(a) dominates b. Throws InvalidInput on weight mismatch.
bool gale_ryser(const Partition& a, const Partition& b);

/// gale_ryser on raw nonincreasing, zero-free, equal-weight lists; no
/// validation and no allocation.
bool gale_ryser_sorted(std::span<const int> a, std::span<const int> b) noexcept;

/// Multiset difference d - a. Throws InvalidInput if a is not a submultiset.
Partition multiset_difference(const DegreeSequence& d, const Partition& a);

}  // namespace bipdeg
