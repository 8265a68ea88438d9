#pragma once

#include <compare>
#include <iosfwd>
#include <iterator>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qident {

/// Finite weakly decreasing sequence of positive integers. The empty
/// partition is valid and has length 0, weight 0.
class Partition {
public:
    Partition() = default;
    /// Rejects nonpositive parts and sequences that are not weakly
    /// decreasing (no silent sorting).
    explicit Partition(std::vector<int> parts);

    /// Parses "[7,5,5,1]"; "[]" is the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long weight() const;
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    bool is_distinct() const;

    /// (part value, multiplicity) runs in decreasing part order.
    std::vector<std::pair<int, int>> multiplicities() const;

    std::string str() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

struct PartitionPair {
    Partition first;
    Partition second;

    std::string str() const;
    /// Parses "([5,4],[3,1])".
    static PartitionPair parse(std::string_view text);

    friend auto operator<=>(const PartitionPair&, const PartitionPair&) = default;
};

std::ostream& operator<<(std::ostream& os, const Partition& value);
std::ostream& operator<<(std::ostream& os, const PartitionPair& value);

/// Multiset union of the parts, re-sorted decreasingly.
Partition partition_union(const Partition& a, const Partition& b);

/// True iff every part of pair.first has even multiplicity and pair.second
/// has distinct parts.
bool is_in_V(const PartitionPair& pair);

/*
 * Streaming enumerators. Both ranges yield partitions in lexicographically
 * decreasing part-sequence order and keep only the current partition in
 * memory; collect with the enumerate_* helpers when a vector is wanted.
 */

/// Partitions with largest part <= max_part and exactly `length` parts.
class BoundedPartitions {
public:
    BoundedPartitions(int max_part, int length);

    class iterator {
    public:
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;

        Partition operator*() const;
        iterator& operator++();
        bool operator==(std::default_sentinel_t) const { return done_; }

    private:
        friend class BoundedPartitions;
        iterator(int max_part, int length);
        bool advance();

        std::vector<int> current_;
        bool done_ = false;
    };

    iterator begin() const { return iterator(max_part_, length_); }
    static std::default_sentinel_t end() { return {}; }

private:
    int max_part_;
    int length_;
};

/// Partitions with strictly decreasing parts, largest part <= max_part and
/// exactly `length` parts.
class DistinctBoundedPartitions {
public:
    DistinctBoundedPartitions(int max_part, int length);

    class iterator {
    public:
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;

        Partition operator*() const;
        iterator& operator++();
        bool operator==(std::default_sentinel_t) const { return done_; }

    private:
        friend class DistinctBoundedPartitions;
        iterator(int max_part, int length);
        bool advance();

        std::vector<int> current_;
        bool done_ = false;
    };

    iterator begin() const { return iterator(max_part_, length_); }
    static std::default_sentinel_t end() { return {}; }

private:
    int max_part_;
    int length_;
};

std::vector<Partition> enumerate_bounded(int max_part, int length);
std::vector<Partition> enumerate_distinct_bounded(int max_part, int length);

/*
 * Pair families indexed by a part bound m (parts run up to m+1) and a
 * length statistic n. Enumeration order is deterministic: ascending in the
 * first component's length, then lexicographically decreasing within each
 * component.
 */

/// Partitions with largest part <= m+1 and exactly n parts.
std::vector<Partition> set_A(int m, int n);
/// Pairs (lambda, mu), mu distinct, parts <= m+1, 2*len(lambda)+len(mu) = n.
std::vector<PartitionPair> set_B(int m, int n);
/// Pairs (lambda, mu), both unrestricted, parts <= m+1,
/// 2*len(lambda)+len(mu) = n.
std::vector<PartitionPair> set_U(int m, int n);
/// Members of set_U whose first component has all multiplicities even and
/// whose second component is distinct.
std::vector<PartitionPair> set_V(int m, int n);
/// Pairs (tau, mu), mu distinct, parts <= m+1, 4*len(tau)+len(mu) = n.
std::vector<PartitionPair> set_T(int m, int n);

}  // namespace qident
