#include <qident/partition.hpp>

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace qident {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

long Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

bool Partition::is_distinct() const {
    return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

std::vector<std::pair<int, int>> Partition::multiplicities() const {
    std::vector<std::pair<int, int>> runs;
    for (int part : parts_) {
        if (!runs.empty() && runs.back().first == part)
            ++runs.back().second;
        else
            runs.emplace_back(part, 1);
    }
    return runs;
}

std::string Partition::str() const {
    std::string out = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ']';
    return out;
}

namespace {

void skip_space(std::string_view text, size_t& i) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
}

int read_int(std::string_view text, size_t& i) {
    skip_space(text, i);
    size_t start = i;
    if (i < text.size() && text[i] == '-') ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start || (text[start] == '-' && i == start + 1))
        throw std::invalid_argument("partition literal: expected an integer");
    return std::stoi(std::string(text.substr(start, i - start)));
}

Partition parse_partition_at(std::string_view text, size_t& i) {
    skip_space(text, i);
    if (i == text.size() || text[i] != '[')
        throw std::invalid_argument("partition literal: expected '['");
    ++i;
    std::vector<int> parts;
    skip_space(text, i);
    if (i < text.size() && text[i] == ']') {
        ++i;
        return Partition(std::move(parts));
    }
    while (true) {
        parts.push_back(read_int(text, i));
        skip_space(text, i);
        if (i == text.size())
            throw std::invalid_argument("partition literal: missing ']'");
        if (text[i] == ']') {
            ++i;
            break;
        }
        if (text[i] != ',')
            throw std::invalid_argument("partition literal: expected ',' or ']'");
        ++i;
    }
    return Partition(std::move(parts));
}

void expect_end(std::string_view text, size_t i) {
    skip_space(text, i);
    if (i != text.size())
        throw std::invalid_argument("partition literal: trailing characters");
}

}  // namespace

Partition Partition::parse(std::string_view text) {
    size_t i = 0;
    Partition p = parse_partition_at(text, i);
    expect_end(text, i);
    return p;
}

std::string PartitionPair::str() const {
    return "(" + first.str() + "," + second.str() + ")";
}

PartitionPair PartitionPair::parse(std::string_view text) {
    size_t i = 0;
    skip_space(text, i);
    if (i == text.size() || text[i] != '(')
        throw std::invalid_argument("partition pair literal: expected '('");
    ++i;
    Partition first = parse_partition_at(text, i);
    skip_space(text, i);
    if (i == text.size() || text[i] != ',')
        throw std::invalid_argument("partition pair literal: expected ','");
    ++i;
    Partition second = parse_partition_at(text, i);
    skip_space(text, i);
    if (i == text.size() || text[i] != ')')
        throw std::invalid_argument("partition pair literal: expected ')'");
    ++i;
    expect_end(text, i);
    return {std::move(first), std::move(second)};
}

std::ostream& operator<<(std::ostream& os, const Partition& value) { return os << value.str(); }

std::ostream& operator<<(std::ostream& os, const PartitionPair& value) {
    return os << value.str();
}

Partition partition_union(const Partition& a, const Partition& b) {
    std::vector<int> merged;
    merged.reserve(a.parts().size() + b.parts().size());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
               std::back_inserter(merged), std::greater<int>());
    return Partition(std::move(merged));
}

bool is_in_V(const PartitionPair& pair) {
    for (const auto& [part, count] : pair.first.multiplicities())
        if (count % 2 != 0) return false;
    return pair.second.is_distinct();
}

/*
 * Both iterators advance by the same scheme: scan from the right for the
 * first position whose value can drop by one while leaving room for a valid
 * suffix, then rebuild the suffix as large as possible. This visits part
 * sequences in lexicographically decreasing order.
 */

BoundedPartitions::BoundedPartitions(int max_part, int length)
    : max_part_(max_part), length_(length) {
    if (max_part < 0) throw std::invalid_argument("BoundedPartitions: negative part bound");
    if (length < 0) throw std::invalid_argument("BoundedPartitions: negative length");
}

BoundedPartitions::iterator::iterator(int max_part, int length) {
    if (length == 0) return;  // single empty partition
    if (max_part < 1) {
        done_ = true;
        return;
    }
    current_.assign(static_cast<size_t>(length), max_part);
}

Partition BoundedPartitions::iterator::operator*() const { return Partition(current_); }

bool BoundedPartitions::iterator::advance() {
    if (current_.empty()) return false;
    for (size_t i = current_.size(); i-- > 0;) {
        if (current_[i] > 1) {
            int value = --current_[i];
            std::fill(current_.begin() + static_cast<long>(i) + 1, current_.end(), value);
            return true;
        }
    }
    return false;
}

BoundedPartitions::iterator& BoundedPartitions::iterator::operator++() {
    done_ = !advance();
    return *this;
}

DistinctBoundedPartitions::DistinctBoundedPartitions(int max_part, int length)
    : max_part_(max_part), length_(length) {
    if (max_part < 0)
        throw std::invalid_argument("DistinctBoundedPartitions: negative part bound");
    if (length < 0) throw std::invalid_argument("DistinctBoundedPartitions: negative length");
}

DistinctBoundedPartitions::iterator::iterator(int max_part, int length) {
    if (length == 0) return;
    if (max_part < length) {
        done_ = true;
        return;
    }
    current_.resize(static_cast<size_t>(length));
    for (int i = 0; i < length; ++i) current_[static_cast<size_t>(i)] = max_part - i;
}

Partition DistinctBoundedPartitions::iterator::operator*() const { return Partition(current_); }

bool DistinctBoundedPartitions::iterator::advance() {
    if (current_.empty()) return false;
    const int length = static_cast<int>(current_.size());
    for (int i = length; i-- > 0;) {
        int value = current_[static_cast<size_t>(i)] - 1;
        // the suffix needs strictly decreasing values down to at least 1
        if (value >= length - i) {
            for (int j = i; j < length; ++j)
                current_[static_cast<size_t>(j)] = value - (j - i);
            return true;
        }
    }
    return false;
}

DistinctBoundedPartitions::iterator& DistinctBoundedPartitions::iterator::operator++() {
    done_ = !advance();
    return *this;
}

std::vector<Partition> enumerate_bounded(int max_part, int length) {
    std::vector<Partition> out;
    for (const Partition& p : BoundedPartitions(max_part, length)) out.push_back(p);
    return out;
}

std::vector<Partition> enumerate_distinct_bounded(int max_part, int length) {
    std::vector<Partition> out;
    for (const Partition& p : DistinctBoundedPartitions(max_part, length)) out.push_back(p);
    return out;
}

std::vector<Partition> set_A(int m, int n) { return enumerate_bounded(m + 1, n); }

namespace {

// Pairs (first, second), both bounded by m+1, with
// first_stride*len(first) + len(second) = n and second optionally distinct.
std::vector<PartitionPair> paired_family(int m, int n, int first_stride, bool second_distinct) {
    std::vector<PartitionPair> out;
    for (int k = 0; first_stride * k <= n; ++k) {
        auto firsts = enumerate_bounded(m + 1, k);
        auto seconds = second_distinct
                           ? enumerate_distinct_bounded(m + 1, n - first_stride * k)
                           : enumerate_bounded(m + 1, n - first_stride * k);
        for (const auto& first : firsts)
            for (const auto& second : seconds) out.push_back({first, second});
    }
    return out;
}

}  // namespace

std::vector<PartitionPair> set_B(int m, int n) { return paired_family(m, n, 2, true); }

std::vector<PartitionPair> set_U(int m, int n) { return paired_family(m, n, 2, false); }

std::vector<PartitionPair> set_V(int m, int n) {
    std::vector<PartitionPair> out;
    for (auto& pair : set_U(m, n))
        if (is_in_V(pair)) out.push_back(std::move(pair));
    return out;
}

std::vector<PartitionPair> set_T(int m, int n) { return paired_family(m, n, 4, true); }

}  // namespace qident
