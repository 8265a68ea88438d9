#include <qident/bijection.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qident {

std::string_view to_string(ThetaBranch branch) {
    return branch == ThetaBranch::RemoveFromLambda ? "REMOVE_FROM_LAMBDA" : "MOVE_TO_LAMBDA";
}

PartitionPair phi(const Partition& lambda) {
    std::vector<int> repeated;
    std::vector<int> leftover;
    for (const auto& [part, count] : lambda.multiplicities()) {
        repeated.insert(repeated.end(), static_cast<size_t>(count / 2), part);
        if (count % 2 == 1) leftover.push_back(part);
    }
    return {Partition(std::move(repeated)), Partition(std::move(leftover))};
}

Partition phi_inverse(const PartitionPair& pair) {
    if (!pair.second.is_distinct())
        throw std::domain_error("phi_inverse: second component must have distinct parts");
    return partition_union(pair.first, partition_union(pair.first, pair.second));
}

namespace {

// Erases `count` copies of `value`; the caller guarantees they exist.
Partition remove_copies(const Partition& p, int value, int count) {
    std::vector<int> parts = p.parts();
    for (int i = 0; i < count; ++i)
        parts.erase(std::find(parts.begin(), parts.end(), value));
    return Partition(std::move(parts));
}

Partition add_copies(const Partition& p, int value, int count) {
    std::vector<int> parts = p.parts();
    auto where = std::lower_bound(parts.begin(), parts.end(), value, std::greater<int>());
    parts.insert(where, static_cast<size_t>(count), value);
    return Partition(std::move(parts));
}

}  // namespace

std::pair<PartitionPair, ThetaCase> theta(const PartitionPair& pair, ThetaTieRule tie) {
    std::optional<int> from_first;   // largest part of `first` with odd multiplicity
    std::optional<int> from_second;  // largest repeated part of `second`
    for (const auto& [part, count] : pair.first.multiplicities())
        if (count % 2 == 1) {
            from_first = part;
            break;
        }
    for (const auto& [part, count] : pair.second.multiplicities())
        if (count >= 2) {
            from_second = part;
            break;
        }
    if (!from_first && !from_second)
        throw std::domain_error("theta: undefined on the fixed set V");

    bool take_first;
    if (!from_second)
        take_first = true;
    else if (!from_first)
        take_first = false;
    else if (*from_first != *from_second)
        take_first = *from_first > *from_second;
    else
        take_first = tie == ThetaTieRule::PreferLambda;

    if (take_first) {
        int pivot = *from_first;
        return {{remove_copies(pair.first, pivot, 1), add_copies(pair.second, pivot, 2)},
                {ThetaBranch::RemoveFromLambda, pivot}};
    }
    int pivot = *from_second;
    return {{add_copies(pair.first, pivot, 1), remove_copies(pair.second, pivot, 2)},
            {ThetaBranch::MoveToLambda, pivot}};
}

Partition halve(const Partition& lambda) {
    std::vector<int> parts;
    for (const auto& [part, count] : lambda.multiplicities()) {
        if (count % 2 != 0)
            throw std::domain_error("halve: every multiplicity must be even");
        parts.insert(parts.end(), static_cast<size_t>(count / 2), part);
    }
    return Partition(std::move(parts));
}

}  // namespace qident
