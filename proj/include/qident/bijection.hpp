#pragma once

#include <qident/partition.hpp>

#include <string_view>
#include <utility>

namespace qident {

enum class ThetaBranch { RemoveFromLambda, MoveToLambda };

/// "REMOVE_FROM_LAMBDA" or "MOVE_TO_LAMBDA".
std::string_view to_string(ThetaBranch branch);

/// Which branch theta took and the part value it moved.
struct ThetaCase {
    ThetaBranch branch = ThetaBranch::RemoveFromLambda;
    int pivot = 0;

    friend bool operator==(const ThetaCase&, const ThetaCase&) = default;
};

/// Tie rule applied by theta when both candidate pivots exist and are equal.
/// PreferLambda is the correct rule; PreferMu is a deliberate fault kept only
/// for mutation-testing the involution checks.
enum class ThetaTieRule { PreferLambda, PreferMu };

/// Splits multiplicities: a part value occurring r times in the input
/// contributes floor(r/2) copies to the first output and r mod 2 copies to
/// the second. The second output therefore has distinct parts, and
/// weight(input) = 2*weight(first) + weight(second). Defined on every
/// partition.
PartitionPair phi(const Partition& lambda);

/// Inverse of phi: first U first U second. The second component must have
/// distinct parts.
Partition phi_inverse(const PartitionPair& pair);

/// Transfer step on pairs outside the fixed set accepted by is_in_V. Let
/// l0 be the largest part of pair.first with odd multiplicity and u0 the
/// largest repeated part of pair.second (each may be absent, not both).
/// When l0 wins (ties included), one copy of l0 leaves pair.first and two
/// copies of l0 enter pair.second; otherwise two copies of u0 leave
/// pair.second and one copy enters pair.first. Fixed-set members throw
/// std::domain_error.
std::pair<PartitionPair, ThetaCase> theta(
    const PartitionPair& pair, ThetaTieRule tie = ThetaTieRule::PreferLambda);

/// Halves every multiplicity. All multiplicities must be even; halve is the
/// inverse of lambda -> lambda U lambda.
Partition halve(const Partition& lambda);

}  // namespace qident
