#pragma once

#include <qident/intpoly.hpp>
#include <qident/zseries.hpp>

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qident {

/// Registered identities.
///
///   s1..s5        classical binomial sums over exact rationals
///   new1, new2    integer binomial sums (the q = 1 shadows of new3, new4)
///   new3, new4    q-binomial polynomial identities
///   spe1, spe2    central special cases of new3 shifted into odd indices
///   gf_A, gf_D    bounded / bounded-distinct partition generating functions
///   qbione        1/(z^2;q^2)_{m+1} * (-z;q)_{m+1} = 1/(z;q)_{m+1}
///   qbitwo        1/(z^4;q^4)_{m+1} * (-z;q)_{m+1}
///                   = 1/(z;q)_{m+1} * 1/(-z^2;q^2)_{m+1}
enum class IdentityName {
    s1,
    s2,
    s3,
    s4,
    s5,
    new1,
    new2,
    new3,
    new4,
    spe1,
    spe2,
    gf_A,
    gf_D,
    qbione,
    qbitwo,
};

std::string_view to_string(IdentityName id);
std::optional<IdentityName> identity_from_string(std::string_view name);
const std::vector<IdentityName>& all_identities();

struct ParamPoint {
    int m = 0;
    int n = 0;
    int a = 0;

    friend bool operator==(const ParamPoint&, const ParamPoint&) = default;
};

/// Outcome of checking one identity at one parameter point. lhs/rhs hold the
/// rendered exact values; unused parameters stay 0.
struct VerificationReport {
    IdentityName identity = IdentityName::s1;
    ParamPoint point;
    std::string lhs;
    std::string rhs;
    bool pass = false;
};

/// Deliberate evaluator faults, used to test that the verifier and the
/// selftest suites actually detect failures.
///   New3Shift  adds 1 to every q-exponent in the new3 left side
///   ThetaTie   flips theta's tie rule to PreferMu
enum class Mutation { None, New3Shift, ThetaTie };

/// C(x, j) over arbitrary-precision integers. Requires x >= 0; zero when
/// j < 0 or j > x.
mpz_class binom(long x, long j);

// Sides of the q-binomial identities. new3: sum over 0 <= 2k <= n of
// [m+k,k]_{q^2} * [m+1,n-2k]_q * q^{C(n-2k,2)} against [m+n,n]_q.
// new4: sum over 0 <= 4k <= n of [m+k,k]_{q^4} * [m+1,n-4k]_q * q^{C(n-4k,2)}
// against the alternating sum of [m+k,k]_{q^2} * [m+n-2k,n-2k]_q.
IntPoly new3_lhs(int m, int n, Mutation mutation = Mutation::None);
IntPoly new3_rhs(int m, int n);
IntPoly new4_lhs(int m, int n);
IntPoly new4_rhs(int m, int n);

/// Partition-enumeration route. For new3 returns (sum over set_B of
/// q^{2|lambda|+|mu|}, sum over set_A of q^{|lambda|}); for new4 returns
/// (sum over set_T of q^{4|tau|+|mu|}, alternating sum over set_U of
/// q^{2|lambda|+|mu|}). Both components equal q^n times the corresponding
/// identity side.
std::pair<IntPoly, IntPoly> partition_side(IdentityName id, int m, int n);

/// Truncated-series route: both sides of qbione or qbitwo at the given
/// order.
std::pair<ZSeries, ZSeries> series_side(IdentityName id, int m, int order);

/// Exact rational evaluation of s1..s5, new1, new2. Constraints: s2 needs
/// n >= 1, s3 needs a >= 1, s5 needs a >= 0; violations throw
/// std::invalid_argument.
std::pair<mpq_class, mpq_class> classical(IdentityName id, const ParamPoint& point);

/// Both sides of spe1 or spe2 at n.
std::pair<IntPoly, IntPoly> special(IdentityName id, int n);

/// Both sides of gf_A or gf_D: the enumerated partition weight sum against
/// the closed q-binomial form.
std::pair<IntPoly, IntPoly> partition_gf(IdentityName id, int m, int n);

/// Inclusive sweep bounds. Negative fields mean "use the identity default".
struct SweepRanges {
    int m_max = -1;
    int n_max = -1;
    int a_max = -1;
    int order = -1;
};

SweepRanges default_ranges(IdentityName id);

/// One report per parameter point of the identity's grid, ordered by
/// (m, n, a). Mutation::New3Shift perturbs the new3 evaluator; other
/// identities ignore it.
std::vector<VerificationReport> verify_sweep(IdentityName id, SweepRanges ranges = {},
                                             Mutation mutation = Mutation::None);

}  // namespace qident
