#include <qident/identities.hpp>

#include <qident/partition.hpp>
#include <qident/qbinom.hpp>

#include <stdexcept>
#include <utility>

namespace qident {

namespace {

constexpr std::string_view kNames[] = {
    "s1", "s2", "s3", "s4", "s5", "new1", "new2", "new3",
    "new4", "spe1", "spe2", "gf_A", "gf_D", "qbione", "qbitwo",
};

IntPoly q_power(long exponent) { return IntPoly::monomial(1, exponent); }

mpq_class frac(const mpz_class& num, const mpz_class& den) {
    mpq_class value(num, den);
    value.canonicalize();
    return value;
}

}  // namespace

std::string_view to_string(IdentityName id) {
    return kNames[static_cast<size_t>(id)];
}

std::optional<IdentityName> identity_from_string(std::string_view name) {
    for (size_t i = 0; i < std::size(kNames); ++i)
        if (kNames[i] == name) return static_cast<IdentityName>(i);
    return std::nullopt;
}

const std::vector<IdentityName>& all_identities() {
    static const std::vector<IdentityName> ids = [] {
        std::vector<IdentityName> out;
        for (size_t i = 0; i < std::size(kNames); ++i)
            out.push_back(static_cast<IdentityName>(i));
        return out;
    }();
    return ids;
}

mpz_class binom(long x, long j) {
    if (x < 0) throw std::invalid_argument("binom: upper argument must be >= 0");
    if (j < 0 || j > x) return 0;
    mpz_class result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(x),
                 static_cast<unsigned long>(j));
    return result;
}

IntPoly new3_lhs(int m, int n, Mutation mutation) {
    const long shift = mutation == Mutation::New3Shift ? 1 : 0;
    IntPoly sum;
    for (int k = 0; 2 * k <= n; ++k)
        sum += gauss_binomial_dilated(m + k, k, 2) * gauss_binomial(m + 1, n - 2 * k) *
               q_power(choose2(n - 2 * k) + shift);
    return sum;
}

IntPoly new3_rhs(int m, int n) { return gauss_binomial(m + n, n); }

IntPoly new4_lhs(int m, int n) {
    IntPoly sum;
    for (int k = 0; 4 * k <= n; ++k)
        sum += gauss_binomial_dilated(m + k, k, 4) * gauss_binomial(m + 1, n - 4 * k) *
               q_power(choose2(n - 4 * k));
    return sum;
}

IntPoly new4_rhs(int m, int n) {
    IntPoly sum;
    for (int k = 0; 2 * k <= n; ++k) {
        IntPoly term =
            gauss_binomial_dilated(m + k, k, 2) * gauss_binomial(m + n - 2 * k, n - 2 * k);
        if (k % 2 == 1) term = -term;
        sum += term;
    }
    return sum;
}

std::pair<IntPoly, IntPoly> partition_side(IdentityName id, int m, int n) {
    if (id == IdentityName::new3) {
        IntPoly over_b;
        for (const auto& pair : set_B(m, n))
            over_b += q_power(2 * pair.first.weight() + pair.second.weight());
        IntPoly over_a;
        for (const auto& lambda : set_A(m, n)) over_a += q_power(lambda.weight());
        return {std::move(over_b), std::move(over_a)};
    }
    if (id == IdentityName::new4) {
        IntPoly over_t;
        for (const auto& pair : set_T(m, n))
            over_t += q_power(4 * pair.first.weight() + pair.second.weight());
        IntPoly over_u;
        for (const auto& pair : set_U(m, n)) {
            IntPoly term = q_power(2 * pair.first.weight() + pair.second.weight());
            if (pair.first.length() % 2 == 1) term = -term;
            over_u += term;
        }
        return {std::move(over_t), std::move(over_u)};
    }
    throw std::invalid_argument("partition_side: only new3 and new4 have a partition route");
}

std::pair<ZSeries, ZSeries> series_side(IdentityName id, int m, int order) {
    const int count = m + 1;
    auto poch = [&](int sign, int zpow, int dilation) {
        return ZSeries::pochhammer(PochSpec{sign, zpow, dilation, count}, order);
    };
    if (id == IdentityName::qbione) {
        ZSeries lhs = poch(1, 2, 2).inverse() * poch(-1, 1, 1);
        ZSeries rhs = poch(1, 1, 1).inverse();
        return {std::move(lhs), std::move(rhs)};
    }
    if (id == IdentityName::qbitwo) {
        ZSeries lhs = poch(1, 4, 4).inverse() * poch(-1, 1, 1);
        ZSeries rhs = poch(1, 1, 1).inverse() * poch(-1, 2, 2).inverse();
        return {std::move(lhs), std::move(rhs)};
    }
    throw std::invalid_argument("series_side: only qbione and qbitwo have a series route");
}

std::pair<mpq_class, mpq_class> classical(IdentityName id, const ParamPoint& point) {
    const long m = point.m;
    const long n = point.n;
    const long a = point.a;
    switch (id) {
        case IdentityName::s1: {
            mpq_class lhs = 0;
            for (long k = 0; 2 * k <= n; ++k)
                lhs += frac(binom(3 * k, k) * binom(n + k, 3 * k), 2 * k + 1);
            return {lhs, frac(binom(2 * n, n), n + 1)};
        }
        case IdentityName::s2: {
            if (n < 1) throw std::invalid_argument("s2 requires n >= 1");
            mpq_class lhs = 0;
            for (long k = 0; 2 * k <= n - 1; ++k)
                lhs += frac(binom(3 * k + 1, k + 1) * binom(n + k, 3 * k + 1), 2 * k + 1);
            return {lhs, frac(binom(2 * n, n), n + 1)};
        }
        case IdentityName::s3: {
            if (a < 1) throw std::invalid_argument("s3 requires a >= 1");
            mpq_class lhs = 0;
            for (long k = 0; 2 * k <= n; ++k)
                lhs += frac(binom(3 * k + a, k) * binom(n + a + k - 1, n - 2 * k), 3 * k + a);
            return {lhs, frac(binom(2 * n + a, n), 2 * n + a)};
        }
        case IdentityName::s4: {
            mpq_class lhs = 0;
            for (long k = 0; 4 * k <= n; ++k)
                lhs += frac(binom(5 * k, k) * binom(n + k, 5 * k), 4 * k + 1);
            mpq_class rhs = 0;
            for (long k = 0; 2 * k <= n; ++k) {
                mpq_class term = frac(binom(n + k, k) * binom(2 * n - 2 * k, n), n + 1);
                rhs += (k % 2 == 0) ? term : -term;
            }
            return {lhs, rhs};
        }
        case IdentityName::s5: {
            if (a < 0) throw std::invalid_argument("s5 requires a >= 0");
            mpq_class lhs = 0;
            for (long k = 0; 4 * k <= n; ++k)
                lhs += frac((n + a + 1) * binom(5 * k + a, k) * binom(n + a + k, 5 * k + a),
                            4 * k + a + 1);
            mpq_class rhs = 0;
            for (long k = 0; 2 * k <= n; ++k) {
                mpq_class term = binom(n + a + k, k) * binom(2 * n + a - 2 * k, n + a);
                rhs += (k % 2 == 0) ? term : -term;
            }
            return {lhs, rhs};
        }
        case IdentityName::new1: {
            mpq_class lhs = 0;
            for (long k = 0; 2 * k <= n; ++k)
                lhs += binom(m + k, k) * binom(m + 1, n - 2 * k);
            return {lhs, mpq_class(binom(m + n, n))};
        }
        case IdentityName::new2: {
            mpq_class lhs = 0;
            for (long k = 0; 4 * k <= n; ++k)
                lhs += binom(m + k, k) * binom(m + 1, n - 4 * k);
            mpq_class rhs = 0;
            for (long k = 0; 2 * k <= n; ++k) {
                mpq_class term = binom(m + k, k) * binom(m + n - 2 * k, m);
                rhs += (k % 2 == 0) ? term : -term;
            }
            return {lhs, rhs};
        }
        default:
            throw std::invalid_argument("classical: identity is not a rational sum");
    }
}

std::pair<IntPoly, IntPoly> special(IdentityName id, int n) {
    if (id == IdentityName::spe1) {
        IntPoly lhs;
        for (int k = 0; 2 * k <= n; ++k)
            lhs += gauss_binomial_dilated(n + k, k, 2) * gauss_binomial(n + 1, 2 * k + 1) *
                   q_power(choose2(n - 2 * k));
        return {std::move(lhs), gauss_binomial(2 * n, n)};
    }
    if (id == IdentityName::spe2) {
        IntPoly lhs;
        for (int k = 0; 2 * k <= n; ++k) {
            IntPoly left = gauss_binomial_dilated(n + k, k + 1, 2);
            IntPoly right = gauss_binomial(n, 2 * k + 1);
            // a vanishing factor kills the term before the exponent forms
            if (left.is_zero() || right.is_zero()) continue;
            lhs += left * right * q_power(choose2(n - 2 * k - 1));
        }
        return {std::move(lhs), gauss_binomial(2 * n, n - 1)};
    }
    throw std::invalid_argument("special: only spe1 and spe2 are central cases");
}

std::pair<IntPoly, IntPoly> partition_gf(IdentityName id, int m, int n) {
    if (id == IdentityName::gf_A) {
        IntPoly lhs;
        for (const Partition& p : BoundedPartitions(m + 1, n))
            lhs += q_power(p.weight());
        return {std::move(lhs), q_power(n) * gauss_binomial(m + n, n)};
    }
    if (id == IdentityName::gf_D) {
        IntPoly lhs;
        for (const Partition& p : DistinctBoundedPartitions(m + 1, n))
            lhs += q_power(p.weight());
        return {std::move(lhs), gauss_binomial(m + 1, n) * q_power(choose2(n + 1))};
    }
    throw std::invalid_argument("partition_gf: only gf_A and gf_D are generating functions");
}

SweepRanges default_ranges(IdentityName id) {
    switch (id) {
        case IdentityName::s1:
        case IdentityName::s2:
            return {.n_max = 20};
        case IdentityName::s3:
            return {.n_max = 12, .a_max = 4};
        case IdentityName::s4:
            return {.n_max = 12};
        case IdentityName::s5:
            return {.n_max = 12, .a_max = 4};
        case IdentityName::new1:
        case IdentityName::new2:
        case IdentityName::new3:
        case IdentityName::new4:
            return {.m_max = 6, .n_max = 12};
        case IdentityName::spe1:
        case IdentityName::spe2:
            return {.n_max = 10};
        case IdentityName::gf_A:
            return {.m_max = 6, .n_max = 10};
        case IdentityName::gf_D:
            return {.m_max = 6, .n_max = 7};
        case IdentityName::qbione:
        case IdentityName::qbitwo:
            return {.m_max = 6, .order = 12};
    }
    throw std::invalid_argument("default_ranges: unknown identity");
}

std::vector<VerificationReport> verify_sweep(IdentityName id, SweepRanges ranges,
                                             Mutation mutation) {
    SweepRanges r = default_ranges(id);
    if (ranges.m_max >= 0) r.m_max = ranges.m_max;
    if (ranges.n_max >= 0) r.n_max = ranges.n_max;
    if (ranges.a_max >= 0) r.a_max = ranges.a_max;
    if (ranges.order >= 0) r.order = ranges.order;

    std::vector<VerificationReport> out;
    auto add = [&](ParamPoint point, std::string lhs, std::string rhs) {
        bool pass = lhs == rhs;
        out.push_back({id, point, std::move(lhs), std::move(rhs), pass});
    };

    switch (id) {
        case IdentityName::new3:
            for (int m = 0; m <= r.m_max; ++m)
                for (int n = 0; n <= r.n_max; ++n)
                    add({m, n, 0}, new3_lhs(m, n, mutation).str(), new3_rhs(m, n).str());
            break;
        case IdentityName::new4:
            for (int m = 0; m <= r.m_max; ++m)
                for (int n = 0; n <= r.n_max; ++n)
                    add({m, n, 0}, new4_lhs(m, n).str(), new4_rhs(m, n).str());
            break;
        case IdentityName::spe1:
        case IdentityName::spe2:
            for (int n = 0; n <= r.n_max; ++n) {
                auto [lhs, rhs] = special(id, n);
                add({0, n, 0}, lhs.str(), rhs.str());
            }
            break;
        case IdentityName::gf_A:
        case IdentityName::gf_D:
            for (int m = 0; m <= r.m_max; ++m)
                for (int n = 0; n <= r.n_max; ++n) {
                    auto [lhs, rhs] = partition_gf(id, m, n);
                    add({m, n, 0}, lhs.str(), rhs.str());
                }
            break;
        case IdentityName::qbione:
        case IdentityName::qbitwo:
            for (int m = 0; m <= r.m_max; ++m) {
                auto [lhs, rhs] = series_side(id, m, r.order);
                out.push_back({id, {m, 0, 0}, lhs.str("; "), rhs.str("; "), lhs == rhs});
            }
            break;
        case IdentityName::s1:
        case IdentityName::s4:
            for (int n = 0; n <= r.n_max; ++n) {
                auto [lhs, rhs] = classical(id, {.n = n});
                add({0, n, 0}, lhs.get_str(), rhs.get_str());
            }
            break;
        case IdentityName::s2:
            if (r.n_max < 1) throw std::invalid_argument("s2 requires n >= 1");
            for (int n = 1; n <= r.n_max; ++n) {
                auto [lhs, rhs] = classical(id, {.n = n});
                add({0, n, 0}, lhs.get_str(), rhs.get_str());
            }
            break;
        case IdentityName::s3:
            if (r.a_max < 1) throw std::invalid_argument("s3 requires a >= 1");
            for (int n = 0; n <= r.n_max; ++n)
                for (int a = 1; a <= r.a_max; ++a) {
                    auto [lhs, rhs] = classical(id, {.n = n, .a = a});
                    add({0, n, a}, lhs.get_str(), rhs.get_str());
                }
            break;
        case IdentityName::s5:
            for (int n = 0; n <= r.n_max; ++n)
                for (int a = 0; a <= r.a_max; ++a) {
                    auto [lhs, rhs] = classical(id, {.n = n, .a = a});
                    add({0, n, a}, lhs.get_str(), rhs.get_str());
                }
            break;
        case IdentityName::new1:
        case IdentityName::new2:
            for (int m = 0; m <= r.m_max; ++m)
                for (int n = 0; n <= r.n_max; ++n) {
                    auto [lhs, rhs] = classical(id, {.m = m, .n = n});
                    add({m, n, 0}, lhs.get_str(), rhs.get_str());
                }
            break;
    }
    return out;
}

}  // namespace qident
