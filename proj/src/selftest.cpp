#include <qident/selftest.hpp>

#include <qident/bijection.hpp>
#include <qident/partition.hpp>
#include <qident/qbinom.hpp>

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qident {

namespace {

constexpr const char* kSuiteNames[] = {
    "new3-identity",     "new4-identity",  "phi-bijective-route",
    "theta-involutive-route", "series-route",   "qbinomial-theorem",
    "classical-identities",   "special-cases",  "structural-properties",
    "cli-contract",
};

struct Check {
    bool ok = true;
    long cases = 0;
    std::string detail;
    std::string note;

    bool require(bool condition, const std::string& what) {
        ++cases;
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
        return condition;
    }
};

std::string at(int m, int n) {
    return "m=" + std::to_string(m) + " n=" + std::to_string(n);
}

IntPoly q_power(long exponent) { return IntPoly::monomial(1, exponent); }

void suite_new3(Check& ck, const SelftestOptions& opt) {
    const int m_max = opt.quick ? 2 : 6;
    const int n_max = opt.quick ? 4 : 12;
    for (int m = 0; m <= m_max; ++m)
        for (int n = 0; n <= n_max; ++n)
            ck.require(new3_lhs(m, n, opt.mutation) == new3_rhs(m, n),
                       "new3 sides differ at " + at(m, n));
}

void suite_new4(Check& ck, const SelftestOptions& opt) {
    const int m_max = opt.quick ? 2 : 6;
    const int n_max = opt.quick ? 4 : 12;
    for (int m = 0; m <= m_max; ++m)
        for (int n = 0; n <= n_max; ++n)
            ck.require(new4_lhs(m, n) == new4_rhs(m, n), "new4 sides differ at " + at(m, n));
}

void suite_phi(Check& ck, const SelftestOptions& opt) {
    const int m_max = opt.quick ? 2 : 5;
    const int n_max = opt.quick ? 4 : 10;
    for (int m = 0; m <= m_max; ++m)
        for (int n = 0; n <= n_max; ++n) {
            auto domain = set_A(m, n);
            std::vector<PartitionPair> images;
            images.reserve(domain.size());
            IntPoly domain_sum;
            for (const auto& lambda : domain) {
                PartitionPair pair = phi(lambda);
                ck.require(2 * pair.first.weight() + pair.second.weight() == lambda.weight(),
                           "phi changes the weight at " + at(m, n));
                ck.require(pair.first.largest() <= lambda.largest() &&
                               pair.second.largest() <= lambda.largest(),
                           "phi grows a part at " + at(m, n));
                ck.require(pair.second.is_distinct(),
                           "phi second component not distinct at " + at(m, n));
                ck.require(2 * pair.first.length() + pair.second.length() == n,
                           "phi breaks the length statistic at " + at(m, n));
                ck.require(phi_inverse(pair) == lambda,
                           "phi_inverse(phi) is not the identity at " + at(m, n));
                images.push_back(std::move(pair));
                domain_sum += q_power(lambda.weight());
            }
            std::sort(images.begin(), images.end());
            ck.require(std::adjacent_find(images.begin(), images.end()) == images.end(),
                       "phi is not injective at " + at(m, n));
            auto codomain = set_B(m, n);
            IntPoly codomain_sum;
            for (const auto& pair : codomain) {
                codomain_sum += q_power(2 * pair.first.weight() + pair.second.weight());
                ck.require(phi(phi_inverse(pair)) == pair,
                           "phi(phi_inverse) is not the identity at " + at(m, n));
            }
            std::sort(codomain.begin(), codomain.end());
            ck.require(images == codomain, "phi image misses the codomain at " + at(m, n));
            IntPoly closed = q_power(n) * gauss_binomial(m + n, n);
            ck.require(domain_sum == codomain_sum && codomain_sum == closed,
                       "weight sums disagree at " + at(m, n));
        }
}

void suite_theta(Check& ck, const SelftestOptions& opt) {
    const int m_max = opt.quick ? 2 : 4;
    const int n_max = opt.quick ? 4 : 8;
    const ThetaTieRule tie =
        opt.mutation == Mutation::ThetaTie ? ThetaTieRule::PreferMu : ThetaTieRule::PreferLambda;
    for (int m = 0; m <= m_max; ++m)
        for (int n = 0; n <= n_max; ++n) {
            IntPoly signed_sum;
            IntPoly fixed_sum;
            std::vector<PartitionPair> fixed;
            for (const auto& pair : set_U(m, n)) {
                const long w = 2 * pair.first.weight() + pair.second.weight();
                IntPoly term = q_power(w);
                if (pair.first.length() % 2 == 1) term = -term;
                signed_sum += term;
                if (is_in_V(pair)) {
                    fixed_sum += q_power(w);
                    fixed.push_back(pair);
                    continue;
                }
                auto [image, branch] = theta(pair, tie);
                ck.require(image != pair, "theta fixes a movable pair at " + at(m, n));
                bool stays_out =
                    ck.require(!is_in_V(image), "theta lands in the fixed set at " + at(m, n));
                ck.require(image.first.largest() <= m + 1 && image.second.largest() <= m + 1 &&
                               2 * image.first.length() + image.second.length() == n,
                           "theta leaves the family at " + at(m, n));
                ck.require(2 * image.first.weight() + image.second.weight() == w,
                           "theta changes the weight at " + at(m, n));
                ck.require(image.first.length() % 2 != pair.first.length() % 2,
                           "theta preserves the sign at " + at(m, n));
                if (stays_out)
                    ck.require(theta(image, tie).first == pair,
                               "theta is not an involution at " + at(m, n));
            }
            ck.require(signed_sum == fixed_sum,
                       "signed sum does not cancel to the fixed set at " + at(m, n));

            // halving the first component is a bijection onto the
            // quadruple-length family
            std::vector<PartitionPair> halved;
            halved.reserve(fixed.size());
            bool halvable = true;
            for (const auto& pair : fixed) {
                const auto runs = pair.first.multiplicities();
                halvable = halvable &&
                           std::all_of(runs.begin(), runs.end(),
                                       [](const auto& run) { return run.second % 2 == 0; });
                halved.push_back({halve(pair.first), pair.second});
            }
            ck.require(halvable, "fixed-set member with an odd multiplicity at " + at(m, n));
            std::sort(halved.begin(), halved.end());
            auto quad = set_T(m, n);
            std::sort(quad.begin(), quad.end());
            ck.require(halved == quad, "halving misses the quadruple family at " + at(m, n));
            IntPoly quad_sum;
            for (const auto& pair : quad)
                quad_sum += q_power(4 * pair.first.weight() + pair.second.weight());
            ck.require(fixed_sum == quad_sum, "halving changes the weight sum at " + at(m, n));
            ck.require(quad_sum == q_power(n) * new4_lhs(m, n),
                       "fixed-set sum misses the closed form at " + at(m, n));
        }
}

void suite_series(Check& ck, const SelftestOptions& opt) {
    const int m_max = opt.quick ? 2 : 6;
    const int order = opt.quick ? 4 : 12;
    for (int m = 0; m <= m_max; ++m) {
        auto [lhs1, rhs1] = series_side(IdentityName::qbione, m, order);
        ck.require(lhs1 == rhs1, "qbione series differ at m=" + std::to_string(m));
        auto [lhs2, rhs2] = series_side(IdentityName::qbitwo, m, order);
        ck.require(lhs2 == rhs2, "qbitwo series differ at m=" + std::to_string(m));
        for (int n = 0; n <= order; ++n) {
            ck.require(lhs1.coeff(n) == new3_lhs(m, n),
                       "qbione left coefficient misses new3 at " + at(m, n));
            ck.require(rhs1.coeff(n) == new3_rhs(m, n),
                       "qbione right coefficient misses new3 at " + at(m, n));
            ck.require(lhs2.coeff(n) == new4_lhs(m, n),
                       "qbitwo left coefficient misses new4 at " + at(m, n));
            ck.require(rhs2.coeff(n) == new4_rhs(m, n),
                       "qbitwo right coefficient misses new4 at " + at(m, n));
        }
    }
}

void suite_qbinomial_theorem(Check& ck, const SelftestOptions& opt) {
    const int m_max = opt.quick ? 2 : 6;
    const int k_max = opt.quick ? 4 : 12;
    for (int m = 0; m <= m_max; ++m) {
        ZSeries inv = ZSeries::pochhammer(PochSpec{1, 1, 1, m + 1}, k_max).inverse();
        ZSeries neg = ZSeries::pochhammer(PochSpec{-1, 1, 1, m + 1}, k_max);
        for (int k = 0; k <= k_max; ++k) {
            ck.require(inv.coeff(k) == gauss_binomial(m + k, k),
                       "reciprocal expansion coefficient differs at m=" + std::to_string(m) +
                           " k=" + std::to_string(k));
            ck.require(neg.coeff(k) == gauss_binomial(m + 1, k) * q_power(choose2(k)),
                       "finite expansion coefficient differs at m=" + std::to_string(m) +
                           " k=" + std::to_string(k));
        }
    }
}

void suite_classical(Check& ck, const SelftestOptions& opt) {
    const int n_long = opt.quick ? 4 : 20;
    const int n_short = opt.quick ? 4 : 12;
    const int a_max = opt.quick ? 2 : 4;
    const int m_max = opt.quick ? 2 : 6;
    ck.note = "s3 swept over a in [1," + std::to_string(a_max) +
              "]; its k=0 term divides by zero at a=0";

    auto agree = [&](IdentityName id, ParamPoint point, const std::string& label) {
        auto [lhs, rhs] = classical(id, point);
        ck.require(lhs == rhs, label);
    };
    for (int n = 0; n <= n_long; ++n) agree(IdentityName::s1, {.n = n}, "s1 fails at n=" + std::to_string(n));
    for (int n = 1; n <= n_long; ++n) agree(IdentityName::s2, {.n = n}, "s2 fails at n=" + std::to_string(n));
    for (int n = 0; n <= n_short; ++n)
        for (int a = 1; a <= a_max; ++a)
            agree(IdentityName::s3, {.n = n, .a = a},
                  "s3 fails at n=" + std::to_string(n) + " a=" + std::to_string(a));
    for (int n = 0; n <= n_short; ++n)
        agree(IdentityName::s4, {.n = n}, "s4 fails at n=" + std::to_string(n));
    for (int n = 0; n <= n_short; ++n)
        for (int a = 0; a <= a_max; ++a)
            agree(IdentityName::s5, {.n = n, .a = a},
                  "s5 fails at n=" + std::to_string(n) + " a=" + std::to_string(a));
    for (int m = 0; m <= m_max; ++m)
        for (int n = 0; n <= n_short; ++n) {
            agree(IdentityName::new1, {.m = m, .n = n}, "new1 fails at " + at(m, n));
            agree(IdentityName::new2, {.m = m, .n = n}, "new2 fails at " + at(m, n));
        }

    for (int n = 0; n <= n_short; ++n) {
        auto [s1l, s1r] = classical(IdentityName::s1, {.n = n});
        auto [s3l, s3r] = classical(IdentityName::s3, {.n = n, .a = 1});
        ck.require(s1l == s3l && s1r == s3r, "s1 is not s3 at a=1 for n=" + std::to_string(n));
    }
    for (int n = 1; n <= n_short; ++n) {
        auto [s2l, s2r] = classical(IdentityName::s2, {.n = n});
        auto [s3l, s3r] = classical(IdentityName::s3, {.n = n - 1, .a = 2});
        ck.require(s2l == 2 * s3l && s2r == 2 * s3r,
                   "s2 is not twice s3 at a=2 for n=" + std::to_string(n));
    }
    for (int n = 0; n <= n_short; ++n) {
        auto [s4l, s4r] = classical(IdentityName::s4, {.n = n});
        auto [s5l, s5r] = classical(IdentityName::s5, {.n = n, .a = 0});
        ck.require(s5l == (n + 1) * s4l && s5r == (n + 1) * s4r,
                   "s5 at a=0 is not (n+1) times s4 for n=" + std::to_string(n));
    }

    for (int m = 0; m <= m_max; ++m)
        for (int n = 0; n <= n_short; ++n) {
            auto [n1l, n1r] = classical(IdentityName::new1, {.m = m, .n = n});
            ck.require(n1l == new3_lhs(m, n).eval(1) && n1r == new3_rhs(m, n).eval(1),
                       "new3 at q=1 misses new1 at " + at(m, n));
            auto [n2l, n2r] = classical(IdentityName::new2, {.m = m, .n = n});
            ck.require(n2l == new4_lhs(m, n).eval(1) && n2r == new4_rhs(m, n).eval(1),
                       "new4 at q=1 misses new2 at " + at(m, n));
        }
}

void suite_special(Check& ck, const SelftestOptions& opt) {
    const int n_max = opt.quick ? 4 : 10;
    const int n_reduce = opt.quick ? 4 : 15;
    for (int n = 0; n <= n_max; ++n) {
        auto [l1, r1] = special(IdentityName::spe1, n);
        ck.require(l1 == r1, "spe1 sides differ at n=" + std::to_string(n));
        auto [l2, r2] = special(IdentityName::spe2, n);
        ck.require(l2 == r2, "spe2 sides differ at n=" + std::to_string(n));
    }
    for (int n = 1; n <= n_reduce; ++n) {
        auto [l1, r1] = special(IdentityName::spe1, n);
        auto s1v = classical(IdentityName::s1, {.n = n}).second;
        ck.require((n + 1) * s1v == l1.eval(1),
                   "spe1 at q=1 misses (n+1) times the s1 value at n=" + std::to_string(n));
        auto [l2, r2] = special(IdentityName::spe2, n);
        auto s2v = classical(IdentityName::s2, {.n = n}).second;
        ck.require(n * s2v == l2.eval(1),
                   "spe2 at q=1 misses n times the s2 value at n=" + std::to_string(n));
    }
}

IntPoly random_poly(std::mt19937& gen, int max_degree, long coeff_bound) {
    std::uniform_int_distribution<int> degree_dist(-1, max_degree);
    const int degree = degree_dist(gen);
    if (degree < 0) return IntPoly{};
    std::uniform_int_distribution<long> coeff_dist(-coeff_bound, coeff_bound);
    std::vector<IntPoly::Int> coeffs(static_cast<size_t>(degree) + 1);
    for (auto& c : coeffs) c = coeff_dist(gen);
    while (coeffs.back() == 0) coeffs.back() = coeff_dist(gen);
    return IntPoly(std::move(coeffs));
}

void suite_structural(Check& ck, const SelftestOptions& opt) {
    std::mt19937 gen(0xACCE55);
    const long triples = opt.quick ? 200 : 1000;
    const int max_degree = opt.quick ? 20 : 50;
    const IntPoly zero;
    const IntPoly one = IntPoly::constant(1);
    for (long trial = 0; trial < triples; ++trial) {
        IntPoly a = random_poly(gen, max_degree, 1000000);
        IntPoly b = random_poly(gen, max_degree, 1000000);
        IntPoly c = random_poly(gen, max_degree, 1000000);
        const std::string where = " in trial " + std::to_string(trial);
        ck.require((a + b) + c == a + (b + c), "addition is not associative" + where);
        ck.require(a + b == b + a, "addition is not commutative" + where);
        ck.require((a * b) * c == a * (b * c), "multiplication is not associative" + where);
        ck.require(a * b == b * a, "multiplication is not commutative" + where);
        ck.require(a * (b + c) == a * b + a * c, "distributivity fails" + where);
        ck.require(a + zero == a && a * one == a && a - a == zero,
                   "identity laws fail" + where);
        auto normalized = [](const IntPoly& p) {
            return p.coeffs().empty() || p.coeffs().back() != 0;
        };
        ck.require(normalized(a * b) && normalized(a + b) && normalized(a - b),
                   "normalization broken" + where);
        for (long v = -2; v <= 2; ++v)
            ck.require((a * b).eval(v) == a.eval(v) * b.eval(v) &&
                           (a + b).eval(v) == a.eval(v) + b.eval(v),
                       "evaluation is not a homomorphism" + where);
    }

    const int qb_max = opt.quick ? 12 : 30;
    for (int n = 1; n <= qb_max; ++n)
        for (int k = 0; k <= n; ++k) {
            IntPoly expected = gauss_binomial(n - 1, k) +
                               q_power(n - k) * gauss_binomial(n - 1, k - 1);
            ck.require(gauss_binomial(n, k) == expected,
                       "pascal recurrence fails at n=" + std::to_string(n) +
                           " k=" + std::to_string(k));
            ck.require(gauss_binomial(n, k) == gauss_binomial(n, n - k),
                       "symmetry fails at n=" + std::to_string(n) + " k=" + std::to_string(k));
            ck.require(gauss_binomial(n, k).eval(1) == binom(n, k),
                       "q=1 specialization fails at n=" + std::to_string(n) +
                           " k=" + std::to_string(k));
        }

    const int inversions = opt.quick ? 8 : 25;
    for (int trial = 0; trial < inversions; ++trial) {
        const int order = 1 + static_cast<int>(gen() % (opt.quick ? 10 : 20));
        ZSeries a(order);
        a.set_coeff(0, IntPoly::constant(1));
        for (int i = 1; i <= order; ++i) a.set_coeff(i, random_poly(gen, 10, 1000));
        ck.require(a * a.inverse() == ZSeries::one(order),
                   "series inverse fails in trial " + std::to_string(trial));
    }

    const int enum_m = opt.quick ? 2 : 4;
    const int enum_n = opt.quick ? 4 : 8;
    for (int max_part = 0; max_part <= enum_m + 1; ++max_part)
        for (int length = 0; length <= enum_n; ++length) {
            std::set<Partition> seen;
            long count = 0;
            for (const Partition& p : BoundedPartitions(max_part, length)) {
                ++count;
                ck.require(p.length() == length && p.largest() <= max_part,
                           "bounded enumeration emits an invalid partition");
                ck.require(seen.insert(p).second, "bounded enumeration repeats a partition");
            }
            const mpz_class expected_count =
                max_part == 0 ? mpz_class(length == 0 ? 1 : 0)
                              : binom(max_part + length - 1, length);
            ck.require(mpz_class(count) == expected_count, "bounded enumeration count is off");
            std::set<Partition> seen_distinct;
            for (const Partition& p : DistinctBoundedPartitions(max_part, length)) {
                ck.require(p.is_distinct() && p.length() == length && p.largest() <= max_part,
                           "distinct enumeration emits an invalid partition");
                ck.require(seen_distinct.insert(p).second,
                           "distinct enumeration repeats a partition");
            }
        }
}

struct CliRun {
    int exit_code = -1;
    std::string out;
};

CliRun run_cli(const std::string& cli_path, const std::string& args) {
    std::string command = "'" + cli_path + "' " + args + " 2>/dev/null";
    CliRun result;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return result;
    char buffer[4096];
    size_t got = 0;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) result.out.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

void suite_cli(Check& ck, const SelftestOptions& opt) {
    if (opt.cli_path.empty()) {
        ck.note = "no cli path provided; contract not exercised";
        return;
    }
    const std::string& cli = opt.cli_path;

    auto expect = [&](const std::string& args, int exit_code, const std::string& bytes,
                      const std::string& label) {
        CliRun run = run_cli(cli, args);
        ck.require(run.exit_code == exit_code,
                   label + ": exit " + std::to_string(run.exit_code) + " wanted " +
                       std::to_string(exit_code));
        if (!bytes.empty())
            ck.require(run.out == bytes, label + ": output differs");
    };

    expect("expand --qbinom 4 2", 0, "1 + q + 2*q^2 + q^3 + q^4\n", "expand qbinom");
    expect("expand --qbinom 3 -1", 0, "0\n", "expand vanishing qbinom");
    expect("trace --map phi --input '[7,5,5,4,4,4,4,2,2,2,1]'", 0, "([5,4,4,2],[7,2,1])\n",
           "trace phi");
    expect("trace --map theta --input '([5,5,4,4,4,3,3,3,1,1],[5,3,2,2,1])'", 0,
           "([5,5,4,4,3,3,3,1,1],[5,4,4,3,2,2,1]) branch=REMOVE_FROM_LAMBDA pivot=4\n",
           "trace theta");
    expect("census --set A --m 1 --n 2", 0, "count=3\nweight=q^2 + q^3 + q^4\n", "census");
    expect("verify --identity new3 --m-max 1 --n-max 2", 0, "", "verify passing");
    expect("verify --identity new3 --m-max 1 --n-max 2 --mutate new3-shift", 1, "",
           "verify failing under mutation");
    expect("verify --identity nosuch", 2, "", "verify unknown identity");
    expect("verify --identity s2 --n-max 0", 2, "", "verify constraint violation");
    expect("trace --map theta --input '([2,2],[3,1])'", 2, "", "trace on the fixed set");

    if (opt.mutation == Mutation::None) {
        CliRun broken = run_cli(cli, "selftest --quick --mutate theta-tie");
        ck.require(broken.exit_code == 1,
                   "mutated selftest: exit " + std::to_string(broken.exit_code) + " wanted 1");
        ck.require(broken.out.find("theta-involutive-route") != std::string::npos &&
                       broken.out.find("FAIL") != std::string::npos,
                   "mutated selftest does not name the failing suite");
    }
}

}  // namespace

SuiteResult run_suite(int criterion, const SelftestOptions& options) {
    SuiteResult result;
    result.criterion = criterion;
    if (criterion < 1 || criterion > 10)
        throw std::invalid_argument("run_suite: criterion must be in 1..10");
    result.name = kSuiteNames[criterion - 1];

    Check ck;
    const auto start = std::chrono::steady_clock::now();
    try {
        switch (criterion) {
            case 1: suite_new3(ck, options); break;
            case 2: suite_new4(ck, options); break;
            case 3: suite_phi(ck, options); break;
            case 4: suite_theta(ck, options); break;
            case 5: suite_series(ck, options); break;
            case 6: suite_qbinomial_theorem(ck, options); break;
            case 7: suite_classical(ck, options); break;
            case 8: suite_special(ck, options); break;
            case 9: suite_structural(ck, options); break;
            case 10: suite_cli(ck, options); break;
        }
    } catch (const std::exception& error) {
        ck.ok = false;
        if (ck.detail.empty()) ck.detail = std::string("unexpected exception: ") + error.what();
    }
    const auto stop = std::chrono::steady_clock::now();

    result.pass = ck.ok;
    result.cases = ck.cases;
    result.detail = ck.detail;
    result.note = ck.note;
    result.seconds = std::chrono::duration<double>(stop - start).count();
    return result;
}

std::vector<SuiteResult> run_all_suites(const SelftestOptions& options) {
    std::vector<SuiteResult> results;
    results.reserve(10);
    for (int criterion = 1; criterion <= 10; ++criterion)
        results.push_back(run_suite(criterion, options));
    return results;
}

std::string format_suite_line(const SuiteResult& result) {
    std::ostringstream line;
    line << (result.pass ? "[PASS]" : "[FAIL]") << " criterion " << result.criterion << " "
         << result.name << " cases=" << result.cases;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << " time=" << result.seconds << "s";
    if (!result.pass && !result.detail.empty()) line << " detail: " << result.detail;
    if (!result.note.empty()) line << " (note: " << result.note << ")";
    return line.str();
}

}  // namespace qident
