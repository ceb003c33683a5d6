#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "lrlab/characters.hpp"
#include "lrlab/modforms.hpp"
#include "lrlab/multfn.hpp"
#include "oracles.hpp"

using namespace lrlab;

namespace {

const PrimeTable& primes() {
    static const PrimeTable t = sieve_primes(2'000'000);
    return t;
}

constexpr std::array<CaseTag, 7> kCounted{CaseTag::q2, CaseTag::q3, CaseTag::q5, CaseTag::q7,
                                          CaseTag::q23, CaseTag::q691, CaseTag::two_squares};

// Lambda_f(n) for all n <= N from f(n) log n = sum_{d | n} f(d) Lambda_f(n/d).
std::vector<double> lambda_by_divisor_recursion(const CaseSpec& spec, std::uint32_t N) {
    std::vector<int> f(N + 1);
    for (std::uint32_t n = 1; n <= N; ++n) f[n] = f_value(spec, n);
    std::vector<double> lam(N + 1, 0.0);
    for (std::uint32_t n = 2; n <= N; ++n) lam[n] = f[n] ? std::log(static_cast<double>(n)) : 0.0;
    for (std::uint32_t m = 2; m <= N; ++m) {
        if (lam[m] == 0.0) continue;
        for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * m <= N; ++d)
            if (f[d]) lam[d * m] -= lam[m];
    }
    return lam;
}

} // namespace

TEST(CaseSpec, DensitiesAndClaimedExponents) {
    EXPECT_EQ(case_spec(CaseTag::q5).delta, (Rational{1, 4}));
    EXPECT_EQ(case_spec(CaseTag::q7).delta, (Rational{1, 2}));
    EXPECT_EQ(case_spec(CaseTag::q3).delta, (Rational{1, 2}));
    EXPECT_EQ(case_spec(CaseTag::q691).delta, (Rational{1, 690}));
    EXPECT_EQ(case_spec(CaseTag::q23).delta, (Rational{1, 2}));
    EXPECT_EQ(case_spec(CaseTag::two_squares).delta, (Rational{1, 2}));
    for (CaseTag t : kAllCases) {
        const CaseSpec s = case_spec(t);
        EXPECT_EQ(s.tau.num * s.delta.den + s.delta.num * s.tau.den, s.tau.den * s.delta.den) << s.name();
    }
    EXPECT_EQ(parse_case("q691"), CaseTag::q691);
    EXPECT_THROW(parse_case("q11"), InvalidArgument);
}

TEST(FValue, Examples) {
    EXPECT_EQ(f_value(case_spec(CaseTag::q5), 2), 1);
    EXPECT_EQ(f_value(case_spec(CaseTag::q5), 5), 0);
    EXPECT_EQ(f_value(case_spec(CaseTag::q691), 1381), 0);
    EXPECT_EQ(f_value(case_spec(CaseTag::two_squares), 3), 0);
    EXPECT_EQ(f_value(case_spec(CaseTag::q3), 1), 1);
    EXPECT_THROW(f_value(case_spec(CaseTag::q3), 0), InvalidArgument);
}

TEST(FValue, ExponentRules) {
    const auto allows = [](CaseTag t, std::uint64_t p, std::uint64_t k) { return f_prime_power(case_spec(t), p, k); };
    // q3
    EXPECT_FALSE(allows(CaseTag::q3, 7, 2));
    EXPECT_TRUE(allows(CaseTag::q3, 7, 3));
    EXPECT_FALSE(allows(CaseTag::q3, 2, 1));
    EXPECT_TRUE(allows(CaseTag::q3, 2, 2));
    EXPECT_FALSE(allows(CaseTag::q3, 3, 1));
    // q5
    EXPECT_FALSE(allows(CaseTag::q5, 11, 4));
    EXPECT_TRUE(allows(CaseTag::q5, 11, 5));
    EXPECT_FALSE(allows(CaseTag::q5, 2, 3));
    EXPECT_TRUE(allows(CaseTag::q5, 2, 4));
    EXPECT_FALSE(allows(CaseTag::q5, 19, 1));
    // q7
    EXPECT_FALSE(allows(CaseTag::q7, 2, 6));
    EXPECT_FALSE(allows(CaseTag::q7, 3, 1));
    EXPECT_FALSE(allows(CaseTag::q7, 7, 2));
    // q23
    EXPECT_FALSE(allows(CaseTag::q23, 5, 1));  // S1
    EXPECT_FALSE(allows(CaseTag::q23, 2, 2));  // S2
    EXPECT_TRUE(allows(CaseTag::q23, 2, 3));
    EXPECT_FALSE(allows(CaseTag::q23, 59, 22)); // S3
    EXPECT_TRUE(allows(CaseTag::q23, 23, 5));
    // q691
    EXPECT_FALSE(allows(CaseTag::q691, 1381, 1));
    EXPECT_TRUE(allows(CaseTag::q691, 3, 688));
    EXPECT_FALSE(allows(CaseTag::q691, 3, 689));
    EXPECT_TRUE(allows(CaseTag::q691, 691, 7));
    EXPECT_FALSE(allows(CaseTag::q691, 6911, 690)); // p = 1 (mod 691): 691 | k + 1
    EXPECT_TRUE(allows(CaseTag::q691, 6911, 689));
    // two squares
    EXPECT_TRUE(allows(CaseTag::two_squares, 2, 3));
    EXPECT_FALSE(allows(CaseTag::two_squares, 3, 3));
}

TEST(FValue, AgreesWithExactTau) {
    const std::uint32_t N = 20'000;
    const TauWindow tau = tau_exact(N);
    for (CaseTag tag : {CaseTag::q2, CaseTag::q3, CaseTag::q5, CaseTag::q7, CaseTag::q23, CaseTag::q691}) {
        const CaseSpec spec = case_spec(tag);
        const std::uint32_t q = tag == CaseTag::q2 ? 2 : tag == CaseTag::q3 ? 3 : tag == CaseTag::q5 ? 5
                                : tag == CaseTag::q7 ? 7 : tag == CaseTag::q23 ? 23 : 691;
        for (std::uint32_t n = 1; n <= N; ++n)
            ASSERT_EQ(f_value(spec, n) == 1, tau.mod(n, q) != 0) << spec.name() << " n=" << n;
    }
}

TEST(FValue, TwoSquaresBruteForce) {
    const CaseSpec spec = case_spec(CaseTag::two_squares);
    for (std::uint32_t n = 1; n <= 20'000; ++n) {
        bool rep = false;
        for (std::uint32_t u = 0; u * u <= n && !rep; ++u) rep = is_square(n - u * u);
        ASSERT_EQ(f_value(spec, n) == 1, rep) << n;
    }
}

TEST(FIndicator, MatchesFValue) {
    for (CaseTag tag : kCounted) {
        const CaseSpec spec = case_spec(tag);
        const auto alive = f_indicator(spec, 30'000, primes());
        for (std::uint32_t n = 1; n <= 30'000; ++n) ASSERT_EQ(alive[n], f_value(spec, n)) << spec.name() << " " << n;
    }
}

TEST(LambdaF, Examples) {
    EXPECT_DOUBLE_EQ(lambda_f_prime_power(case_spec(CaseTag::ones), 2, 3), std::log(2.0));
    EXPECT_NEAR(lambda_f_prime_power(case_spec(CaseTag::q5), 11, 4), -3 * std::log(11.0), 1e-12);
    EXPECT_EQ(lambda_f_prime_power(case_spec(CaseTag::q3), 2, 1), 0.0);
    EXPECT_NEAR(lambda_f_prime_power(case_spec(CaseTag::q3), 2, 2), 2 * std::log(2.0), 1e-12);
    EXPECT_THROW(lambda_f_prime_power(case_spec(CaseTag::q3), 2, 0), InvalidArgument);
}

TEST(LambdaF, RecursionMatchesClosedForm) {
    for (CaseTag tag : kAllCases) {
        const CaseSpec spec = case_spec(tag);
        for (std::uint64_t p : {2, 3, 5, 7, 11, 23, 59, 691, 1381, 6911}) {
            const ExponentPeriod rule = exponent_period(spec, p);
            for (std::uint32_t k = 1; k <= 50; ++k)
                ASSERT_NEAR(lambda_f_prime_power(spec, p, k), lambda_closed_form(rule, p, k), 1e-9 * k)
                    << spec.name() << " p=" << p << " k=" << k;
        }
    }
}

TEST(LambdaF, DivisorRecursionOracle) {
    for (CaseTag tag : kAllCases) {
        const CaseSpec spec = case_spec(tag);
        const auto lam = lambda_by_divisor_recursion(spec, 5000);
        const LambdaTable table = lambda_table(spec, 5000, primes());
        std::vector<double> from_table(5001, 0.0);
        for (const auto& e : table.entries) from_table[e.prime_power] = e.lambda;
        for (std::uint32_t n = 2; n <= 5000; ++n) ASSERT_NEAR(lam[n], from_table[n], 1e-9) << spec.name() << " " << n;
    }
}

TEST(LambdaF, OnesIsVonMangoldt) {
    const CaseSpec spec = case_spec(CaseTag::ones);
    const LambdaTable table = lambda_table(spec, 10'000, primes());
    std::vector<double> lam(10'001, 0.0);
    for (const auto& e : table.entries) lam[e.prime_power] = e.lambda;
    for (std::uint32_t n = 2; n <= 10'000; ++n) {
        double expect = 0.0;
        for (std::uint32_t p = 2; p <= n; ++p) {
            if (n % p) continue;
            std::uint32_t m = n;
            while (m % p == 0) m /= p;
            if (m == 1) expect = std::log(static_cast<double>(p));
            break;
        }
        ASSERT_DOUBLE_EQ(lam[n], expect) << n;
    }
}

TEST(HF, PublishedCheckpoints) {
    EXPECT_NEAR(h_f(case_spec(CaseTag::q5), 1e5, primes()).value, -0.401, 0.0005 + 0.0006);
    EXPECT_NEAR(h_f(case_spec(CaseTag::two_squares), 1e5, primes()).value, 0.163, 0.0005 + 0.0002);
    EXPECT_NEAR(h_f(case_spec(CaseTag::q7), 1e6, primes()).value, -0.232, 0.0005);
}

TEST(HF, OnesApproachesMinusGamma) {
    const double h = h_f(case_spec(CaseTag::ones), 2e6, primes()).value;
    EXPECT_NEAR(h, -0.5772156649, 2e-3);
}

TEST(HF, Errors) {
    EXPECT_THROW(h_f(case_spec(CaseTag::q5), 1.5, primes()), InvalidArgument);
    EXPECT_THROW(h_f(case_spec(CaseTag::q5), 3e6, primes()), ResourceError);
}

TEST(HF, MatchesDivisorRecursionSum) {
    for (CaseTag tag : kAllCases) {
        const CaseSpec spec = case_spec(tag);
        const auto lam = lambda_by_divisor_recursion(spec, 5000);
        double s = 0.0;
        for (std::uint32_t n = 2; n <= 5000; ++n) s += lam[n] / n;
        s -= spec.tau.value() * std::log(5000.0);
        const RealBudget h = h_f(spec, 5000, primes());
        EXPECT_NEAR(h.value, s, 1e-10) << spec.name();
    }
}

TEST(CountF, Examples) {
    EXPECT_EQ(count_f(case_spec(CaseTag::q691), 5000, primes()), 4997u);
    EXPECT_EQ(count_f(case_spec(CaseTag::q2), 100, primes()), 5u);
    EXPECT_EQ(count_f(case_spec(CaseTag::two_squares), 10, primes()), 7u);
    EXPECT_THROW(count_f(case_spec(CaseTag::q2), 0, primes()), InvalidArgument);
}

TEST(CountF, Q691ZeroSetBelow11054) {
    const auto alive = f_indicator(case_spec(CaseTag::q691), 11053, primes());
    std::vector<std::uint32_t> zeros;
    for (std::uint32_t n = 1; n <= 11053; ++n)
        if (!alive[n]) zeros.push_back(n);
    std::vector<std::uint32_t> expect;
    for (std::uint32_t m = 1; m <= 8; ++m) expect.push_back(1381 * m);
    expect.push_back(5527);
    expect.push_back(8291);
    std::sort(expect.begin(), expect.end());
    EXPECT_EQ(zeros, expect);
}

TEST(DirichletSeries, Examples) {
    const double q2 = dirichlet_series_truncated(case_spec(CaseTag::q2), 2.0, 100, primes()).value;
    EXPECT_NEAR(q2, 1 + std::pow(9, -2) + std::pow(25, -2) + std::pow(49, -2) + std::pow(81, -2), 1e-15);

    double expect = 0.0;
    for (std::uint32_t n = 1; n <= 11053; ++n) expect += 1.0 / (static_cast<double>(n) * n);
    for (std::uint32_t m = 1; m <= 8; ++m) expect -= std::pow(1381.0 * m, -2);
    expect -= std::pow(5527.0, -2) + std::pow(8291.0, -2);
    EXPECT_NEAR(dirichlet_series_truncated(case_spec(CaseTag::q691), 2.0, 11053, primes()).value, expect, 1e-13);

    const CaseSpec q3 = case_spec(CaseTag::q3);
    double oracle = 0.0;
    for (std::uint32_t n = 1; n <= 10'000; ++n)
        if (f_value(q3, n)) oracle += std::pow(static_cast<double>(n), -2.0);
    EXPECT_NEAR(dirichlet_series_truncated(q3, 2.0, 10'000, primes()).value, oracle, 1e-13);
    EXPECT_THROW(dirichlet_series_truncated(q3, 1.0, 10, primes()), InvalidArgument);
}

TEST(EulerIdentity, AtTwo) {
    for (CaseTag tag : {CaseTag::q3, CaseTag::q5, CaseTag::q7, CaseTag::q23}) {
        const oracle::Identity id = oracle::euler_identity_at_2(tag, primes(), 2'000'000);
        EXPECT_TRUE(id.ok()) << to_string(tag) << ": " << id.lhs << " vs " << id.rhs;
    }
    EXPECT_THROW(oracle::euler_identity_at_2(CaseTag::q691, primes(), 100), InvalidArgument);
}

TEST(EulerIdentity, Q691LocalFactors) {
    const oracle::LocalFactorCheck c = oracle::q691_local_factors(primes(), 10'000, 1400);
    EXPECT_TRUE(c.ok) << c.first_failure;
    EXPECT_EQ(c.coefficients, 1229u * 1400u);
}
