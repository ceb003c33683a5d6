#include <gtest/gtest.h>

#include <numeric>

#include "lrlab/modforms.hpp"

using namespace lrlab;

namespace {

const TauWindow& window() {
    static const TauWindow w = tau_exact(20'000);
    return w;
}

} // namespace

TEST(TauExact, Examples) {
    const TauWindow& t = window();
    EXPECT_EQ(t(1), 1);
    EXPECT_EQ(t(2), -24);
    EXPECT_EQ(t(3), 252);
    EXPECT_EQ(t(5), 4830);
    EXPECT_EQ(t(6), -6048);
    EXPECT_EQ(t(11), 534612);
    EXPECT_EQ(t.limit, 20'000u);
}

TEST(TauExact, Errors) {
    EXPECT_THROW(tau_exact(0), InvalidArgument);
    EXPECT_THROW(tau_exact(kTauExactLimit + 1), ResourceError);
    EXPECT_THROW(lambda_mod3(kTauExactLimit + 1), ResourceError);
}

TEST(TauExact, MultiplicativeOnCoprimePairs) {
    const TauWindow& t = window();
    for (std::uint32_t a = 2; a <= 140; ++a)
        for (std::uint32_t b = a + 1; a * b <= 20'000; ++b)
            if (std::gcd(a, b) == 1) {
                ASSERT_EQ(t(a * b), t(a) * t(b)) << a << " " << b;
            }
}

TEST(TauExact, HeckeRecursion) {
    const TauWindow& t = window();
    for (std::uint32_t p = 2; p <= 150; ++p) {
        if (!is_prime(p)) continue;
        const TauInt p11 = boost::multiprecision::pow(TauInt(p), 11);
        std::uint64_t pk = p;
        for (std::uint32_t k = 1; pk * p <= 20'000; ++k, pk *= p) {
            const TauInt prev = k == 1 ? TauInt(1) : t(static_cast<std::uint32_t>(pk / p));
            ASSERT_EQ(t(static_cast<std::uint32_t>(pk * p)), t(p) * t(static_cast<std::uint32_t>(pk)) - p11 * prev)
                << p << "^" << k + 1;
        }
    }
}

TEST(TauMod, Examples) {
    EXPECT_EQ(tau_mod(23, 2)[2], 22u);
    EXPECT_EQ(tau_mod(691, 1381)[1381], 0u);
    EXPECT_EQ(tau_mod(5, 6)[6], 2u);
    EXPECT_EQ(tau_mod(5, 5)[5], 0u);
    EXPECT_EQ(tau_mod(23, 5)[5], 0u);
    EXPECT_THROW(tau_mod(11, 10), InvalidArgument);
    EXPECT_THROW(tau_mod(3, 0), InvalidArgument);
}

TEST(TauMod, CongruencesMatchExactTau) {
    const TauWindow& t = window();
    for (std::uint32_t q : {2u, 3u, 5u, 7u, 23u, 691u}) {
        const auto fast = tau_mod(q, 20'000);
        for (std::uint32_t n = 1; n <= 20'000; ++n) ASSERT_EQ(fast[n], t.mod(n, q)) << "q=" << q << " n=" << n;
    }
}

TEST(TauMod, HeckeMod23OnPrimePowers) {
    const TauWindow& t = window();
    const auto fast = tau_mod(23, 20'000);
    for (std::uint32_t p = 2; p <= 20'000; ++p) {
        if (!is_prime(p)) continue;
        for (std::uint64_t pk = p; pk <= 20'000; pk *= p)
            ASSERT_EQ(fast[pk], t.mod(static_cast<std::uint32_t>(pk), 23)) << pk;
    }
}

TEST(LambdaMod3, Examples) {
    const auto l = lambda_mod3(100);
    EXPECT_EQ(l[0], 1);
    EXPECT_EQ(l[1], 1);
    EXPECT_EQ(l[4], 2); // 5 partitions
    EXPECT_EQ(l[9], 2); // 30 - 1
}

TEST(LambdaMod3, MatchesPartitionCount) {
    // Partitions into parts not divisible by 9, counted exactly.
    const std::uint32_t N = 300;
    std::vector<boost::multiprecision::cpp_int> c(N + 1, 0);
    c[0] = 1;
    for (std::uint32_t part = 1; part <= N; ++part) {
        if (part % 9 == 0) continue;
        for (std::uint32_t n = part; n <= N; ++n) c[n] += c[n - part];
    }
    const auto l = lambda_mod3(N);
    for (std::uint32_t n = 0; n <= N; ++n) ASSERT_EQ(l[n], static_cast<std::uint8_t>(c[n] % 3)) << n;
}

TEST(Koppeling, CountsMatchFromZero) {
    const std::uint32_t X = 2000;
    const auto l = lambda_mod3(X);
    const auto t3 = tau_mod(3, 3 * X + 1);
    const TauWindow& t = window();
    std::uint64_t lhs = 0, rhs = 0;
    std::uint32_t n = 0;
    for (std::uint32_t x = 0; x <= X; ++x) {
        lhs += l[x] != 0;
        for (; n < 3 * x + 1; ++n) {
            rhs += t3[n + 1] != 0;
            ASSERT_EQ(t3[n + 1] != 0, t.mod(n + 1, 3) != 0);
        }
        ASSERT_EQ(lhs, rhs) << "x=" << x;
    }
}

TEST(Koppeling, PointwiseBijection) {
    const auto l = lambda_mod3(2000);
    const auto t3 = tau_mod(3, 6001);
    for (std::uint32_t k = 0; k <= 2000; ++k) ASSERT_EQ(l[k] != 0, t3[3 * k + 1] != 0) << k;
    for (std::uint32_t n = 1; n <= 6001; ++n)
        if (n % 3 != 1) {
            ASSERT_EQ(t3[n], 0u) << n;
        }
}

TEST(OddTauCount, Examples) {
    EXPECT_EQ(odd_tau_count(100), 5u);
    EXPECT_EQ(odd_tau_count(1), 1u);
    EXPECT_EQ(odd_tau_count(80), 4u);
    EXPECT_EQ(odd_tau_count(0), 0u);
    EXPECT_EQ(odd_tau_count(1'000'000'000'000ull), 500'000u);
}

TEST(OddTauCount, MatchesParityOfExactTau) {
    const TauWindow& t = window();
    std::uint64_t odd = 0;
    for (std::uint32_t x = 1; x <= 10'000; ++x) {
        odd += t.mod(x, 2);
        ASSERT_EQ(odd, odd_tau_count(x)) << x;
    }
}
