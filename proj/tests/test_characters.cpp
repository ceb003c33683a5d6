#include <gtest/gtest.h>

#include <random>

#include "lrlab/characters.hpp"

using namespace lrlab;

namespace {

constexpr std::array<std::uint32_t, 6> kModuli{3, 4, 5, 7, 23, 691};

bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

} // namespace

TEST(Kronecker, CharacterValues) {
    const auto m7 = kronecker_character(-7);
    EXPECT_EQ(m7(2).real(), 1.0);
    EXPECT_EQ(m7(3).real(), -1.0);
    EXPECT_EQ(m7(7).real(), 0.0);
    const auto m4 = kronecker_character(-4);
    EXPECT_EQ(m4(3).real(), -1.0);
    EXPECT_EQ(m4(5).real(), 1.0);
    EXPECT_EQ(m4(2).real(), 0.0);
    const auto m23 = kronecker_character(-23);
    EXPECT_EQ(m23(2).real(), 1.0);
    EXPECT_EQ(m23(5).real(), -1.0);
    for (std::int64_t D : {-3, -4, -7, -23}) {
        const auto chi = kronecker_character(D);
        EXPECT_TRUE(chi.real());
        EXPECT_EQ(chi.parity(), -1) << D;
        for (std::uint32_t n = 1; n < 500; ++n) ASSERT_EQ(chi(n).real(), kronecker_symbol(D, n)) << D << " " << n;
    }
    EXPECT_THROW(kronecker_character(-8), InvalidArgument);
}

TEST(GeneratorCharacter, Examples) {
    const auto c5 = generator_character(5, 2, 1);
    EXPECT_TRUE(close(c5(2), {0.0, 1.0}));
    EXPECT_TRUE(close(c5(4), {-1.0, 0.0}));
    EXPECT_TRUE(close(c5(3), {0.0, -1.0}));
    EXPECT_EQ(c5(5), std::complex<double>(0.0, 0.0));

    const auto c691 = generator_character(691, 3, 1);
    EXPECT_TRUE(close(c691(3), std::polar(1.0, 2 * std::numbers::pi / 690)));

    const auto quad = generator_character(691, 3, 345);
    EXPECT_TRUE(quad.real());
    for (std::uint32_t n = 1; n < 691; ++n) {
        const double euler = pow_mod(n, 345, 691) == 1 ? 1.0 : -1.0;
        ASSERT_EQ(quad(n).real(), euler) << n;
        ASSERT_EQ(quad(n).imag(), 0.0) << n;
    }
}

TEST(GeneratorCharacter, RejectsNonGenerators) {
    EXPECT_THROW(generator_character(5, 4, 1), InvalidArgument);
    EXPECT_THROW(generator_character(7, 2, 1), InvalidArgument);
    EXPECT_THROW(generator_character(9, 2, 1), InvalidArgument);
    EXPECT_THROW(generator_character(691, 691, 1), InvalidArgument);
    EXPECT_FALSE(is_generator(2, 7));
    EXPECT_TRUE(is_generator(3, 7));
    EXPECT_TRUE(is_generator(3, 691));
    EXPECT_EQ(default_generator(691), 3u);
    EXPECT_EQ(default_generator(5), 2u);
}

TEST(CharacterGroup, SizesAndStructure) {
    for (std::uint32_t m : kModuli) {
        const auto g = character_group(m);
        EXPECT_EQ(g.size(), totient_cyclic(m)) << m;
        EXPECT_TRUE(g[0].principal());
        for (std::size_t j = 0; j < g.size(); ++j) EXPECT_EQ(g[j].index(), j);
        // chi_c^{phi(m)} is principal
        EXPECT_TRUE(g[1].power(totient_cyclic(m)).principal());
    }
    EXPECT_THROW(character_group(11), InvalidArgument);
}

TEST(CharacterGroup, Mod5SquareIsQuadratic) {
    const auto g = character_group(5);
    const auto sq = g[1].power(2);
    EXPECT_EQ(sq, g[2]);
    for (std::uint32_t n = 1; n < 5; ++n) EXPECT_EQ(sq(n).real(), kronecker_symbol(5, n)) << n;
}

TEST(CharacterGroup, UniqueRealNonprincipalMod7) {
    const auto g = character_group(7);
    int count = 0;
    for (const auto& chi : g) {
        if (chi.principal() || !chi.real()) continue;
        ++count;
        EXPECT_EQ(chi, kronecker_character(-7));
    }
    EXPECT_EQ(count, 1);
}

TEST(CharacterGroup, Orthogonality) {
    for (std::uint32_t m : kModuli) {
        const auto g = character_group(m);
        const double phi = totient_cyclic(m);
        for (std::size_t a = 0; a < g.size(); a += std::max<std::size_t>(1, g.size() / 12)) {
            for (std::size_t b = 0; b < g.size(); b += std::max<std::size_t>(1, g.size() / 17)) {
                std::complex<double> s{};
                for (std::uint32_t r = 0; r < m; ++r) s += g[a](r) * std::conj(g[b](r));
                const double expect = a == b ? phi : 0.0;
                ASSERT_TRUE(close(s, expect, 1e-9)) << m << " " << a << " " << b;
            }
        }
        // second orthogonality: sum over characters
        for (std::uint32_t r = 1; r < m; ++r) {
            std::complex<double> s{};
            for (const auto& chi : g) s += chi(r);
            ASSERT_TRUE(close(s, r == 1 ? phi : 0.0, 1e-9)) << m << " r=" << r;
        }
    }
}

TEST(CharacterGroup, Multiplicative) {
    std::mt19937_64 rng(12345);
    for (std::uint32_t m : kModuli) {
        const auto g = character_group(m);
        std::uniform_int_distribution<std::uint64_t> dist(1, 1'000'000);
        for (int trial = 0; trial < 500; ++trial) {
            const auto& chi = g[rng() % g.size()];
            const std::uint64_t a = dist(rng), b = dist(rng);
            ASSERT_TRUE(close(chi(a * b), chi(a) * chi(b), 1e-9)) << m;
        }
    }
}

TEST(CharacterGroup, ConjugatesAreExact) {
    for (std::uint32_t m : kModuli) {
        const auto g = character_group(m);
        for (const auto& chi : g) {
            const auto bar = chi.conjugate();
            EXPECT_EQ(bar, g[(g.size() - chi.index()) % g.size()]);
            for (std::uint32_t r = 0; r < m; ++r) ASSERT_EQ(bar(r), std::conj(chi(r))) << m << " " << r;
        }
    }
}

TEST(CharacterGroup, ParityAndOrder) {
    const auto g = character_group(691);
    for (const auto& chi : g) {
        EXPECT_EQ(chi.parity(), chi.index() % 2 ? -1 : 1);
        EXPECT_EQ(690 % chi.order(), 0u);
    }
    EXPECT_EQ(g[345].order(), 2u);
    EXPECT_EQ(g[1].order(), 690u);
    EXPECT_EQ(g[1].dlog(3), 1);
    EXPECT_EQ(g[1].dlog(691), -1);
}
