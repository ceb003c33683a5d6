#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <numbers>
#include <numeric>
#include <vector>

#include "numeric.hpp"
#include "primes.hpp"

namespace lrlab {

/// A Dirichlet character on a cyclic group (Z/mZ)^*, stored as a discrete-log
/// table plus the exponent j with chi(g) = exp(2 pi i j / phi(m)).
///
/// Values come from exact angle arithmetic, so chi^j and its conjugate
/// evaluate to bitwise-conjugate numbers.
class DirichletCharacter {
public:
    DirichletCharacter(std::uint32_t modulus, std::uint32_t generator, std::uint32_t index,
                       std::shared_ptr<const std::vector<std::int32_t>> dlog)
        : modulus_(modulus), generator_(generator), group_order_(count_units(*dlog)),
          index_(index % group_order_), dlog_(std::move(dlog)) {}

    std::uint32_t modulus() const { return modulus_; }
    std::uint32_t generator() const { return generator_; }
    std::uint32_t group_order() const { return group_order_; }
    std::uint32_t index() const { return index_; }
    std::uint32_t order() const { return group_order_ / std::gcd(index_, group_order_); }
    bool principal() const { return index_ == 0; }
    bool real() const { return order() <= 2; }

    /// chi(-1) as +1 or -1.
    int parity() const { return angle_numerator(modulus_ - 1) == 0 ? 1 : -1; }

    /// Discrete log of r to the base g, or -1 when gcd(r, m) > 1.
    std::int32_t dlog(std::uint64_t r) const { return (*dlog_)[r % modulus_]; }

    /// Numerator a of the angle 2 pi a / phi(m), in [0, phi(m)); -1 for non-units.
    std::int64_t angle_numerator(std::uint64_t r) const {
        const std::int32_t d = dlog(r);
        if (d < 0) return -1;
        return static_cast<std::int64_t>(index_) * d % group_order_;
    }

    std::complex<double> operator()(std::uint64_t r) const {
        const std::int64_t a = angle_numerator(r);
        if (a < 0) return {0.0, 0.0};
        const std::int64_t n = group_order_;
        if ((4 * a) % n == 0) {
            switch ((4 * a) / n) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            case 3: return {0.0, -1.0};
            }
        }
        // Reduce to (-n/2, n/2] so that conjugate angles are exact negatives.
        const std::int64_t centered = 2 * a > n ? a - n : a;
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(centered < 0 ? -centered : centered) /
                             static_cast<double>(n);
        const double s = std::sin(theta);
        return {std::cos(theta), centered < 0 ? -s : s};
    }

    DirichletCharacter power(std::int64_t e) const {
        const std::int64_t n = group_order_;
        const std::int64_t j = ((static_cast<std::int64_t>(index_) * (e % n)) % n + n) % n;
        return {modulus_, generator_, static_cast<std::uint32_t>(j), dlog_};
    }

    DirichletCharacter conjugate() const { return power(-1); }

    friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
        return a.modulus_ == b.modulus_ && a.generator_ == b.generator_ && a.index_ == b.index_;
    }

private:
    static std::uint32_t count_units(const std::vector<std::int32_t>& dlog) {
        std::uint32_t n = 0;
        for (std::int32_t d : dlog) n += d >= 0;
        if (n == 0) throw InvalidArgument("DirichletCharacter: empty unit group");
        return n;
    }

    std::uint32_t modulus_;
    std::uint32_t generator_;
    std::uint32_t group_order_;
    std::uint32_t index_ = 0;
    std::shared_ptr<const std::vector<std::int32_t>> dlog_;
};

inline bool is_supported_character_modulus(std::uint32_t m) {
    return m == 4 || (m >= 3 && is_prime(m));
}

inline std::uint32_t totient_cyclic(std::uint32_t m) { return m == 4 ? 2 : m - 1; }

/// Whether g generates (Z/mZ)^* (checked by an order test).
inline bool is_generator(std::uint32_t g, std::uint32_t m) {
    if (!is_supported_character_modulus(m)) throw InvalidArgument("is_generator: unsupported modulus");
    if (std::gcd(g, m) != 1) return false;
    const std::uint32_t phi = totient_cyclic(m);
    for (std::uint64_t f : distinct_prime_factors(phi))
        if (pow_mod(g, phi / f, m) == 1) return false;
    return phi > 1 || g % m == 1;
}

inline std::uint32_t default_generator(std::uint32_t m) {
    if (m == 691) return 3;
    for (std::uint32_t g = 2; g < m; ++g)
        if (is_generator(g, m)) return g;
    throw InvalidArgument("default_generator: no generator");
}

namespace detail {

inline std::shared_ptr<const std::vector<std::int32_t>> dlog_table(std::uint32_t m, std::uint32_t g) {
    auto table = std::make_shared<std::vector<std::int32_t>>(m, -1);
    std::uint64_t x = 1;
    for (std::uint32_t e = 0; e < totient_cyclic(m); ++e) {
        (*table)[x] = static_cast<std::int32_t>(e);
        x = x * g % m;
    }
    return table;
}

} // namespace detail

/// The character with chi(g) = exp(2 pi i root_index / phi(m)).
inline DirichletCharacter generator_character(std::uint32_t m, std::uint32_t g, std::int64_t root_index) {
    if (!is_supported_character_modulus(m)) throw InvalidArgument("generator_character: unsupported modulus");
    if (!is_generator(g, m)) throw InvalidArgument("generator_character: g does not generate (Z/mZ)^*");
    const std::int64_t phi = totient_cyclic(m);
    const auto j = static_cast<std::uint32_t>(((root_index % phi) + phi) % phi);
    return {m, g, j, detail::dlog_table(m, g)};
}

/// All phi(m) characters chi_c^j, j = 0..phi(m)-1, for the fixed generator character chi_c.
inline std::vector<DirichletCharacter> character_group(std::uint32_t m) {
    if (!(m == 3 || m == 4 || m == 5 || m == 7 || m == 23 || m == 691))
        throw InvalidArgument("character_group: unsupported modulus");
    const DirichletCharacter base = generator_character(m, default_generator(m), 1);
    std::vector<DirichletCharacter> out;
    out.reserve(base.group_order());
    for (std::uint32_t j = 0; j < base.group_order(); ++j) out.push_back(base.power(j));
    return out;
}

/// The real character n -> (D|n) of Q(sqrt D), D in {-3, -4, -7, -23}.
inline DirichletCharacter kronecker_character(std::int64_t D) {
    if (!(D == -3 || D == -4 || D == -7 || D == -23))
        throw InvalidArgument("kronecker_character: unsupported discriminant");
    const auto m = static_cast<std::uint32_t>(-D);
    const DirichletCharacter chi = generator_character(m, default_generator(m), totient_cyclic(m) / 2);
    for (std::uint32_t r = 1; r < m; ++r) {
        if (chi(r).real() != static_cast<double>(kronecker_symbol(D, r)))
            throw ConsistencyError("kronecker_character: value table disagrees with the Kronecker symbol");
    }
    return chi;
}

} // namespace lrlab
