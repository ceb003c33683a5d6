#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

namespace lrlab {

// Error taxonomy. The CLI maps InvalidArgument to a usage failure and the
// remaining kinds to computational precondition failures.
struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ResourceError : std::length_error {
    using std::length_error::length_error;
};
struct PreconditionError : std::domain_error {
    using std::domain_error::domain_error;
};
struct UnsupportedCase : std::domain_error {
    using std::domain_error::domain_error;
};
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Exact rational with small numerator and denominator (densities, exponents).
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    constexpr double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
    friend constexpr bool operator==(const Rational&, const Rational&) = default;
};

/// A numeric value paired with an absolute error bound.
///
/// Sums add budgets; products and quotients propagate first-order bounds.
/// For complex values the budget bounds each component separately.
template <typename T>
struct ValueWithBudget {
    T value{};
    double budget = 0.0;

    ValueWithBudget() = default;
    ValueWithBudget(T v, double b = 0.0) : value(v), budget(b) {
        if (!(b >= 0.0)) throw InvalidArgument("budget must be non-negative");
    }

    friend ValueWithBudget operator+(const ValueWithBudget& a, const ValueWithBudget& b) {
        return {a.value + b.value, a.budget + b.budget};
    }
    friend ValueWithBudget operator-(const ValueWithBudget& a, const ValueWithBudget& b) {
        return {a.value - b.value, a.budget + b.budget};
    }
    friend ValueWithBudget operator-(const ValueWithBudget& a) { return {-a.value, a.budget}; }

    friend ValueWithBudget operator*(double s, const ValueWithBudget& a) {
        return {s * a.value, std::abs(s) * a.budget};
    }
    friend ValueWithBudget operator*(const ValueWithBudget& a, double s) { return s * a; }

    friend ValueWithBudget operator*(const ValueWithBudget& a, const ValueWithBudget& b) {
        // Complex budgets are per component; |z| <= sqrt(2) * per-component bound.
        const double k = is_complex ? 2.0 : 1.0;
        return {a.value * b.value,
                k * (std::abs(a.value) * b.budget + std::abs(b.value) * a.budget + a.budget * b.budget)};
    }

    friend ValueWithBudget operator/(const ValueWithBudget& a, const ValueWithBudget& b) {
        const double k = is_complex ? 2.0 : 1.0;
        const double denom = std::abs(b.value) - k * b.budget;
        if (!(denom > 0.0)) throw PreconditionError("quotient denominator not bounded away from zero");
        const double q = std::abs(a.value) / std::abs(b.value);
        return {a.value / b.value, k * (a.budget + q * k * b.budget) / denom};
    }

    bool contains(T target, double slack = 0.0) const {
        if constexpr (is_complex) {
            return std::abs(value.real() - target.real()) <= budget + slack &&
                   std::abs(value.imag() - target.imag()) <= budget + slack;
        } else {
            return std::abs(value - target) <= budget + slack;
        }
    }

    static constexpr bool is_complex = !std::is_floating_point_v<T>;
};

using RealBudget = ValueWithBudget<double>;
using ComplexBudget = ValueWithBudget<std::complex<double>>;

inline RealBudget real_part(const ComplexBudget& z) { return {z.value.real(), z.budget}; }
inline RealBudget imag_part(const ComplexBudget& z) { return {z.value.imag(), z.budget}; }
inline ComplexBudget conj(const ComplexBudget& z) { return {std::conj(z.value), z.budget}; }

/// Kahan-Babuska-Neumaier summation with a running rounding-error bound.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            carry_ += (sum_ - t) + x;
        else
            carry_ += (x - t) + sum_;
        sum_ = t;
        abs_total_ += std::abs(x);
        ++count_;
    }

    CompensatedSum& operator+=(double x) {
        add(x);
        return *this;
    }

    // Folds a partial sum computed elsewhere (ordered reduction of chunks).
    void merge(const CompensatedSum& other) {
        add(other.value());
        rounding_extra_ += other.rounding_bound();
    }

    double value() const { return sum_ + carry_; }

    // |computed - exact| <= 2u|s| + 4nu^2 sum|x_i|  (Neumaier's bound, generous constants)
    double rounding_bound() const {
        constexpr double u = std::numeric_limits<double>::epsilon() / 2;
        const double n = static_cast<double>(count_);
        return 2 * u * std::abs(value()) + 4 * n * u * u * abs_total_ + rounding_extra_;
    }

    RealBudget result() const { return {value(), rounding_bound()}; }
    std::size_t count() const { return count_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
    double abs_total_ = 0.0;
    double rounding_extra_ = 0.0;
    std::size_t count_ = 0;
};

/// Compensated accumulation of complex values, component by component.
class CompensatedComplexSum {
public:
    void add(std::complex<double> z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    std::complex<double> value() const { return {re_.value(), im_.value()}; }
    double rounding_bound() const { return std::max(re_.rounding_bound(), im_.rounding_bound()); }

private:
    CompensatedSum re_;
    CompensatedSum im_;
};

/// Thread count used when a caller passes 0.
inline unsigned hardware_threads() {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1u : n;
}

/// Runs fn(i) for i in [0, count) on up to `threads` workers with static
/// contiguous chunking. Each index is processed exactly once, so results
/// stored per index do not depend on the thread count.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    if (threads == 0) threads = hardware_threads();
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::size_t chunk = (count + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

inline std::uint64_t isqrt(std::uint64_t n) {
    auto r = std::min<std::uint64_t>(static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n))), 0xFFFFFFFFull);
    while (r * r > n) --r;
    while (r < 0xFFFFFFFFull && (r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_square(std::uint64_t n) {
    const auto r = isqrt(n);
    return r * r == n;
}

} // namespace lrlab
