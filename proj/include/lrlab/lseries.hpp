#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "characters.hpp"
#include "numeric.hpp"
#include "primes.hpp"

namespace lrlab {

namespace detail {

// Derivatives of h(u) = log^k(u) / u^sigma. Writing h^{(j)}(u) = u^{-(sigma+j)} Q_j(log u),
// Q_0 = L^k and Q_{j+1} = -(sigma + j) Q_j + Q_j'.
inline std::vector<double> log_power_derivatives(double u, int sigma, int k, int max_order) {
    std::vector<double> q(static_cast<std::size_t>(k) + 1, 0.0);
    q[static_cast<std::size_t>(k)] = 1.0;
    const double L = std::log(u);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(max_order) + 1);
    for (int j = 0; j <= max_order; ++j) {
        double poly = 0.0;
        for (int d = k; d >= 0; --d) poly = poly * L + q[static_cast<std::size_t>(d)];
        out.push_back(poly * std::pow(u, -(sigma + j)));
        std::vector<double> next(q.size(), 0.0);
        for (std::size_t d = 0; d < q.size(); ++d) {
            next[d] += -(sigma + j) * q[d];
            if (d > 0) next[d - 1] += static_cast<double>(d) * q[d];
        }
        q = std::move(next);
    }
    return out;
}

// B_2/2!, B_4/4!, B_6/6!
inline constexpr double kB2 = 1.0 / 12.0;
inline constexpr double kB4 = -1.0 / 720.0;
inline constexpr double kB6 = 1.0 / 30240.0;

} // namespace detail

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// Direct-summation length used for gamma_k(r, m): n runs up to
/// depth * max(10^6, 2000 m).
inline std::uint64_t gamma_cutoff(std::uint32_t m, double depth = 1.0) {
    const double base = std::max(1.0e6, 2000.0 * m);
    return static_cast<std::uint64_t>(std::ceil(depth * base));
}

/// Generalized Euler constant of the progression n = r (mod m):
///   lim_x { sum_{0<n<=x, n=r (m)} log^k n / n  -  log^{k+1} x / (m (k+1)) }.
/// Residue r = 0 and r = m both denote the class of multiples of m.
///
/// Direct summation to the cutoff, then Euler-Maclaurin on
/// g(t) = log^k(r + t m) / (r + t m) through the B_4 correction. The budget is
/// twice the B_6 term plus the summation rounding bound.
inline RealBudget gamma_k(std::uint32_t r, std::uint32_t m, int k, double depth = 1.0) {
    if (m == 0) throw InvalidArgument("gamma_k: modulus must be positive");
    if (r > m) throw InvalidArgument("gamma_k: residue must lie in [0, m]");
    if (k < 0) throw InvalidArgument("gamma_k: k must be non-negative");
    if (!(depth > 0.0)) throw InvalidArgument("gamma_k: depth must be positive");
    const std::uint64_t first = r == 0 ? m : r;
    const std::uint64_t cutoff = gamma_cutoff(m, depth);
    const std::uint64_t terms = cutoff < first ? 0 : (cutoff - first) / m + 1;

    CompensatedSum sum;
    for (std::uint64_t j = 0; j < terms; ++j) {
        const double n = static_cast<double>(first + j * m);
        const double L = std::log(n);
        double lk = 1.0;
        for (int i = 0; i < k; ++i) lk *= L;
        sum += lk / n;
    }

    const double u = static_cast<double>(first + terms * m);
    const double md = static_cast<double>(m);
    const auto h = detail::log_power_derivatives(u, 1, k, 5);
    const double g0 = h[0];
    const double g1 = md * h[1];
    const double g3 = md * md * md * h[3];
    const double g5 = std::pow(md, 5) * h[5];
    const double Lu = std::log(u);

    sum += -std::pow(Lu, k + 1) / (md * (k + 1));
    sum += 0.5 * g0;
    sum += -detail::kB2 * g1;
    sum += -detail::kB4 * g3;

    const double truncation = 2.0 * std::abs(detail::kB6 * g5);
    // log() and the division each add about one ulp of every term
    const double per_term = 4.0 * std::numeric_limits<double>::epsilon() * std::pow(Lu, k + 1) / (md * (k + 1));
    return {sum.value(), truncation + sum.rounding_bound() + per_term};
}

/// gamma_k(r, m) for r = 1..m (index r - 1; r = m is the zero class).
struct GammaTable {
    std::uint32_t modulus = 0;
    int k = 0;
    std::vector<RealBudget> values;

    const RealBudget& at(std::uint32_t r) const {
        if (r > modulus) throw InvalidArgument("GammaTable: residue out of range");
        return values[(r == 0 ? modulus : r) - 1];
    }
};

inline GammaTable gamma_table(std::uint32_t m, int k, double depth = 1.0, unsigned threads = 1) {
    GammaTable table{m, k, std::vector<RealBudget>(m)};
    parallel_for(m, threads, [&](std::size_t i) { table.values[i] = gamma_k(static_cast<std::uint32_t>(i + 1), m, k, depth); });
    return table;
}

/// L^{(k)}(1, chi) = (-1)^k sum_{r=1}^{m} chi(r) gamma_k(r, m) for non-principal chi.
inline ComplexBudget l_derivative_at_1(const DirichletCharacter& chi, const GammaTable& gammas) {
    if (chi.principal()) throw InvalidArgument("l_derivative_at_1: principal character (pole at s = 1)");
    if (gammas.modulus != chi.modulus()) throw InvalidArgument("l_derivative_at_1: gamma table modulus mismatch");
    CompensatedComplexSum sum;
    double budget = 0.0;
    for (std::uint32_t r = 1; r <= chi.modulus(); ++r) {
        const auto c = chi(r);
        if (c == std::complex<double>{}) continue;
        const auto& g = gammas.at(r);
        sum.add(c * g.value);
        budget += g.budget + 2 * std::numeric_limits<double>::epsilon() * std::abs(g.value);
    }
    const double sign = (gammas.k % 2) ? -1.0 : 1.0;
    return {sign * sum.value(), budget + sum.rounding_bound()};
}

/// Caches gamma tables per (modulus, k) and evaluates L-values from them.
class LSeriesEngine {
public:
    explicit LSeriesEngine(double depth = 1.0, unsigned threads = 1) : depth_(depth), threads_(threads) {
        if (!(depth > 0.0)) throw InvalidArgument("LSeriesEngine: depth must be positive");
    }

    const GammaTable& gammas(std::uint32_t m, int k) {
        std::lock_guard lock(mutex_);
        auto key = std::make_pair(m, k);
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, gamma_table(m, k, depth_, threads_)).first;
        return it->second;
    }

    ComplexBudget l_derivative(const DirichletCharacter& chi, int k) {
        if (k < 0) throw InvalidArgument("l_derivative: k must be non-negative");
        return l_derivative_at_1(chi, gammas(chi.modulus(), k));
    }

    ComplexBudget l_value(const DirichletCharacter& chi) { return l_derivative(chi, 0); }

    /// L'(1, chi) / L(1, chi).
    ComplexBudget log_derivative(const DirichletCharacter& chi) { return l_derivative(chi, 1) / l_value(chi); }

    double depth() const { return depth_; }
    unsigned threads() const { return threads_; }

private:
    double depth_;
    unsigned threads_;
    std::mutex mutex_;
    std::map<std::pair<std::uint32_t, int>, GammaTable> cache_;
};

/// Closed-form values at s = 1.
enum class ClosedFormL { chi_minus3, chi_minus4, chi_minus7, chi_minus23, chi_5, chi_c5_norm };

inline ClosedFormL parse_closed_form(std::string_view tag) {
    if (tag == "chi_-3") return ClosedFormL::chi_minus3;
    if (tag == "chi_-4") return ClosedFormL::chi_minus4;
    if (tag == "chi_-7") return ClosedFormL::chi_minus7;
    if (tag == "chi_-23") return ClosedFormL::chi_minus23;
    if (tag == "chi_5") return ClosedFormL::chi_5;
    if (tag == "chi_c5_norm") return ClosedFormL::chi_c5_norm;
    throw InvalidArgument("closed_form_l_value: unknown tag '" + std::string(tag) + "'");
}

inline double closed_form_l_value(ClosedFormL tag) {
    using std::numbers::pi;
    switch (tag) {
    case ClosedFormL::chi_minus3: return pi / (3.0 * std::sqrt(3.0));
    case ClosedFormL::chi_minus4: return pi / 4.0;
    case ClosedFormL::chi_minus7: return pi / std::sqrt(7.0);
    case ClosedFormL::chi_minus23: return 3.0 * pi / std::sqrt(23.0);
    case ClosedFormL::chi_5: return std::log((3.0 + std::sqrt(5.0)) / 2.0) / std::sqrt(5.0);
    // L(1, chi_c) L(1, conj chi_c) for the quartic character mod 5
    case ClosedFormL::chi_c5_norm: return 2.0 * pi * pi / 25.0;
    }
    throw InvalidArgument("closed_form_l_value: unknown tag");
}

inline constexpr double kPrimeTailThreshold = 7481.0;

/// Upper bound for sum_{p > x} log p / (p^k - 1), valid for x >= 7481 and k > 1,
/// from 0.98 x <= theta(x) <= 1.017 x.
inline double prime_log_tail_bound(double x, double k) {
    if (x < kPrimeTailThreshold) throw PreconditionError("prime tail bound requires cutoff >= 7481");
    if (!(k > 1.0)) throw InvalidArgument("prime tail bound requires k > 1");
    const double xk = std::pow(x, k);
    if (!std::isfinite(xk)) return 0.0;
    return x / (xk - 1.0) * (-0.98 + 1.017 * k / (k - 1.0));
}

enum class Tail { rigorous, none };

/// One term c * log p / (p^e - 1) of a weighted prime sum.
struct PrimeWeight {
    double coefficient;
    int exponent;
};

/// sum over primes p <= cutoff with pred(p) of log p * sum_i c_i / (p^{e_i} - 1).
/// With Tail::rigorous the budget includes sum_i |c_i| times the tail bound at the cutoff.
inline RealBudget weighted_prime_log_sum(const PrimeTable& primes, double cutoff,
                                         const std::function<bool(std::uint32_t)>& pred,
                                         std::span<const PrimeWeight> weights, Tail tail = Tail::rigorous) {
    if (cutoff > static_cast<double>(primes.limit)) throw ResourceError("prime sum cutoff beyond prime table");
    for (const auto& w : weights)
        if (w.exponent < 2) throw InvalidArgument("prime sum exponent must be at least 2");
    CompensatedSum sum;
    double magnitude = 0.0;
    for (std::uint32_t p : primes) {
        if (p > cutoff) break;
        if (!pred(p)) continue;
        const double logp = std::log(static_cast<double>(p));
        for (const auto& w : weights) {
            const double pe = std::pow(static_cast<double>(p), w.exponent);
            const double term = w.coefficient * logp / (pe - 1.0);
            sum += term;
            magnitude += std::abs(term);
        }
    }
    double budget = sum.rounding_bound() + 4 * std::numeric_limits<double>::epsilon() * magnitude;
    if (tail == Tail::rigorous) {
        for (const auto& w : weights) budget += std::abs(w.coefficient) * prime_log_tail_bound(cutoff, w.exponent);
    }
    return {sum.value(), budget};
}

/// sum_{p <= cutoff, pred(p)} log p / (p^k - 1).
inline RealBudget prime_log_sum(const PrimeTable& primes, const std::function<bool(std::uint32_t)>& pred, int k,
                                double cutoff, Tail tail = Tail::rigorous) {
    const PrimeWeight w{1.0, k};
    return weighted_prime_log_sum(primes, cutoff, pred, std::span(&w, 1), tail);
}

/// One pass over the primes p <= cutoff: prime p goes to class classify(p)
/// (negative = skipped) and contributes log p * sum_i c_i / (p^{e_i} - 1) with
/// that class's weights. Returns one sum per class.
inline std::vector<RealBudget> class_prime_log_sums(const PrimeTable& primes, double cutoff,
                                                    const std::function<int(std::uint32_t)>& classify,
                                                    const std::vector<std::vector<PrimeWeight>>& weights,
                                                    Tail tail = Tail::rigorous) {
    if (cutoff > static_cast<double>(primes.limit)) throw ResourceError("prime sum cutoff beyond prime table");
    for (const auto& ws : weights)
        for (const auto& w : ws)
            if (w.exponent < 2) throw InvalidArgument("prime sum exponent must be at least 2");
    std::vector<CompensatedSum> sums(weights.size());
    std::vector<double> magnitude(weights.size(), 0.0);
    for (std::uint32_t p : primes) {
        if (p > cutoff) break;
        const int c = classify(p);
        if (c < 0) continue;
        if (static_cast<std::size_t>(c) >= weights.size()) throw InvalidArgument("prime class index out of range");
        const double logp = std::log(static_cast<double>(p));
        for (const auto& w : weights[c]) {
            const double term = w.coefficient * logp / (std::pow(static_cast<double>(p), w.exponent) - 1.0);
            sums[c] += term;
            magnitude[c] += std::abs(term);
        }
    }
    std::vector<RealBudget> out;
    out.reserve(weights.size());
    for (std::size_t c = 0; c < weights.size(); ++c) {
        double budget = sums[c].rounding_bound() + 4 * std::numeric_limits<double>::epsilon() * magnitude[c];
        if (tail == Tail::rigorous)
            for (const auto& w : weights[c]) budget += std::abs(w.coefficient) * prime_log_tail_bound(cutoff, w.exponent);
        out.emplace_back(sums[c].value(), budget);
    }
    return out;
}

/// zeta'(2) / zeta(2) with zeta(2) = pi^2/6 and zeta'(2) = -sum log n / n^2 summed
/// directly to `terms` and closed by Euler-Maclaurin.
inline RealBudget zeta_log_derivative_at_2(std::uint64_t terms = 1'000'000) {
    if (terms < 10) throw InvalidArgument("zeta_log_derivative_at_2: too few terms");
    CompensatedSum sum;
    for (std::uint64_t n = 2; n < terms; ++n) {
        const double x = static_cast<double>(n);
        sum += std::log(x) / (x * x);
    }
    const double N = static_cast<double>(terms);
    const auto h = detail::log_power_derivatives(N, 2, 1, 5);
    sum += (std::log(N) + 1.0) / N; // integral of log t / t^2 over [N, inf)
    sum += 0.5 * h[0];
    sum += -detail::kB2 * h[1];
    sum += -detail::kB4 * h[3];
    const double budget = 2.0 * std::abs(detail::kB6 * h[5]) + sum.rounding_bound() +
                          4 * std::numeric_limits<double>::epsilon() * std::abs(sum.value());
    const double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
    return {-sum.value() / zeta2, budget / zeta2};
}

} // namespace lrlab
