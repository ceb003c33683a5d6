#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "cases.hpp"
#include "characters.hpp"
#include "lseries.hpp"
#include "multfn.hpp"
#include "numeric.hpp"
#include "primes.hpp"

namespace lrlab {

struct EngineConfig {
    std::uint64_t prime_limit = 10'000'000;
    double em_depth = 1.0;
    unsigned threads = 0; // 0 = machine parallelism
};

/// Shared state for constant evaluation: the prime table (sieved on first use)
/// and the cache of generalized Euler constants.
class Engine {
public:
    explicit Engine(EngineConfig config = {}) : config_(config), lseries_(config.em_depth, config.threads) {
        if (config.prime_limit < 2) throw InvalidArgument("Engine: prime limit must be at least 2");
    }

    const EngineConfig& config() const { return config_; }

    const PrimeTable& primes() {
        std::call_once(primes_once_, [this] { primes_ = sieve_primes(config_.prime_limit); });
        return primes_;
    }

    LSeriesEngine& lseries() { return lseries_; }

private:
    EngineConfig config_;
    LSeriesEngine lseries_;
    std::once_flag primes_once_;
    PrimeTable primes_;
};

inline constexpr double kDefaultPrimeCutoff = 1.0e7;

namespace detail {

inline void check_cutoff(Engine& engine, double cutoff) {
    if (!(cutoff >= kPrimeTailThreshold)) throw PreconditionError("prime cutoff must be at least 7481");
    if (cutoff > static_cast<double>(engine.config().prime_limit))
        throw PreconditionError("prime cutoff exceeds the prime limit");
}

// A floating-point constant known to about one ulp.
inline RealBudget known(double v) { return {v, 2 * std::numeric_limits<double>::epsilon() * std::abs(v)}; }

inline RealBudget real_log_derivative(Engine& engine, const DirichletCharacter& chi) {
    return real_part(engine.lseries().log_derivative(chi));
}

inline RealBudget sum_all(const std::vector<RealBudget>& parts) {
    RealBudget total{0.0, 0.0};
    for (const auto& p : parts) total = total + p;
    return total;
}

} // namespace detail

/// Two assemblies of B_f for q = 3: the Euler-product form and the rewrite
/// through zeta'(2)/zeta(2).
struct Q3Forms {
    RealBudget euler_form;
    RealBudget zeta_form;
};

inline Q3Forms b_q3_forms(Engine& engine, double cutoff = kDefaultPrimeCutoff) {
    detail::check_cutoff(engine, cutoff);
    const auto chi = kronecker_character(-3);
    const RealBudget ld = detail::real_log_derivative(engine, chi);
    const RealBudget gamma = detail::known(kEulerGamma);
    const auto cls = [](std::uint32_t p) { return p == 3 ? -1 : static_cast<int>(p % 3) - 1; };

    // 2B = -gamma - log 3 / 2 - L'/L(chi_-3) + 2 S_2(2) + sum_{p=1} log p (6/(p^3-1) - 4/(p^2-1))
    const auto euler = class_prime_log_sums(engine.primes(), cutoff, cls, {{{6, 3}, {-4, 2}}, {{2, 2}}});
    const RealBudget twice_euler = -1.0 * gamma - detail::known(std::log(3.0) / 2) - ld + detail::sum_all(euler);

    // 2B = 6 S_2(2) + 4 zeta'(2)/zeta(2) - L'/L(chi_-3) - gamma + 6 S_1(3)
    const auto zeta = class_prime_log_sums(engine.primes(), cutoff, cls, {{{6, 3}}, {{6, 2}}});
    const RealBudget twice_zeta = detail::sum_all(zeta) + 4.0 * zeta_log_derivative_at_2() - ld - gamma;

    return {0.5 * twice_euler, 0.5 * twice_zeta};
}

/// The q = 691 approximation: character sums of L'/L(1, chi_c^j) over odd and
/// even powers of the character with chi_c(3) = exp(2 pi i / 690).
struct B691 {
    ComplexBudget odd_sum;  // j = 0..344 of L'/L(chi_c^{2j+1})
    ComplexBudget even_sum; // j = 1..344 of L'/L(chi_c^{2j})
    RealBudget value;
};

/// Allowance for the four residual Euler products left out of the approximation.
inline constexpr double kOmittedProductsAllowance = 1e-5;

inline B691 b691_approx(Engine& engine) {
    const auto chars = character_group(691);
    const DirichletCharacter& chi_c = chars[1];
    std::vector<ComplexBudget> ld(690);
    // warm both tables before the parallel loop so workers only read the cache
    engine.lseries().gammas(691, 0);
    engine.lseries().gammas(691, 1);
    parallel_for(689, engine.config().threads, [&](std::size_t i) {
        ld[i + 1] = engine.lseries().log_derivative(chi_c.power(static_cast<std::int64_t>(i + 1)));
    });
    ComplexBudget odd{{0.0, 0.0}, 0.0};
    ComplexBudget even{{0.0, 0.0}, 0.0};
    for (std::size_t j = 1; j < 690; ++j) {
        if (j % 2) odd = odd + ld[j];
        else even = even + ld[j];
    }
    const double log691 = std::log(691.0);
    const RealBudget value = detail::known(log691 / (690.0 * 690.0)) - (689.0 / 690.0) * detail::known(kEulerGamma) -
                             (1.0 / 690.0) * real_part(odd) + (1.0 / 690.0) * real_part(even);
    return {odd, even, {value.value, value.budget + kOmittedProductsAllowance}};
}

/// Multiplicative order of every unit mod 691 (index r, order of r).
inline std::vector<std::uint32_t> orders_mod_691() {
    std::vector<std::uint32_t> orders(691, 0);
    for (std::uint32_t r = 1; r < 691; ++r) {
        std::uint32_t e = 1;
        std::uint64_t x = r;
        while (x != 1) {
            x = x * r % 691;
            ++e;
        }
        orders[r] = e;
    }
    return orders;
}

/// Contribution to B_f (q = 691) of the residual products for p = -1 mod 691,
/// p = 1 mod 691, even order >= 4 and order in (2, 691), summed over p <= cutoff.
/// A prime of order v contributes
///   log p (v/(p^v - 1) - (v-1)/(p^{v-1} - 1) + [v even] p^{v/2}/(p^v - 1)),
/// with v = 691 for p = 1 mod 691.
inline RealBudget omitted_products_bound(Engine& engine, double cutoff = kDefaultPrimeCutoff) {
    detail::check_cutoff(engine, cutoff);
    const auto orders = orders_mod_691();
    CompensatedSum sum;
    double magnitude = 0.0;
    for (std::uint32_t p : engine.primes()) {
        if (p > cutoff) break;
        if (p == 691) continue;
        const double pd = p;
        const double v = orders[p % 691] == 1 ? 691.0 : orders[p % 691];
        const double a = std::pow(pd, -v);
        const double b = std::pow(pd, -(v - 1));
        double c = v * a / (1 - a) - (v - 1) * b / (1 - b);
        if (std::fmod(v, 2.0) == 0.0) {
            const double y = std::pow(pd, -v / 2);
            c += y / (1 - y * y);
        }
        const double term = std::log(pd) * c;
        sum += term;
        magnitude += std::abs(term);
    }
    // every prime contributes at most 3 log p / (p^2 - 1) in absolute value
    const double tail = 3.0 * prime_log_tail_bound(cutoff, 2);
    return {sum.value(), sum.rounding_bound() + 16 * std::numeric_limits<double>::epsilon() * magnitude + tail};
}

namespace detail {

// sum_{p > x} p^{-2} <= (1/log x) sum_{p > x} log p / (p^2 - 1)
inline double inverse_square_prime_tail(double x) { return prime_log_tail_bound(x, 2) / std::log(x); }

} // namespace detail

/// (1/sqrt 2) prod_{p = 3 mod 4, p <= cutoff} (1 - p^{-2})^{-1/2}, without a budget.
inline double landau_ramanujan_K_truncated(const PrimeTable& primes, double cutoff) {
    if (cutoff > static_cast<double>(primes.limit)) throw ResourceError("cutoff beyond prime table");
    CompensatedSum log_k;
    log_k += -0.5 * std::log(2.0);
    for (std::uint32_t p : primes) {
        if (p > cutoff) break;
        if (p % 4 == 3) log_k += -0.5 * std::log1p(-1.0 / (static_cast<double>(p) * p));
    }
    return std::exp(log_k.value());
}

/// Landau-Ramanujan constant K. The partial product is a lower bound; the
/// budget covers the missing factors p > cutoff.
inline RealBudget landau_ramanujan_K(Engine& engine, double cutoff = kDefaultPrimeCutoff) {
    detail::check_cutoff(engine, cutoff);
    const double k = landau_ramanujan_K_truncated(engine.primes(), cutoff);
    const double log_tail = 0.5 / (1.0 - 1.0 / (cutoff * cutoff)) * detail::inverse_square_prime_tail(cutoff);
    return {k, k * std::expm1(log_tail) + 8 * std::numeric_limits<double>::epsilon() * k};
}

/// The prefactor (4/(5 Gamma(3/4))) (pi^2 / (2 sqrt 5 log((3 + sqrt 5)/2)))^{1/4}
/// of the q = 5 first-order constant, i.e. its value with D = 1.
inline double c5_prefactor() {
    using std::numbers::pi;
    const double regulator = std::log((3.0 + std::sqrt(5.0)) / 2.0);
    return 4.0 / (5.0 * std::tgamma(0.75)) * std::pow(pi * pi / (2.0 * std::sqrt(5.0) * regulator), 0.25);
}

/// log D for the q = 5 Euler product over p <= cutoff.
inline double c5_log_d(const PrimeTable& primes, double cutoff) {
    if (cutoff > static_cast<double>(primes.limit)) throw ResourceError("cutoff beyond prime table");
    CompensatedSum log_d;
    for (std::uint32_t p : primes) {
        if (p > cutoff) break;
        const double pd = p;
        const auto l1m = [pd](int e) { return std::log1p(-std::pow(pd, -e)); };
        switch (p % 5) {
        case 1: log_d += l1m(4) - l1m(5); break;
        case 2:
        case 3: log_d += l1m(3) - 0.5 * l1m(2) - 0.75 * l1m(4); break;
        case 4: log_d += -0.5 * l1m(2); break;
        default: break;
        }
    }
    return log_d.value();
}

/// First-order constant C for q = 5, from the L-value expression
///   (1/Gamma(3/4)) (64 L(1,chi_c) L(1,conj chi_c) / (125 L(1,chi_5)))^{1/4} D,
/// checked against the closed-form prefactor times D.
inline RealBudget first_order_C5(Engine& engine, double cutoff = kDefaultPrimeCutoff) {
    detail::check_cutoff(engine, cutoff);
    const auto chars = character_group(5);
    const ComplexBudget lc = engine.lseries().l_value(chars[1]);
    const ComplexBudget lcbar = engine.lseries().l_value(chars[3]);
    const RealBudget l5 = real_part(engine.lseries().l_value(chars[2]));
    const RealBudget norm = real_part(lc * lcbar);
    const RealBudget ratio = (64.0 * norm) / (125.0 * l5);

    const double D = std::exp(c5_log_d(engine.primes(), cutoff));
    // |log factor| <= p^{-2} for every p > 7481
    const double d_rel = std::expm1(detail::inverse_square_prime_tail(cutoff));

    const double root = std::pow(ratio.value, 0.25);
    const double root_budget = 0.25 * root * ratio.budget / ratio.value * 1.01;
    const double gamma34 = std::tgamma(0.75);
    const double c_lvalues = root / gamma34 * D;
    const double c_closed = c5_prefactor() * D;
    const double rounding = 64 * std::numeric_limits<double>::epsilon() * c_lvalues;
    const double budget = root_budget / gamma34 * D + c_lvalues * d_rel + rounding;
    if (std::abs(c_lvalues - c_closed) > root_budget / gamma34 * D + 2 * rounding)
        throw ConsistencyError("first_order_C5: L-value and closed-form expressions disagree");
    return {c_lvalues, budget};
}

/// B_f assembled from L-values, closed forms and prime sums.
inline RealBudget second_order_B(Engine& engine, CaseTag tag, double cutoff = kDefaultPrimeCutoff) {
    using detail::known;
    const RealBudget gamma = known(kEulerGamma);
    switch (tag) {
    case CaseTag::q2: throw UnsupportedCase("q2 has an exact counting function and no B_f");
    case CaseTag::ones: return -1.0 * gamma;
    case CaseTag::q691: return b691_approx(engine).value;
    default: break;
    }
    detail::check_cutoff(engine, cutoff);
    const PrimeTable& primes = engine.primes();
    switch (tag) {
    case CaseTag::q3: {
        const Q3Forms forms = b_q3_forms(engine, cutoff);
        if (std::abs(forms.zeta_form.value - forms.euler_form.value) > forms.zeta_form.budget + forms.euler_form.budget)
            throw ConsistencyError("q3: the two assemblies of B_f disagree");
        return forms.zeta_form;
    }
    case CaseTag::q5: {
        const auto chars = character_group(5);
        const RealBudget ld_c = detail::real_log_derivative(engine, chars[1]);
        const RealBudget ld_5 = detail::real_log_derivative(engine, chars[2]);
        const auto cls = [](std::uint32_t p) {
            switch (p % 5) {
            case 1: return 0;
            case 4: return 1;
            case 2:
            case 3: return 2;
            default: return -1;
            }
        };
        const auto a = class_prime_log_sums(primes, cutoff, cls,
                                            {{{-16, 4}, {20, 5}}, {{4, 2}}, {{4, 2}, {-12, 3}, {12, 4}}});
        const RealBudget four_b =
            -3.0 * gamma - 2.0 * ld_c + ld_5 - known(0.75 * std::log(5.0)) + detail::sum_all(a);
        return 0.25 * four_b;
    }
    case CaseTag::q7: {
        const RealBudget ld = detail::real_log_derivative(engine, kronecker_character(-7));
        const auto cls = [](std::uint32_t p) {
            const std::uint32_t r = p % 7;
            if (r == 0) return -1;
            return (r == 1 || r == 2 || r == 4) ? 0 : 1;
        };
        const auto s = class_prime_log_sums(primes, cutoff, cls, {{{14, 7}, {-12, 6}}, {{2, 2}}});
        const RealBudget two_b = -1.0 * gamma - known(std::log(7.0) / 6.0) - ld + detail::sum_all(s);
        return 0.5 * two_b;
    }
    case CaseTag::q23: {
        const RealBudget ld = detail::real_log_derivative(engine, kronecker_character(-23));
        const auto cls = [](std::uint32_t p) {
            switch (wilton_class(p)) {
            case WiltonClass::S1: return 0;
            case WiltonClass::S2: return 1;
            case WiltonClass::S3: return 2;
            case WiltonClass::P23: return -1;
            }
            return -1;
        };
        // Residues p^11 = 1 (mod 23) are S2 and S3; S3 primes take the residue
        // weights plus their own, which cancel the p^2 and p^3 terms.
        const auto s = class_prime_log_sums(primes, cutoff, cls,
                                            {{{1, 2}},
                                             {{3, 3}, {-2, 2}},
                                             {{3, 3}, {-2, 2}, {2, 2}, {-3, 3}, {23, 23}, {-22, 22}}});
        return -0.5 * gamma - 0.5 * ld + known(std::log(23.0) / 44.0) + detail::sum_all(s);
    }
    case CaseTag::two_squares: {
        const RealBudget ld = detail::real_log_derivative(engine, kronecker_character(-4));
        const auto s = class_prime_log_sums(primes, cutoff, [](std::uint32_t p) { return p % 4 == 3 ? 0 : -1; },
                                            {{{2, 2}}});
        const RealBudget two_b = -1.0 * gamma - ld + known(std::log(2.0)) + detail::sum_all(s);
        return 0.5 * two_b;
    }
    default: break;
    }
    throw UnsupportedCase("second_order_B: unsupported case");
}

enum class Verdict { claim_false, inconclusive };

inline std::string to_string(Verdict v) { return v == Verdict::claim_false ? "CLAIM_FALSE" : "INCONCLUSIVE"; }

/// A second-order constant differing from delta by more than its budget
/// refutes an asymptotic whose second coefficient is delta.
inline Verdict verdict_for(const RealBudget& c2, double claimed) {
    return std::abs(c2.value - claimed) > c2.budget ? Verdict::claim_false : Verdict::inconclusive;
}

struct ConstantReport {
    CaseTag tag;
    Rational tau;
    Rational delta;
    RealBudget B_f;
    RealBudget C2;
    Rational C2_ramanujan;
    std::map<std::uint64_t, RealBudget> h_checkpoints;
    std::optional<RealBudget> first_order;
    Verdict verdict = Verdict::inconclusive;
    std::optional<std::string> discrepancy;
};

/// The published C2 for q = 23 (0.6083) is not (1 - tau)(1 + B_f) for its own
/// B_f = -0.2166, which gives 0.3917.
inline constexpr double kQ23PublishedC2 = 0.6083;

/// C2 = (1 - tau)(1 + B_f).
inline RealBudget c2_from_b(const CaseSpec& spec, const RealBudget& b) {
    const double d = spec.delta.value();
    const double v = d * (1.0 + b.value);
    return {v, d * b.budget + 2 * std::numeric_limits<double>::epsilon() * std::abs(v)};
}

inline ConstantReport report_from_b(Engine& engine, CaseTag tag, const RealBudget& b,
                                    const std::vector<double>& checkpoints) {
    const CaseSpec spec = case_spec(tag);
    ConstantReport r{tag, spec.tau, spec.delta, b, c2_from_b(spec, b), spec.delta, {}, std::nullopt,
                     Verdict::inconclusive, std::nullopt};
    for (double x : checkpoints) r.h_checkpoints[static_cast<std::uint64_t>(x)] = h_f(spec, x, engine.primes());
    r.verdict = verdict_for(r.C2, spec.delta.value());
    return r;
}

inline ConstantReport second_order_constant(Engine& engine, CaseTag tag, double cutoff = kDefaultPrimeCutoff,
                                            const std::vector<double>& checkpoints = {1e5, 1e6}) {
    ConstantReport r = report_from_b(engine, tag, second_order_B(engine, tag, cutoff), checkpoints);
    if (tag == CaseTag::q5) r.first_order = first_order_C5(engine, cutoff);
    if (tag == CaseTag::two_squares) r.first_order = landau_ramanujan_K(engine, cutoff);
    if (tag == CaseTag::q23 && std::abs(r.C2.value - kQ23PublishedC2) > 1e-3) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4f", r.C2.value);
        r.discrepancy = std::string("published C2 0.6083 differs from (1 - tau)(1 + B_f) = ") + buf;
    }
    return r;
}

/// The partition function lambda (parts not divisible by 9), whose counting
/// constant satisfies C2(l) = C2(q3) - (1/2) log 3; the claimed value is 1/2.
struct PartitionReport {
    RealBudget C2;
    Rational C2_ramanujan{1, 2};
    Verdict verdict = Verdict::inconclusive;
};

inline PartitionReport lambda_report(const ConstantReport& q3) {
    if (q3.tag != CaseTag::q3) throw InvalidArgument("lambda_report: needs the q3 report");
    const RealBudget c2 = q3.C2 - detail::known(0.5 * std::log(3.0));
    return {c2, {1, 2}, verdict_for(c2, 0.5)};
}

inline constexpr std::array<CaseTag, 6> kTable1Cases{CaseTag::two_squares, CaseTag::q5,   CaseTag::q7,
                                                     CaseTag::q3,          CaseTag::q691, CaseTag::q23};

inline std::vector<ConstantReport> table1(Engine& engine, double cutoff = kDefaultPrimeCutoff,
                                          const std::vector<double>& checkpoints = {1e5, 1e6}) {
    std::vector<ConstantReport> rows;
    for (CaseTag tag : kTable1Cases) rows.push_back(second_order_constant(engine, tag, cutoff, checkpoints));
    return rows;
}

} // namespace lrlab
