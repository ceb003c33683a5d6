#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "numeric.hpp"
#include "primes.hpp"

namespace lrlab {

/// The counting problems: q-divisibility of tau(n) for the exceptional
/// primes, sums of two squares, and the constant function (von Mangoldt).
enum class CaseTag { q2, q3, q5, q7, q23, q691, two_squares, ones };

inline constexpr std::array<CaseTag, 8> kAllCases{CaseTag::q2,  CaseTag::q3,   CaseTag::q5,          CaseTag::q7,
                                                  CaseTag::q23, CaseTag::q691, CaseTag::two_squares, CaseTag::ones};

inline std::string to_string(CaseTag tag) {
    switch (tag) {
    case CaseTag::q2: return "q2";
    case CaseTag::q3: return "q3";
    case CaseTag::q5: return "q5";
    case CaseTag::q7: return "q7";
    case CaseTag::q23: return "q23";
    case CaseTag::q691: return "q691";
    case CaseTag::two_squares: return "two_squares";
    case CaseTag::ones: return "ones";
    }
    return "?";
}

inline CaseTag parse_case(std::string_view name) {
    for (CaseTag t : kAllCases)
        if (to_string(t) == name) return t;
    throw InvalidArgument("unknown case '" + std::string(name) + "'");
}

/// Label selecting a prime's local Euler factor.
struct PrimeClassification {
    enum class Kind { residue, order, wilton };

    CaseTag tag;
    Kind kind;
    std::uint32_t value;   // residue, order (0 = infinite), or WiltonClass
    std::uint32_t modulus; // modulus of the residue / order computation

    WiltonClass wilton() const { return static_cast<WiltonClass>(value); }
    friend bool operator==(const PrimeClassification&, const PrimeClassification&) = default;

    std::string str() const {
        switch (kind) {
        case Kind::residue: return "residue " + std::to_string(value) + " mod " + std::to_string(modulus);
        case Kind::order: return value == 0 ? std::string("order inf") : "order " + std::to_string(value);
        case Kind::wilton: return to_string(wilton());
        }
        return "?";
    }
};

/// f(p^k) = 0 exactly when k >= 1 and k = -1 (mod period). A period of 0 means
/// f(p^k) = 1 for every k; a period of 1 kills every positive exponent.
/// For period b >= 2 the local factor is (1 - x^{b-1}) / ((1 - x)(1 - x^b)).
struct ExponentPeriod {
    std::uint32_t period = 0;

    bool unbounded() const { return period == 0; }
    bool allows(std::uint64_t k) const {
        if (k == 0 || period == 0) return true;
        return (k + 1) % period != 0;
    }
    friend bool operator==(const ExponentPeriod&, const ExponentPeriod&) = default;
};

/// A 0/1-valued multiplicative function together with its density data.
struct CaseSpec {
    CaseTag tag;
    Rational tau;   // density of primes with f(p) = 1
    Rational delta; // 1 - tau; the exponent in Ramanujan's claimed asymptotic

    std::string name() const { return to_string(tag); }
};

inline CaseSpec case_spec(CaseTag tag) {
    switch (tag) {
    case CaseTag::q2: return {tag, {0, 1}, {1, 1}};
    case CaseTag::q3: return {tag, {1, 2}, {1, 2}};
    case CaseTag::q5: return {tag, {3, 4}, {1, 4}};
    case CaseTag::q7: return {tag, {1, 2}, {1, 2}};
    case CaseTag::q23: return {tag, {1, 2}, {1, 2}};
    case CaseTag::q691: return {tag, {689, 690}, {1, 690}};
    case CaseTag::two_squares: return {tag, {1, 2}, {1, 2}};
    case CaseTag::ones: return {tag, {1, 1}, {0, 1}};
    }
    throw InvalidArgument("case_spec: unknown tag");
}

/// The residue / order / Wilton label of p for the given case.
inline PrimeClassification classify(const CaseSpec& spec, std::uint64_t p) {
    using Kind = PrimeClassification::Kind;
    const auto r = [&](std::uint32_t m) {
        return PrimeClassification{spec.tag, Kind::residue, static_cast<std::uint32_t>(p % m), m};
    };
    switch (spec.tag) {
    case CaseTag::q2: return r(2);
    case CaseTag::q3: return r(3);
    case CaseTag::q5: return r(5);
    case CaseTag::q7: return r(7);
    case CaseTag::two_squares: return r(4);
    case CaseTag::ones: return r(1);
    case CaseTag::q23:
        return {spec.tag, Kind::wilton, static_cast<std::uint32_t>(wilton_class(p)), 23};
    case CaseTag::q691: return {spec.tag, Kind::order, mult_order(p, 691).value, 691};
    }
    throw InvalidArgument("classify: unsupported case");
}

/// Maps a prime's label to the exponent rule of its local factor.
inline ExponentPeriod exponent_period(const PrimeClassification& c) {
    const std::uint32_t v = c.value;
    switch (c.tag) {
    case CaseTag::ones: return {0};
    case CaseTag::q2: return v == 0 ? ExponentPeriod{1} : ExponentPeriod{2};
    case CaseTag::two_squares: return v == 3 ? ExponentPeriod{2} : ExponentPeriod{0};
    case CaseTag::q3:
        if (v == 0) return {1};
        return v == 1 ? ExponentPeriod{3} : ExponentPeriod{2};
    case CaseTag::q5:
        if (v == 0) return {1};
        if (v == 1) return {5};
        return v == 4 ? ExponentPeriod{2} : ExponentPeriod{4};
    case CaseTag::q7:
        if (v == 0) return {1};
        return (v == 1 || v == 2 || v == 4) ? ExponentPeriod{7} : ExponentPeriod{2};
    case CaseTag::q23:
        switch (c.wilton()) {
        case WiltonClass::P23: return {0};
        case WiltonClass::S1: return {2};
        case WiltonClass::S2: return {3};
        case WiltonClass::S3: return {23};
        }
        break;
    case CaseTag::q691:
        // sigma_11(p^k) = 0 (mod 691) iff p^{k+1} = 1 with p != 1, or k + 1 = 0
        // (mod 691) when p = 1 (mod 691); gcd(11, 690) = 1 keeps the order of p^11.
        if (v == 0) return {0};
        return v == 1 ? ExponentPeriod{691} : ExponentPeriod{v};
    }
    throw InvalidArgument("exponent_period: unsupported classification");
}

inline ExponentPeriod exponent_period(const CaseSpec& spec, std::uint64_t p) {
    return exponent_period(classify(spec, p));
}

} // namespace lrlab
