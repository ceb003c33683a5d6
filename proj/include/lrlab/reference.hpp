#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <complex>
#include <string_view>

#include "cases.hpp"
#include "numeric.hpp"

namespace lrlab {

/// Published values, printed as truncated decimals ("-0.3995..." is any
/// number in (-0.3996, -0.3995]).
struct PublishedRow {
    CaseTag tag;
    std::string_view h_1e5;
    std::string_view h_1e6;
    std::string_view B_f;
    std::string_view C2;
};

inline constexpr std::array<PublishedRow, 6> kPublishedTable{{
    {CaseTag::two_squares, "0.163", "0.162", "0.1638", "0.5819"},
    {CaseTag::q5, "-0.401", "-0.400", "-0.3995", "0.1501"},
    {CaseTag::q7, "-0.232", "-0.232", "-0.2316", "0.3841"},
    {CaseTag::q3, "-0.532", "-0.534", "-0.5349", "0.2325"},
    {CaseTag::q691, "-0.571", "-0.571", "-0.5717", "0.0006"},
    {CaseTag::q23, "-0.217", "-0.217", "-0.2166", "0.6083"},
}};

inline const PublishedRow& published_row(CaseTag tag) {
    for (const auto& row : kPublishedTable)
        if (row.tag == tag) return row;
    throw InvalidArgument("no published row for case " + to_string(tag));
}

/// Whether v truncates to the printed decimal (same sign, same leading digits).
inline bool matches_truncated(double v, std::string_view printed) {
    const auto dot = printed.find('.');
    const int decimals = dot == std::string_view::npos ? 0 : static_cast<int>(printed.size() - dot - 1);
    double p = 0.0;
    const auto res = std::from_chars(printed.data(), printed.data() + printed.size(), p);
    if (res.ec != std::errc{}) throw InvalidArgument("matches_truncated: bad number");
    const double unit = std::pow(10.0, -decimals);
    const double slack = 1e-12;
    if (printed.front() == '-') return v <= p + slack && v > p - unit - slack;
    return v >= p - slack && v < p + unit + slack;
}

/// The q = 23 constant is printed as -0.2166... with its last printed digit
/// (the fifth digit of 0.2166) undecided between 6 and 7.
inline bool q23_b_fifth_digit_ok(double v) { return matches_truncated(v, "-0.2166") || matches_truncated(v, "-0.2167"); }

struct QuotedValue {
    double value;
    double tolerance;
};

inline constexpr QuotedValue kLogDerivChi5{0.82767947, 1e-6};
inline constexpr std::complex<double> kLogDerivChiC5{0.15786453, -0.08833613};
inline constexpr double kLogDerivChiC5Tolerance = 1e-6;
inline constexpr QuotedValue kLDerivChiMinus7{0.01856598, 1e-6};
inline constexpr QuotedValue kLDerivChiMinus23{-0.82955295, 1e-6};
inline constexpr double kClosedFormTolerance = 1e-8;
inline constexpr QuotedValue kOddCharacterSum691{1.9018228, 1e-5};
inline constexpr QuotedValue kEvenCharacterSum691{5.10942407, 1e-5};
inline constexpr QuotedValue kB691{-0.5717, 2e-4};
inline constexpr double kOmittedProductsLimit = 1e-5;
inline constexpr QuotedValue kBq3{-0.5349219, 1e-5};
inline constexpr QuotedValue kLandauRamanujanK{0.764, 5e-4};
inline constexpr QuotedValue kTwoSquaresC2{0.5819, 5e-4};
inline constexpr QuotedValue kTwoSquaresC2Fine{0.5819486, 1e-4};
inline constexpr double kHfVersusB = 0.002;

inline bool within(double v, const QuotedValue& q) { return std::abs(v - q.value) <= q.tolerance; }

} // namespace lrlab
