#pragma once

#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

#include "numeric.hpp"

namespace lrlab {

/// Shortest form within 10 significant digits, independent of the locale.
inline std::string format_number(double v, int digits = 10) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, digits);
    if (res.ec != std::errc{}) throw ConsistencyError("format_number: conversion failed");
    return {buf, res.ptr};
}

/// The double nearest to format_number(v), so serializers print the same digits.
inline double rounded_number(double v, int digits = 10) {
    if (!std::isfinite(v) || v == 0.0) return v;
    const std::string s = format_number(v, digits);
    double out = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), out);
    return out;
}

inline std::string format_budget(const RealBudget& b) { return format_number(b.value) + " +/- " + format_number(b.budget, 3); }

inline std::string format_budget(const ComplexBudget& z) {
    const double im = z.value.imag();
    return format_number(z.value.real()) + (std::signbit(im) ? " - " : " + ") + format_number(std::abs(im)) + "i +/- " +
           format_number(z.budget, 3);
}

} // namespace lrlab
