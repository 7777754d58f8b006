#pragma once

namespace hyperlab {

// Real dilogarithm and friends on the real branch x <= 1, plus the
// closed-form constants the identity registry uses as right-hand sides.

enum class Li2Path {
    direct_series,          // |x| <= 1/2
    reflection,             // 1/2 < x <= 1
    landen,                 // -1 <= x < -1/2
    reflection_then_landen, // x < -1
};

struct Li2Value {
    double value = 0.0;
    int terms_used = 0;      // series terms after argument reduction
    Li2Path reduction_path = Li2Path::direct_series;
};

// Li2(x) = sum_{k>=1} x^k / k^2 continued to x <= 1. Argument reduction
// uses only the Euler reflection and Landen transformations:
//   Li2(x) = pi^2/6 - ln(x) ln(1-x) - Li2(1-x)
//   Li2(x) = -Li2(x/(x-1)) - ln^2(1-x)/2
// and the path taken is a deterministic function of x alone.
// Throws std::domain_error for x > 1 or non-finite x.
Li2Value li2(double x);

// Normalized Rogers dilogarithm (6/pi^2)[Li2(x) + ln(x) ln(1-x)/2],
// defined on the open interval (0, 1).
double rogers_L(double x);

// alpha = asinh(1) = ln(1 + sqrt 2), the abscissa where the lower
// boundary curve of the hyperbolic region meets the u-axis.
double const_alpha();

// Reference zeta values: s = 2 gives pi^2/6, s = 3 the direct series
// with an Euler-Maclaurin tail correction accurate to well below 1e-15.
double zeta_ref(int s);

} // namespace hyperlab
