#include "hyperlab/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hyperlab {
namespace {

constexpr double kPi2over6 = std::numbers::pi * std::numbers::pi / 6.0;

// Power series at |z| <= 1/2, truncated when the geometric tail bound
// |z|^(K+1) / ((K+1)^2 (1-|z|)) drops below 1e-17.
double li2_series(double z, int& terms) {
    const double az = std::abs(z);
    double sum = 0.0;
    double zk = 1.0;  // z^k
    double azk = 1.0; // |z|^k
    int k = 1;
    for (;;) {
        zk *= z;
        azk *= az;
        sum += zk / (static_cast<double>(k) * k);
        const double kp1 = k + 1.0;
        const double tail = azk * az / (kp1 * kp1 * (1.0 - az));
        if (tail <= 1e-17)
            break;
        ++k;
    }
    terms = k;
    return sum;
}

} // namespace

Li2Value li2(double x) {
    if (!std::isfinite(x))
        throw std::domain_error("li2: argument must be finite");
    if (x > 1.0)
        throw std::domain_error("li2: real branch requires x <= 1");

    Li2Value out;
    if (x == 1.0) {
        // Reflection limit: ln(x) ln(1-x) -> 0 as x -> 1.
        out.value = kPi2over6;
        out.reduction_path = Li2Path::reflection;
        return out;
    }
    if (std::abs(x) <= 0.5) {
        out.value = li2_series(x, out.terms_used);
        out.reduction_path = Li2Path::direct_series;
        return out;
    }
    if (x > 0.5) {
        // Euler reflection; 1-x lands in [0, 1/2).
        const double omx = 1.0 - x;
        out.value = kPi2over6 - std::log(x) * std::log(omx) - li2_series(omx, out.terms_used);
        out.reduction_path = Li2Path::reflection;
        return out;
    }
    // x < -1/2: Landen maps to w = x/(x-1) in (1/3, 1).
    const double w = x / (x - 1.0);
    const double lomx = std::log1p(-x); // ln(1-x), x < 0
    if (w <= 0.5) {
        out.value = -li2_series(w, out.terms_used) - 0.5 * lomx * lomx;
        out.reduction_path = Li2Path::landen;
        return out;
    }
    // w > 1/2 (that is, x < -1): reflect after Landen.
    const double omw = 1.0 / (1.0 - x); // 1 - w
    const double li2w = kPi2over6 - std::log(w) * std::log(omw) - li2_series(omw, out.terms_used);
    out.value = -li2w - 0.5 * lomx * lomx;
    out.reduction_path = Li2Path::reflection_then_landen;
    return out;
}

double rogers_L(double x) {
    if (!(x > 0.0) || !(x < 1.0))
        throw std::domain_error("rogers_L: argument must lie in (0, 1)");
    return (6.0 / (std::numbers::pi * std::numbers::pi)) *
           (li2(x).value + 0.5 * std::log(x) * std::log1p(-x));
}

double const_alpha() {
    static const double alpha = std::log(1.0 + std::numbers::sqrt2);
    return alpha;
}

double zeta_ref(int s) {
    if (s == 2)
        return kPi2over6;
    if (s == 3) {
        // sum_{n<=N} n^-3 + 1/(2N^2) - 1/(2N^3); the omitted correction
        // is ~1/(4N^4), below 1e-16 at N = 8000. Summed smallest-first.
        static const double z3 = [] {
            constexpr int N = 8000;
            double sum = 0.0;
            for (int n = N; n >= 1; --n) {
                const double dn = n;
                sum += 1.0 / (dn * dn * dn);
            }
            const double dN = N;
            return sum + 1.0 / (2.0 * dN * dN) - 1.0 / (2.0 * dN * dN * dN);
        }();
        return z3;
    }
    throw std::domain_error("zeta_ref: only s = 2 and s = 3 are supported");
}

} // namespace hyperlab
