#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>

namespace hyperlab {

// Deterministic numerical integration built on a single tanh-sinh
// (double-exponential) core rule. The rule never places a node on an
// interval endpoint, so integrands with integrable endpoint
// singularities (log blow-ups, corner singularities of iterated
// integrals) can be fed in unmodified. Error estimation is by level
// differencing: refinement halves the node spacing and the estimate is
// the difference between the last two levels.

struct QuadConfig {
    double abs_tol = 1e-12;                    // must be > 0
    std::int64_t max_evaluations = 10'000'000; // budget of integrand calls per request
    int max_depth = 60;                        // level-doubling cap
};

struct QuadResult {
    double value = 0.0;
    double error_bound = 0.0; // absolute; converged implies error_bound <= abs_tol
    std::int64_t evaluations = 0;
    bool converged = false;
};

using Integrand1D = std::function<double(double)>;
using Integrand2D = std::function<double(double, double)>;

// Thrown when an integrand produces a non-finite value at an interior node.
struct IntegrandError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integral of f over the open interval (a, b), a < b. Endpoint
// singularities are fine as long as the integral exists; f is never
// called at a or b.
QuadResult integrate_finite(const Integrand1D& f, double a, double b,
                            const QuadConfig& cfg = {});

// Integral of f over (a, inf) for integrands that eventually decay at
// least like exp(-u). Substitutes u = a - cutoff_scale*log(1-t), which
// maps (a, inf) onto t in (0,1), and delegates to integrate_finite.
// cutoff_scale > 0 stretches the transform's effective reach; the
// default 1 is exact for exp(-c u) decay, and doubling it is a cheap
// regression guard that the tail is not being truncated.
QuadResult integrate_semi_infinite(const Integrand1D& f, double a,
                                   const QuadConfig& cfg = {},
                                   double cutoff_scale = 1.0);

// Iterated integral of F over the open unit square, outer in y and
// inner in x, both by the tanh-sinh rule. A singularity is allowed at
// the corner (1,1); it is never sampled. The reported error_bound is
// the outer level difference plus the supremum of the inner error
// bounds; a non-converged inner integral makes the whole result
// non-converged.
QuadResult integrate_unit_square(const Integrand2D& F,
                                 const QuadConfig& cfg = {});

} // namespace hyperlab
