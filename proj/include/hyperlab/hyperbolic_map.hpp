#pragma once

namespace hyperlab {

// The hyperbolic change of variables between the open unit square and
// the cusped region S in the (u,v) quarter-plane:
//
//   x = sinh(u)/cosh(v),   y = sinh(v)/cosh(u)
//
// S is bounded by the coordinate axes, the curve v = f(u) = asinh(cosh u)
// above the diagonal and v = g(u) = acosh(sinh u) below it (g is defined
// for u >= alpha = asinh(1), where it meets the u-axis). The Jacobian of
// the map is 1 - tanh^2(u) tanh^2(v) = 1 - x^2 y^2.

struct SquarePoint {
    double x = 0.0;
    double y = 0.0;
};

struct MapPoint {
    double u = 0.0;
    double v = 0.0;
};

// Coordinates after rotating the (u,v) axes by pi/4.
struct RotatedPoint {
    double X = 0.0;
    double Y = 0.0;
};

// Closed-region membership with a 1e-12 tolerance band on the axes and
// boundary curves, evaluated in cancellation-safe form.
bool in_region(const MapPoint& p);

// Maps a point of S into the closed unit square. Throws
// std::domain_error if p lies outside S.
SquarePoint forward(const MapPoint& p);

// Inverse map u = acosh sqrt((1+x^2)/(1-x^2 y^2)),
//             v = acosh sqrt((1+y^2)/(1-x^2 y^2)),
// with acosh(t) = ln(t + sqrt(t^2-1)). Throws std::domain_error outside
// the unit square and at the singular corner (1,1).
MapPoint inverse(const SquarePoint& q);

// 1 - tanh^2(u) tanh^2(v); globally defined, equals 1 - x^2 y^2 at the
// forward image.
double jacobian(const MapPoint& p);

// Upper boundary curve f(u) = asinh(cosh u), u >= 0.
double curve_f(double u);

// Lower boundary curve g(u) = acosh(sinh u), u >= alpha.
double curve_g(double u);

// f(u) - u and u - g(u) in cancellation-safe form; both decay like
// 2 exp(-2u) and stay positive and finite for all representable u in
// their domains, where naive subtraction loses every digit past u ~ 18.
double f_minus_u(double u);
double u_minus_g(double u);

// Rotation back from (X,Y) coordinates: u = (X-Y)/sqrt2, v = (X+Y)/sqrt2.
MapPoint rotate(const RotatedPoint& r);

// Image of the upper boundary curve in rotated coordinates:
// Y = h(X) = -(sqrt2/2) ln tanh(X/sqrt2), X > 0. Rotating (X, h(X))
// lands on v = f(u).
double h_curve(double X);

} // namespace hyperlab
