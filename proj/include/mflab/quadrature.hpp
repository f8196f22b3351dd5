#pragma once

#include "mflab/common.hpp"

#include <array>

namespace mflab {

struct Quad1D {
    std::vector<double> nodes;    // in (0,1)
    std::vector<double> weights;  // for the stated weight function
};

/// Gauss-Legendre rule with n points on (0,1), weight 1.
Quad1D gauss_legendre(int n);

/// Gauss-Jacobi rule with n points on (0,1) for the weight x^beta, beta > -1:
///   sum_i w_i f(x_i) ~= int_0^1 x^beta f(x) dx,
/// exact for polynomials f of degree <= 2n-1. Computed by Golub-Welsch on the
/// shifted Jacobi recurrence.
Quad1D gauss_jacobi(int n, double beta);

struct TriQuadPoint {
    double l0, l1, l2;  // barycentric coordinates
    double w;           // weight, sums to 1 over the rule
};

/// Symmetric 6-point rule on the reference triangle, exact to degree 4.
const std::array<TriQuadPoint, 6>& tri_rule_deg4();

/// Integrates f over the triangle (a,b,c) with the degree-4 rule.
double integrate_triangle(const Vec2& a, const Vec2& b, const Vec2& c,
                          const std::function<double(const Vec2&)>& f);

/// Integrates r^{2 alpha} * f over the triangle (apex, b, c) where
/// r = |x - apex| and 2*alpha > -2. Product rule: Gauss-Jacobi with weight
/// r^{2 alpha + 1} radially, Gauss-Legendre along the opposite edge. Exact
/// when f restricted to each ray is polynomial of modest degree.
double integrate_triangle_apex_power(const Vec2& apex, const Vec2& b, const Vec2& c,
                                     double two_alpha,
                                     const std::function<double(const Vec2&)>& f);

/// Integrates f along the segment [a,b] with a 4-point Gauss rule.
/// Throws QuadratureError naming the point if f evaluates non-finite.
double integrate_segment(const Vec2& a, const Vec2& b,
                         const std::function<double(const Vec2&)>& f);

}  // namespace mflab
