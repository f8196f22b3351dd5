#include "mflab/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace mflab {

namespace {

// Golub-Welsch on a symmetric tridiagonal recurrence: nodes are the
// eigenvalues, weights are mu0 * (first eigenvector component)^2.
Quad1D golub_welsch(const Vec& diag, const Vec& offdiag, double mu0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, offdiag, Eigen::ComputeEigenvectors);
    const int n = static_cast<int>(diag.size());
    Quad1D q;
    q.nodes.resize(n);
    q.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        q.nodes[i] = es.eigenvalues()[i];
        double v0 = es.eigenvectors()(0, i);
        q.weights[i] = mu0 * v0 * v0;
    }
    return q;
}

}  // namespace

Quad1D gauss_jacobi(int n, double beta) {
    if (n < 1) throw InputError("gauss_jacobi: need at least one point");
    if (beta <= -1.0) throw InputError("gauss_jacobi: weight exponent must exceed -1");

    static std::mutex mtx;
    static std::map<std::pair<int, double>, Quad1D> cache;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find({n, beta});
        if (it != cache.end()) return it->second;
    }

    // Monic Jacobi recurrence on [-1,1] with weight (1-t)^0 (1+t)^beta.
    const double a = 0.0, b = beta;
    Vec diag(n), off(std::max(0, n - 1));
    double mu0 = std::pow(2.0, b + 1.0) / (b + 1.0);
    for (int k = 0; k < n; ++k) {
        if (k == 0)
            diag[0] = (b - a) / (a + b + 2.0);
        else {
            double s = 2.0 * k + a + b;
            diag[k] = (b * b - a * a) / (s * (s + 2.0));
        }
    }
    for (int k = 1; k < n; ++k) {
        double bk;
        if (k == 1) {
            bk = 4.0 * (a + 1.0) * (b + 1.0) /
                 ((a + b + 2.0) * (a + b + 2.0) * (a + b + 3.0));
        } else {
            double s = 2.0 * k + a + b;
            bk = 4.0 * k * (k + a) * (k + b) * (k + a + b) /
                 (s * s * (s + 1.0) * (s - 1.0));
        }
        off[k - 1] = std::sqrt(bk);
    }
    Quad1D jac = golub_welsch(diag, off, mu0);

    // Map [-1,1] -> [0,1]: x = (1+t)/2, and int_0^1 x^b f dx = 2^{-b-1} * sum.
    const double scale = std::pow(2.0, -b - 1.0);
    for (int i = 0; i < n; ++i) {
        jac.nodes[i] = 0.5 * (1.0 + jac.nodes[i]);
        jac.weights[i] *= scale;
    }
    {
        std::lock_guard<std::mutex> lock(mtx);
        cache[{n, beta}] = jac;
    }
    return jac;
}

Quad1D gauss_legendre(int n) { return gauss_jacobi(n, 0.0); }

const std::array<TriQuadPoint, 6>& tri_rule_deg4() {
    // Dunavant degree-4 rule, two symmetric orbits.
    static const double a1 = 0.445948490915965, w1 = 0.223381589678011;
    static const double a2 = 0.091576213509771, w2 = 0.109951743655322;
    static const std::array<TriQuadPoint, 6> rule = {{
        {a1, a1, 1.0 - 2.0 * a1, w1},
        {a1, 1.0 - 2.0 * a1, a1, w1},
        {1.0 - 2.0 * a1, a1, a1, w1},
        {a2, a2, 1.0 - 2.0 * a2, w2},
        {a2, 1.0 - 2.0 * a2, a2, w2},
        {1.0 - 2.0 * a2, a2, a2, w2},
    }};
    return rule;
}

double integrate_triangle(const Vec2& a, const Vec2& b, const Vec2& c,
                          const std::function<double(const Vec2&)>& f) {
    double area = 0.5 * std::abs(cross2(b - a, c - a));
    double s = 0.0;
    for (const auto& p : tri_rule_deg4()) {
        Vec2 x = p.l0 * a + p.l1 * b + p.l2 * c;
        s += p.w * f(x);
    }
    return s * area;
}

double integrate_triangle_apex_power(const Vec2& apex, const Vec2& b, const Vec2& c,
                                     double two_alpha,
                                     const std::function<double(const Vec2&)>& f) {
    const double twoA = std::abs(cross2(b - apex, c - apex));
    if (twoA == 0.0) return 0.0;
    const Quad1D& radial = gauss_jacobi(6, two_alpha + 1.0);
    const Quad1D& edge = gauss_legendre(6);
    double s = 0.0;
    for (std::size_t iq = 0; iq < edge.nodes.size(); ++iq) {
        const Vec2 p = (1.0 - edge.nodes[iq]) * b + edge.nodes[iq] * c;
        const Vec2 d = p - apex;
        const double len = d.norm();
        // r = xi * len along the ray; radial rule carries xi^{2a+1}.
        double ray = 0.0;
        for (std::size_t ir = 0; ir < radial.nodes.size(); ++ir) {
            Vec2 x = apex + radial.nodes[ir] * d;
            ray += radial.weights[ir] * f(x);
        }
        s += edge.weights[iq] * std::pow(len, two_alpha) * ray;
    }
    return s * twoA;
}

double integrate_segment(const Vec2& a, const Vec2& b,
                         const std::function<double(const Vec2&)>& f) {
    const Quad1D& gl = gauss_legendre(4);
    const double len = (b - a).norm();
    double s = 0.0;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
        Vec2 x = (1.0 - gl.nodes[i]) * a + gl.nodes[i] * b;
        double v = f(x);
        if (!std::isfinite(v)) {
            throw QuadratureError("non-finite line integrand at (" + fmt17(x.x()) +
                                  ", " + fmt17(x.y()) + ")");
        }
        s += gl.weights[i] * v;
    }
    return s * len;
}

}  // namespace mflab
