#include "rigidity/families.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rigidity {

Graph k33_interleaved() {
    std::vector<Edge> edges;
    for (int u : {0, 2, 4})
        for (int v : {1, 3, 5}) edges.push_back({u, v});
    return Graph(6, std::move(edges));
}

const std::array<std::size_t, 9>& k33_display_edge_order() {
    static const std::array<std::size_t, 9> order = {0, 5, 8, 6, 7, 1, 2, 3, 4};
    return order;
}

K33LimitParams k33_limit_params(double a, double b) {
    if (!(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0))
        throw std::invalid_argument("k33_limit_params: need a, b in (0, 1)");
    K33LimitParams q;
    q.a = a;
    q.b = b;
    q.f = std::sqrt((1.0 - a * a) * (1.0 - b * b)) - a * b;
    return q;
}

Framework k33_embedding(double alpha, double beta, double c) {
    if (!(alpha > 0.0 && alpha < 1.5707963267948966) || !(beta > 0.0 && beta < 1.5707963267948966))
        throw std::invalid_argument("k33_embedding: angles must lie in (0, pi/2)");
    if (!(c > 0.0)) throw std::invalid_argument("k33_embedding: need c > 0");

    Embedding p(2, 6);
    p.coord(0, 0) = c * std::cos(alpha);
    p.coord(2, 1) = c * std::sin(alpha);
    p.coord(4, 1) = -c * std::sin(alpha);
    p.coord(1, 0) = p.coord(0, 0) + 1.0;
    p.coord(3, 0) = p.coord(2, 0) + std::cos(beta);
    p.coord(3, 1) = p.coord(2, 1) + std::sin(beta);
    p.coord(5, 0) = p.coord(4, 0) + std::cos(beta);
    p.coord(5, 1) = p.coord(4, 1) - std::sin(beta);
    return Framework(k33_interleaved(), std::move(p));
}

Matrix k33_limit_lower_stiffness(const K33LimitParams& q) {
    const double a = q.a, b = q.b, f = q.f;
    const double s = std::sqrt(1.0 - a * a);
    const double t = 1.0 - 2.0 * a * a;
    const double rows[9][9] = {
        {2, 0, 0, 0, 0, -s, -s, s, s},
        {0, 2, 0, -b, b, -f, 0, f, 0},
        {0, 0, 2, b, -b, 0, -f, 0, f},
        {0, -b, b, 2, 0, 0, a, a, 0},
        {0, b, -b, 0, 2, a, 0, 0, a},
        {-s, -f, 0, 0, a, 2, t, 0, 0},
        {-s, 0, -f, a, 0, t, 2, 0, 0},
        {s, f, 0, a, 0, 0, 0, 2, t},
        {s, 0, f, 0, a, 0, 0, t, 2},
    };
    Matrix m(9, 9);
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 9; ++j) m(i, j) = rows[i][j];
    return m;
}

Spectrum k33_limit_spectrum(const K33LimitParams& q) {
    const double a2 = q.a * q.a, b2 = q.b * q.b, f2 = q.f * q.f;

    // factors of det(M - xI): four explicit eigenvalues, a quadratic and a cubic
    const std::vector<double> p1 = {-2.0 * f2 + 2.0, 2.0 * a2 - 5.0, 1.0};
    const std::vector<double> p2 = {8.0 * a2 * (b2 - 1.0), 2.0 * (3.0 * a2 - 2.0 * b2 - f2 + 4.0),
                                    -(2.0 * a2 + 5.0), 1.0};
    const std::vector<double> r1 = real_roots(p1, -1.0, 7.0);
    const std::vector<double> r2 = real_roots(p2, -1.0, 7.0);
    if (r1.size() != 2 || r2.size() != 3)
        throw std::runtime_error("k33_limit_spectrum: root isolation lost a root (degenerate parameters?)");

    Spectrum out;
    out.values = {2.0 * (1.0 - a2), 1.0 + 2.0 * a2, 2.0, 3.0};
    out.values.insert(out.values.end(), r1.begin(), r1.end());
    out.values.insert(out.values.end(), r2.begin(), r2.end());
    std::sort(out.values.begin(), out.values.end());
    return out;
}

std::vector<double> real_roots(const std::vector<double>& coeffs, double lo, double hi) {
    if (coeffs.empty()) throw std::invalid_argument("real_roots: empty coefficient list");
    if (!(lo < hi)) throw std::invalid_argument("real_roots: need lo < hi");
    std::size_t deg = coeffs.size() - 1;
    while (deg > 0 && coeffs[deg] == 0.0) --deg;
    if (deg == 0) return {};

    const auto eval = [&coeffs, deg](double x) {
        double y = coeffs[deg];
        for (std::size_t i = deg; i-- > 0;) y = y * x + coeffs[i];
        return y;
    };
    const auto eval_deriv = [&coeffs, deg](double x) {
        double y = static_cast<double>(deg) * coeffs[deg];
        for (std::size_t i = deg; i-- > 1;) y = y * x + static_cast<double>(i) * coeffs[i];
        return y;
    };

    // Grid fine enough that simple roots of a quartic cannot hide between
    // two sign-free samples at these interval lengths.
    const int cells = 4096;
    const double step = (hi - lo) / cells;
    std::vector<double> roots;
    double x0 = lo, f0 = eval(x0);
    for (int k = 1; k <= cells; ++k) {
        const double x1 = (k == cells) ? hi : lo + k * step;
        const double f1 = eval(x1);
        if (f0 == 0.0) roots.push_back(x0);
        if (f0 * f1 < 0.0) {
            double a = x0, b = x1, fa = f0;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (a + b);
                const double fm = eval(mid);
                if (fm == 0.0 || (b - a) < 1e-15 * std::max(1.0, std::abs(mid))) { a = b = mid; break; }
                if (fa * fm < 0.0) b = mid;
                else { a = mid; fa = fm; }
            }
            double r = 0.5 * (a + b);
            for (int it = 0; it < 4; ++it) {  // Newton polish
                const double dr = eval_deriv(r);
                if (dr == 0.0) break;
                const double rn = r - eval(r) / dr;
                if (rn < lo || rn > hi || !std::isfinite(rn)) break;
                r = rn;
            }
            roots.push_back(r);
        }
        x0 = x1;
        f0 = f1;
    }
    if (f0 == 0.0) roots.push_back(hi);
    std::sort(roots.begin(), roots.end());
    // collapse duplicates from a sample landing exactly on a root
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                roots.end());
    return roots;
}

OptimalK33Constants k33_optimal_constants() {
    const std::vector<double> quartic = {-9.0, 18.0, 47.0, -200.0, 176.0};
    const std::vector<double> roots = real_roots(quartic, 1e-12, 1.0 - 1e-12);
    if (roots.size() != 1)
        throw std::runtime_error("k33_optimal_constants: expected exactly one quartic root in (0, 1)");

    OptimalK33Constants out;
    out.lambda = roots.front();
    out.a0 = std::sqrt(out.lambda);
    const double a0 = out.a0;
    out.b0 = std::sqrt(6.0 * a0 * a0 * a0 * a0 - 8.0 * a0 * a0 + 3.0 +
                       2.0 * a0 * (a0 * a0 - 1.0) * std::sqrt(9.0 * a0 * a0 - 6.0));
    out.gap = 2.0 * (1.0 - out.lambda);
    return out;
}

Framework midpoint_embedding() {
    const double s3 = std::sqrt(3.0);
    Embedding p(2, {
        {0.0, s3},          // corner
        {-0.5, s3 / 2.0},   // midpoint of the left side
        {-1.0, 0.0},        // corner
        {0.0, 0.0},         // midpoint of the bottom side
        {1.0, 0.0},         // corner
        {0.5, s3 / 2.0},    // midpoint of the right side
    });
    return Framework(k33_interleaved(), std::move(p));
}

Framework star_embedding(int n, int d) {
    const Graph g = generalized_star(n, d);  // validates n, d
    Embedding p(d, n);
    for (int i = 0; i < d; ++i) p.coord(i, i) = 1.0;
    return Framework(std::move(g), std::move(p));
}

Spectrum star_spectrum_formula(int n, int d) {
    if (d < 1) throw std::invalid_argument("star_spectrum_formula: need d >= 1");
    if (n <= d) throw std::invalid_argument("star_spectrum_formula: need n >= d + 1");
    const int trivial = d * (d + 1) / 2;
    const int edge_count = d * n - trivial;

    Spectrum out;
    out.values.assign(static_cast<std::size_t>(trivial), 0.0);
    out.values.insert(out.values.end(), static_cast<std::size_t>(edge_count - d), 1.0);
    out.values.insert(out.values.end(), static_cast<std::size_t>(d - 1), n - d / 2.0);
    out.values.push_back(static_cast<double>(n));
    std::sort(out.values.begin(), out.values.end());
    return out;
}

}  // namespace rigidity
