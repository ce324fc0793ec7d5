#include "rigidity/framework.hpp"

#include <cmath>
#include <stdexcept>

namespace rigidity {

namespace {

double norm(std::span<const double> x) {
    double s = 0.0;
    for (double xi : x) s += xi * xi;
    return std::sqrt(s);
}

void check_weights(const Framework& fw, const WeightFn& f) {
    if (f.size() != fw.graph.vertex_count())
        throw std::invalid_argument("weight count differs from vertex count");
}

}  // namespace

Framework::Framework(Graph g, Embedding p) : graph(std::move(g)), points(std::move(p)) {
    if (points.point_count() != graph.vertex_count())
        throw std::invalid_argument("framework: embedding size differs from vertex count");
}

bool coincident(const Embedding& p, int u, int v) {
    const auto pu = p.point(u), pv = p.point(v);
    double dist2 = 0.0;
    for (int i = 0; i < p.dimension(); ++i) {
        const double t = pu[static_cast<std::size_t>(i)] - pv[static_cast<std::size_t>(i)];
        dist2 += t * t;
    }
    const double thresh = 1e-14 * (1.0 + norm(pu) + norm(pv));
    return std::sqrt(dist2) <= thresh;
}

std::vector<double> direction(const Embedding& p, int u, int v) {
    if (u == v) throw std::invalid_argument("direction: endpoints must differ");
    const auto pu = p.point(u), pv = p.point(v);
    std::vector<double> w(static_cast<std::size_t>(p.dimension()));
    for (int i = 0; i < p.dimension(); ++i)
        w[static_cast<std::size_t>(i)] = pu[static_cast<std::size_t>(i)] - pv[static_cast<std::size_t>(i)];
    if (coincident(p, u, v)) return std::vector<double>(w.size(), 0.0);
    const double len = norm(w);
    for (double& wi : w) wi /= len;
    return w;
}

Matrix rigidity_matrix(const Framework& fw, const WeightFn& f) {
    check_weights(fw, f);
    const int d = fw.dimension();
    Matrix r(static_cast<std::size_t>(d) * fw.graph.vertex_count(), fw.graph.edges().size());
    for (std::size_t e = 0; e < fw.graph.edges().size(); ++e) {
        const auto [u, v] = fw.graph.edges()[e];
        const std::vector<double> duv = direction(fw.points, u, v);
        const double su = std::sqrt(f(v)), sv = std::sqrt(f(u));
        for (int i = 0; i < d; ++i) {
            r(static_cast<std::size_t>(d) * u + i, e) = su * duv[static_cast<std::size_t>(i)];
            r(static_cast<std::size_t>(d) * v + i, e) = -sv * duv[static_cast<std::size_t>(i)];
        }
    }
    return r;
}

Matrix rigidity_matrix(const Framework& fw) {
    return rigidity_matrix(fw, WeightFn::ones(fw.graph.vertex_count()));
}

Matrix stiffness(const Framework& fw, const WeightFn& f) { return gram(rigidity_matrix(fw, f)); }
Matrix stiffness(const Framework& fw) { return gram(rigidity_matrix(fw)); }

Matrix local_rigidity_matrix(const Framework& fw, int v, const WeightFn& f) {
    check_weights(fw, f);
    const std::vector<int> nb = fw.graph.neighbors(v);
    if (nb.empty()) throw std::invalid_argument("local rigidity matrix: isolated vertex");
    const int d = fw.dimension();
    Matrix r(static_cast<std::size_t>(d), nb.size());
    for (std::size_t c = 0; c < nb.size(); ++c) {
        const std::vector<double> dvu = direction(fw.points, v, nb[c]);
        const double s = std::sqrt(f(nb[c]));
        for (int i = 0; i < d; ++i) r(static_cast<std::size_t>(i), c) = s * dvu[static_cast<std::size_t>(i)];
    }
    return r;
}

Matrix local_rigidity_matrix(const Framework& fw, int v) {
    return local_rigidity_matrix(fw, v, WeightFn::ones(fw.graph.vertex_count()));
}

Matrix local_stiffness(const Framework& fw, int v, const WeightFn& f) {
    return gram(local_rigidity_matrix(fw, v, f));
}

Matrix local_stiffness(const Framework& fw, int v) {
    return gram(local_rigidity_matrix(fw, v));
}

Matrix lower_stiffness(const Framework& fw, const WeightFn& f) { return gram_t(rigidity_matrix(fw, f)); }
Matrix lower_stiffness(const Framework& fw) { return gram_t(rigidity_matrix(fw)); }

double edge_angle_cos(const Embedding& p, Edge e1, Edge e2) {
    if (e1.u > e1.v) std::swap(e1.u, e1.v);
    if (e2.u > e2.v) std::swap(e2.u, e2.v);
    int shared = -1, a = -1, b = -1;
    if (e1.u == e2.u && e1.v != e2.v) { shared = e1.u; a = e1.v; b = e2.v; }
    else if (e1.u == e2.v) { shared = e1.u; a = e1.v; b = e2.u; }
    else if (e1.v == e2.u) { shared = e1.v; a = e1.u; b = e2.v; }
    else if (e1.v == e2.v && e1.u != e2.u) { shared = e1.v; a = e1.u; b = e2.u; }
    else throw std::invalid_argument("edge_angle_cos: edges must share exactly one vertex");

    const std::vector<double> da = direction(p, shared, a);
    const std::vector<double> db = direction(p, shared, b);
    double dot = 0.0;
    for (std::size_t i = 0; i < da.size(); ++i) dot += da[i] * db[i];
    if (dot > 1.0) dot = 1.0;
    if (dot < -1.0) dot = -1.0;
    return dot;
}

Matrix lower_stiffness_closed_form(const Framework& fw, const WeightFn& f) {
    check_weights(fw, f);
    const auto& edges = fw.graph.edges();
    Matrix out(edges.size(), edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto [u, v] = edges[i];
        out(i, i) = coincident(fw.points, u, v) ? 0.0 : f(u) + f(v);
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto [x, y] = edges[j];
            int shared = -1, other_i = -1, other_j = -1;
            if (u == x && v != y) { shared = u; other_i = v; other_j = y; }
            else if (u == y) { shared = u; other_i = v; other_j = x; }
            else if (v == x) { shared = v; other_i = u; other_j = y; }
            else if (v == y && u != x) { shared = v; other_i = u; other_j = x; }
            if (shared < 0) continue;
            const double cosang = edge_angle_cos(fw.points, edges[i], edges[j]);
            out(i, j) = out(j, i) = std::sqrt(f(other_i) * f(other_j)) * cosang;
        }
    }
    return out;
}

std::vector<double> apply_stiffness(const Framework& fw, const WeightFn& f, const std::vector<double>& phi) {
    check_weights(fw, f);
    const int d = fw.dimension();
    const std::size_t dim = static_cast<std::size_t>(d) * fw.graph.vertex_count();
    if (phi.size() != dim) throw std::invalid_argument("apply_stiffness: vector length must be d|V|");

    std::vector<double> out(dim, 0.0);
    for (const Edge& e : fw.graph.edges()) {
        const std::vector<double> duv = direction(fw.points, e.u, e.v);
        const double cross = std::sqrt(f(e.u) * f(e.v));
        double proj_u = 0.0, proj_v = 0.0;  // d_uv . phi(u), d_uv . phi(v)
        for (int i = 0; i < d; ++i) {
            proj_u += duv[static_cast<std::size_t>(i)] * phi[static_cast<std::size_t>(d) * e.u + i];
            proj_v += duv[static_cast<std::size_t>(i)] * phi[static_cast<std::size_t>(d) * e.v + i];
        }
        for (int i = 0; i < d; ++i) {
            out[static_cast<std::size_t>(d) * e.u + i] += duv[static_cast<std::size_t>(i)] * (f(e.v) * proj_u - cross * proj_v);
            out[static_cast<std::size_t>(d) * e.v + i] += duv[static_cast<std::size_t>(i)] * (f(e.u) * proj_v - cross * proj_u);
        }
    }
    return out;
}

bool weight_factorization_check(const Framework& fw, const WeightFn& f, double tol) {
    check_weights(fw, f);
    const int d = fw.dimension();
    const Matrix rf = rigidity_matrix(fw, f);
    const Matrix r = rigidity_matrix(fw);

    // D_hat = diag(1/sqrt(f(v))) per axis row, D_tilde = diag(sqrt(f(u) f(v))) per edge
    for (std::size_t e = 0; e < fw.graph.edges().size(); ++e) {
        const auto [u, v] = fw.graph.edges()[e];
        const double de = std::sqrt(f(u) * f(v));
        for (int w = 0; w < fw.graph.vertex_count(); ++w)
            for (int i = 0; i < d; ++i) {
                const std::size_t row = static_cast<std::size_t>(d) * w + i;
                const double lhs = rf(row, e);
                const double rhs = (1.0 / std::sqrt(f(w))) * r(row, e) * de;
                if (std::abs(lhs - rhs) > tol) return false;
            }
    }

    for (int v = 0; v < fw.graph.vertex_count(); ++v) {
        const std::vector<int> nb = fw.graph.neighbors(v);
        if (nb.empty()) continue;
        const Matrix lf = local_rigidity_matrix(fw, v, f);
        const Matrix l = local_rigidity_matrix(fw, v);
        for (std::size_t c = 0; c < nb.size(); ++c) {
            const double dc = std::sqrt(f(nb[c]));
            for (int i = 0; i < d; ++i)
                if (std::abs(lf(static_cast<std::size_t>(i), c) - l(static_cast<std::size_t>(i), c) * dc) > tol)
                    return false;
        }
    }
    return true;
}

}  // namespace rigidity
