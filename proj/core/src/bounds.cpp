#include "rigidity/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rigidity/framework.hpp"
#include "rigidity/spectra.hpp"

namespace rigidity {

bool ostrowski_check(const Matrix& h, const Matrix& s, double tol) {
    if (h.rows() != h.cols() || s.rows() != s.cols() || h.rows() != s.rows())
        throw std::invalid_argument("ostrowski_check: need square matrices of equal size");
    if (!h.symmetric(1e-12)) throw std::invalid_argument("ostrowski_check: H must be symmetric");

    const Spectrum sst = eigenvalues_sym(gram(s));
    const double lo = sst.values.front(), hi = sst.values.back();
    if (std::sqrt(std::max(lo, 0.0)) <= tol)
        throw std::invalid_argument("ostrowski_check: S is singular to tolerance");

    const Spectrum spec_h = eigenvalues_sym(h);
    const Spectrum spec_shs = eigenvalues_sym(symmetrized(s * h * s.transposed()));
    for (std::size_t i = 0; i < spec_h.values.size(); ++i) {
        const double li = spec_h.values[i], mi = spec_shs.values[i];
        if (mi < lo * li - tol) return false;
        if (mi > hi * li + tol) return false;
    }
    return true;
}

ScalingConstants scaling_constants(const Graph& g, const WeightFn& f) {
    if (f.size() != g.vertex_count())
        throw std::invalid_argument("scaling_constants: weight count differs from vertex count");
    if (g.edges().empty()) throw std::invalid_argument("scaling_constants: graph has no edges");

    double min_prod = std::numeric_limits<double>::infinity(), max_prod = 0.0;
    for (const Edge& e : g.edges()) {
        const double prod = f(e.u) * f(e.v);
        min_prod = std::min(min_prod, prod);
        max_prod = std::max(max_prod, prod);
    }
    double min_f = std::numeric_limits<double>::infinity(), max_f = 0.0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        min_f = std::min(min_f, f(v));
        max_f = std::max(max_f, f(v));
    }
    return {min_prod / max_f, max_prod / min_f};
}

ScalingConstants local_scaling_constants(const Graph& g, const WeightFn& f, int v) {
    if (f.size() != g.vertex_count())
        throw std::invalid_argument("local_scaling_constants: weight count differs from vertex count");
    const std::vector<int> nb = g.neighbors(v);
    if (nb.empty()) throw std::invalid_argument("local_scaling_constants: isolated vertex");
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (int u : nb) {
        lo = std::min(lo, f(u));
        hi = std::max(hi, f(u));
    }
    return {lo, hi};
}

GapBoundReport blowup_gap_lower_bound(const Graph& g, const Embedding& p, const WeightFn& a) {
    if (p.point_count() != g.vertex_count() || a.size() != g.vertex_count())
        throw std::invalid_argument("blowup_gap_lower_bound: size mismatch");
    if (!a.integer_valued()) throw std::invalid_argument("blowup_gap_lower_bound: copy counts must be integers");
    if (g.edges().empty()) throw std::invalid_argument("blowup_gap_lower_bound: graph has no edges");

    GapBoundReport rep;
    double max_a = 0.0, min_a = std::numeric_limits<double>::infinity();
    for (int v = 0; v < g.vertex_count(); ++v) {
        max_a = std::max(max_a, a(v));
        min_a = std::min(min_a, a(v));
    }
    double min_edge_prod = std::numeric_limits<double>::infinity();
    for (const Edge& e : g.edges()) min_edge_prod = std::min(min_edge_prod, a(e.u) * a(e.v));
    rep.h = min_edge_prod / max_a;
    rep.g = min_a;

    const Framework fw(g, p);
    rep.base_gap = spectral_gap(fw);
    rep.min_local = std::numeric_limits<double>::infinity();
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) { rep.min_local = std::min(rep.min_local, 0.0); continue; }
        rep.min_local = std::min(rep.min_local, eigenvalues_sym(local_stiffness(fw, v)).values.front());
    }
    rep.bound = std::min(rep.h * rep.base_gap, rep.g * rep.min_local);
    return rep;
}

WeightFn bipartite_partition_weights(int n, int m, int n0, int m0) {
    if (n0 < 1 || m0 < 1 || n < n0 || m < m0)
        throw std::invalid_argument("bipartite_partition_weights: need n >= n0 >= 1 and m >= m0 >= 1");
    std::vector<double> w;
    w.reserve(static_cast<std::size_t>(n0) + m0);
    const auto push_side = [&w](int total, int parts) {
        const int q = total / parts, r = total - q * parts;
        for (int i = 0; i < parts; ++i) w.push_back(static_cast<double>(i < r ? q + 1 : q));
    };
    push_side(n, n0);
    push_side(m, m0);
    return WeightFn(std::move(w));
}

namespace {

// Optimized K_{5,5} embeddings; sides {0..4}, {5..9}.
const Embedding& k55_base_d2() {
    static const Embedding p(2, {
        {0.0, 0.0},
        {-21.1521153004, 46.3456374209},
        {0.1564190972, 0.421467513},
        {-67.6050650164, 24.0271141104},
        {0.0496284145, 0.1312332404},
        {-0.0000017871, 0.0000006617},
        {-21.1521097826, 46.3456444883},
        {0.1564134151, 0.4214695353},
        {-67.6050626001, 24.0271500987},
        {0.0496445695, 0.131227325},
    });
    return p;
}

const Embedding& k55_base_d3() {
    static const Embedding p(3, {
        {0.0, 0.0, 0.0},
        {2.7293408266, -5.6302802394, 5.4822881749},
        {2.06615403, -1.6992607629, 0.2852673824},
        {8.7625036487, -3.3438898813, -1.0943816281},
        {5.9302132437, 3.0124055593, 6.0022584873},
        {2.8954859979, -5.2351324955, 5.5842950438},
        {6.197393444, 2.9766904751, 6.27433625},
        {6.96976192, -5.2762513597, 2.3713993733},
        {0.7519782126, 0.1600313582, -0.8109033932},
        {8.3720044593, -1.2879449195, 1.0858012249},
    });
    return p;
}

}  // namespace

Embedding knm_base_embedding(int d) {
    if (d == 2) return k55_base_d2();
    if (d == 3) return k55_base_d3();
    throw std::invalid_argument("knm_base_embedding: only d = 2 and d = 3 are available");
}

KnmBoundReport knm_lower_bound(int n, int m, int d) {
    if (d != 2 && d != 3) throw std::invalid_argument("knm_lower_bound: only d = 2 and d = 3 are supported");
    if (n <= 10 || m <= 10)
        throw OutOfHypothesisError("knm_lower_bound: certified only for n > 10 and m > 10");

    KnmBoundReport rep;
    rep.n = n;
    rep.m = m;
    rep.d = d;
    rep.q1 = n / 5;
    rep.q2 = m / 5;
    rep.base_required = (d == 2) ? 1.39 : 0.309;

    // Recompute the base certificate instead of trusting the shipped number.
    const Graph k55 = complete_bipartite(5, 5);
    const Embedding base = knm_base_embedding(d);
    const WeightFn counts = bipartite_partition_weights(n, m, 5, 5);
    const GapBoundReport full = blowup_gap_lower_bound(k55, base, counts);
    rep.base_value = std::min(full.base_gap, full.min_local);
    rep.blowup_bound = full.bound;
    if (rep.base_value < rep.base_required - 1e-6)
        throw std::runtime_error("knm_lower_bound: shipped base embedding fails its certificate, recomputed " +
                                 std::to_string(rep.base_value));

    rep.bound = rep.base_required * (std::min(rep.q1, rep.q2) - 1);
    return rep;
}

}  // namespace rigidity
