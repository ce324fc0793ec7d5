#include "rigidity/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "rigidity/framework.hpp"
#include "rigidity/random.hpp"
#include "rigidity/spectra.hpp"

namespace rigidity {

Embedding random_generic_embedding(const Graph& g, int d, std::uint64_t seed) {
    if (d < 1) throw std::invalid_argument("random_generic_embedding: dimension must be >= 1");
    Rng rng(seed);
    Embedding p(d, g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int i = 0; i < d; ++i) p.coord(v, i) = rng.uniform01();
    return p;
}

namespace detail {

namespace {

void clamp_coords(std::vector<double>& x, double cap) {
    for (double& xi : x) xi = std::clamp(xi, -cap, cap);
}

}  // namespace

NelderMeadTrace nelder_mead_maximize(const std::vector<double>& x0, double step,
                                     double (*objective)(const std::vector<double>&, const void*),
                                     const void* ctx, int max_iters, double tol, double coord_cap) {
    const std::size_t m = x0.size();
    if (m == 0) throw std::invalid_argument("nelder_mead_maximize: empty search space");

    // Internally minimize g = -objective with the dimension-adaptive
    // coefficient family; plain coefficients for 1-d problems.
    const double alpha = 1.0;
    const double beta = m > 1 ? 1.0 + 2.0 / static_cast<double>(m) : 2.0;
    const double gamma = m > 1 ? 0.75 - 0.5 / static_cast<double>(m) : 0.5;
    const double delta = m > 1 ? 1.0 - 1.0 / static_cast<double>(m) : 0.5;

    const auto eval = [&](std::vector<double>& x) {
        clamp_coords(x, coord_cap);
        return -objective(x, ctx);
    };

    NelderMeadTrace trace;
    std::vector<std::vector<double>> pts;
    std::vector<double> g;

    std::vector<double> base = x0;
    clamp_coords(base, coord_cap);
    const auto build_simplex = [&](const std::vector<double>& center, double h) {
        pts.assign(1, center);
        g.assign(1, eval(pts[0]));
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<double> x = center;
            x[i] += h;
            pts.push_back(x);
            g.push_back(eval(pts.back()));
        }
    };
    build_simplex(base, step);

    double best_f = -*std::min_element(g.begin(), g.end());
    std::vector<double> best_x = pts[static_cast<std::size_t>(
        std::min_element(g.begin(), g.end()) - g.begin())];
    trace.best_history.reserve(static_cast<std::size_t>(max_iters));

    std::vector<std::size_t> order(m + 1);
    double current_step = step;
    for (int iter = 0; iter < max_iters; ++iter) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&g](std::size_t i, std::size_t j) { return g[i] < g[j]; });
        const std::size_t ibest = order[0], iworst = order[m];
        const std::size_t isecond = m >= 1 ? order[m - 1] : order[0];

        if (g[iworst] - g[ibest] <= tol) {
            // Converged; spend the remaining budget polishing from the best
            // point with a tighter simplex.
            current_step *= 0.3;
            if (current_step < 1e-10) {
                trace.best_history.push_back(best_f);
                continue;
            }
            build_simplex(pts[ibest], current_step);
            for (std::size_t k = 0; k <= m; ++k)
                if (g[k] < -best_f) { best_f = -g[k]; best_x = pts[k]; }
            trace.best_history.push_back(best_f);
            continue;
        }

        std::vector<double> centroid(m, 0.0);
        for (std::size_t k = 0; k <= m; ++k) {
            if (k == iworst) continue;
            for (std::size_t i = 0; i < m; ++i) centroid[i] += pts[k][i];
        }
        for (double& c : centroid) c /= static_cast<double>(m);

        const auto blend = [&centroid, m](const std::vector<double>& towards, double coef) {
            std::vector<double> x(m);
            for (std::size_t i = 0; i < m; ++i) x[i] = centroid[i] + coef * (towards[i] - centroid[i]);
            return x;
        };

        std::vector<double> xr = blend(pts[iworst], -alpha);
        const double gr = eval(xr);

        if (gr < g[ibest]) {
            std::vector<double> xe = blend(xr, beta);
            const double ge = eval(xe);
            if (ge < gr) { pts[iworst] = std::move(xe); g[iworst] = ge; }
            else { pts[iworst] = std::move(xr); g[iworst] = gr; }
        } else if (gr < g[isecond]) {
            pts[iworst] = std::move(xr);
            g[iworst] = gr;
        } else {
            bool accepted = false;
            if (gr < g[iworst]) {  // outside contraction
                std::vector<double> xc = blend(xr, gamma);
                const double gc = eval(xc);
                if (gc <= gr) { pts[iworst] = std::move(xc); g[iworst] = gc; accepted = true; }
            } else {  // inside contraction
                std::vector<double> xc = blend(pts[iworst], gamma);
                const double gc = eval(xc);
                if (gc < g[iworst]) { pts[iworst] = std::move(xc); g[iworst] = gc; accepted = true; }
            }
            if (!accepted) {
                for (std::size_t k = 0; k <= m; ++k) {
                    if (k == ibest) continue;
                    for (std::size_t i = 0; i < m; ++i)
                        pts[k][i] = pts[ibest][i] + delta * (pts[k][i] - pts[ibest][i]);
                    g[k] = eval(pts[k]);
                }
            }
        }

        for (std::size_t k = 0; k <= m; ++k)
            if (g[k] < -best_f) { best_f = -g[k]; best_x = pts[k]; }
        trace.best_history.push_back(best_f);
    }

    trace.best_f = best_f;
    trace.best_x = std::move(best_x);
    return trace;
}

}  // namespace detail

namespace {

struct GapObjectiveCtx {
    const Graph* graph = nullptr;
    int d = 0;
    std::size_t trivial = 0;
    std::vector<std::pair<int, int>> free_slots;  // (vertex, axis) per free coordinate
};

Embedding reconstruct(const GapObjectiveCtx& ctx, const std::vector<double>& x) {
    Embedding p(ctx.d, ctx.graph->vertex_count());
    for (std::size_t i = 0; i < ctx.free_slots.size(); ++i)
        p.coord(ctx.free_slots[i].first, ctx.free_slots[i].second) = x[i];
    return p;
}

double gap_objective(const std::vector<double>& x, const void* ctx_raw) {
    const auto& ctx = *static_cast<const GapObjectiveCtx*>(ctx_raw);
    const Embedding p = reconstruct(ctx, x);
    const Spectrum s = eigenvalues_sym(stiffness(Framework(*ctx.graph, p)));
    return s.values[ctx.trivial];
}

}  // namespace

GapCertificate maximize_spectral_gap(const Graph& g, int d, const OptimizerConfig& cfg) {
    if (d < 1) throw std::invalid_argument("maximize_spectral_gap: dimension must be >= 1");
    if (cfg.restarts < 1 || cfg.max_iters < 1)
        throw std::invalid_argument("maximize_spectral_gap: need at least one restart and one iteration");
    const int n = g.vertex_count();
    const std::size_t trivial = static_cast<std::size_t>(d) * (d + 1) / 2;
    if (static_cast<std::size_t>(d) * n < trivial + 1)
        throw std::invalid_argument("maximize_spectral_gap: spectral gap undefined, d|V| <= d(d+1)/2");

    GapObjectiveCtx ctx;
    ctx.graph = &g;
    ctx.d = d;
    ctx.trivial = trivial;
    for (int v = 0; v < n; ++v)
        for (int j = 0; j < d; ++j)
            if (!(v <= d && j >= v)) ctx.free_slots.emplace_back(v, j);

    double best_gap = -1.0;
    std::vector<double> best_x;
    for (int r = 0; r < cfg.restarts; ++r) {
        Rng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(r)));
        std::vector<double> x0(ctx.free_slots.size());
        for (double& xi : x0) xi = rng.uniform(-cfg.half_width, cfg.half_width);
        const auto trace = detail::nelder_mead_maximize(x0, 0.5 * cfg.half_width, &gap_objective,
                                                        &ctx, cfg.max_iters, cfg.tol, cfg.coord_cap);
        if (trace.best_f > best_gap) {
            best_gap = trace.best_f;
            best_x = trace.best_x;
        }
    }

    GapCertificate cert;
    cert.embedding = reconstruct(ctx, best_x);
    cert.gap = spectral_gap(Framework(g, cert.embedding));
    cert.graph_hash = g.hash();
    cert.dimension = d;
    return cert;
}

}  // namespace rigidity
