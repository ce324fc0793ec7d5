#include "rigidity/blowup.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "rigidity/framework.hpp"

namespace rigidity {

namespace {

void check_blowup_args(const Graph& g, const Embedding& p, const WeightFn& a) {
    if (p.point_count() != g.vertex_count() || a.size() != g.vertex_count())
        throw std::invalid_argument("blow-up spectrum: size mismatch");
    if (!a.integer_valued()) throw std::invalid_argument("blow-up spectrum: copy counts must be integers");
    if (p.dimension() < 1) throw std::invalid_argument("blow-up spectrum: dimension must be >= 1");
}

}  // namespace

Spectrum blowup_spectrum_rhs(const Graph& g, const Embedding& p, const WeightFn& a) {
    check_blowup_args(g, p, a);
    const Framework fw(g, p);
    const int d = p.dimension();

    Spectrum acc;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int mult = static_cast<int>(a(v)) - 1;
        if (mult == 0) continue;
        Spectrum local;
        if (g.degree(v) == 0) {
            local.values.assign(static_cast<std::size_t>(d), 0.0);  // empty neighbor sum
        } else {
            local = eigenvalues_sym(local_stiffness(fw, v, a));
        }
        acc = multiset_union(acc, multiset_repeat(local, mult));
    }
    return multiset_union(acc, eigenvalues_sym(stiffness(fw, a)));
}

BlowupCheck verify_blowup_theorem(const Graph& g, const Embedding& p, const WeightFn& a, double tol) {
    check_blowup_args(g, p, a);
    BlowupCheck out;

    const BlowupResult blown = blow_up(g, a);
    const Embedding pb = blow_up_embedding(p, a, blown.index);
    out.lhs = eigenvalues_sym(stiffness(Framework(blown.graph, pb)));
    out.rhs = blowup_spectrum_rhs(g, p, a);

    out.max_pairwise_gap = 0.0;
    if (out.lhs.values.size() == out.rhs.values.size()) {
        for (std::size_t i = 0; i < out.lhs.values.size(); ++i)
            out.max_pairwise_gap = std::max(out.max_pairwise_gap,
                                            std::abs(out.lhs.values[i] - out.rhs.values[i]));
        out.equal = out.max_pairwise_gap <= tol;
    } else {
        out.max_pairwise_gap = std::numeric_limits<double>::infinity();
        out.equal = false;
    }
    return out;
}

std::vector<std::pair<int, double>> uniform_blowup_gap_scaling(const Graph& g, const Embedding& p,
                                                               int k_max) {
    if (k_max < 2) throw std::invalid_argument("uniform_blowup_gap_scaling: need k_max >= 2");
    if (p.point_count() != g.vertex_count())
        throw std::invalid_argument("uniform_blowup_gap_scaling: size mismatch");

    std::vector<std::pair<int, double>> gaps;
    for (int k = 2; k <= k_max; ++k) {
        const WeightFn a(std::vector<double>(static_cast<std::size_t>(g.vertex_count()),
                                             static_cast<double>(k)));
        const BlowupResult blown = blow_up(g, a);
        const Embedding pb = blow_up_embedding(p, a, blown.index);
        gaps.emplace_back(k, spectral_gap(Framework(blown.graph, pb)));
    }
    return gaps;
}

Spectrum lower_blowup_spectrum_rhs(const Graph& g, const Embedding& p, const WeightFn& a) {
    check_blowup_args(g, p, a);
    const Framework fw(g, p);

    Spectrum acc;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int mult = static_cast<int>(a(v)) - 1;
        if (mult == 0 || g.degree(v) == 0) continue;
        const Spectrum local = eigenvalues_sym(gram_t(local_rigidity_matrix(fw, v, a)));
        acc = multiset_union(acc, multiset_repeat(local, mult));
    }
    acc = multiset_union(acc, eigenvalues_sym(lower_stiffness(fw, a)));

    std::size_t extra_zeros = 0;
    for (const Edge& e : g.edges())
        extra_zeros += static_cast<std::size_t>(a(e.u) - 1) * static_cast<std::size_t>(a(e.v) - 1);
    Spectrum zeros;
    zeros.values.assign(extra_zeros, 0.0);
    return multiset_union(acc, zeros);
}

}  // namespace rigidity
