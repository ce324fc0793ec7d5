// Acceptance gate: twelve numbered criteria, one PASS/FAIL line each.
// Exit code 0 only if every criterion passes. Run via ctest or directly.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rigidity/rigidity.hpp"

using namespace rigidity;

namespace {

bool g_all_ok = true;

void report(int k, bool ok, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", k, detail.c_str());
    g_all_ok = g_all_ok && ok;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Instance {
    Graph g;
    Embedding p;
    WeightFn a;
};

Instance draw_instance(Rng& rng) {
    Graph g = oracles::random_graph(rng);
    const int d = static_cast<int>(rng.uniform_int(1, 3));
    Embedding p = oracles::random_points(rng, g.vertex_count(), d);
    WeightFn a = oracles::random_copy_counts(rng, g.vertex_count());
    return {std::move(g), std::move(p), std::move(a)};
}

int count_zeros(const Spectrum& s, double cut) {
    int zeros = 0;
    for (double v : s.values) zeros += std::abs(v) <= cut ? 1 : 0;
    return zeros;
}

double base_value(int d) {
    const Framework fw(complete_bipartite(5, 5), knm_base_embedding(d));
    double value = spectral_gap(fw);
    for (int v = 0; v < 10; ++v)
        value = std::min(value, eigenvalues_sym(local_stiffness(fw, v)).values[0]);
    return value;
}

void criterion_1_and_3() {
    const auto t0 = std::chrono::steady_clock::now();
    bool spectra_ok = true;
    double worst = 0.0;
    {
        Rng rng(20250817);
        for (int trial = 0; trial < 200; ++trial) {
            const Instance inst = draw_instance(rng);
            const BlowupCheck chk = verify_blowup_theorem(inst.g, inst.p, inst.a, 1e-8);
            spectra_ok = spectra_ok && chk.equal;
            worst = std::max(worst, chk.max_pairwise_gap);
        }
    }
    const double elapsed = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "blow-up spectra match on 200 instances (worst gap %.3g, %.2f s)", worst,
                  elapsed);
    report(1, spectra_ok && elapsed < 30.0, buf);

    bool zeros_ok = true;
    {
        Rng rng(20250817);  // same stream: same 200 instances
        for (int trial = 0; trial < 200; ++trial) {
            const Instance inst = draw_instance(rng);
            const BlowupResult big = blow_up(inst.g, inst.a);
            const Embedding bp = blow_up_embedding(inst.p, inst.a, big.index);
            const Spectrum direct =
                eigenvalues_sym(lower_stiffness(Framework(big.graph, bp)));
            const Spectrum rhs = lower_blowup_spectrum_rhs(inst.g, inst.p, inst.a);
            double top = 1.0;
            for (double v : direct.values) top = std::max(top, std::abs(v));
            for (double v : rhs.values) top = std::max(top, std::abs(v));
            const double cut = 1e-10 * top;
            zeros_ok = zeros_ok && direct.values.size() == rhs.values.size() &&
                       count_zeros(direct, cut) == count_zeros(rhs, cut);
        }
    }
    report(3, zeros_ok, "edge-matrix blow-up zero multiplicities agree exactly on the same 200");
}

void criterion_2() {
    Rng rng(2);
    bool ok = true;
    for (int n : {3, 4}) {
        const Graph g = complete_graph(n);
        const Embedding p = oracles::random_points(rng, n, 2);
        const auto rows = uniform_blowup_gap_scaling(g, p, 5);
        const double gap2 = rows.front().second;
        for (const auto& [k, gap] : rows) {
            const double target = k / 2.0;
            ok = ok && std::abs(gap / gap2 - target) <= 1e-8 * target;
        }
    }
    report(2, ok, "uniform blow-up gaps scale as k/2 for K3 and K4 in the plane");
}

void criterion_4_and_5() {
    const auto t0 = std::chrono::steady_clock::now();
    const double v2 = base_value(2);
    const double elapsed = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof buf, "planar K55 base value %.10f >= 1.39 (%.3f s)", v2, elapsed);
    report(4, v2 >= 1.39 - 1e-6 && elapsed < 1.0, buf);

    const double v3 = base_value(3);
    std::snprintf(buf, sizeof buf, "spatial K55 base value %.10f >= 0.309", v3);
    report(5, v3 >= 0.309 - 1e-6, buf);
}

void criterion_6_and_7() {
    const OptimalK33Constants best = k33_optimal_constants();
    const Spectrum s = k33_limit_spectrum(k33_limit_params(best.a0, best.b0));
    const double lam1 = s.values.front();
    const bool six = std::abs(lam1 - 2.0 * (1.0 - best.lambda)) <= 1e-9 &&
                     std::abs(lam1 - 0.6192309) <= 1e-6;
    char buf[160];
    std::snprintf(buf, sizeof buf, "limit matrix least eigenvalue %.10f = 2(1-lambda)", lam1);
    report(6, six, buf);

    const bool seven = std::abs(best.lambda - 0.6903845) <= 1e-6 &&
                       std::abs(best.a0 - 0.830893) <= 1e-5 &&
                       std::abs(best.b0 - 0.314632) <= 1e-5;
    std::snprintf(buf, sizeof buf, "quartic root %.10f and argmax pair (%.8f, %.8f)", best.lambda,
                  best.a0, best.b0);
    report(7, seven, buf);
}

void criterion_8() {
    Rng rng(8);
    bool ok = true;
    for (int trial = 0; trial < 50; ++trial) {
        const K33LimitParams q =
            k33_limit_params(rng.uniform(0.05, 0.95), rng.uniform(0.05, 0.95));
        ok = ok && multiset_equal(k33_limit_spectrum(q),
                                  eigenvalues_sym(k33_limit_lower_stiffness(q)), 1e-8);
    }
    report(8, ok, "closed-form limit spectra match numeric eigenvalues on 50 parameter draws");
}

void criterion_9() {
    const Spectrum s = eigenvalues_sym(stiffness(midpoint_embedding()));
    const Spectrum expected{{0.0, 0.0, 0.0, 0.5, 0.5, 0.5, 1.5, 1.5, 2.5, 3.0, 4.0, 4.0},
                            kSpectrumTol};
    report(9, multiset_equal(s, expected, 1e-8),
           "triangle-with-midpoints spectrum is {0^3, 0.5^3, 1.5^2, 2.5, 3, 4^2}");
}

void criterion_10() {
    bool ok = true;
    for (int d = 1; d <= 4; ++d)
        for (int n = d + 1; n <= 10; ++n)
            ok = ok && multiset_equal(eigenvalues_sym(stiffness(star_embedding(n, d))),
                                      star_spectrum_formula(n, d), 1e-8);
    const Spectrum spot = star_spectrum_formula(4, 1);
    ok = ok && spot.values == std::vector<double>{0.0, 1.0, 1.0, 4.0};
    report(10, ok, "star spectra formula matches direct computation for d <= 4, n <= 10");
}

void criterion_11() {
    const auto t0 = std::chrono::steady_clock::now();
    const OptimizerConfig cfg;  // defaults: the calibrated configuration
    bool ok = true;
    double k33_gap = 0.0;
    for (int n : {4, 5, 6}) {
        const double g1 = maximize_spectral_gap(complete_graph(n), 1, cfg).gap;
        ok = ok && g1 >= 0.99 * n;
        const double g2 = maximize_spectral_gap(complete_graph(n), 2, cfg).gap;
        ok = ok && g2 >= 0.95 * (n / 2.0);
    }
    k33_gap = maximize_spectral_gap(complete_bipartite(3, 3), 2, cfg).gap;
    ok = ok && k33_gap >= 0.60;
    const double elapsed = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "gap search reaches the K_n targets and %.4f on K33 (%.1f s)", k33_gap, elapsed);
    report(11, ok && elapsed < 60.0, buf);
}

void criterion_12() {
    bool ok = true;
    std::string which = "all four property suites hold on 200 instances each";

    {  // congruence sandwich
        Rng rng(121);
        for (int trial = 0; trial < 200 && ok; ++trial) {
            const int n = static_cast<int>(rng.uniform_int(2, 7));
            const Matrix h = oracles::random_psd(rng, n);
            Matrix s = oracles::random_matrix(rng, n, n);
            for (std::size_t i = 0; i < s.rows(); ++i) s(i, i) += 4.0;
            ok = ostrowski_check(h, s, 1e-9);
        }
        if (!ok) which = "congruence sandwich failed";
    }
    if (ok) {  // weight scaling sandwich
        Rng rng(122);
        int done = 0;
        while (done < 200 && ok) {
            const Graph g = oracles::random_graph(rng);
            if (g.edge_count() == 0) continue;
            const int d = static_cast<int>(rng.uniform_int(1, 3));
            const Framework fw(g, oracles::random_points(rng, g.vertex_count(), d));
            const WeightFn f = oracles::random_weights(rng, g.vertex_count());
            const ScalingConstants sc = scaling_constants(g, f);
            const Spectrum plain = eigenvalues_sym(stiffness(fw));
            const Spectrum weighted = eigenvalues_sym(stiffness(fw, f));
            for (std::size_t i = 0; i < plain.values.size(); ++i) {
                ok = ok && weighted.values[i] >= sc.lower * plain.values[i] - 1e-9;
                ok = ok && weighted.values[i] <= sc.upper * plain.values[i] + 1e-9;
            }
            ++done;
        }
        if (!ok) which = "weight scaling sandwich failed";
    }
    if (ok) {  // blow-up gap bound against the truth
        Rng rng(123);
        int done = 0;
        while (done < 200 && ok) {
            const Graph g = oracles::random_graph(rng, 6);
            if (g.edge_count() == 0) continue;
            const int d = static_cast<int>(rng.uniform_int(1, 2));
            const Embedding p = oracles::random_points(rng, g.vertex_count(), d);
            const WeightFn a = oracles::random_copy_counts(rng, g.vertex_count());
            const GapBoundReport rep = blowup_gap_lower_bound(g, p, a);
            const BlowupResult big = blow_up(g, a);
            const Embedding bp = blow_up_embedding(p, a, big.index);
            ok = rep.bound <= spectral_gap(Framework(big.graph, bp)) + 1e-8;
            ++done;
        }
        if (!ok) which = "gap lower bound exceeded the true gap";
    }
    if (ok) {  // vertex-indexed vs edge-indexed spectra
        Rng rng(124);
        for (int trial = 0; trial < 200 && ok; ++trial) {
            const Graph g = oracles::random_graph(rng);
            const int d = static_cast<int>(rng.uniform_int(1, 3));
            const Framework fw(g, oracles::random_points(rng, g.vertex_count(), d));
            const WeightFn f = oracles::random_weights(rng, g.vertex_count());
            const Spectrum upper = eigenvalues_sym(stiffness(fw, f));
            const Spectrum lowerv = eigenvalues_sym(lower_stiffness(fw, f));
            double top = 1.0;
            for (double v : upper.values) top = std::max(top, std::abs(v));
            const double cut = 1e-10 * top;
            std::vector<double> nz_u, nz_l;
            for (double v : upper.values)
                if (std::abs(v) > cut) nz_u.push_back(v);
            for (double v : lowerv.values)
                if (std::abs(v) > cut) nz_l.push_back(v);
            ok = nz_u.size() == nz_l.size();
            for (std::size_t i = 0; ok && i < nz_u.size(); ++i)
                ok = std::abs(nz_u[i] - nz_l[i]) <= 1e-8 * std::max(1.0, top);
            const int zeros_u = static_cast<int>(upper.values.size() - nz_u.size());
            const int zeros_l = static_cast<int>(lowerv.values.size() - nz_l.size());
            ok = ok && zeros_l - zeros_u == g.edge_count() - d * g.vertex_count();
        }
        if (!ok) which = "vertex/edge spectra mismatch";
    }

    report(12, ok, which);
}

}  // namespace

int main() {
    criterion_1_and_3();
    criterion_2();
    criterion_4_and_5();
    criterion_6_and_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    return g_all_ok ? 0 : 1;
}
