#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "rigidity/framework.hpp"
#include "rigidity/spectra.hpp"

using namespace rigidity;

namespace {

Framework equilateral_triangle() {
    return Framework(complete_graph(3),
                     Embedding(2, {{0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}}));
}

}  // namespace

TEST_CASE("direction vectors") {
    const Embedding p(2, {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}});
    CHECK(direction(p, 1, 0) == std::vector<double>{1.0, 0.0});
    CHECK(direction(p, 0, 1) == std::vector<double>{-1.0, 0.0});

    const double inv = 1.0 / std::sqrt(2.0);
    const std::vector<double> diag = direction(p, 2, 0);
    CHECK(diag[0] == doctest::Approx(inv).epsilon(1e-15));
    CHECK(diag[1] == doctest::Approx(inv).epsilon(1e-15));

    const Embedding q(2, {{0.5, 0.5}, {0.5, 0.5}});
    CHECK(direction(q, 0, 1) == std::vector<double>{0.0, 0.0});
    CHECK(coincident(q, 0, 1));

    CHECK_THROWS_AS(direction(p, 1, 1), std::invalid_argument);
}

TEST_CASE("rigidity matrix of a single edge") {
    const Graph k2 = complete_graph(2);
    const Embedding p(1, {{0.0}, {1.0}});
    const Matrix r = rigidity_matrix(Framework(k2, p));
    REQUIRE(r.rows() == 2);
    REQUIRE(r.cols() == 1);
    CHECK(r(0, 0) == -1.0);
    CHECK(r(1, 0) == 1.0);

    const Matrix rw = rigidity_matrix(Framework(k2, p), WeightFn({4.0, 9.0}));
    CHECK(rw(0, 0) == -3.0);
    CHECK(rw(1, 0) == 2.0);
}

TEST_CASE("coincident endpoints give a zero column") {
    const Graph k2 = complete_graph(2);
    const Embedding p(3, {{0.2, 0.3, 0.4}, {0.2, 0.3, 0.4}});
    const Matrix r = rigidity_matrix(Framework(k2, p));
    CHECK(r.max_abs() == 0.0);
}

TEST_CASE("stiffness of one edge") {
    const Graph k2 = complete_graph(2);
    const Framework fw(k2, Embedding(1, {{0.0}, {1.0}}));
    const Matrix l = stiffness(fw);
    CHECK(l(0, 0) == 1.0);
    CHECK(l(0, 1) == -1.0);
    CHECK(l(1, 1) == 1.0);
    const Spectrum s = eigenvalues_sym(l);
    CHECK(std::abs(s.values[0]) <= 1e-14);
    CHECK(s.values[1] == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("one-dimensional stiffness is the graph Laplacian exactly") {
    Rng rng(401);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = oracles::random_graph(rng);
        Embedding p(1, g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) p.coord(v, 0) = v + rng.uniform01() * 0.5;
        const Matrix l = stiffness(Framework(g, p));
        for (int u = 0; u < g.vertex_count(); ++u) {
            CHECK(l(static_cast<std::size_t>(u), static_cast<std::size_t>(u)) ==
                  static_cast<double>(g.degree(u)));
            const std::vector<int> nb = g.neighbors(u);
            for (int v = u + 1; v < g.vertex_count(); ++v) {
                const bool adjacent = std::find(nb.begin(), nb.end(), v) != nb.end();
                CHECK(l(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) ==
                      (adjacent ? -1.0 : 0.0));
            }
        }
    }
}

TEST_CASE("equilateral triangle spectra") {
    const Framework fw = equilateral_triangle();
    const Spectrum s = eigenvalues_sym(stiffness(fw));
    const Spectrum expected{{0.0, 0.0, 0.0, 1.5, 1.5, 3.0}, kSpectrumTol};
    CHECK(multiset_equal(s, expected, 1e-12));
}

TEST_CASE("local rigidity matrix and local stiffness") {
    const Framework fw = equilateral_triangle();
    const Matrix rv = local_rigidity_matrix(fw, 0);
    REQUIRE(rv.rows() == 2);
    REQUIRE(rv.cols() == 2);
    const Spectrum s = eigenvalues_sym(local_stiffness(fw, 0));
    // Gram of two unit vectors at 60 degrees: eigenvalues 1 -+ cos(60)
    CHECK(s.values[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(s.values[1] == doctest::Approx(1.5).epsilon(1e-14));

    const Graph k2 = complete_graph(2);
    const Framework fw2(k2, Embedding(1, {{0.0}, {1.0}}));
    const Matrix r0 = local_rigidity_matrix(fw2, 0);
    REQUIRE(r0.rows() == 1);
    REQUIRE(r0.cols() == 1);
    CHECK(r0(0, 0) == -1.0);

    // weighted columns scale by sqrt of the neighbor weight
    const Matrix rw = local_rigidity_matrix(fw, 0, WeightFn({5.0, 4.0, 9.0}));
    CHECK(rw(0, 0) == doctest::Approx(2.0 * rv(0, 0)).epsilon(1e-15));
    CHECK(rw(0, 1) == doctest::Approx(3.0 * rv(0, 1)).epsilon(1e-15));

    const Graph isolated(2, {});
    CHECK_THROWS_AS(local_rigidity_matrix(Framework(isolated, Embedding(2, 2)), 0),
                    std::invalid_argument);
}

TEST_CASE("local stiffness singular below degree d") {
    Rng rng(402);
    const Graph path(3, {{0, 1}, {1, 2}});  // vertex 0 has degree 1
    const Framework fw(path, oracles::random_points(rng, 3, 2));
    const Spectrum s = eigenvalues_sym(local_stiffness(fw, 0));
    CHECK(std::abs(s.values[0]) <= 1e-12);
    // middle vertex has degree 2, generically nonsingular
    const Spectrum mid = eigenvalues_sym(local_stiffness(fw, 1));
    CHECK(mid.values[0] > 1e-6);
}

TEST_CASE("lower stiffness of the equilateral triangle") {
    const Framework fw = equilateral_triangle();
    const Matrix low = lower_stiffness(fw);
    REQUIRE(low.rows() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(low(i, i) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(low(0, 1) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(low(0, 2) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(low(1, 2) == doctest::Approx(0.5).epsilon(1e-14));

    const Spectrum s = eigenvalues_sym(low);
    const Spectrum expected{{1.5, 1.5, 3.0}, kSpectrumTol};
    CHECK(multiset_equal(s, expected, 1e-12));
}

TEST_CASE("closed-form lower stiffness agrees with the product form") {
    Rng rng(403);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = oracles::random_graph(rng);
        const int d = static_cast<int>(rng.uniform_int(1, 3));
        const Framework fw(g, oracles::random_points(rng, g.vertex_count(), d));
        const WeightFn f = oracles::random_weights(rng, g.vertex_count());
        const Matrix a = lower_stiffness(fw, f);
        const Matrix b = lower_stiffness_closed_form(fw, f);
        REQUIRE(a.rows() == b.rows());
        CHECK((a - b).max_abs() <= 1e-10);
    }
}

TEST_CASE("closed-form lower stiffness handles coincident endpoints") {
    // two edges sharing a vertex whose other endpoints coincide
    const Graph g(3, {{0, 1}, {0, 2}});
    const Embedding p(2, {{0.0, 0.0}, {1.0, 1.0}, {1.0, 1.0}});
    const Framework fw(g, p);
    const WeightFn f = WeightFn::ones(3);
    CHECK((lower_stiffness(fw, f) - lower_stiffness_closed_form(fw, f)).max_abs() <= 1e-12);

    // an edge with coincident endpoints gets a zero row and diagonal
    const Graph g2(3, {{0, 1}, {1, 2}});
    const Embedding p2(2, {{0.3, 0.7}, {0.3, 0.7}, {1.0, 0.0}});
    const Framework fw2(g2, p2);
    const Matrix closed = lower_stiffness_closed_form(fw2, f);
    CHECK(closed(0, 0) == 0.0);
    CHECK(closed(0, 1) == 0.0);
    CHECK((lower_stiffness(fw2, f) - closed).max_abs() <= 1e-12);
}

TEST_CASE("edge angle cosines") {
    const Embedding p(2, {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}});
    CHECK(std::abs(edge_angle_cos(p, {0, 1}, {0, 2})) <= 1e-15);

    const Framework tri = equilateral_triangle();
    CHECK(edge_angle_cos(tri.points, {0, 1}, {0, 2}) == doctest::Approx(0.5).epsilon(1e-14));

    const Embedding collinear(1, {{0.0}, {1.0}, {2.0}});
    CHECK(edge_angle_cos(collinear, {0, 1}, {1, 2}) == doctest::Approx(-1.0).epsilon(1e-15));

    CHECK_THROWS_AS(edge_angle_cos(p, {0, 1}, {0, 1}), std::invalid_argument);
    const Embedding q(2, {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}});
    CHECK_THROWS_AS(edge_angle_cos(q, {0, 1}, {2, 3}), std::invalid_argument);

    // zero direction at the shared vertex
    const Embedding z(2, {{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}});
    CHECK(edge_angle_cos(z, {0, 1}, {0, 2}) == 0.0);
}

TEST_CASE("apply_stiffness matches the dense product") {
    Rng rng(404);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = oracles::random_graph(rng);
        const int d = static_cast<int>(rng.uniform_int(1, 3));
        const Framework fw(g, oracles::random_points(rng, g.vertex_count(), d));
        const WeightFn f = oracles::random_weights(rng, g.vertex_count());
        std::vector<double> phi(static_cast<std::size_t>(d) * g.vertex_count());
        for (double& x : phi) x = rng.uniform(-1.0, 1.0);

        const std::vector<double> fast = apply_stiffness(fw, f, phi);
        const std::vector<double> dense = stiffness(fw, f) * phi;
        REQUIRE(fast.size() == dense.size());
        for (std::size_t i = 0; i < fast.size(); ++i)
            CHECK(std::abs(fast[i] - dense[i]) <= 1e-10);
    }
}

TEST_CASE("apply_stiffness kernel vectors") {
    Rng rng(405);
    const Graph g = complete_graph(5);
    const Framework fw(g, oracles::random_points(rng, 5, 2));

    // Unit weights: plain translations are annihilated.
    std::vector<double> phi(10);
    for (int v = 0; v < 5; ++v) { phi[2 * v] = 0.7; phi[2 * v + 1] = -0.2; }
    for (double y : apply_stiffness(fw, WeightFn::ones(5), phi)) CHECK(std::abs(y) <= 1e-12);

    // General weights: the kernel holds sqrt(f(v))-scaled translations instead.
    const WeightFn f = oracles::random_weights(rng, 5);
    std::vector<double> scaled(10);
    for (int v = 0; v < 5; ++v) {
        const double r = std::sqrt(f(v));
        scaled[2 * v] = 0.7 * r;
        scaled[2 * v + 1] = -0.2 * r;
    }
    for (double y : apply_stiffness(fw, f, scaled)) CHECK(std::abs(y) <= 1e-12);
}

TEST_CASE("apply_stiffness single edge example") {
    const Graph k2 = complete_graph(2);
    const Framework fw(k2, Embedding(1, {{0.0}, {1.0}}));
    const std::vector<double> out = apply_stiffness(fw, WeightFn::ones(2), {1.0, 0.0});
    CHECK(out[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(out[1] == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("weight factorizations hold") {
    Rng rng(406);
    CHECK(weight_factorization_check(equilateral_triangle(), WeightFn::ones(3)));
    const Graph k2 = complete_graph(2);
    CHECK(weight_factorization_check(Framework(k2, Embedding(1, {{0.0}, {1.0}})), WeightFn({4.0, 9.0})));
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = oracles::random_graph(rng);
        const int d = static_cast<int>(rng.uniform_int(1, 3));
        const Framework fw(g, oracles::random_points(rng, g.vertex_count(), d));
        CHECK(weight_factorization_check(fw, oracles::random_weights(rng, g.vertex_count())));
    }
}

TEST_CASE("stiffness kernel contains the trivial motions") {
    Rng rng(407);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = static_cast<int>(rng.uniform_int(1, 3));
        const int n = static_cast<int>(rng.uniform_int(d + 1, 8));
        Graph g = complete_graph(n);
        const Framework fw(g, oracles::random_points(rng, n, d));
        const Spectrum s = eigenvalues_sym(stiffness(fw));
        const int trivial = d * (d + 1) / 2;
        for (int i = 0; i < trivial; ++i) CHECK(std::abs(s.values[static_cast<std::size_t>(i)]) <= 1e-8);
        CHECK(rank_tol(stiffness(fw)) <= d * n - trivial);
    }
}

TEST_CASE("lower stiffness eigenvector characterization") {
    // For unit weights: (lambda - 2) psi(e) = sum over edges sharing a
    // vertex with e of cos(angle) psi(e'), whenever no endpoints coincide.
    Rng rng(408);
    int checked = 0;
    while (checked < 25) {
        const Graph g = oracles::random_graph(rng);
        if (g.edge_count() < 2) continue;
        const int d = static_cast<int>(rng.uniform_int(2, 3));
        const Framework fw(g, oracles::random_points(rng, g.vertex_count(), d));
        const Matrix low = lower_stiffness(fw, WeightFn::ones(g.vertex_count()));
        const EigenSystem es = eigen_sym(low);
        for (std::size_t k = 0; k < es.values.size(); ++k) {
            for (std::size_t e = 0; e < low.rows(); ++e) {
                double rhs = 0.0;
                for (std::size_t e2 = 0; e2 < low.rows(); ++e2) {
                    if (e2 == e) continue;
                    const Edge& a = fw.graph.edges()[e];
                    const Edge& b = fw.graph.edges()[e2];
                    const bool share = (a.u == b.u) + (a.u == b.v) + (a.v == b.u) + (a.v == b.v) == 1;
                    if (!share) continue;
                    rhs += edge_angle_cos(fw.points, a, b) * es.vectors(e2, k);
                }
                CHECK(std::abs((es.values[k] - 2.0) * es.vectors(e, k) - rhs) <= 1e-8);
            }
        }
        ++checked;
    }
}

TEST_CASE("framework validation") {
    CHECK_THROWS_AS(Framework(complete_graph(3), Embedding(2, 2)), std::invalid_argument);
    CHECK_THROWS_AS(rigidity_matrix(equilateral_triangle(), WeightFn({1.0, 2.0})),
                    std::invalid_argument);
    CHECK_THROWS_AS(rigidity_matrix(equilateral_triangle(), WeightFn({1.0, 2.0, 3.0, 4.0})),
                    std::invalid_argument);
}
