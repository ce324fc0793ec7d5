#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rigidity/spectra.hpp"

using namespace rigidity;

TEST_CASE("eigenvalues of diagonal and near-diagonal matrices") {
    Matrix d(3, 3);
    d(0, 0) = 3.0; d(1, 1) = -1.0; d(2, 2) = 2.0;
    const Spectrum s = eigenvalues_sym(d);
    CHECK(s.values == std::vector<double>{-1.0, 2.0, 3.0});

    // 2I + (J - I)/2 on three vertices: eigenvalues 1.5, 1.5, 3
    Matrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = i == j ? 2.0 : 0.5;
    const Spectrum t = eigenvalues_sym(m);
    CHECK(t.values[0] == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(t.values[1] == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(t.values[2] == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("two by two closed form") {
    Matrix m(2, 2);
    m(0, 0) = 2.0; m(0, 1) = 1.0; m(1, 0) = 1.0; m(1, 1) = 2.0;
    const Spectrum s = eigenvalues_sym(m);
    CHECK(s.values[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.values[1] == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("random matrices agree with the characteristic polynomial oracle") {
    Rng rng(301);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(1, 6));
        const Matrix m = oracles::random_symmetric(rng, n);
        const Spectrum s = eigenvalues_sym(m);
        const std::vector<double> ref = oracles::charpoly_eigenvalues(m);
        REQUIRE(s.values.size() == ref.size());
        for (std::size_t i = 0; i < ref.size(); ++i)
            CHECK(std::abs(s.values[i] - ref[i]) <= 1e-9 * std::max(1.0, m.max_abs()));
    }
}

TEST_CASE("eigen decomposition residual is tiny") {
    Rng rng(302);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(2, 8));
        const Matrix m = oracles::random_psd(rng, n);
        const EigenSystem es = eigen_sym(m);
        Matrix lambda(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
            lambda(i, i) = es.values[i];
        const Matrix residual = m * es.vectors - es.vectors * lambda;
        CHECK(residual.max_abs() <= 1e-11 * std::max(1.0, m.frobenius_norm()));
        // orthonormal columns
        const Matrix qtq = es.vectors.transposed() * es.vectors;
        CHECK((qtq - Matrix::identity(static_cast<std::size_t>(n))).max_abs() <= 1e-12);
    }
}

TEST_CASE("trace equals eigenvalue sum") {
    Rng rng(303);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(1, 7));
        const Matrix m = oracles::random_symmetric(rng, n);
        double trace = 0.0;
        for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) trace += m(i, i);
        double sum = 0.0;
        for (double v : eigenvalues_sym(m).values) sum += v;
        CHECK(std::abs(trace - sum) <= 1e-11 * std::max(1.0, std::abs(trace)));
    }
}

TEST_CASE("asymmetric input is rejected") {
    Matrix m(2, 2);
    m(0, 1) = 1.0;  // m(1,0) stays 0
    CHECK_THROWS_AS(eigenvalues_sym(m), std::invalid_argument);
    CHECK_THROWS_AS(eigen_sym(Matrix(2, 3)), std::invalid_argument);
}

TEST_CASE("multiset operations") {
    const Spectrum a{{0.0, 1.0, 3.0}, 1e-9};
    const Spectrum b{{0.5, 2.0}, 1e-8};
    const Spectrum u = multiset_union(a, b);
    CHECK(u.values == std::vector<double>{0.0, 0.5, 1.0, 2.0, 3.0});
    CHECK(u.tol == 1e-8);

    const Spectrum r = multiset_repeat(a, 2);
    CHECK(r.values == std::vector<double>{0.0, 0.0, 1.0, 1.0, 3.0, 3.0});
    CHECK(multiset_repeat(a, 0).values.empty());
    CHECK_THROWS_AS(multiset_repeat(a, -1), std::invalid_argument);

    const Spectrum sc = multiset_scale(a, -2.0);
    CHECK(sc.values == std::vector<double>{-6.0, -2.0, 0.0});

    CHECK(multiset_equal(a, Spectrum{{1e-10, 1.0, 3.0}, 1e-9}, 1e-9));
    CHECK_FALSE(multiset_equal(a, b, 1e-9));
    CHECK_FALSE(multiset_equal(a, Spectrum{{0.0, 1.0, 3.1}, 1e-9}, 1e-9));
}

TEST_CASE("kth smallest and rank") {
    const Spectrum s{{0.0, 0.0, 0.5, 1.5}, 1e-9};
    CHECK(kth_smallest(s, 1) == 0.0);
    CHECK(kth_smallest(s, 3) == 0.5);
    CHECK_THROWS_AS(kth_smallest(s, 0), std::invalid_argument);
    CHECK_THROWS_AS(kth_smallest(s, 5), std::invalid_argument);

    Matrix m(3, 3);
    m(0, 0) = 1.0; m(1, 1) = 1e-14;
    CHECK(rank_tol(m) == 1);
    CHECK(rank_tol(Matrix(2, 2)) == 0);
}

TEST_CASE("spectral gap of complete graphs") {
    // K_n in dimension 1 is the graph Laplacian: gap = n.
    for (int n = 2; n <= 6; ++n) {
        Embedding p(1, n);
        for (int v = 0; v < n; ++v) p.coord(v, 0) = static_cast<double>(v * v + 1);
        const Framework fw(complete_graph(n), p);
        CHECK(spectral_gap(fw) == doctest::Approx(static_cast<double>(n)).epsilon(1e-12));
    }
}

TEST_CASE("spectral gap is invariant under rigid motions") {
    Rng rng(304);
    int done = 0;
    while (done < 25) {
        const Graph g = oracles::random_graph(rng);
        const int d = static_cast<int>(rng.uniform_int(2, 3));
        // need at least d(d+1)/2 + 1 eigenvalues to have a gap to read off
        if (g.vertex_count() * d < d * (d + 1) / 2 + 1) continue;
        ++done;
        const Embedding p = oracles::random_points(rng, g.vertex_count(), d);
        const WeightFn f = oracles::random_weights(rng, g.vertex_count());

        std::vector<double> angles(static_cast<std::size_t>(d * (d - 1) / 2));
        for (double& a : angles) a = rng.uniform(0.0, 6.28);
        std::vector<double> shift(static_cast<std::size_t>(d));
        for (double& x : shift) x = rng.uniform(-5.0, 5.0);
        const Embedding q = transformed(p, rotation_from_angles(d, angles), shift);

        const int t = d * (d + 1) / 2;
        const double g1 = kth_smallest(eigenvalues_sym(stiffness(Framework(g, p), f)), t + 1);
        const double g2 = kth_smallest(eigenvalues_sym(stiffness(Framework(g, q), f)), t + 1);
        CHECK(std::abs(g1 - g2) <= 1e-9 * std::max(1.0, std::abs(g1)));
    }
}

TEST_CASE("rotation matrices are orthogonal") {
    Rng rng(305);
    for (int d = 2; d <= 4; ++d) {
        std::vector<double> angles(static_cast<std::size_t>(d * (d - 1) / 2));
        for (double& a : angles) a = rng.uniform(-3.0, 3.0);
        const Matrix r = rotation_from_angles(d, angles);
        CHECK((r.transposed() * r - Matrix::identity(static_cast<std::size_t>(d))).max_abs() <= 1e-14);
    }
}
