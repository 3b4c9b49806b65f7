#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "symideal/combinatorics.hpp"
#include "symideal/qmatrix.hpp"

using namespace symideal;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    long num = static_cast<long>(rng() % 19) - 9;
    long den = static_cast<long>(rng() % 4) + 1;
    return Rational(num, den);
}

QMatrix random_matrix(std::mt19937_64& rng, int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = random_rational(rng);
    return m;
}

// Independent determinant oracle: cofactor expansion along the first row.
Rational det_cofactor(const QMatrix& m) {
    int n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    Rational d;
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        QMatrix minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Rational term = m.at(0, j) * det_cofactor(minor);
        d = j % 2 == 0 ? d + term : d - term;
    }
    return d;
}

// Lower-triangular unipotent matrix with (i,j) entry binom(N, i-j), 1-based.
QMatrix binomial_lower_matrix(int N) { return binomial_band_matrix(N, N).transpose(); }

bool upper_right_minors_nonsingular(const QMatrix& a) {
    for (int m = 1; m <= a.rows(); ++m)
        if (det(upper_right_minor(a, m)).is_zero()) return false;
    return true;
}

QMatrix random_antisymmetric_rhs(std::mt19937_64& rng, int n) {
    QMatrix b(n, n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            if (p + q < n - 1) {
                b.at(p, q) = random_rational(rng);
                b.at(n - 1 - q, n - 1 - p) = -b.at(p, q);
            }
    return b;
}

// Dense oracle: vectorize the n(n-1)/2 strictly-lower unknowns of X and solve
// all n^2 entry equations of A*X - (A*X)^tau = B at once.
QMatrix solve_antidiagonal_dense(const QMatrix& a, const QMatrix& b) {
    int n = a.rows();
    std::vector<std::pair<int, int>> unknowns;
    for (int c = 0; c < n; ++c)
        for (int r = c + 1; r < n; ++r) unknowns.emplace_back(r, c);
    QMatrix sys(n * n, static_cast<int>(unknowns.size()));
    std::vector<Rational> rhs(static_cast<std::size_t>(n) * n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            int row = p * n + q;
            rhs[row] = b.at(p, q);
            for (std::size_t u = 0; u < unknowns.size(); ++u) {
                auto [r, c] = unknowns[u];
                Rational coeff;
                if (c == q) coeff += a.at(p, r);
                if (c == n - 1 - p) coeff -= a.at(n - 1 - q, r);
                sys.at(row, static_cast<int>(u)) = coeff;
            }
        }
    auto sol = solve_rref(sys, rhs);
    REQUIRE(sol);
    REQUIRE(sol->unique);
    QMatrix x(n, n);
    for (std::size_t u = 0; u < unknowns.size(); ++u) x.at(unknowns[u].first, unknowns[u].second) = sol->x[u];
    return x;
}

}  // namespace

TEST_CASE("determinant examples") {
    CHECK(det(QMatrix::identity(3)) == Rational(1));
    CHECK(det(QMatrix{{6, 4}, {4, 6}}) == Rational(20));
    CHECK(det(QMatrix{{1, 1}, {1, 1}}) == Rational(0));
    CHECK(det(QMatrix{{Rational(1, 2), Rational(1, 3)}, {Rational(1, 5), Rational(1, 7)}}) ==
          Rational(1, 14) - Rational(1, 15));
    CHECK_THROWS_AS(det(QMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("determinant agrees with cofactor expansion") {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 4; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            QMatrix m = random_matrix(rng, n);
            CHECK(det(m) == det_cofactor(m));
        }
}

TEST_CASE("solve examples") {
    std::vector<Rational> v = {Rational(3), Rational(-1, 2)};
    CHECK(*solve(QMatrix::identity(2), v) == v);

    auto x = solve(QMatrix{{1, 2}, {0, 1}}, {Rational(5), Rational(2)});
    REQUIRE(x);
    CHECK(*x == std::vector<Rational>{Rational(1), Rational(2)});

    // underdetermined: free variable pinned to zero
    auto u = solve(QMatrix{{1, 1}}, {Rational(3)});
    REQUIRE(u);
    CHECK(*u == std::vector<Rational>{Rational(3), Rational(0)});

    // inconsistent: reported, not a crash
    CHECK_FALSE(solve(QMatrix{{1}, {1}}, {Rational(1), Rational(2)}));

    auto sing = solve_rref(QMatrix{{1, 1}, {2, 2}}, {Rational(1), Rational(2)});
    REQUIRE(sing);
    CHECK_FALSE(sing->unique);
}

TEST_CASE("solve matches the residual on random systems") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        QMatrix a = random_matrix(rng, n);
        std::vector<Rational> rhs(n);
        for (auto& r : rhs) r = random_rational(rng);
        auto x = solve(a, rhs);
        if (!x) continue;
        for (int i = 0; i < n; ++i) {
            Rational acc;
            for (int j = 0; j < n; ++j) acc += a.at(i, j) * (*x)[j];
            CHECK(acc == rhs[i]);
        }
    }
}

TEST_CASE("anti transpose examples") {
    QMatrix m{{1, 2}, {3, 4}};
    CHECK(anti_transpose(m) == QMatrix{{4, 2}, {3, 1}});
    CHECK(anti_transpose(QMatrix::identity(4)) == QMatrix::identity(4));
    CHECK_THROWS_AS(anti_transpose(QMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("anti transpose is an involutive anti-homomorphism") {
    std::mt19937_64 rng(17);
    for (int n = 1; n <= 6; ++n)
        for (int trial = 0; trial < 5; ++trial) {
            QMatrix a = random_matrix(rng, n);
            QMatrix b = random_matrix(rng, n);
            CHECK(anti_transpose(anti_transpose(a)) == a);
            CHECK(anti_transpose(a + b) == anti_transpose(a) + anti_transpose(b));
            CHECK(anti_transpose(a * b) == anti_transpose(b) * anti_transpose(a));
        }
}

TEST_CASE("binomial band matrix") {
    CHECK(binomial_band_matrix(4, 4) ==
          QMatrix{{1, 4, 6, 4}, {0, 1, 4, 6}, {0, 0, 1, 4}, {0, 0, 0, 1}});
    CHECK(binomial_band_matrix(2, 2) == QMatrix{{1, 2}, {0, 1}});
    for (int n_choose = 1; n_choose <= 6; ++n_choose)
        for (int size = 1; size <= 6; ++size) {
            QMatrix m = binomial_band_matrix(n_choose, size);
            CHECK(anti_transpose(m) == m);
        }
}

TEST_CASE("corner minors") {
    QMatrix a = binomial_lower_matrix(4);
    CHECK(lower_left_minor(a, 4) == a);
    CHECK(lower_left_minor(a, 1) == QMatrix{{4}});
    CHECK(lower_left_minor(a, 2) == QMatrix{{6, 4}, {4, 6}});

    QMatrix band = binomial_band_matrix(4, 4);
    CHECK(upper_right_minor(band, 4) == band);
    CHECK(upper_right_minor(band, 1) == QMatrix{{4}});
    CHECK(upper_right_minor(band, 2) == QMatrix{{6, 4}, {4, 6}});
    CHECK_THROWS_AS(lower_left_minor(a, 5), std::invalid_argument);
    CHECK_THROWS_AS(upper_right_minor(a, 0), std::invalid_argument);
}

TEST_CASE("lower-left minors have positive Schur-dimension determinants") {
    for (int N = 2; N <= 8; ++N) {
        QMatrix a = binomial_lower_matrix(N);
        for (int m = 1; m <= N; ++m) {
            Rational d = det(lower_left_minor(a, m));
            CHECK(d > Rational(0));
            CHECK(d == Rational(schur_dimension(Partition::rectangle(m, N - m), N)));
        }
    }
}

TEST_CASE("antisymmetric spec validation") {
    CHECK_THROWS_AS(AntiSymmetricSpec(QMatrix{{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(AntiSymmetricSpec(QMatrix::identity(2)), std::invalid_argument);  // B^tau = B
    CHECK_THROWS_AS(AntiSymmetricSpec(QMatrix(2, 3)), std::invalid_argument);
    CHECK(AntiSymmetricSpec(QMatrix{{5, 0}, {0, -5}}).size() == 2);
}

TEST_CASE("solve_antidiagonal examples") {
    // zero right-hand side forces X = 0
    QMatrix a = binomial_band_matrix(4, 4);
    CHECK(solve_antidiagonal(a, AntiSymmetricSpec(QMatrix(4, 4))) == QMatrix(4, 4));

    QMatrix x = solve_antidiagonal(QMatrix{{1, 1}, {0, 1}},
                                   AntiSymmetricSpec(QMatrix{{5, 0}, {0, -5}}));
    CHECK(x == QMatrix{{0, 0}, {5, 0}});

    // singular upper-right minor is reported
    CHECK_THROWS_AS(solve_antidiagonal(QMatrix{{1, 0}, {0, 1}},
                                       AntiSymmetricSpec(QMatrix{{5, 0}, {0, -5}})),
                    std::invalid_argument);
}

TEST_CASE("solve_antidiagonal agrees with the dense oracle") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        QMatrix a = random_matrix(rng, n);
        while (!upper_right_minors_nonsingular(a)) a = random_matrix(rng, n);
        QMatrix b = random_antisymmetric_rhs(rng, n);
        AntiSymmetricSpec spec(b);

        QMatrix x = solve_antidiagonal(a, spec);
        QMatrix ax = a * x;
        CHECK(ax - anti_transpose(ax) == b);

        // strictly lower triangular, last column zero
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (j >= i) CHECK(x.at(i, j).is_zero());
        for (int i = 0; i < n; ++i) CHECK(x.at(i, n - 1).is_zero());

        CHECK(x == solve_antidiagonal_dense(a, b));
    }
}
