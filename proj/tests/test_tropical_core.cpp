#include <doctest.h>

#include "helpers.hpp"
#include "tropdual/error.hpp"
#include "tropdual/trop_matrix.hpp"

using namespace tropdual;
using namespace testing_support;

TEST_CASE("rational parsing and normalisation") {
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(Rational::parse("-7/2").str() == "-7/2");
    CHECK(Rational::parse("12") == Rational(12));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK_THROWS_AS((void)Rational::parse("1.5"), InputError);
    CHECK_THROWS_AS((void)Rational::parse("1/0"), InputError);
    CHECK_THROWS_AS((void)Rational::parse(""), InputError);
    CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("rational overflow is reported, not wrapped") {
    Rational big(INT64_MAX);
    CHECK_THROWS_AS((void)(big + Rational(1)), OverflowError);
    CHECK_THROWS_AS((void)(big * Rational(2)), OverflowError);
}

TEST_CASE("t_add examples") {
    CHECK(t_add(3, 5) == TropValue(5));
    CHECK(t_add(NEG_INF, -2) == TropValue(-2));
    CHECK(t_add(Rational(7, 2), Rational(7, 2)) == TropValue(Rational(7, 2)));
}

TEST_CASE("t_mul examples") {
    CHECK(t_mul(3, 5) == TropValue(8));
    CHECK(t_mul(NEG_INF, 4).is_neg_inf());
    CHECK(t_mul(Rational(1, 2), Rational(-1, 2)) == TropValue(0));
}

TEST_CASE("t_scale examples") {
    CHECK(t_scale(Rational(1, 2), 3) == TropValue(Rational(3, 2)));
    CHECK(t_scale(2, -1) == TropValue(-2));
    CHECK(t_scale(Rational(1, 2), NEG_INF).is_neg_inf());
}

TEST_CASE("trop value parsing and order") {
    CHECK(TropValue::parse("-inf").is_neg_inf());
    CHECK(TropValue::parse("-3/6") == TropValue(Rational(-1, 2)));
    CHECK(NEG_INF < TropValue(-1000000));
    CHECK(NEG_INF.str() == "-inf");
    CHECK_THROWS_AS((void)NEG_INF.value(), InputError);
}

TEST_CASE("semiring laws on random triples") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-20, 20);
    auto draw = [&]() -> TropValue {
        int x = d(rng);
        if (x == 20) return NEG_INF;
        return Rational(x, 1 + (x & 3));
    };
    for (int k = 0; k < 2000; ++k) {
        TropValue a = draw(), b = draw(), c = draw();
        CHECK(t_add(a, b) == t_add(b, a));
        CHECK(t_mul(a, b) == t_mul(b, a));
        CHECK(t_add(t_add(a, b), c) == t_add(a, t_add(b, c)));
        CHECK(t_mul(t_mul(a, b), c) == t_mul(a, t_mul(b, c)));
        CHECK(t_add(a, a) == a);
        CHECK(t_mul(a, t_add(b, c)) == t_add(t_mul(a, b), t_mul(a, c)));
        CHECK(t_add(NEG_INF, a) == a);
        CHECK(t_mul(NEG_INF, a).is_neg_inf());
    }
}

TEST_CASE("matrix construction validates shape and symmetry") {
    CHECK_THROWS_AS(TropMatrix(0, {}), InputError);
    CHECK_THROWS_AS(TropMatrix(2, values({1, 2, 3})), InputError);
    CHECK_THROWS_AS(TropMatrix(2, values({1, 2, 3, 4}), true), InputError);
    TropMatrix m = TropMatrix::from_upper(3, values({1, -2, 1, 2, -1, 3}));
    CHECK(m.symmetric());
    CHECK(m.at(0, 1) == TropValue(-2));
    CHECK(m.at(2, 1) == TropValue(-1));
    CHECK(m.upper() == values({1, -2, 1, 2, -1, 3}));
}

TEST_CASE("trop_det on the worked conics") {
    auto full = trop_det(conic(1, 2, 3, -2, 1, -1).matrix());
    CHECK(full.value == TropValue(6));
    CHECK(full.achiever_count == 1);
    CHECK_FALSE(full.degenerate);

    auto empty = trop_det(conic(1, 2, 5, 3, 4, 4).matrix());
    CHECK(empty.value == TropValue(11));
    CHECK(empty.achiever_count >= 2);
    CHECK(empty.degenerate);
}

TEST_CASE("trop_det of a diagonal matrix with -inf elsewhere") {
    TropMatrix m(3, {0, NEG_INF, NEG_INF, NEG_INF, 0, NEG_INF, NEG_INF, NEG_INF, 0});
    auto d = trop_det(m);
    CHECK(d.value == TropValue(0));
    CHECK(d.achiever_count == 1);
}

TEST_CASE("trop_det with no finite permutation counts every permutation") {
    TropMatrix m(3, {NEG_INF, NEG_INF, NEG_INF, 1, 2, 3, 4, 5, 6});
    auto d = trop_det(m);
    CHECK(d.value.is_neg_inf());
    CHECK(d.achiever_count == 6);
    CHECK(d.degenerate);
}

TEST_CASE("trop_det rejects sizes above the enumeration limit") {
    std::vector<TropValue> grid(81, TropValue(0));
    CHECK_THROWS_AS((void)trop_det(TropMatrix(9, grid)), UnsupportedShape);
}

TEST_CASE("trop_minor examples") {
    TropMatrix a = conic(1, 2, 3, -2, 1, -1).matrix();
    TropMatrix m12 = trop_minor(a, 1, 2);
    CHECK(m12 == TropMatrix(2, values({-2, -1, 1, 3})));
    CHECK(m12.row_labels() == std::vector<std::size_t>{2, 3});
    CHECK(m12.col_labels() == std::vector<std::size_t>{1, 3});

    TropMatrix two(2, values({4, 5, 6, 7}));
    CHECK(trop_minor(two, 1, 1) == TropMatrix(1, values({7})));
    CHECK_THROWS_AS((void)trop_minor(two, 3, 1), InputError);

    for (std::size_t i = 1; i <= 3; ++i) {
        for (std::size_t j = 1; j <= 3; ++j) CHECK(trop_minor(a, i, j) == trop_minor(a, j, i).transposed());
    }
}

TEST_CASE("minor labels survive nested cuts") {
    TropMatrix a = TropMatrix::from_upper(4, values({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}));
    TropMatrix m = trop_minor(trop_minor(a, 2, 3), 1, 2);
    CHECK(m.row_labels() == std::vector<std::size_t>{3, 4});
    CHECK(m.col_labels() == std::vector<std::size_t>{1, 4});
}

TEST_CASE("trop_adjoint examples") {
    CHECK(layout(trop_adjoint(conic(1, 2, 3, -2, 1, -1).matrix())) == values({5, 4, 3, 1, 3, 0}));
    CHECK(layout(trop_adjoint(conic(1, 2, 5, 3, 4, 4).matrix())) == values({8, 8, 6, 8, 7, 7}));
    QuadricMatrix diag = conic({0, 0, 0, NEG_INF, NEG_INF, NEG_INF});
    CHECK(trop_adjoint(diag.matrix()) == diag.matrix());
}

TEST_CASE("determinant equals row expansion over minors (n <= 6)") {
    std::mt19937_64 rng(11);
    for (std::size_t n = 2; n <= 6; ++n) {
        for (int rep = 0; rep < 20; ++rep) {
            TropMatrix m = random_matrix(rng, n, rep % 2 == 0);
            auto direct = trop_det(m).value;
            for (std::size_t h = 1; h <= n; ++h) {
                TropValue expanded = NEG_INF;
                for (std::size_t k = 1; k <= n; ++k) {
                    expanded = t_add(expanded, t_mul(m.at(h - 1, k - 1), trop_det(trop_minor(m, h, k)).value));
                }
                CHECK(expanded == direct);
            }
        }
    }
}

TEST_CASE("shifting every entry by c shifts the determinant by n*c") {
    std::mt19937_64 rng(5);
    for (std::size_t n = 1; n <= 6; ++n) {
        TropMatrix m = random_matrix(rng, n, false);
        Rational c(7, 2);
        std::vector<TropValue> shifted;
        for (const auto& v : m.entries()) shifted.push_back(t_mul(v, c));
        auto before = trop_det(m);
        auto after = trop_det(TropMatrix(n, shifted));
        CHECK(after.value == t_mul(before.value, Rational(static_cast<std::int64_t>(n)) * c));
        CHECK(after.achiever_count == before.achiever_count);
    }
}

TEST_CASE("symmetric input gives a symmetric adjoint") {
    std::mt19937_64 rng(3);
    for (std::size_t n = 2; n <= 7; ++n) {
        TropMatrix adj = trop_adjoint(random_matrix(rng, n, true));
        CHECK(adj.is_symmetric_grid());
        CHECK(adj.symmetric());
    }
}
