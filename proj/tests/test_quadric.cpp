#include <doctest.h>

#include "helpers.hpp"
#include "tropdual/error.hpp"
#include "tropdual/quadric.hpp"
#include "tropdual/subdivision.hpp"

using namespace tropdual;
using namespace testing_support;

namespace {

const Rational kHalf(1, 2);

std::vector<TropValue> eps_layout(const DistortionMatrix& e) { return layout(e.matrix()); }

}  // namespace

TEST_CASE("matrix_from_poly and back") {
    TropPolynomial f(2);
    f.add_term({2, 0}, 0);
    f.add_term({0, 2}, 0);
    f.add_term({0, 0}, 0);
    QuadricMatrix a = matrix_from_poly(f);
    CHECK(layout(a.matrix()) == std::vector<TropValue>{0, 0, 0, NEG_INF, NEG_INF, NEG_INF});
    CHECK(poly_from_matrix(a) == f);

    QuadricMatrix full = conic(1, 2, 3, -2, 1, -1);
    TropPolynomial g = poly_from_matrix(full);
    CHECK(g.coefficient({2, 0}) == TropValue(1));
    CHECK(g.coefficient({0, 2}) == TropValue(2));
    CHECK(g.coefficient({0, 0}) == TropValue(3));
    CHECK(g.coefficient({1, 1}) == TropValue(-2));
    CHECK(g.coefficient({1, 0}) == TropValue(1));
    CHECK(g.coefficient({0, 1}) == TropValue(-1));
    CHECK(matrix_from_poly(g) == full);

    TropPolynomial cubic(2);
    cubic.add_term({1, 2}, 0);
    CHECK_THROWS_AS((void)matrix_from_poly(cubic), UnsupportedShape);
}

TEST_CASE("round trip on random quadrics with -inf entries") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int rep = 0; rep < 100; ++rep) {
        std::size_t n = 2 + rep % 4;
        std::vector<TropValue> upper;
        for (std::size_t k = 0; k < n * (n + 1) / 2; ++k) {
            int x = d(rng);
            upper.push_back(x == 9 ? NEG_INF : TropValue(Rational(x, 2)));
        }
        upper[0] = 0;
        QuadricMatrix a = QuadricMatrix::from_upper(n, upper);
        TropPolynomial f = poly_from_matrix(a);
        CHECK(matrix_from_poly(f) == a);
        CHECK(poly_from_matrix(matrix_from_poly(f)) == f);
    }
}

TEST_CASE("dual_quadric examples") {
    CHECK(layout(dual_quadric(conic(1, 2, 3, -2, 1, -1)).matrix()) == values({5, 4, 3, 1, 3, 0}));
    CHECK(layout(dual_quadric(conic(1, 2, 5, 3, 4, 4)).matrix()) == values({8, 8, 6, 8, 7, 7}));
    CHECK(layout(dual_quadric(dual_quadric(conic(1, 2, 3, -2, 1, -1))).matrix()) == values({7, 8, 9, 4, 7, 5}));
    CHECK(layout(dual_quadric(dual_quadric(conic(1, 2, 5, 3, 4, 4))).matrix()) == values({14, 14, 16, 14, 15, 15}));
}

TEST_CASE("dual conic entry (1,1) is max(2a6, a3 + a2)") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> d(-20, 20);
    for (int rep = 0; rep < 200; ++rep) {
        std::vector<TropValue> a;
        for (int k = 0; k < 6; ++k) a.push_back(Rational(d(rng), 2));
        QuadricMatrix dual = dual_quadric(conic(a));
        CHECK(dual.at(0, 0) == t_add(t_scale(2, a[5]), t_mul(a[2], a[1])));
    }
}

TEST_CASE("distortion matrix examples") {
    CHECK(eps_layout(distortion_matrix(conic(1, 2, 3, -2, 1, -1))) ==
          std::vector<TropValue>{0, 0, 0, Rational(-7, 2), -1, Rational(-7, 2)});
    CHECK(eps_layout(distortion_matrix(conic(1, 2, 5, 3, 4, 4))) ==
          std::vector<TropValue>{0, 0, 0, Rational(3, 2), 1, Rational(1, 2)});
    // Off-diagonal entries on their chords.
    CHECK(eps_layout(distortion_matrix(conic({2, 4, 6, 3, 4, 5}))) == values({0, 0, 0, 0, 0, 0}));
    CHECK_THROWS_AS((void)distortion_matrix(conic({NEG_INF, 0, 0, 0, 0, 0})), InputError);
    CHECK(distortion_matrix(conic({0, 0, 0, NEG_INF, 0, 0})).at(0, 1).is_neg_inf());
}

TEST_CASE("G factor examples") {
    QuadricMatrix a = conic(1, 2, 3, -2, 1, -1);
    CHECK(g_factor(a, 1, 1) == TropValue(5));
    // (a2 + a3)/2 + a1 = 5/2 + 1. The worked value 9/2 in some write-ups is an arithmetic slip.
    CHECK(g_factor(a, 2, 3) == TropValue(Rational(7, 2)));
    CHECK(g_factor(a, 3, 2) == TropValue(Rational(7, 2)));
    std::mt19937_64 rng(1);
    for (std::size_t n = 2; n <= 6; ++n) {
        QuadricMatrix q = random_quadric(rng, n, 0);
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = 1; j <= n; ++j) {
                CHECK(t_mul(g_factor(q, i, i), g_factor(q, j, j)) == t_scale(2, g_factor(q, i, j)));
            }
        }
    }
    CHECK_THROWS_AS((void)g_factor(a, 0, 1), InputError);
}

TEST_CASE("decompose_minor on the worked conic") {
    QuadricMatrix a = conic(1, 2, 3, -2, 1, -1);
    auto [g, e] = decompose_minor(a, 3, 2);
    CHECK(g == TropValue(Rational(7, 2)));
    CHECK(e == TropValue(Rational(-7, 2)));
    CHECK(t_mul(g, e) == TropValue(0));
    CHECK(dual_quadric(a).at(2, 1) == TropValue(0));
}

TEST_CASE("decompose_minor with zero distortion") {
    QuadricMatrix a = conic({2, 4, 6, 3, 4, 5});
    for (std::size_t i = 1; i <= 3; ++i) {
        for (std::size_t j = 1; j <= 3; ++j) {
            auto [g, e] = decompose_minor(a, i, j);
            CHECK(e == TropValue(0));
            CHECK(g == trop_det(trop_minor(a.matrix(), i, j)).value);
        }
    }
}

TEST_CASE("decomposition matches the direct minor for sizes up to 7") {
    std::mt19937_64 rng(77);
    for (std::size_t n = 2; n <= 7; ++n) {
        for (int rep = 0; rep < 15; ++rep) {
            QuadricMatrix a = random_quadric(rng, n, 0);
            for (std::size_t i = 1; i <= n; ++i) {
                for (std::size_t j = i; j <= n; ++j) {
                    auto [g, e] = decompose_minor(a, i, j);
                    CHECK(t_mul(g, e) == trop_det(trop_minor(a.matrix(), i, j)).value);
                }
            }
        }
    }
}

TEST_CASE("classify_by_distortion examples") {
    CHECK(classify_by_distortion(distortion_matrix(conic(1, 2, 3, -2, 1, -1))) == DistortionClass::all_negative);
    CHECK(classify_by_distortion(distortion_matrix(conic(1, 2, 5, 3, 4, 4))) == DistortionClass::all_positive);
    CHECK(classify_by_distortion(distortion_matrix(conic(0, 0, 0, -1, 1, 1))) == DistortionClass::mixed);
    CHECK(classify_by_distortion(distortion_matrix(conic({2, 4, 6, 3, 4, 5}))) == DistortionClass::mixed);
}

TEST_CASE("regularity examples") {
    RegularityVerdict full = is_regular(conic(1, 2, 3, -2, 1, -1));
    CHECK(full.status == RegularityStatus::regular);
    CHECK(full.lifting_constant == TropValue(6));
    CHECK(full.lifting_constant == trop_det(conic(1, 2, 3, -2, 1, -1).matrix()).value);

    RegularityVerdict empty = is_regular(conic(1, 2, 5, 3, 4, 4));
    CHECK(empty.status == RegularityStatus::not_regular);
    REQUIRE(empty.witness);
    CHECK(empty.witness->reference == EntryIndex{1, 1});
    CHECK(empty.witness->violating == EntryIndex{1, 2});

    // diag(0,0,0) with -inf elsewhere is its own dual; the -inf patterns agree.
    RegularityVerdict diag = is_regular(conic({0, 0, 0, NEG_INF, NEG_INF, NEG_INF}));
    CHECK(diag.status == RegularityStatus::regular);
    CHECK(diag.lifting_constant == TropValue(0));

    // A -inf entry of A that comes back finite in the double dual.
    QuadricMatrix holed = conic({0, 0, 0, 0, NEG_INF, 0});
    CHECK(dual_quadric(dual_quadric(holed)).at(0, 2).is_finite());
    RegularityVerdict pattern = is_regular(holed);
    CHECK(pattern.status == RegularityStatus::degenerate);
    REQUIRE(pattern.witness);
    CHECK(pattern.witness->violating == EntryIndex{1, 3});

    RegularityVerdict bottom = is_regular(QuadricMatrix::from_upper(2, {NEG_INF, NEG_INF, NEG_INF}));
    CHECK(bottom.status == RegularityStatus::degenerate);
}

TEST_CASE("regularity criterion examples") {
    DistortionMatrix full = distortion_matrix(conic(1, 2, 3, -2, 1, -1));
    CHECK(negative_regularity_criterion(full));
    CHECK(negative_regularity_criterion(full, CriterionMode::strict));

    QuadricMatrix skewed = conic({0, 0, 0, -10, -1, -1});
    CHECK_FALSE(negative_regularity_criterion(distortion_matrix(skewed)));
    CHECK(is_regular(skewed).status == RegularityStatus::not_regular);

    DistortionMatrix two = distortion_matrix(QuadricMatrix::from_upper(2, {0, -3, 0}));
    CHECK(negative_regularity_criterion(two));
    CHECK(negative_regularity_criterion(two, CriterionMode::strict));

    CHECK_THROWS_AS((void)negative_regularity_criterion(distortion_matrix(conic(1, 2, 5, 3, 4, 4))), InputError);
}

TEST_CASE("strict criterion misses regular ties; the non-strict form does not") {
    // ε12 = -1, ε13 = -9/2, ε23 = -7/2 with a zero diagonal: ε13 = ε12 + ε23.
    QuadricMatrix tie = conic({0, 0, 0, -1, Rational(-9, 2), Rational(-7, 2)});
    CHECK(is_regular(tie).status == RegularityStatus::regular);
    CHECK(negative_regularity_criterion(distortion_matrix(tie)));
    CHECK_FALSE(negative_regularity_criterion(distortion_matrix(tie), CriterionMode::strict));
}

TEST_CASE("minor formula examples") {
    DistortionMatrix e = distortion_matrix(conic(1, 2, 3, -2, 1, -1));
    CHECK(minor_formula_negative(e, 1, 2) == TropValue(Rational(-7, 2)));
    CHECK(trop_det(trop_minor(e.matrix(), 1, 2)).value == TropValue(Rational(-7, 2)));
    for (std::size_t i = 1; i <= 3; ++i) CHECK(minor_formula_negative(e, i, i) == TropValue(0));
}

TEST_CASE("minor formula agrees with enumeration on conics") {
    std::mt19937_64 rng(40);
    for (int rep = 0; rep < 300; ++rep) {
        DistortionMatrix e = distortion_matrix(random_quadric(rng, 3, -1));
        for (std::size_t i = 1; i <= 3; ++i) {
            for (std::size_t j = 1; j <= 3; ++j) {
                CHECK(minor_formula_negative(e, i, j) == trop_det(trop_minor(e.matrix(), i, j)).value);
            }
        }
    }
}

TEST_CASE("minor formula is only an upper bound from size 4 on") {
    // Frozen instance: the closed form assumes k and h can be chosen
    // independently, which the permutation structure forbids.
    DistortionMatrix e(TropMatrix::from_upper(4, values({0, -9, -9, -1, 0, -1, -9, 0, -9, 0})));
    TropValue closed = minor_formula_negative(e, 1, 2);
    TropValue brute = trop_det(trop_minor(e.matrix(), 1, 2)).value;
    CHECK(closed == TropValue(-2));
    CHECK(brute == TropValue(-9));
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 200; ++rep) {
        DistortionMatrix r = distortion_matrix(random_quadric(rng, 4 + rep % 3, -1));
        for (std::size_t i = 1; i <= r.size(); ++i) {
            for (std::size_t j = 1; j <= r.size(); ++j) {
                CHECK(minor_formula_negative(r, i, j) >= trop_det(trop_minor(r.matrix(), i, j)).value);
            }
        }
    }
}

TEST_CASE("all-negative distortion stays all-negative under duality") {
    std::mt19937_64 rng(50);
    for (std::size_t n = 3; n <= 7; ++n) {
        for (int rep = 0; rep < 40; ++rep) {
            QuadricMatrix a = random_quadric(rng, n, -1);
            QuadricMatrix dual = dual_quadric(a);
            CHECK(classify_by_distortion(distortion_matrix(dual)) == DistortionClass::all_negative);
            DistortionMatrix e = distortion_matrix(a);
            for (std::size_t i = 1; i <= n; ++i) {
                for (std::size_t j = 1; j <= n; ++j) {
                    TropValue m = trop_det(trop_minor(e.matrix(), i, j)).value;
                    if (i == j) {
                        CHECK(m == TropValue(0));
                    } else {
                        CHECK(m < TropValue(0));
                    }
                }
            }
        }
    }
}

TEST_CASE("all-negative regular quadrics lift by (size-2) times the determinant") {
    std::mt19937_64 rng(51);
    for (std::size_t n = 3; n <= 6; ++n) {
        for (int rep = 0; rep < 60; ++rep) {
            QuadricMatrix a = random_quadric(rng, n, -1);
            RegularityVerdict v = is_regular(a);
            if (v.status != RegularityStatus::regular) continue;
            TropValue det = trop_det(a.matrix()).value;
            CHECK(v.lifting_constant == t_scale(Rational(static_cast<std::int64_t>(n) - 2), det));
        }
    }
}

TEST_CASE("all-positive conics dualise to all-nonnegative and are never regular") {
    std::mt19937_64 rng(52);
    for (int rep = 0; rep < 300; ++rep) {
        QuadricMatrix a = random_quadric(rng, 3, 1);
        DistortionMatrix dual_eps = distortion_matrix(dual_quadric(a));
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = i + 1; j < 3; ++j) CHECK(dual_eps.at(i, j) >= TropValue(0));
        }
        CHECK(is_regular(a).status != RegularityStatus::regular);
    }
}

TEST_CASE("frozen size-4 counterexamples for the all-positive case") {
    // All distortions positive, yet the double dual is a uniform lift.
    QuadricMatrix regular = QuadricMatrix::from_upper(
        4, {0, 1, Rational(17, 2), 6, -2, 3, 9, 5, 6, 4});
    CHECK(classify_by_distortion(distortion_matrix(regular)) == DistortionClass::all_positive);
    RegularityVerdict v = is_regular(regular);
    CHECK(v.status == RegularityStatus::regular);
    CHECK(v.lifting_constant == TropValue(70));

    // All distortions positive, yet the dual has a negative distortion.
    QuadricMatrix losing = QuadricMatrix::from_upper(
        4, {2, Rational(7, 2), 18, 15, 1, Rational(13, 2), Rational(15, 2), 10, 19, 8});
    CHECK(classify_by_distortion(distortion_matrix(losing)) == DistortionClass::all_positive);
    CHECK(distortion_matrix(dual_quadric(losing)).at(0, 1) == TropValue(-1));
    CHECK(node_classification(induced_subdivision(poly_from_matrix(dual_quadric(losing)))) != NodeClass::minimal_in_nodes);
}

TEST_CASE("criterion matches regularity on all-negative conics") {
    std::mt19937_64 rng(53);
    for (int rep = 0; rep < 500; ++rep) {
        QuadricMatrix a = random_quadric(rng, 3, -1);
        bool regular = is_regular(a).status == RegularityStatus::regular;
        CHECK(regular == negative_regularity_criterion(distortion_matrix(a)));
    }
}

TEST_CASE("lifting constant equals the determinant for conics") {
    std::mt19937_64 rng(54);
    for (int rep = 0; rep < 200; ++rep) {
        QuadricMatrix a = random_quadric(rng, 3, -1);
        RegularityVerdict v = is_regular(a);
        if (v.status == RegularityStatus::regular) CHECK(v.lifting_constant == trop_det(a.matrix()).value);
    }
}

TEST_CASE("G factors never change which side of the chord a node lies on") {
    std::mt19937_64 rng(55);
    for (std::size_t n = 3; n <= 6; ++n) {
        for (int rep = 0; rep < 30; ++rep) {
            QuadricMatrix a = random_quadric(rng, n, 0);
            QuadricMatrix dual = dual_quadric(a);
            DistortionMatrix dual_eps = distortion_matrix(dual);
            for (std::size_t i = 1; i <= n; ++i) {
                for (std::size_t j = i + 1; j <= n; ++j) {
                    // a*_ij - (a*_ii + a*_jj)/2 after removing G equals the same comparison of minor determinants of E.
                    auto [gij, eij] = decompose_minor(a, i, j);
                    auto [gii, eii] = decompose_minor(a, i, i);
                    auto [gjj, ejj] = decompose_minor(a, j, j);
                    TropValue without_g = eij.is_neg_inf() ? NEG_INF
                                                           : TropValue(eij.value() - kHalf * (eii.value() + ejj.value()));
                    CHECK(without_g == dual_eps.at(i - 1, j - 1));
                }
            }
        }
    }
}
