#include <random>

#include "doctest.h"

#include "covreg/poly.hpp"

using namespace covreg;

namespace {

IntPoly random_poly(std::mt19937_64& rng, int maxdeg) {
    std::uniform_int_distribution<int> dd(0, maxdeg), cd(-9, 9);
    std::vector<Int> c(dd(rng) + 1);
    for (Int& x : c) x = cd(rng);
    return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("ring operations") {
    IntPoly p{1, 2};
    CHECK(p * p == IntPoly{1, 4, 4});
    CHECK(p + IntPoly() == p);
    CHECK(IntPoly::one_plus_x_pow(3) == IntPoly{1, 3, 3, 1});
    CHECK(IntPoly{0, 0, 0}.is_zero());
    CHECK(IntPoly{1, -1}.scale(-2) == IntPoly{-2, 2});
    CHECK(IntPoly{3, 0, 1}.str() == "3 + t^2");
    CHECK(IntPoly{0, -2, 5}.str("x") == "-2*x + 5*x^2");
    CHECK(IntPoly().str() == "0");
}

TEST_CASE("shift_sub is the Taylor expansion at -1") {
    CHECK(shift_sub(IntPoly{1, 4, 3}) == IntPoly{0, -2, 3});
    CHECK(shift_sub(IntPoly{7}) == IntPoly{7});
    CHECK(shift_sub(IntPoly::one_plus_x_pow(5)) == IntPoly::monomial(5));

    std::mt19937_64 rng(7);
    for (int k = 0; k < 200; ++k) {
        IntPoly a = random_poly(rng, 8), b = random_poly(rng, 8);
        CHECK(shift_sub(a * b) == shift_sub(a) * shift_sub(b));  // ring homomorphism
        CHECK(shift_sub(a + b) == shift_sub(a) + shift_sub(b));
        CHECK(shift_sub(a).degree() == a.degree());
    }
}

TEST_CASE("ord_at_minus1 finds planted multiplicities") {
    CHECK(ord_at_minus1(IntPoly{1, 4, 3}) == std::pair<int, Int>{1, -2});
    CHECK(ord_at_minus1(IntPoly{1, 5, 6, 1}) == std::pair<int, Int>{0, 1});
    CHECK(ord_at_minus1(IntPoly::one_plus_x_pow(3)) == std::pair<int, Int>{3, 1});
    CHECK_THROWS_AS(ord_at_minus1(IntPoly()), std::invalid_argument);

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> kd(0, 6);
    for (int t = 0; t < 200; ++t) {
        IntPoly q = random_poly(rng, 5);
        if (q.is_zero() || q.eval(-1) == 0) continue;
        int k = kd(rng);
        auto [m, lead] = ord_at_minus1(IntPoly::one_plus_x_pow(k) * q);
        CHECK(m == k);
        CHECK(lead == q.eval(-1));
    }
}

TEST_CASE("derivative_at") {
    CHECK(derivative_at(IntPoly{1, 4, 3}, 1, -1) == -2);
    CHECK(derivative_at(IntPoly{1, 1}, 5, -1) == 0);
    CHECK(derivative_at(IntPoly::monomial(3), 3, 0) == 6);

    // k-th Taylor coefficient at -1 is derivative/k!.
    std::mt19937_64 rng(13);
    for (int t = 0; t < 100; ++t) {
        IntPoly p = random_poly(rng, 9);
        IntPoly sh = shift_sub(p);
        Int fact = 1;
        for (int k = 0; k <= p.degree(); ++k) {
            if (k > 1) fact *= k;
            CHECK(sh.coeff(k) * fact == derivative_at(p, k, -1));
        }
    }
}

TEST_CASE("series_h_extract") {
    std::vector<Int> hf(12, 3);
    hf[0] = 1;
    CHECK(series_h_extract(hf, 1) == IntPoly{1, 2});
    CHECK(series_h_extract(std::vector<Int>(10, 1), 1) == IntPoly{1});
    std::vector<Int> lin(10);
    for (int d = 0; d < 10; ++d) lin[d] = d + 1;
    CHECK(series_h_extract(lin, 2) == IntPoly{1});

    // HF of a 2-dimensional module fed with dim 1 is not rational.
    CHECK_THROWS_WITH_AS(series_h_extract(lin, 1), "series not rational with this dimension",
                         std::invalid_argument);
}

TEST_CASE("binom conventions") {
    CHECK(binom(5, 2) == 10);
    CHECK(binom(3, 5) == 0);
    CHECK(binom(4, -1) == 0);
    CHECK(binom(0, 0) == 1);
}
