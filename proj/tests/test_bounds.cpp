#include <torsionlab/bounds.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace torsionlab;

TEST_CASE("vandermonde and square nodes") {
    CHECK(vandermonde({0, 1, 2}) == 2);
    CHECK(first_squares_coprime(5, 3) == std::vector<long>{1, 4, 9});
    CHECK(first_squares_coprime(3, 3) == std::vector<long>{1, 4, 16});  // skips 9
}

TEST_CASE("n(p,g) values") {
    CHECK(n_p_g(5, 2) == 2);
    CHECK(n_p_g(3, 2) == 8);
    CHECK(n_p_g(2, 2) == 21);
    CHECK_THROWS_AS(n_p_g(4, 2), std::invalid_argument);
}

TEST_CASE("N(g) assembles the per-prime exponents") {
    CHECK(big_N_of_g(2) == int_pow(2, 21) * int_pow(3, 8));
    CHECK(big_N_of_g(2) == Int("13759414272"));
}

TEST_CASE("variant exponent with zero node") {
    CHECK(variant_n_p_g_with_zero(5) == 2);
    CHECK(variant_n_p_g_with_zero(7) == 2);
    CHECK_THROWS_AS(variant_n_p_g_with_zero(3), std::invalid_argument);
}

TEST_CASE("theorem 0.1 exponent breakdown") {
    for (long g = 1; g <= 6; ++g) {
        auto b = theorem1_exponents(1, g);
        CHECK(b.total_bound == 4);
        CHECK(b.n2 == 2);
        CHECK(b.d_prime == 1);
    }
    auto b32 = theorem1_exponents(3, 2);
    CHECK(b32.total_bound == 12);
    CHECK(b32.d_prime == 3);
    auto b21 = theorem1_exponents(2, 1);
    CHECK(b21.n2 == 5);
    CHECK(b21.total_bound == 32);
    CHECK_THROWS_AS(theorem1_exponents(0, 2), std::invalid_argument);
}

TEST_CASE("bound divides the baseline 4 d^3") {
    for (long d = 1; d <= 100; ++d)
        for (long g = 1; g <= 10; ++g)
            CHECK(faltings_chai_bound(d) % theorem1_exponents(d, g).total_bound == 0);
}

TEST_CASE("optimal corollary orders for odd d") {
    CHECK(optimal_corollary_bound(1, 2, false) == 4);
    CHECK(optimal_corollary_bound(1, 2, true) == 12);
    CHECK_THROWS_AS(optimal_corollary_bound(2, 2, false), std::invalid_argument);
}
