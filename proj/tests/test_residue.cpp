#include <torsionlab/integer.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace torsionlab;

TEST_CASE("primality by trial division") {
    CHECK(is_prime(2));
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));  // 7 * 13
}

TEST_CASE("PrimePower validates and evaluates") {
    CHECK(PrimePower(5, 3).value_long() == 125);
    CHECK(PrimePower(2, 10).value() == 1024);
    CHECK_THROWS_AS(PrimePower(6, 1), std::invalid_argument);
    CHECK_THROWS_AS(PrimePower(5, 0), std::invalid_argument);
}

TEST_CASE("mod_reduce and mod_pow") {
    CHECK(mod_reduce(-1, 7) == 6);
    CHECK(mod_reduce(14, 7) == 0);
    CHECK(mod_pow(2, 10, 1000) == 24);
    CHECK(mod_pow(3, 0, 7) == 1);
    // Fermat: a^{p-1} = 1 mod p for a coprime to p
    for (long a = 1; a < 13; ++a) CHECK(mod_pow(a, 12, 13) == 1);
}

TEST_CASE("p-adic valuation is additive") {
    CHECK(p_adic_valuation(Int(250), 5) == 3);
    CHECK(p_adic_valuation(Int(-8), 2) == 3);
    CHECK(p_adic_valuation(Int(7), 5) == 0);
    CHECK_THROWS_AS(p_adic_valuation(Int(0), 5), std::domain_error);
    // v_p(ab) = v_p(a) + v_p(b) on a sample grid
    for (long a = 1; a <= 40; ++a)
        for (long b = 1; b <= 40; ++b)
            CHECK(p_adic_valuation(Int(a) * b, 3) == p_adic_valuation(a, 3) + p_adic_valuation(b, 3));
}

TEST_CASE("Legendre symbol is multiplicative and counts squares") {
    long p = 11;
    for (long a = 1; a < p; ++a)
        for (long b = 1; b < p; ++b)
            CHECK(legendre_symbol(a * b, p) == legendre_symbol(a, p) * legendre_symbol(b, p));
    long squares = 0;
    for (long a = 1; a < p; ++a)
        if (legendre_symbol(a, p) == 1) ++squares;
    CHECK(squares == (p - 1) / 2);
    CHECK(legendre_symbol(0, 7) == 0);
    CHECK_THROWS_AS(legendre_symbol(3, 2), std::invalid_argument);
}

TEST_CASE("two-squares solver produces witnesses") {
    for (long p : {3L, 5L, 7L, 11L}) {
        auto [n, m] = solve_two_squares_neg1(p, 1);
        CHECK(mod_reduce(n * n + m * m + 1, p) == 0);
    }
    auto [n, m] = solve_two_squares_neg1(5, 2);
    CHECK(mod_reduce(n * n + m * m + 1, 25) == 0);
}

TEST_CASE("binary form solver is exhaustive and honest about failure") {
    auto sol = solve_binary_form_neg1(1, 13);
    REQUIRE(sol.has_value());
    CHECK(mod_reduce(sol->first * sol->first + sol->second * sol->second + 1, 13) == 0);
    // a^2 + 4 b^2 = -1 mod 8 has no solution: squares mod 8 are {0,1,4}
    CHECK_FALSE(solve_binary_form_neg1(4, 8).has_value());
}

TEST_CASE("four squares solver") {
    for (long N : {4L, 8L, 9L, 12L}) {
        auto [n, m, s, t] = solve_four_squares_neg1(N);
        CHECK(mod_reduce(n * n + m * m + s * s + t * t + 1, N) == 0);
    }
}

TEST_CASE("int_pow and factorial agree with GMP") {
    CHECK(int_pow(2, 21) == 2097152);
    CHECK(int_pow(3, 8) == 6561);
    CHECK(factorial(6) == 720);
    CHECK(factorial(0) == 1);
}
