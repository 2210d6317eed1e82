#include <torsionlab/symplectic.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace torsionlab;

TEST_CASE("form parity counts by genus") {
    for (long g : {1L, 2L, 3L}) {
        long even = 0, odd = 0;
        for (const auto& q : enumerate_forms(g))
            (form_parity(q) == Parity::even ? even : odd)++;
        CHECK(even == (1L << (g - 1)) * ((1L << g) + 1));
        CHECK(odd == (1L << (g - 1)) * ((1L << g) - 1));
    }
    CHECK(form_parity(standard_even_form(2)) == Parity::even);
}

TEST_CASE("quadratic forms refine the symplectic pairing") {
    long g = 2;
    for (const auto& q : enumerate_forms(g))
        for (unsigned x = 0; x < 16; ++x)
            for (unsigned y = 0; y < 16; ++y)
                CHECK((q(x ^ y) ^ q(x) ^ q(y)) == f2_pairing(x, y, g));
}

TEST_CASE("sigma index set excludes the symplectic pairs") {
    CHECK(in_sigma(1, 1, 2));
    CHECK(in_sigma(1, 4, 2));
    CHECK_FALSE(in_sigma(1, 2, 2));  // (2k-1, 2k)
    CHECK_FALSE(in_sigma(2, 1, 2));  // (2k, 2k-1)
    CHECK_FALSE(in_sigma(0, 1, 2));
    CHECK_FALSE(in_sigma(1, 5, 2));
}

TEST_CASE("elementary matrices are symplectic") {
    for (long g : {2L, 3L})
        for (long i = 1; i <= 2 * g; ++i)
            for (long j = 1; j <= 2 * g; ++j) {
                if (!in_sigma(i, j, g)) continue;
                SympMatrix E = elementary_matrix(i, j, g);
                CHECK(E.is_symplectic());
                CHECK(E * E.inverse() == SympMatrix(g));
            }
    CHECK_THROWS_AS(elementary_matrix(1, 2, 2), std::out_of_range);
}

TEST_CASE("Gamma_{1,2} membership") {
    CHECK(in_gamma12(SympMatrix(2)));
    CHECK(in_gamma12(elementary_matrix(1, 4, 2)));
    // E_11 moves q0: q0(e1 + f1) flips under the transvection
    CHECK_FALSE(in_gamma12(elementary_matrix(1, 1, 2)));
    // membership is closed under product on a sample
    SympMatrix a = elementary_matrix(1, 4, 2), b = elementary_matrix(3, 2, 2);
    if (in_gamma12(a) && in_gamma12(b)) CHECK(in_gamma12(a * b));
}

TEST_CASE("commutator relations hold at g = 2 and 3") {
    for (long g : {2L, 3L}) {
        auto rep = verify_commutator_relations(g);
        CHECK(rep.pass);
        CHECK(rep.instances_checked > 0);
        REQUIRE(rep.convention.has_value());
        CHECK(*rep.convention == CommutatorConvention::aba_inv_b_inv);
    }
}

TEST_CASE("Delta generators at g = 3 are witnessed commutators") {
    auto rep = verify_delta_in_commutators(3);
    CHECK(rep.pass);
    CHECK(rep.witnesses.size() == 24);
    for (const auto& w : rep.witnesses) CHECK(w.found);
}

TEST_CASE("Delta generators pass the shape check") {
    for (long g : {2L, 3L})
        for (const auto& gen : delta_generators(g)) CHECK(delta_generator_shape_ok(gen.matrix));
}

TEST_CASE("S6 action: order, faithfulness, named elements") {
    S6Action act = sp4_s6_action();
    CHECK(act.order_720);
    CHECK(act.faithful);
    CHECK(act.homomorphism);
    CHECK(act.surjective);
    CHECK(act.odd_forms.size() == 6);

    auto p14 = permutation_of(act, elementary_matrix(1, 4, 2));
    CHECK(cycle_type(p14) == std::vector<int>{2, 2, 2});
    CHECK(permutation_sign(p14) == -1);

    auto p11 = permutation_of(act, elementary_matrix(1, 1, 2));
    CHECK(cycle_type(p11) == std::vector<int>{1, 1, 1, 1, 2});
    CHECK(permutation_sign(p11) == -1);

    CHECK(sign_character(act, SympMatrix(2)) == 1);
}

TEST_CASE("the action preserves parity of forms") {
    S6Action act = sp4_s6_action();
    for (const auto& rows : act.elements)
        for (const auto& q : enumerate_forms(2))
            CHECK(form_parity(act_on_form(rows, q)) == form_parity(q));
}

TEST_CASE("lagrangian enumeration matches the closed form") {
    for (auto [p, r] : std::vector<std::pair<long, long>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
        CHECK(Int(lagrangian_enumerate(p, r)) == lagrangian_count_formula(p, r));
        CHECK(covering_degree_prime_check(p, r));
    }
    CHECK(lagrangian_count_formula(2, 2) == 15);
    CHECK_THROWS_AS(lagrangian_enumerate(5, 3), std::length_error);
}
