#include <torsionlab/special_kernel.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace torsionlab;

TEST_CASE("difference operator and degree") {
    // phi(n) = n^2 mod 5, period 25: degree should be 2
    PeriodicMap phi = PeriodicMap::monomial(5, 1, 2, 2);
    CHECK(degree(phi) == 2);
    CHECK(degree(PeriodicMap::zero(5, 1, 2)) == 0);
    // constant map has degree 0
    PeriodicMap c(5, 1, 1);
    for (long n = 0; n < 5; ++n) c.set(n, 3);
    CHECK(degree(c) == 0);
}

TEST_CASE("monomial n^g is g-special") {
    for (long g : {1L, 2L, 3L}) {
        PeriodicMap phi = PeriodicMap::monomial(5, 1, 1, g);
        CHECK(is_g_special(phi, g));
        CHECK(is_weakly_special(phi, g));
    }
    // n^g is not (g-1)-special in general: multiplicativity exponent differs
    CHECK_FALSE(is_g_special(PeriodicMap::monomial(5, 1, 1, 3), 2));
}

TEST_CASE("speciality violations carry witnesses") {
    PeriodicMap phi(5, 1, 1);
    phi.set(2, 1);  // indicator of 2 is not special
    auto w = g_special_violation(phi, 2);
    REQUIRE(w.has_value());
}

TEST_CASE("kernel via SNF matches F_p elimination at k=1") {
    for (long g : {2L, 3L}) {
        KernelParams prm{5, 1, 2, g};
        SpecialKernel ker = special_kernel(prm);
        auto fp_basis = special_kernel_fp(prm);
        // same group size: p^dim == product of generator orders
        Int fp_size = int_pow(5, static_cast<unsigned>(fp_basis.size()));
        CHECK(ker.size == fp_size);
        // every F_p basis vector satisfies the SNF-side membership (it is
        // g-special by construction of the system)
        for (const auto& v : fp_basis) CHECK(is_g_special(v, g));
        for (const auto& v : ker.generators) CHECK(is_g_special(v, g));
    }
}

TEST_CASE("kernel is closed under addition and scaling") {
    KernelParams prm{5, 2, 1, 2};
    SpecialKernel ker = special_kernel(prm);
    REQUIRE_FALSE(ker.generators.empty());
    const auto& a = ker.generators.front();
    CHECK(is_g_special(a + a, prm.g));
    CHECK(is_g_special(a.scaled(7), prm.g));
}

TEST_CASE("lemma ar1: kernel is exactly the multiples of n^g") {
    KernelParams prm{5, 1, 2, 2};
    auto rep = verify_lemma_ar1(prm);
    CHECK(rep.passed());
    CHECK(rep.kernel_size == 5);
    // and the full enumeration agrees
    SpecialKernel ker = special_kernel(prm);
    PeriodicMap mono = PeriodicMap::monomial(5, 1, 2, 2);
    for (const auto& phi : ker.enumerate()) {
        bool is_multiple = false;
        for (long lam = 0; lam < 5; ++lam)
            if (phi == mono.scaled(lam)) { is_multiple = true; break; }
        CHECK(is_multiple);
    }
}

TEST_CASE("hypothesis gating reports honestly") {
    // p = 3 violates the ar1 hypothesis regardless of outcome
    KernelParams prm{3, 1, 1, 1};
    auto rep = verify_lemma_ar1(prm);
    CHECK(rep.status == SpecialityReport::Status::hypothesis_not_met);
}

TEST_CASE("weak proposition annihilation exponent") {
    KernelParams prm{5, 2, 2, 2};
    auto rep = verify_weak_proposition(prm);
    CHECK(rep.passed());
    CHECK(rep.kernel_size == 625);
    CHECK(rep.detail == "n(p,g) = 2");
}

TEST_CASE("enumeration limit guards blowups") {
    KernelParams prm{5, 1, 4, 2};  // p^N = 625 > default limit
    CHECK_THROWS_AS(special_kernel(prm), std::length_error);
}
