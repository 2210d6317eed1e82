// Acceptance harness: one line per criterion. Usage:
//   acceptance <path-to-cli> <configs-dir>
// Exits nonzero if any criterion fails.

#include <torsionlab/checks.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

using namespace torsionlab;

namespace {

int failures = 0;

void report(int n, bool ok) {
    std::printf("criterion %d: %s\n", n, ok ? "pass" : "fail");
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::fprintf(stderr, "usage: acceptance <cli-path> <configs-dir>\n");
        return 2;
    }
    std::string cli = argv[1];
    std::string configs = argv[2];

    // 1. power-sum valuation lemma plus congruence and identities, < 1 s
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        for (long p : {3L, 5L, 7L, 11L, 13L})
            ok = ok && verify_lemma_val(p).pass && verify_Sr_congruence(p).pass &&
                 verify_Sr_identities(p, 2 * p).pass;
        report(1, ok && seconds_since(t0) < 1.0);
    }

    // 2. ar1: kernel is exactly the scalar multiples of n^g, < 10 s
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        struct Case { long p, g; int k, N; } cases[]{{5, 2, 1, 2}, {7, 2, 1, 2}, {7, 3, 1, 2}, {5, 2, 2, 2}};
        for (auto c : cases) {
            KernelParams prm{c.p, c.k, c.N, c.g};
            auto rep = verify_lemma_ar1(prm);
            ok = ok && rep.passed() && rep.kernel_size == PrimePower(c.p, c.k).value();
        }
        report(2, ok && seconds_since(t0) < 10.0);
    }

    // 3. modp: kernel inside span{n^g, n^{g-(p-1)/2}} over F_p
    {
        bool ok = true;
        for (auto [p, g] : std::vector<std::pair<long, long>>{{5, 3}, {5, 4}, {7, 5}})
            ok = ok && verify_lemma_modp({p, 1, 2, g}).passed();
        report(3, ok);
    }

    // 4. ar2 at p=5, k=2, N=2, g in {4,5,6}
    {
        bool ok = true;
        for (long g : {4L, 5L, 6L}) ok = ok && verify_theorem_ar2({5, 2, 2, g}).passed();
        report(4, ok);
    }

    // 5. g=(p+1)/2 lemma and the variant valuation
    {
        bool ok = true;
        for (long p : {5L, 7L})
            ok = ok && verify_p2_annihilation(p).passed() && variant_n_p_g_with_zero(p) == 2;
        report(5, ok);
    }

    // 6. weak proposition with the bound-engine exponent
    {
        bool ok = true;
        for (long p : {5L, 3L}) ok = ok && verify_weak_proposition({p, 2, 2, 2}).passed();
        report(6, ok);
    }

    // 7. bound engine: total bound 4, optimal corollary 12, divisibility, N(2)
    {
        bool ok = true;
        for (long g = 1; g <= 6; ++g) ok = ok && theorem1_exponents(1, g).total_bound == 4;
        ok = ok && optimal_corollary_bound(1, 2, true) == 12;
        for (long d = 1; d <= 100 && ok; ++d)
            for (long g = 1; g <= 10; ++g)
                if (faltings_chai_bound(d) % theorem1_exponents(d, g).total_bound != 0) { ok = false; break; }
        Int direct = 1;
        for (long p : {2L, 3L}) {
            Int f = factorial(3) * vandermonde(first_squares_coprime(p, 4));
            Int stripped;
            mp_bitcnt_t e = mpz_remove(stripped.get_mpz_t(), f.get_mpz_t(), Int(p).get_mpz_t());
            direct *= int_pow(p, static_cast<unsigned>(e));
        }
        ok = ok && big_N_of_g(2) == direct;
        report(7, ok);
    }

    // 8. symplectic S6 identification and the named elements, < 30 s
    {
        auto t0 = std::chrono::steady_clock::now();
        S6Action act = sp4_s6_action();
        long even = 0, odd = 0;
        for (const auto& q : enumerate_forms(2)) (form_parity(q) == Parity::even ? even : odd)++;
        auto p14 = permutation_of(act, elementary_matrix(1, 4, 2));
        SympMatrix E11 = elementary_matrix(1, 1, 2);
        auto p11 = permutation_of(act, E11);
        auto rows_long = E11.mod2_rows();
        std::array<uint8_t, 4> rows{static_cast<uint8_t>(rows_long[0]), static_cast<uint8_t>(rows_long[1]),
                                    static_cast<uint8_t>(rows_long[2]), static_cast<uint8_t>(rows_long[3])};
        // the odd form x1 y1 + x2 y2 + x1^2 + y1^2 (the paper's form with the
        // hyperbolic plane labels exchanged to match this basis ordering)
        QuadraticFormF2 named(2, 0b0101);
        bool ok = act.order_720 && act.faithful && act.homomorphism && act.surjective &&
                  even == 10 && odd == 6 &&
                  cycle_type(p14) == std::vector<int>{2, 2, 2} && permutation_sign(p14) == -1 &&
                  cycle_type(p11) == std::vector<int>{1, 1, 1, 1, 2} &&
                  form_parity(named) == Parity::odd && act_on_form(rows, named) == named;
        report(8, ok && seconds_since(t0) < 30.0);
    }

    // 9. commutator relations and Delta witnesses at g = 3
    {
        bool ok = verify_commutator_relations(2).pass && verify_commutator_relations(3).pass;
        auto rep = verify_delta_in_commutators(3);
        ok = ok && rep.pass;
        for (const auto& w : rep.witnesses) ok = ok && w.found;
        report(9, ok);
    }

    // 10. lagrangian counts and coprimality
    {
        bool ok = true;
        for (auto [p, r] : std::vector<std::pair<long, long>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}})
            ok = ok && Int(lagrangian_enumerate(p, r)) == lagrangian_count_formula(p, r) &&
                 covering_degree_prime_check(p, r);
        report(10, ok);
    }

    // 11. Picard models and the genus-2 relation chain
    report(11, verify_m2bar_chain().pass);

    // 12. elliptic consistency and the section-6.2 relations
    {
        bool ok = mod_reduce(elliptic_delta(3, EllipticVariant::e).get_si(), 12) == 11 &&
                  order_mod(elliptic_delta(1, EllipticVariant::e), 12) == 4 &&
                  verify_62_relations_elliptic(25).pass;
        report(12, ok);
    }

    // 13. interpolation formulas and the 8 * 9 annihilator
    {
        bool ok = verify_interpolation(2, 20).pass && verify_interpolation(3, 20).pass;
        auto two = annihilator_bound(2, 2, 18);
        auto three = annihilator_bound(2, 3, 12);
        ok = ok && two && 8 % two->get_si() == 0 && three && 9 % three->get_si() == 0;
        report(13, ok);
    }

    // 14. negative control through the CLI: corrupted expectation exits 1,
    // the default suite exits 0 and finishes under 2 minutes
    {
        auto t0 = std::chrono::steady_clock::now();
        std::string good = "\"" + cli + "\" suite --config \"" + configs +
                           "/default_suite.json\" --jobs 4 > /dev/null 2>&1";
        std::string bad = "\"" + cli + "\" suite --config \"" + configs +
                          "/corrupted_suite.json\" > /dev/null 2>&1";
        int rc_good = std::system(good.c_str());
        double suite_secs = seconds_since(t0);
        int rc_bad = std::system(bad.c_str());
        bool ok = rc_good != -1 && WIFEXITED(rc_good) && WEXITSTATUS(rc_good) == 0 &&
                  rc_bad != -1 && WIFEXITED(rc_bad) && WEXITSTATUS(rc_bad) == 1 && suite_secs < 120.0;
        report(14, ok);
    }

    return failures == 0 ? 0 : 1;
}
