#pragma once

// Exact integer arithmetic helpers on top of GMP: valuations, residue
// symbols, primality by trial division, and the small congruence solvers
// used by the isogeny-style identities.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace torsionlab {

using Int = mpz_class;

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

struct PrimePower {
    long p;
    int k;

    PrimePower(long p_, int k_) : p(p_), k(k_) {
        if (!is_prime(p)) throw std::invalid_argument("PrimePower: p is not prime");
        if (k < 1) throw std::invalid_argument("PrimePower: exponent must be >= 1");
    }

    Int value() const {
        Int v;
        mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
        return v;
    }

    // p^k as a long; throws when it does not fit.
    long value_long() const {
        Int v = value();
        if (!v.fits_slong_p()) throw std::overflow_error("PrimePower: p^k exceeds long");
        return v.get_si();
    }
};

// An element of Z/mZ, always kept reduced.
struct ResidueElement {
    long modulus;
    long value;

    ResidueElement(long modulus_, long value_) : modulus(modulus_) {
        if (modulus < 2) throw std::invalid_argument("ResidueElement: modulus must be >= 2");
        value = ((value_ % modulus) + modulus) % modulus;
    }
};

inline long mod_reduce(long x, long m) { return ((x % m) + m) % m; }

inline long mod_pow(long base, long exp, long m) {
    long r = 1 % m;
    long b = mod_reduce(base, m);
    while (exp > 0) {
        if (exp & 1) r = static_cast<long>((static_cast<__int128>(r) * b) % m);
        b = static_cast<long>((static_cast<__int128>(b) * b) % m);
        exp >>= 1;
    }
    return r;
}

inline unsigned p_adic_valuation(const Int& n, long p) {
    if (n == 0) throw std::domain_error("p_adic_valuation: infinite valuation at n=0");
    if (!is_prime(p)) throw std::invalid_argument("p_adic_valuation: p is not prime");
    Int m = abs(n);
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(p));
        ++e;
    }
    return e;
}

inline unsigned p_adic_valuation(long n, long p) { return p_adic_valuation(Int(n), p); }

inline int legendre_symbol(const Int& n, long p) {
    if (p == 2 || !is_prime(p)) throw std::invalid_argument("legendre_symbol: p must be an odd prime");
    Int r = n % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    // Euler's criterion.
    Int e;
    mpz_powm_ui(e.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>((p - 1) / 2), Int(p).get_mpz_t());
    return e == 1 ? 1 : -1;
}

inline int legendre_symbol(long n, long p) { return legendre_symbol(Int(n), p); }

// Smallest lexicographic (n, m) with n^2 + m^2 = -1 mod p^N; always exists
// for odd p.
inline std::pair<long, long> solve_two_squares_neg1(long p, int N) {
    if (p == 2 || !is_prime(p)) throw std::invalid_argument("solve_two_squares_neg1: p must be an odd prime");
    long q = PrimePower(p, N).value_long();
    long target = q - 1;
    for (long n = 0; n < q; ++n) {
        long n2 = mod_reduce(static_cast<long>((static_cast<__int128>(n) * n) % q), q);
        for (long m = 0; m < q; ++m) {
            long m2 = static_cast<long>((static_cast<__int128>(m) * m) % q);
            if (mod_reduce(n2 + m2, q) == target) return {n, m};
        }
    }
    throw std::logic_error("solve_two_squares_neg1: no solution found (impossible for odd p)");
}

// a^2 + l*b^2 = -1 mod N, exhaustive; nullopt when no solution exists.
inline std::optional<std::pair<long, long>> solve_binary_form_neg1(long l, long N) {
    if (l < 1 || N < 2) throw std::invalid_argument("solve_binary_form_neg1: need l >= 1, N >= 2");
    long target = N - 1;
    for (long a = 0; a < N; ++a) {
        long a2 = static_cast<long>((static_cast<__int128>(a) * a) % N);
        for (long b = 0; b < N; ++b) {
            long lb2 = static_cast<long>((static_cast<__int128>(l) * b % N) * b % N);
            if (mod_reduce(a2 + lb2, N) == target) return std::make_pair(a, b);
        }
    }
    return std::nullopt;
}

// n^2 + m^2 + s^2 + t^2 = -1 mod N; always solvable.
inline std::tuple<long, long, long, long> solve_four_squares_neg1(long N) {
    if (N < 2) throw std::invalid_argument("solve_four_squares_neg1: N must be >= 2");
    long target = N - 1;
    auto sq = [N](long x) { return static_cast<long>((static_cast<__int128>(x) * x) % N); };
    for (long n = 0; n < N; ++n)
        for (long m = 0; m < N; ++m)
            for (long s = 0; s < N; ++s)
                for (long t = 0; t < N; ++t)
                    if (mod_reduce(sq(n) + sq(m) + sq(s) + sq(t), N) == target)
                        return {n, m, s, t};
    throw std::logic_error("solve_four_squares_neg1: no solution found");
}

inline Int int_pow(long base, unsigned exp) {
    Int v;
    mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(base), exp);
    return v;
}

inline Int factorial(unsigned n) {
    Int v;
    mpz_fac_ui(v.get_mpz_t(), n);
    return v;
}

}  // namespace torsionlab
