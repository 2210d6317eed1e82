#pragma once

// The explicit constants of the main torsion bounds: per-prime exponents
// n_p, the 2-exponent, the product d', the Vandermonde-based exponents
// n(p,g) and the global constant N(g), plus the baseline 4d^3 bound.

#include <torsionlab/integer.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace torsionlab {

struct BoundBreakdown {
    long d = 1;
    long g = 1;
    std::map<long, unsigned> odd_exponents;  // p -> n_p over qualifying primes
    unsigned n2 = 2;
    Int d_prime = 1;
    Int total_bound = 4;
    // Parameter sets where p = 3 sits inside the open interval
    // (2g+1)/3 < p < 2g-1, which the case analysis sends to v_3(d).
    bool p3_interval_ambiguity = false;
};

inline std::vector<long> prime_divisors(long d) {
    std::vector<long> ps;
    long m = d;
    for (long q = 2; q * q <= m; ++q)
        if (m % q == 0) {
            ps.push_back(q);
            while (m % q == 0) m /= q;
        }
    if (m > 1) ps.push_back(m);
    return ps;
}

inline BoundBreakdown theorem1_exponents(long d, long g) {
    if (d < 1 || g < 1) throw std::invalid_argument("theorem1_exponents: need d, g >= 1");
    BoundBreakdown b;
    b.d = d;
    b.g = g;
    b.n2 = 2 + 3 * p_adic_valuation(d, 2);
    long pmax = std::max(2 * g - 1, 3L);
    for (long p : prime_divisors(d)) {
        if (p % 4 != 3) continue;  // p = -1 mod 4
        if (p > pmax) continue;
        unsigned np;
        bool in_interval = (3 * p > 2 * g + 1) && (p < 2 * g - 1);
        if (p != 3 && in_interval)
            np = 1;
        else if (p == 2 * g - 1 && p != 3)
            np = 2;
        else
            np = p_adic_valuation(d, p);
        if (p == 3 && in_interval) b.p3_interval_ambiguity = true;
        b.odd_exponents[p] = np;
        b.d_prime *= int_pow(p, np);
    }
    b.total_bound = int_pow(2, b.n2) * b.d_prime;
    return b;
}

inline Int faltings_chai_bound(long d) {
    if (d < 1) throw std::invalid_argument("faltings_chai_bound: need d >= 1");
    return Int(4) * d * d * d;
}

// First `count` squares of positive integers coprime to p, increasing.
inline std::vector<long> first_squares_coprime(long p, long count) {
    if (count < 1) throw std::invalid_argument("first_squares_coprime: count must be >= 1");
    std::vector<long> out;
    for (long m = 1; static_cast<long>(out.size()) < count; ++m) {
        if (m % p == 0) continue;
        out.push_back(m * m);
    }
    return out;
}

inline Int vandermonde(const std::vector<long>& nodes) {
    Int prod = 1;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j) prod *= Int(nodes[j] - nodes[i]);
    return prod;
}

// n(p,g) = v_p( (g+1)! * Vandermonde(first g+2 squares coprime to p) ).
inline unsigned n_p_g(long p, long g) {
    if (!is_prime(p) || g < 1) throw std::invalid_argument("n_p_g: need prime p and g >= 1");
    std::vector<long> nodes = first_squares_coprime(p, g + 2);
    return p_adic_valuation(factorial(static_cast<unsigned>(g + 1)) * vandermonde(nodes), p);
}

// The g = (p+1)/2 variant with node 0 prepended; the valuation is 2.
inline unsigned variant_n_p_g_with_zero(long p) {
    if (!is_prime(p) || p <= 3) throw std::invalid_argument("variant_n_p_g_with_zero: need prime p > 3");
    long g = (p + 1) / 2;
    std::vector<long> nodes{0};
    for (long s : first_squares_coprime(p, g + 1)) nodes.push_back(s);
    return p_adic_valuation(vandermonde(nodes), p);
}

inline Int big_N_of_g(long g) {
    if (g < 1) throw std::invalid_argument("big_N_of_g: need g >= 1");
    Int prod = 1;
    for (long p = 2; p <= 2 * g - 1; ++p)
        if (is_prime(p)) prod *= int_pow(p, n_p_g(p, g));
    return prod;
}

inline long optimal_corollary_bound(long d, long g, bool three_type_is_1113k) {
    (void)g;
    if (d % 2 == 0) throw std::invalid_argument("optimal_corollary_bound: inapplicable for even d");
    return three_type_is_1113k ? 12 : 4;
}

}  // namespace torsionlab
