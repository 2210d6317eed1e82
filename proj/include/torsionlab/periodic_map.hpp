#pragma once

// Periodic maps Z -> Z/p^k Z with period p^N, the difference operator,
// degree, and the g-speciality predicates.

#include <torsionlab/integer.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace torsionlab {

struct PeriodicMap {
    long p;
    int k;  // values live in Z/p^k
    int N;  // period p^N
    long modulus;
    long period;
    std::vector<long> values;  // values[n] = phi(n), length p^N

    PeriodicMap(long p_, int k_, int N_)
        : p(p_), k(k_), N(N_),
          modulus(PrimePower(p_, k_).value_long()),
          period(PrimePower(p_, N_).value_long()),
          values(static_cast<std::size_t>(period), 0) {}

    long operator()(long n) const { return values[static_cast<std::size_t>(mod_reduce(n, period))]; }

    void set(long n, long v) { values[static_cast<std::size_t>(mod_reduce(n, period))] = mod_reduce(v, modulus); }

    bool is_zero() const {
        for (long v : values)
            if (v != 0) return false;
        return true;
    }

    bool operator==(const PeriodicMap& o) const {
        return p == o.p && k == o.k && N == o.N && values == o.values;
    }

    static PeriodicMap zero(long p, int k, int N) { return PeriodicMap(p, k, N); }

    static PeriodicMap monomial(long p, int k, int N, long g) {
        PeriodicMap m(p, k, N);
        for (long n = 0; n < m.period; ++n) m.values[static_cast<std::size_t>(n)] = mod_pow(n, g, m.modulus);
        // 0^0 = 1 convention matters only for g = 0.
        if (g == 0) m.values[0] = 1 % m.modulus;
        return m;
    }

    static PeriodicMap from_values(long p, int k, int N, const std::vector<long>& vals) {
        PeriodicMap m(p, k, N);
        if (static_cast<long>(vals.size()) != m.period)
            throw std::invalid_argument("PeriodicMap: table length must equal p^N");
        for (long n = 0; n < m.period; ++n) m.values[static_cast<std::size_t>(n)] = mod_reduce(vals[static_cast<std::size_t>(n)], m.modulus);
        return m;
    }

    PeriodicMap operator+(const PeriodicMap& o) const {
        PeriodicMap r(p, k, N);
        for (long n = 0; n < period; ++n)
            r.values[static_cast<std::size_t>(n)] = mod_reduce(values[static_cast<std::size_t>(n)] + o.values[static_cast<std::size_t>(n)], modulus);
        return r;
    }

    PeriodicMap scaled(long c) const {
        PeriodicMap r(p, k, N);
        for (long n = 0; n < period; ++n)
            r.values[static_cast<std::size_t>(n)] = mod_reduce(values[static_cast<std::size_t>(n)] * mod_reduce(c, modulus), modulus);
        return r;
    }
};

inline PeriodicMap difference(const PeriodicMap& phi) {
    PeriodicMap d(phi.p, phi.k, phi.N);
    for (long n = 0; n < phi.period; ++n)
        d.values[static_cast<std::size_t>(n)] = mod_reduce(phi(n + 1) - phi(n), phi.modulus);
    return d;
}

// Minimal l >= 0 with delta^{l+1} phi = 0; the zero map has degree 0 by
// convention. Always finite: delta^{k*p^N} annihilates every table.
inline long degree(const PeriodicMap& phi) {
    if (phi.is_zero()) return 0;
    PeriodicMap cur = phi;
    long bound = static_cast<long>(phi.k) * phi.period + 1;
    for (long t = 1; t <= bound; ++t) {
        cur = difference(cur);
        if (cur.is_zero()) return t - 1;
    }
    throw std::logic_error("degree: difference iteration did not terminate");
}

struct SpecialityWitness {
    // Violation of the multiplicativity identity at (n, m), or degree excess.
    bool degree_violation = false;
    long degree_found = 0;
    long n = 0, m = 0;
};

// phi(m^2 n) = m^{2g} phi(n) for all n, m in a full residue system mod p^N,
// plus degree <= g+1.
inline std::optional<SpecialityWitness> g_special_violation(const PeriodicMap& phi, long g) {
    long deg = degree(phi);
    if (!phi.is_zero() && deg > g + 1) {
        SpecialityWitness w;
        w.degree_violation = true;
        w.degree_found = deg;
        return w;
    }
    // phi(m^2 n) depends on m mod p^N while m^{2g} phi(n) depends on m mod
    // p^k, so "for all m" needs a full residue system mod p^max(N,k).
    long m_range = std::max(phi.period, phi.modulus);
    for (long m = 0; m < m_range; ++m) {
        long m2 = mod_reduce(static_cast<long>((static_cast<__int128>(m) * m) % phi.period), phi.period);
        long m2g = mod_pow(m, 2 * g, phi.modulus);
        for (long n = 0; n < phi.period; ++n) {
            long lhs = phi(static_cast<long>((static_cast<__int128>(m2) * n) % phi.period));
            long rhs = mod_reduce(m2g * phi(n), phi.modulus);
            if (lhs != rhs) {
                SpecialityWitness w;
                w.n = n;
                w.m = m;
                return w;
            }
        }
    }
    return std::nullopt;
}

inline bool is_g_special(const PeriodicMap& phi, long g) { return !g_special_violation(phi, g).has_value(); }

// Weak variant: degree <= g+1 and phi(m^2) = m^{2g} phi(1) for m coprime to p.
inline std::optional<SpecialityWitness> weakly_special_violation(const PeriodicMap& phi, long g) {
    long deg = degree(phi);
    if (!phi.is_zero() && deg > g + 1) {
        SpecialityWitness w;
        w.degree_violation = true;
        w.degree_found = deg;
        return w;
    }
    long m_range = std::max(phi.period, phi.modulus);
    for (long m = 0; m < m_range; ++m) {
        if (m % phi.p == 0) continue;
        long m2 = mod_reduce(static_cast<long>((static_cast<__int128>(m) * m) % phi.period), phi.period);
        if (phi(m2) != mod_reduce(mod_pow(m, 2 * g, phi.modulus) * phi(1), phi.modulus)) {
            SpecialityWitness w;
            w.n = 1;
            w.m = m;
            return w;
        }
    }
    return std::nullopt;
}

inline bool is_weakly_special(const PeriodicMap& phi, long g) { return !weakly_special_violation(phi, g).has_value(); }

}  // namespace torsionlab
