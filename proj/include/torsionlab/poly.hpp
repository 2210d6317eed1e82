#pragma once

// Dense polynomials over Z/p^k Z with (t-1)-adic valuation: power sums
// S_r(t), generating polynomials of periodic maps, and the divisibility
// criteria tying valuation to difference-degree.

#include <torsionlab/periodic_map.hpp>

#include <optional>
#include <string>
#include <vector>

namespace torsionlab {

struct PolyOverZpk {
    long p;
    int k;
    long modulus;
    std::vector<long> coeffs;  // coeffs[i] = coefficient of t^i; trimmed

    PolyOverZpk(long p_, int k_) : p(p_), k(k_), modulus(PrimePower(p_, k_).value_long()) {}

    static PolyOverZpk from_coeffs(long p, int k, std::vector<long> c) {
        PolyOverZpk q(p, k);
        for (auto& x : c) x = mod_reduce(x, q.modulus);
        q.coeffs = std::move(c);
        q.trim();
        return q;
    }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }

    bool is_zero() const { return coeffs.empty(); }

    // Degree of the zero polynomial is a distinguished marker (nullopt).
    std::optional<long> poly_degree() const {
        if (coeffs.empty()) return std::nullopt;
        return static_cast<long>(coeffs.size()) - 1;
    }

    long coeff(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : 0; }

    bool operator==(const PolyOverZpk& o) const { return p == o.p && k == o.k && coeffs == o.coeffs; }

    PolyOverZpk operator+(const PolyOverZpk& o) const {
        PolyOverZpk r(p, k);
        r.coeffs.resize(std::max(coeffs.size(), o.coeffs.size()), 0);
        for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = mod_reduce(coeff(i) + o.coeff(i), modulus);
        r.trim();
        return r;
    }

    PolyOverZpk operator-(const PolyOverZpk& o) const {
        PolyOverZpk r(p, k);
        r.coeffs.resize(std::max(coeffs.size(), o.coeffs.size()), 0);
        for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = mod_reduce(coeff(i) - o.coeff(i), modulus);
        r.trim();
        return r;
    }

    PolyOverZpk operator*(const PolyOverZpk& o) const {
        PolyOverZpk r(p, k);
        if (is_zero() || o.is_zero()) return r;
        r.coeffs.assign(coeffs.size() + o.coeffs.size() - 1, 0);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] == 0) continue;
            for (std::size_t j = 0; j < o.coeffs.size(); ++j)
                r.coeffs[i + j] = mod_reduce(r.coeffs[i + j] + coeffs[i] * o.coeffs[j], modulus);
        }
        r.trim();
        return r;
    }

    PolyOverZpk scaled(long c) const {
        PolyOverZpk r(p, k);
        r.coeffs = coeffs;
        for (auto& x : r.coeffs) x = mod_reduce(x * mod_reduce(c, modulus), modulus);
        r.trim();
        return r;
    }

    // t * d/dt.
    PolyOverZpk theta_derivative() const {
        PolyOverZpk r(p, k);
        r.coeffs.resize(coeffs.size(), 0);
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            r.coeffs[i] = mod_reduce(coeffs[i] * static_cast<long>(i), modulus);
        r.trim();
        return r;
    }
};

inline PolyOverZpk t_minus_one_power(long p, int k, long e) {
    PolyOverZpk base = PolyOverZpk::from_coeffs(p, k, {-1, 1});
    PolyOverZpk r = PolyOverZpk::from_coeffs(p, k, {1});
    for (long i = 0; i < e; ++i) r = r * base;
    return r;
}

// Quotient of Q by (t-1) when exact; nullopt when (t-1) does not divide Q.
// Synthetic division works over any Z/p^k.
inline std::optional<PolyOverZpk> divide_by_t_minus_one(const PolyOverZpk& q) {
    if (q.is_zero()) return q;
    std::vector<long> out(q.coeffs.size() - 1, 0);
    long carry = 0;  // running value: remainder accumulates Q(1)
    for (std::size_t i = q.coeffs.size(); i-- > 1;) {
        carry = mod_reduce(carry + q.coeffs[i], q.modulus);
        out[i - 1] = carry;
    }
    long rem = mod_reduce(carry + q.coeffs[0], q.modulus);
    if (rem != 0) return std::nullopt;
    return PolyOverZpk::from_coeffs(q.p, q.k, out);
}

// (t-1)-adic valuation over F_p by repeated exact division; zero
// polynomial has infinite valuation (nullopt).
inline std::optional<long> t1_valuation(const PolyOverZpk& q) {
    if (q.k != 1) throw std::invalid_argument("t1_valuation: defined over a field (k=1)");
    if (q.is_zero()) return std::nullopt;
    long v = 0;
    PolyOverZpk cur = q;
    while (true) {
        auto next = divide_by_t_minus_one(cur);
        if (!next) return v;
        if (next->is_zero()) return v + 1;
        cur = *next;
        ++v;
    }
}

// S_r(t) = sum_{n=0}^{p-1} n^r t^n over F_p, with 0^0 = 1.
inline PolyOverZpk power_sum_poly(long r, long p) {
    std::vector<long> c(static_cast<std::size_t>(p), 0);
    for (long n = 0; n < p; ++n) c[static_cast<std::size_t>(n)] = (n == 0 && r == 0) ? 1 : mod_pow(n, r, p);
    return PolyOverZpk::from_coeffs(p, 1, std::move(c));
}

// Q_phi(t) = sum_{n=0}^{p^N-1} phi(n) t^n.
inline PolyOverZpk generating_poly(const PeriodicMap& phi) {
    return PolyOverZpk::from_coeffs(phi.p, phi.k, phi.values);
}

// Remainder of a by the monic divisor m (works over Z/p^k).
inline PolyOverZpk poly_mod_monic(const PolyOverZpk& a, const PolyOverZpk& m) {
    if (m.is_zero() || m.coeffs.back() != 1) throw std::invalid_argument("poly_mod_monic: divisor must be monic");
    PolyOverZpk r = a;
    long dm = *m.poly_degree();
    while (!r.is_zero() && *r.poly_degree() >= dm) {
        long shift = *r.poly_degree() - dm;
        long lead = r.coeffs.back();
        for (long i = 0; i <= dm; ++i)
            r.coeffs[static_cast<std::size_t>(shift + i)] =
                mod_reduce(r.coeffs[static_cast<std::size_t>(shift + i)] - lead * m.coeff(static_cast<std::size_t>(i)),
                           r.modulus);
        r.trim();
    }
    return r;
}

struct PolyReport {
    std::string check;
    bool pass = true;
    std::string detail;
};

// v_{(t-1)}(S_r) = p - 1 - r for 0 <= r <= p-1.
inline PolyReport verify_lemma_val(long p) {
    PolyReport rep{"lemma-val"};
    for (long r = 0; r <= p - 1; ++r) {
        auto v = t1_valuation(power_sum_poly(r, p));
        if (!v || *v != p - 1 - r) {
            rep.pass = false;
            rep.detail = "failed at r=" + std::to_string(r);
            return rep;
        }
    }
    return rep;
}

// S_r(t) = (-1)^r r! t^r (t-1)^{p-1-r} mod (t-1)^{p-r}.
inline PolyReport verify_Sr_congruence(long p) {
    PolyReport rep{"sr-congruence"};
    for (long r = 0; r <= p - 1; ++r) {
        long fact = 1;
        for (long i = 2; i <= r; ++i) fact = mod_reduce(fact * i, p);
        long sign = (r % 2 == 0) ? 1 : p - 1;
        PolyOverZpk tr = PolyOverZpk::from_coeffs(p, 1, [&] {
            std::vector<long> c(static_cast<std::size_t>(r + 1), 0);
            c.back() = mod_reduce(sign * fact, p);
            return c;
        }());
        PolyOverZpk rhs = tr * t_minus_one_power(p, 1, p - 1 - r);
        PolyOverZpk diff = power_sum_poly(r, p) - rhs;
        auto v = t1_valuation(diff);
        if (v && *v < p - r) {
            rep.pass = false;
            rep.detail = "failed at r=" + std::to_string(r);
            return rep;
        }
    }
    return rep;
}

// S_r = S_{r+p-1} for r > 0 and S_{r+1} = t * S_r'.
inline PolyReport verify_Sr_identities(long p, long r_max) {
    PolyReport rep{"sr-identities"};
    for (long r = 1; r <= r_max; ++r) {
        if (!(power_sum_poly(r, p) == power_sum_poly(r + p - 1, p))) {
            rep.pass = false;
            rep.detail = "periodicity failed at r=" + std::to_string(r);
            return rep;
        }
        if (!(power_sum_poly(r + 1, p) == power_sum_poly(r, p).theta_derivative())) {
            rep.pass = false;
            rep.detail = "derivative identity failed at r=" + std::to_string(r);
            return rep;
        }
    }
    return rep;
}

// [degree(phi) <= g+1] <=> [(t^{p^N} - 1) | Q_phi * (t-1)^{g+2}], and for
// k=1 also <=> [v_{(t-1)}(Q_phi) >= p^N - g - 2].
inline PolyReport verify_degree_divisibility(const PeriodicMap& phi, long g) {
    PolyReport rep{"degree-divisibility"};
    bool low_degree = degree(phi) <= g + 1;

    PolyOverZpk q = generating_poly(phi);
    PolyOverZpk prod = q * t_minus_one_power(phi.p, phi.k, g + 2);
    std::vector<long> mono(static_cast<std::size_t>(phi.period + 1), 0);
    mono[0] = mod_reduce(-1, phi.modulus);
    mono[static_cast<std::size_t>(phi.period)] = 1;
    PolyOverZpk divisor = PolyOverZpk::from_coeffs(phi.p, phi.k, std::move(mono));
    bool divisible = poly_mod_monic(prod, divisor).is_zero();

    if (low_degree != divisible) {
        rep.pass = false;
        rep.detail = "t^{p^N}-1 divisibility not equivalent to degree bound";
        return rep;
    }
    if (phi.k == 1 && g + 2 <= phi.period) {
        auto v = t1_valuation(q);
        bool val_ok = !v /* zero poly */ || *v >= phi.period - g - 2;
        if (low_degree != val_ok) {
            rep.pass = false;
            rep.detail = "(t-1)-valuation criterion not equivalent to degree bound";
        }
    }
    return rep;
}

}  // namespace torsionlab
