#ifndef BRANCHDIV_ZPOLY_HPP
#define BRANCHDIV_ZPOLY_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "branchdiv/rational.hpp"
#include "branchdiv/tower.hpp"

// Integer and prime-field polynomial engine backing univariate
// factorization over Q: Berlekamp mod p, quadratic Hensel lifting,
// Zassenhaus recombination. Everything is deterministic.

namespace branchdiv::zp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct Fp {
    u64 p;
    u64 add(u64 a, u64 b) const { return (a + b) % p; }
    u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
    u64 mul(u64 a, u64 b) const { return static_cast<u64>((u128)a * b % p); }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1 % p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a % p, p - 2); }
};

using FpPoly = std::vector<u64>;  // dense, c[i] = coeff of x^i

inline void fp_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}
inline int fp_deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

inline FpPoly fp_mul(const Fp& F, const FpPoly& a, const FpPoly& b) {
    if (a.empty() || b.empty()) return {};
    FpPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + (u128)a[i] * b[j]) % F.p;
    }
    fp_trim(out);
    return out;
}

inline void fp_divrem(const Fp& F, const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r) {
    r = a;
    fp_trim(r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
    u64 lcinv = F.inv(b.back());
    while (r.size() >= b.size()) {
        u64 c = F.mul(r.back(), lcinv);
        std::size_t shift = r.size() - b.size();
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = F.sub(r[shift + j], F.mul(c, b[j]));
        fp_trim(r);
    }
    fp_trim(q);
}

inline FpPoly fp_rem(const Fp& F, const FpPoly& a, const FpPoly& b) {
    FpPoly q, r;
    fp_divrem(F, a, b, q, r);
    return r;
}

inline FpPoly fp_monic(const Fp& F, FpPoly f) {
    fp_trim(f);
    if (f.empty()) return f;
    u64 s = F.inv(f.back());
    for (auto& c : f) c = F.mul(c, s);
    return f;
}

inline FpPoly fp_gcd(const Fp& F, FpPoly a, FpPoly b) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        FpPoly r = fp_rem(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(F, a);
}

inline FpPoly fp_deriv(const Fp& F, const FpPoly& f) {
    FpPoly out;
    for (std::size_t i = 1; i < f.size(); ++i) out.push_back(F.mul(f[i], i % F.p));
    fp_trim(out);
    return out;
}

inline FpPoly fp_powmod(const Fp& F, FpPoly base, Int e, const FpPoly& mod) {
    FpPoly r{1};
    base = fp_rem(F, base, mod);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = fp_rem(F, fp_mul(F, r, base), mod);
        base = fp_rem(F, fp_mul(F, base, base), mod);
        e >>= 1;
    }
    return r;
}

// Berlekamp factorization of a squarefree monic polynomial mod p.
// Deterministic: null space by Gaussian elimination, splitting by scanning
// c = 0..p-1. Intended for small primes.
inline std::vector<FpPoly> berlekamp(const Fp& F, const FpPoly& f) {
    const int n = fp_deg(f);
    if (n <= 1) return {f};
    // Q[i] = x^{i p} mod f
    std::vector<FpPoly> Q(n);
    FpPoly xp = fp_powmod(F, FpPoly{0, 1}, Int(static_cast<unsigned long>(F.p)), f);
    FpPoly cur{1};
    for (int i = 0; i < n; ++i) {
        Q[i] = cur;
        Q[i].resize(n, 0);
        if (i + 1 < n) cur = fp_rem(F, fp_mul(F, cur, xp), f);
    }
    // kernel of (Q - I)^T : rows are images of basis vectors
    std::vector<std::vector<u64>> M(n, std::vector<u64>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) M[j][i] = Q[i][j];  // transpose so kernel vectors multiply on the right
        M[i][i] = F.sub(M[i][i], 1);
    }
    // Gaussian elimination, track pivots
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int pr = -1;
        for (int i = row; i < n; ++i)
            if (M[i][col]) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(M[row], M[pr]);
        u64 inv = F.inv(M[row][col]);
        for (int j = 0; j < n; ++j) M[row][j] = F.mul(M[row][j], inv);
        for (int i = 0; i < n; ++i)
            if (i != row && M[i][col]) {
                u64 c = M[i][col];
                for (int j = 0; j < n; ++j) M[i][j] = F.sub(M[i][j], F.mul(c, M[row][j]));
            }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<FpPoly> basis;
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        FpPoly v(n, 0);
        v[col] = 1;
        for (int r2 = 0; r2 < static_cast<int>(pivot_col.size()); ++r2) v[pivot_col[r2]] = F.sub(0, M[r2][col]);
        fp_trim(v);
        basis.push_back(std::move(v));
    }
    const std::size_t nfactors = basis.size();
    std::vector<FpPoly> factors{f};
    for (const auto& v : basis) {
        if (factors.size() >= nfactors) break;
        if (fp_deg(v) < 1) continue;  // skip the constants vector
        std::vector<FpPoly> next;
        for (auto& h : factors) {
            if (fp_deg(h) == 1) {
                next.push_back(h);
                continue;
            }
            FpPoly remaining = h;
            for (u64 c = 0; c < F.p && fp_deg(remaining) > 0; ++c) {
                FpPoly vc = v;
                if (vc.empty()) vc.push_back(0);
                vc[0] = F.sub(vc[0], c);
                fp_trim(vc);
                FpPoly g = fp_gcd(F, remaining, vc);
                if (fp_deg(g) > 0 && fp_deg(g) < fp_deg(remaining)) {
                    next.push_back(g);
                    FpPoly q, r;
                    fp_divrem(F, remaining, g, q, r);
                    remaining = fp_monic(F, q);
                }
            }
            if (fp_deg(remaining) > 0) next.push_back(remaining);
        }
        factors = std::move(next);
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

// --- integer polynomials modulo m ------------------------------------------

using ZPoly = std::vector<Int>;

inline void z_trim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}
inline int z_deg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

inline ZPoly z_mod(ZPoly f, const Int& m) {
    for (auto& c : f) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    }
    z_trim(f);
    return f;
}

inline ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    z_trim(out);
    return out;
}

inline ZPoly z_mulmod(const ZPoly& a, const ZPoly& b, const Int& m) { return z_mod(z_mul(a, b), m); }

inline ZPoly z_add(ZPoly a, const ZPoly& b) {
    if (b.size() > a.size()) a.resize(b.size(), Int(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    z_trim(a);
    return a;
}

inline ZPoly z_sub(ZPoly a, const ZPoly& b) {
    if (b.size() > a.size()) a.resize(b.size(), Int(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    z_trim(a);
    return a;
}

// division by a monic polynomial, coefficients mod m
inline void z_divrem_monic_mod(const ZPoly& a, const ZPoly& b, const Int& m, ZPoly& q, ZPoly& r) {
    r = z_mod(a, m);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Int(0));
    while (r.size() >= b.size()) {
        Int c = r.back();
        std::size_t shift = r.size() - b.size();
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[shift + j] -= c * b[j];
            mpz_fdiv_r(r[shift + j].get_mpz_t(), r[shift + j].get_mpz_t(), m.get_mpz_t());
        }
        z_trim(r);
    }
    z_trim(q);
}

inline Int z_symmetric(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (r * 2 > m) r -= m;
    return r;
}

inline ZPoly z_symmetric_mod(ZPoly f, const Int& m) {
    for (auto& c : f) c = z_symmetric(c, m);
    z_trim(f);
    return f;
}

// one quadratic Hensel step: f = g*h (mod m), s*g + t*h = 1 (mod m),
// f, g, h monic -> same relations mod m^2
inline void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Int& m) {
    Int m2 = m * m;
    ZPoly e = z_mod(z_sub(f, z_mul(g, h)), m2);
    ZPoly q, r;
    z_divrem_monic_mod(z_mulmod(s, e, m2), h, m2, q, r);
    ZPoly g1 = z_mod(z_add(z_add(g, z_mulmod(t, e, m2)), z_mulmod(q, g, m2)), m2);
    ZPoly h1 = z_mod(z_add(h, r), m2);
    ZPoly b = z_mod(z_sub(z_add(z_mulmod(s, g1, m2), z_mulmod(t, h1, m2)), ZPoly{Int(1)}), m2);
    ZPoly c, d;
    z_divrem_monic_mod(z_mulmod(s, b, m2), h1, m2, c, d);
    ZPoly s1 = z_mod(z_sub(s, d), m2);
    ZPoly t1 = z_mod(z_sub(z_sub(t, z_mulmod(t, b, m2)), z_mulmod(c, g1, m2)), m2);
    g = std::move(g1);
    h = std::move(h1);
    s = std::move(s1);
    t = std::move(t1);
}

// extended gcd mod p for the initial Bezout pair
inline void fp_egcd(const Fp& F, const FpPoly& a, const FpPoly& b, FpPoly& u, FpPoly& v) {
    FpPoly r0 = a, r1 = b, u0{1}, v0{}, u1{}, v1{1};
    fp_trim(r0);
    fp_trim(r1);
    while (!r1.empty()) {
        FpPoly q, r;
        fp_divrem(F, r0, r1, q, r);
        auto comb = [&](const FpPoly& w0, const FpPoly& w1) {
            FpPoly qq = fp_mul(F, q, w1);
            FpPoly out = w0;
            if (qq.size() > out.size()) out.resize(qq.size(), 0);
            for (std::size_t i = 0; i < qq.size(); ++i) out[i] = F.sub(out[i], qq[i]);
            fp_trim(out);
            return out;
        };
        FpPoly nu = comb(u0, u1), nv = comb(v0, v1);
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        v0 = std::move(v1);
        u1 = std::move(nu);
        v1 = std::move(nv);
    }
    // r0 = gcd (expected a nonzero constant for coprime inputs)
    u64 inv = F.inv(r0.empty() ? 1 : r0[0]);
    for (auto& c : u0) c = F.mul(c, inv);
    for (auto& c : v0) c = F.mul(c, inv);
    u = std::move(u0);
    v = std::move(v0);
}

// lift a mod-p factorization of monic f into pairwise coprime monic factors
// to modulus p^{2^k} >= bound
inline std::vector<ZPoly> hensel_lift_tree(const ZPoly& f, const std::vector<FpPoly>& factors, const Fp& F,
                                           const Int& bound, Int& modulus_out) {
    Int m(static_cast<unsigned long>(F.p));
    if (factors.size() == 1) {
        Int mm = m;
        while (mm < bound) mm = mm * mm;
        modulus_out = mm;
        return {z_mod(f, mm)};
    }
    std::size_t half = factors.size() / 2;
    FpPoly G{1}, H{1};
    for (std::size_t i = 0; i < half; ++i) G = fp_mul(F, G, factors[i]);
    for (std::size_t i = half; i < factors.size(); ++i) H = fp_mul(F, H, factors[i]);
    FpPoly sP, tP;
    fp_egcd(F, G, H, sP, tP);
    auto to_z = [](const FpPoly& g) {
        ZPoly out;
        out.reserve(g.size());
        for (u64 c : g) out.emplace_back(static_cast<unsigned long>(c));
        return out;
    };
    ZPoly g = to_z(G), h = to_z(H), s = to_z(sP), t = to_z(tP);
    while (m < bound) {
        hensel_step(z_mod(f, m * m), g, h, s, t, m);
        m = m * m;
    }
    modulus_out = m;
    std::vector<FpPoly> left(factors.begin(), factors.begin() + half);
    std::vector<FpPoly> right(factors.begin() + half, factors.end());
    Int dummy;
    std::vector<ZPoly> out = hensel_lift_tree(g, left, F, bound, dummy);
    std::vector<ZPoly> out2 = hensel_lift_tree(h, right, F, bound, dummy);
    out.insert(out.end(), out2.begin(), out2.end());
    return out;
}

inline Int z_norm2_sq(const ZPoly& f) {
    Int s(0);
    for (const auto& c : f) s += c * c;
    return s;
}

inline Int isqrt_ceil(const Int& n) {
    if (n <= 0) return Int(0);
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    if (r * r < n) r += 1;
    return r;
}

inline Int binom(long n, long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        if (n % d == 0) return n == d;
    }
    Fp F{n};
    u64 d = n - 1;
    int s = 0;
    while (!(d & 1)) d >>= 1, ++s;
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (a % n == 0) continue;
        u64 x = F.pow(a, d);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = F.mul(x, x);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Zassenhaus: factor a squarefree monic integer polynomial into monic
// integer irreducibles. Deterministic prime choice and subset order.
inline std::vector<ZPoly> factor_monic_squarefree_z(const ZPoly& f) {
    const int n = z_deg(f);
    if (n <= 1) return {f};
    // choose smallest odd prime keeping f squarefree
    u64 p = 3;
    for (;; p += 2) {
        if (!is_prime_u64(p)) continue;
        Fp F{p};
        FpPoly fp;
        fp.reserve(f.size());
        for (const auto& c : f) {
            Int r;
            mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(p));
            fp.push_back(r.get_ui());
        }
        fp_trim(fp);
        if (fp_deg(fp) != n) continue;  // cannot happen for monic f, kept for safety
        FpPoly d = fp_deriv(F, fp);
        if (fp_deg(fp_gcd(F, fp, d)) != 0) continue;
        // factor mod p
        std::vector<FpPoly> modular = berlekamp(F, fp_monic(F, fp));
        if (modular.size() == 1) return {f};
        // Mignotte-style bound on factor coefficients
        Int B = binom(n, n / 2) * isqrt_ceil(z_norm2_sq(f));
        Int bound = 2 * B + 1;
        Int modulus;
        std::vector<ZPoly> lifted = hensel_lift_tree(f, modular, F, bound, modulus);
        // subset recombination
        std::vector<ZPoly> result;
        std::vector<int> live(lifted.size());
        for (std::size_t i = 0; i < lifted.size(); ++i) live[i] = static_cast<int>(i);
        ZPoly rest = f;
        bool progressed = true;
        std::size_t size = 1;
        while (live.size() > 0 && size <= live.size()) {
            if (!progressed && size > live.size() / 2) break;
            progressed = false;
            // enumerate subsets of `live` of cardinality `size` in lex order
            std::vector<std::size_t> idx(size);
            for (std::size_t i = 0; i < size; ++i) idx[i] = i;
            bool more = size <= live.size();
            while (more) {
                ZPoly cand{Int(1)};
                for (std::size_t i : idx) cand = z_mulmod(cand, lifted[static_cast<std::size_t>(live[i])], modulus);
                cand = z_symmetric_mod(cand, modulus);
                // trial division in Z[x]
                bool divides = false;
                if (!cand.empty() && z_deg(cand) <= z_deg(rest)) {
                    ZPoly q, r;
                    // exact monic division over Z
                    r = rest;
                    q.assign(r.size() - cand.size() + 1, Int(0));
                    while (r.size() >= cand.size() && !r.empty()) {
                        Int c = r.back();
                        std::size_t shift = r.size() - cand.size();
                        q[shift] = c;
                        for (std::size_t j = 0; j < cand.size(); ++j) r[shift + j] -= c * cand[j];
                        z_trim(r);
                    }
                    divides = r.empty();
                    if (divides) {
                        result.push_back(cand);
                        z_trim(q);
                        rest = q;
                        // drop used indices
                        std::vector<int> nl;
                        for (std::size_t i = 0, k = 0; i < live.size(); ++i) {
                            if (k < idx.size() && idx[k] == i)
                                ++k;
                            else
                                nl.push_back(live[i]);
                        }
                        live = std::move(nl);
                        progressed = true;
                        break;  // restart subsets of this size
                    }
                }
                // next subset
                long pos = static_cast<long>(size) - 1;
                while (pos >= 0 && idx[static_cast<std::size_t>(pos)] ==
                                       live.size() - size + static_cast<std::size_t>(pos))
                    --pos;
                if (pos < 0)
                    more = false;
                else {
                    ++idx[static_cast<std::size_t>(pos)];
                    for (std::size_t i = static_cast<std::size_t>(pos) + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
                }
            }
            if (!progressed) ++size;
        }
        if (z_deg(rest) > 0) result.push_back(rest);
        std::sort(result.begin(), result.end(), [](const ZPoly& a, const ZPoly& b) {
            if (z_deg(a) != z_deg(b)) return z_deg(a) < z_deg(b);
            for (std::size_t i = a.size(); i-- > 0;)
                if (a[i] != b[i]) return a[i] < b[i];
            return false;
        });
        return result;
    }
}

}  // namespace branchdiv::zp

#endif
