#ifndef BRANCHDIV_FACTOR_HPP
#define BRANCHDIV_FACTOR_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "branchdiv/upoly.hpp"
#include "branchdiv/zpoly.hpp"

// Univariate factorization over towers: Zassenhaus over Q, Trager norm
// reduction over extensions, and the lazy field-extension primitive that
// realizes "algebraically closed on demand".

namespace branchdiv {

struct Factorization {
    AlgNum unit;                                // leading coefficient of the input
    std::vector<std::pair<UPoly, int>> factors;  // monic irreducible, multiplicity
};

namespace detail {

// rational UPoly -> primitive integer polynomial (and the rational content)
inline zp::ZPoly to_primitive_z(const UPoly& f, Rat& content) {
    Int den(1);
    for (const auto& c : f.coeffs()) {
        if (!c.is_rational()) throw MathError("TowerMismatch", "expected rational coefficients");
        den = lcm(den, c.rat().get_den());
    }
    zp::ZPoly z;
    z.reserve(f.coeffs().size());
    Int g(0);
    for (const auto& c : f.coeffs()) {
        Int v = c.rat().get_num() * (den / c.rat().get_den());
        g = gcd(g, v);
        z.push_back(v);
    }
    if (g == 0) g = 1;
    if (z.back() < 0) g = -g;
    for (auto& v : z) v /= g;
    content = Rat(g, den);
    content.canonicalize();
    return z;
}

inline UPoly from_z(const zp::ZPoly& z) {
    std::vector<AlgNum> c;
    c.reserve(z.size());
    for (const auto& v : z) c.emplace_back(Rat(v));
    return UPoly(std::move(c));
}

// factor a squarefree monic polynomial with rational coefficients
inline std::vector<UPoly> factor_squarefree_q(const UPoly& f) {
    if (f.deg() == 1) return {f};
    // monicize over Z: F(x) = lc^{n-1} f(x/lc) for the primitive integer model
    Rat content;
    zp::ZPoly zf = to_primitive_z(f, content);
    Int lc = zf.back();
    const int n = zp::z_deg(zf);
    zp::ZPoly F(zf.size());
    // monic model: F(x) = lc^{n-1} f(x/lc), i.e. F[i] = zf[i] * lc^{n-1-i}
    F[static_cast<std::size_t>(n)] = 1;
    Int pw(1);
    for (int i = n - 1; i >= 0; --i) {
        F[static_cast<std::size_t>(i)] = zf[static_cast<std::size_t>(i)] * pw;
        pw *= lc;
    }
    std::vector<zp::ZPoly> monic_factors = zp::factor_monic_squarefree_z(F);
    std::vector<UPoly> out;
    for (const auto& H : monic_factors) {
        // factor of f = monic normalization of H(lc x)
        UPoly h = from_z(H).scale_arg(AlgNum(Rat(lc)));
        out.push_back(h.monic());
    }
    std::sort(out.begin(), out.end(), [](const UPoly& a, const UPoly& b) { return UPoly::cmp(a, b) < 0; });
    return out;
}

// bivariate representation used by the Trager norm: entries are coefficients
// of z^i, each a polynomial in x over the tower below
inline std::vector<UPoly> upoly_to_z_layers(const UPoly& f, const Tower& node) {
    std::vector<UPoly> layers(static_cast<std::size_t>(node->deg), UPoly{});
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const AlgNum& c = f[i];
        for (std::size_t j = 0; j < static_cast<std::size_t>(node->deg); ++j) {
            const AlgNum& cj = c.coeff_at(node, j);
            if (!cj.is_zero()) {
                if (layers[j].deg() < static_cast<int>(i)) layers[j].set_coeff(i, cj);
                else layers[j].set_coeff(i, cj);
            }
        }
    }
    return layers;
}

// resultant w.r.t. z of two polynomials with UPoly (in x) coefficients,
// by fraction-free Bareiss elimination on the Sylvester matrix.
inline UPoly sylvester_resultant_layers(const std::vector<UPoly>& A, const std::vector<UPoly>& B) {
    int m = static_cast<int>(A.size()) - 1, n = static_cast<int>(B.size()) - 1;
    while (m >= 0 && A[static_cast<std::size_t>(m)].is_zero()) --m;
    while (n >= 0 && B[static_cast<std::size_t>(n)].is_zero()) --n;
    if (m < 0 || n < 0) return UPoly{};
    if (m == 0 && n == 0) return UPoly({AlgNum(1)});
    const int N = m + n;
    std::vector<std::vector<UPoly>> M(static_cast<std::size_t>(N), std::vector<UPoly>(static_cast<std::size_t>(N)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) M[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = A[static_cast<std::size_t>(m - j)];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) M[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] = B[static_cast<std::size_t>(n - j)];
    // Bareiss
    UPoly denom({AlgNum(1)});
    int sign = 1;
    for (int k = 0; k < N - 1; ++k) {
        auto K = static_cast<std::size_t>(k);
        if (M[K][K].is_zero()) {
            int pr = -1;
            for (int i = k + 1; i < N; ++i)
                if (!M[static_cast<std::size_t>(i)][K].is_zero()) {
                    pr = i;
                    break;
                }
            if (pr < 0) return UPoly{};  // resultant vanishes identically
            std::swap(M[K], M[static_cast<std::size_t>(pr)]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i) {
            auto I = static_cast<std::size_t>(i);
            for (int j = k + 1; j < N; ++j) {
                auto J = static_cast<std::size_t>(j);
                M[I][J] = (M[K][K] * M[I][J] - M[I][K] * M[K][J]) / denom;
            }
            M[I][K] = UPoly{};
        }
        denom = M[K][K];
    }
    UPoly res = M[static_cast<std::size_t>(N - 1)][static_cast<std::size_t>(N - 1)];
    return sign < 0 ? -res : res;
}

std::vector<UPoly> factor_squarefree(const UPoly& f, const Tower& node);

// Trager: factor squarefree monic f over node = parent(alpha)
inline std::vector<UPoly> factor_squarefree_trager(const UPoly& f, const Tower& node) {
    const Tower parent = node->parent;
    for (long s = 0;; ++s) {
        // g(x) = f(x - s*alpha), written with alpha as the variable z
        UPoly g = s == 0 ? f : f.compose(UPoly({AlgNum(0) - AlgNum(static_cast<long>(s)) * generator(node), AlgNum(1)}));
        std::vector<UPoly> layers = upoly_to_z_layers(g, node);
        // norm(x) = Res_z(minpoly(z), g(x, z)) over the parent tower
        std::vector<UPoly> ml;
        ml.reserve(node->minpoly.size());
        for (const auto& c : node->minpoly) ml.push_back(UPoly::constant(c));
        UPoly norm = sylvester_resultant_layers(ml, layers);
        if (norm.is_zero()) continue;
        if (gcd(norm, norm.derivative()).deg() != 0) continue;  // need squarefree norm
        std::vector<UPoly> nf = factor_squarefree(norm.monic(), parent);
        std::vector<UPoly> out;
        if (nf.size() == 1) return {f.monic()};
        for (const auto& ni : nf) {
            // lift coefficients of ni into the node tower and undo the shift
            UPoly ni_shift = s == 0 ? ni : ni.compose(UPoly({AlgNum(static_cast<long>(s)) * generator(node), AlgNum(1)}));
            UPoly h = gcd(f, ni_shift);
            if (h.deg() > 0) out.push_back(h.monic());
        }
        std::sort(out.begin(), out.end(), [](const UPoly& a, const UPoly& b) { return UPoly::cmp(a, b) < 0; });
        return out;
    }
}

inline std::vector<UPoly> factor_squarefree(const UPoly& f, const Tower& node) {
    if (f.deg() <= 0) return {};
    if (f.deg() == 1) return {f.monic()};
    if (!node) return factor_squarefree_q(f.monic());
    return factor_squarefree_trager(f.monic(), node);
}

}  // namespace detail

// tower the coefficients of f live in (deepest level among them)
inline Tower coeff_tower(const UPoly& f) {
    Tower t;
    for (const auto& c : f.coeffs()) t = common_node(t, c.level());
    return t;
}

// Factor a nonzero univariate polynomial over the given tower (which must
// contain the coefficients). Output: unit = lc, factors monic irreducible
// with multiplicities, ordered by degree then coefficient-lexicographically.
inline Factorization factor_univariate(const UPoly& p, const Tower& over) {
    if (p.is_zero()) throw MathError("ZeroPolynomial", "cannot factor the zero polynomial");
    if (!is_ancestor_or_self(coeff_tower(p), over))
        throw MathError("TowerMismatch", "coefficients do not live in the factorization tower");
    Factorization out;
    out.unit = p.lc();
    if (p.deg() == 0) return out;
    for (const auto& [part, mult] : squarefree_decomposition(p)) {
        for (const auto& irr : detail::factor_squarefree(part, over)) out.factors.emplace_back(irr, mult);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (int c = UPoly::cmp(a.first, b.first)) return c < 0;
        return a.second < b.second;
    });
    return out;
}

// convenience: factor over the tower generated by the coefficients
inline Factorization factor_univariate(const UPoly& p) { return factor_univariate(p, coeff_tower(p)); }

// roots of p lying in `over` itself (from degree-1 factors)
inline std::vector<AlgNum> roots_in_tower(const UPoly& p, const Tower& over) {
    std::vector<AlgNum> out;
    for (const auto& [f, m] : factor_univariate(p, over).factors) {
        (void)m;
        if (f.deg() == 1) out.push_back(-f[0]);
    }
    return out;
}

struct ExtensionResult {
    Tower tower;    // possibly extended
    AlgNum root;    // a root of (an irreducible factor of maximal degree of) minpoly
    int degree;     // degree of the factor used; 1 means the tower is unchanged
};

// Extend a tower so that `minpoly` acquires a root. If minpoly factors, an
// irreducible factor of maximal degree is used (first in canonical order on
// ties); degree-1 factors return the tower unchanged with the root recorded.
inline ExtensionResult extend_field(const Tower& tower, const UPoly& minpoly, const std::string& name_hint = "") {
    if (minpoly.is_zero()) throw MathError("ZeroPolynomial", "cannot extend by the zero polynomial");
    if (!minpoly.lc().is_one()) throw MathError("NonMonic", "extension polynomial must be monic");
    Factorization fac = factor_univariate(minpoly, tower);
    const UPoly* best = nullptr;
    for (const auto& [f, m] : fac.factors) {
        (void)m;
        if (!best || f.deg() > best->deg()) best = &f;
    }
    if (!best) throw MathError("ZeroPolynomial", "constant extension polynomial");
    if (best->deg() == 1) return {tower, -(*best)[0], 1};
    std::string name = name_hint.empty() ? "a" + std::to_string(tower_depth(tower) + 1) : name_hint;
    Tower ext = make_level(tower, name, best->coeffs());
    return {ext, generator(ext), best->deg()};
}

}  // namespace branchdiv

#endif
