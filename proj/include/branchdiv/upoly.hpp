#ifndef BRANCHDIV_UPOLY_HPP
#define BRANCHDIV_UPOLY_HPP

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "branchdiv/tower.hpp"

namespace branchdiv {

// Dense univariate polynomial with AlgNum coefficients. The coefficient
// field is whatever tower the coefficients live in; all operations are
// exact field arithmetic.
class UPoly {
   public:
    UPoly() = default;
    explicit UPoly(std::vector<AlgNum> c) : c_(std::move(c)) { detail::vp_trim(c_); }
    UPoly(std::initializer_list<AlgNum> c) : c_(c) { detail::vp_trim(c_); }
    static UPoly x() { return UPoly({AlgNum(0), AlgNum(1)}); }
    static UPoly constant(AlgNum a) { return UPoly({std::move(a)}); }
    static UPoly monomial(const AlgNum& a, std::size_t k) {
        std::vector<AlgNum> v(k + 1);
        v[k] = a;
        return UPoly(std::move(v));
    }

    int deg() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const AlgNum& operator[](std::size_t i) const {
        static const AlgNum z{};
        return i < c_.size() ? c_[i] : z;
    }
    const AlgNum& lc() const {
        if (is_zero()) throw MathError("ZeroPolynomial", "leading coefficient of zero");
        return c_.back();
    }
    const std::vector<AlgNum>& coeffs() const { return c_; }

    void set_coeff(std::size_t i, AlgNum v) {
        if (i >= c_.size()) c_.resize(i + 1);
        c_[i] = std::move(v);
        detail::vp_trim(c_);
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<AlgNum> out(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
        return UPoly(std::move(out));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        std::vector<AlgNum> out(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
        return UPoly(std::move(out));
    }
    friend UPoly operator-(const UPoly& a) {
        std::vector<AlgNum> out;
        out.reserve(a.c_.size());
        for (const auto& v : a.c_) out.push_back(-v);
        return UPoly(std::move(out));
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<AlgNum> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(out));
    }
    friend UPoly operator*(const UPoly& a, const AlgNum& s) { return UPoly(detail::vp_scale(a.c_, s)); }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    AlgNum eval(const AlgNum& x) const {
        AlgNum r(0);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<AlgNum> out(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * AlgNum(static_cast<long>(i));
        return UPoly(std::move(out));
    }

    UPoly monic() const {
        if (is_zero()) return {};
        return *this * lc().inverse();
    }

    // f(x + a)
    UPoly shift(const AlgNum& a) const {
        UPoly r, p({AlgNum(1)});
        UPoly lin({a, AlgNum(1)});
        for (std::size_t i = 0; i < c_.size(); ++i) {
            r = r + p * c_[i];
            if (i + 1 < c_.size()) p = p * lin;
        }
        return r;
    }

    // f(a*x)
    UPoly scale_arg(const AlgNum& a) const {
        std::vector<AlgNum> out = c_;
        AlgNum p(1);
        for (std::size_t i = 1; i < out.size(); ++i) {
            p *= a;
            out[i] *= p;
        }
        return UPoly(std::move(out));
    }

    // substitute another polynomial for the variable
    UPoly compose(const UPoly& g) const {
        UPoly r;
        for (std::size_t i = c_.size(); i-- > 0;) r = r * g + constant(c_[i]);
        return r;
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            std::string cs = c_[i].str();
            bool needs_paren = !c_[i].is_rational();
            if (i == 0) {
                os << (needs_paren ? "(" + cs + ")" : cs);
                continue;
            }
            if (cs != "1") os << (needs_paren ? "(" + cs + ")" : cs) << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        return os.str();
    }

    static int cmp(const UPoly& a, const UPoly& b) {
        if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
        for (std::size_t i = a.c_.size(); i-- > 0;)
            if (int c = AlgNum::cmp(a.c_[i], b.c_[i])) return c;
        return 0;
    }

   private:
    std::vector<AlgNum> c_;
};

inline void divrem(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    std::vector<AlgNum> qq, rr;
    detail::vp_divrem(a.coeffs(), b.coeffs(), qq, rr);
    q = UPoly(std::move(qq));
    r = UPoly(std::move(rr));
}

inline UPoly operator/(const UPoly& a, const UPoly& b) {
    UPoly q, r;
    divrem(a, b, q, r);
    if (!r.is_zero()) throw MathError("InexactDivision", "polynomial division left a remainder");
    return q;
}

inline UPoly rem(const UPoly& a, const UPoly& b) {
    UPoly q, r;
    divrem(a, b, q, r);
    return r;
}

// monic gcd over the coefficient field
inline UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

// Sylvester resultant of two univariate polynomials over the coefficient
// field, computed by a remainder sequence with leading-coefficient tracking.
inline AlgNum resultant(UPoly a, UPoly b) {
    if (a.is_zero() || b.is_zero()) return AlgNum(0);
    AlgNum res(1);
    bool neg = false;
    while (b.deg() > 0) {
        UPoly r = rem(a, b);
        if (r.is_zero()) return AlgNum(0);
        // res(a,b) = (-1)^{deg a * deg b} res(b,a); res(b,a) uses lc(b)^{deg a - deg r}
        if ((a.deg() & 1) && (b.deg() & 1)) neg = !neg;
        res *= b.lc().pow(a.deg() - r.deg());
        a = std::move(b);
        b = std::move(r);
    }
    // b is a nonzero constant
    res *= b.lc().pow(a.deg());
    return neg ? -res : res;
}

// squarefree decomposition (Yun); valid in characteristic zero.
// returns list of (factor, multiplicity) with factors pairwise coprime,
// product of factor^multiplicity = input/lc.
inline std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f0) {
    std::vector<std::pair<UPoly, int>> out;
    if (f0.deg() <= 0) return out;
    UPoly f = f0.monic();
    UPoly fp = f.derivative();
    UPoly a = gcd(f, fp);
    UPoly b = f / a, c = fp / a, d = c - b.derivative();
    int i = 1;
    while (b.deg() > 0) {
        UPoly g = gcd(b, d);
        if (g.deg() > 0) out.emplace_back(g.monic(), i);
        b = b / g;
        c = d / g;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

inline UPoly squarefree_part(const UPoly& f) {
    UPoly out({AlgNum(1)});
    for (auto& [g, m] : squarefree_decomposition(f)) out = out * g;
    return out;
}

}  // namespace branchdiv

#endif
