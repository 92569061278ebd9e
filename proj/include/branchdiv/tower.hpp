#ifndef BRANCHDIV_TOWER_HPP
#define BRANCHDIV_TOWER_HPP

#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "branchdiv/rational.hpp"

namespace branchdiv {

class AlgNum;
struct TowerLevel;

// A tower of simple algebraic extensions of Q, represented as a persistent
// chain: each level points at the one below, nullptr is Q itself. Extending
// never invalidates existing elements, so independent computations may grow
// private towers off a shared base.
using Tower = std::shared_ptr<const TowerLevel>;

struct MathError : std::runtime_error {
    std::string code;
    MathError(std::string c, const std::string& what) : std::runtime_error(c + ": " + what), code(std::move(c)) {}
};

// Exact element of a tower. Canonical form: an element is stored at the
// lowest level that can represent it, so equality is structural. level()==
// nullptr means a plain rational.
class AlgNum {
   public:
    AlgNum() : rat_(0) {}
    AlgNum(const Rat& r) : rat_(r) {}
    AlgNum(long n) : rat_(n) {}

    // coefficient vector over the level below; canonicalized
    AlgNum(Tower node, std::vector<AlgNum> coeffs);

    bool is_rational() const { return node_ == nullptr; }
    const Rat& rat() const {
        if (!is_rational()) throw MathError("NotRational", "element lives in a proper extension");
        return rat_;
    }
    Tower level() const { return node_; }
    int depth() const;

    bool is_zero() const { return is_rational() && rat_ == 0; }
    bool is_one() const { return is_rational() && rat_ == 1; }

    // coefficient of generator^i when viewed at `node` (an ancestor-or-self
    // of this element's level)
    const AlgNum& coeff_at(const Tower& node, std::size_t i) const;
    std::size_t ncoeffs_at(const Tower& node) const;

    friend AlgNum operator+(const AlgNum& a, const AlgNum& b);
    friend AlgNum operator-(const AlgNum& a, const AlgNum& b);
    friend AlgNum operator-(const AlgNum& a);
    friend AlgNum operator*(const AlgNum& a, const AlgNum& b);
    AlgNum inverse() const;
    friend AlgNum operator/(const AlgNum& a, const AlgNum& b) { return a * b.inverse(); }

    AlgNum& operator+=(const AlgNum& b) { return *this = *this + b; }
    AlgNum& operator-=(const AlgNum& b) { return *this = *this - b; }
    AlgNum& operator*=(const AlgNum& b) { return *this = *this * b; }
    AlgNum& operator/=(const AlgNum& b) { return *this = *this / b; }

    friend bool operator==(const AlgNum& a, const AlgNum& b);
    friend bool operator!=(const AlgNum& a, const AlgNum& b) { return !(a == b); }

    AlgNum pow(long e) const;

    // total order used for canonical (reproducible) sorting of outputs
    static int cmp(const AlgNum& a, const AlgNum& b);

    std::string str() const;

   private:
    Tower node_;                 // nullptr: rational
    Rat rat_;                    // valid iff node_ == nullptr
    std::vector<AlgNum> co_;     // valid iff node_ != nullptr; size >= 2, back() != 0
};

struct TowerLevel {
    Tower parent;                 // nullptr for an extension of Q
    int depth = 1;                // number of levels below + 1
    std::string name;             // generator symbol
    std::vector<AlgNum> minpoly;  // monic, degree >= 2, coeffs live strictly below
    int deg = 0;                  // minpoly degree
    long total_degree = 1;        // product of level degrees
};

inline int tower_depth(const Tower& t) { return t ? t->depth : 0; }
inline long tower_degree(const Tower& t) { return t ? t->total_degree : 1; }

inline bool is_ancestor_or_self(const Tower& a, const Tower& b) {
    // a above-or-equal b in the chain
    const TowerLevel* cur = b.get();
    int da = tower_depth(a);
    while (cur && cur->depth > da) cur = cur->parent.get();
    return (cur == a.get()) || (!cur && !a);
}

// deeper of two ancestor-related towers; throws if unrelated
inline Tower common_node(const Tower& a, const Tower& b) {
    if (is_ancestor_or_self(a, b)) return b;
    if (is_ancestor_or_self(b, a)) return a;
    throw MathError("TowerMismatch", "elements live in unrelated tower branches");
}

inline int AlgNum::depth() const { return tower_depth(node_); }

inline AlgNum::AlgNum(Tower node, std::vector<AlgNum> coeffs) {
    if (!node) throw MathError("BadTower", "coefficient vector needs a proper level");
    for (const auto& c : coeffs)
        if (!is_ancestor_or_self(c.level(), node->parent))
            throw MathError("TowerMismatch", "coefficient does not live below its level");
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    if (coeffs.empty()) {
        node_ = nullptr;
        rat_ = 0;
    } else if (coeffs.size() == 1) {
        *this = std::move(coeffs[0]);
    } else {
        node_ = std::move(node);
        co_ = std::move(coeffs);
    }
}

inline const AlgNum& AlgNum::coeff_at(const Tower& node, std::size_t i) const {
    static const AlgNum zero{};
    if (node_ == node) return i < co_.size() ? co_[i] : zero;
    // element lives strictly below `node`: constant coefficient
    return i == 0 ? *this : zero;
}

inline std::size_t AlgNum::ncoeffs_at(const Tower& node) const {
    return node_ == node ? co_.size() : 1;
}

inline AlgNum operator+(const AlgNum& a, const AlgNum& b) {
    if (a.is_rational() && b.is_rational()) return AlgNum(Rat(a.rat_ + b.rat_));
    Tower node = common_node(a.node_, b.node_);
    std::size_t n = std::max(a.ncoeffs_at(node), b.ncoeffs_at(node));
    std::vector<AlgNum> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(a.coeff_at(node, i) + b.coeff_at(node, i));
    return AlgNum(node, std::move(out));
}

inline AlgNum operator-(const AlgNum& a) {
    if (a.is_rational()) return AlgNum(Rat(-a.rat_));
    std::vector<AlgNum> out;
    out.reserve(a.co_.size());
    for (const auto& c : a.co_) out.push_back(-c);
    return AlgNum(a.node_, std::move(out));
}

inline AlgNum operator-(const AlgNum& a, const AlgNum& b) { return a + (-b); }

namespace detail {

// dense polynomial helpers over AlgNum coefficient vectors (used both by the
// tower reduction below and by UPoly)
inline void vp_trim(std::vector<AlgNum>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

// reduce coefficient vector modulo a monic minpoly, in place
inline void vp_reduce_monic(std::vector<AlgNum>& v, const std::vector<AlgNum>& m) {
    const std::size_t d = m.size() - 1;
    for (std::size_t k = v.size(); k-- > d;) {
        AlgNum c = v[k];
        if (c.is_zero()) continue;
        v[k] = AlgNum(0);
        for (std::size_t j = 0; j < d; ++j) v[k - d + j] -= c * m[j];
    }
    vp_trim(v);
}

}  // namespace detail

inline AlgNum operator*(const AlgNum& a, const AlgNum& b) {
    if (a.is_rational() && b.is_rational()) return AlgNum(Rat(a.rat_ * b.rat_));
    if (a.is_zero() || b.is_zero()) return AlgNum(0);
    Tower node = common_node(a.node_, b.node_);
    // scalar path: one operand lives strictly below
    if (a.ncoeffs_at(node) == 1 || b.ncoeffs_at(node) == 1) {
        const AlgNum& scal = a.ncoeffs_at(node) == 1 ? a : b;
        const AlgNum& vec = a.ncoeffs_at(node) == 1 ? b : a;
        std::size_t n = vec.ncoeffs_at(node);
        std::vector<AlgNum> out;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) out.push_back(scal * vec.coeff_at(node, i));
        return AlgNum(node, std::move(out));
    }
    std::size_t na = a.ncoeffs_at(node), nb = b.ncoeffs_at(node);
    std::vector<AlgNum> out(na + nb - 1);
    for (std::size_t i = 0; i < na; ++i) {
        if (a.coeff_at(node, i).is_zero()) continue;
        for (std::size_t j = 0; j < nb; ++j) out[i + j] += a.coeff_at(node, i) * b.coeff_at(node, j);
    }
    detail::vp_reduce_monic(out, node->minpoly);
    return AlgNum(node, std::move(out));
}

namespace detail {

inline int vp_deg(const std::vector<AlgNum>& v) { return static_cast<int>(v.size()) - 1; }

inline std::vector<AlgNum> vp_scale(const std::vector<AlgNum>& v, const AlgNum& s) {
    std::vector<AlgNum> out;
    out.reserve(v.size());
    for (const auto& c : v) out.push_back(c * s);
    vp_trim(out);
    return out;
}

inline std::vector<AlgNum> vp_sub(std::vector<AlgNum> a, const std::vector<AlgNum>& b) {
    if (b.size() > a.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    vp_trim(a);
    return a;
}

// division with remainder over a field; divisor need not be monic
inline void vp_divrem(const std::vector<AlgNum>& a, const std::vector<AlgNum>& b, std::vector<AlgNum>& q,
                      std::vector<AlgNum>& r) {
    if (b.empty()) throw MathError("ZeroPolynomial", "division by zero polynomial");
    r = a;
    vp_trim(r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, AlgNum(0));
    AlgNum lcinv = b.back().inverse();
    while (r.size() >= b.size()) {
        AlgNum c = r.back() * lcinv;
        std::size_t shift = r.size() - b.size();
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
        // back() is now structurally zero; trim defensively for exactness
        vp_trim(r);
        if (r.size() == shift + b.size()) throw MathError("Internal", "division failed to reduce degree");
        if (r.empty()) break;
    }
    vp_trim(q);
}

// extended gcd: returns (g, u, v) with u*a + v*b = g, g monic (or zero)
inline void vp_egcd(std::vector<AlgNum> a, std::vector<AlgNum> b, std::vector<AlgNum>& g, std::vector<AlgNum>& u,
                    std::vector<AlgNum>& v) {
    std::vector<AlgNum> u0{AlgNum(1)}, v0{}, u1{}, v1{AlgNum(1)};
    vp_trim(a);
    vp_trim(b);
    while (!b.empty()) {
        std::vector<AlgNum> q, r;
        vp_divrem(a, b, q, r);
        // (u0,v0) - q*(u1,v1)
        auto mulqs = [&](const std::vector<AlgNum>& w) {
            std::vector<AlgNum> out;
            if (q.empty() || w.empty()) return out;
            out.assign(q.size() + w.size() - 1, AlgNum(0));
            for (std::size_t i = 0; i < q.size(); ++i)
                for (std::size_t j = 0; j < w.size(); ++j) out[i + j] += q[i] * w[j];
            vp_trim(out);
            return out;
        };
        std::vector<AlgNum> nu = vp_sub(u0, mulqs(u1)), nv = vp_sub(v0, mulqs(v1));
        a = std::move(b);
        b = std::move(r);
        u0 = std::move(u1);
        v0 = std::move(v1);
        u1 = std::move(nu);
        v1 = std::move(nv);
    }
    if (!a.empty()) {
        AlgNum lcinv = a.back().inverse();
        a = vp_scale(a, lcinv);
        u0 = vp_scale(u0, lcinv);
        v0 = vp_scale(v0, lcinv);
    }
    g = std::move(a);
    u = std::move(u0);
    v = std::move(v0);
}

}  // namespace detail

inline AlgNum AlgNum::inverse() const {
    if (is_rational()) {
        if (rat_ == 0) throw MathError("DivisionByZero", "inverse of zero");
        return AlgNum(Rat(1 / rat_));
    }
    std::vector<AlgNum> g, u, v;
    detail::vp_egcd(co_, node_->minpoly, g, u, v);
    if (detail::vp_deg(g) != 0)
        throw MathError("NotInvertible", "minimal polynomial is not irreducible over the level below");
    return AlgNum(node_, std::move(u));
}

inline bool operator==(const AlgNum& a, const AlgNum& b) {
    if (a.node_ != b.node_) return false;
    if (a.is_rational()) return a.rat_ == b.rat_;
    return a.co_ == b.co_;
}

inline AlgNum AlgNum::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    AlgNum r(1), base = *this;
    while (e) {
        if (e & 1) r *= base;
        base = e > 1 ? base * base : base;
        e >>= 1;
    }
    return r;
}

inline int AlgNum::cmp(const AlgNum& a, const AlgNum& b) {
    if (a.depth() != b.depth()) return a.depth() < b.depth() ? -1 : 1;
    if (a.is_rational()) return ::cmp(a.rat_, b.rat_) < 0 ? -1 : (a.rat_ == b.rat_ ? 0 : 1);
    if (a.node_ != b.node_) return a.node_->name < b.node_->name ? -1 : 1;
    if (a.co_.size() != b.co_.size()) return a.co_.size() < b.co_.size() ? -1 : 1;
    for (std::size_t i = a.co_.size(); i-- > 0;)
        if (int c = cmp(a.co_[i], b.co_[i])) return c;
    return 0;
}

inline std::string AlgNum::str() const {
    if (is_rational()) return rat_str(rat_);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = co_.size(); i-- > 0;) {
        if (co_[i].is_zero()) continue;
        std::string c = co_[i].str();
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << c;
            continue;
        }
        if (c != "1") os << (co_[i].is_rational() || co_[i].depth() < depth() ? c : "(" + c + ")") << "*";
        os << node_->name;
        if (i > 1) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

// --- tower construction ---------------------------------------------------

inline Tower make_level(Tower parent, std::string name, std::vector<AlgNum> minpoly) {
    detail::vp_trim(minpoly);
    if (minpoly.size() < 3) throw MathError("BadMinpoly", "minimal polynomial must have degree >= 2");
    if (!minpoly.back().is_one()) throw MathError("NonMonic", "minimal polynomial must be monic");
    for (const auto& c : minpoly)
        if (!is_ancestor_or_self(c.level(), parent))
            throw MathError("TowerMismatch", "minpoly coefficient outside parent tower");
    auto lv = std::make_shared<TowerLevel>();
    lv->parent = parent;
    lv->depth = tower_depth(parent) + 1;
    lv->name = std::move(name);
    lv->deg = detail::vp_deg(minpoly);
    lv->minpoly = std::move(minpoly);
    lv->total_degree = tower_degree(parent) * lv->deg;
    return lv;
}

// the generator of a level, as an element
inline AlgNum generator(const Tower& node) {
    if (!node) throw MathError("BadTower", "Q has no generator");
    return AlgNum(node, {AlgNum(0), AlgNum(1)});
}

// relative coordinates of x over `base`: the flattened coefficient vector of
// x with respect to the product basis of all levels strictly above `base`.
// Entries live at (or below) `base`. Length = tower_degree(node)/tower_degree(base).
inline void rel_coords(const AlgNum& x, const Tower& node, const Tower& base, std::vector<AlgNum>& out) {
    if (node == base) {
        out.push_back(x);
        return;
    }
    if (!node) throw MathError("TowerMismatch", "base is not an ancestor");
    for (int i = 0; i < node->deg; ++i)
        rel_coords(x.coeff_at(node, static_cast<std::size_t>(i)), node->parent, base, out);
}

inline std::vector<AlgNum> rel_coords(const AlgNum& x, const Tower& node, const Tower& base) {
    std::vector<AlgNum> out;
    rel_coords(x, node, base, out);
    return out;
}

}  // namespace branchdiv

#endif
