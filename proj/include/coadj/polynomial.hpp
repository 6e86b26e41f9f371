#pragma once

#include "coadj/error.hpp"
#include "coadj/root_system.hpp"
#include "coadj/scalar.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace coadj {

// Variables: y_ij for roots (n-independent index), then parameters c_1, c_2, ...
using Var = int;
inline constexpr int kMaxVars = 64;
inline constexpr int kRootVars = 45; // enough for n <= 10
inline constexpr int kMaxParams = kMaxVars - kRootVars;

inline Var y_var(Root r) { return (r.row - 1) * (r.row - 2) / 2 + (r.col - 1); }
inline Var y_var(int row, int col) { return y_var(Root{row, col}); }
inline bool is_root_var(Var v) { return v >= 0 && v < kRootVars; }
Root var_root(Var v);
inline Var param_var(int k)
{
    if (k < 0 || k >= kMaxParams) throw InvalidC("parameter index out of range");
    return kRootVars + k;
}
inline bool is_param_var(Var v) { return v >= kRootVars && v < kMaxVars; }

using VarMask = std::uint64_t;
inline VarMask var_bit(Var v) { return VarMask(1) << v; }

std::string var_name(Var v);

// Variables in comparison order: larger roots first, then parameters.
const std::array<Var, kMaxVars>& var_order();

// Exponent vector; negative entries allowed (Laurent).
class Monomial {
public:
    Monomial() { e_.fill(0); }
    static Monomial var(Var v, int e = 1)
    {
        Monomial m;
        m.set(v, e);
        return m;
    }

    int exponent(Var v) const { return e_[v]; }
    void set(Var v, int e)
    {
        if (e > 127 || e < -128) throw Error("exponent overflow");
        e_[v] = static_cast<std::int8_t>(e);
    }
    int degree() const
    {
        int d = 0;
        for (auto x : e_) d += x;
        return d;
    }
    bool is_one() const { return support() == 0; }
    VarMask support() const
    {
        VarMask m = 0;
        for (int v = 0; v < kMaxVars; ++v)
            if (e_[v]) m |= var_bit(v);
        return m;
    }
    VarMask negative_support() const
    {
        VarMask m = 0;
        for (int v = 0; v < kMaxVars; ++v)
            if (e_[v] < 0) m |= var_bit(v);
        return m;
    }

    Monomial& operator*=(const Monomial& o)
    {
        for (int v = 0; v < kMaxVars; ++v)
            if (o.e_[v]) set(v, e_[v] + o.e_[v]);
        return *this;
    }
    friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
    Monomial inverse() const
    {
        Monomial m;
        for (int v = 0; v < kMaxVars; ++v) m.e_[v] = static_cast<std::int8_t>(-e_[v]);
        return m;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    // Graded, then lexicographic along var_order().
    friend int compare(const Monomial& a, const Monomial& b)
    {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db ? -1 : 1;
        for (Var v : var_order())
            if (a.e_[v] != b.e_[v]) return a.e_[v] < b.e_[v] ? -1 : 1;
        return 0;
    }

    std::string str() const;

private:
    std::array<std::int8_t, kMaxVars> e_;
};

struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
};

// Sparse polynomial (Laurent when exponents go negative); terms kept leading-first.
template <class S>
class Polynomial {
public:
    using Terms = std::map<Monomial, S, MonomialGreater>;

    Polynomial() = default;
    Polynomial(const S& c)
    {
        if (!coadj::is_zero(c)) terms_.emplace(Monomial(), c);
    }
    Polynomial(int c) : Polynomial(S(c)) {}
    static Polynomial var(Var v, int e = 1) { return term(S(1), Monomial::var(v, e)); }
    static Polynomial y(Root r) { return var(y_var(r)); }
    static Polynomial y(int row, int col) { return var(y_var(row, col)); }
    static Polynomial param(int k) { return var(param_var(k)); }
    static Polynomial term(const S& c, const Monomial& m)
    {
        Polynomial p;
        if (!coadj::is_zero(c)) p.terms_.emplace(m, c);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int size() const { return static_cast<int>(terms_.size()); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
    S constant_term() const
    {
        auto it = terms_.find(Monomial());
        return it == terms_.end() ? S(0) : it->second;
    }
    VarMask support() const
    {
        VarMask m = 0;
        for (const auto& [mono, c] : terms_) m |= mono.support();
        return m;
    }
    VarMask negative_support() const
    {
        VarMask m = 0;
        for (const auto& [mono, c] : terms_) m |= mono.negative_support();
        return m;
    }
    int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

    void add_term(const S& c, const Monomial& m)
    {
        if (coadj::is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (coadj::is_zero(it->second)) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        for (const auto& [m, c] : o.terms_) add_term(c, m);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o)
    {
        for (const auto& [m, c] : o.terms_) add_term(-c, m);
        return *this;
    }
    Polynomial& operator*=(const S& s)
    {
        if (coadj::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a)
    {
        for (auto& [m, c] : a.terms_) c = -c;
        return a;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        Polynomial out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(ca * cb, ma * mb);
        return out;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    friend Polynomial operator*(Polynomial a, const S& s) { return a *= s; }
    friend Polynomial operator*(const S& s, Polynomial a) { return a *= s; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial pow(int e) const
    {
        if (e < 0) {
            if (terms_.size() != 1) throw Error("negative power of a non-monomial");
            const auto& [m, c] = *terms_.begin();
            Polynomial inv = term(c.inverse(), m.inverse());
            return inv.pow(-e);
        }
        Polynomial out(S(1)), base = *this;
        while (e) {
            if (e & 1) out *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return out;
    }

    // Replaces every variable v with images[v] when present. A negative exponent needs a
    // single-term image.
    Polynomial substitute(const std::map<Var, Polynomial>& images) const
    {
        if (images.empty()) return *this;
        std::map<std::pair<Var, int>, Polynomial> powers;
        auto power = [&](Var v, int e) -> const Polynomial& {
            auto key = std::make_pair(v, e);
            auto it = powers.find(key);
            if (it == powers.end()) it = powers.emplace(key, images.at(v).pow(e)).first;
            return it->second;
        };
        VarMask touched = 0;
        for (const auto& [v, img] : images) touched |= var_bit(v);
        Polynomial out;
        for (const auto& [m, c] : terms_) {
            VarMask hit = m.support() & touched;
            if (!hit) {
                out.add_term(c, m);
                continue;
            }
            Monomial rest = m;
            Polynomial acc(c);
            for (VarMask b = hit; b; b &= b - 1) {
                Var v = std::countr_zero(b);
                acc *= power(v, m.exponent(v));
                rest.set(v, 0);
            }
            for (const auto& [am, ac] : acc.terms_) out.add_term(ac, am * rest);
        }
        return out;
    }
    Polynomial substitute(Var v, const Polynomial& image) const { return substitute(std::map<Var, Polynomial>{{v, image}}); }

    // Value at a point: value(v) gives the coordinate of v, lift(c) maps a coefficient.
    template <class T, class ValueFn, class LiftFn>
    T evaluate(ValueFn&& value, LiftFn&& lift) const
    {
        T total(0);
        for (const auto& [m, c] : terms_) {
            T t = lift(c);
            for (VarMask b = m.support(); b; b &= b - 1) {
                Var v = std::countr_zero(b);
                int e = m.exponent(v);
                T x = value(v);
                if (e < 0) {
                    x = x.inverse();
                    e = -e;
                }
                for (int k = 0; k < e; ++k) t *= x;
            }
            total += t;
        }
        return total;
    }

    std::string str() const;

private:
    Terms terms_;
};

using QPoly = Polynomial<Rational>;

template <class S>
std::string coefficient_string(const S& c)
{
    return c.str();
}

template <class S>
std::string Polynomial<S>::str() const
{
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string coef = coefficient_string(c);
        bool negative = !coef.empty() && coef[0] == '-';
        if (negative) coef = coef.substr(1);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (m.is_one())
            out += coef;
        else if (coef == "1")
            out += m.str();
        else
            out += coef + "*" + m.str();
    }
    return out;
}

// Laurent polynomial whose negative exponents are restricted to declared invertible variables.
template <class S>
class LocalizedPolynomial {
public:
    LocalizedPolynomial() = default;
    LocalizedPolynomial(Polynomial<S> p, VarMask invertible) : p_(std::move(p)), invertible_(invertible) { check(); }

    const Polynomial<S>& laurent() const { return p_; }
    VarMask invertible() const { return invertible_; }

    // Splits into numerator / monomial denominator with the smallest denominator.
    std::pair<Polynomial<S>, Monomial> fraction() const
    {
        Monomial den;
        for (const auto& [m, c] : p_.terms())
            for (VarMask b = m.negative_support(); b; b &= b - 1) {
                Var v = std::countr_zero(b);
                den.set(v, std::max(den.exponent(v), -m.exponent(v)));
            }
        Polynomial<S> num = p_ * Polynomial<S>::term(S(1), den);
        return {num, den};
    }

    friend bool operator==(const LocalizedPolynomial& a, const LocalizedPolynomial& b) { return a.p_ == b.p_; }

private:
    void check() const
    {
        if (p_.negative_support() & ~invertible_) throw NotCanonicalPair("negative exponent on a non-invertible variable");
    }
    Polynomial<S> p_;
    VarMask invertible_ = 0;
};

inline Polynomial<Fp> to_fp_poly(const QPoly& p, std::uint32_t modulus)
{
    Polynomial<Fp> out;
    for (const auto& [m, c] : p.terms()) out.add_term(to_fp(c, modulus), m);
    return out;
}

} // namespace coadj
