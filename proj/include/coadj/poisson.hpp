#pragma once

#include "coadj/polynomial.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace coadj {

// [y_a, y_b] for root variables: +-y_c, or nothing. Parameters are central.
struct StructureConstant {
    int sign = 0; // 0 when the bracket vanishes
    Var result = -1;
};
StructureConstant structure_constant(Var a, Var b);

// Poisson bracket on S(ut(n)) extended to Laurent polynomials in root variables and parameters.
template <class S>
Polynomial<S> bracket(const Polynomial<S>& a, const Polynomial<S>& b)
{
    Polynomial<S> out;
    const VarMask roots = (VarMask(1) << kRootVars) - 1;
    for (const auto& [ma, ca] : a.terms()) {
        VarMask sa = ma.support() & roots;
        if (!sa) continue;
        for (const auto& [mb, cb] : b.terms()) {
            VarMask sb = mb.support() & roots;
            if (!sb) continue;
            Monomial base = ma * mb;
            S cc = ca * cb;
            for (VarMask x = sa; x; x &= x - 1) {
                Var va = std::countr_zero(x);
                for (VarMask y = sb; y; y &= y - 1) {
                    Var vb = std::countr_zero(y);
                    StructureConstant k = structure_constant(va, vb);
                    if (!k.sign) continue;
                    Monomial m = base;
                    m.set(va, m.exponent(va) - 1);
                    m.set(vb, m.exponent(vb) - 1);
                    m.set(k.result, m.exponent(k.result) + 1);
                    long factor = static_cast<long>(k.sign) * ma.exponent(va) * mb.exponent(vb);
                    out.add_term(cc * S(factor), m);
                }
            }
        }
    }
    return out;
}

// Ideal given by generators. Membership is decided when the generators are triangular:
// each has a lex-smallest root variable y_eta that occurs in exactly one term, linearly,
// with a unit coefficient, and no two generators share that variable.
template <class S>
class Ideal {
public:
    Ideal() = default;
    explicit Ideal(std::vector<Polynomial<S>> generators, VarMask invertible = 0);

    const std::vector<Polynomial<S>>& generators() const { return generators_; }
    VarMask invertible() const { return invertible_; }
    bool triangular() const { return triangular_; }
    // Leading root variables, increasing lex order.
    std::vector<Root> leading_roots() const;

    // Unique representative modulo the ideal; throws UnsupportedIdealShape when not triangular.
    Polynomial<S> normal_form(const Polynomial<S>& p) const;
    bool contains(const Polynomial<S>& p) const { return normal_form(p).is_zero(); }

private:
    std::vector<Polynomial<S>> generators_;
    VarMask invertible_ = 0;
    bool triangular_ = true; // the zero ideal
    std::string why_not_;
    // (eta, image of y_eta), increasing lex order of eta.
    std::vector<std::pair<Var, Polynomial<S>>> elimination_;
};

// Whether {p, y_gamma} lies in I for every positive root of rank n.
template <class S>
bool is_casimir_mod(const Polynomial<S>& p, const Ideal<S>& ideal, int n)
{
    for (Root g : positive_roots(n))
        if (!ideal.contains(bracket(p, Polynomial<S>::y(g)))) return false;
    return true;
}

template <class S>
bool is_poisson_ideal(const Ideal<S>& ideal, int n)
{
    for (const auto& g : ideal.generators())
        if (!is_casimir_mod(g, ideal, n)) return false;
    return true;
}

// a~ = sum_s (-1)^s / s! ad_p^s(a) q^s modulo I, where ad_p(a) = {p, a}.
// Requires {p, q} = 1 modulo I (NotCanonicalPair otherwise).
template <class S>
LocalizedPolynomial<S> tilde_map(const Polynomial<S>& a, const Polynomial<S>& p, const Polynomial<S>& q,
                                 const Ideal<S>& ideal);

// Same series with every step reduced by `reduce` instead of an Ideal.
template <class S, class Reduce>
Polynomial<S> tilde_series(const Polynomial<S>& a, const Polynomial<S>& p, const Polynomial<S>& q, Reduce&& reduce)
{
    constexpr int kMaxSteps = 64;
    Polynomial<S> total;
    Polynomial<S> ad = reduce(a);
    Polynomial<S> qpow(S(1));
    S coefficient(1);
    for (int s = 0; s < kMaxSteps; ++s) {
        if (ad.is_zero()) return reduce(total);
        if (s > 0) coefficient = coefficient / S(-s);
        total += ad * qpow * coefficient;
        ad = reduce(bracket(p, ad));
        qpow = reduce(qpow * q);
    }
    throw NotCanonicalPair("ad_p is not nilpotent on the argument");
}

extern template class Ideal<Rational>;
extern template class Ideal<Fp>;

} // namespace coadj
