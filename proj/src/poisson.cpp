#include "coadj/poisson.hpp"

#include <algorithm>
#include <array>

namespace coadj {

StructureConstant structure_constant(Var a, Var b)
{
    static const auto table = [] {
        std::array<std::array<StructureConstant, kRootVars>, kRootVars> t{};
        for (Var x = 0; x < kRootVars; ++x)
            for (Var y = 0; y < kRootVars; ++y) {
                Root r = var_root(x), s = var_root(y);
                if (r.col == s.row)
                    t[x][y] = {1, y_var(Root{r.row, s.col})};
                else if (s.col == r.row)
                    t[x][y] = {-1, y_var(Root{s.row, r.col})};
            }
        return t;
    }();
    if (!is_root_var(a) || !is_root_var(b)) return {};
    return table[a][b];
}

template <class S>
Ideal<S>::Ideal(std::vector<Polynomial<S>> generators, VarMask invertible)
    : generators_(std::move(generators)), invertible_(invertible)
{
    const VarMask roots = (VarMask(1) << kRootVars) - 1;
    triangular_ = true;
    std::vector<std::pair<Var, Polynomial<S>>> elim;
    VarMask used = 0;
    for (const auto& g : generators_) {
        VarMask rs = g.support() & roots;
        if (!rs) {
            if (!g.is_zero()) {
                triangular_ = false;
                why_not_ = "generator without root variables";
                break;
            }
            continue;
        }
        Var lead = -1;
        for (VarMask b = rs; b; b &= b - 1) {
            Var v = std::countr_zero(b);
            if (lead < 0 || var_root(v) < var_root(lead)) lead = v;
        }
        const typename Polynomial<S>::Terms* terms = &g.terms();
        int hits = 0;
        Polynomial<S> rest;
        Polynomial<S> unit;
        for (const auto& [m, c] : *terms) {
            if (m.exponent(lead) == 0) {
                rest.add_term(c, m);
                continue;
            }
            ++hits;
            Monomial other = m;
            other.set(lead, 0);
            bool unit_ok = m.exponent(lead) == 1 && (other.support() & roots) == 0 &&
                           (other.support() & ~invertible_) == 0;
            if (!unit_ok) hits = 100;
            unit = Polynomial<S>::term(c, other);
        }
        if (hits != 1 || (used & var_bit(lead))) {
            triangular_ = false;
            why_not_ = "generator " + g.str() + " is not triangular in " + var_name(lead);
            break;
        }
        used |= var_bit(lead);
        // y_lead = -rest / unit
        elim.emplace_back(lead, -(rest * unit.pow(-1)));
    }
    if (triangular_) {
        std::sort(elim.begin(), elim.end(),
                  [](const auto& x, const auto& y) { return var_root(x.first) < var_root(y.first); });
        // Each image may mention later leading variables; those get replaced after it.
        elimination_ = std::move(elim);
    }
}

template <class S>
std::vector<Root> Ideal<S>::leading_roots() const
{
    std::vector<Root> out;
    for (const auto& [v, img] : elimination_) out.push_back(var_root(v));
    return out;
}

template <class S>
Polynomial<S> Ideal<S>::normal_form(const Polynomial<S>& p) const
{
    if (!triangular_) throw UnsupportedIdealShape(why_not_);
    Polynomial<S> out = p;
    for (const auto& [v, img] : elimination_) {
        if (!(out.support() & var_bit(v))) continue;
        if ((out.negative_support() & var_bit(v)) && img.size() != 1)
            throw UnsupportedIdealShape("negative power of " + var_name(v) + " with a non-monomial image");
        out = out.substitute(v, img);
    }
    return out;
}

template <class S>
LocalizedPolynomial<S> tilde_map(const Polynomial<S>& a, const Polynomial<S>& p, const Polynomial<S>& q,
                                 const Ideal<S>& ideal)
{
    if (!ideal.contains(bracket(p, q) - Polynomial<S>(S(1))))
        throw NotCanonicalPair("{p, q} = " + ideal.normal_form(bracket(p, q)).str());
    Polynomial<S> out = tilde_series(a, p, q, [&](const Polynomial<S>& x) { return ideal.normal_form(x); });
    VarMask inv = ideal.invertible() | a.negative_support() | p.negative_support() | q.negative_support();
    return LocalizedPolynomial<S>(out, inv);
}

template class Ideal<Rational>;
template class Ideal<Fp>;
template LocalizedPolynomial<Rational> tilde_map(const QPoly&, const QPoly&, const QPoly&, const Ideal<Rational>&);
template LocalizedPolynomial<Fp> tilde_map(const Polynomial<Fp>&, const Polynomial<Fp>&, const Polynomial<Fp>&,
                                           const Ideal<Fp>&);

} // namespace coadj
