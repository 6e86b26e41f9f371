#pragma once

#include "coadj/polynomial.hpp"
#include "coadj/root_system.hpp"
#include "coadj/scalar.hpp"

#include <Eigen/Core>

#include <type_traits>
#include <vector>

namespace coadj {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

// f in g*, stored as the strictly upper-triangular F with f(x) = tr(F x): f(y_ij) = F(j, i).
template <class S>
class LinearForm {
public:
    LinearForm(int n, const S& zero) : n_(n), f_(Matrix<S>::Constant(n, n, zero)) {}

    int rank() const { return n_; }
    S value(Root r) const { return f_(r.col - 1, r.row - 1); }
    void set(Root r, const S& v) { f_(r.col - 1, r.row - 1) = v; }
    const Matrix<S>& matrix() const { return f_; }

    friend bool operator==(const LinearForm& a, const LinearForm& b)
    {
        if (a.n_ != b.n_) return false;
        for (int i = 0; i < a.n_; ++i)
            for (int j = 0; j < a.n_; ++j)
                if (a.f_(i, j) != b.f_(i, j)) return false;
        return true;
    }

private:
    int n_;
    Matrix<S> f_;
};

// Lower unitriangular g; entry(i, j) for i > j.
template <class S>
class GroupElement {
public:
    GroupElement(int n, const S& zero) : g_(Matrix<S>::Constant(n, n, zero))
    {
        for (int i = 0; i < n; ++i) g_(i, i) = zero + S(1);
    }

    int rank() const { return static_cast<int>(g_.rows()); }
    S entry(Root r) const { return g_(r.row - 1, r.col - 1); }
    void set(Root r, const S& v) { g_(r.row - 1, r.col - 1) = v; }
    const Matrix<S>& matrix() const { return g_; }

    // Neumann series: (1 + L)^{-1} = sum (-L)^k with L nilpotent.
    Matrix<S> inverse_matrix() const
    {
        int n = rank();
        Matrix<S> id = Matrix<S>::Constant(n, n, g_(0, 0) - g_(0, 0));
        for (int i = 0; i < n; ++i) id(i, i) = g_(0, 0);
        Matrix<S> minus_l = id - g_;
        Matrix<S> out = id, power = id;
        for (int k = 1; k < n; ++k) {
            power = power * minus_l;
            out += power;
        }
        return out;
    }

    friend GroupElement operator*(const GroupElement& a, const GroupElement& b)
    {
        GroupElement out = a;
        out.g_ = a.g_ * b.g_;
        return out;
    }

private:
    Matrix<S> g_;
};

// x -> f(g^{-1} x g): strictly upper part of g F g^{-1}.
template <class S>
LinearForm<S> coadjoint_act(const GroupElement<S>& g, const LinearForm<S>& f)
{
    int n = f.rank();
    Matrix<S> m = g.matrix() * f.matrix() * g.inverse_matrix();
    S zero = m(0, 0) - m(0, 0);
    LinearForm<S> out(n, zero);
    for (Root r : positive_roots(n)) out.set(r, m(r.col - 1, r.row - 1));
    return out;
}

// B(a, b) = f([y_a, y_b]) indexed by root_index.
template <class S>
Matrix<S> kirillov_matrix(const LinearForm<S>& f)
{
    int n = f.rank();
    int count = num_roots(n);
    S zero = f.value(Root{n, 1}) - f.value(Root{n, 1});
    Matrix<S> b = Matrix<S>::Constant(count, count, zero);
    auto roots = positive_roots(n);
    for (int x = 0; x < count; ++x)
        for (int y = 0; y < count; ++y) {
            Root a = roots[x], c = roots[y];
            if (a.col == c.row)
                b(x, y) = f.value(Root{a.row, c.col});
            else if (c.col == a.row)
                b(x, y) = zero - f.value(Root{c.row, a.col});
        }
    return b;
}

// Rank by exact Gaussian elimination over a field.
template <class S>
int exact_rank(Matrix<S> m)
{
    int rows = static_cast<int>(m.rows()), cols = static_cast<int>(m.cols());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!is_zero(m(r, c))) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        m.row(pivot).swap(m.row(rank));
        S inv = S(1) / m(rank, c);
        for (int r = rank + 1; r < rows; ++r) {
            if (is_zero(m(r, c))) continue;
            S factor = m(r, c) * inv;
            for (int k = c; k < cols; ++k) m(r, k) -= factor * m(rank, k);
        }
        ++rank;
    }
    return rank;
}

template <class S>
int kirillov_rank(const LinearForm<S>& f)
{
    return exact_rank(kirillov_matrix(f));
}

// p(f) for a polynomial in root variables. Rational coefficients are mapped into the field of f.
template <class S, class T>
T evaluate(const Polynomial<S>& p, const LinearForm<T>& f)
{
    if (p.support() >> kRootVars) throw InvalidC("polynomial has free parameters");
    const VarMask outside = p.support() & ~[&] {
        VarMask m = 0;
        for (Root r : positive_roots(f.rank())) m |= var_bit(y_var(r));
        return m;
    }();
    if (outside) throw InvalidDimension("variable outside the rank of the form");
    T zero = f.value(Root{2, 1}) - f.value(Root{2, 1});
    auto value = [&](Var v) { return f.value(var_root(v)); };
    auto lift = [&](const S& c) -> T {
        if constexpr (std::is_same_v<S, T>)
            return c;
        else if constexpr (std::is_same_v<S, Rational> && std::is_same_v<T, Fp>)
            return to_fp(c, zero.modulus());
        else
            return zero + T(c);
    };
    return zero + p.template evaluate<T>(value, lift);
}

} // namespace coadj
