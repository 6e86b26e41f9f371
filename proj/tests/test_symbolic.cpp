#include "coadj/char_matrix.hpp"
#include "coadj/ideal_builder.hpp"
#include "coadj/linear_form.hpp"
#include "coadj/orbit.hpp"
#include "coadj/poisson.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace coadj;

namespace {

QPoly y(int i, int j) { return QPoly::y(i, j); }
QPoly c(int k) { return QPoly::param(k); }

QPoly random_poly(std::mt19937_64& rng, int n, int max_terms, int max_degree)
{
    auto roots = positive_roots(n);
    QPoly out;
    int terms = 1 + static_cast<int>(rng() % max_terms);
    for (int t = 0; t < terms; ++t) {
        QPoly m(static_cast<int>(rng() % 7) - 3);
        int degree = static_cast<int>(rng() % (max_degree + 1));
        for (int d = 0; d < degree; ++d) m *= QPoly::y(roots[rng() % roots.size()]);
        out += m;
    }
    return out;
}

// Ideal generated by Q_eta - c(eta).
Ideal<Rational> ideal_of(const AdmissibleSubset& s, const CValues& c)
{
    return build_ideal(s, c).ideal;
}

} // namespace

TEST(Scalar, FpArithmetic)
{
    Fp a(3, 7), b(5, 7);
    EXPECT_EQ(a * b, Fp(1, 7));
    EXPECT_EQ(a.inverse(), Fp(5, 7));
    EXPECT_EQ(a - b, Fp(5, 7));
    EXPECT_EQ(Fp(-1, 7).value(), 6);
    EXPECT_EQ(a + Fp(4), Fp(0, 7));
    EXPECT_THROW(Fp(0, 7).inverse(), Error);
}

TEST(Scalar, FieldMismatch)
{
    EXPECT_THROW(Fp(1, 5) + Fp(1, 7), FieldMismatch);
    EXPECT_THROW(Fp(1, 5) * Fp(2, 3), FieldMismatch);
    EXPECT_EQ(to_fp(Rational(1, 2), 5), Fp(3, 5));
    EXPECT_THROW(to_fp(Rational(1, 2), 2), FieldMismatch);
}

TEST(Scalar, RationalExact)
{
    EXPECT_EQ(Rational(2, 4), Rational(1, 2));
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    EXPECT_THROW(Rational(1, 0), InvalidC);
    EXPECT_THROW(Rational(0).inverse(), InvalidC);
}

TEST(Bracket, Examples)
{
    EXPECT_EQ(bracket(y(3, 2), y(2, 1)), y(3, 1));
    EXPECT_EQ(bracket(y(2, 1), y(3, 2)), -y(3, 1));
    EXPECT_TRUE(bracket(y(2, 1), y(2, 1)).is_zero());
    for (Root r : positive_roots(3)) EXPECT_TRUE(bracket(y(3, 1), QPoly::y(r)).is_zero());
}

TEST(Bracket, MatchesMatrixCommutator)
{
    for (int n = 2; n <= 6; ++n)
        for (Root a : positive_roots(n))
            for (Root b : positive_roots(n)) {
                QPoly ref;
                for (auto [k, r] : oracle::commutator(n, a, b)) ref += QPoly(k) * QPoly::y(r);
                ASSERT_EQ(bracket(QPoly::y(a), QPoly::y(b)), ref);
            }
}

TEST(Bracket, LaurentAndParameters)
{
    EXPECT_EQ(bracket(y(3, 2), y(2, 1).pow(-1)), -y(3, 1) * y(2, 1).pow(-2));
    EXPECT_TRUE(bracket(y(3, 2), y(3, 1).pow(-1)).is_zero());
    EXPECT_TRUE(bracket(c(0), y(2, 1)).is_zero());
    EXPECT_EQ(bracket(c(0) * y(3, 2), y(2, 1)), c(0) * y(3, 1));
}

TEST(Bracket, AntisymmetryLeibnizJacobi)
{
    std::mt19937_64 rng(7);
    for (int n = 3; n <= 5; ++n)
        for (int trial = 0; trial < 40; ++trial) {
            QPoly a = random_poly(rng, n, 3, 2), b = random_poly(rng, n, 3, 2), d = random_poly(rng, n, 3, 2);
            EXPECT_EQ(bracket(a, b), -bracket(b, a));
            EXPECT_EQ(bracket(a, b * d), bracket(a, b) * d + b * bracket(a, d));
            QPoly jac = bracket(a, bracket(b, d)) + bracket(b, bracket(d, a)) + bracket(d, bracket(a, b));
            EXPECT_TRUE(jac.is_zero()) << jac.str();
        }
}

TEST(IdealMembership, Triangular)
{
    Ideal<Rational> ideal({y(3, 1) - QPoly(2), y(3, 2) - y(2, 1) * y(3, 1)});
    EXPECT_TRUE(ideal.triangular());
    EXPECT_TRUE(ideal.contains(y(3, 2) - QPoly(2) * y(2, 1)));
    EXPECT_FALSE(ideal.contains(y(2, 1)));
    EXPECT_EQ(ideal.normal_form(y(3, 1) * y(3, 1)), QPoly(4));
}

TEST(IdealMembership, UnsupportedShape)
{
    Ideal<Rational> ideal({y(3, 2).pow(2)});
    EXPECT_FALSE(ideal.triangular());
    EXPECT_THROW(ideal.normal_form(y(3, 2)), UnsupportedIdealShape);
}

TEST(Casimir, Examples)
{
    Ideal<Rational> zero;
    for (int n = 3; n <= 7; ++n) EXPECT_TRUE(is_casimir_mod(y(n, 1), zero, n));
    EXPECT_FALSE(is_casimir_mod(y(2, 1), zero, 3));
    for (int n = 4; n <= 7; ++n) {
        Ideal<Rational> j({y(n, 1)});
        QPoly z1 = z_coefficient(n, 1);
        EXPECT_TRUE(is_casimir_mod(z1, j, n)) << "n=" << n;
        EXPECT_FALSE(is_casimir_mod(z1, zero, n)) << "n=" << n;
    }
}

TEST(PoissonIdeal, Examples)
{
    EXPECT_TRUE(is_poisson_ideal(Ideal<Rational>({y(4, 1) - QPoly(3)}), 4));
    EXPECT_FALSE(is_poisson_ideal(Ideal<Rational>({y(2, 1)}), 3));
}

TEST(Evaluate, CanonicalForms)
{
    auto f = canonical_form<Rational>(subset_of({3, 0, 1}), {Rational(1)}, Rational(0));
    EXPECT_EQ(evaluate(y(3, 1), f), Rational(1));
    EXPECT_EQ(evaluate(y(2, 1), f), Rational(0));

    // 2x2 minor at f: rows {4,5}, cols {1,2}; only y51 = c1 and y42 = c2 survive.
    auto s = subset_of({5, 0, 1});
    ASSERT_EQ(s.roots(), (std::vector<Root>{{5, 1}, {4, 2}}));
    auto g = canonical_form<Rational>(s, {Rational(3), Rational(7)}, Rational(0));
    EXPECT_EQ(evaluate(regular_minor(5, 2), g), Rational(-21));
    auto h = canonical_form<Fp>(s, {Fp(3, 5), Fp(7, 5)}, Fp(0, 5));
    EXPECT_EQ(evaluate(regular_minor(5, 2), h), Fp(-21, 5));
}

TEST(Evaluate, FieldMismatch)
{
    auto f = canonical_form<Fp>(subset_of({3, 0, 1}), {Fp(1, 5)}, Fp(0, 5));
    EXPECT_THROW(evaluate(QPoly(Rational(1, 5)) * y(3, 1), f), FieldMismatch);
    EXPECT_THROW(evaluate(to_fp_poly(y(3, 1), 7) + Polynomial<Fp>(Fp(1, 7)), f), FieldMismatch);
    EXPECT_THROW(evaluate(c(0), f), InvalidC);
}

TEST(TildeMap, Examples)
{
    Ideal<Rational> none;
    QPoly p = y(3, 2), q = y(2, 1) * y(3, 1).pow(-1);
    VarMask inv = var_bit(y_var(3, 1));
    EXPECT_EQ(bracket(p, q), QPoly(1));
    // {p, a} = 0: unchanged
    EXPECT_EQ(tilde_map(y(3, 1), p, q, none).laurent(), y(3, 1));
    // a = q' with {p, q'} = 1 gives q' - q
    QPoly q2 = q + y(3, 1);
    EXPECT_EQ(tilde_map(q2, p, q, none).laurent(), y(3, 1));
    EXPECT_TRUE(tilde_map(y(2, 1), p, q, none).laurent().is_zero());
    EXPECT_EQ(LocalizedPolynomial<Rational>(q, inv).fraction().second, Monomial::var(y_var(3, 1)));
    EXPECT_THROW(tilde_map(y(3, 1), y(2, 1), y(3, 2), none), NotCanonicalPair);
    EXPECT_THROW(LocalizedPolynomial<Rational>(q, 0), NotCanonicalPair);
}

TEST(TildeMap, ImageCommutesWithPair)
{
    auto s = subset_of({7, 3, 4});
    auto cv = symbolic_values(s);
    auto col = reduce_column(s, 1, cv);
    // first column: bullets (7,1), (6,1), (5,1), otimes (4,1)
    Ideal<Rational> i1({y(7, 1), y(6, 1), y(5, 1), y(4, 1) - c(0)}, cv.invertible);
    for (const auto& [p, q] : col.pairs)
        for (Root r : positive_roots(7)) {
            if (r.col == 1) continue;
            QPoly a = tilde_map(QPoly::y(r), p, q, i1).laurent();
            EXPECT_TRUE(i1.contains(bracket(p, a))) << a.str();
        }
}

TEST(ReduceColumn, SplitCase)
{
    auto s = subset_of({3, 0, 1});
    auto col = reduce_column(s, 1, symbolic_values(s));
    EXPECT_EQ(col.kind, ColumnCase::Split);
    ASSERT_EQ(col.pairs.size(), 1u);
    // gamma = (2,1) in C_+: p = y_{xi - gamma}, q = y_gamma / y_xi with y_xi = c
    EXPECT_EQ(col.pairs[0].p, y(3, 2));
    EXPECT_EQ(col.pairs[0].q, y(2, 1) * c(0).pow(-1));
    EXPECT_EQ(bracket(col.pairs[0].p, col.pairs[0].q).substitute(y_var(3, 1), c(0)), QPoly(1));
}

TEST(ReduceColumn, PlainCaseHasNoPairs)
{
    auto s = subset_of({3, 0, 1});
    auto col = reduce_column(s, 2, symbolic_values(s));
    EXPECT_EQ(col.kind, ColumnCase::Plain);
    EXPECT_TRUE(col.pairs.empty());
    auto t = subset_of({4, 2, 2});
    for (int k = 1; k < 4; ++k) EXPECT_TRUE(reduce_column(t, k, symbolic_values(t)).pairs.empty());
}

TEST(ReduceColumn, ExceptionalBlocks)
{
    // The D_4 factor sits in rows and columns 4..7; its local y_ab is y_{a+3, b+3}.
    auto s = subset_of({7, 3, 4});
    auto col = reduce_column(s, 4, symbolic_values(s));
    EXPECT_EQ(col.kind, ColumnCase::Exceptional);
    EXPECT_EQ(col.shape, "7,3,4");
    ASSERT_EQ(col.pairs.size(), 1u);
    // p = y43 y41^-1, q = y31 with y41 = c(7,4)
    EXPECT_EQ(col.pairs[0].p, y(7, 6) * c(3).pow(-1));
    EXPECT_EQ(col.pairs[0].q, y(6, 4));

    auto t = subset_of({7, 3, 8});
    auto d = reduce_column(t, 4, symbolic_values(t));
    EXPECT_EQ(d.kind, ColumnCase::Exceptional);
    EXPECT_EQ(d.shape, "7,3,8");
    // local y32~ = y32 - c1^-1 y42 y31, with y31 = c(6,4)
    EXPECT_EQ(d.theta.at(Root{6, 5}), y(6, 5) - y(7, 5) * c(3).pow(-1) * c(4));
}

TEST(BuildIdeal, AbelianColumns)
{
    auto s = subset_of({3, 1, 1});
    auto b = build_ideal(s, symbolic_values(s));
    // (3,1) is in M(S) with value zero
    ASSERT_EQ(b.roots, (std::vector<Root>{{3, 1}, {2, 1}, {3, 2}}));
    EXPECT_EQ(b.q[0], y(3, 1));
    EXPECT_EQ(b.q[1], y(2, 1));
    EXPECT_EQ(b.q[2], y(3, 2));
    EXPECT_TRUE(b.ideal.contains(y(2, 1) - c(0)));
    EXPECT_TRUE(b.ideal.contains(y(3, 2) - c(1)));
    EXPECT_TRUE(b.ideal.contains(y(3, 1)));
}

TEST(BuildIdeal, Regular3)
{
    auto s = subset_of({3, 0, 1});
    auto b = build_ideal(s, numeric_values(s, {Rational(5)}));
    ASSERT_EQ(b.roots, (std::vector<Root>{{3, 1}}));
    EXPECT_EQ(b.q[0], y(3, 1));
    EXPECT_TRUE(b.ideal.contains(y(3, 1) - QPoly(5)));
}

TEST(BuildIdeal, DisplayedSystem634)
{
    auto s = subset_of({6, 3, 4});
    auto cv = symbolic_values(s);
    auto b = build_ideal(s, cv);
    const auto& ideal = b.ideal;
    for (auto [i, j] : {std::pair{6, 1}, {5, 1}, {4, 1}, {6, 2}, {6, 3}}) EXPECT_TRUE(ideal.contains(y(i, j)));
    EXPECT_TRUE(ideal.contains(y(3, 1) - c(0)));
    EXPECT_TRUE(ideal.contains(y(5, 2) - c(1)));
    // the 2x2 minor and the quadratic relation, constants taken at the canonical form
    QPoly minor = y(4, 2) * y(5, 3) - y(4, 3) * y(5, 2);
    EXPECT_TRUE(ideal.contains(minor + c(3) * c(1)));
    EXPECT_TRUE(ideal.contains(y(5, 3) * y(3, 1) + y(5, 2) * y(2, 1) - c(0) * c(2)));
    EXPECT_TRUE(ideal.contains(y(6, 4) - c(4)));
    // y65 is constant on the orbit only when c(6,4) = 0
    EXPECT_FALSE(ideal.contains(y(6, 5) - c(5)));
    std::vector<Rational> vals{1, 2, 3, 4, 0, 6};
    auto zeroed = build_ideal(s, numeric_values(s, vals)).ideal;
    EXPECT_TRUE(zeroed.contains(y(6, 5) - QPoly(6)));
}

TEST(BuildIdeal, GeneratorShape)
{
    for (int n = 3; n <= 7; ++n)
        for (const auto& e : catalog(n)) {
            auto cv = symbolic_values(e.subset);
            auto b = build_ideal(e.subset, cv);
            ASSERT_EQ(b.roots.size(), static_cast<std::size_t>(e.subset.a().size()));
            for (std::size_t k = 0; k < b.roots.size(); ++k) {
                // y_eta appears linearly once; every other root variable is greater than eta
                const QPoly& q = b.q[k];
                Root eta = b.roots[k];
                EXPECT_EQ(q.terms().count(Monomial::var(y_var(eta))), 1u);
                for (const auto& [m, coef] : q.terms())
                    for (Root r : positive_roots(n))
                        if (m.exponent(y_var(r)) && r != eta) EXPECT_TRUE(lex_greater(r, eta)) << to_string(e.label);
            }
            for (const auto& r : generator_residues_at_canonical(e.subset, cv, b)) EXPECT_TRUE(r.is_zero());
        }
}

TEST(BuildIdeal, PoissonUpTo6)
{
    for (int n = 3; n <= 6; ++n)
        for (const auto& e : catalog(n)) {
            auto cv = symbolic_values(e.subset);
            EXPECT_TRUE(is_poisson_ideal(ideal_of(e.subset, cv), n)) << to_string(e.label);
        }
}

TEST(BuildIdeal, PoissonWithNumericValues)
{
    std::mt19937_64 rng(11);
    for (int n = 3; n <= 6; ++n)
        for (const auto& e : catalog(n)) {
            std::vector<Rational> vals;
            auto otimes = e.subset.otimes();
            for (Root r : e.subset.roots()) {
                long v = static_cast<long>(rng() % 9) - 4;
                if (otimes.contains(r) && v == 0) v = 5;
                vals.push_back(Rational(v));
            }
            EXPECT_TRUE(is_poisson_ideal(ideal_of(e.subset, numeric_values(e.subset, vals)), n)) << to_string(e.label);
        }
}
