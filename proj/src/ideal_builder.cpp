#include "coadj/ideal_builder.hpp"

#include "coadj/error.hpp"

#include <functional>

namespace coadj {

CValues symbolic_values(const AdmissibleSubset& s)
{
    CValues c;
    for (int k = 0; k < s.size(); ++k) {
        c.values.push_back(QPoly::param(k));
        if (s.is_otimes(k)) c.invertible |= var_bit(param_var(k));
    }
    return c;
}

CValues numeric_values(const AdmissibleSubset& s, const std::vector<Rational>& values)
{
    if (static_cast<int>(values.size()) != s.size())
        throw InvalidC("expected " + std::to_string(s.size()) + " values, got " + std::to_string(values.size()));
    CValues c;
    for (int k = 0; k < s.size(); ++k) {
        if (s.is_otimes(k) && values[k].is_zero())
            throw InvalidC("zero value on otimes root " + to_string(s.roots()[k]));
        c.values.emplace_back(values[k]);
    }
    return c;
}

QPoly c_of(const AdmissibleSubset& s, const CValues& c, Root r)
{
    int pos = s.position(r);
    if (pos >= 0) return c.values.at(pos);
    if (s.m().contains(r)) return QPoly();
    throw NotInA(to_string(r) + " is not in A(S)");
}

RootSet column_block(const AdmissibleSubset& s, int t)
{
    return columns_and_chain(s).b[t];
}

namespace {

using Substitution = std::map<Var, QPoly>;

struct Shape {
    const char* name;
    std::map<std::pair<int, int>, Cell> cells;
    std::pair<int, int> p_num, p_den, q;
};

const std::vector<Shape>& exceptional_shapes()
{
    static const std::vector<Shape> shapes = {
        {"7,3,4",
         {{{2, 1}, Cell::Box}, {{3, 1}, Cell::Plus}, {{4, 1}, Cell::Otimes}, {{4, 3}, Cell::Minus}},
         {4, 3}, {4, 1}, {3, 1}},
        {"7,3,8",
         {{{2, 1}, Cell::Plus}, {{3, 1}, Cell::Box}, {{3, 2}, Cell::Box}, {{4, 1}, Cell::Otimes}, {{4, 2}, Cell::Minus}},
         {4, 2}, {4, 1}, {2, 1}},
    };
    return shapes;
}

// Picks the orientation of (p, q) whose second member Poisson-commutes with the domain.
CanonicalPair orient(const CanonicalPair& pq, const RootSet& domain, const std::function<QPoly(const QPoly&)>& reduce)
{
    auto commutes = [&](const QPoly& x) {
        for (Root r : domain.roots())
            if (!reduce(bracket(x, QPoly::y(r))).is_zero()) return false;
        return true;
    };
    if (commutes(pq.q)) return pq;
    if (commutes(pq.p)) return {pq.q, -pq.p};
    throw UnsupportedColumn("neither member of the pair (" + pq.p.str() + ", " + pq.q.str() +
                            ") commutes with the remaining block");
}

void check_pair(const CanonicalPair& pq, const std::function<QPoly(const QPoly&)>& reduce)
{
    QPoly b = reduce(bracket(pq.p, pq.q));
    if (b != QPoly(1)) throw UnsupportedColumn("{p, q} = " + b.str() + " for p = " + pq.p.str() + ", q = " + pq.q.str());
}

void check_next_block(const AdmissibleSubset& s, int t, const RootSet& computed)
{
    if (t + 1 < s.rank() && column_block(s, t + 1) != computed)
        throw LemmaFailure("B_" + std::to_string(t + 1) + " mismatch: " + to_string(column_block(s, t + 1)) +
                           " vs " + to_string(computed));
}

} // namespace

ColumnReduction reduce_column(const AdmissibleSubset& s, int t, const CValues& c)
{
    int n = s.rank();
    if (t < 1 || t >= n) throw InvalidDimension("column " + std::to_string(t));
    ColumnReduction out;
    out.column = t;
    out.b = column_block(s, t);
    RootSet col = RootSet::column(n, t);
    RootSet a_col = s.a() & col;
    if (!a_col.subset_of(out.b)) throw LemmaFailure("A(S) in column " + std::to_string(t) + " leaves B_t");
    out.a_roots = a_col.roots();

    Substitution base;
    for (Root r : out.a_roots) base[y_var(r)] = c_of(s, c, r);
    auto base_reduce = [&](const QPoly& x) { return x.substitute(base); };

    RootSet ot = s.otimes() & col;
    RootSet bx = s.boxes() & col;
    if (ot.empty()) {
        out.kind = ColumnCase::Plain;
        out.b_next = out.b - col;
        for (Root r : out.b_next.roots()) out.theta[r] = QPoly::y(r);
        check_next_block(s, t, out.b_next);
        return out;
    }
    if (ot.size() > 1) throw UnsupportedColumn("column " + std::to_string(t) + " holds two otimes roots");
    Root xi = *ot.max();
    QPoly c_xi = c_of(s, c, xi);
    if (c_xi.is_zero()) throw InvalidC("zero value on otimes root " + to_string(xi));

    bool box_above = false;
    for (Root r : bx.roots()) box_above |= r.row < xi.row;

    if (!box_above) {
        out.kind = ColumnCase::Split;
        std::vector<Root> plus = c_plus(xi, out.b).roots(); // gamma_1 > gamma_2 > ...
        int k = static_cast<int>(plus.size());
        std::vector<Substitution> level(k + 1, base); // level[m] reduces modulo I^(m)
        for (int m = 1; m <= k; ++m) {
            level[m] = level[m - 1];
            level[m][y_var(plus[m - 1])] = QPoly();
        }
        std::vector<RootSet> domain(k + 1, out.b);
        for (int m = 1; m <= k; ++m) {
            domain[m] = domain[m - 1];
            domain[m].erase(Root{xi.row, plus[m - 1].row});
        }
        std::vector<CanonicalPair> pairs;
        for (int m = 1; m <= k; ++m) {
            Root gamma = plus[m - 1];
            Root gamma_minus{xi.row, gamma.row};
            auto reduce = [&, m](const QPoly& x) { return x.substitute(level[m - 1]); };
            CanonicalPair pq{QPoly::y(gamma_minus), reduce(QPoly::y(gamma) * QPoly::y(xi).pow(-1))};
            check_pair(pq, reduce);
            pairs.push_back(orient(pq, domain[m], reduce));
        }
        out.pairs = pairs;
        out.b_next = out.b - col - c_minus(xi, out.b);
        check_next_block(s, t, out.b_next);

        // T_m on generators of domain[m], cached.
        std::vector<std::map<Var, QPoly>> images(k + 1);
        auto image = [&](int m, Var v) -> const QPoly& {
            auto it = images[m].find(v);
            if (it != images[m].end()) return it->second;
            if (!domain[m].contains(var_root(v)))
                throw LemmaFailure(var_name(v) + " outside the level " + std::to_string(m) + " block");
            auto reduce = [&](const QPoly& x) { return x.substitute(level[m - 1]); };
            QPoly img = tilde_series(QPoly::var(v), pairs[m - 1].p, pairs[m - 1].q, reduce);
            return images[m].emplace(v, img).first->second;
        };
        for (Root eta : out.b_next.roots()) {
            QPoly cur = QPoly::y(eta);
            for (int m = k; m >= 1; --m) {
                Substitution sub;
                VarMask roots = cur.support() & ((VarMask(1) << kRootVars) - 1);
                for (VarMask b = roots; b; b &= b - 1) {
                    Var v = std::countr_zero(b);
                    sub[v] = image(m, v);
                }
                cur = cur.substitute(sub).substitute(level[m - 1]);
            }
            out.theta[eta] = base_reduce(cur);
        }
        return out;
    }

    out.kind = ColumnCase::Exceptional;
    Diagram d = diagram(s);
    std::map<std::pair<int, int>, Cell> local;
    for (Root r : out.b.roots()) local[{r.row - t + 1, r.col - t + 1}] = d.at(r);
    const Shape* shape = nullptr;
    for (const auto& sh : exceptional_shapes())
        if (n - t + 1 == 4 && sh.cells == local) shape = &sh;
    if (!shape) throw UnsupportedColumn("column " + std::to_string(t) + " of " + to_string(s) + " has a box above its otimes root");
    out.shape = shape->name;
    auto full = [&](std::pair<int, int> rc) { return QPoly::y(rc.first + t - 1, rc.second + t - 1); };
    CanonicalPair pq{base_reduce(full(shape->p_num) * full(shape->p_den).pow(-1)), base_reduce(full(shape->q))};
    check_pair(pq, base_reduce);

    RootSet minus(n);
    for (Root r : out.b.roots())
        if (d.at(r) == Cell::Minus) minus.insert(r);
    out.b_next = out.b - col - minus;
    check_next_block(s, t, out.b_next);
    CanonicalPair used = orient(pq, out.b_next, base_reduce);
    out.pairs.push_back(used);
    for (Root eta : out.b_next.roots()) out.theta[eta] = tilde_series(QPoly::y(eta), used.p, used.q, base_reduce);
    return out;
}

BuiltIdeal build_ideal(const AdmissibleSubset& s, const CValues& c)
{
    int n = s.rank();
    if (static_cast<int>(c.values.size()) != s.size()) throw InvalidC("c has the wrong length");
    std::map<Root, QPoly> theta;
    for (Root r : positive_roots(n)) theta[r] = QPoly::y(r);

    std::map<Root, QPoly> q;
    BuiltIdeal out;
    for (int t = 1; t < n; ++t) {
        ColumnReduction red = reduce_column(s, t, c);
        for (Root r : red.a_roots) q[r] = theta.at(r);
        Substitution compose;
        for (Root r : red.b.roots()) compose[y_var(r)] = theta.at(r);
        std::map<Root, QPoly> next;
        for (const auto& [eta, img] : red.theta) {
            VarMask roots = img.support() & ((VarMask(1) << kRootVars) - 1);
            for (VarMask b = roots; b; b &= b - 1)
                if (!red.b.contains(var_root(std::countr_zero(b))))
                    throw LemmaFailure("theta image leaves B_" + std::to_string(t));
            next[eta] = img.substitute(compose);
        }
        theta = std::move(next);
        out.columns.push_back(std::move(red));
    }

    std::vector<QPoly> gens;
    for (Root r : s.a().roots()) {
        out.roots.push_back(r);
        out.q.push_back(q.at(r));
        gens.push_back(q.at(r) - c_of(s, c, r));
    }
    out.ideal = Ideal<Rational>(gens, c.invertible);
    return out;
}

std::vector<QPoly> generator_residues_at_canonical(const AdmissibleSubset& s, const CValues& c, const BuiltIdeal& b)
{
    Substitution point;
    for (Root r : positive_roots(s.rank())) {
        int pos = s.position(r);
        point[y_var(r)] = pos >= 0 ? c.values[pos] : QPoly();
    }
    std::vector<QPoly> out;
    for (std::size_t k = 0; k < b.roots.size(); ++k) out.push_back(b.q[k].substitute(point) - c_of(s, c, b.roots[k]));
    return out;
}

} // namespace coadj
