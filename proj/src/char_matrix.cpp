#include "coadj/char_matrix.hpp"

#include "coadj/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace coadj {

TauPolynomial::TauPolynomial(std::vector<QPoly> coefficients) : c_(std::move(coefficients)) { trim(); }

void TauPolynomial::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const QPoly& TauPolynomial::coefficient(int k) const
{
    static const QPoly zero;
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : zero;
}

int TauPolynomial::least_degree() const
{
    for (int k = 0; k < static_cast<int>(c_.size()); ++k)
        if (!c_[k].is_zero()) return k;
    return -1;
}

TauPolynomial& TauPolynomial::operator+=(const TauPolynomial& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

TauPolynomial operator-(const TauPolynomial& a)
{
    TauPolynomial out = a;
    for (auto& x : out.c_) x = -x;
    return out;
}

TauPolynomial operator*(const TauPolynomial& a, const TauPolynomial& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<QPoly> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) c[i + j] += a.c_[i] * b.c_[j];
    }
    return TauPolynomial(std::move(c));
}

TauPolynomial phi_tau_entry(int i, int j)
{
    if (i == j) return TauPolynomial({QPoly(1)});
    if (i > j) return TauPolynomial({QPoly(), QPoly::y(i, j)});
    return {};
}

namespace {

void check_spec(int n, const MinorSpec& spec)
{
    if (spec.rows.size() != spec.cols.size()) throw InvalidDimension("minor with unequal row and column counts");
    if (spec.rows.size() > 20) throw InvalidDimension("minor too large");
    for (const auto* v : {&spec.rows, &spec.cols})
        for (std::size_t k = 0; k < v->size(); ++k) {
            if ((*v)[k] < 1 || (*v)[k] > n) throw InvalidDimension("minor index out of range");
            if (k && (*v)[k] <= (*v)[k - 1]) throw InvalidDimension("minor indices must increase");
        }
}

// Laplace expansion along the last column, memoized over subsets of rows.
template <class E, class Entry>
E expand(const MinorSpec& spec, Entry&& entry, const E& one)
{
    int m = static_cast<int>(spec.rows.size());
    std::vector<E> memo(std::size_t(1) << m);
    memo[0] = one;
    std::vector<unsigned> masks(memo.size());
    std::iota(masks.begin(), masks.end(), 0u);
    std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
    for (unsigned mask : masks) {
        int k = std::popcount(mask);
        if (k == 0) continue;
        int col = spec.cols[k - 1];
        E total{};
        int rank = 0;
        for (int r = 0; r < m; ++r) {
            if (!(mask >> r & 1u)) continue;
            E a = entry(spec.rows[r], col);
            if (!a.is_zero()) {
                const E& sub = memo[mask & ~(1u << r)];
                if (!sub.is_zero()) {
                    E term = a * sub;
                    total += ((rank + k - 1) % 2) ? -term : term;
                }
            }
            ++rank;
        }
        memo[mask] = std::move(total);
    }
    return memo.back();
}

} // namespace

TauPolynomial minor(int n, const MinorSpec& spec)
{
    check_spec(n, spec);
    return expand<TauPolynomial>(spec, phi_tau_entry, TauPolynomial({QPoly(1)}));
}

QPoly phi_minor(int n, const MinorSpec& spec)
{
    check_spec(n, spec);
    return expand<QPoly>(spec, [](int i, int j) { return i > j ? QPoly::y(i, j) : QPoly(); }, QPoly(1));
}

namespace {

std::vector<Root> betas_above(const AdmissibleSubset& s, Root eta)
{
    std::vector<Root> out;
    for (int t = 0; t < s.size(); ++t)
        if (s.is_otimes(t) && s.roots()[t] > eta) out.push_back(s.roots()[t]);
    return out;
}

int swap_by(Root a, int x)
{
    if (x == a.row) return a.col;
    if (x == a.col) return a.row;
    return x;
}

std::vector<int> eps(int n, Root r)
{
    std::vector<int> v(n + 1, 0);
    v[r.col] += 1;
    v[r.row] -= 1;
    return v;
}

} // namespace

WEta w_eta(const AdmissibleSubset& s, Root eta)
{
    if (!s.a().contains(eta)) throw NotInA(to_string(eta) + " is not in A(S)");
    int n = s.rank();
    WEta w;
    w.eta = eta;
    w.word = betas_above(s, eta);
    w.word.push_back(eta);
    for (int x = 1; x <= n; ++x) {
        int y = x;
        for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) y = swap_by(*it, y);
        w.perm.push_back(y);
    }
    for (int x = 1; x <= eta.col; ++x) w.rows.push_back(w.perm[x - 1]);
    std::sort(w.rows.begin(), w.rows.end());
    return w;
}

HSubset h_subset(const AdmissibleSubset& s, Root eta)
{
    int n = s.rank();
    WEta w = w_eta(s, eta);
    std::vector<int> target(n + 1, 0);
    for (int x = 1; x <= eta.col; ++x) target[x] += 1;
    for (int r : w.rows) target[r] -= 1;
    auto ve = eps(n, eta);
    for (int x = 0; x <= n; ++x) target[x] -= ve[x];

    std::vector<Root> betas = betas_above(s, eta);
    std::vector<HSubset> found;
    for (unsigned mask = 0; mask < (1u << betas.size()); ++mask) {
        std::vector<int> sum(n + 1, 0);
        HSubset h;
        for (std::size_t b = 0; b < betas.size(); ++b)
            if (mask >> b & 1u) {
                auto vb = eps(n, betas[b]);
                for (int x = 0; x <= n; ++x) sum[x] += vb[x];
                h.h.push_back(betas[b]);
            }
        if (sum == target) {
            h.degree = static_cast<int>(h.h.size()) + 1;
            found.push_back(h);
        }
    }
    if (found.size() != 1)
        throw LemmaFailure(std::to_string(found.size()) + " decompositions of (1 - w)phi for eta = " + to_string(eta));
    return found.front();
}

CharGenerator p_h_eta(const AdmissibleSubset& s, Root eta)
{
    WEta w = w_eta(s, eta);
    HSubset h = h_subset(s, eta);
    CharGenerator g;
    g.eta = eta;
    g.spec.rows = w.rows;
    for (int x = 1; x <= eta.col; ++x) g.spec.cols.push_back(x);
    g.h = h.degree;
    for (int x = 1; x <= eta.col; ++x) g.q += !std::binary_search(w.rows.begin(), w.rows.end(), x);
    for (int m = 1; m <= eta.col; ++m) g.d += w.rows[m - 1] > m;
    g.minor = minor(s.rank(), g.spec);
    g.p = g.minor.coefficient(g.h);
    return g;
}

std::vector<CharGenerator> char_system(const AdmissibleSubset& s)
{
    std::vector<CharGenerator> out;
    for (Root eta : s.a().roots()) out.push_back(p_h_eta(s, eta));
    return out;
}

int n_zero(int n) { return n / 2; }
int n_otimes(int n) { return (n - 1) / 2; }

namespace {

std::vector<int> range(int a, int b)
{
    std::vector<int> v;
    for (int x = a; x <= b; ++x) v.push_back(x);
    return v;
}

} // namespace

QPoly regular_minor(int n, int j)
{
    if (j < 1 || j > n_zero(n)) throw InvalidDimension("P_j needs 1 <= j <= n0");
    return phi_minor(n, {range(n - j + 1, n), range(1, j)});
}

std::vector<QPoly> regular_minors(int n)
{
    std::vector<QPoly> out;
    for (int j = 1; j <= n_zero(n); ++j) out.push_back(regular_minor(n, j));
    return out;
}

QPoly bordered_prime(int n, int j)
{
    if (j < 1 || j > n_otimes(n)) throw InvalidDimension("P'_j needs 1 <= j <= n_otimes");
    std::vector<int> rows{n - j};
    for (int r = n - j + 2; r <= n; ++r) rows.push_back(r);
    return phi_minor(n, {rows, range(1, j)});
}

QPoly bordered_double_prime(int n, int j)
{
    if (j < 1 || j > n_otimes(n)) throw InvalidDimension("P''_j needs 1 <= j <= n_otimes");
    std::vector<int> cols = range(1, j - 1);
    cols.push_back(j + 1);
    return phi_minor(n, {range(n - j + 1, n), cols});
}

QPoly p_n0_prime(int n)
{
    if (n % 2 || n < 4) throw InvalidDimension("P'_{n0} is defined for even n >= 4");
    int n0 = n_zero(n);
    std::vector<int> rows{n0};
    for (int r = n0 + 3; r <= n; ++r) rows.push_back(r);
    return phi_minor(n, {rows, range(1, n0 - 1)});
}

QPoly z_coefficient(int n, int k)
{
    if (k < 1 || k > n_otimes(n)) throw InvalidDimension("Z_k needs 1 <= k <= n_otimes");
    int j = n - k;
    return minor(n, {range(n - j + 1, n), range(1, j)}).coefficient(k + 1);
}

std::vector<QPoly> z_coefficients(int n)
{
    std::vector<QPoly> out;
    for (int k = 1; k <= n_otimes(n); ++k) out.push_back(z_coefficient(n, k));
    return out;
}

} // namespace coadj
