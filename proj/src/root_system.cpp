#include "coadj/root_system.hpp"

#include "coadj/error.hpp"

#include <cstdio>
#include <sstream>

namespace coadj {

void check_rank(int n)
{
    if (n < 2 || n > kMaxRank)
        throw InvalidDimension("n = " + std::to_string(n) + " outside 2.." + std::to_string(kMaxRank));
}

int num_roots(int n) { return n * (n - 1) / 2; }

bool is_root(int n, Root r) { return r.col >= 1 && r.row > r.col && r.row <= n; }

int root_index(int n, Root r)
{
    if (!is_root(n, r)) throw NotMember(to_string(r) + " is not a positive root for n = " + std::to_string(n));
    // Columns before r.col hold (n - c) roots each.
    int offset = (r.col - 1) * n - (r.col - 1) * r.col / 2;
    return offset + (n - r.row);
}

Root root_at(int n, int index)
{
    int col = 1;
    while (index >= n - col) {
        index -= n - col;
        ++col;
    }
    return {n - index, col};
}

std::vector<Root> positive_roots(int n)
{
    check_rank(n);
    std::vector<Root> out;
    out.reserve(num_roots(n));
    for (int j = 1; j < n; ++j)
        for (int i = n; i > j; --i) out.push_back({i, j});
    return out;
}

std::optional<Root> root_sum(Root a, Root b)
{
    // (eps_j - eps_i) + (eps_l - eps_k)
    if (a.col == b.row) return Root{a.row, b.col};
    if (b.col == a.row) return Root{b.row, a.col};
    return std::nullopt;
}

std::optional<Root> root_difference(Root a, Root b)
{
    // a - b = c  iff  c + b = a
    if (a.col == b.col && a.row > b.row) return Root{a.row, b.row};
    if (a.row == b.row && b.col > a.col) return Root{b.col, a.col};
    return std::nullopt;
}

std::string to_string(Root r) { return std::to_string(r.row) + "," + std::to_string(r.col); }

Root parse_root(const std::string& text)
{
    Root r;
    char comma = 0;
    std::istringstream in(text);
    if (!(in >> r.row >> comma >> r.col) || comma != ',') throw NotMember("cannot parse root '" + text + "'");
    return r;
}

RootSet RootSet::all(int n)
{
    int count = num_roots(n);
    return {n, count == 64 ? ~0ULL : ((1ULL << count) - 1)};
}

RootSet RootSet::column(int n, int col)
{
    RootSet s(n);
    for (int i = col + 1; i <= n; ++i) s.insert({i, col});
    return s;
}

RootSet RootSet::from(int n, const std::vector<Root>& roots)
{
    RootSet s(n);
    for (Root r : roots) s.insert(r);
    return s;
}

bool RootSet::contains(Root r) const
{
    if (!is_root(n_, r)) return false;
    return (bits_ >> root_index(n_, r)) & 1ULL;
}

void RootSet::insert(Root r) { bits_ |= 1ULL << root_index(n_, r); }

void RootSet::erase(Root r) { bits_ &= ~(1ULL << root_index(n_, r)); }

std::vector<Root> RootSet::roots() const
{
    std::vector<Root> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(root_at(n_, std::countr_zero(b)));
    return out;
}

std::optional<Root> RootSet::max() const
{
    if (!bits_) return std::nullopt;
    return root_at(n_, std::countr_zero(bits_));
}

std::optional<Root> RootSet::max_below(Root bound) const
{
    // Elements below `bound` have larger indices.
    int idx = root_index(n_, bound);
    std::uint64_t rest = idx >= 63 ? 0 : bits_ & (~0ULL << (idx + 1));
    if (!rest) return std::nullopt;
    return root_at(n_, std::countr_zero(rest));
}

std::vector<std::pair<Root, Root>> c_pairs(Root xi, const RootSet& a)
{
    std::vector<std::pair<Root, Root>> out;
    for (int k = xi.col + 1; k < xi.row; ++k) {
        Root gamma{k, xi.col};
        Root rest{xi.row, k};
        if (a.contains(gamma) && a.contains(rest)) out.emplace_back(gamma, rest);
    }
    return out;
}

RootSet c_set(Root xi, const RootSet& a)
{
    RootSet s(a.rank());
    for (auto [g, r] : c_pairs(xi, a)) {
        s.insert(g);
        s.insert(r);
    }
    return s;
}

RootSet c_plus(Root xi, const RootSet& a)
{
    // gamma = (k, col) sits in the column of xi, so it is always the larger one.
    RootSet s(a.rank());
    for (auto [g, r] : c_pairs(xi, a)) s.insert(g);
    return s;
}

RootSet c_minus(Root xi, const RootSet& a)
{
    RootSet s(a.rank());
    for (auto [g, r] : c_pairs(xi, a)) s.insert(r);
    return s;
}

std::pair<RootSet, RootSet> c_split(Root xi, const RootSet& a)
{
    if (!a.contains(xi)) throw NotMember(to_string(xi));
    return {c_plus(xi, a), c_minus(xi, a)};
}

RootSet shrink(Root xi, const RootSet& a)
{
    if (!a.contains(xi)) throw NotMember(to_string(xi));
    return a - c_set(xi, a);
}

bool is_additive(const RootSet& a)
{
    for (Root x : a.roots())
        for (Root y : a.roots()) {
            auto s = root_sum(x, y);
            if (s && !a.contains(*s)) return false;
        }
    return true;
}

bool is_normal(const RootSet& m, const RootSet& a)
{
    if (!m.subset_of(a)) throw NotSubset(to_string(m - a));
    for (Root x : a.roots())
        for (Root y : m.roots()) {
            auto s = root_sum(x, y);
            if (s && !m.contains(*s)) return false;
        }
    return true;
}

std::string to_string(const RootSet& s)
{
    std::string out = "{";
    bool first = true;
    for (Root r : s.roots()) {
        if (!first) out += " ";
        out += "(" + to_string(r) + ")";
        first = false;
    }
    return out + "}";
}

} // namespace coadj
