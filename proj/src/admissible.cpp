#include "coadj/admissible.hpp"

#include "coadj/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace coadj {

AdmissibleSubset AdmissibleSubset::build(int n, const std::vector<Root>& choices)
{
    check_rank(n);
    AdmissibleSubset s;
    s.n_ = n;
    s.otimes_set_ = RootSet(n);
    s.box_set_ = RootSet(n);
    s.chain_.push_back(RootSet::all(n));
    for (Root xi : choices) s = s.extended(xi);
    return s;
}

AdmissibleSubset AdmissibleSubset::extended(Root xi) const
{
    int pos = size();
    if (!is_root(n_, xi)) throw InvalidChoice(pos + 1, to_string(xi) + " is not a positive root");
    if (pos > 0 && !(xi < roots_.back()))
        throw InvalidChoice(pos + 1, to_string(xi) + " is not below " + to_string(roots_.back()));
    const RootSet& current = chain_.back();
    if (!current.contains(xi)) throw InvalidChoice(pos + 1, to_string(xi) + " is not in A_" + std::to_string(pos + 1));

    AdmissibleSubset out = *this;
    RootSet removed = c_set(xi, current);
    bool ot = !removed.empty();
    out.roots_.push_back(xi);
    out.otimes_.push_back(ot);
    (ot ? out.otimes_set_ : out.box_set_).insert(xi);
    out.chain_.push_back(current - removed);
    return out;
}

int AdmissibleSubset::position(Root r) const
{
    auto it = std::find(roots_.begin(), roots_.end(), r);
    return it == roots_.end() ? -1 : static_cast<int>(it - roots_.begin());
}

std::string to_string(const AdmissibleSubset& s)
{
    std::string out;
    for (int t = 0; t < s.size(); ++t) {
        if (t) out += " ";
        out += "(" + to_string(s.roots()[t]) + (s.is_otimes(t) ? ")x" : ")b");
    }
    return out;
}

char symbol(Cell c)
{
    switch (c) {
    case Cell::Otimes: return 'X';
    case Cell::Box: return 'B';
    case Cell::Bullet: return '.';
    case Cell::Plus: return '+';
    case Cell::Minus: return '-';
    case Cell::Empty: break;
    }
    return ' ';
}

const char* kind_name(Cell c)
{
    switch (c) {
    case Cell::Otimes: return "otimes";
    case Cell::Box: return "box";
    case Cell::Bullet: return "bullet";
    case Cell::Plus: return "plus";
    case Cell::Minus: return "minus";
    case Cell::Empty: break;
    }
    return "empty";
}

std::vector<std::string> Diagram::grid() const
{
    std::vector<std::string> rows;
    for (int i = 1; i <= n_; ++i) {
        std::string row;
        for (int j = 1; j <= n_; ++j) row += symbol(cell(i, j));
        rows.push_back(row);
    }
    return rows;
}

std::string Diagram::ascii() const
{
    std::string out;
    for (const auto& row : grid()) out += row + "\n";
    return out;
}

int Diagram::count(Cell c) const { return static_cast<int>(std::count(cells_.begin(), cells_.end(), c)); }

int Diagram::bullets_in_column(int col) const
{
    int k = 0;
    for (int i = col + 1; i <= n_; ++i) k += cell(i, col) == Cell::Bullet;
    return k;
}

std::vector<Diagram> diagram_stages(const AdmissibleSubset& s)
{
    int n = s.rank();
    Diagram d(n);
    std::vector<Diagram> stages;
    for (Root xi : s.roots()) {
        auto fill = [&](int a, int b) {
            if (a > b && d.cell(a, b) == Cell::Empty) d.cell(a, b) = Cell::Bullet;
        };
        for (int b = 1; b < xi.col; ++b)
            for (int a = b + 1; a <= n; ++a) fill(a, b);
        for (int a = xi.row + 1; a <= n; ++a) fill(a, xi.col);

        bool paired = false;
        for (int a = xi.col + 1; a < xi.row; ++a) {
            if (d.cell(xi.row, a) == Cell::Empty && d.cell(a, xi.col) == Cell::Empty) {
                d.cell(xi.row, a) = Cell::Minus;
                d.cell(a, xi.col) = Cell::Plus;
                paired = true;
            }
        }
        d.cell(xi.row, xi.col) = paired ? Cell::Otimes : Cell::Box;
        stages.push_back(d);
    }
    return stages;
}

Diagram diagram(const AdmissibleSubset& s)
{
    auto stages = diagram_stages(s);
    Diagram d = stages.empty() ? Diagram(s.rank()) : stages.back();
    for (int i = 2; i <= s.rank(); ++i)
        for (int j = 1; j < i; ++j)
            if (d.cell(i, j) == Cell::Empty) d.cell(i, j) = Cell::Bullet;
    return d;
}

std::string to_string(const Label& l)
{
    return std::to_string(l.n) + "," + std::to_string(l.k) + "," + std::to_string(l.m);
}

Label parse_label(const std::string& text)
{
    Label l;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    if (!(in >> l.n >> c1 >> l.k >> c2 >> l.m) || c1 != ',' || c2 != ',')
        throw NotMember("cannot parse diagram label '" + text + "'");
    return l;
}

namespace {

void dfs(const AdmissibleSubset& s, std::vector<AdmissibleSubset>& out)
{
    out.push_back(s);
    RootSet candidates = s.chain().back();
    for (Root r : candidates.roots()) {
        if (s.size() > 0 && !(r < s.roots().back())) continue;
        dfs(s.extended(r), out);
    }
}

AdmissibleSubset greedy_complete(AdmissibleSubset s)
{
    while (s.size() > 0) {
        auto next = s.chain().back().max_below(s.roots().back());
        if (!next) break;
        s = s.extended(*next);
    }
    return s;
}

std::optional<AdmissibleSubset> successor_unchecked(const AdmissibleSubset& s)
{
    int p = -1;
    for (int t = 0; t < s.size(); ++t)
        if (s.is_otimes(t)) p = t;
    if (p < 0) return std::nullopt;

    std::vector<Root> prefix(s.roots().begin(), s.roots().begin() + p);
    AdmissibleSubset head = AdmissibleSubset::build(s.rank(), prefix);
    auto next = head.chain().back().max_below(s.roots()[p]);
    if (!next) throw LemmaFailure("sequence rule has no replacement for " + to_string(s.roots()[p]));
    return greedy_complete(head.extended(*next));
}

// Descending lexicographic comparison of root sequences: the sequence rule lists in this order.
bool sequence_before(const AdmissibleSubset& a, const AdmissibleSubset& b)
{
    return std::lexicographical_compare(b.roots().begin(), b.roots().end(), a.roots().begin(), a.roots().end());
}

} // namespace

std::vector<AdmissibleSubset> enumerate_admissible(int n)
{
    std::vector<AdmissibleSubset> out;
    dfs(AdmissibleSubset::build(n, {}), out);
    return out;
}

std::vector<AdmissibleSubset> enumerate_maximal(int n)
{
    std::map<std::uint64_t, std::uint64_t> box_union;
    for (const auto& s : enumerate_admissible(n)) box_union[s.otimes().bits()] |= s.boxes().bits();

    std::vector<AdmissibleSubset> out;
    for (auto [ot, box] : box_union) {
        RootSet all(n, ot | box);
        AdmissibleSubset s;
        try {
            s = AdmissibleSubset::build(n, all.roots());
        } catch (const InvalidChoice& e) {
            throw LemmaFailure("union of box parts over otimes set " + to_string(RootSet(n, ot)) +
                               " is not admissible: " + e.what());
        }
        if (s.otimes().bits() != ot)
            throw LemmaFailure("union of box parts changes the otimes set " + to_string(RootSet(n, ot)));
        out.push_back(s);
    }
    std::sort(out.begin(), out.end(), sequence_before);
    return out;
}

AdmissibleSubset regular_subset(int n)
{
    return greedy_complete(AdmissibleSubset::build(n, {Root{n, 1}}));
}

std::optional<AdmissibleSubset> sequence_successor(const AdmissibleSubset& s)
{
    if (s.rank() <= 8 && !is_maximal(s)) throw NotMaximal(to_string(s));
    return successor_unchecked(s);
}

std::vector<AdmissibleSubset> maximal_sequence(int n)
{
    std::vector<AdmissibleSubset> out;
    std::optional<AdmissibleSubset> cur = regular_subset(n);
    while (cur) {
        out.push_back(*cur);
        cur = successor_unchecked(*cur);
    }
    return out;
}

const std::vector<LabeledSubset>& catalog(int n)
{
    check_rank(n);
    static std::mutex mutex;
    static std::map<int, std::vector<LabeledSubset>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<LabeledSubset> out;
    std::map<int, int> serial;
    for (auto& s : maximal_sequence(n)) {
        int k = diagram(s).bullets_in_column(1);
        out.push_back({Label{n, k, ++serial[k]}, std::move(s)});
    }
    return cache.emplace(n, std::move(out)).first->second;
}

bool is_maximal(const AdmissibleSubset& s)
{
    for (const auto& entry : catalog(s.rank()))
        if (entry.subset == s) return true;
    return false;
}

Label label_of(const AdmissibleSubset& s)
{
    for (const auto& entry : catalog(s.rank()))
        if (entry.subset == s) return entry.label;
    throw NotMaximal(to_string(s));
}

const AdmissibleSubset& subset_of(const Label& l)
{
    check_rank(l.n);
    for (const auto& entry : catalog(l.n))
        if (entry.label == l) return entry.subset;
    throw NotMember("no diagram labelled (" + to_string(l) + ")");
}

AdmissibleSubset star_expand(int prefix_columns, const AdmissibleSubset& inner)
{
    if (prefix_columns < 0) throw InvalidInner("negative prefix");
    if (inner.rank() <= 8 && !is_maximal(inner)) throw InvalidInner(to_string(inner) + " is not maximal");
    int n = inner.rank() + prefix_columns;
    check_rank(n);
    std::vector<Root> roots;
    for (int c = 1; c <= prefix_columns; ++c) roots.push_back({c + 1, c});
    for (Root r : inner.roots()) roots.push_back({r.row + prefix_columns, r.col + prefix_columns});
    return AdmissibleSubset::build(n, roots);
}

ColumnChain columns_and_chain(const AdmissibleSubset& s)
{
    int n = s.rank();
    ColumnChain out;
    out.delta.assign(n + 1, RootSet(n));
    out.b.assign(n + 1, RootSet(n));
    for (int t = 1; t <= n; ++t) {
        if (t < n) out.delta[t] = RootSet::column(n, t);
        int before = 0;
        for (Root r : s.roots()) before += r.col < t;
        RootSet right(n);
        for (int j = t; j < n; ++j) right = right | RootSet::column(n, j);
        out.b[t] = s.chain()[before] & right;
    }
    return out;
}

} // namespace coadj
