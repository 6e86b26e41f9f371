#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace coadj {

// Largest n for which a root set fits in one 64-bit mask.
inline constexpr int kMaxRank = 11;

// Positive root in row `row`, column `col` (row > col); stands for eps_col - eps_row.
struct Root {
    int row = 0;
    int col = 0;

    friend bool operator==(const Root&, const Root&) = default;
    // Lex order: a smaller column is larger; within a column a lower row is larger.
    friend std::strong_ordering operator<=>(const Root& a, const Root& b)
    {
        if (a.col != b.col) return b.col <=> a.col;
        return a.row <=> b.row;
    }
};

void check_rank(int n);
int num_roots(int n);
bool is_root(int n, Root r);

// Position of r in the descending lex enumeration (n,1), (n-1,1), ..., (n,n-1).
int root_index(int n, Root r);
Root root_at(int n, int index);

// All positive roots, lex-descending.
std::vector<Root> positive_roots(int n);

inline bool lex_greater(Root a, Root b) { return a > b; }

// a + b if it is a root.
std::optional<Root> root_sum(Root a, Root b);
// a - b if it is a root.
std::optional<Root> root_difference(Root a, Root b);

std::string to_string(Root r);
Root parse_root(const std::string& text);

// Set of positive roots of a fixed rank, stored as a bit mask over root_index.
class RootSet {
public:
    RootSet() = default;
    explicit RootSet(int n) : n_(n) {}
    RootSet(int n, std::uint64_t bits) : n_(n), bits_(bits) {}

    static RootSet all(int n);
    static RootSet column(int n, int col);
    static RootSet from(int n, const std::vector<Root>& roots);

    int rank() const { return n_; }
    std::uint64_t bits() const { return bits_; }
    bool empty() const { return bits_ == 0; }
    int size() const { return std::popcount(bits_); }

    bool contains(Root r) const;
    void insert(Root r);
    void erase(Root r);

    // Lex-descending.
    std::vector<Root> roots() const;
    std::optional<Root> max() const;
    // Largest element strictly below `bound`.
    std::optional<Root> max_below(Root bound) const;

    RootSet operator|(const RootSet& o) const { return {n_, bits_ | o.bits_}; }
    RootSet operator&(const RootSet& o) const { return {n_, bits_ & o.bits_}; }
    RootSet operator-(const RootSet& o) const { return {n_, bits_ & ~o.bits_}; }
    bool operator==(const RootSet& o) const = default;
    bool subset_of(const RootSet& o) const { return (bits_ & ~o.bits_) == 0; }

private:
    int n_ = 0;
    std::uint64_t bits_ = 0;
};

// Pairs (gamma, xi - gamma) with gamma = (a, xi.col), xi - gamma = (xi.row, a), both in A,
// ordered by increasing a.
std::vector<std::pair<Root, Root>> c_pairs(Root xi, const RootSet& a);
// C(xi, A) as a set, and its two halves: C_+ holds the member of each pair that is lex-larger.
RootSet c_set(Root xi, const RootSet& a);
RootSet c_plus(Root xi, const RootSet& a);
RootSet c_minus(Root xi, const RootSet& a);
// (C_+, C_-); throws NotMember if xi is not in A.
std::pair<RootSet, RootSet> c_split(Root xi, const RootSet& a);
// A(xi) = A minus C(xi, A); throws NotMember if xi is not in A.
RootSet shrink(Root xi, const RootSet& a);

bool is_additive(const RootSet& a);
// Throws NotSubset unless M is contained in A.
bool is_normal(const RootSet& m, const RootSet& a);

std::string to_string(const RootSet& s);

} // namespace coadj
