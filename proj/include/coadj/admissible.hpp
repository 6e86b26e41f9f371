#pragma once

#include "coadj/root_system.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace coadj {

// Admissible subset S = {xi_1 > ... > xi_k}: each xi_t is taken from A_t, where
// A_1 is all positive roots and A_{t+1} = A_t(xi_t).
class AdmissibleSubset {
public:
    AdmissibleSubset() = default;

    // Replays `choices` in order; throws InvalidChoice naming the first bad position.
    static AdmissibleSubset build(int n, const std::vector<Root>& choices);

    int rank() const { return n_; }
    int size() const { return static_cast<int>(roots_.size()); }
    const std::vector<Root>& roots() const { return roots_; }
    bool is_otimes(int position) const { return otimes_[position]; }
    int position(Root r) const; // -1 if r is not in S

    RootSet support() const { return otimes_set_ | box_set_; }
    RootSet otimes() const { return otimes_set_; }
    RootSet boxes() const { return box_set_; }
    // A(S) and M(S) = A(S) minus S.
    RootSet a() const { return chain_.back(); }
    RootSet m() const { return a() - support(); }
    // A_1, ..., A_{k+1}.
    const std::vector<RootSet>& chain() const { return chain_; }

    // Number of +/- cells of the diagram, equal to N - |A(S)|.
    int dimension() const { return num_roots(n_) - a().size(); }

    // Same roots, appended with one more choice.
    AdmissibleSubset extended(Root next) const;

    friend bool operator==(const AdmissibleSubset& a, const AdmissibleSubset& b)
    {
        return a.n_ == b.n_ && a.roots_ == b.roots_;
    }

private:
    int n_ = 0;
    std::vector<Root> roots_;
    std::vector<bool> otimes_;
    RootSet otimes_set_;
    RootSet box_set_;
    std::vector<RootSet> chain_;
};

std::string to_string(const AdmissibleSubset& s);

// Columns Delta^(t) and the chain B_1 > ... > B_n = empty, indexed from t = 1 (entry 0 unused).
struct ColumnChain {
    std::vector<RootSet> delta;
    std::vector<RootSet> b;
};
ColumnChain columns_and_chain(const AdmissibleSubset& s);

enum class Cell { Empty, Otimes, Box, Bullet, Plus, Minus };

// n x n symbol grid; cell(i, j) with 1-based indices.
class Diagram {
public:
    explicit Diagram(int n) : n_(n), cells_(n * n, Cell::Empty) {}

    int rank() const { return n_; }
    Cell cell(int row, int col) const { return cells_[(row - 1) * n_ + (col - 1)]; }
    Cell& cell(int row, int col) { return cells_[(row - 1) * n_ + (col - 1)]; }
    Cell at(Root r) const { return cell(r.row, r.col); }

    // Rows of the ASCII grid: X otimes, B box, . bullet, + and -, space for empty.
    std::vector<std::string> grid() const;
    std::string ascii() const;
    int count(Cell c) const;
    int bullets_in_column(int col) const;

    friend bool operator==(const Diagram&, const Diagram&) = default;

private:
    int n_;
    std::vector<Cell> cells_;
};

char symbol(Cell c);
const char* kind_name(Cell c);

// Snapshot after each root of S is placed (the last one before leftover cells are filled).
std::vector<Diagram> diagram_stages(const AdmissibleSubset& s);
Diagram diagram(const AdmissibleSubset& s);

// Label (n, k, m): k bullets in the first column, m the serial number inside (n, k).
struct Label {
    int n = 0;
    int k = 0;
    int m = 0;
    friend bool operator==(const Label&, const Label&) = default;
    friend auto operator<=>(const Label&, const Label&) = default;
};

std::string to_string(const Label& l);
Label parse_label(const std::string& text);

struct LabeledSubset {
    Label label;
    AdmissibleSubset subset;
};

// Every admissible subset of Delta^+_n in DFS order.
std::vector<AdmissibleSubset> enumerate_admissible(int n);

// Maximal admissible subsets by grouping all admissible subsets on their S_otimes part and
// taking the union of S_box parts. Throws LemmaFailure if that union is not admissible.
// Sorted by the order of `maximal_sequence`.
std::vector<AdmissibleSubset> enumerate_maximal(int n);

AdmissibleSubset regular_subset(int n);
// Next maximal subset in the sequence rule; empty after the last one.
std::optional<AdmissibleSubset> sequence_successor(const AdmissibleSubset& s);
std::vector<AdmissibleSubset> maximal_sequence(int n);

// Sequence order with labels; cached per n.
const std::vector<LabeledSubset>& catalog(int n);
bool is_maximal(const AdmissibleSubset& s);
Label label_of(const AdmissibleSubset& s);
const AdmissibleSubset& subset_of(const Label& l);

// Subset whose first `prefix_columns` columns carry a box on the subdiagonal and bullets
// below it, followed by `inner` shifted into the lower-right block.
AdmissibleSubset star_expand(int prefix_columns, const AdmissibleSubset& inner);

} // namespace coadj
