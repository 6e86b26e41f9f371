#pragma once

#include "coadj/admissible.hpp"
#include "coadj/linear_form.hpp"
#include "coadj/polynomial.hpp"

#include <cstdint>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace coadj {

// f_{S,c}: c on S, zero elsewhere (in particular on M(S)). Throws InvalidC.
template <class S>
LinearForm<S> canonical_form(const AdmissibleSubset& s, const std::vector<S>& c, const S& zero)
{
    if (static_cast<int>(c.size()) != s.size())
        throw InvalidC("expected " + std::to_string(s.size()) + " values, got " + std::to_string(c.size()));
    LinearForm<S> f(s.rank(), zero);
    for (int k = 0; k < s.size(); ++k) {
        if (s.is_otimes(k) && is_zero(c[k])) throw InvalidC("zero value on otimes root " + to_string(s.roots()[k]));
        f.set(s.roots()[k], c[k] + zero);
    }
    return f;
}

// Number of leading zeros of the first column, read from y_{n1} upward; n - 1 if all vanish.
template <class S>
int stratum(const LinearForm<S>& f)
{
    int n = f.rank();
    int i = 0;
    while (i < n - 1 && is_zero(f.value(Root{n - i, 1}))) ++i;
    return i;
}

// Throws InvalidPrime unless p is a prime below 2^16.
void check_prime(std::uint32_t p);

// Maximum number of F_p points a flat table may hold; COADJ_STATE_BUDGET overrides the default 2^26.
std::uint64_t state_budget();
// Overrides the budget for this process; 0 restores the environment/default value.
void set_state_budget(std::uint64_t states);

// All forms over F_p for fixed n, packed as integers with one base-p digit per root (root_index order).
class FormSpace {
public:
    FormSpace(int n, std::uint32_t p);

    int rank() const { return n_; }
    std::uint32_t modulus() const { return p_; }
    int num_roots() const { return count_; }
    // p^N, or 0 if it does not fit in 64 bits.
    std::uint64_t size() const { return size_; }

    std::uint64_t encode(const LinearForm<Fp>& f) const;
    LinearForm<Fp> decode(std::uint64_t state) const;
    std::vector<std::uint32_t> digits(std::uint64_t state) const;
    std::uint64_t pack(const std::vector<std::uint32_t>& digits) const;
    std::uint32_t digit(std::uint64_t state, int index) const;

    // Action of I + E_r for the generator with root index `gen`.
    std::uint64_t apply(int gen, std::uint64_t state) const;

private:
    struct Update {
        int target;
        int source;
        int sign;
    };
    int n_;
    std::uint32_t p_;
    int count_;
    std::uint64_t size_;
    std::vector<std::uint64_t> power_;
    std::vector<std::vector<Update>> updates_;
    // p = 2: per generator, per byte of the state, the xor mask produced by that byte.
    std::vector<std::vector<std::array<std::uint64_t, 256>>> xor_tables_;
};

// Closure of {state} under the generators; sorted. Throws BudgetExceeded past `budget` states.
std::vector<std::uint64_t> orbit_bfs(const FormSpace& space, std::uint64_t start, std::uint64_t budget);
std::vector<LinearForm<Fp>> orbit_bfs(const LinearForm<Fp>& f, std::uint64_t budget = 0);

// A maximal pair over F_p, with c aligned to S.roots().
struct FpPair {
    int subset = -1; // index into catalog(n)
    std::vector<std::uint32_t> c;
    std::uint64_t state = 0;
};

const AdmissibleSubset& pair_subset(int n, const FpPair& pair);

// Every canonical form f_{S,c} over F_p, catalog order, c in lexicographic order.
std::vector<FpPair> canonical_pairs(const FormSpace& space);

// Evaluates integer-coefficient polynomials in root variables on packed states.
class CompiledPoly {
public:
    CompiledPoly(const QPoly& p, const FormSpace& space);
    std::uint32_t evaluate(const std::vector<std::uint32_t>& digits) const;

private:
    struct Term {
        std::uint32_t coefficient;
        std::vector<std::pair<int, int>> factors; // (root index, exponent)
    };
    std::uint32_t p_;
    std::vector<Term> terms_;
};

struct ClassifyResult {
    FpPair pair;
    Label label;
    int dimension = 0;
    std::uint64_t orbit_size = 0;
};

// Looks up canonical members of BFS orbits.
class Classifier {
public:
    explicit Classifier(const FormSpace& space);
    const FormSpace& space() const { return space_; }
    // The pair (S, c) if the state is a canonical form f_{S,c}: zero off S, nonzero on S_otimes.
    std::optional<FpPair> as_canonical(std::uint64_t state) const;
    // Throws ClassificationMismatch if the orbit has no or several canonical members, or if a
    // minor generator P_{h,eta} of S differs between f and the canonical member.
    ClassifyResult classify(std::uint64_t state, std::uint64_t budget = 0) const;

private:
    const FormSpace& space_;
};

ClassifyResult classify(const LinearForm<Fp>& f);

// One BFS orbit handed to a census observer.
struct OrbitView {
    const std::vector<std::uint64_t>* states;
    int pair = -1; // catalog index of the canonical member, -1 if none or several
    int canonical_members = 0;
};

struct CensusRow {
    Label label;
    int dimension = 0;
    std::uint64_t observed = 0;
    std::uint64_t expected = 0;
};

struct CensusReport {
    int n = 0;
    std::uint32_t p = 0;
    std::uint64_t orbits = 0;
    std::vector<CensusRow> rows;                                     // catalog order
    std::map<int, std::pair<std::uint64_t, std::uint64_t>> per_dim; // dim -> (observed, expected)
    bool point_sum_ok = false;  // sum over orbits of p^dim equals p^N
    bool partition_ok = false;  // each orbit holds exactly one canonical form and has size p^dim
    bool counts_ok = false;     // per-dimension counts equal the formula
    std::string first_failure;
    bool ok() const { return point_sum_ok && partition_ok && counts_ok; }
};

// Expected orbit count of a diagram: (p-1)^{|S_otimes|} p^{|S_box|}.
std::uint64_t expected_orbits(const AdmissibleSubset& s, std::uint32_t p);

using OrbitObserver = std::function<void(const OrbitView&)>;

// Exhaustive BFS over all p^N forms. Throws BudgetExceeded when p^N exceeds the budget.
CensusReport census(int n, std::uint32_t p, const OrbitObserver& observer = {});

// Predicted maximum orbit dimension per stratum, N - n0 - 2 min(i, n_otimes), and the exhaustive one.
std::vector<int> predicted_stratum_dims(int n);
std::vector<int> stratum_max_dims(int n, std::uint32_t p);

} // namespace coadj
