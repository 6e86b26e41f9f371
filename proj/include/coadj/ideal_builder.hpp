#pragma once

#include "coadj/admissible.hpp"
#include "coadj/poisson.hpp"

#include <map>
#include <string>
#include <vector>

namespace coadj {

// Values c on S (aligned with S.roots()); constants or parameter polynomials.
struct CValues {
    std::vector<QPoly> values;
    VarMask invertible = 0; // parameters known to be nonzero
};

// c_k = parameter k for the k-th root of S; parameters on otimes roots are invertible.
CValues symbolic_values(const AdmissibleSubset& s);
CValues numeric_values(const AdmissibleSubset& s, const std::vector<Rational>& c);
// c extended to A(S) by zero on M(S).
QPoly c_of(const AdmissibleSubset& s, const CValues& c, Root r);

enum class ColumnCase {
    Split = 1,       // one otimes, boxes only below it
    Exceptional = 2, // one otimes with a box above it (two known shapes)
    Plain = 3        // no otimes
};

struct CanonicalPair {
    QPoly p;
    QPoly q;
};

struct ColumnReduction {
    int column = 0;
    ColumnCase kind = ColumnCase::Plain;
    std::string shape;            // exceptional shape, e.g. "7,3,4"
    RootSet b;                    // B_t
    RootSet b_next;               // B_{t+1}
    std::vector<Root> a_roots;    // A(S) in column t, lex-descending
    std::vector<CanonicalPair> pairs;
    // theta_t(y_eta) for eta in B_{t+1}, in variables of B_t, reduced modulo I_t.
    std::map<Root, QPoly> theta;
};

// B_t: roots of A_{m(t)} in columns >= t, where m(t) - 1 roots of S lie left of column t.
RootSet column_block(const AdmissibleSubset& s, int t);

ColumnReduction reduce_column(const AdmissibleSubset& s, int t, const CValues& c);

struct BuiltIdeal {
    std::vector<Root> roots;   // A(S), lex-descending
    std::vector<QPoly> q;      // Q_eta, aligned with roots
    Ideal<Rational> ideal;     // generated by Q_eta - c(eta)
    std::vector<ColumnReduction> columns;
};

BuiltIdeal build_ideal(const AdmissibleSubset& s, const CValues& c);

// Q(f_{S,c}) - c for each generator; all zero when the construction is consistent.
std::vector<QPoly> generator_residues_at_canonical(const AdmissibleSubset& s, const CValues& c, const BuiltIdeal& b);

} // namespace coadj
