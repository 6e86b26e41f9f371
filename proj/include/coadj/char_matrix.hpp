#pragma once

#include "coadj/admissible.hpp"
#include "coadj/polynomial.hpp"

#include <vector>

namespace coadj {

// Polynomial in tau with coefficients in S(g); coefficient(k) is the tau^k part.
class TauPolynomial {
public:
    TauPolynomial() = default;
    explicit TauPolynomial(std::vector<QPoly> coefficients);

    const QPoly& coefficient(int k) const;
    int max_degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    // Least / leading degree with a nonzero coefficient; -1 for zero.
    int least_degree() const;
    int leading_degree() const { return max_degree(); }

    TauPolynomial& operator+=(const TauPolynomial& o);
    friend TauPolynomial operator+(TauPolynomial a, const TauPolynomial& b) { return a += b; }
    friend TauPolynomial operator-(const TauPolynomial& a);
    friend TauPolynomial operator*(const TauPolynomial& a, const TauPolynomial& b);
    friend bool operator==(const TauPolynomial&, const TauPolynomial&) = default;

private:
    void trim();
    std::vector<QPoly> c_;
};

struct MinorSpec {
    std::vector<int> rows; // increasing, 1-based
    std::vector<int> cols; // increasing, 1-based
};

// Entry (i, j) of Phi(tau) = tau Phi + E: 1 on the diagonal, tau y_ij below, 0 above.
TauPolynomial phi_tau_entry(int i, int j);
// Minor of Phi(tau).
TauPolynomial minor(int n, const MinorSpec& spec);
// Minor of Phi (zero diagonal).
QPoly phi_minor(int n, const MinorSpec& spec);

struct WEta {
    Root eta;
    std::vector<Root> word;  // beta_1, ..., beta_t, eta
    std::vector<int> perm;   // perm[x - 1] = w(x)
    std::vector<int> rows;   // sorted w(1..j), j = eta.col
};

WEta w_eta(const AdmissibleSubset& s, Root eta);

struct HSubset {
    std::vector<Root> h;
    int degree = 0; // |H| + 1
};

HSubset h_subset(const AdmissibleSubset& s, Root eta);

struct CharGenerator {
    Root eta;
    MinorSpec spec;
    int h = 0; // tau degree taken
    int q = 0; // least degree |Lambda \ w Lambda|
    int d = 0; // leading degree #{m : i_m > m}
    TauPolynomial minor;
    QPoly p;   // P_{h, eta}
};

CharGenerator p_h_eta(const AdmissibleSubset& s, Root eta);
// One generator per eta in A(S), lex-descending.
std::vector<CharGenerator> char_system(const AdmissibleSubset& s);

// Subregular-section minors of Phi.
int n_zero(int n);    // floor(n / 2)
int n_otimes(int n);  // floor((n - 1) / 2)
QPoly regular_minor(int n, int j);          // P_j, 1 <= j <= n - 1 (as Phi minor)
std::vector<QPoly> regular_minors(int n);   // P_1..P_{n0}
QPoly bordered_prime(int n, int j);         // P'_j
QPoly bordered_double_prime(int n, int j);  // P''_j
QPoly p_n0_prime(int n);                    // even n only
QPoly z_coefficient(int n, int k);          // Z_k, 1 <= k <= n_otimes
std::vector<QPoly> z_coefficients(int n);

} // namespace coadj
