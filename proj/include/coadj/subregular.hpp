#pragma once

#include "coadj/char_matrix.hpp"
#include "coadj/orbit.hpp"
#include "coadj/polynomial.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace coadj {

// Generators P_j - c_j, 1 <= j <= n0. Throws InvalidC if a c_j with j <= n_otimes is zero.
std::vector<QPoly> regular_ideal(int n, const std::vector<Rational>& constants);

inline int subregular_dimension(int n) { return num_roots(n) - n_zero(n) - 2; }

struct SubregularGenerator {
    std::string name;        // "P_1", "P'_2", "Z_1", ...
    std::string constant;    // "c_1", "c'", ...; empty when the generator is the bare minor
    QPoly poly;
    std::uint32_t value = 0; // constant on the orbit (0 for bare minors)
    bool nonzero = false;    // the constant is required to lie in K^*
};

struct SubregularRecord {
    std::string kind; // "1", "2", "3a", "3b"
    int j0 = 0;       // case 1 only
    std::vector<SubregularGenerator> generators;
    bool constant_on_orbit = false;
    bool cuts_orbit = false;      // common level set equals the orbit
    bool constraints_ok = false;  // required constants are nonzero
    bool ok() const { return constant_on_orbit && cuts_orbit && constraints_ok; }
};

// Tabulates the minors of the subregular theorem on all p^N forms.
class SubregularAnalyzer {
public:
    SubregularAnalyzer(int n, std::uint32_t p);

    const FormSpace& space() const { return space_; }
    // Decides the case from the values on the orbit and checks the chosen system. For even n
    // the a) system is tried first, then b). Throws NotSubregular on a wrong orbit dimension.
    SubregularRecord analyze(const std::vector<std::uint64_t>& orbit) const;

private:
    struct Entry {
        std::string name;
        QPoly poly;
        std::vector<std::uint8_t> values;
    };
    int add(const std::string& name, const QPoly& poly);
    SubregularRecord check(std::string kind, int j0, std::vector<std::pair<int, std::string>> spec,
                           const std::vector<std::string>& nonzero, const std::vector<std::uint64_t>& orbit) const;

    int n_;
    FormSpace space_;
    std::vector<Entry> entries_;
    std::vector<int> p_, p1_, p2_, z_;
    int p_n0_prime_ = -1;
};

SubregularRecord subregular_classify(const LinearForm<Fp>& f);

std::string to_string(const SubregularRecord& r);

} // namespace coadj
