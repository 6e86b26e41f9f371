#include "coadj/subregular.hpp"

#include "coadj/char_matrix.hpp"
#include "coadj/error.hpp"

#include <algorithm>
#include <sstream>

namespace coadj {

std::vector<QPoly> regular_ideal(int n, const std::vector<Rational>& constants)
{
    check_rank(n);
    int n0 = n_zero(n);
    if (static_cast<int>(constants.size()) != n0)
        throw InvalidC("expected " + std::to_string(n0) + " constants, got " + std::to_string(constants.size()));
    std::vector<QPoly> out;
    for (int j = 1; j <= n0; ++j) {
        if (j <= n_otimes(n) && constants[j - 1].is_zero()) throw InvalidC("c_" + std::to_string(j) + " must be nonzero");
        out.push_back(regular_minor(n, j) - QPoly(constants[j - 1]));
    }
    return out;
}

SubregularAnalyzer::SubregularAnalyzer(int n, std::uint32_t p) : n_(n), space_(n, p)
{
    if (space_.size() > state_budget()) throw BudgetExceeded(0, "p^N exceeds budget");
    int n0 = n_zero(n), nx = n_otimes(n);
    p_.push_back(-1);
    p1_.push_back(-1);
    p2_.push_back(-1);
    z_.push_back(-1);
    for (int j = 1; j <= n0; ++j) p_.push_back(add("P_" + std::to_string(j), regular_minor(n, j)));
    for (int j = 1; j <= nx; ++j) {
        p1_.push_back(add("P'_" + std::to_string(j), bordered_prime(n, j)));
        p2_.push_back(add("P''_" + std::to_string(j), bordered_double_prime(n, j)));
        z_.push_back(add("Z_" + std::to_string(j), z_coefficient(n, j)));
    }
    if (n % 2 == 0 && n >= 4) p_n0_prime_ = add("P'_" + std::to_string(n0), p_n0_prime(n));
}

int SubregularAnalyzer::add(const std::string& name, const QPoly& poly)
{
    CompiledPoly c(poly, space_);
    Entry e{name, poly, std::vector<std::uint8_t>(space_.size())};
    for (std::uint64_t s = 0; s < space_.size(); ++s) e.values[s] = static_cast<std::uint8_t>(c.evaluate(space_.digits(s)));
    entries_.push_back(std::move(e));
    return static_cast<int>(entries_.size()) - 1;
}

SubregularRecord SubregularAnalyzer::check(std::string kind, int j0, std::vector<std::pair<int, std::string>> spec,
                                           const std::vector<std::string>& nonzero,
                                           const std::vector<std::uint64_t>& orbit) const
{
    SubregularRecord r;
    r.kind = std::move(kind);
    r.j0 = j0;
    r.constant_on_orbit = true;
    r.constraints_ok = true;
    for (auto& [idx, constant] : spec) {
        const Entry& e = entries_[idx];
        SubregularGenerator g{e.name, constant, e.poly, e.values[orbit.front()], false};
        for (std::uint64_t s : orbit)
            if (e.values[s] != g.value) r.constant_on_orbit = false;
        if (constant.empty() && g.value != 0) r.constant_on_orbit = false;
        g.nonzero = std::find(nonzero.begin(), nonzero.end(), constant) != nonzero.end();
        if (g.nonzero && g.value == 0) r.constraints_ok = false;
        r.generators.push_back(std::move(g));
    }
    if (r.constant_on_orbit) {
        std::uint64_t level = 0;
        for (std::uint64_t s = 0; s < space_.size(); ++s) {
            bool in = true;
            for (const auto& [idx, constant] : spec)
                if (entries_[idx].values[s] != entries_[idx].values[orbit.front()]) {
                    in = false;
                    break;
                }
            level += in;
        }
        r.cuts_orbit = level == orbit.size();
    }
    return r;
}

SubregularRecord SubregularAnalyzer::analyze(const std::vector<std::uint64_t>& orbit) const
{
    int n = n_, n0 = n_zero(n), nx = n_otimes(n);
    std::uint64_t expected = 1;
    int dim = subregular_dimension(n);
    if (dim < 0) throw NotSubregular("no subregular orbits for n = " + std::to_string(n));
    for (int k = 0; k < dim; ++k) expected *= space_.modulus();
    if (orbit.size() != expected)
        throw NotSubregular("orbit of size " + std::to_string(orbit.size()) + ", expected " + std::to_string(expected));

    auto value = [&](int idx) { return entries_[idx].values[orbit.front()]; };
    auto c = [](int i) { return "c_" + std::to_string(i); };
    std::vector<std::pair<int, std::string>> spec;
    std::vector<std::string> nonzero;

    if (nx >= 1 && value(p_[nx]) != 0) {
        int j0 = 1;
        while (j0 <= n0 && value(p_[j0]) != 0) ++j0;
        if (j0 >= nx) throw NotSubregular("all P_j with j < n_otimes are nonzero on the orbit");
        for (int i = 1; i <= n0; ++i) {
            if (i == j0 || i == j0 + 1) continue;
            spec.emplace_back(p_[i], c(i));
            if (i < n0 || n % 2 == 1) nonzero.push_back(c(i));
        }
        spec.emplace_back(p1_[j0], "c'");
        spec.emplace_back(p2_[j0], "c''");
        spec.emplace_back(p_[j0], "");
        spec.emplace_back(z_[j0], "c");
        nonzero.push_back("c'");
        nonzero.push_back("c''");
        return check("1", j0, spec, nonzero, orbit);
    }
    for (int i = 1; i < nx; ++i) {
        spec.emplace_back(p_[i], c(i));
        nonzero.push_back(c(i));
    }
    if (n % 2 == 1) {
        spec.emplace_back(p1_[nx], "c'");
        spec.emplace_back(p2_[nx], "c''");
        spec.emplace_back(p_[nx], "");
        return check("2", 0, spec, nonzero, orbit);
    }
    auto a = spec, b = spec;
    a.emplace_back(p1_[nx], "c'");
    a.emplace_back(p2_[nx], "c''");
    a.emplace_back(p_[nx], "");
    a.emplace_back(z_[nx], "c");
    b.emplace_back(p_[nx], "");
    b.emplace_back(p1_[nx], "");
    b.emplace_back(p_n0_prime_, "c''");
    b.emplace_back(p2_[nx], "c'");
    nonzero.push_back("c'");
    SubregularRecord ra = check("3a", 0, a, nonzero, orbit);
    if (ra.ok()) return ra;
    SubregularRecord rb = check("3b", 0, b, nonzero, orbit);
    return rb.ok() ? rb : ra;
}

SubregularRecord subregular_classify(const LinearForm<Fp>& f)
{
    std::uint32_t p = f.value(Root{f.rank(), 1}).modulus();
    if (!p) throw FieldMismatch("form has no modulus");
    SubregularAnalyzer analyzer(f.rank(), p);
    const FormSpace& space = analyzer.space();
    return analyzer.analyze(orbit_bfs(space, space.encode(f), 0));
}

std::string to_string(const SubregularRecord& r)
{
    std::ostringstream os;
    os << "case " << r.kind;
    if (r.kind == "1") os << " j0=" << r.j0;
    os << ":";
    for (const auto& g : r.generators) {
        os << " " << g.name;
        if (!g.constant.empty()) os << "-" << g.constant << "(=" << g.value << ")";
        os << ";";
    }
    return os.str();
}

} // namespace coadj
