#include "coadj/cli.hpp"

#include "coadj/admissible.hpp"
#include "coadj/char_matrix.hpp"
#include "coadj/error.hpp"
#include "coadj/ideal_builder.hpp"
#include "coadj/orbit.hpp"
#include "coadj/polarization.hpp"
#include "coadj/subregular.hpp"

#include <json.hpp>

#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace coadj::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string rstrip(std::string s)
{
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

Rational parse_rational(const std::string& text)
{
    try {
        mpq_class q(text);
        if (q.get_den() == 0) throw UsageError("zero denominator in '" + text + "'");
        q.canonicalize();
        return Rational(q);
    } catch (const std::invalid_argument&) {
        throw UsageError("not a rational number: '" + text + "'");
    }
}

std::vector<Rational> parse_values(const std::string& text)
{
    std::vector<Rational> out;
    for (const auto& item : split(text, ',')) out.push_back(parse_rational(item));
    return out;
}

Json label_json(const Label& l) { return Json::array({l.n, l.k, l.m}); }

Json root_json(Root r) { return Json{{"row", r.row}, {"col", r.col}}; }

void require_n(const RunConfig& cfg)
{
    if (cfg.n < 2 || cfg.n > kMaxRank) throw UsageError("--n must lie in 2.." + std::to_string(kMaxRank));
}

std::uint32_t require_p(const RunConfig& cfg, std::uint32_t fallback = 0)
{
    std::uint32_t p = cfg.p.value_or(fallback);
    if (!p) throw UsageError("--p is required");
    check_prime(p);
    return p;
}

const LabeledSubset& require_diagram(const RunConfig& cfg)
{
    if (cfg.diagram.empty()) throw UsageError("--diagram is required");
    Label l = parse_label(cfg.diagram);
    if (cfg.n && cfg.n != l.n) throw UsageError("--n disagrees with --diagram");
    if (l.n < 2 || l.n > 8) throw UsageError("diagram rank out of range");
    for (const auto& e : catalog(l.n))
        if (e.label == l) return e;
    throw UsageError("no maximal diagram " + to_string(l));
}

// ---- diagrams

Json diagram_json(const AdmissibleSubset& s, const std::optional<Label>& label)
{
    Json j;
    j["n"] = s.rank();
    j["label"] = label ? label_json(*label) : Json(nullptr);
    Json roots = Json::array();
    for (int k = 0; k < s.size(); ++k) {
        Json r = root_json(s.roots()[k]);
        r["kind"] = s.is_otimes(k) ? "otimes" : "box";
        roots.push_back(r);
    }
    j["roots"] = roots;
    j["grid"] = diagram(s).grid();
    return j;
}

RunResult cmd_diagrams(const RunConfig& cfg)
{
    require_n(cfg);
    std::string format = cfg.format.empty() ? "ascii" : cfg.format;
    if (format != "ascii" && format != "json") throw UsageError("--format must be ascii or json");
    if (cfg.maximal_only && cfg.all_admissible) throw UsageError("--maximal-only and --all exclude each other");
    const bool maximal = !cfg.all_admissible;
    std::vector<std::pair<AdmissibleSubset, std::optional<Label>>> items;
    if (maximal) {
        for (const auto& e : catalog(cfg.n)) items.emplace_back(e.subset, e.label);
    } else {
        for (const auto& s : enumerate_admissible(cfg.n))
            items.emplace_back(s, is_maximal(s) ? std::optional<Label>(label_of(s)) : std::nullopt);
    }
    RunResult r;
    if (format == "json") {
        Json j;
        j["n"] = cfg.n;
        j["maximal_only"] = maximal;
        j["count"] = items.size();
        Json list = Json::array();
        for (const auto& [s, l] : items) list.push_back(diagram_json(s, l));
        j["diagrams"] = list;
        r.output = j.dump(2) + "\n";
        return r;
    }
    std::ostringstream os;
    os << "n=" << cfg.n << " " << (maximal ? "maximal" : "admissible") << " diagrams: " << items.size() << "\n";
    for (const auto& [s, l] : items) {
        os << "\n" << (l ? "(" + to_string(*l) + ")" : std::string("-")) << "  dim " << s.dimension() << "  S = "
           << (s.size() ? to_string(s) : std::string("{}")) << "\n";
        auto grid = diagram(s).grid();
        for (std::size_t row = 1; row < grid.size(); ++row) os << rstrip(grid[row]) << "\n";
    }
    r.output = os.str();
    return r;
}

// ---- generators

RunResult cmd_generators(const RunConfig& cfg)
{
    const LabeledSubset& e = require_diagram(cfg);
    const AdmissibleSubset& s = e.subset;
    std::string format = cfg.format.empty() ? "text" : cfg.format;
    if (format != "text" && format != "json") throw UsageError("--format must be text or json");
    CValues c = cfg.c.empty() ? symbolic_values(s) : numeric_values(s, parse_values(cfg.c));
    BuiltIdeal built = build_ideal(s, c);
    auto system = char_system(s);
    RootSet pol = polarization(s);

    Json j;
    j["label"] = label_json(e.label);
    j["dim"] = s.dimension();
    Json cj = Json::array();
    for (int k = 0; k < s.size(); ++k) cj.push_back({{"root", to_string(s.roots()[k])}, {"c", c.values[k].str()}});
    j["c"] = cj;
    Json ideal = Json::array();
    for (std::size_t k = 0; k < built.roots.size(); ++k)
        ideal.push_back({{"eta", to_string(built.roots[k])},
                         {"q", built.q[k].str()},
                         {"value", c_of(s, c, built.roots[k]).str()}});
    j["ideal"] = ideal;
    Json minors = Json::array();
    for (const auto& g : system)
        minors.push_back({{"eta", to_string(g.eta)}, {"h", g.h}, {"p", g.p.str()}});
    j["minors"] = minors;
    Json pj = Json::array();
    for (Root r : pol.roots()) pj.push_back(to_string(r));
    j["polarization"] = pj;

    RunResult r;
    if (format == "json") {
        r.output = j.dump(2) + "\n";
        return r;
    }
    std::ostringstream os;
    os << "diagram (" << to_string(e.label) << ")  dim " << s.dimension() << "\n";
    os << "S: " << to_string(s) << "\n";
    for (const auto& x : cj) os << "  c(" << x["root"].get<std::string>() << ") = " << x["c"].get<std::string>() << "\n";
    os << "ideal generators, Q_eta = c(eta) (zero when omitted):\n";
    for (const auto& x : ideal) {
        os << "  " << x["eta"].get<std::string>() << ": " << x["q"].get<std::string>();
        std::string v = x["value"];
        if (v != "0") os << " = " << v;
        os << "\n";
    }
    os << "minor generators P_{h,eta}:\n";
    for (const auto& x : minors)
        os << "  " << x["eta"].get<std::string>() << " h=" << x["h"].get<int>() << ": " << x["p"].get<std::string>() << "\n";
    os << "polarization:";
    for (Root rt : pol.roots()) os << " (" << to_string(rt) << ")";
    os << "\n";
    r.output = os.str();
    return r;
}

// ---- census

Json census_json(const CensusReport& rep, bool per_dimension)
{
    Json j;
    j["n"] = rep.n;
    j["p"] = rep.p;
    j["total"] = rep.orbits;
    Json orbits = Json::array();
    for (const auto& row : rep.rows)
        orbits.push_back({{"label", label_json(row.label)},
                          {"dim", row.dimension},
                          {"count", row.observed},
                          {"expected", row.expected}});
    j["orbits"] = orbits;
    if (per_dimension) {
        Json dims = Json::array();
        for (auto it = rep.per_dim.rbegin(); it != rep.per_dim.rend(); ++it)
            dims.push_back({{"dim", it->first}, {"count", it->second.first}, {"expected", it->second.second}});
        j["per_dimension"] = dims;
    }
    j["identities"] = {{"point_sum_ok", rep.point_sum_ok},
                       {"counts_ok", rep.counts_ok},
                       {"partition_ok", rep.partition_ok}};
    if (!rep.ok()) j["first_failure"] = rep.first_failure;
    return j;
}

RunResult cmd_census(const RunConfig& cfg)
{
    require_n(cfg);
    std::uint32_t p = require_p(cfg);
    CensusReport rep = census(cfg.n, p);
    RunResult r;
    r.output = census_json(rep, cfg.per_dimension).dump(2) + "\n";
    r.status = rep.ok() ? kOk : kVerifyFailed;
    if (!rep.ok()) r.error = rep.first_failure;
    return r;
}

// ---- classify / canonical

LinearForm<Fp> parse_form(int n, std::uint32_t p, const std::string& text)
{
    LinearForm<Fp> f(n, Fp(0, p));
    for (const auto& item : split(text, ';')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("form entry '" + item + "' lacks '='");
        Root r = parse_root(item.substr(0, eq));
        if (!is_root(n, r)) throw UsageError("(" + item.substr(0, eq) + ") is not a root for n = " + std::to_string(n));
        Rational v = parse_rational(item.substr(eq + 1));
        f.set(r, to_fp(v, p));
    }
    return f;
}

RunResult cmd_classify(const RunConfig& cfg)
{
    require_n(cfg);
    std::uint32_t p = require_p(cfg);
    LinearForm<Fp> f = parse_form(cfg.n, p, cfg.form);
    FormSpace space(cfg.n, p);
    ClassifyResult res = Classifier(space).classify(space.encode(f));
    const AdmissibleSubset& s = pair_subset(cfg.n, res.pair);

    Json j;
    j["n"] = cfg.n;
    j["p"] = p;
    Json fj = Json::array();
    for (Root rt : positive_roots(cfg.n))
        if (!is_zero(f.value(rt))) fj.push_back({{"root", to_string(rt)}, {"value", f.value(rt).value()}});
    j["form"] = fj;
    j["label"] = label_json(res.label);
    j["dim"] = res.dimension;
    Json cj = Json::array();
    for (int k = 0; k < s.size(); ++k)
        cj.push_back({{"root", to_string(s.roots()[k])}, {"kind", s.is_otimes(k) ? "otimes" : "box"}, {"c", res.pair.c[k]}});
    j["c"] = cj;
    j["orbit_size"] = res.orbit_size;
    j["stratum"] = stratum(f);
    int sub = subregular_dimension(cfg.n);
    if (sub >= 0 && res.dimension == sub && space.size() <= state_budget()) {
        SubregularRecord rec = subregular_classify(f);
        j["subregular"] = {{"case", rec.kind}, {"system", to_string(rec)}, {"ok", rec.ok()}};
    }
    RunResult r;
    r.output = j.dump(2) + "\n";
    return r;
}

RunResult cmd_canonical(const RunConfig& cfg)
{
    const LabeledSubset& e = require_diagram(cfg);
    const AdmissibleSubset& s = e.subset;
    int n = s.rank();
    std::string format = cfg.format.empty() ? "text" : cfg.format;
    if (format != "text" && format != "json") throw UsageError("--format must be text or json");
    auto values = parse_values(cfg.c);
    std::vector<std::string> shown;
    std::vector<std::vector<std::string>> matrix(n, std::vector<std::string>(n, "0"));
    std::string field = "Q";
    if (cfg.p) {
        std::uint32_t p = require_p(cfg);
        field = "F_" + std::to_string(p);
        std::vector<Fp> c;
        for (const auto& v : values) c.push_back(to_fp(v, p));
        auto f = canonical_form(s, c, Fp(0, p));
        for (Root rt : positive_roots(n)) matrix[rt.col - 1][rt.row - 1] = f.value(rt).str();
    } else {
        auto f = canonical_form(s, values, Rational(0));
        for (Root rt : positive_roots(n)) matrix[rt.col - 1][rt.row - 1] = f.value(rt).str();
    }
    Json j;
    j["label"] = label_json(e.label);
    j["field"] = field;
    Json vj = Json::array();
    for (Root rt : positive_roots(n)) {
        const std::string& v = matrix[rt.col - 1][rt.row - 1];
        if (v != "0") vj.push_back({{"root", to_string(rt)}, {"value", v}});
    }
    j["values"] = vj;
    j["matrix"] = matrix;
    RunResult r;
    if (format == "json") {
        r.output = j.dump(2) + "\n";
        return r;
    }
    std::ostringstream os;
    os << "canonical form of (" << to_string(e.label) << ") over " << field << "\n";
    for (const auto& x : vj) os << "  f(" << x["root"].get<std::string>() << ") = " << x["value"].get<std::string>() << "\n";
    std::size_t width = 1;
    for (const auto& row : matrix)
        for (const auto& v : row) width = std::max(width, v.size());
    for (const auto& row : matrix) {
        std::string line;
        for (const auto& v : row) line += std::string(width + 1 - v.size(), ' ') + v;
        os << line << "\n";
    }
    r.output = os.str();
    return r;
}

// ---- verify

struct Suite {
    Json checks = Json::array();
    bool ok = true;
    std::string first_failure;
    void record(Json check, bool pass, const std::string& what)
    {
        check["ok"] = pass;
        checks.push_back(std::move(check));
        if (!pass) {
            ok = false;
            if (first_failure.empty()) first_failure = what;
        }
    }
};

std::vector<Rational> random_c(const AdmissibleSubset& s, std::mt19937_64& rng)
{
    std::vector<Rational> c;
    for (int k = 0; k < s.size(); ++k) {
        long v = static_cast<long>(rng() % 19) - 9;
        if (s.is_otimes(k) && v == 0) v = 1 + static_cast<long>(rng() % 9);
        c.push_back(Rational(v));
    }
    return c;
}

void suite_polarizations(const RunConfig& cfg, Suite& out)
{
    std::mt19937_64 rng(cfg.seed);
    const int draws = 20;
    for (const auto& e : catalog(cfg.n)) {
        RootSet pol = polarization(e.subset);
        int passed = 0, rank_ok = 0;
        for (int d = 0; d < draws; ++d) {
            auto f = canonical_form(e.subset, random_c(e.subset, rng), Rational(0));
            passed += verify_polarization(pol, f);
            rank_ok += kirillov_rank(f) == e.subset.dimension();
        }
        bool pass = passed == draws && rank_ok == draws;
        out.record({{"label", label_json(e.label)}, {"size", pol.size()}, {"draws", draws}, {"passed", passed},
                    {"rank_ok", rank_ok}},
                   pass, "polarization fails for " + to_string(e.label));
    }
}

void suite_ideals(const RunConfig& cfg, Suite& out)
{
    for (const auto& e : catalog(cfg.n)) {
        CValues c = symbolic_values(e.subset);
        BuiltIdeal b = build_ideal(e.subset, c);
        bool triangular = b.ideal.triangular();
        bool poisson = triangular && is_poisson_ideal(b.ideal, cfg.n);
        bool residues = true;
        for (const auto& q : generator_residues_at_canonical(e.subset, c, b)) residues = residues && q.is_zero();
        int exceptional = 0;
        for (const auto& col : b.columns) exceptional += col.kind == ColumnCase::Exceptional;
        out.record({{"label", label_json(e.label)},
                    {"generators", b.ideal.generators().size()},
                    {"exceptional_columns", exceptional},
                    {"triangular", triangular},
                    {"poisson", poisson},
                    {"residues_zero", residues}},
                   triangular && poisson && residues, "ideal check fails for " + to_string(e.label));
    }
}

void suite_census(const RunConfig& cfg, Suite& out, Json& extra)
{
    CensusReport rep = census(cfg.n, require_p(cfg, 2));
    extra = census_json(rep, true);
    out.record({{"check", "census"}, {"total", rep.orbits}}, rep.ok(), rep.first_failure);
}

void suite_strata(const RunConfig& cfg, Suite& out)
{
    std::uint32_t p = require_p(cfg, 2);
    auto observed = stratum_max_dims(cfg.n, p);
    auto predicted = predicted_stratum_dims(cfg.n);
    for (int i = 0; i < cfg.n; ++i)
        out.record({{"stratum", i}, {"observed", observed[i]}, {"predicted", predicted[i]}}, observed[i] == predicted[i],
                   "stratum " + std::to_string(i) + " maximum dimension " + std::to_string(observed[i]) + ", predicted " +
                       std::to_string(predicted[i]));
}

void suite_subregular(const RunConfig& cfg, Suite& out)
{
    std::uint32_t p = require_p(cfg, 2);
    int n = cfg.n;
    for (int j = 1; j <= n_zero(n); ++j) {
        bool casimir = is_casimir_mod(regular_minor(n, j), Ideal<Rational>(std::vector<QPoly>{}), n);
        out.record({{"check", "casimir"}, {"minor", "P_" + std::to_string(j)}}, casimir,
                   "P_" + std::to_string(j) + " is not a Casimir element");
    }
    int dim = subregular_dimension(n);
    if (dim < 0) return;
    SubregularAnalyzer analyzer(n, p);
    std::uint64_t size = 1;
    for (int k = 0; k < dim; ++k) size *= p;
    std::map<std::string, int> kinds;
    std::map<std::string, int> failures;
    std::string first;
    census(n, p, [&](const OrbitView& v) {
        if (v.states->size() != size) return;
        SubregularRecord rec = analyzer.analyze(*v.states);
        std::string key = v.pair >= 0 ? to_string(catalog(n)[v.pair].label) : "?";
        ++kinds[rec.kind];
        if (!rec.ok()) {
            ++failures[key];
            if (first.empty()) first = key + " " + to_string(rec);
        }
    });
    for (const auto& [kind, count] : kinds) out.record({{"case", kind}, {"orbits", count}}, true, "");
    for (const auto& [label, count] : failures)
        out.record({{"label", label}, {"failing_orbits", count}}, false, "subregular orbit not cut out: " + first);
}

RunResult cmd_verify(const RunConfig& cfg)
{
    require_n(cfg);
    Suite suite;
    Json extra;
    if (cfg.suite == "polarizations")
        suite_polarizations(cfg, suite);
    else if (cfg.suite == "ideals")
        suite_ideals(cfg, suite);
    else if (cfg.suite == "census")
        suite_census(cfg, suite, extra);
    else if (cfg.suite == "strata")
        suite_strata(cfg, suite);
    else if (cfg.suite == "subregular")
        suite_subregular(cfg, suite);
    else
        throw UsageError("unknown suite '" + cfg.suite + "'");

    Json j;
    j["suite"] = cfg.suite;
    j["n"] = cfg.n;
    j["p"] = cfg.p ? Json(*cfg.p) : Json(nullptr);
    j["seed"] = cfg.seed;
    j["ok"] = suite.ok;
    if (!suite.ok) j["first_failure"] = suite.first_failure;
    j["checks"] = suite.checks;
    if (!extra.is_null()) j["census"] = extra;
    RunResult r;
    r.output = j.dump(2) + "\n";
    r.status = suite.ok ? kOk : kVerifyFailed;
    if (!suite.ok) r.error = suite.first_failure;
    return r;
}

} // namespace

RunResult run(const RunConfig& cfg)
{
    set_state_budget(cfg.budget);
    try {
        if (cfg.command == "diagrams") return cmd_diagrams(cfg);
        if (cfg.command == "generators") return cmd_generators(cfg);
        if (cfg.command == "census") return cmd_census(cfg);
        if (cfg.command == "classify") return cmd_classify(cfg);
        if (cfg.command == "canonical") return cmd_canonical(cfg);
        if (cfg.command == "verify") return cmd_verify(cfg);
        throw UsageError("unknown command '" + cfg.command + "'");
    } catch (const UsageError& e) {
        return {kUsage, "", e.what()};
    } catch (const BudgetExceeded& e) {
        return {kBudget, "", e.what()};
    } catch (const ClassificationMismatch& e) {
        return {kVerifyFailed, "", e.what()};
    } catch (const LemmaFailure& e) {
        return {kVerifyFailed, "", e.what()};
    } catch (const UnsupportedColumn& e) {
        return {kVerifyFailed, "", e.what()};
    } catch (const Error& e) {
        return {kUsage, "", e.what()};
    } catch (const std::exception& e) {
        return {kInternal, "", e.what()};
    }
}

} // namespace coadj::cli
