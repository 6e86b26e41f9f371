#include "coadj/orbit.hpp"

#include "coadj/char_matrix.hpp"
#include "coadj/error.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <unordered_set>

namespace coadj {

void check_prime(std::uint32_t p)
{
    bool prime = p >= 2 && p < 65536;
    for (std::uint32_t d = 2; prime && d * d <= p; ++d)
        if (p % d == 0) prime = false;
    if (!prime) throw InvalidPrime(std::to_string(p));
}

namespace {
std::atomic<std::uint64_t> budget_override{0};
}

void set_state_budget(std::uint64_t states) { budget_override = states; }

std::uint64_t state_budget()
{
    if (std::uint64_t b = budget_override) return b;
    if (const char* env = std::getenv("COADJ_STATE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return std::uint64_t(1) << 26;
}

FormSpace::FormSpace(int n, std::uint32_t p) : n_(n), p_(p)
{
    check_rank(n);
    check_prime(p);
    count_ = coadj::num_roots(n);
    power_.assign(count_ + 1, 0);
    power_[0] = 1;
    bool fits = true;
    for (int k = 1; k <= count_; ++k) {
        if (power_[k - 1] > ~std::uint64_t(0) / p) {
            fits = false;
            break;
        }
        power_[k] = power_[k - 1] * p;
    }
    if (!fits) throw BudgetExceeded(0, "p^N does not fit in a machine word");
    size_ = power_[count_];

    // I + E_ij sends f(y_ci) += f(y_cj) for c > i and f(y_jr) -= f(y_ir) for r < j.
    updates_.resize(count_);
    for (int g = 0; g < count_; ++g) {
        Root r = root_at(n, g);
        int i = r.row, j = r.col;
        for (int c = i + 1; c <= n; ++c)
            updates_[g].push_back({root_index(n, {c, i}), root_index(n, {c, j}), 1});
        for (int k = 1; k < j; ++k)
            updates_[g].push_back({root_index(n, {j, k}), root_index(n, {i, k}), -1});
    }

    if (p == 2) {
        int bytes = (count_ + 7) / 8;
        xor_tables_.resize(count_);
        for (int g = 0; g < count_; ++g) {
            std::vector<std::uint64_t> mask(count_, 0);
            for (const Update& u : updates_[g]) mask[u.source] |= std::uint64_t(1) << u.target;
            xor_tables_[g].resize(bytes);
            for (int b = 0; b < bytes; ++b)
                for (int v = 0; v < 256; ++v) {
                    std::uint64_t x = 0;
                    for (int bit = 0; bit < 8; ++bit)
                        if ((v >> bit) & 1 && 8 * b + bit < count_) x ^= mask[8 * b + bit];
                    xor_tables_[g][b][v] = x;
                }
        }
    }
}

std::uint32_t FormSpace::digit(std::uint64_t state, int index) const
{
    return static_cast<std::uint32_t>((state / power_[index]) % p_);
}

std::vector<std::uint32_t> FormSpace::digits(std::uint64_t state) const
{
    std::vector<std::uint32_t> d(count_);
    for (int k = 0; k < count_; ++k) {
        d[k] = static_cast<std::uint32_t>(state % p_);
        state /= p_;
    }
    return d;
}

std::uint64_t FormSpace::pack(const std::vector<std::uint32_t>& d) const
{
    std::uint64_t s = 0;
    for (int k = count_ - 1; k >= 0; --k) s = s * p_ + d[k] % p_;
    return s;
}

std::uint64_t FormSpace::encode(const LinearForm<Fp>& f) const
{
    if (f.rank() != n_) throw InvalidDimension("form rank " + std::to_string(f.rank()));
    std::vector<std::uint32_t> d(count_);
    for (int k = 0; k < count_; ++k) {
        Fp v = f.value(root_at(n_, k));
        if (v.bound() && v.modulus() != p_) throw FieldMismatch("form over F_" + std::to_string(v.modulus()));
        d[k] = static_cast<std::uint32_t>(Fp::reduce(v.value(), p_));
    }
    return pack(d);
}

LinearForm<Fp> FormSpace::decode(std::uint64_t state) const
{
    LinearForm<Fp> f(n_, Fp(0, p_));
    auto d = digits(state);
    for (int k = 0; k < count_; ++k) f.set(root_at(n_, k), Fp(d[k], p_));
    return f;
}

std::uint64_t FormSpace::apply(int gen, std::uint64_t state) const
{
    if (p_ == 2) {
        std::uint64_t x = state;
        const auto& t = xor_tables_[gen];
        for (std::size_t b = 0; b < t.size(); ++b) x ^= t[b][(state >> (8 * b)) & 0xff];
        return x;
    }
    std::uint64_t out = state;
    for (const Update& u : updates_[gen]) {
        std::uint32_t src = digit(state, u.source);
        if (!src) continue;
        std::uint32_t old = digit(state, u.target);
        std::uint32_t now = u.sign > 0 ? (old + src) % p_ : (old + p_ - src) % p_;
        out = out - old * power_[u.target] + now * power_[u.target];
    }
    return out;
}

std::vector<std::uint64_t> orbit_bfs(const FormSpace& space, std::uint64_t start, std::uint64_t budget)
{
    if (!budget) budget = state_budget();
    std::unordered_set<std::uint64_t> seen{start};
    std::vector<std::uint64_t> order{start};
    for (std::size_t head = 0; head < order.size(); ++head)
        for (int g = 0; g < space.num_roots(); ++g) {
            std::uint64_t next = space.apply(g, order[head]);
            if (seen.insert(next).second) {
                if (seen.size() > budget) throw BudgetExceeded(seen.size(), "orbit enumeration");
                order.push_back(next);
            }
        }
    std::sort(order.begin(), order.end());
    return order;
}

std::vector<LinearForm<Fp>> orbit_bfs(const LinearForm<Fp>& f, std::uint64_t budget)
{
    std::uint32_t p = f.value(Root{f.rank(), 1}).modulus();
    if (!p) throw FieldMismatch("form has no modulus");
    FormSpace space(f.rank(), p);
    std::vector<LinearForm<Fp>> out;
    for (std::uint64_t s : orbit_bfs(space, space.encode(f), budget)) out.push_back(space.decode(s));
    return out;
}

const AdmissibleSubset& pair_subset(int n, const FpPair& pair) { return catalog(n).at(pair.subset).subset; }

std::vector<FpPair> canonical_pairs(const FormSpace& space)
{
    int n = space.rank();
    std::uint32_t p = space.modulus();
    std::vector<FpPair> out;
    const auto& cat = catalog(n);
    for (int s = 0; s < static_cast<int>(cat.size()); ++s) {
        const AdmissibleSubset& sub = cat[s].subset;
        int k = sub.size();
        std::vector<std::uint32_t> lo(k), c(k);
        for (int t = 0; t < k; ++t) lo[t] = c[t] = sub.is_otimes(t) ? 1 : 0;
        while (true) {
            std::vector<std::uint32_t> d(space.num_roots(), 0);
            for (int t = 0; t < k; ++t) d[root_index(n, sub.roots()[t])] = c[t];
            out.push_back({s, c, space.pack(d)});
            int t = k - 1;
            while (t >= 0 && c[t] + 1 == p) {
                c[t] = lo[t];
                --t;
            }
            if (t < 0) break;
            ++c[t];
        }
    }
    return out;
}

CompiledPoly::CompiledPoly(const QPoly& poly, const FormSpace& space) : p_(space.modulus())
{
    int n = space.rank();
    for (const auto& [m, c] : poly.terms()) {
        if (m.negative_support()) throw Error("CompiledPoly: Laurent monomial " + m.str());
        Term t{static_cast<std::uint32_t>(to_fp(c, p_).value()), {}};
        if (!t.coefficient) continue;
        for (VarMask b = m.support(); b; b &= b - 1) {
            Var v = std::countr_zero(b);
            if (!is_root_var(v)) throw Error("CompiledPoly: parameter " + var_name(v));
            Root r = var_root(v);
            if (!is_root(n, r)) throw InvalidDimension("variable " + var_name(v));
            t.factors.emplace_back(root_index(n, r), m.exponent(v));
        }
        terms_.push_back(std::move(t));
    }
}

std::uint32_t CompiledPoly::evaluate(const std::vector<std::uint32_t>& d) const
{
    std::uint64_t sum = 0;
    for (const Term& t : terms_) {
        std::uint64_t x = t.coefficient;
        for (auto [idx, e] : t.factors) {
            for (int k = 0; k < e && x; ++k) x = x * d[idx] % p_;
            if (!x) break;
        }
        sum = (sum + x) % p_;
    }
    return static_cast<std::uint32_t>(sum);
}

namespace {

// char_system(S) compiled per (n, p), one entry per catalog index.
const std::vector<std::vector<CompiledPoly>>& compiled_char_systems(const FormSpace& space)
{
    static std::mutex mu;
    static std::map<std::pair<int, std::uint32_t>, std::vector<std::vector<CompiledPoly>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(space.rank(), space.modulus());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<CompiledPoly>> out;
    for (const auto& entry : catalog(space.rank())) {
        std::vector<CompiledPoly> sys;
        for (const auto& g : char_system(entry.subset)) sys.emplace_back(g.p, space);
        out.push_back(std::move(sys));
    }
    return cache.emplace(key, std::move(out)).first->second;
}

} // namespace

Classifier::Classifier(const FormSpace& space) : space_(space) {}

std::optional<FpPair> Classifier::as_canonical(std::uint64_t state) const
{
    int n = space_.rank();
    auto d = space_.digits(state);
    std::uint64_t nonzero = 0;
    for (int k = 0; k < space_.num_roots(); ++k)
        if (d[k]) nonzero |= std::uint64_t(1) << k;
    const auto& cat = catalog(n);
    for (int s = 0; s < static_cast<int>(cat.size()); ++s) {
        const AdmissibleSubset& sub = cat[s].subset;
        if ((nonzero & ~sub.support().bits()) || (sub.otimes().bits() & ~nonzero)) continue;
        FpPair pair{s, {}, state};
        for (Root r : sub.roots()) pair.c.push_back(d[root_index(n, r)]);
        return pair;
    }
    return std::nullopt;
}

ClassifyResult Classifier::classify(std::uint64_t state, std::uint64_t budget) const
{
    int n = space_.rank();
    auto orbit = orbit_bfs(space_, state, budget);
    std::vector<FpPair> found;
    for (std::uint64_t s : orbit)
        if (auto pair = as_canonical(s)) found.push_back(*pair);
    if (found.size() != 1)
        throw ClassificationMismatch("orbit of size " + std::to_string(orbit.size()) + " has " +
                                     std::to_string(found.size()) + " canonical members");
    const FpPair& pair = found.front();
    const auto& entry = catalog(n).at(pair.subset);
    auto df = space_.digits(state), dc = space_.digits(pair.state);
    for (const CompiledPoly& g : compiled_char_systems(space_)[pair.subset])
        if (g.evaluate(df) != g.evaluate(dc))
            throw ClassificationMismatch("generator value differs from canonical form of " + to_string(entry.label));
    ClassifyResult r;
    r.pair = pair;
    r.label = entry.label;
    r.dimension = entry.subset.dimension();
    r.orbit_size = orbit.size();
    return r;
}

ClassifyResult classify(const LinearForm<Fp>& f)
{
    std::uint32_t p = f.value(Root{f.rank(), 1}).modulus();
    if (!p) throw FieldMismatch("form has no modulus");
    FormSpace space(f.rank(), p);
    return Classifier(space).classify(space.encode(f));
}

std::uint64_t expected_orbits(const AdmissibleSubset& s, std::uint32_t p)
{
    std::uint64_t out = 1;
    for (int t = 0; t < s.size(); ++t) out *= s.is_otimes(t) ? p - 1 : p;
    return out;
}

CensusReport census(int n, std::uint32_t p, const OrbitObserver& observer)
{
    FormSpace space(n, p);
    std::uint64_t budget = state_budget();
    if (space.size() > budget) throw BudgetExceeded(0, "p^N = " + std::to_string(space.size()) + " exceeds budget");
    Classifier classifier(space);
    const auto& cat = catalog(n);

    CensusReport report;
    report.n = n;
    report.p = p;
    report.partition_ok = true;
    std::uint64_t formula_points = 0;
    for (const auto& entry : cat) {
        CensusRow row{entry.label, entry.subset.dimension(), 0, expected_orbits(entry.subset, p)};
        std::uint64_t pts = row.expected;
        for (int k = 0; k < row.dimension; ++k) pts *= p;
        formula_points += pts;
        report.per_dim[row.dimension].second += row.expected;
        report.rows.push_back(row);
    }

    auto fail = [&](const std::string& msg) {
        if (report.first_failure.empty()) report.first_failure = msg;
    };

    std::vector<bool> seen(space.size(), false);
    std::vector<std::uint64_t> orbit;
    std::uint64_t points = 0;
    for (std::uint64_t start = 0; start < space.size(); ++start) {
        if (seen[start]) continue;
        orbit.assign(1, start);
        seen[start] = true;
        for (std::size_t head = 0; head < orbit.size(); ++head)
            for (int g = 0; g < space.num_roots(); ++g) {
                std::uint64_t next = space.apply(g, orbit[head]);
                if (!seen[next]) {
                    seen[next] = true;
                    orbit.push_back(next);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        ++report.orbits;
        points += orbit.size();

        OrbitView view{&orbit, -1, 0};
        for (std::uint64_t s : orbit)
            if (auto pair = classifier.as_canonical(s)) {
                ++view.canonical_members;
                view.pair = pair->subset;
            }
        int dim = 0;
        std::uint64_t size = 1;
        while (size < orbit.size()) {
            size *= p;
            ++dim;
        }
        if (size != orbit.size()) {
            report.partition_ok = false;
            fail("orbit of size " + std::to_string(orbit.size()) + " is not a power of p");
        }
        report.per_dim[dim].first += 1;
        if (view.canonical_members != 1) {
            report.partition_ok = false;
            fail("orbit through state " + std::to_string(start) + " has " + std::to_string(view.canonical_members) +
                 " canonical members");
            view.pair = -1;
        } else {
            CensusRow& row = report.rows[view.pair];
            ++row.observed;
            if (row.dimension != dim) {
                report.partition_ok = false;
                fail("orbit of " + to_string(row.label) + " has dimension " + std::to_string(dim));
            }
        }
        if (observer) observer(view);
    }

    report.point_sum_ok = points == space.size() && formula_points == space.size();
    if (!report.point_sum_ok) fail("point sum mismatch");
    report.counts_ok = true;
    for (const auto& row : report.rows)
        if (row.observed != row.expected) {
            report.counts_ok = false;
            fail("label " + to_string(row.label) + ": " + std::to_string(row.observed) + " orbits, expected " +
                 std::to_string(row.expected));
        }
    for (const auto& [dim, counts] : report.per_dim)
        if (counts.first != counts.second) {
            report.counts_ok = false;
            fail("dimension " + std::to_string(dim) + ": " + std::to_string(counts.first) + " orbits, expected " +
                 std::to_string(counts.second));
        }
    return report;
}

std::vector<int> predicted_stratum_dims(int n)
{
    check_rank(n);
    int big_n = num_roots(n), n0 = n_zero(n), nx = n_otimes(n);
    std::vector<int> out;
    for (int i = 0; i < n; ++i) out.push_back(big_n - (n0 + 2 * std::min(i, nx)));
    return out;
}

std::vector<int> stratum_max_dims(int n, std::uint32_t p)
{
    FormSpace space(n, p);
    std::vector<int> out(n, -1);
    census(n, p, [&](const OrbitView& v) {
        int dim = 0;
        for (std::uint64_t size = 1; size < v.states->size(); size *= p) ++dim;
        for (std::uint64_t s : *v.states) {
            int i = stratum(space.decode(s));
            out[i] = std::max(out[i], dim);
        }
    });
    return out;
}

} // namespace coadj
