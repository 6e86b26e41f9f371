#include "coadj/polynomial.hpp"

#include <algorithm>

namespace coadj {

Root var_root(Var v)
{
    if (!is_root_var(v)) throw NotMember("variable " + std::to_string(v) + " is not a root variable");
    int row = 2;
    while (row * (row - 1) / 2 <= v) ++row;
    return {row, v - (row - 1) * (row - 2) / 2 + 1};
}

std::string var_name(Var v)
{
    if (is_root_var(v)) {
        Root r = var_root(v);
        return "y_" + std::to_string(r.row) + "_" + std::to_string(r.col);
    }
    return "c_" + std::to_string(v - kRootVars + 1);
}

const std::array<Var, kMaxVars>& var_order()
{
    static const std::array<Var, kMaxVars> order = [] {
        std::array<Var, kMaxVars> o{};
        for (int v = 0; v < kMaxVars; ++v) o[v] = v;
        std::stable_sort(o.begin(), o.begin() + kRootVars,
                         [](Var a, Var b) { return var_root(a) > var_root(b); });
        return o;
    }();
    return order;
}

std::string Monomial::str() const
{
    std::string out;
    for (Var v : var_order()) {
        int e = e_[v];
        if (!e) continue;
        if (!out.empty()) out += "*";
        out += var_name(v);
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

} // namespace coadj
