#pragma once

#include "coadj/admissible.hpp"
#include "coadj/linear_form.hpp"

namespace coadj {

// Roots whose cells carry +, otimes, box or bullet. For (7,3,8), y_54 is replaced by y_75.
RootSet polarization(const AdmissibleSubset& s);

struct PolarizationCheck {
    bool isotropic = false;   // f([y_a, y_b]) = 0 on the set
    bool subalgebra = false;  // closed under root_sum
    bool half_size = false;   // |p| = N - rank / 2
    bool ok() const { return isotropic && subalgebra && half_size; }
};

template <class S>
PolarizationCheck check_polarization(const RootSet& p, const LinearForm<S>& f)
{
    PolarizationCheck out;
    int n = f.rank();
    out.isotropic = true;
    out.subalgebra = true;
    for (Root a : p.roots())
        for (Root b : p.roots()) {
            auto sum = root_sum(a, b);
            if (!sum) continue;
            if (!p.contains(*sum)) out.subalgebra = false;
            if (!is_zero(f.value(*sum))) out.isotropic = false;
        }
    out.half_size = 2 * p.size() == 2 * num_roots(n) - kirillov_rank(f);
    return out;
}

template <class S>
bool verify_polarization(const RootSet& p, const LinearForm<S>& f)
{
    return check_polarization(p, f).ok();
}

} // namespace coadj
