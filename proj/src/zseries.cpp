#include "affgk/zseries.hpp"

#include <stdexcept>

namespace affgk {

ZSeries& ZSeries::mulBinomial(const QLaurent& trace, int n, int sign)
{
    if (n < 1) throw std::invalid_argument("z-power of a binomial factor must be positive");
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
    const int zmax = this->zmax();
    if (sign == 1) {
        for (int k = zmax; k >= n; --k) c_[k] -= trace * c_[k - n];
    } else {
        for (int k = n; k <= zmax; ++k) c_[k] += trace * c_[k - n];
    }
    return *this;
}

ZSeries ZSeries::operator*(const ZSeries& o) const
{
    if (zmax() != o.zmax()) throw std::invalid_argument("zmax bounds must match");
    ZSeries r(zmax());
    for (int i = 0; i <= zmax(); ++i) {
        if (c_[i].isZero()) continue;
        for (int j = 0; i + j <= zmax(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    return r;
}

} // namespace affgk
