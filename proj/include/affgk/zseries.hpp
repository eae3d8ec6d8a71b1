#pragma once

#include <vector>

#include "affgk/qlaurent.hpp"

namespace affgk {

/// Univariate series in z with QLaurent coefficients, truncated at z^zmax.
/// z stands for e^{-delta} in the affine assembly.
class ZSeries {
public:
    explicit ZSeries(int zmax) : c_(static_cast<std::size_t>(zmax) + 1)
    {
        if (zmax < 0) throw std::invalid_argument("zmax must be nonnegative");
    }

    static ZSeries one(int zmax)
    {
        ZSeries s(zmax);
        s.c_[0] = QLaurent::one();
        return s;
    }

    int zmax() const { return static_cast<int>(c_.size()) - 1; }

    const QLaurent& operator[](int n) const { return c_.at(n); }
    QLaurent& operator[](int n) { return c_.at(n); }

    /// In-place multiplication by (1 - trace * z^n)^{+-1}. The inverse sign
    /// uses the forward recurrence out_k = in_k + trace * out_{k-n}.
    ZSeries& mulBinomial(const QLaurent& trace, int n, int sign);

    ZSeries operator*(const ZSeries& o) const;

    bool operator==(const ZSeries&) const = default;

private:
    std::vector<QLaurent> c_;
};

} // namespace affgk
