#pragma once

#include <map>

#include "affgk/lattice.hpp"
#include "affgk/qlaurent.hpp"

namespace affgk {

/// Formal series over the nonnegative coroot cone, truncated by height:
/// an association gamma -> QLaurent for gamma with coords >= 0 and
/// height(gamma) <= H. Products agree with the untruncated product on all
/// retained heights.
class GradedSeries {
public:
    GradedSeries(int rank, int H) : rank_(rank), H_(H)
    {
        if (rank < 1 || H < 0) throw std::invalid_argument("bad series shape");
    }

    static GradedSeries one(int rank, int H)
    {
        GradedSeries s(rank, H);
        s.set(LatticeVector::zero(rank), QLaurent::one());
        return s;
    }

    int rank() const { return rank_; }
    int bound() const { return H_; }

    QLaurent coeff(const LatticeVector& g) const
    {
        auto it = terms_.find(g);
        return it == terms_.end() ? QLaurent::zero() : it->second;
    }

    void set(const LatticeVector& g, QLaurent p)
    {
        checkKey(g);
        if (p.isZero())
            terms_.erase(g);
        else
            terms_[g] = std::move(p);
    }

    void add(const LatticeVector& g, const QLaurent& p)
    {
        checkKey(g);
        auto it = terms_.find(g);
        if (it == terms_.end()) {
            if (!p.isZero()) terms_[g] = p;
            return;
        }
        it->second += p;
        if (it->second.isZero()) terms_.erase(it);
    }

    const std::map<LatticeVector, QLaurent>& terms() const { return terms_; }

    GradedSeries operator+(const GradedSeries& o) const;
    GradedSeries operator-(const GradedSeries& o) const;
    GradedSeries operator*(const GradedSeries& o) const;
    GradedSeries& operator*=(const GradedSeries& o) { return *this = *this * o; }

    /// Multiplicative inverse up to height H; the constant term must be a
    /// unit monomial (+-v^k).
    GradedSeries inverse() const;

    /// Forget terms above a smaller bound.
    GradedSeries restricted(int newH) const;

    bool operator==(const GradedSeries&) const = default;

private:
    void checkKey(const LatticeVector& g) const
    {
        if (g.rank() != rank_ || !g.nonNegative() || g.height() > H_)
            throw std::invalid_argument("lattice key outside the truncated cone");
    }

    int rank_;
    int H_;
    std::map<LatticeVector, QLaurent> terms_;
};

/// Truncated expansion of (1 - c e^{-gamma})^{sign} for sign = +-1; the
/// inverse sign yields the geometric series sum_j c^j e^{-j gamma}.
GradedSeries binomial_factor(const LatticeVector& gamma, const QLaurent& c, int sign, int H);

/// (1 - c e^{-gamma})^{sign * mult} with mult >= 1.
GradedSeries binomial_factor_pow(const LatticeVector& gamma, const QLaurent& c, int sign,
                                 int mult, int H);

} // namespace affgk
