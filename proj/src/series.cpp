#include "affgk/series.hpp"

#include <stdexcept>

namespace affgk {

namespace {

void require_same_shape(const GradedSeries& a, const GradedSeries& b)
{
    if (a.rank() != b.rank() || a.bound() != b.bound())
        throw std::invalid_argument("series shapes (rank, H) must match");
}

} // namespace

GradedSeries GradedSeries::operator+(const GradedSeries& o) const
{
    require_same_shape(*this, o);
    GradedSeries r = *this;
    for (const auto& [g, p] : o.terms_) r.add(g, p);
    return r;
}

GradedSeries GradedSeries::operator-(const GradedSeries& o) const
{
    require_same_shape(*this, o);
    GradedSeries r = *this;
    for (const auto& [g, p] : o.terms_) r.add(g, -p);
    return r;
}

GradedSeries GradedSeries::operator*(const GradedSeries& o) const
{
    require_same_shape(*this, o);
    GradedSeries r(rank_, H_);
    for (const auto& [ga, pa] : terms_) {
        int ha = ga.height();
        for (const auto& [gb, pb] : o.terms_) {
            if (ha + gb.height() > H_) continue;
            r.add(ga + gb, pa * pb);
        }
    }
    return r;
}

GradedSeries GradedSeries::inverse() const
{
    const LatticeVector zero = LatticeVector::zero(rank_);
    QLaurent c0 = coeff(zero);
    // Unit check: a single monomial +-v^k.
    if (c0.isZero() || c0.terms().size() != 1)
        throw std::invalid_argument("constant term is not a unit monomial");
    const auto& [e0, a0] = *c0.terms().begin();
    if (a0 != 1 && a0 != -1)
        throw std::invalid_argument("constant term is not a unit monomial");
    QLaurent c0inv = QLaurent::term(a0, -e0);  // (+-v^k)^{-1} = +-v^{-k}

    /* Graded recursion: with a = c0 + a', the inverse b satisfies
     * b_h = -c0^{-1} * sum_{0 < ht(g') <= h} a_{g'} b_{h - g'}, so terms are
     * filled in increasing height using only lower ones. */
    GradedSeries b(rank_, H_);
    b.set(zero, c0inv);
    for (const auto& g : height_simplex(rank_, H_)) {
        if (g.isZero()) continue;
        QLaurent acc;
        for (const auto& [ga, pa] : terms_) {
            if (ga.isZero() || !ga.leq(g)) continue;
            acc += pa * b.coeff(g - ga);
        }
        if (!acc.isZero()) b.set(g, -(c0inv * acc));
    }
    return b;
}

GradedSeries GradedSeries::restricted(int newH) const
{
    if (newH > H_) throw std::invalid_argument("cannot extend a truncated series");
    GradedSeries r(rank_, newH);
    for (const auto& [g, p] : terms_)
        if (g.height() <= newH) r.set(g, p);
    return r;
}

GradedSeries binomial_factor(const LatticeVector& gamma, const QLaurent& c, int sign, int H)
{
    if (gamma.isZero() || !gamma.nonNegative())
        throw std::invalid_argument("binomial factor needs a nonzero nonnegative gamma");
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
    const int rank = gamma.rank();
    GradedSeries s = GradedSeries::one(rank, H);
    if (sign == 1) {
        if (gamma.height() <= H) s.add(gamma, -c);
        return s;
    }
    QLaurent power = QLaurent::one();
    LatticeVector g = LatticeVector::zero(rank);
    for (int j = 1; j * gamma.height() <= H; ++j) {
        power *= c;
        g = g + gamma;
        s.add(g, power);
    }
    return s;
}

GradedSeries binomial_factor_pow(const LatticeVector& gamma, const QLaurent& c, int sign,
                                 int mult, int H)
{
    if (mult < 1) throw std::invalid_argument("multiplicity must be positive");
    GradedSeries s = binomial_factor(gamma, c, sign, H);
    GradedSeries r = s;
    for (int i = 1; i < mult; ++i) r *= s;
    return r;
}

} // namespace affgk
