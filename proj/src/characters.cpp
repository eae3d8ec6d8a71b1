#include "affgk/characters.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace affgk {

std::map<int, int> sl2_decompose(const WeightMultiset& w)
{
    for (const auto& [weight, mult] : w) {
        if (mult < 0) throw std::invalid_argument("negative multiplicity");
        if (weight % 2 != 0) throw std::invalid_argument("odd weight in an even character");
        auto it = w.find(-weight);
        if (it == w.end() || it->second != mult)
            throw std::invalid_argument("weight multiset is not symmetric under negation");
    }
    auto multOf = [&](int weight) {
        auto it = w.find(weight);
        return it == w.end() ? 0 : it->second;
    };
    // String count at highest weight 2d is m(2d) - m(2d+2); a negative
    // difference means the input is not an sl(2)-module character.
    std::map<int, int> strings;
    int top = w.empty() ? 0 : std::max(std::abs(w.begin()->first), std::abs(w.rbegin()->first));
    for (int hw = top; hw >= 0; hw -= 2) {
        int count = multOf(hw) - multOf(hw + 2);
        if (count < 0) throw std::invalid_argument("weight multiset is not an sl(2) character");
        if (count > 0) strings[hw] = count;
    }
    return strings;
}

WeightMultiset sl2_expand(const std::map<int, int>& strings)
{
    WeightMultiset w;
    for (const auto& [hw, count] : strings)
        for (int weight = -hw; weight <= hw; weight += 2) w[weight] += count;
    return w;
}

WeightMultiset principal_weights(const FoldingData& f, int s)
{
    if (s < 0 || s >= f.order) throw std::invalid_argument("eigenvalue index out of range");
    WeightMultiset w;
    w[0] += cartan_eigenspace_dim(f, s);

    /* Orbits of sigma on the cover roots. All members of an orbit share a
     * height (sigma permutes simple roots), and the principal element of the
     * folded subalgebra acts on the orbit span by 2*height, one dimension
     * per eigenvalue index divisible by k/m. */
    auto pos = positive_roots(f.cover);
    std::set<LatticeVector> remaining(pos.begin(), pos.end());
    while (!remaining.empty()) {
        LatticeVector b = *remaining.begin();
        int m = 0;
        LatticeVector cur = b;
        do {
            remaining.erase(cur);
            LatticeVector next = cur;
            for (int i = 0; i < f.cover.rank; ++i) next.coords[f.sigma[i]] = cur.coords[i];
            cur = next;
            ++m;
        } while (!(cur == b));
        if (s % (f.order / m) == 0) {
            w[2 * b.height()] += 1;
            w[-2 * b.height()] += 1;
        }
    }
    return w;
}

PrincipalInvariantSpace compute_W(const CartanData& gprime, int nmax)
{
    if (nmax < 1) throw std::invalid_argument("nmax must be positive");
    FoldingData fold = folding_for_dual_affine(gprime.kind, gprime.rank);
    PrincipalInvariantSpace W(nmax);
    for (int n = 1; n <= nmax; ++n) {
        auto strings = sl2_decompose(principal_weights(fold, n % fold.order));
        for (const auto& [hw, count] : strings) {
            if (hw == 0)
                throw std::runtime_error("weight-0 string in the loop radical (folding bug)");
            W.add(n, hw / 2, count);
        }
    }
    return W;
}

ZSeries delta_z(const PrincipalInvariantSpace& W, int zmax)
{
    if (W.nmax() < zmax) throw std::invalid_argument("W does not cover the requested levels");
    ZSeries s = ZSeries::one(zmax);
    for (const auto& [nd, m] : W.table()) {
        if (nd.first > zmax) continue;
        for (int i = 0; i < m; ++i) s.mulBinomial(QLaurent::v(nd.second), nd.first, -1);
    }
    return s;
}

ZSeries super_sym_character(const std::vector<SuperGenerator>& gens, int zmax)
{
    ZSeries s = ZSeries::one(zmax);
    for (const auto& g : gens) {
        if (g.weight < 1) throw std::invalid_argument("generator weight must be positive");
        s.mulBinomial(g.trace, g.weight, g.odd ? 1 : -1);
    }
    return s;
}

namespace {

/* Shared DP for the partition counts: one forward pass per generator copy
 * multiplies the table by (1 - x e^{-root})^{-1}, with x = 1 for plain
 * counts and x = v for the part-weighted version. Heights grade the
 * recursion, so in-place updates in simplex order are exact. */
std::map<LatticeVector, QLaurent> kostant_table(const std::vector<WeightedRoot>& roots, int rank,
                                                int H, bool weighted)
{
    auto simplex = height_simplex(rank, H);
    std::map<LatticeVector, QLaurent> table;
    for (const auto& g : simplex) table[g] = QLaurent::zero();
    table[LatticeVector::zero(rank)] = QLaurent::one();
    const QLaurent partWeight = weighted ? QLaurent::v() : QLaurent::one();

    for (const auto& r : roots) {
        if (!r.vec.nonNegative() || r.vec.isZero())
            throw std::invalid_argument("generators must be nonzero and nonnegative");
        for (int copy = 0; copy < r.mult; ++copy) {
            for (const auto& g : simplex) {
                LatticeVector prev = g - r.vec;
                if (!prev.nonNegative()) continue;
                auto& cell = table[g];
                cell += partWeight * table[prev];
            }
        }
    }
    return table;
}

} // namespace

std::map<LatticeVector, QLaurent> kostant_weighted_table(const std::vector<WeightedRoot>& roots,
                                                         int rank, int H)
{
    return kostant_table(roots, rank, H, true);
}

std::map<LatticeVector, Int> kostant_count_table(const std::vector<WeightedRoot>& roots, int rank,
                                                 int H)
{
    std::map<LatticeVector, Int> out;
    for (const auto& [g, p] : kostant_table(roots, rank, H, false)) out[g] = p.coeff(0);
    return out;
}

Int kostant_count(const LatticeVector& gamma, const std::vector<WeightedRoot>& roots)
{
    if (!gamma.nonNegative()) throw std::invalid_argument("gamma must be nonnegative");
    auto table = kostant_table(roots, gamma.rank(), gamma.height(), false);
    return table.at(gamma).coeff(0);
}

QLaurent kostant_weighted(const LatticeVector& gamma, const std::vector<WeightedRoot>& roots)
{
    if (!gamma.nonNegative()) throw std::invalid_argument("gamma must be nonnegative");
    auto table = kostant_table(roots, gamma.rank(), gamma.height(), true);
    return table.at(gamma);
}

} // namespace affgk
