#pragma once

#include <map>
#include <utility>
#include <vector>

#include "affgk/lattice.hpp"
#include "affgk/qlaurent.hpp"
#include "affgk/roots.hpp"
#include "affgk/zseries.hpp"

namespace affgk {

/// Weight -> multiplicity, the h-eigenvalue character of a module.
using WeightMultiset = std::map<int, int>;

/// Positive (co)root with a generator multiplicity for partition counts.
struct WeightedRoot {
    LatticeVector vec;
    int mult = 1;
};

/// Decompose an even, negation-symmetric weight multiset into irreducible
/// sl(2) strings; returns highest weight (2d) -> string count. Throws
/// std::invalid_argument when the input is not such a character.
std::map<int, int> sl2_decompose(const WeightMultiset& w);

/// Expand strings back into the full weight multiset (test oracle
/// companion of sl2_decompose).
WeightMultiset sl2_expand(const std::map<int, int>& strings);

/// h-eigenvalues of the principal element of the folded subalgebra on the
/// e^{2 pi i s/k}-eigenspace of the cover: every root orbit of size m
/// contributes the weight 2*height once to each index divisible by k/m, and
/// the Cartan contributes zeros.
WeightMultiset principal_weights(const FoldingData& f, int s);

/// The bigraded space of principal invariants in the positive-loop radical
/// of the dual parabolic: (loop degree n >= 1, h-string exponent d >= 1)
/// -> multiplicity.
class PrincipalInvariantSpace {
public:
    explicit PrincipalInvariantSpace(int nmax) : nmax_(nmax) {}

    int nmax() const { return nmax_; }

    void add(int n, int d, int mult)
    {
        if (n < 1 || d < 1 || mult < 1) throw std::invalid_argument("bad (n, d, mult) entry");
        mult_[{n, d}] += mult;
    }

    int mult(int n, int d) const
    {
        auto it = mult_.find({n, d});
        return it == mult_.end() ? 0 : it->second;
    }

    /// Total dimension at loop degree n.
    int dimAtLevel(int n) const
    {
        int dim = 0;
        for (const auto& [nd, m] : mult_)
            if (nd.first == n) dim += m;
        return dim;
    }

    /// Sorted string exponents (with repetition) at loop degree n.
    std::vector<int> exponentsAtLevel(int n) const
    {
        std::vector<int> out;
        for (const auto& [nd, m] : mult_)
            if (nd.first == n)
                for (int i = 0; i < m; ++i) out.push_back(nd.second);
        return out;
    }

    const std::map<std::pair<int, int>, int>& table() const { return mult_; }

private:
    int nmax_;
    std::map<std::pair<int, int>, int> mult_;
};

/// Build the space level by level: decompose the principal weights of the
/// (n mod k)-eigenspace and record one generator per string. A string of
/// highest weight 0 would break the negative grading and signals a folding
/// bug, so it throws.
PrincipalInvariantSpace compute_W(const CartanData& gprime, int nmax);

/// Delta(z) = prod over generators (n, d) of (1 - v^d z^n)^{-mult},
/// the graded symmetric-algebra trace series.
ZSeries delta_z(const PrincipalInvariantSpace& W, int zmax);

/// One multiplicative generator of a super symmetric algebra.
struct SuperGenerator {
    int weight = 1;       // z-power
    QLaurent trace;       // Frobenius trace monomial
    bool odd = false;     // odd generators contribute (1 - trace z^n)
};

/// prod over even generators (1 - trace z^n)^{-1} * prod over odd ones
/// (1 - trace z^n), truncated at z^zmax.
ZSeries super_sym_character(const std::vector<SuperGenerator>& gens, int zmax);

/// Number of multisets of the given positive roots (a multiplicity-m root
/// counts as m distinct generator copies) summing to gamma.
Int kostant_count(const LatticeVector& gamma, const std::vector<WeightedRoot>& roots);

/// Same sum weighted by v^{number of parts}.
QLaurent kostant_weighted(const LatticeVector& gamma, const std::vector<WeightedRoot>& roots);

/// Batch table over the height simplex ht <= H: gamma -> weighted count.
/// kostant_count/kostant_weighted are single-query fronts for this DP.
std::map<LatticeVector, QLaurent> kostant_weighted_table(const std::vector<WeightedRoot>& roots,
                                                         int rank, int H);

/// Plain multiset counts over the same simplex.
std::map<LatticeVector, Int> kostant_count_table(const std::vector<WeightedRoot>& roots,
                                                 int rank, int H);

} // namespace affgk
