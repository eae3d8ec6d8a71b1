#pragma once

#include <map>
#include <vector>

#include "affgk/characters.hpp"
#include "affgk/series.hpp"
#include "affgk/zseries.hpp"

namespace affgk {

/// A generating function together with its per-gamma point counts: the
/// coefficient at gamma rescaled by q^{|gamma|}, always an
/// integer-coefficient polynomial in q.
struct GKReport {
    char kind = 0;
    int rank = 0;
    bool affine = false;
    int H = 0;
    GradedSeries series;
    std::map<LatticeVector, QLaurent> counts;  // polynomials in q (v-exponents <= 0)

    GKReport(char k, int r, bool aff, int h, GradedSeries s);
};

/// prod over positive roots of (1 - v e^{-alpha}) / (1 - e^{-alpha}),
/// truncated at height H.
GKReport finite_gk_rhs(const CartanData& gprime, int H);

/// prod over generators (n, d) of [(1 - v^{d+1} z^n)/(1 - v^d z^n)]^mult:
/// the affine correction factor as a series in z = e^{-delta}.
ZSeries correction_factor(const PrincipalInvariantSpace& W, int zmax);

/// The same series computed at one numeric q by summing over point
/// configurations: coefficient of z^n is
///   sum over partitions P of n of N_P(q) * prod_i w(n_i),
/// with N_P counting Frobenius-stable multiplicity-P configurations of
/// distinct points of the punctured line, and w the numeric trace of the
/// loop-graded symmetric algebra on the (d+1)-twisted generators.
struct NumericZSeries {
    Int q;
    std::vector<Rat> coeffs;  // index 0..zmax
};

std::vector<NumericZSeries> correction_factor_via_partitions(const PrincipalInvariantSpace& W,
                                                             int zmax,
                                                             const std::vector<Int>& qSamples);

/// Full affine right-hand side: correction factor (z -> delta) times the
/// real and imaginary coroot factors with their multiplicities, truncated
/// by total affine height.
GKReport affine_gk_rhs(const CartanData& gprime, int H);

/// Count of Frobenius-stable configurations of distinct punctured-line
/// points with multiplicity pattern `partition`, over a field with q
/// elements (q any prime power >= 2). Exposed for the oracle-style tests.
Int stratum_point_count(const std::vector<int>& partition, const Int& q);

/// Number of closed points of degree d on the punctured line over F_q.
Int closed_point_count(int d, const Int& q);

bool is_prime_power(const Int& q);

/// One row of a consistency-check discrepancy report.
struct ConsistencyRow {
    LatticeVector gamma;
    Rat lhs;
    Int rhs;
};

struct ConsistencyReport {
    bool pass = true;
    std::vector<ConsistencyRow> rows;  // every gamma checked, in order
};

/// Verifies sum_{gamma' <= gamma} counts(gamma') q^{-|gamma'|} *
/// (part-weighted partition count of gamma - gamma' at q) equals the plain
/// partition count of gamma, for all |gamma| <= H. counts must cover the
/// whole simplex.
ConsistencyReport finite_consistency_check(const CartanData& gprime, int H,
                                           const std::map<LatticeVector, Int>& counts,
                                           const Int& q);

} // namespace affgk
