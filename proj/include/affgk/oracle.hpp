#pragma once

#include <optional>
#include <vector>

#include "affgk/numeric.hpp"

namespace affgk {

/// Upper-triangular unipotent matrix over truncated Laurent polynomials in
/// t with prime-field coefficients: the unique coset representatives of the
/// based-maps parametrization. Above-diagonal entries are polynomials in
/// t^{-1} with zero constant term; entries[idx][j] holds the coefficient of
/// t^{-(j+1)} for the idx-th entry in row-major order ((1,2), (1,3), ...,
/// (2,3), ... for m = 3).
struct UnipotentLaurentMatrix {
    int m = 2;
    int p = 2;
    std::vector<std::vector<int>> entries;

    static int entryCount(int m) { return m * (m - 1) / 2; }
    static int entryIndex(int m, int row, int col);  // 1-based row < col
};

/// For each k = 1..m-1: the minimum t-adic valuation over all k-column
/// subsets of the determinant of the top k rows. Exact polynomial
/// arithmetic; the leading principal minor is always 1, so values are <= 0.
std::vector<int> minor_valuation_profile(const UnipotentLaurentMatrix& u);

struct OrbitQuery {
    int m = 2;                      // group SL_m, m in {2, 3}
    int p = 2;                      // prime field size
    std::vector<int> gamma;         // coefficients over the finite simple coroots
    std::optional<int> poleBound;   // fixed bound; empty = auto stabilization
    int ceilingFactor = 3;          // auto mode gives up beyond ceilingFactor * |gamma|
    int threads = 1;
};

struct OrbitCount {
    Int count;
    int stabilizedPoleBound = 0;  // first bound of the agreeing run (auto mode)
    Int enumerated;               // total matrices examined, all bounds included
};

/// Number of coset representatives with pole order <= N whose profile is
/// (-gamma_1, ..., -gamma_{m-1}); pure exhaustive enumeration.
Int count_at_pole_bound(const OrbitQuery& qry, int N);

/// Same count restricted to first-entry odometer indices in [xLo, xHi):
/// the slices used for the partition-independence checks and threading.
Int count_at_pole_bound_slice(const OrbitQuery& qry, int N, Int xLo, Int xHi);

/// Auto mode: start at N = |gamma|, re-count at N+1 and N+2, and return
/// once three consecutive counts agree; a fixed poleBound skips the
/// stabilization. Throws when the ceiling is exceeded.
OrbitCount count_points(const OrbitQuery& qry);

} // namespace affgk
