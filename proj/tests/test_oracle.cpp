#include "doctest.h"

#include <map>

#include "affgk/oracle.hpp"

using namespace affgk;

namespace {

UnipotentLaurentMatrix matrix2(int p, std::vector<int> x)
{
    return {2, p, {std::move(x)}};
}

UnipotentLaurentMatrix matrix3(int p, std::vector<int> x, std::vector<int> y,
                               std::vector<int> z)
{
    return {3, p, {std::move(x), std::move(y), std::move(z)}};
}

} // namespace

TEST_CASE("minor valuation profiles")
{
    SUBCASE("identity matrices")
    {
        CHECK(minor_valuation_profile(matrix2(3, {0, 0})) == std::vector<int>{0});
        CHECK(minor_valuation_profile(matrix3(2, {0}, {0}, {0})) ==
              std::vector<int>{0, 0});
    }
    SUBCASE("SL2 entry with pole order n")
    {
        CHECK(minor_valuation_profile(matrix2(3, {1, 2})) == std::vector<int>{-2});
        CHECK(minor_valuation_profile(matrix2(3, {2, 0})) == std::vector<int>{-1});
    }
    SUBCASE("SL3 with only u12 = t^{-1}: the 2x2 minors stay at valuation 0")
    {
        // Minors of the top two rows: cols {1,2} -> 1, cols {1,3} -> u23 = 0,
        // cols {2,3} -> u12 u23 - u13 = 0; the profile is (-1, 0).
        CHECK(minor_valuation_profile(matrix3(2, {1}, {0}, {0})) ==
              std::vector<int>{-1, 0});
    }
    SUBCASE("SL3 with only u13 = t^{-2}")
    {
        CHECK(minor_valuation_profile(matrix3(3, {0, 0}, {0, 1}, {0, 0})) ==
              std::vector<int>{-2, -2});
    }
    SUBCASE("SL3 cross term u12 u23 enters the second profile value")
    {
        // u12 = u23 = t^{-1}: minor cols {2,3} = t^{-2}, so profile (-1, -2).
        CHECK(minor_valuation_profile(matrix3(2, {1}, {0}, {1})) ==
              std::vector<int>{-1, -2});
    }
}

TEST_CASE("SL2 counts match the valuation census")
{
    // Among the p^N coefficient vectors, exactly (p-1) p^{n-1} have pole
    // order n >= 1, and one is zero.
    for (int p : {2, 3}) {
        const int N = 4;
        Int total(0);
        for (int n = 0; n <= N; ++n) {
            OrbitQuery qry;
            qry.m = 2;
            qry.p = p;
            qry.gamma = {n};
            Int count = count_at_pole_bound(qry, N);
            Int expected = n == 0 ? Int(1) : Int(p - 1) * int_pow(Int(p), n - 1);
            CHECK(count == expected);
            total += count;
        }
        CHECK(total == int_pow(Int(p), N));
    }
}

TEST_CASE("spec-level counts")
{
    SUBCASE("gamma = 0 has the identity coset only")
    {
        OrbitQuery qry;
        qry.m = 2;
        qry.p = 5;
        qry.gamma = {0};
        OrbitCount r = count_points(qry);
        CHECK(r.count == 1);
        CHECK(r.stabilizedPoleBound == 0);
    }
    SUBCASE("SL2, p = 3, gamma = 2 alpha")
    {
        OrbitQuery qry;
        qry.m = 2;
        qry.p = 3;
        qry.gamma = {2};
        OrbitCount r = count_points(qry);
        CHECK(r.count == 6);  // q^{n-1}(q-1) at q = 3, n = 2
        CHECK(r.stabilizedPoleBound == 2);
    }
    SUBCASE("SL3, p = 2, gamma = alpha_1 + alpha_2")
    {
        OrbitQuery qry;
        qry.m = 3;
        qry.p = 2;
        qry.gamma = {1, 1};
        OrbitCount r = count_points(qry);
        CHECK(r.count == 3);  // (q-1)(2q-1) at q = 2
    }
}

TEST_CASE("fast counting agrees with the generic profile on a full space")
{
    // Enumerate every SL3 matrix with p = 2, N = 2 through the reference
    // profile and compare the census with the counting loops.
    const int p = 2, N = 2;
    std::map<std::vector<int>, Int> census;
    std::vector<int> x(N, 0), y(N, 0), z(N, 0);
    auto inc = [&](std::vector<int>& d) {
        for (auto& v : d) {
            if (++v < p) return true;
            v = 0;
        }
        return false;
    };
    do {
        do {
            do {
                auto profile = minor_valuation_profile(matrix3(p, x, y, z));
                census[profile] += 1;
            } while (inc(z));
        } while (inc(y));
    } while (inc(x));

    Int total(0);
    for (const auto& [profile, expected] : census) {
        OrbitQuery qry;
        qry.m = 3;
        qry.p = p;
        qry.gamma = {-profile[0], -profile[1]};
        CHECK(count_at_pole_bound(qry, N) == expected);
        total += expected;
    }
    CHECK(total == int_pow(Int(p), 3 * N));
}

TEST_CASE("pole bound monotonicity and stabilization")
{
    OrbitQuery qry;
    qry.m = 3;
    qry.p = 2;
    qry.gamma = {2, 1};
    Int prev(-1);
    for (int N = 1; N <= 5; ++N) {
        Int count = count_at_pole_bound(qry, N);
        CHECK(count >= prev);
        prev = count;
    }
    // Stable from N = max gamma_k on; a later starting point returns the
    // same count.
    OrbitCount aut = count_points(qry);
    CHECK(aut.count == count_at_pole_bound(qry, 5));
    OrbitQuery fixed = qry;
    fixed.poleBound = 4;
    CHECK(count_points(fixed).count == aut.count);
}

TEST_CASE("slices partition the enumeration")
{
    OrbitQuery qry;
    qry.m = 3;
    qry.p = 3;
    qry.gamma = {1, 1};
    const int N = 2;
    Int whole = count_at_pole_bound(qry, N);
    Int space = int_pow(Int(qry.p), N);
    for (int pieces : {2, 3, 5}) {
        Int sum(0);
        Int chunk = (space + pieces - 1) / pieces;
        for (int t = 0; t < pieces; ++t)
            sum += count_at_pole_bound_slice(qry, N, chunk * t, chunk * (t + 1));
        CHECK(sum == whole);
    }
    OrbitQuery threaded = qry;
    threaded.threads = 3;
    CHECK(count_at_pole_bound(threaded, N) == whole);
}

TEST_CASE("query validation")
{
    OrbitQuery qry;
    qry.m = 4;
    qry.p = 2;
    qry.gamma = {1, 1, 1};
    CHECK_THROWS_AS(count_points(qry), std::invalid_argument);
    qry.m = 3;
    qry.gamma = {1};
    CHECK_THROWS_AS(count_points(qry), std::invalid_argument);
    qry.gamma = {1, -1};
    CHECK_THROWS_AS(count_points(qry), std::invalid_argument);
    qry.gamma = {1, 1};
    qry.p = 4;
    CHECK_THROWS_AS(count_points(qry), std::invalid_argument);
}
