#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "affgk/roots.hpp"

using namespace affgk;

namespace {

long classical_root_count(char kind, int rank)
{
    switch (kind) {
        case 'A': return static_cast<long>(rank) * (rank + 1) / 2;
        case 'B':
        case 'C': return static_cast<long>(rank) * rank;
        case 'D': return static_cast<long>(rank) * (rank - 1);
        case 'E': return rank == 6 ? 36 : rank == 7 ? 63 : 120;
        case 'F': return 24;
        case 'G': return 6;
    }
    return -1;
}

std::vector<int> classical_exponents(char kind, int rank)
{
    std::vector<int> e;
    switch (kind) {
        case 'A':
            for (int i = 1; i <= rank; ++i) e.push_back(i);
            break;
        case 'B':
        case 'C':
            for (int i = 1; i <= rank; ++i) e.push_back(2 * i - 1);
            break;
        case 'D':
            for (int i = 1; i < rank; ++i) e.push_back(2 * i - 1);
            e.push_back(rank - 1);
            break;
        case 'E':
            if (rank == 6) e = {1, 4, 5, 7, 8, 11};
            if (rank == 7) e = {1, 5, 7, 9, 11, 13, 17};
            if (rank == 8) e = {1, 7, 11, 13, 17, 19, 23, 29};
            break;
        case 'F': e = {1, 5, 7, 11}; break;
        case 'G': e = {1, 5}; break;
    }
    std::sort(e.begin(), e.end());
    return e;
}

} // namespace

TEST_CASE("positive roots of the smallest types")
{
    CHECK(positive_roots(build_cartan('A', 1)) ==
          std::vector<LatticeVector>{LatticeVector({1})});
    CHECK(positive_roots(build_cartan('A', 2)) ==
          std::vector<LatticeVector>{LatticeVector({0, 1}), LatticeVector({1, 0}),
                                     LatticeVector({1, 1})});
    CHECK(positive_roots(build_cartan('B', 2)).size() == 4);
}

TEST_CASE("positive root counts match the classical tables")
{
    for (const auto& [kind, rank] : finite_types_up_to_rank(6))
        CHECK(static_cast<long>(positive_roots(build_cartan(kind, rank)).size()) ==
              classical_root_count(kind, rank));
}

TEST_CASE("root generation is independent of the simple-root order")
{
    std::mt19937 rng(20240811);
    for (const auto& [kind, rank] : finite_types_up_to_rank(6)) {
        CartanData c = build_cartan(kind, rank);
        std::vector<int> perm(rank);
        for (int i = 0; i < rank; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        CartanData shuffled = c;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) shuffled.a[i][j] = c.a[perm[i]][perm[j]];
        auto original = positive_roots(c);
        auto permuted = positive_roots(shuffled);
        REQUIRE(original.size() == permuted.size());
        // The permuted system is the same set of roots with shuffled coords.
        std::set<LatticeVector> back;
        for (const auto& r : permuted) {
            LatticeVector b = r;
            for (int i = 0; i < rank; ++i) b.coords[perm[i]] = r.coords[i];
            back.insert(b);
        }
        CHECK(back == std::set<LatticeVector>(original.begin(), original.end()));
    }
}

TEST_CASE("exponents against the classical tables")
{
    CHECK(exponents(build_cartan('A', 1)) == std::vector<int>{1});
    CHECK(exponents(build_cartan('A', 2)) == std::vector<int>{1, 2});
    CHECK(exponents(build_cartan('G', 2)) == std::vector<int>{1, 5});
    for (const auto& [kind, rank] : finite_types_up_to_rank(8))
        CHECK(exponents(build_cartan(kind, rank)) == classical_exponents(kind, rank));
}

TEST_CASE("delta vectors")
{
    CHECK(delta_vector(build_cartan('A', 1, true)) == LatticeVector({1, 1}));
    CHECK(delta_vector(build_cartan('A', 2, true)) == LatticeVector({1, 1, 1}));
    SUBCASE("B2 primitive kernel vector of the transposed matrix")
    {
        CartanData aff = build_cartan('B', 2, true);
        LatticeVector d = delta_vector(aff);
        CHECK(d == LatticeVector({1, 1, 1}));
        // Kernel property under the transpose, positivity, primitivity.
        for (int i = 0; i < 3; ++i) {
            int dot = 0;
            for (int j = 0; j < 3; ++j) dot += aff.a[j][i] * d.coords[j];
            CHECK(dot == 0);
        }
    }
    SUBCASE("affine-node coefficient is 1 for every type in scope")
    {
        for (const auto& [kind, rank] : finite_types_up_to_rank(6))
            CHECK(delta_vector(build_cartan(kind, rank, true)).coords[0] == 1);
    }
    CHECK_THROWS_AS(delta_vector(build_cartan('A', 2)), std::invalid_argument);
}

TEST_CASE("folding table")
{
    SUBCASE("simply laced types fold trivially")
    {
        FoldingData f = folding_for_dual_affine('A', 2);
        CHECK(f.order == 1);
        CHECK(f.cover.kind == 'A');
        CHECK(f.orbitOf == std::vector<int>{0, 1});
    }
    SUBCASE("B2 folds from A3")
    {
        FoldingData f = folding_for_dual_affine('B', 2);
        CHECK(f.cover.kind == 'A');
        CHECK(f.cover.rank == 3);
        CHECK(f.order == 2);
        CHECK(f.orbitOf == std::vector<int>{0, 1, 0});
    }
    SUBCASE("G2 folds from D4")
    {
        FoldingData f = folding_for_dual_affine('G', 2);
        CHECK(f.cover.kind == 'D');
        CHECK(f.cover.rank == 4);
        CHECK(f.order == 3);
    }
    SUBCASE("folded matrix reproduces the dual Cartan matrix")
    {
        for (const auto& [kind, rank] : finite_types_up_to_rank(5)) {
            FoldingData f = folding_for_dual_affine(kind, rank);
            CHECK(folded_cartan(f, kind, rank) == dual(build_cartan(kind, rank)));
            // Orbit sizes divide the order.
            std::map<int, int> sizes;
            for (int i = 0; i < f.cover.rank; ++i) sizes[f.orbitOf[i]]++;
            for (const auto& [orbit, m] : sizes) CHECK(f.order % m == 0);
        }
    }
}

TEST_CASE("affine coroots with multiplicities")
{
    SUBCASE("A1 up to height 2")
    {
        auto list = positive_coroots_with_mult(build_cartan('A', 1), 2);
        REQUIRE(list.size() == 3);
        CHECK(list[0].vector == LatticeVector({0, 1}));
        CHECK(!list[0].imaginary);
        CHECK(list[1].vector == LatticeVector({1, 0}));
        CHECK(list[2].vector == LatticeVector({1, 1}));
        CHECK(list[2].imaginary);
        CHECK(list[2].multiplicity == 1);
        CHECK(list[2].level == 1);
    }
    SUBCASE("simply-laced imaginary multiplicity is the rank")
    {
        for (const auto& [kind, rank] :
             std::vector<std::pair<char, int>>{{'A', 3}, {'D', 4}}) {
            FoldingData f = folding_for_dual_affine(kind, rank);
            for (int n = 1; n <= 6; ++n) CHECK(imaginary_coroot_mult(f, n) == rank);
        }
    }
    SUBCASE("B2 imaginary multiplicities alternate 2, 1")
    {
        FoldingData f = folding_for_dual_affine('B', 2);
        for (int n = 1; n <= 8; ++n)
            CHECK(imaginary_coroot_mult(f, n) == (n % 2 == 0 ? 2 : 1));
    }
    SUBCASE("G2 imaginary multiplicities are 2 at multiples of 3")
    {
        FoldingData f = folding_for_dual_affine('G', 2);
        for (int n = 1; n <= 9; ++n)
            CHECK(imaginary_coroot_mult(f, n) == (n % 3 == 0 ? 2 : 1));
    }
    CHECK_THROWS_AS(positive_coroots_with_mult(build_cartan('A', 1), 0),
                    std::invalid_argument);
}

TEST_CASE("level bookkeeping across real and imaginary coroots")
{
    const int nMax = 8;
    for (const auto& [kind, rank] : finite_types_up_to_rank(4)) {
        CartanData aff = build_cartan(kind, rank, true);
        LatticeVector delta = delta_vector(aff);
        FoldingData fold = folding_for_dual_affine(kind, rank);
        int H = (nMax + 1) * delta.height() + 12;
        std::map<int, int> realAtLevel;
        for (const auto& r : positive_real_roots_bounded(dual(aff), H))
            realAtLevel[r.coords[0] / delta.coords[0]]++;
        for (int n = 1; n <= nMax; ++n) {
            int total = realAtLevel[n] + imaginary_coroot_mult(fold, n);
            CHECK(total == algebra_eigenspace_dim(fold, n % fold.order));
        }
    }
}
