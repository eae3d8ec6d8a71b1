#include "doctest.h"

#include "affgk/cartan.hpp"
#include "affgk/roots.hpp"

using namespace affgk;

TEST_CASE("rank-1 and rank-2 Cartan matrices")
{
    CHECK(build_cartan('A', 1).a == IntMatrix{{2}});
    CHECK(build_cartan('A', 2).a == IntMatrix{{2, -1}, {-1, 2}});
    CHECK(build_cartan('A', 1, true).a == IntMatrix{{2, -2}, {-2, 2}});
    CHECK(build_cartan('B', 2).a == IntMatrix{{2, -1}, {-2, 2}});
    CHECK(build_cartan('C', 2).a == IntMatrix{{2, -2}, {-1, 2}});
    CHECK(build_cartan('G', 2).a == IntMatrix{{2, -3}, {-1, 2}});
}

TEST_CASE("invalid type/rank pairs are rejected")
{
    CHECK_THROWS_AS(build_cartan('B', 1), std::invalid_argument);
    CHECK_THROWS_AS(build_cartan('E', 9), std::invalid_argument);
    CHECK_THROWS_AS(build_cartan('E', 5), std::invalid_argument);
    CHECK_THROWS_AS(build_cartan('F', 3), std::invalid_argument);
    CHECK_THROWS_AS(build_cartan('G', 3), std::invalid_argument);
    CHECK_THROWS_AS(build_cartan('D', 2), std::invalid_argument);
    CHECK_THROWS_AS(build_cartan('A', 0), std::invalid_argument);
    CHECK_THROWS_AS(build_cartan('H', 2), std::invalid_argument);
}

TEST_CASE("validation invariants hold for every supported datum")
{
    for (const auto& [kind, rank] : finite_types_up_to_rank(8)) {
        CHECK_NOTHROW(validate_cartan(build_cartan(kind, rank)));
        CHECK_NOTHROW(validate_cartan(build_cartan(kind, rank, true)));
    }
}

TEST_CASE("dual transposes and is an involution")
{
    CHECK(dual(build_cartan('A', 2)) == build_cartan('A', 2));
    // Bourbaki numbering makes the B/C duality literal on matrices.
    CHECK(dual(build_cartan('B', 3)).a == build_cartan('C', 3).a);
    CHECK(dual(build_cartan('C', 3)).a == build_cartan('B', 3).a);
    for (const auto& [kind, rank] : finite_types_up_to_rank(6)) {
        CartanData c = build_cartan(kind, rank);
        CHECK(dual(dual(c)) == c);
        CartanData aff = build_cartan(kind, rank, true);
        CHECK(dual(dual(aff)) == aff);
    }
}

TEST_CASE("symmetrizer symmetrizes")
{
    for (const auto& [kind, rank] : finite_types_up_to_rank(6)) {
        CartanData c = build_cartan(kind, rank);
        auto d = symmetrizer(c);
        for (int i = 0; i < c.rank; ++i)
            for (int j = 0; j < c.rank; ++j)
                CHECK(d[i] * c.a[i][j] == d[j] * c.a[j][i]);
    }
}

TEST_CASE("affine matrices against hand-built tables")
{
    // A_2 affine: a triangle of -1 bonds.
    CHECK(build_cartan('A', 2, true).a ==
          IntMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
    // B_2 affine: the affine node bonds to the short root alpha_2.
    CHECK(build_cartan('B', 2, true).a ==
          IntMatrix{{2, 0, -1}, {0, 2, -1}, {-2, -2, 2}});
    // G_2 affine: the affine node bonds to the long root alpha_2.
    CHECK(build_cartan('G', 2, true).a ==
          IntMatrix{{2, 0, -1}, {0, 2, -3}, {-1, -1, 2}});
}

TEST_CASE("kernel and determinant basics")
{
    CHECK(matrix_determinant(build_cartan('A', 3).a) == 4);
    CHECK(matrix_determinant(build_cartan('E', 8).a) == 1);
    CHECK(matrix_determinant(build_cartan('A', 2, true).a) == 0);
    CHECK(kernel_vector(build_cartan('A', 1, true).a) == std::vector<int>{1, 1});
    // Two affine blocks glued: kernel dimension 2.
    IntMatrix twoBlocks = {{2, -2, 0, 0}, {-2, 2, 0, 0}, {0, 0, 2, -2}, {0, 0, -2, 2}};
    CHECK_THROWS_AS(kernel_vector(twoBlocks), std::runtime_error);
}

TEST_CASE("height simplex enumerates the truncated cone in lex order")
{
    auto s = height_simplex(2, 2);
    CHECK(s.size() == 6);  // (0,0),(0,1),(0,2),(1,0),(1,1),(2,0)
    CHECK(std::is_sorted(s.begin(), s.end()));
    for (const auto& g : s) CHECK(g.height() <= 2);
}
