#pragma once

#include <string>
#include <vector>

#include "affgk/lattice.hpp"
#include "affgk/numeric.hpp"

namespace affgk {

using IntMatrix = std::vector<std::vector<int>>;

/// Cartan matrix of a finite simple type or of its untwisted affine
/// extension. Entries follow the pairing a[i][j] = <alpha_j, alpha_i^vee>,
/// so row i of the matrix computes the pairing of a root against the i-th
/// simple coroot. Node numbering is Bourbaki's, stored 0-based; an affine
/// matrix has one extra node stored at index 0.
struct CartanData {
    char kind = 0;   // 'A'..'G', describes the underlying finite type
    int rank = 0;    // rank of the finite type
    bool affine = false;
    IntMatrix a;

    int size() const { return affine ? rank + 1 : rank; }

    bool operator==(const CartanData&) const = default;

    std::string name() const
    {
        std::string s(1, kind);
        s += std::to_string(rank);
        if (affine) s += "~";
        return s;
    }
};

/// Standard Cartan matrix of the requested type; the affine flag produces
/// the untwisted extension by the node alpha_0 = delta - theta.
/// Throws std::invalid_argument for pairs outside A_r (r>=1), B_r (r>=2),
/// C_r (r>=2), D_r (r>=3), E_6..E_8, F_4, G_2.
CartanData build_cartan(char kind, int rank, bool affine = false);

/// Structural validity: diagonal 2, nonpositive off-diagonal with symmetric
/// zero pattern; finite matrices nonsingular, affine ones with a
/// one-dimensional kernel spanned by a positive vector.
void validate_cartan(const CartanData& c);

/// Langlands dual datum: the transposed matrix under the same node
/// numbering. An involution.
CartanData dual(const CartanData& c);

/// Minimal positive integer symmetrizer d with d_i a_ij = d_j a_ji.
std::vector<int> symmetrizer(const CartanData& c);

/// Exact determinant (rational elimination).
Int matrix_determinant(const IntMatrix& a);

/// Primitive integer kernel vector of a square matrix whose kernel is
/// one-dimensional; throws std::runtime_error otherwise.
std::vector<int> kernel_vector(const IntMatrix& a);

bool is_simply_laced(char kind);

/// Canonical list of distinct finite types with rank <= maxRank
/// (D starts at rank 4 here so that no type appears twice up to
/// isomorphism; D_3 remains a valid build_cartan input).
std::vector<std::pair<char, int>> finite_types_up_to_rank(int maxRank);

} // namespace affgk
