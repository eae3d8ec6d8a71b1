#pragma once

#include <vector>

#include "affgk/cartan.hpp"
#include "affgk/lattice.hpp"

namespace affgk {

/// Positive roots of a finite datum, by reflection closure from the simple
/// roots, in lexicographic coordinate order.
std::vector<LatticeVector> positive_roots(const CartanData& c);

/// Positive real roots of an affine datum with height <= H, same order.
std::vector<LatticeVector> positive_real_roots_bounded(const CartanData& c, int H);

/// Exponents d_1 <= ... <= d_r of a finite type, as the dual partition of
/// the positive-root height histogram.
std::vector<int> exponents(const CartanData& c);

/// Primitive positive kernel vector of the transposed affine matrix: the
/// minimal positive imaginary coroot delta written over the simple coroots.
LatticeVector delta_vector(const CartanData& c);

/// Diagram folding of a simply-laced cover realizing the Langlands dual of
/// a finite type as the fixed subalgebra. `order` is the automorphism order
/// k; `orbitOf` maps cover nodes onto folded nodes and `sigma` is the node
/// permutation itself. Trivial (k = 1, cover = the type itself) when the
/// type is simply laced.
struct FoldingData {
    CartanData cover;
    int order = 1;
    std::vector<int> orbitOf;
    std::vector<int> sigma;

    static FoldingData trivial(const CartanData& c);
};

/// Folding table: B_r from A_{2r-1} (k=2), C_r from D_{r+1} (k=2),
/// F_4 from E_6 (k=2), G_2 from D_4 (k=3); trivial otherwise. The folded
/// Cartan matrix always reproduces dual(build_cartan(kind, rank)) exactly.
FoldingData folding_for_dual_affine(char kind, int rank);

/// Cartan matrix of the fixed subalgebra: entries summed over source orbits
/// against an orbit representative of the target.
CartanData folded_cartan(const FoldingData& f, char kind, int rank);

/// Dimension of the e^{2 pi i s/k}-eigenspace of the folding automorphism on
/// the cover Cartan subalgebra (node-orbit count filtered by orbit size).
int cartan_eigenspace_dim(const FoldingData& f, int s);

/// Same eigenspace dimension for the whole cover algebra: root-space orbits
/// plus the Cartan contribution.
int algebra_eigenspace_dim(const FoldingData& f, int s);

/// One positive coroot of the untwisted affinization, written over the
/// simple coroots with the affine node at coordinate 0. Real coroots carry
/// multiplicity 1; imaginary ones are n*delta with the eigenspace
/// multiplicity of the dual folding.
struct CorootWithMult {
    LatticeVector vector;
    int level = 0;
    int multiplicity = 1;
    bool imaginary = false;

    auto operator<=>(const CorootWithMult&) const = default;
};

/// All positive coroots of the affinization of the given finite type with
/// height <= H, sorted by (height, coords). Generated directly as roots of
/// the transposed affine Cartan matrix, so every real coroot has
/// nonnegative coordinates and its level is the affine-node coordinate.
std::vector<CorootWithMult> positive_coroots_with_mult(const CartanData& gprime, int H);

/// Multiplicity of n*delta among the coroots of the affinization.
int imaginary_coroot_mult(const FoldingData& f, int n);

} // namespace affgk
