#include "affgk/roots.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace affgk {

namespace {

/* Reflection closure from the simple roots. s_i(c) = c - <c, alpha_i^vee> e_i
 * with the pairing read off row i of the Cartan matrix. Vectors that leave
 * the positive cone or exceed the height bound are dropped; every positive
 * (real) root of height <= H is reachable through lower ones, so the bound
 * loses nothing. */
std::vector<LatticeVector> reflection_closure(const CartanData& c, int H)
{
    const int n = c.size();
    std::set<LatticeVector> seen;
    std::vector<LatticeVector> queue;
    for (int i = 0; i < n; ++i) {
        auto e = LatticeVector::unit(n, i);
        if (e.height() <= H) {
            seen.insert(e);
            queue.push_back(e);
        }
    }
    while (!queue.empty()) {
        LatticeVector b = queue.back();
        queue.pop_back();
        for (int i = 0; i < n; ++i) {
            long pairing = 0;
            for (int j = 0; j < n; ++j) pairing += static_cast<long>(c.a[i][j]) * b.coords[j];
            LatticeVector refl = b;
            refl.coords[i] -= static_cast<int>(pairing);
            if (!refl.nonNegative() || refl.height() > H) continue;
            if (seen.insert(refl).second) queue.push_back(refl);
        }
    }
    return {seen.begin(), seen.end()};
}

} // namespace

std::vector<LatticeVector> positive_roots(const CartanData& c)
{
    if (c.affine) throw std::invalid_argument("positive_roots expects a finite datum");
    // A crude finite bound on root heights; closure terminates well below it.
    return reflection_closure(c, 64 * c.rank);
}

std::vector<LatticeVector> positive_real_roots_bounded(const CartanData& c, int H)
{
    if (!c.affine) throw std::invalid_argument("bounded closure expects an affine datum");
    if (H < 1) throw std::invalid_argument("height bound must be positive");
    auto all = reflection_closure(c, H);
    // Imaginary vectors n*delta are fixed by all reflections and never enter
    // the closure, so `all` is exactly the real part.
    return all;
}

std::vector<int> exponents(const CartanData& c)
{
    auto roots = positive_roots(c);
    std::map<int, int> histogram;
    for (const auto& r : roots) histogram[r.height()]++;
    // Dual partition of (h_1, h_2, ...): the j-th part counts heights with
    // at least j roots; read off ascending.
    std::vector<int> exps;
    for (int j = 1; j <= histogram[1]; ++j) {
        int part = 0;
        for (const auto& [ht, cnt] : histogram)
            if (cnt >= j) ++part;
        exps.push_back(part);
    }
    std::sort(exps.begin(), exps.end());
    if (static_cast<int>(exps.size()) != c.rank)
        throw std::logic_error("exponent count must equal the rank");
    return exps;
}

LatticeVector delta_vector(const CartanData& c)
{
    if (!c.affine) throw std::invalid_argument("delta_vector expects an affine datum");
    return LatticeVector(kernel_vector(dual(c).a));
}

FoldingData FoldingData::trivial(const CartanData& c)
{
    FoldingData f;
    f.cover = c;
    f.order = 1;
    f.orbitOf.resize(c.rank);
    f.sigma.resize(c.rank);
    for (int i = 0; i < c.rank; ++i) f.orbitOf[i] = f.sigma[i] = i;
    return f;
}

FoldingData folding_for_dual_affine(char kind, int rank)
{
    CartanData base = build_cartan(kind, rank);
    if (is_simply_laced(kind)) return FoldingData::trivial(base);

    FoldingData f;
    switch (kind) {
        case 'B': {
            // Cover A_{2r-1}, arm swap i <-> 2r-i (Bourbaki); fixed node r.
            int m = 2 * rank - 1;
            f.cover = build_cartan('A', m);
            f.order = 2;
            f.sigma.resize(m);
            f.orbitOf.resize(m);
            for (int i = 0; i < m; ++i) {
                f.sigma[i] = m - 1 - i;
                f.orbitOf[i] = std::min(i, m - 1 - i);
            }
            break;
        }
        case 'C': {
            // Cover D_{r+1}, swap of the two fork tips.
            int m = rank + 1;
            f.cover = build_cartan('D', m);
            f.order = 2;
            f.sigma.resize(m);
            f.orbitOf.resize(m);
            for (int i = 0; i < m; ++i) {
                f.sigma[i] = i;
                f.orbitOf[i] = std::min(i, rank - 1);
            }
            std::swap(f.sigma[m - 2], f.sigma[m - 1]);
            break;
        }
        case 'F': {
            // Cover E_6, arm swap (1 6)(3 5); orbits land on F_4 nodes so
            // that the folded matrix equals dual(F_4) on the nose.
            f.cover = build_cartan('E', 6);
            f.order = 2;
            f.sigma = {5, 1, 4, 3, 2, 0};
            f.orbitOf = {0, 3, 1, 2, 1, 0};
            break;
        }
        case 'G': {
            // Cover D_4, triality on the three outer nodes.
            f.cover = build_cartan('D', 4);
            f.order = 3;
            f.sigma = {2, 1, 3, 0};
            f.orbitOf = {1, 0, 1, 1};
            break;
        }
        default:
            throw std::invalid_argument("no folding for this type");
    }
    if (!(folded_cartan(f, kind, rank) == dual(base)))
        throw std::logic_error("folded cover does not reproduce the dual Cartan matrix");
    return f;
}

CartanData folded_cartan(const FoldingData& f, char kind, int rank)
{
    CartanData out{kind, rank, false, IntMatrix(rank, std::vector<int>(rank, 0))};
    // Representative per folded node; entries are orbit sums c_ij =
    // sum_{a in O_i} cover(a, rep(O_j)), independent of the representative.
    std::vector<int> rep(rank, -1);
    for (int i = 0; i < f.cover.rank; ++i)
        if (rep[f.orbitOf[i]] < 0) rep[f.orbitOf[i]] = i;
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            for (int a = 0; a < f.cover.rank; ++a)
                if (f.orbitOf[a] == i) out.a[i][j] += f.cover.a[a][rep[j]];
    return out;
}

int cartan_eigenspace_dim(const FoldingData& f, int s)
{
    if (s < 0 || s >= f.order) throw std::invalid_argument("eigenvalue index out of range");
    std::map<int, int> orbitSize;
    for (int i = 0; i < f.cover.rank; ++i) orbitSize[f.orbitOf[i]]++;
    int dim = 0;
    for (const auto& [orbit, m] : orbitSize)
        if (s % (f.order / m) == 0) ++dim;
    return dim;
}

int algebra_eigenspace_dim(const FoldingData& f, int s)
{
    if (s < 0 || s >= f.order) throw std::invalid_argument("eigenvalue index out of range");
    auto pos = positive_roots(f.cover);
    std::set<LatticeVector> remaining(pos.begin(), pos.end());
    int dim = cartan_eigenspace_dim(f, s);
    // sigma permutes root spaces; an orbit of size m spans one dimension in
    // each eigenvalue index divisible by k/m. Positive and negative halves
    // contribute symmetrically.
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
        if (s % (f.order / m) == 0) dim += 2;
    }
    return dim;
}

int imaginary_coroot_mult(const FoldingData& f, int n)
{
    if (n < 1) throw std::invalid_argument("imaginary coroot level must be positive");
    return cartan_eigenspace_dim(f, n % f.order);
}

std::vector<CorootWithMult> positive_coroots_with_mult(const CartanData& gprime, int H)
{
    if (gprime.affine) throw std::invalid_argument("expected the finite type g'");
    if (H < 1) throw std::invalid_argument("height bound must be positive");

    CartanData aff = build_cartan(gprime.kind, gprime.rank, true);
    CartanData coroots = dual(aff);
    LatticeVector delta = delta_vector(aff);
    FoldingData fold = folding_for_dual_affine(gprime.kind, gprime.rank);

    std::vector<CorootWithMult> out;
    for (const auto& r : positive_real_roots_bounded(coroots, H)) {
        CorootWithMult c;
        c.vector = r;
        c.level = r.coords[0] / delta.coords[0];
        out.push_back(c);
    }
    for (int n = 1; n * delta.height() <= H; ++n) {
        CorootWithMult c;
        c.vector = delta.scaled(n);
        c.level = n;
        c.multiplicity = imaginary_coroot_mult(fold, n);
        c.imaginary = true;
        out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](const CorootWithMult& a, const CorootWithMult& b) {
        if (a.vector.height() != b.vector.height()) return a.vector.height() < b.vector.height();
        if (a.vector != b.vector) return a.vector < b.vector;
        return a.imaginary < b.imaginary;
    });
    return out;
}

} // namespace affgk
