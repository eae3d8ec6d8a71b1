#include "affgk/cartan.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "affgk/numeric.hpp"
#include "affgk/roots.hpp"

namespace affgk {

std::vector<LatticeVector> height_simplex(int rank, int H)
{
    std::vector<LatticeVector> out;
    LatticeVector cur = LatticeVector::zero(rank);
    // Depth-first over coordinates keeps the output lexicographically sorted.
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == rank) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur.coords[pos] = v;
            self(self, pos + 1, remaining - v);
        }
        cur.coords[pos] = 0;
    };
    rec(rec, 0, H);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_simply_laced(char kind)
{
    return kind == 'A' || kind == 'D' || kind == 'E';
}

namespace {

void check_type(char kind, int rank)
{
    bool ok = false;
    switch (kind) {
        case 'A': ok = rank >= 1; break;
        case 'B': ok = rank >= 2; break;
        case 'C': ok = rank >= 2; break;
        case 'D': ok = rank >= 3; break;   // D_3 is A_3 with renumbered nodes
        case 'E': ok = rank >= 6 && rank <= 8; break;
        case 'F': ok = rank == 4; break;
        case 'G': ok = rank == 2; break;
        default: ok = false;
    }
    if (!ok)
        throw std::invalid_argument(std::string("invalid finite type ") + kind +
                                    std::to_string(rank));
}

IntMatrix finite_matrix(char kind, int rank)
{
    IntMatrix a(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i) a[i][i] = 2;
    auto bond = [&](int i, int j, int aij, int aji) {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    auto chain = [&](int from, int to) {
        for (int i = from; i < to; ++i) bond(i, i + 1, -1, -1);
    };
    switch (kind) {
        case 'A':
            chain(0, rank - 1);
            break;
        case 'B':
            chain(0, rank - 2);
            bond(rank - 2, rank - 1, -1, -2);  // alpha_r short
            break;
        case 'C':
            chain(0, rank - 2);
            bond(rank - 2, rank - 1, -2, -1);  // alpha_r long
            break;
        case 'D':
            chain(0, rank - 2);
            bond(rank - 3, rank - 1, -1, -1);
            break;
        case 'E':
            // Bourbaki: chain 1-3-4-5-...-r with node 2 attached to node 4.
            bond(0, 2, -1, -1);
            chain(2, rank - 1);
            bond(1, 3, -1, -1);
            break;
        case 'F':
            bond(0, 1, -1, -1);
            bond(1, 2, -1, -2);  // arrow toward the short pair
            bond(2, 3, -1, -1);
            break;
        case 'G':
            bond(0, 1, -3, -1);  // alpha_1 short, alpha_2 long
            break;
    }
    return a;
}

} // namespace

std::vector<int> symmetrizer(const CartanData& c)
{
    const int n = c.size();
    std::vector<Rat> x(n, Rat(0));
    std::vector<bool> seen(n, false);
    // Propagate x_j / x_i = a_ij / a_ji along bonds of the (connected) diagram.
    std::vector<int> stack;
    x[0] = 1;
    seen[0] = true;
    stack.push_back(0);
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < n; ++j) {
            if (j == i || c.a[i][j] == 0 || seen[j]) continue;
            x[j] = x[i] * Rat(c.a[i][j]) / Rat(c.a[j][i]);
            seen[j] = true;
            stack.push_back(j);
        }
    }
    for (bool s : seen)
        if (!s) throw std::invalid_argument("disconnected diagram has no canonical symmetrizer");
    Int lcm_den(1);
    for (const auto& v : x) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(v));
    std::vector<Int> scaled(n);
    Int g(0);
    for (int i = 0; i < n; ++i) {
        scaled[i] = numerator(x[i]) * (lcm_den / denominator(x[i]));
        g = boost::multiprecision::gcd(g, scaled[i]);
    }
    std::vector<int> d(n);
    for (int i = 0; i < n; ++i) d[i] = static_cast<int>(scaled[i] / g);
    return d;
}

Int matrix_determinant(const IntMatrix& a)
{
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
    Rat det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (m[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) return Int(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (int row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            Rat f = m[row][col] / m[col][col];
            for (int j = col; j < n; ++j) m[row][j] -= f * m[col][j];
        }
    }
    if (denominator(det) != 1) throw std::logic_error("integer determinant expected");
    return numerator(det);
}

std::vector<int> kernel_vector(const IntMatrix& a)
{
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = a[i][j];

    // Row-reduce; record pivot column per row.
    std::vector<int> pivotCol;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int p = -1;
        for (int r = row; r < n; ++r)
            if (m[r][col] != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(m[p], m[row]);
        Rat lead = m[row][col];
        for (int j = 0; j < n; ++j) m[row][j] /= lead;
        for (int r = 0; r < n; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (int j = 0; j < n; ++j) m[r][j] -= f * m[row][j];
        }
        pivotCol.push_back(col);
        ++row;
    }
    if (static_cast<int>(pivotCol.size()) != n - 1)
        throw std::runtime_error("kernel is not one-dimensional");

    int freeCol = 0;
    for (int col = 0; col < n; ++col)
        if (std::find(pivotCol.begin(), pivotCol.end(), col) == pivotCol.end()) freeCol = col;

    std::vector<Rat> ker(n, Rat(0));
    ker[freeCol] = 1;
    for (std::size_t r = 0; r < pivotCol.size(); ++r) ker[pivotCol[r]] = -m[r][freeCol];

    Int lcm_den(1);
    for (const auto& v : ker) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(v));
    std::vector<Int> iv(n);
    Int g(0);
    for (int i = 0; i < n; ++i) {
        iv[i] = numerator(ker[i]) * (lcm_den / denominator(ker[i]));
        g = boost::multiprecision::gcd(g, iv[i]);
    }
    std::vector<int> out(n);
    bool anyNeg = false, anyPos = false;
    for (int i = 0; i < n; ++i) {
        out[i] = static_cast<int>(iv[i] / g);
        anyNeg = anyNeg || out[i] < 0;
        anyPos = anyPos || out[i] > 0;
    }
    if (anyNeg && anyPos) throw std::runtime_error("kernel vector has mixed signs");
    if (anyNeg)
        for (int& v : out) v = -v;
    return out;
}

void validate_cartan(const CartanData& c)
{
    const int n = c.size();
    if (static_cast<int>(c.a.size()) != n)
        throw std::invalid_argument("Cartan matrix size does not match rank");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(c.a[i].size()) != n)
            throw std::invalid_argument("Cartan matrix is not square");
        if (c.a[i][i] != 2) throw std::invalid_argument("Cartan diagonal must equal 2");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (c.a[i][j] > 0) throw std::invalid_argument("positive off-diagonal Cartan entry");
            if ((c.a[i][j] == 0) != (c.a[j][i] == 0))
                throw std::invalid_argument("asymmetric zero pattern in Cartan matrix");
        }
    }
    if (!c.affine) {
        if (matrix_determinant(c.a) == 0)
            throw std::invalid_argument("finite Cartan matrix must be nonsingular");
    } else {
        auto ker = kernel_vector(c.a);  // throws unless one-dimensional
        for (int v : ker)
            if (v <= 0) throw std::invalid_argument("affine kernel vector must be positive");
    }
}

CartanData build_cartan(char kind, int rank, bool affine)
{
    check_type(kind, rank);
    CartanData fin{kind, rank, false, finite_matrix(kind, rank)};
    if (!affine) return fin;

    /* Untwisted extension by alpha_0 = delta - theta. The new pairings are
     * read off the finite datum: <theta, alpha_j^vee> comes straight from
     * the matrix, and <alpha_j, theta^vee> = 2(alpha_j,theta)/(theta,theta)
     * through the symmetrized form B = diag(d) * A. */
    auto roots = positive_roots(fin);
    const LatticeVector* theta = nullptr;
    int best = -1;
    for (const auto& r : roots)
        if (r.height() > best) {
            best = r.height();
            theta = &r;
        }
    auto d = symmetrizer(fin);
    const auto& cth = theta->coords;

    std::vector<long> Ac(rank, 0), Bc(rank, 0);
    long norm = 0;
    for (int j = 0; j < rank; ++j) {
        for (int i = 0; i < rank; ++i) {
            Ac[j] += static_cast<long>(fin.a[j][i]) * cth[i];
            Bc[j] += static_cast<long>(d[j]) * fin.a[j][i] * cth[i];
        }
        norm += Bc[j] * cth[j];
    }

    CartanData aff{kind, rank, true, IntMatrix(rank + 1, std::vector<int>(rank + 1, 0))};
    aff.a[0][0] = 2;
    for (int j = 0; j < rank; ++j) {
        long num = 2 * Bc[j];
        if (num % norm != 0) throw std::logic_error("highest root pairing not integral");
        aff.a[0][j + 1] = static_cast<int>(-num / norm);
        aff.a[j + 1][0] = static_cast<int>(-Ac[j]);
        for (int i = 0; i < rank; ++i) aff.a[j + 1][i + 1] = fin.a[j][i];
    }
    validate_cartan(aff);
    return aff;
}

CartanData dual(const CartanData& c)
{
    CartanData d = c;
    const int n = c.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d.a[i][j] = c.a[j][i];
    return d;
}

std::vector<std::pair<char, int>> finite_types_up_to_rank(int maxRank)
{
    std::vector<std::pair<char, int>> out;
    for (int r = 1; r <= maxRank; ++r) out.push_back({'A', r});
    for (int r = 2; r <= maxRank; ++r) out.push_back({'B', r});
    // B_2 and C_2 name the same algebra with transposed numbering; both stay.
    for (int r = 2; r <= maxRank; ++r) out.push_back({'C', r});
    for (int r = 4; r <= maxRank; ++r) out.push_back({'D', r});
    for (int r = 6; r <= std::min(maxRank, 8); ++r) out.push_back({'E', r});
    if (maxRank >= 4) out.push_back({'F', 4});
    if (maxRank >= 2) out.push_back({'G', 2});
    return out;
}

} // namespace affgk
