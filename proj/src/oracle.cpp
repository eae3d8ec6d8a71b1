#include "affgk/oracle.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace affgk {

namespace {

bool is_prime(int p)
{
    if (p < 2) return false;
    for (int f = 2; f * f <= p; ++f)
        if (p % f == 0) return false;
    return true;
}

/* Dense polynomial in t^{-1} over F_p; c[j] is the coefficient of t^{-j}.
 * Only the generic (reference) profile computation uses this type; the
 * counting loops work on raw coefficient arrays. */
struct Pole {
    std::vector<int> c;  // may be empty (the zero polynomial)

    // Order of the pole: largest j with c[j] != 0, or -1 for zero.
    int order() const
    {
        for (int j = static_cast<int>(c.size()) - 1; j >= 0; --j)
            if (c[j]) return j;
        return -1;
    }
};

Pole poly_mul(const Pole& a, const Pole& b, int p)
{
    if (a.c.empty() || b.c.empty()) return {};
    Pole r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = (r.c[i + j] + a.c[i] * b.c[j]) % p;
    }
    return r;
}

Pole poly_axpy(const Pole& a, const Pole& b, int sign, int p)
{
    Pole r;
    r.c.assign(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t j = 0; j < r.c.size(); ++j) {
        int x = (j < a.c.size() ? a.c[j] : 0) + sign * (j < b.c.size() ? b.c[j] : 0);
        r.c[j] = ((x % p) + p) % p;
    }
    return r;
}

/* Determinant of a k x k polynomial matrix by first-row expansion; k <= 2
 * in practice, so the recursion is shallow. */
Pole poly_det(const std::vector<std::vector<Pole>>& mat, int p)
{
    const std::size_t k = mat.size();
    if (k == 1) return mat[0][0];
    Pole det;
    for (std::size_t col = 0; col < k; ++col) {
        std::vector<std::vector<Pole>> minor(k - 1);
        for (std::size_t i = 1; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (j != col) minor[i - 1].push_back(mat[i][j]);
        Pole term = poly_mul(mat[0][col], poly_det(minor, p), p);
        det = poly_axpy(det, term, col % 2 ? -1 : 1, p);
    }
    return det;
}

void next_subset(std::vector<int>& subset, int n, bool& done)
{
    const int k = static_cast<int>(subset.size());
    int i = k - 1;
    while (i >= 0 && subset[i] == n - k + i) --i;
    if (i < 0) {
        done = true;
        return;
    }
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
}

/* Odometer over coefficient vectors (base-p counters of length N). */
bool advance(std::vector<int>& digits, int p)
{
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (++digits[i] < p) return true;
        digits[i] = 0;
    }
    return false;
}

std::vector<int> decode(Int index, int p, int N)
{
    std::vector<int> digits(N, 0);
    for (int i = 0; i < N && index > 0; ++i) {
        digits[i] = static_cast<int>(index % p);
        index /= p;
    }
    return digits;
}

// Pole order of a coefficient vector: 1 + largest nonzero index, 0 for zero.
int pole_order(const std::vector<int>& digits)
{
    for (int j = static_cast<int>(digits.size()) - 1; j >= 0; --j)
        if (digits[j]) return j + 1;
    return 0;
}

void validate_query(const OrbitQuery& qry)
{
    if (qry.m != 2 && qry.m != 3)
        throw std::invalid_argument("only SL_2 and SL_3 are enumerable at desk scale");
    if (!is_prime(qry.p)) throw std::invalid_argument("p must be prime");
    if (static_cast<int>(qry.gamma.size()) != qry.m - 1)
        throw std::invalid_argument("gamma must have m-1 coordinates");
    for (int c : qry.gamma)
        if (c < 0) throw std::invalid_argument("gamma coordinates must be nonnegative");
    if (qry.threads < 1) throw std::invalid_argument("threads must be positive");
}

Int count_sl2(const OrbitQuery& qry, int N, Int xLo, Int xHi)
{
    const int target = qry.gamma[0];
    Int count(0);
    if (xHi <= xLo) return count;
    std::vector<int> x = decode(xLo, qry.p, N);
    for (Int idx = xLo; idx < xHi; ++idx) {
        if (pole_order(x) == target) ++count;
        advance(x, qry.p);
    }
    return count;
}

/* SL_3: entries x = u12, y = u13, z = u23. The two profile values are
 *   P1 = -max(pole x, pole y),  P2 = -max(pole z, pole(x z - y)),
 * since the leading principal minors are 1 and the remaining 2x2 minors of
 * the top two rows are z and x z - y. The product x z has pole part beyond
 * the reach of y; that tail is hoisted out of the innermost loop. */
Int count_sl3(const OrbitQuery& qry, int N, Int xLo, Int xHi)
{
    const int p = qry.p;
    const int c1 = qry.gamma[0], c2 = qry.gamma[1];
    Int count(0);
    if (xHi <= xLo) return count;

    std::vector<int> x = decode(xLo, p, N);
    std::vector<int> z(N, 0), y(N, 0), w(2 * N + 1, 0);
    for (Int xi = xLo; xi < xHi; ++xi, advance(x, p)) {
        const int polex = pole_order(x);
        std::fill(z.begin(), z.end(), 0);
        do {
            const int polez = pole_order(z);
            std::fill(w.begin(), w.end(), 0);
            for (int i = 0; i < N; ++i) {
                if (!x[i]) continue;
                for (int j = 0; j < N; ++j) w[i + j + 2] = (w[i + j + 2] + x[i] * z[j]) % p;
            }
            int tail = 0;
            for (int k = 2 * N; k > N; --k)
                if (w[k]) {
                    tail = k;
                    break;
                }
            std::fill(y.begin(), y.end(), 0);
            do {
                const int poley = pole_order(y);
                int polew = tail;
                if (polew == 0) {
                    for (int k = N; k >= 1; --k)
                        if (w[k] != y[k - 1]) {
                            polew = k;
                            break;
                        }
                }
                if (std::max(polex, poley) == c1 && std::max(polez, polew) == c2) ++count;
            } while (advance(y, p));
        } while (advance(z, p));
    }
    return count;
}

} // namespace

int UnipotentLaurentMatrix::entryIndex(int m, int row, int col)
{
    if (!(1 <= row && row < col && col <= m)) throw std::invalid_argument("not above-diagonal");
    int idx = 0;
    for (int i = 1; i < row; ++i) idx += m - i;
    return idx + (col - row - 1);
}

std::vector<int> minor_valuation_profile(const UnipotentLaurentMatrix& u)
{
    if (static_cast<int>(u.entries.size()) != UnipotentLaurentMatrix::entryCount(u.m))
        throw std::invalid_argument("entry list does not match the matrix size");
    // Entry (i, j) as a polynomial in t^{-1}; diagonal 1, below zero,
    // above-diagonal entries shifted by one (zero constant term).
    auto entry = [&](int row, int col) -> Pole {
        if (row == col) return Pole{{1}};
        if (row > col) return {};
        const auto& coeffs = u.entries[UnipotentLaurentMatrix::entryIndex(u.m, row, col)];
        Pole e;
        e.c.assign(coeffs.size() + 1, 0);
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            int v = ((coeffs[j] % u.p) + u.p) % u.p;
            e.c[j + 1] = v;
        }
        return e;
    };

    std::vector<int> profile;
    for (int k = 1; k < u.m; ++k) {
        int best = 1;  // sentinel above any valuation; cols {1..k} force <= 0
        std::vector<int> cols(k);  // 0-based column subset
        for (int i = 0; i < k; ++i) cols[i] = i;
        bool done = false;
        while (!done) {
            std::vector<std::vector<Pole>> mat(k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) mat[i].push_back(entry(i + 1, cols[j] + 1));
            int ord = poly_det(mat, u.p).order();
            if (ord >= 0) best = (best == 1) ? -ord : std::min(best, -ord);
            next_subset(cols, u.m, done);
        }
        profile.push_back(best);
    }
    return profile;
}

Int count_at_pole_bound_slice(const OrbitQuery& qry, int N, Int xLo, Int xHi)
{
    validate_query(qry);
    if (N < 0) throw std::invalid_argument("pole bound must be nonnegative");
    Int space = int_pow(Int(qry.p), N);
    xLo = std::max(xLo, Int(0));
    xHi = std::min(xHi, space);
    if (N == 0) {
        // Single all-zero matrix; it matches exactly when gamma = 0.
        bool zero = std::all_of(qry.gamma.begin(), qry.gamma.end(), [](int c) { return c == 0; });
        return (zero && xLo == 0 && xHi >= 0) ? Int(1) : Int(0);
    }
    return qry.m == 2 ? count_sl2(qry, N, xLo, xHi) : count_sl3(qry, N, xLo, xHi);
}

Int count_at_pole_bound(const OrbitQuery& qry, int N)
{
    validate_query(qry);
    if (N == 0 || qry.threads == 1 || qry.m == 2)
        return count_at_pole_bound_slice(qry, N, 0, int_pow(Int(qry.p), N));

    Int space = int_pow(Int(qry.p), N);
    int nthreads = qry.threads;
    Int chunk = (space + nthreads - 1) / nthreads;
    std::vector<std::future<Int>> futures;
    for (int t = 0; t < nthreads; ++t) {
        Int lo = chunk * t;
        Int hi = std::min(space, Int(lo + chunk));
        futures.push_back(std::async(std::launch::async, [qry, N, lo, hi] {
            return count_at_pole_bound_slice(qry, N, lo, hi);
        }));
    }
    Int total(0);
    for (auto& f : futures) total += f.get();
    return total;
}

OrbitCount count_points(const OrbitQuery& qry)
{
    validate_query(qry);
    const int entries = UnipotentLaurentMatrix::entryCount(qry.m);
    int height = 0;
    for (int c : qry.gamma) height += c;

    OrbitCount result;
    result.enumerated = 0;

    if (qry.poleBound) {
        int N = *qry.poleBound;
        result.count = count_at_pole_bound(qry, N);
        result.stabilizedPoleBound = N;
        result.enumerated = int_pow(Int(qry.p), static_cast<unsigned long>(entries) * N);
        return result;
    }

    /* Stabilization: counts are non-decreasing in the pole bound and
     * eventually constant (the intersection is a finite set); three equal
     * consecutive counts end the search. The window never needs to move for
     * SL_2/SL_3 -- every entry of a member matrix has pole order at most
     * max_k gamma_k <= |gamma| -- but the ceiling guards a bound bug. */
    const int ceiling = std::max(qry.ceilingFactor * height, height + 2);
    std::vector<Int> window;
    int N = height;
    for (int bound = N; bound <= N + 2; ++bound) {
        window.push_back(count_at_pole_bound(qry, bound));
        result.enumerated += int_pow(Int(qry.p), static_cast<unsigned long>(entries) * bound);
    }
    while (!(window[0] == window[1] && window[1] == window[2])) {
        ++N;
        if (N + 2 > ceiling)
            throw std::runtime_error("pole bound ceiling exceeded without stabilization");
        window.erase(window.begin());
        window.push_back(count_at_pole_bound(qry, N + 2));
        result.enumerated += int_pow(Int(qry.p), static_cast<unsigned long>(entries) * (N + 2));
    }
    result.count = window[0];
    result.stabilizedPoleBound = N;
    return result;
}

} // namespace affgk
