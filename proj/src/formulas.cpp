#include "affgk/formulas.hpp"

#include <algorithm>
#include <stdexcept>

namespace affgk {

GKReport::GKReport(char k, int r, bool aff, int h, GradedSeries s)
    : kind(k), rank(r), affine(aff), H(h), series(std::move(s))
{
    for (const auto& [gamma, coeff] : series.terms()) {
        QLaurent count = coeff.shifted(-gamma.height());
        if (!count.isPolyInQ())
            throw std::logic_error("count at " + gamma.str() + " is not a polynomial in q");
        counts[gamma] = std::move(count);
    }
}

GKReport finite_gk_rhs(const CartanData& gprime, int H)
{
    if (gprime.affine) throw std::invalid_argument("expected a finite datum");
    if (H < 1) throw std::invalid_argument("height bound must be positive");
    GradedSeries s = GradedSeries::one(gprime.rank, H);
    for (const auto& alpha : positive_roots(gprime)) {
        if (alpha.height() > H) continue;
        s *= binomial_factor(alpha, QLaurent::v(), 1, H);
        s *= binomial_factor(alpha, QLaurent::one(), -1, H);
    }
    return GKReport(gprime.kind, gprime.rank, false, H, std::move(s));
}

ZSeries correction_factor(const PrincipalInvariantSpace& W, int zmax)
{
    if (W.nmax() < zmax) throw std::invalid_argument("W does not cover the requested levels");
    std::vector<SuperGenerator> gens;
    for (const auto& [nd, m] : W.table()) {
        if (nd.first > zmax) continue;
        for (int i = 0; i < m; ++i) {
            gens.push_back({nd.first, QLaurent::v(nd.second), false});
            gens.push_back({nd.first, QLaurent::v(nd.second + 1), true});
        }
    }
    return super_sym_character(gens, zmax);
}

namespace {

int mobius(int n)
{
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

Int binomial(const Int& n, int k)
{
    Int num(1), den(1);
    for (int i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

void partitions_of(int n, int maxPart, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, maxPart); p >= 1; --p) {
        cur.push_back(p);
        partitions_of(n - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

Int closed_point_count(int d, const Int& q)
{
    // Necklace count over #points(F_{q^e}) = q^e - 1.
    Int sum(0);
    for (int e = 1; e <= d; ++e) {
        if (d % e) continue;
        sum += Int(mobius(d / e)) * (int_pow(q, e) - 1);
    }
    return sum / d;
}

bool is_prime_power(const Int& q)
{
    if (q < 2) return false;
    Int n = q;
    Int p(0);
    for (Int f(2); f * f <= n; ++f)
        if (n % f == 0) {
            p = f;
            break;
        }
    if (p == 0) return true;  // q itself prime
    while (n % p == 0) n /= p;
    return n == 1;
}

Int stratum_point_count(const std::vector<int>& partition, const Int& q)
{
    if (partition.empty()) return Int(1);
    int n = 0;
    for (int part : partition) {
        if (part < 1) throw std::invalid_argument("partition parts must be positive");
        n += part;
    }

    // Class sizes: a configuration assigns, to each multiplicity value,
    // a Frobenius-stable set of geometric points; the sets are disjoint.
    std::vector<int> values;   // distinct multiplicity values
    std::vector<int> target;   // required set size per value
    {
        std::map<int, int> byValue;
        for (int part : partition) byValue[part]++;
        for (const auto& [value, count] : byValue) {
            values.push_back(value);
            target.push_back(count);
        }
    }
    const int nclasses = static_cast<int>(values.size());

    /* Expand prod_{d >= 1} (1 + sum_j t_j^d)^{a_d} and read off the
     * coefficient of prod_j t_j^{target_j}: a_d closed points of degree d,
     * each joining at most one class and contributing d geometric points
     * to it. Degrees beyond n cannot fit. */
    std::map<std::vector<int>, Int> dict;
    dict[std::vector<int>(nclasses, 0)] = Int(1);
    for (int d = 1; d <= n; ++d) {
        Int ad = closed_point_count(d, q);
        // Choices (k_0, ..., k_{J-1}) of how many degree-d points join each
        // class, with ordered disjoint selection counted by falling binomials.
        std::vector<std::pair<std::vector<int>, Int>> factor;
        std::vector<int> pick(nclasses, 0);
        auto rec = [&](auto&& self, int j, Int ways, Int remaining) -> void {
            if (j == nclasses) {
                factor.push_back({pick, ways});
                return;
            }
            for (int k = 0; k * d <= target[j]; ++k) {
                Int choose = binomial(remaining, k);
                if (k > 0 && choose == 0) break;
                pick[j] = k;
                self(self, j + 1, ways * choose, remaining - k);
                pick[j] = 0;
            }
        };
        rec(rec, 0, Int(1), ad);

        std::map<std::vector<int>, Int> next;
        for (const auto& [sizes, coeff] : dict)
            for (const auto& [pickSizes, ways] : factor) {
                std::vector<int> merged = sizes;
                bool fits = true;
                for (int j = 0; j < nclasses; ++j) {
                    merged[j] += d * pickSizes[j];
                    if (merged[j] > target[j]) {
                        fits = false;
                        break;
                    }
                }
                if (fits) next[merged] += coeff * ways;
            }
        dict = std::move(next);
    }
    auto it = dict.find(target);
    return it == dict.end() ? Int(0) : it->second;
}

std::vector<NumericZSeries> correction_factor_via_partitions(const PrincipalInvariantSpace& W,
                                                             int zmax,
                                                             const std::vector<Int>& qSamples)
{
    if (W.nmax() < zmax) throw std::invalid_argument("W does not cover the requested levels");

    std::vector<std::vector<std::vector<int>>> parts(zmax + 1);
    for (int n = 1; n <= zmax; ++n) {
        std::vector<int> cur;
        partitions_of(n, n, cur, parts[n]);
    }

    std::vector<NumericZSeries> out;
    for (const Int& q : qSamples) {
        if (q < 2) throw std::invalid_argument("sample q must be at least 2");
        if (!is_prime_power(q)) throw std::invalid_argument("sample q must be a prime power");
        Rat v = Rat(1) / Rat(q);

        // w(m): numeric z^m coefficient of the symmetric algebra on the
        // twisted generators, every (n, d) carrying trace q^{-(d+1)}.
        std::vector<Rat> w(zmax + 1, Rat(0));
        w[0] = 1;
        for (const auto& [nd, m] : W.table()) {
            if (nd.first > zmax) continue;
            Rat trace = rat_pow(v, nd.second + 1);
            for (int i = 0; i < m; ++i)
                for (int k = nd.first; k <= zmax; ++k) w[k] += trace * w[k - nd.first];
        }

        NumericZSeries series;
        series.q = q;
        series.coeffs.assign(zmax + 1, Rat(0));
        series.coeffs[0] = 1;
        for (int n = 1; n <= zmax; ++n) {
            Rat sum(0);
            for (const auto& p : parts[n]) {
                Rat weight(1);
                for (int part : p) weight *= w[part];
                sum += Rat(stratum_point_count(p, q)) * weight;
            }
            series.coeffs[n] = sum;
        }
        out.push_back(std::move(series));
    }
    return out;
}

GKReport affine_gk_rhs(const CartanData& gprime, int H)
{
    if (gprime.affine) throw std::invalid_argument("expected the finite type g'");
    if (H < 1) throw std::invalid_argument("height bound must be positive");
    const int rank = gprime.rank + 1;

    GradedSeries s = GradedSeries::one(rank, H);
    for (const auto& c : positive_coroots_with_mult(gprime, H)) {
        s *= binomial_factor_pow(c.vector, QLaurent::v(), 1, c.multiplicity, H);
        s *= binomial_factor_pow(c.vector, QLaurent::one(), -1, c.multiplicity, H);
    }

    CartanData aff = build_cartan(gprime.kind, gprime.rank, true);
    LatticeVector delta = delta_vector(aff);
    int zmax = H / delta.height();
    if (zmax >= 1) {
        ZSeries corr = correction_factor(compute_W(gprime, zmax), zmax);
        GradedSeries corrSeries = GradedSeries::one(rank, H);
        for (int n = 1; n <= zmax; ++n) corrSeries.set(delta.scaled(n), corr[n]);
        s *= corrSeries;
    }
    return GKReport(gprime.kind, gprime.rank, true, H, std::move(s));
}

ConsistencyReport finite_consistency_check(const CartanData& gprime, int H,
                                           const std::map<LatticeVector, Int>& counts,
                                           const Int& q)
{
    if (gprime.affine) throw std::invalid_argument("expected a finite datum");
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    std::vector<WeightedRoot> roots;
    for (const auto& r : positive_roots(gprime)) roots.push_back({r, 1});

    auto simplex = height_simplex(gprime.rank, H);
    for (const auto& g : simplex)
        if (!counts.count(g))
            throw std::invalid_argument("missing count at " + g.str());

    auto weighted = kostant_weighted_table(roots, gprime.rank, H);
    Rat qr(q);

    ConsistencyReport report;
    for (const auto& gamma : simplex) {
        Rat lhs(0);
        for (const auto& gp : simplex) {
            if (!gp.leq(gamma)) continue;
            lhs += Rat(counts.at(gp)) * rat_pow(qr, -gp.height()) *
                   weighted.at(gamma - gp).evalAtQ(qr);
        }
        Int rhs = kostant_count(gamma, roots);
        report.rows.push_back({gamma, lhs, rhs});
        if (lhs != Rat(rhs)) report.pass = false;
    }
    return report;
}

} // namespace affgk
