#include "affgk/io.hpp"

#include <sstream>

namespace affgk::io {

Json poly_json(const QLaurent& p)
{
    Json j = Json::object();
    for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c.str();
    return j;
}

Json qpoly_json(const QLaurent& p)
{
    Json j = Json::object();
    for (const auto& [e, c] : p.qPoly()) j[std::to_string(e)] = c.str();
    return j;
}

std::string qpoly_str(const QLaurent& p)
{
    auto poly = p.qPoly();
    if (poly.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
        Int a = it->second;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (it->first == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "q";
            if (it->first != 1) os << "^" << it->first;
        }
        first = false;
    }
    return os.str();
}

std::string rat_str(const Rat& r)
{
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

Json series_json(const GradedSeries& s)
{
    Json j;
    j["H"] = s.bound();
    Json terms = Json::array();
    for (const auto& [gamma, poly] : s.terms()) {
        Json t;
        t["gamma"] = gamma.coords;
        t["poly"] = poly_json(poly);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Json roots_json(const std::vector<CorootWithMult>& roots)
{
    Json arr = Json::array();
    for (const auto& r : roots) {
        Json j;
        j["coords"] = r.vector.coords;
        j["height"] = r.vector.height();
        j["mult"] = r.multiplicity;
        j["kind"] = r.imaginary ? "imaginary" : "real";
        arr.push_back(std::move(j));
    }
    return arr;
}

std::string roots_csv(const std::vector<CorootWithMult>& roots)
{
    std::ostringstream os;
    os << "coords;height;mult;kind\n";
    for (const auto& r : roots) {
        for (std::size_t i = 0; i < r.vector.coords.size(); ++i)
            os << (i ? " " : "") << r.vector.coords[i];
        os << ";" << r.vector.height() << ";" << r.multiplicity << ";"
           << (r.imaginary ? "imaginary" : "real") << "\n";
    }
    return os.str();
}

Json report_json(const GKReport& r, const std::optional<Int>& evalQ)
{
    Json j;
    j["type"] = std::string(1, r.kind);
    j["rank"] = r.rank;
    j["affine"] = r.affine;
    j["H"] = r.H;
    j["series"] = series_json(r.series);
    Json counts = Json::array();
    for (const auto& [gamma, poly] : r.counts) {
        Json c;
        c["gamma"] = gamma.coords;
        c["height"] = gamma.height();
        if (evalQ)
            c["count"] = rat_str(poly.evalAtQ(Rat(*evalQ)));
        else
            c["count_poly"] = qpoly_json(poly);
        counts.push_back(std::move(c));
    }
    j["counts"] = std::move(counts);
    return j;
}

std::string report_csv(const GKReport& r, const std::optional<Int>& evalQ)
{
    std::ostringstream os;
    os << (evalQ ? "gamma;height;count\n" : "gamma;height;count_poly\n");
    for (const auto& [gamma, poly] : r.counts) {
        for (std::size_t i = 0; i < gamma.coords.size(); ++i)
            os << (i ? " " : "") << gamma.coords[i];
        os << ";" << gamma.height() << ";";
        if (evalQ)
            os << rat_str(poly.evalAtQ(Rat(*evalQ)));
        else
            os << qpoly_str(poly);
        os << "\n";
    }
    return os.str();
}

Json zseries_json(const ZSeries& s, const std::optional<Int>& evalQ)
{
    Json j;
    j["zmax"] = s.zmax();
    Json coeffs = Json::array();
    for (int n = 0; n <= s.zmax(); ++n) {
        Json c;
        c["n"] = n;
        if (evalQ)
            c["value"] = rat_str(s[n].evalAtQ(Rat(*evalQ)));
        else
            c["poly"] = poly_json(s[n]);
        coeffs.push_back(std::move(c));
    }
    j["coefficients"] = std::move(coeffs);
    return j;
}

Json wspace_json(const PrincipalInvariantSpace& W)
{
    Json j;
    j["nmax"] = W.nmax();
    Json levels = Json::array();
    for (int n = 1; n <= W.nmax(); ++n) {
        Json level;
        level["n"] = n;
        Json strings = Json::array();
        for (const auto& [nd, m] : W.table()) {
            if (nd.first != n) continue;
            Json s;
            s["d"] = nd.second;
            s["mult"] = m;
            strings.push_back(std::move(s));
        }
        level["strings"] = std::move(strings);
        level["dim"] = W.dimAtLevel(n);
        levels.push_back(std::move(level));
    }
    j["levels"] = std::move(levels);
    return j;
}

Json oracle_json(const OrbitCount& c)
{
    Json j;
    j["count"] = c.count.str();
    j["stabilizedPoleBound"] = c.stabilizedPoleBound;
    j["enumerated"] = c.enumerated.str();
    return j;
}

Json consistency_json(const ConsistencyReport& r)
{
    Json j;
    j["pass"] = r.pass;
    j["checked"] = r.rows.size();
    Json failures = Json::array();
    for (const auto& row : r.rows) {
        if (row.lhs == Rat(row.rhs)) continue;
        Json f;
        f["gamma"] = row.gamma.coords;
        f["lhs"] = rat_str(row.lhs);
        f["rhs"] = row.rhs.str();
        failures.push_back(std::move(f));
    }
    j["failures"] = std::move(failures);
    return j;
}

} // namespace affgk::io
