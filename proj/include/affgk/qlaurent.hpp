#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "affgk/numeric.hpp"

namespace affgk {

/// Laurent polynomial in the formal symbol q, stored internally in
/// v = q^{-1}. Every coefficient produced by the generating-function
/// operations is a genuine polynomial in v; exponents below zero only occur
/// through the explicit count extraction (multiplication by q^{|gamma|}),
/// where they represent nonnegative powers of q. Zero coefficients are
/// never stored, so representation equality is value equality.
class QLaurent {
public:
    QLaurent() = default;

    static QLaurent zero() { return {}; }
    static QLaurent one() { return term(1, 0); }

    /// c * v^e. The v-power factory rejects negative exponents; Laurent
    /// shifts go through shifted().
    static QLaurent v(int e = 1)
    {
        if (e < 0) throw std::invalid_argument("negative v-exponent at construction");
        return term(1, e);
    }

    static QLaurent term(Int c, int e)
    {
        QLaurent p;
        if (c != 0) p.c_[e] = std::move(c);
        return p;
    }

    bool isZero() const { return c_.empty(); }

    Int coeff(int e) const
    {
        auto it = c_.find(e);
        return it == c_.end() ? Int(0) : it->second;
    }

    int minExp() const
    {
        if (c_.empty()) throw std::logic_error("minExp of zero");
        return c_.begin()->first;
    }

    int maxExp() const
    {
        if (c_.empty()) throw std::logic_error("maxExp of zero");
        return c_.rbegin()->first;
    }

    bool isPolyInV() const { return c_.empty() || minExp() >= 0; }
    bool isPolyInQ() const { return c_.empty() || maxExp() <= 0; }

    QLaurent& operator+=(const QLaurent& o)
    {
        for (const auto& [e, c] : o.c_) addTerm(c, e);
        return *this;
    }

    QLaurent& operator-=(const QLaurent& o)
    {
        for (const auto& [e, c] : o.c_) addTerm(-c, e);
        return *this;
    }

    friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
    friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }

    friend QLaurent operator*(const QLaurent& a, const QLaurent& b)
    {
        QLaurent r;
        for (const auto& [ea, ca] : a.c_)
            for (const auto& [eb, cb] : b.c_) r.addTerm(ca * cb, ea + eb);
        return r;
    }

    QLaurent& operator*=(const QLaurent& o) { return *this = *this * o; }

    friend QLaurent operator-(const QLaurent& a)
    {
        QLaurent r;
        for (const auto& [e, c] : a.c_) r.c_[e] = -c;
        return r;
    }

    /// Multiply by v^k (k of either sign).
    QLaurent shifted(int k) const
    {
        QLaurent r;
        for (const auto& [e, c] : c_) r.c_[e + k] = c;
        return r;
    }

    void addTerm(const Int& c, int e)
    {
        if (c == 0) return;
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) c_.erase(it);
        }
    }

    /// Substitute a numeric q (exact rational). q = 0 has no meaning for a
    /// Laurent coefficient and is rejected.
    Rat evalAtQ(const Rat& q) const
    {
        if (q == 0) throw std::invalid_argument("evaluation at q = 0");
        Rat acc(0);
        for (const auto& [e, c] : c_) acc += Rat(c) * rat_pow(q, -static_cast<long>(e));
        return acc;
    }

    /// The v -> 0 specialization (constant coefficient); only meaningful for
    /// polynomials in v.
    Int atVZero() const
    {
        if (!isPolyInV()) throw std::logic_error("v->0 limit of a pole");
        return coeff(0);
    }

    /// View as a polynomial in q: map q-exponent -> coefficient. Requires
    /// all v-exponents <= 0.
    std::map<int, Int> qPoly() const
    {
        if (!isPolyInQ()) throw std::logic_error("not a polynomial in q");
        std::map<int, Int> out;
        for (const auto& [e, c] : c_) out[-e] = c;
        return out;
    }

    const std::map<int, Int>& terms() const { return c_; }

    bool operator==(const QLaurent&) const = default;

    /// Human-readable form, ascending exponents, e.g. "1 - 2*v + v^2".
    std::string str(const std::string& var = "v") const;

private:
    std::map<int, Int> c_;
};

/// Exact evaluation after substituting a rational value for q; kept as a
/// free function to mirror the other ring operations.
inline Rat ql_eval(const QLaurent& p, const Rat& q) { return p.evalAtQ(q); }

} // namespace affgk
