#pragma once

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace affgk {

/// Integer coefficient vector over the simple (co)roots of a fixed datum.
/// Finite data index coordinates by the Bourbaki simple roots 1..r (stored
/// 0-based); affine data put the affine node at coordinate 0 and the
/// Bourbaki nodes at 1..r.
struct LatticeVector {
    std::vector<int> coords;

    LatticeVector() = default;
    explicit LatticeVector(std::vector<int> c) : coords(std::move(c)) {}
    static LatticeVector zero(int rank) { return LatticeVector(std::vector<int>(rank, 0)); }
    static LatticeVector unit(int rank, int i)
    {
        std::vector<int> c(rank, 0);
        c.at(i) = 1;
        return LatticeVector(std::move(c));
    }

    int rank() const { return static_cast<int>(coords.size()); }

    int height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

    bool isZero() const
    {
        for (int c : coords)
            if (c != 0) return false;
        return true;
    }

    bool nonNegative() const
    {
        for (int c : coords)
            if (c < 0) return false;
        return true;
    }

    /// Componentwise comparison: *this <= other in the dominance-free sense
    /// used for convolution supports.
    bool leq(const LatticeVector& other) const
    {
        if (coords.size() != other.coords.size()) return false;
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (coords[i] > other.coords[i]) return false;
        return true;
    }

    LatticeVector operator+(const LatticeVector& o) const
    {
        LatticeVector r = *this;
        for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
        return r;
    }

    LatticeVector operator-(const LatticeVector& o) const
    {
        LatticeVector r = *this;
        for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
        return r;
    }

    LatticeVector scaled(int n) const
    {
        LatticeVector r = *this;
        for (int& c : r.coords) c *= n;
        return r;
    }

    auto operator<=>(const LatticeVector&) const = default;

    std::string str() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(coords[i]);
        }
        return s + ")";
    }
};

/// All vectors with nonnegative coordinates and height <= H, in lexicographic
/// order. The standard support set for height-truncated series.
std::vector<LatticeVector> height_simplex(int rank, int H);

} // namespace affgk
