#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "latorus/errors.hpp"

namespace latorus {

/// A point of the grading lattice Z^n. Rank is fixed at construction.
class Degree {
public:
    explicit Degree(std::vector<std::int64_t> coords) : c_(std::move(coords)) {}
    Degree(std::initializer_list<std::int64_t> coords) : c_(coords) {}

    static Degree zero(int rank) { return Degree(std::vector<std::int64_t>(rank, 0)); }

    /// Standard basis vector e_i, 1-based.
    static Degree unit(int rank, int i) {
        Degree d = zero(rank);
        d.c_.at(i - 1) = 1;
        return d;
    }

    int rank() const { return static_cast<int>(c_.size()); }
    std::int64_t operator[](int i) const { return c_[i]; }
    const std::vector<std::int64_t>& coords() const { return c_; }

    bool is_zero() const {
        for (auto x : c_)
            if (x != 0) return false;
        return true;
    }

    std::int64_t l1_norm() const {
        std::int64_t s = 0;
        for (auto x : c_) s += x < 0 ? -x : x;
        return s;
    }

    Degree operator-() const {
        Degree d = *this;
        for (auto& x : d.c_) x = -x;
        return d;
    }

    friend Degree operator+(const Degree& a, const Degree& b) {
        a.require_same_rank(b);
        Degree d = a;
        for (int i = 0; i < d.rank(); ++i) d.c_[i] += b.c_[i];
        return d;
    }

    friend Degree operator-(const Degree& a, const Degree& b) { return a + (-b); }

    friend bool operator==(const Degree& a, const Degree& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Degree& a, const Degree& b) { return a.c_ != b.c_; }
    friend bool operator<(const Degree& a, const Degree& b) { return a.c_ < b.c_; }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < rank(); ++i) {
            if (i) s += ",";
            s += std::to_string(c_[i]);
        }
        return s + ")";
    }

    void require_same_rank(const Degree& o) const {
        if (rank() != o.rank())
            throw RankMismatch("degree rank " + std::to_string(rank()) + " vs " + std::to_string(o.rank()));
    }

private:
    std::vector<std::int64_t> c_;
};

/// All lattice points with coordinates in [-window, window], in
/// lexicographic order. (2w+1)^rank entries; keep windows small.
inline std::vector<Degree> degree_window(int rank, int window) {
    std::vector<Degree> out;
    std::vector<std::int64_t> cur(rank, -window);
    while (true) {
        out.push_back(Degree(cur));
        int i = rank - 1;
        while (i >= 0 && cur[i] == window) {
            cur[i] = -window;
            --i;
        }
        if (i < 0) break;
        ++cur[i];
    }
    return out;
}

}  // namespace latorus
