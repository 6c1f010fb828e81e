#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latorus/errors.hpp"

namespace latorus {

/// A root of a type-A system in the epsilon model: either zero or
/// eps_i - eps_j with 1 <= i != j <= ell+1 (1-based indices).
class Root {
public:
    static Root zero() { return Root(0, 0); }
    static Root pair(int i, int j) {
        if (i == j || i < 1 || j < 1) throw AlgebraError("root: need distinct indices >= 1");
        return Root(i, j);
    }

    bool is_zero() const { return i_ == 0; }
    int i() const { return i_; }
    int j() const { return j_; }

    Root operator-() const { return is_zero() ? *this : Root(j_, i_); }

    friend bool operator==(const Root& a, const Root& b) { return a.i_ == b.i_ && a.j_ == b.j_; }
    friend bool operator!=(const Root& a, const Root& b) { return !(a == b); }
    friend bool operator<(const Root& a, const Root& b) {
        return a.i_ != b.i_ ? a.i_ < b.i_ : a.j_ < b.j_;
    }

    std::string str() const {
        if (is_zero()) return "0";
        return "e" + std::to_string(i_) + "-e" + std::to_string(j_);
    }

private:
    Root(int i, int j) : i_(i), j_(j) {}
    int i_, j_;  // 0,0 encodes the zero root
};

/// An element of the Weyl group Sym(ell+1), stored both as a permutation
/// (perm[k] = image of k, 1-based in slot k-1) and as a word in simple
/// reflections s_1..s_ell that evaluates to it.
struct WeylElement {
    std::vector<int> perm;
    std::vector<int> word;

    int apply(int k) const { return perm[k - 1]; }
    Root apply(const Root& r) const {
        return r.is_zero() ? r : Root::pair(apply(r.i()), apply(r.j()));
    }
};

/// The root system of type A_ell (ell >= 2) with its Weyl group.
class RootSystemA {
public:
    explicit RootSystemA(int ell);

    int ell() const { return ell_; }
    int dimension() const { return ell_ + 1; }  // matrix size ell+1

    /// The ell*(ell+1) nonzero roots, in a fixed deterministic order.
    const std::vector<Root>& nonzero_roots() const { return roots_; }

    Root simple(int k) const;  // alpha_k = eps_k - eps_{k+1}
    bool contains(const Root& r) const;

    /// Cartan integer <beta, alpha^v>; alpha must be nonzero.
    int cartan_integer(const Root& beta, const Root& alpha) const;

    /// beta + gamma if it is again a root (or zero), otherwise nullopt.
    std::optional<Root> sum(const Root& beta, const Root& gamma) const;

    /// True iff beta, gamma are independent, their integer span meets the
    /// root system in exactly 6 roots, and <beta, gamma^v> = -1; exactly the
    /// pairs along which the coordinate multiplication can be transported.
    bool is_a2_pair(const Root& beta, const Root& gamma) const;

    /// Integer-span intersection (Z*beta + Z*gamma) with the full root set.
    std::vector<Root> span_roots(const Root& beta, const Root& gamma) const;

    /// Shortest word w in simple reflections with w(alpha) = beta, found by
    /// breadth-first search. Any valid word works for building the
    /// root-space transport operators; shortest keeps them cheap.
    WeylElement weyl_word(const Root& alpha, const Root& beta) const;

private:
    WeylElement identity_element() const;

    int ell_;
    std::vector<Root> roots_;
};

}  // namespace latorus
