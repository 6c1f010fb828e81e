#include "latorus/octonion_torus.hpp"

#include <array>
#include <sstream>
#include <vector>

namespace latorus {
namespace {

// ---------------------------------------------------------------------------
// Cayley-Dickson model used only to derive the 8x8 basis sign table.
//
// Base ring: Laurent monomial sums in u_1, u_2, u_3 over Q. Doubling three
// times with parameters u_1, u_2, u_3 under
//   (a,b)(c,d) = (ac + g * conj(d) * b, d*a + b * conj(c)),  conj(a,b) = (conj a, -b)
// yields the octonion algebra with v_i^2 = u_i, and e_S (S a subset of
// {1,2,3}) the ascending product of the v_i, i in S.
// ---------------------------------------------------------------------------

using UExp = std::array<int, 3>;
using BasePoly = std::map<UExp, Rational>;  // Laurent polynomial in u_1..u_3

void base_add(BasePoly& p, const UExp& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = p.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

BasePoly base_mul(const BasePoly& a, const BasePoly& b) {
    BasePoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b)
            base_add(out, {ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return out;
}

// A level-k Cayley-Dickson element is a vector of 2^k base coefficients;
// slot masks follow e_{S + {k}} = e_S * v_k sitting in the upper half.
using CDVec = std::vector<BasePoly>;

CDVec cd_add(const CDVec& a, const CDVec& b) {
    CDVec out = a;
    for (size_t s = 0; s < b.size(); ++s)
        for (const auto& [e, c] : b[s]) base_add(out[s], e, c);
    return out;
}

CDVec cd_conj(const CDVec& a, int level) {
    if (level == 0) return a;
    const size_t half = a.size() / 2;
    CDVec lo(a.begin(), a.begin() + half), hi(a.begin() + half, a.end());
    CDVec out = cd_conj(lo, level - 1);
    for (auto& poly : hi) {
        BasePoly neg;
        for (const auto& [e, c] : poly) neg.emplace(e, -c);
        out.push_back(std::move(neg));
    }
    return out;
}

CDVec cd_mul(const CDVec& x, const CDVec& y, int level) {
    if (level == 0) return {base_mul(x[0], y[0])};
    const size_t half = x.size() / 2;
    CDVec a(x.begin(), x.begin() + half), b(x.begin() + half, x.end());
    CDVec c(y.begin(), y.begin() + half), d(y.begin() + half, y.end());

    BasePoly gamma;  // doubling parameter of this level: u_level
    UExp ge{0, 0, 0};
    ge[level - 1] = 1;
    gamma.emplace(ge, Rational(1));
    CDVec gamma_vec(half, BasePoly{});
    gamma_vec[0] = gamma;

    CDVec first = cd_add(cd_mul(a, c, level - 1),
                         cd_mul(gamma_vec, cd_mul(cd_conj(d, level - 1), b, level - 1), level - 1));
    CDVec second = cd_add(cd_mul(d, a, level - 1), cd_mul(b, cd_conj(c, level - 1), level - 1));

    CDVec out = first;
    out.insert(out.end(), second.begin(), second.end());
    return out;
}

struct SignTable {
    // sign[s][t] with x^lam x^mu carrying sign[S(lam)][S(mu)].
    std::array<std::array<int, 8>, 8> sign;
};

SignTable build_sign_table() {
    SignTable table{};
    for (int s = 0; s < 8; ++s) {
        for (int t = 0; t < 8; ++t) {
            CDVec es(8, BasePoly{}), et(8, BasePoly{});
            base_add(es[s], {0, 0, 0}, Rational(1));
            base_add(et[t], {0, 0, 0}, Rational(1));
            CDVec prod = cd_mul(es, et, 3);

            // The product must be a single +-1 monomial u^(S and T) in slot
            // S xor T; anything else is a bug in the model.
            const int target = s ^ t;
            int found_sign = 0;
            for (int slot = 0; slot < 8; ++slot) {
                if (prod[slot].empty()) continue;
                if (slot != target || prod[slot].size() != 1)
                    throw AlgebraError("octonion model: basis product not a basis monomial");
                const auto& [exps, coef] = *prod[slot].begin();
                for (int i = 0; i < 3; ++i) {
                    const int expected = ((s >> i) & 1) && ((t >> i) & 1) ? 1 : 0;
                    if (exps[i] != expected)
                        throw AlgebraError("octonion model: unexpected base-ring factor");
                }
                if (coef == Rational(1))
                    found_sign = 1;
                else if (coef == Rational(-1))
                    found_sign = -1;
                else
                    throw AlgebraError("octonion model: basis product sign not +-1");
            }
            if (found_sign == 0) throw AlgebraError("octonion model: basis product vanished");
            table.sign[s][t] = found_sign;
        }
    }
    return table;
}

const SignTable& sign_table() {
    static const SignTable table = build_sign_table();
    return table;
}

int parity_mask(const Degree& d) {
    int mask = 0;
    for (int i = 0; i < 3; ++i)
        if (((d[i] % 2) + 2) % 2 == 1) mask |= 1 << i;
    return mask;
}

}  // namespace

OctElement::OctElement(int rank) : rank_(rank) {
    if (rank < 3) throw OctonionRankBelow3("octonion torus: rank must be >= 3");
}

OctElement OctElement::monomial(const Degree& deg, const Rational& coef) {
    OctElement e(deg.rank());
    e.add_term(deg, coef);
    return e;
}

Rational OctElement::coef(const Degree& deg) const {
    auto it = terms_.find(deg);
    return it == terms_.end() ? Rational(0) : it->second;
}

void OctElement::add_term(const Degree& deg, const Rational& coef) {
    if (deg.rank() != rank_) throw RankMismatch("octonion element: term rank mismatch");
    if (coef.is_zero()) return;
    auto [it, inserted] = terms_.emplace(deg, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

OctElement OctElement::scaled(const Rational& c) const {
    OctElement out(rank_);
    if (c.is_zero()) return out;
    for (const auto& [deg, coef] : terms_) out.terms_.emplace(deg, coef * c);
    return out;
}

OctElement operator+(const OctElement& a, const OctElement& b) {
    if (a.rank() != b.rank()) throw RankMismatch("octonion element: rank mismatch");
    OctElement out = a;
    for (const auto& [deg, coef] : b.terms_) out.add_term(deg, coef);
    return out;
}

OctElement operator-(const OctElement& a, const OctElement& b) { return a + (-b); }

std::string OctElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [deg, coef] : terms_) {
        if (!first) os << " + ";
        os << coef.str() << "*x^" << deg.str();
        first = false;
    }
    return os.str();
}

Rational oct_sign(const Degree& lam, const Degree& mu) {
    lam.require_same_rank(mu);
    return Rational(sign_table().sign[parity_mask(lam)][parity_mask(mu)]);
}

OctElement oct_mul(const OctElement& a, const OctElement& b) {
    if (a.rank() != b.rank()) throw RankMismatch("octonion mul: rank mismatch");
    OctElement out(a.rank());
    for (const auto& [lam, ca] : a.terms())
        for (const auto& [mu, cb] : b.terms())
            out.add_term(lam + mu, ca * cb * oct_sign(lam, mu));
    return out;
}

OctElement oct_conjugation(const OctElement& a) {
    OctElement out(a.rank());
    for (const auto& [deg, coef] : a.terms())
        out.add_term(deg, parity_mask(deg) == 0 ? coef : -coef);
    return out;
}

OctElement oct_degree_inversion(const OctElement& a) {
    // In the canonical basis the inversion is sign-free: x^lam -> x^(-lam).
    OctElement out(a.rank());
    for (const auto& [deg, coef] : a.terms()) out.add_term(-deg, coef);
    return out;
}

OctElement oct_pre_chevalley(const OctElement& a) {
    return oct_conjugation(oct_degree_inversion(a));
}

OctElement oct_invert_monomial(const OctElement& a) {
    if (!a.is_monomial()) throw NotMonomial("octonion invert: element is not a single monomial");
    const auto& [lam, c] = *a.terms().begin();
    // oct_sign(lam,-lam) = oct_sign(-lam,lam) since the parity masks agree.
    return OctElement::monomial(-lam, oct_sign(lam, -lam).inverse() * c.inverse());
}

OctElement oct_associator(const OctElement& a, const OctElement& b, const OctElement& c) {
    return oct_mul(oct_mul(a, b), c) - oct_mul(a, oct_mul(b, c));
}

bool oct_check_alternative(const OctElement& a, const OctElement& b) {
    return oct_associator(a, a, b).is_zero() && oct_associator(b, a, a).is_zero();
}

}  // namespace latorus
