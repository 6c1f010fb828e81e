#pragma once

#include <map>
#include <string>

#include "latorus/degree.hpp"
#include "latorus/rational.hpp"

namespace latorus {

/// An element of the octonion n-torus (n >= 3): generators x_1..x_3
/// anticommute pairwise and associate up to the defining sign
/// (x_1 x_2) x_3 = -x_1 (x_2 x_3); generators x_4..x_n are central.
///
/// Every graded component is one-dimensional, so elements are finite
/// degree -> coefficient maps exactly as for the quantum torus. The basis
/// monomial x^lam is fixed by a Cayley-Dickson decomposition: writing
/// S(lam) = {i <= 3 : lam_i odd}, x^lam is the basis unit e_{S(lam)} times
/// the central monomial in u_i = x_i^2 and x_4..x_n matching the degree.
/// Products of basis monomials then only ever produce signs, computed from
/// the Cayley-Dickson doubling; the sign table is built (and checked) once.
class OctElement {
public:
    explicit OctElement(int rank);

    static OctElement zero(int rank) { return OctElement(rank); }
    static OctElement one(int rank) { return monomial(Degree::zero(rank), Rational(1)); }
    static OctElement monomial(const Degree& deg, const Rational& coef);
    static OctElement generator(int rank, int i) {
        return monomial(Degree::unit(rank, i), Rational(1));
    }

    int rank() const { return rank_; }
    const std::map<Degree, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    Rational coef(const Degree& deg) const;

    void add_term(const Degree& deg, const Rational& coef);

    OctElement operator-() const { return scaled(Rational(-1)); }
    OctElement scaled(const Rational& c) const;
    friend OctElement operator+(const OctElement& a, const OctElement& b);
    friend OctElement operator-(const OctElement& a, const OctElement& b);
    friend bool operator==(const OctElement& a, const OctElement& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const OctElement& a, const OctElement& b) { return !(a == b); }

    std::string str() const;

private:
    int rank_;
    std::map<Degree, Rational> terms_;
};

/// Structure sign of the basis-monomial product:
/// x^lam * x^mu = oct_sign(lam,mu) * x^(lam+mu), always +1 or -1.
Rational oct_sign(const Degree& lam, const Degree& mu);

OctElement oct_mul(const OctElement& a, const OctElement& b);

/// Octonion conjugation: the anti-involution fixing 1 and the central
/// generators and negating x_1, x_2, x_3. Preserves every degree.
OctElement oct_conjugation(const OctElement& a);

/// The order-2 automorphism x_i -> x_i^{-1} (all i); flips every degree.
OctElement oct_degree_inversion(const OctElement& a);

/// bar = conjugation o degree inversion: the grade-reversing
/// anti-involution of the octonion torus.
OctElement oct_pre_chevalley(const OctElement& a);

/// Two-sided inverse of a monomial; throws NotMonomial otherwise.
OctElement oct_invert_monomial(const OctElement& a);

/// True iff the associators (a,a,b) and (b,a,a) both vanish.
bool oct_check_alternative(const OctElement& a, const OctElement& b);

/// Associator (a,b,c) = (ab)c - a(bc).
OctElement oct_associator(const OctElement& a, const OctElement& b, const OctElement& c);

}  // namespace latorus
