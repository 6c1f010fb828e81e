#include "latorus/quantum_torus.hpp"

#include <sstream>

namespace latorus {

QTElement QTElement::monomial(const Degree& deg, const Rational& coef) {
    QTElement e(deg.rank());
    e.add_term(deg, coef);
    return e;
}

Rational QTElement::coef(const Degree& deg) const {
    auto it = terms_.find(deg);
    return it == terms_.end() ? Rational(0) : it->second;
}

void QTElement::add_term(const Degree& deg, const Rational& coef) {
    if (deg.rank() != rank_) throw RankMismatch("torus element: term rank mismatch");
    if (coef.is_zero()) return;
    auto [it, inserted] = terms_.emplace(deg, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QTElement QTElement::operator-() const { return scaled(Rational(-1)); }

QTElement QTElement::scaled(const Rational& c) const {
    QTElement out(rank_);
    if (c.is_zero()) return out;
    for (const auto& [deg, coef] : terms_) out.terms_.emplace(deg, coef * c);
    return out;
}

QTElement operator+(const QTElement& a, const QTElement& b) {
    a.require_same_rank(b);
    QTElement out = a;
    for (const auto& [deg, coef] : b.terms_) out.add_term(deg, coef);
    return out;
}

QTElement operator-(const QTElement& a, const QTElement& b) { return a + (-b); }

std::string QTElement::str() const {
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

QTElement qt_mul(const QuantumMatrix& q, const QTElement& a, const QTElement& b) {
    a.require_same_rank(b);
    QTElement out(a.rank());
    for (const auto& [lam, ca] : a.terms())
        for (const auto& [mu, cb] : b.terms())
            out.add_term(lam + mu, ca * cb * twist(q, lam, mu));
    return out;
}

QTElement qt_invert_monomial(const QuantumMatrix& q, const Degree& lam) {
    // x^lam * (t(lam,-lam)^-1 x^-lam) = 1; the cocycle identity gives
    // t(lam,-lam) = t(-lam,lam), so the inverse is two-sided.
    return QTElement::monomial(-lam, twist(q, lam, -lam).inverse());
}

QTElement qt_invert_monomial(const QuantumMatrix& q, const QTElement& a) {
    if (!a.is_monomial()) throw NotMonomial("invert: element is not a single monomial");
    const auto& [lam, c] = *a.terms().begin();
    return qt_invert_monomial(q, lam).scaled(c.inverse());
}

QTElement qt_commutator(const QuantumMatrix& q, const QTElement& a, const QTElement& b) {
    return qt_mul(q, a, b) - qt_mul(q, b, a);
}

bool qt_commutator_component_full(const QuantumMatrix& q, const Degree& lam, int window) {
    if (window < 1) throw AlgebraError("commutator component: window must be >= 1");
    if (lam.rank() != q.rank()) throw RankMismatch("commutator component: rank mismatch");
    for (const Degree& mu : degree_window(q.rank(), window)) {
        if (!(twist(q, mu, lam - mu) == twist(q, lam - mu, mu))) return true;
    }
    return false;
}

QuantumMatrix qt_opposite(const QuantumMatrix& q) {
    std::vector<Rational> entries;
    entries.reserve(static_cast<size_t>(q.rank()) * q.rank());
    for (int i = 0; i < q.rank(); ++i)
        for (int j = 0; j < q.rank(); ++j) entries.push_back(q.at(j, i));
    return QuantumMatrix(q.rank(), std::move(entries));
}

}  // namespace latorus
