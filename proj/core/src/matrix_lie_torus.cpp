#include "latorus/matrix_lie_torus.hpp"

#include <set>
#include <sstream>

namespace latorus {

void LieElement::set(int i, int j, QTElement v) {
    if (v.rank() != rank_) throw RankMismatch("lie element: entry rank mismatch");
    entries_[idx(i, j)] = std::move(v);
}

bool LieElement::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

LieElement LieElement::scaled(const Rational& c) const {
    LieElement out(size_, rank_);
    for (size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k].scaled(c);
    return out;
}

LieElement operator+(const LieElement& a, const LieElement& b) {
    if (a.size_ != b.size_ || a.rank_ != b.rank_) throw ShapeMismatch("lie element: shape mismatch");
    LieElement out(a.size_, a.rank_);
    for (size_t k = 0; k < a.entries_.size(); ++k) out.entries_[k] = a.entries_[k] + b.entries_[k];
    return out;
}

LieElement operator-(const LieElement& a, const LieElement& b) { return a + (-b); }

std::string LieElement::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 1; i <= size_; ++i) {
        if (i > 1) os << "; ";
        for (int j = 1; j <= size_; ++j) {
            if (j > 1) os << ", ";
            os << at(i, j).str();
        }
    }
    os << "]";
    return os.str();
}

MatrixLieTorus::MatrixLieTorus(int ell, QuantumMatrix q) : ell_(ell), q_(std::move(q)), system_(ell) {}

void MatrixLieTorus::require_shape(const LieElement& x) const {
    if (x.size() != size() || x.rank() != rank())
        throw ShapeMismatch("lie torus: element shape " + std::to_string(x.size()) + "/" +
                            std::to_string(x.rank()) + " does not match " + std::to_string(size()) + "/" +
                            std::to_string(rank()));
}

LieElement MatrixLieTorus::matrix_unit(int i, int j, QTElement a) const {
    if (i < 1 || i > size() || j < 1 || j > size()) throw ShapeMismatch("matrix unit: index out of range");
    LieElement x = zero();
    x.set(i, j, std::move(a));
    return x;
}

LieElement MatrixLieTorus::chevalley_e(const Root& alpha) const {
    if (alpha.is_zero() || !system_.contains(alpha)) throw AlgebraError("chevalley e: bad root");
    return matrix_unit(alpha.i(), alpha.j(), QTElement::one(rank()));
}

LieElement MatrixLieTorus::chevalley_h(int k) const {
    if (k < 1 || k > ell_) throw AlgebraError("chevalley h: index out of range");
    return coroot_h(Root::pair(k, k + 1));
}

LieElement MatrixLieTorus::coroot_h(const Root& alpha) const {
    if (alpha.is_zero()) throw ZeroCoroot("coroot: zero root");
    LieElement x = zero();
    x.set(alpha.i(), alpha.i(), QTElement::one(rank()));
    x.set(alpha.j(), alpha.j(), -QTElement::one(rank()));
    return x;
}

LieElement MatrixLieTorus::embed(const RationalMatrix& m) const {
    if (m.size() != size()) throw ShapeMismatch("embed: matrix size mismatch");
    LieElement x = zero();
    for (int i = 1; i <= size(); ++i)
        for (int j = 1; j <= size(); ++j)
            if (!m.at(i, j).is_zero())
                x.set(i, j, QTElement::monomial(Degree::zero(rank()), m.at(i, j)));
    return x;
}

LieElement MatrixLieTorus::mat_mul(const LieElement& x, const LieElement& y) const {
    require_shape(x);
    require_shape(y);
    LieElement out = zero();
    for (int i = 1; i <= size(); ++i)
        for (int k = 1; k <= size(); ++k) {
            if (x.at(i, k).is_zero()) continue;
            for (int j = 1; j <= size(); ++j) {
                if (y.at(k, j).is_zero()) continue;
                out.set(i, j, out.at(i, j) + qt_mul(q_, x.at(i, k), y.at(k, j)));
            }
        }
    return out;
}

LieElement MatrixLieTorus::bracket(const LieElement& x, const LieElement& y) const {
    return mat_mul(x, y) - mat_mul(y, x);
}

QTElement MatrixLieTorus::trace(const LieElement& x) const {
    require_shape(x);
    QTElement t(rank());
    for (int i = 1; i <= size(); ++i) t = t + x.at(i, i);
    return t;
}

LieElement MatrixLieTorus::component(const LieElement& x, const GradedComponentKey& key) const {
    require_shape(x);
    if (key.degree.rank() != rank()) throw RankMismatch("component: degree rank mismatch");
    LieElement out = zero();
    if (key.root.is_zero()) {
        for (int i = 1; i <= size(); ++i) {
            Rational c = x.at(i, i).coef(key.degree);
            if (!c.is_zero()) out.set(i, i, QTElement::monomial(key.degree, c));
        }
        return out;
    }
    if (!system_.contains(key.root)) throw AlgebraError("component: root outside system");
    Rational c = x.at(key.root.i(), key.root.j()).coef(key.degree);
    if (!c.is_zero()) out.set(key.root.i(), key.root.j(), QTElement::monomial(key.degree, c));
    return out;
}

std::vector<GradedComponentKey> MatrixLieTorus::support_keys(const LieElement& x) const {
    require_shape(x);
    std::vector<GradedComponentKey> keys;
    std::set<Degree> diagonal_degrees;
    for (int i = 1; i <= size(); ++i)
        for (int j = 1; j <= size(); ++j) {
            if (i == j) {
                for (const auto& [deg, c] : x.at(i, i).terms()) diagonal_degrees.insert(deg);
            } else {
                for (const auto& [deg, c] : x.at(i, j).terms())
                    keys.push_back({Root::pair(i, j), deg});
            }
        }
    for (const auto& deg : diagonal_degrees) keys.push_back({Root::zero(), deg});
    return keys;
}

bool MatrixLieTorus::is_sl_member(const LieElement& x, int window) const {
    const QTElement t = trace(x);
    for (const auto& [deg, c] : t.terms()) {
        if (!qt_commutator_component_full(q_, deg, window)) return false;
    }
    return true;
}

std::vector<LieElement> MatrixLieTorus::default_central_generators() const {
    std::vector<LieElement> gens;
    for (const Root& r : system_.nonzero_roots()) {
        gens.push_back(chevalley_e(r));
        for (int k = 1; k <= rank(); ++k) {
            gens.push_back(matrix_unit(r.i(), r.j(), QTElement::monomial(Degree::unit(rank(), k), Rational(1))));
            gens.push_back(matrix_unit(r.i(), r.j(), QTElement::monomial(-Degree::unit(rank(), k), Rational(1))));
        }
    }
    return gens;
}

bool MatrixLieTorus::is_central(const LieElement& x) const {
    return is_central(x, default_central_generators());
}

bool MatrixLieTorus::is_central(const LieElement& x, const std::vector<LieElement>& generators) const {
    require_shape(x);
    for (const auto& g : generators)
        if (!bracket(x, g).is_zero()) return false;
    return true;
}

LieElement MatrixLieTorus::ad_exp(const LieElement& e, const LieElement& x) const {
    require_shape(e);
    require_shape(x);
    if (!mat_mul(e, e).is_zero()) throw NotAdNilpotent("ad_exp: e*e != 0");
    const LieElement b1 = bracket(e, x);
    const LieElement b2 = bracket(e, b1);
    return x + b1 + b2.scaled(Rational(1, 2));
}

LieElement MatrixLieTorus::ad_eta(const Root& alpha, const LieElement& x) const {
    if (alpha.is_zero()) throw AlgebraError("ad_eta: zero root");
    const LieElement e = chevalley_e(alpha);
    const LieElement f = chevalley_e(-alpha);
    return ad_exp(e, ad_exp(-f, ad_exp(e, x)));
}

LieElement MatrixLieTorus::theta(const Root& beta, const Root& alpha, const LieElement& x) const {
    require_shape(x);
    if (alpha.is_zero() || beta.is_zero()) throw AlgebraError("theta: roots must be nonzero");
    for (int i = 1; i <= size(); ++i)
        for (int j = 1; j <= size(); ++j)
            if (!(i == alpha.i() && j == alpha.j()) && !x.at(i, j).is_zero())
                throw NotHomogeneous("theta: element not supported in the source root space");

    const WeylElement w = system_.weyl_word(alpha, beta);
    auto transport = [&](LieElement y) {
        // word [k1..km] composes with s_{km} acting first.
        for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
            y = ad_eta(system_.simple(*it), y);
        return y;
    };

    const LieElement image = transport(x);
    const LieElement unit_image = transport(chevalley_e(alpha));
    const QTElement& pivot = unit_image.at(beta.i(), beta.j());
    const Rational eps = pivot.coef(Degree::zero(rank()));
    if (eps.is_zero()) throw AlgebraError("theta: transport lost the unit element");
    return image.scaled(eps.inverse());
}

LieElement MatrixLieTorus::coordinate_element(const Root& delta, const QTElement& a) const {
    return theta(delta, base_root(), matrix_unit(1, 2, a));
}

QTElement MatrixLieTorus::extract_coordinate_mul(const Root& beta, const Root& gamma, const QTElement& a,
                                                 const QTElement& b) const {
    if (!system_.is_a2_pair(beta, gamma))
        throw NotA2Pair("extract: (" + beta.str() + ", " + gamma.str() + ") is not an A2 pair");
    const auto delta_opt = system_.sum(beta, gamma);
    if (!delta_opt || delta_opt->is_zero()) throw NotA2Pair("extract: pair does not sum to a root");
    const Root delta = *delta_opt;

    const LieElement z = bracket(coordinate_element(beta, a), coordinate_element(gamma, b));

    // Structure constant c with [e_beta, e_gamma] = c * e_delta.
    const LieElement cb = bracket(chevalley_e(beta), chevalley_e(gamma));
    const Rational c = cb.at(delta.i(), delta.j()).coef(Degree::zero(rank()));
    if (c.is_zero()) throw NotA2Pair("extract: vanishing structure constant");

    const LieElement back = theta(base_root(), delta, z.scaled(c.inverse()));
    return back.at(1, 2);
}

LieElement MatrixLieTorus::division_witness(const GradedComponentKey& key, int window) const {
    if (key.root.is_zero()) throw AlgebraError("division witness: root must be nonzero");
    const int i = key.root.i(), j = key.root.j();
    const LieElement e = matrix_unit(i, j, QTElement::monomial(key.degree, Rational(1)));
    const LieElement f0 = matrix_unit(j, i, QTElement::monomial(-key.degree, Rational(1)));

    // [e, f0] is a rational multiple of the coroot matrix; divide it out.
    const LieElement h = bracket(e, f0);
    const Rational s = h.at(i, i).coef(Degree::zero(rank()));
    if (s.is_zero()) throw NoWitness("division witness: bracket lost the coroot");
    const LieElement f = f0.scaled(s.inverse());
    const LieElement ef = bracket(e, f);
    if (!(ef == coroot_h(key.root))) throw NoWitness("division witness: [e,f] is not the coroot");
    for (const Degree& mu : degree_window(rank(), window)) {
        const QTElement xmu = QTElement::monomial(mu, Rational(1));
        for (const Root& gamma : system_.nonzero_roots()) {
            const LieElement g = matrix_unit(gamma.i(), gamma.j(), xmu);
            const int want = system_.cartan_integer(gamma, key.root);
            if (!(bracket(ef, g) == g.scaled(Rational(want))))
                throw NoWitness("division witness: wrong action on " + gamma.str() + " x^" + mu.str());
        }
        for (int k = 1; k <= ell_; ++k) {
            LieElement g = zero();
            g.set(k, k, xmu);
            g.set(k + 1, k + 1, -xmu);
            if (!bracket(ef, g).is_zero())
                throw NoWitness("division witness: nonzero action on the zero root space");
        }
    }
    return f;
}

}  // namespace latorus
