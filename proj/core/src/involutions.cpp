#include "latorus/involutions.hpp"

#include <chrono>

namespace latorus {

AntiInvolutionTable AntiInvolutionTable::quantum(QuantumMatrix q) {
    AntiInvolutionTable t(TorusKind::Quantum, q.rank());
    t.q_ = std::move(q);
    return t;
}

AntiInvolutionTable AntiInvolutionTable::octonion(int rank) {
    if (rank < 3) throw OctonionRankBelow3("anti-involution table: octonion rank must be >= 3");
    return AntiInvolutionTable(TorusKind::Octonion, rank);
}

AntiInvolutionTable AntiInvolutionTable::explicit_signs(QuantumMatrix q, std::map<Degree, Rational> signs) {
    AntiInvolutionTable t(TorusKind::Quantum, q.rank());
    t.q_ = std::move(q);
    t.signs_ = std::move(signs);
    return t;
}

Rational AntiInvolutionTable::sign(const Degree& lam) const {
    if (lam.rank() != rank_) throw RankMismatch("anti-involution table: degree rank mismatch");
    if (!signs_.empty()) {
        auto it = signs_.find(lam);
        if (it == signs_.end())
            throw AlgebraError("anti-involution table: degree " + lam.str() + " outside tabulated window");
        return it->second;
    }
    if (kind_ == TorusKind::Octonion) {
        for (int i = 0; i < 3; ++i)
            if (((lam[i] % 2) + 2) % 2 == 1) return Rational(-1);
        return Rational(1);
    }
    // bar(x^lam) = x_n^(-lam_n) ... x_1^(-lam_1); normal-ordering the
    // right-hand side accumulates the sign through the twist cocycle.
    Rational s(1);
    Degree acc = Degree::zero(rank_);
    for (int i = rank_; i >= 1; --i) {
        if (lam[i - 1] == 0) continue;
        std::vector<std::int64_t> coords(rank_, 0);
        coords[i - 1] = -lam[i - 1];
        const Degree step(coords);
        s *= twist(*q_, acc, step);
        acc = acc + step;
    }
    return s;
}

QTElement AntiInvolutionTable::apply(const QTElement& a) const {
    if (kind_ != TorusKind::Quantum) throw AlgebraError("anti-involution table: not a quantum table");
    QTElement out(a.rank());
    for (const auto& [lam, c] : a.terms()) out.add_term(-lam, c * sign(lam));
    return out;
}

OctElement AntiInvolutionTable::apply(const OctElement& a) const {
    if (kind_ != TorusKind::Octonion) throw AlgebraError("anti-involution table: not an octonion table");
    OctElement out(a.rank());
    for (const auto& [lam, c] : a.terms()) out.add_term(-lam, c * sign(lam));
    return out;
}

AntiInvolutionTable synthesize_pre_chevalley_qt(const QuantumMatrix& q) {
    for (int i = 0; i < q.rank(); ++i)
        for (int j = 0; j < q.rank(); ++j) {
            const Rational& e = q.at(i, j);
            if (!(e == Rational(1) || e == Rational(-1)))
                throw NotElementary("no grade-reversing anti-involution: q_" + std::to_string(i + 1) +
                                    std::to_string(j + 1) + " = " + e.str() + " is not in {1,-1}");
        }
    return AntiInvolutionTable::quantum(q);
}

std::optional<AntiInvolutionTable> oracle_search_pre_chevalley(const QuantumMatrix& q, int window) {
    if (window < 2) throw AlgebraError("oracle: window must be >= 2");
    const int n = q.rank();
    const std::vector<Degree> degrees = degree_window(n, window);
    auto in_window = [&](const Degree& d) {
        for (int i = 0; i < n; ++i)
            if (d[i] < -window || d[i] > window) return false;
        return true;
    };

    // Any solution can be rescaled so s(e_i) = 1 (the constraint only sees
    // the 2-cocycle s(lam)s(mu)/s(lam+mu)), so the gauge loses nothing.
    std::map<Degree, Rational> s;
    s.emplace(Degree::zero(n), Rational(1));
    for (int i = 1; i <= n; ++i) s.emplace(Degree::unit(n, i), Rational(1));

    // Each constraint instance t(lam,mu) s(lam+mu) = s(lam) s(mu) t(mu,lam)
    // determines any one of the three signs from the other two; propagate
    // until stable and report the first contradiction as a certificate.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Degree& lam : degrees) {
            for (const Degree& mu : degrees) {
                const Degree sum = lam + mu;
                if (!in_window(sum)) continue;
                auto sl = s.find(lam);
                auto sm = s.find(mu);
                auto ss = s.find(sum);
                const int known = (sl != s.end()) + (sm != s.end()) + (ss != s.end());
                if (known < 2) continue;
                const Rational ratio = twist(q, mu, lam) / twist(q, lam, mu);
                if (known == 3) {
                    if (!(ss->second == sl->second * sm->second * ratio))
                        return std::nullopt;  // contradictory constraint: certified unsolvable
                    continue;
                }
                if (ss == s.end()) {
                    s.emplace(sum, sl->second * sm->second * ratio);
                } else if (sl == s.end()) {
                    s.emplace(lam, ss->second / (sm->second * ratio));
                } else {
                    s.emplace(mu, ss->second / (sl->second * ratio));
                }
                changed = true;
            }
        }
    }

    for (const Degree& lam : degrees)
        if (!s.count(lam)) throw AlgebraError("oracle: window degree unreachable");  // cannot happen
    return AntiInvolutionTable::explicit_signs(q, std::move(s));
}

ChevalleyInvolutionDescriptor synthesize_chevalley(int ell, const QuantumMatrix& q) {
    if (ell < 2) throw AlgebraError("synthesize: need ell >= 2");
    return ChevalleyInvolutionDescriptor{ell, synthesize_pre_chevalley_qt(q)};
}

LieElement apply_chevalley(const ChevalleyInvolutionDescriptor& desc, const LieElement& x) {
    if (x.size() != desc.ell + 1 || x.rank() != desc.bar.rank())
        throw ShapeMismatch("apply involution: element shape mismatch");
    LieElement out(x.size(), x.rank());
    for (int i = 1; i <= x.size(); ++i)
        for (int j = 1; j <= x.size(); ++j)
            if (!x.at(j, i).is_zero()) out.set(i, j, -desc.bar.apply(x.at(j, i)));
    return out;
}

QTElement extract_anti_involution(const MatrixLieTorus& torus,
                                  const std::function<LieElement(const LieElement&)>& tau,
                                  const QTElement& a) {
    const Root base = torus.base_root();
    const LieElement image = tau(torus.matrix_unit(1, 2, a));
    for (int i = 1; i <= torus.size(); ++i)
        for (int j = 1; j <= torus.size(); ++j)
            if (!(i == 2 && j == 1) && !image.at(i, j).is_zero())
                throw NotHomogeneousImage("extract: image not supported in the opposite root space");
    if (image.is_zero() && !a.is_zero())
        throw NotHomogeneousImage("extract: image vanished");
    const LieElement back = torus.theta(base, -base, image);
    return -back.at(1, 2);
}

QTElement extract_anti_involution(const MatrixLieTorus& torus, const ChevalleyInvolutionDescriptor& desc,
                                  const QTElement& a) {
    return extract_anti_involution(
        torus, [&](const LieElement& x) { return apply_chevalley(desc, x); }, a);
}

DecisionResult decide_chevalley_existence(const CoordinateDescriptor& coord) {
    if (coord.kind == TorusKind::Octonion) {
        if (coord.rank < 3) throw OctonionRankBelow3("decide: octonion rank must be >= 3");
        return {true, "octonion torus: conjugation composed with degree inversion is grade-reversing"};
    }
    const QuantumMatrix& q = *coord.q;
    for (int i = 0; i < q.rank(); ++i)
        for (int j = 0; j < q.rank(); ++j) {
            const Rational& e = q.at(i, j);
            if (!(e == Rational(1) || e == Rational(-1)))
                return {false, "q_" + std::to_string(i + 1) + std::to_string(j + 1) + " = " + e.str() +
                                   " is not in {1,-1}"};
        }
    return {true, "elementary quantum matrix"};
}

namespace {

struct HomogeneousGenerator {
    GradedComponentKey key;
    LieElement value;
    std::string label;
};

std::vector<HomogeneousGenerator> homogeneous_generators(const MatrixLieTorus& torus, int window) {
    std::vector<HomogeneousGenerator> gens;
    for (const Degree& lam : degree_window(torus.rank(), window)) {
        const QTElement xl = QTElement::monomial(lam, Rational(1));
        for (const Root& r : torus.roots().nonzero_roots()) {
            gens.push_back({{r, lam},
                            torus.matrix_unit(r.i(), r.j(), xl),
                            "E_" + std::to_string(r.i()) + std::to_string(r.j()) + " x^" + lam.str()});
        }
        for (int k = 1; k <= torus.ell(); ++k) {
            LieElement h = torus.zero();
            h.set(k, k, xl);
            h.set(k + 1, k + 1, -xl);
            gens.push_back({{Root::zero(), lam}, h, "h_" + std::to_string(k) + " x^" + lam.str()});
        }
    }
    return gens;
}

bool supported_at_single_key(const MatrixLieTorus& torus, const LieElement& x, const Root& root,
                             const Degree& degree) {
    const auto keys = torus.support_keys(x);
    if (keys.size() != 1) return false;
    return keys[0].root == root && keys[0].degree == degree;
}

}  // namespace

CheckReport verify_chevalley_action(const MatrixLieTorus& torus,
                                    const std::function<LieElement(const LieElement&)>& tau, int window,
                                    const VerifyOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckReport report;
    report.suite = "chevalley-involution";
    report.window = window;
    report.seed = opts.seed;

    const auto gens = homogeneous_generators(torus, window);

    {
        bool ok = true;
        std::string cex;
        for (const auto& g : gens) {
            if (!(tau(tau(g.value)) == g.value)) {
                ok = false;
                cex = g.label;
                break;
            }
        }
        report.add("squares-to-identity", ok, cex);
    }

    {
        bool ok = true;
        std::string cex;
        SampleRng rng(opts.seed);
        for (int t = 0; t < opts.pair_samples && ok; ++t) {
            const auto& x = gens[static_cast<size_t>(rng.pick(0, static_cast<std::int64_t>(gens.size()) - 1))];
            const auto& y = gens[static_cast<size_t>(rng.pick(0, static_cast<std::int64_t>(gens.size()) - 1))];
            if (!(tau(torus.bracket(x.value, y.value)) == torus.bracket(tau(x.value), tau(y.value)))) {
                ok = false;
                cex = "[" + x.label + ", " + y.label + "]";
            }
        }
        report.add("preserves-brackets", ok, cex);
    }

    {
        bool ok = true;
        std::string cex;
        for (const auto& g : gens) {
            const LieElement image = tau(g.value);
            if (!supported_at_single_key(torus, image, -g.key.root, -g.key.degree)) {
                ok = false;
                cex = g.label;
                break;
            }
        }
        report.add("flips-root-and-degree", ok, cex);
    }

    {
        bool ok = true;
        std::string cex;
        for (int k = 1; k <= torus.ell(); ++k) {
            const LieElement h = torus.chevalley_h(k);
            if (!(tau(h) == -h)) {
                ok = false;
                cex = "h_" + std::to_string(k);
                break;
            }
        }
        report.add("minus-identity-on-degree-zero-cartan", ok, cex);
    }

    {
        bool ok = true;
        std::string cex;
        for (const Root& r : torus.roots().nonzero_roots()) {
            const LieElement image = tau(torus.chevalley_e(r));
            bool constant = true;
            for (int i = 1; i <= torus.size() && constant; ++i)
                for (int j = 1; j <= torus.size() && constant; ++j)
                    for (const auto& [deg, c] : image.at(i, j).terms())
                        if (!deg.is_zero()) constant = false;
            if (!constant || image.is_zero()) {
                ok = false;
                cex = "e_{" + r.str() + "}";
                break;
            }
        }
        report.add("preserves-constant-subalgebra", ok, cex);
    }

    {
        bool ok = true;
        std::string cex;
        SampleRng rng(opts.seed + 1);
        for (int k = 1; k <= torus.ell() && ok; ++k) {
            const Root alpha = torus.roots().simple(k);
            for (int t = 0; t < opts.pair_samples / 4 + 1 && ok; ++t) {
                const auto& x =
                    gens[static_cast<size_t>(rng.pick(0, static_cast<std::int64_t>(gens.size()) - 1))];
                if (!(tau(torus.ad_eta(alpha, x.value)) == torus.ad_eta(alpha, tau(x.value)))) {
                    ok = false;
                    cex = "eta_" + alpha.str() + " on " + x.label;
                }
            }
        }
        report.add("commutes-with-weyl-representatives", ok, cex);
    }

    report.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

CheckReport verify_chevalley(const ChevalleyInvolutionDescriptor& desc, int window,
                             const VerifyOptions& opts) {
    if (desc.bar.kind() != TorusKind::Quantum || !desc.bar.q())
        throw AlgebraError("verify: the matrix Lie torus is built over quantum coordinates only");
    MatrixLieTorus torus(desc.ell, *desc.bar.q());
    return verify_chevalley_action(
        torus, [&](const LieElement& x) { return apply_chevalley(desc, x); }, window, opts);
}

}  // namespace latorus
