// Acceptance suite: every check is exact (rational arithmetic, no
// tolerances) and carries a wall-clock budget. One line per criterion;
// exit code is the number of failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "latorus/involutions.hpp"
#include "latorus/verify.hpp"

#include "../oracles.hpp"

using namespace latorus;

namespace {

struct Criterion {
    int id;
    std::string title;
    double budget_ms;
    std::function<bool(std::string&)> run;
};

QTElement mono(const Degree& d, const Rational& c = Rational(1)) {
    return QTElement::monomial(d, c);
}

QuantumMatrix mixed_rank3() {
    // Mixed +-1 entries with a single non-elementary pair q_13 = 5.
    return QuantumMatrix(3, {Rational(1), Rational(-1), Rational(5),
                             Rational(-1), Rational(1), Rational(-1),
                             Rational(1, 5), Rational(-1), Rational(1)});
}

QuantumMatrix elementary_rank3() {
    return QuantumMatrix(3, {Rational(1), Rational(-1), Rational(1),
                             Rational(-1), Rational(1), Rational(-1),
                             Rational(1), Rational(-1), Rational(1)});
}

bool criterion_decision_agreement(std::string& why) {
    std::vector<CoordinateDescriptor> family;
    for (const Rational& v : {Rational(1), Rational(-1), Rational(2), Rational(1, 3)})
        family.push_back(CoordinateDescriptor::quantum(QuantumMatrix::rank2(v)));
    family.push_back(CoordinateDescriptor::quantum(mixed_rank3()));
    family.push_back(CoordinateDescriptor::quantum(elementary_rank3()));

    for (const auto& coord : family) {
        const bool decided = decide_chevalley_existence(coord).exists;
        const bool elementary = is_elementary(*coord.q);
        const bool oracle = oracle_search_pre_chevalley(*coord.q, 2).has_value();
        if (decided != elementary || oracle != decided) {
            why = "disagreement on q with q_12 = " + coord.q->at(0, 1).str();
            return false;
        }
    }
    return true;
}

bool criterion_involution_verification(std::string& why) {
    const QuantumMatrix q = QuantumMatrix::rank2(Rational(-1));
    for (int ell : {2, 3}) {
        const CheckReport report = verify_chevalley(synthesize_chevalley(ell, q), 2);
        if (report.checks.size() != 6) {
            why = "expected six checks";
            return false;
        }
        for (const auto& c : report.checks)
            if (!c.pass) {
                why = "ell=" + std::to_string(ell) + ": " + c.name + " failed on " + c.counterexample;
                return false;
            }
    }
    return true;
}

bool criterion_extraction_round_trip(std::string& why) {
    for (const Rational& v : {Rational(1), Rational(-1)}) {
        const QuantumMatrix q = QuantumMatrix::rank2(v);
        const AntiInvolutionTable bar = synthesize_pre_chevalley_qt(q);
        for (int ell : {2, 3}) {
            const ChevalleyInvolutionDescriptor desc = synthesize_chevalley(ell, q);
            const MatrixLieTorus torus(ell, q);
            for (const Degree& lam : degree_window(2, 2)) {
                if (!(extract_anti_involution(torus, desc, mono(lam)) == bar.apply(mono(lam)))) {
                    why = "ell=" + std::to_string(ell) + ", q_12=" + v.str() + ", degree " + lam.str();
                    return false;
                }
            }
        }
    }
    return true;
}

bool criterion_coordinate_recovery(std::string& why) {
    const Root beta = Root::pair(1, 2), gamma = Root::pair(2, 3);
    for (const Rational& v : {Rational(1), Rational(-1)}) {
        const QuantumMatrix q = QuantumMatrix::rank2(v);
        const MatrixLieTorus torus(3, q);
        SampleRng rng(0);
        const auto window = degree_window(2, 2);
        for (int t = 0; t < 50; ++t) {
            const QTElement a = mono(window[rng.pick(0, window.size() - 1)],
                                     Rational(rng.pick_nonzero(-5, 5), rng.pick(1, 4)));
            const QTElement b = mono(window[rng.pick(0, window.size() - 1)],
                                     Rational(rng.pick_nonzero(-5, 5), rng.pick(1, 4)));
            if (!(torus.extract_coordinate_mul(beta, gamma, a, b) == qt_mul(q, a, b))) {
                why = "canonical pair, q_12=" + v.str() + ": " + a.str() + " vs " + b.str();
                return false;
            }
            if (!(torus.extract_coordinate_mul(gamma, beta, a, b) == qt_mul(q, b, a))) {
                why = "reversed pair, q_12=" + v.str() + ": " + a.str() + " vs " + b.str();
                return false;
            }
        }
    }
    return true;
}

bool criterion_weyl_machinery(std::string& why) {
    const QuantumMatrix q = QuantumMatrix::rank2(Rational(-1));
    const MatrixLieTorus torus(3, q);
    const auto& roots = torus.roots().nonzero_roots();
    if (roots.size() != 12) {
        why = "expected 12 roots at ell=3";
        return false;
    }
    for (const Root& a : roots) {
        if (!(torus.ad_eta(a, -torus.chevalley_e(a)) == torus.chevalley_e(-a))) {
            why = "eta action wrong at " + a.str();
            return false;
        }
    }

    SampleRng rng(0);
    const auto window = degree_window(2, 2);
    for (int t = 0; t < 20; ++t) {
        const Root a = roots[rng.pick(0, roots.size() - 1)];
        const Root b = roots[rng.pick(0, roots.size() - 1)];
        const Root c = roots[rng.pick(0, roots.size() - 1)];
        const Degree lam = window[rng.pick(0, window.size() - 1)];
        const LieElement x =
            torus.matrix_unit(c.i(), c.j(), mono(lam, Rational(rng.pick_nonzero(-5, 5), rng.pick(1, 4))));

        if (!(torus.theta(c, c, x) == x)) {
            why = "theta identity failed at " + c.str();
            return false;
        }
        const LieElement composed = torus.theta(a, b, torus.theta(b, c, x));
        if (!(composed == torus.theta(a, c, x))) {
            why = "theta composition failed on (" + a.str() + "," + b.str() + "," + c.str() + ")";
            return false;
        }
        const auto keys = torus.support_keys(torus.theta(a, c, x));
        if (keys.size() != 1 || !(keys[0].degree == lam) || !(keys[0].root == a)) {
            why = "theta did not preserve the lattice degree";
            return false;
        }
    }
    return true;
}

bool criterion_octonion_presentation(std::string& why) {
    for (int n : {3, 4}) {
        for (int i = 1; i <= 3; ++i) {
            for (int j = 1; j <= 3; ++j) {
                if (i != j && !(oct_mul(OctElement::generator(n, i), OctElement::generator(n, j)) +
                                oct_mul(OctElement::generator(n, j), OctElement::generator(n, i)))
                                  .is_zero()) {
                    why = "generators " + std::to_string(i) + "," + std::to_string(j) + " commute";
                    return false;
                }
            }
            const OctElement xi = OctElement::generator(n, i);
            if (!(oct_mul(xi, oct_invert_monomial(xi)) == OctElement::one(n))) {
                why = "generator inverse failed";
                return false;
            }
        }
        const OctElement x1 = OctElement::generator(n, 1);
        const OctElement x2 = OctElement::generator(n, 2);
        const OctElement x3 = OctElement::generator(n, 3);
        if (!(oct_mul(oct_mul(x1, x2), x3) + oct_mul(x1, oct_mul(x2, x3))).is_zero()) {
            why = "defining associator sign failed at n=" + std::to_string(n);
            return false;
        }

        SampleRng rng(0);
        const auto window = degree_window(n, 2);
        for (int t = 0; t < 100; ++t) {
            const Degree la = window[rng.pick(0, window.size() - 1)];
            const Degree lb = window[rng.pick(0, window.size() - 1)];
            const OctElement a = OctElement::monomial(la, Rational(rng.pick_nonzero(-3, 3)));
            const OctElement b = OctElement::monomial(lb, Rational(rng.pick_nonzero(-3, 3)));
            if (!oct_check_alternative(a, b)) {
                why = "alternativity failed on " + a.str() + "; " + b.str();
                return false;
            }
            if (!(oct_pre_chevalley(oct_pre_chevalley(a)) == a)) {
                why = "bar is not involutive on " + a.str();
                return false;
            }
            if (!(oct_pre_chevalley(oct_mul(a, b)) ==
                  oct_mul(oct_pre_chevalley(b), oct_pre_chevalley(a)))) {
                why = "bar is not anti-multiplicative on " + a.str() + "; " + b.str();
                return false;
            }
            if (!(oct_pre_chevalley(a).terms().begin()->first == -la)) {
                why = "bar did not flip the degree of " + a.str();
                return false;
            }
        }
    }
    return true;
}

bool criterion_axiom_suites(std::string& why) {
    const std::vector<std::pair<std::string, QuantumMatrix>> family = {
        {"identity", QuantumMatrix::identity(2)},
        {"q_12=-1", QuantumMatrix::rank2(Rational(-1))},
        {"q_12=2", QuantumMatrix::rank2(Rational(2))},
    };
    VerifyOptions opts;
    opts.workers = 4;
    for (int ell : {2, 3}) {
        for (const auto& [label, q] : family) {
            if (!verify_root_grading(ell, q, 1, opts).passed()) {
                why = "root grading failed for " + label + " at ell=" + std::to_string(ell);
                return false;
            }
            if (!verify_division(ell, q, 2, opts).passed()) {
                why = "division failed for " + label + " at ell=" + std::to_string(ell);
                return false;
            }
            if (!verify_torus_axioms(CoordinateDescriptor::quantum(q), 2, opts).passed()) {
                why = "torus axioms failed for " + label;
                return false;
            }
        }
    }
    // The q_12 = 2 torus is a perfectly good Lie torus with no involution:
    // the separation is part of the criterion.
    if (decide_chevalley_existence(CoordinateDescriptor::quantum(QuantumMatrix::rank2(Rational(2))))
            .exists) {
        why = "q_12=2 was not separated by the decision procedure";
        return false;
    }
    return true;
}

bool criterion_twist_cocycle(std::string& why) {
    for (const Rational& v : {Rational(1), Rational(-1), Rational(2), Rational(1, 3)}) {
        const QuantumMatrix q = QuantumMatrix::rank2(v);
        for (const Degree& a : degree_window(2, 2))
            for (const Degree& b : degree_window(2, 2))
                for (const Degree& c : degree_window(2, 2))
                    if (!(twist(q, a, b) * twist(q, a + b, c) == twist(q, b, c) * twist(q, a, b + c))) {
                        why = "cocycle identity failed at " + a.str() + "," + b.str() + "," + c.str();
                        return false;
                    }
        for (const Degree& a : degree_window(2, 3))
            for (const Degree& b : degree_window(2, 3))
                if (!(twist(q, a, b) == latorus::testing::twist_oracle(q, a, b))) {
                    why = "oracle mismatch at " + a.str() + "," + b.str();
                    return false;
                }
    }
    return true;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "decision agreement across the quantum-matrix family", 5000, criterion_decision_agreement},
        {2, "synthesized involution passes all six verification checks", 30000,
         criterion_involution_verification},
        {3, "coordinate anti-involution extraction round trip", 30000, criterion_extraction_round_trip},
        {4, "bracket extraction recovers both coordinate multiplications", 10000,
         criterion_coordinate_recovery},
        {5, "weyl representative and transport identities", 10000, criterion_weyl_machinery},
        {6, "octonion torus presentation, alternativity, and bar", 20000, criterion_octonion_presentation},
        {7, "axiom suites across the matrix family with decision separation", 60000,
         criterion_axiom_suites},
        {8, "twist cocycle identity and word-rewriting oracle equivalence", 5000,
         criterion_twist_cocycle},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string why;
        bool ok = false;
        try {
            ok = c.run(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        if (ms > c.budget_ms) {
            ok = false;
            why = "exceeded " + std::to_string(c.budget_ms) + " ms budget";
        }
        std::printf("[%s] criterion %d: %s (%.1f ms)\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), ms);
        if (!ok) {
            std::printf("       %s\n", why.c_str());
            ++failures;
        }
    }
    return failures;
}
