#include "latorus/verify.hpp"

#include <atomic>
#include <chrono>
#include <thread>

namespace latorus {

namespace detail {

int zero_part_expected_dim(int ell, bool commutator_witnessed) {
    return ell + (commutator_witnessed ? 1 : 0);
}

int zero_part_span_rank(const MatrixLieTorus& torus, const Degree& lam, int window) {
    const int dim = torus.size();
    std::vector<std::vector<Rational>> rows;
    for (const Degree& mu : degree_window(torus.rank(), window)) {
        const Degree nu = lam - mu;
        const Rational t1 = twist(torus.q(), mu, nu);
        const Rational t2 = twist(torus.q(), nu, mu);
        for (int i = 1; i <= dim; ++i)
            for (int j = 1; j <= dim; ++j) {
                if (i == j) continue;
                // [E_ij x^mu, E_ji x^nu] = t1 E_ii x^lam - t2 E_jj x^lam.
                std::vector<Rational> row(dim, Rational(0));
                row[i - 1] = t1;
                row[j - 1] = -t2;
                rows.push_back(std::move(row));
            }
    }
    return rational_row_rank(std::move(rows));
}

namespace {

// Deterministic fan-out over an index range; results land by index.
template <typename Fn>
void parallel_indices(int workers, size_t count, Fn&& fn) {
    if (workers <= 1 || count <= 1) {
        for (size_t k = 0; k < count; ++k) fn(k);
        return;
    }
    std::atomic<size_t> next{0};
    auto run = [&] {
        for (;;) {
            const size_t k = next.fetch_add(1);
            if (k >= count) return;
            fn(k);
        }
    };
    std::vector<std::thread> pool;
    const int spawn = std::min<int>(workers, static_cast<int>(count));
    pool.reserve(spawn);
    for (int w = 0; w < spawn; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
}

}  // namespace

}  // namespace detail

CheckReport verify_root_grading(int ell, const QuantumMatrix& q, int window, const VerifyOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckReport report;
    report.suite = "root-grading";
    report.window = window;
    report.seed = opts.seed;

    MatrixLieTorus torus(ell, q);
    const ChevalleyBasis basis(ell);

    {
        // Constant subalgebra closes under the bracket and reproduces the
        // classical structure constants computed on rational matrices.
        bool ok = true;
        std::string cex;
        const auto elements = basis.elements();
        for (size_t a = 0; a < elements.size() && ok; ++a)
            for (size_t b = 0; b < elements.size() && ok; ++b) {
                const RationalMatrix classical = bracket(elements[a], elements[b]);
                const LieElement lifted = torus.bracket(torus.embed(elements[a]), torus.embed(elements[b]));
                if (!(lifted == torus.embed(classical))) {
                    ok = false;
                    cex = "basis pair (" + std::to_string(a) + "," + std::to_string(b) + ")";
                }
            }
        report.add("constant-subalgebra-closed", ok, cex);
    }

    {
        // Components over the support sum back to the element, exactly.
        bool ok = true;
        std::string cex;
        SampleRng rng(opts.seed);
        for (int trial = 0; trial < 25 && ok; ++trial) {
            LieElement x = torus.zero();
            for (int t = 0; t < 6; ++t) {
                const int i = static_cast<int>(rng.pick(1, torus.size()));
                const int j = static_cast<int>(rng.pick(1, torus.size()));
                std::vector<std::int64_t> coords(torus.rank());
                for (auto& c : coords) c = rng.pick(-window, window);
                x = x + torus.matrix_unit(i, j, QTElement::monomial(Degree(coords),
                                                                    Rational(rng.pick_nonzero(-4, 4))));
            }
            LieElement sum = torus.zero();
            for (const auto& key : torus.support_keys(x)) sum = sum + torus.component(x, key);
            if (!(sum == x)) {
                ok = false;
                cex = x.str();
            }
        }
        report.add("component-decomposition", ok, cex);
    }

    {
        bool ok = true;
        std::string cex;
        for (const Degree& lam : degree_window(q.rank(), window)) {
            const bool witnessed = qt_commutator_component_full(q, lam, window);
            const int expected = detail::zero_part_expected_dim(ell, witnessed);
            const int got = detail::zero_part_span_rank(torus, lam, window);
            if (got != expected) {
                ok = false;
                cex = "degree " + lam.str() + ": rank " + std::to_string(got) + " != " +
                      std::to_string(expected);
                break;
            }
        }
        report.add("zero-part-spanned-by-opposite-brackets", ok, cex);
    }

    report.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

CheckReport verify_division(int ell, const QuantumMatrix& q, int window, const VerifyOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckReport report;
    report.suite = "division";
    report.window = window;
    report.seed = opts.seed;

    MatrixLieTorus torus(ell, q);
    std::vector<GradedComponentKey> keys;
    for (const Root& r : torus.roots().nonzero_roots())
        for (const Degree& lam : degree_window(q.rank(), window)) keys.push_back({r, lam});

    std::vector<std::string> failures(keys.size());
    detail::parallel_indices(opts.workers, keys.size(), [&](size_t k) {
        try {
            torus.division_witness(keys[k], window);
        } catch (const AlgebraError& err) {
            failures[k] = keys[k].root.str() + " x^" + keys[k].degree.str() + ": " + err.what();
        }
    });

    bool ok = true;
    std::string cex;
    for (const auto& f : failures)
        if (!f.empty()) {
            ok = false;
            cex = f;
            break;
        }
    report.add("partner-for-every-component", ok, cex,
               std::to_string(keys.size()) + " (root, degree) keys checked");

    report.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

namespace {

void torus_axioms_quantum(CheckReport& report, const QuantumMatrix& q, int window,
                          const VerifyOptions& opts) {
    const int n = q.rank();
    const auto degrees = degree_window(n, window);

    {
        bool ok = true;
        std::string cex;
        for (const Degree& lam : degrees) {
            const QTElement x = QTElement::monomial(lam, Rational(1));
            const QTElement inv = qt_invert_monomial(q, lam);
            if (!(qt_mul(q, x, inv) == QTElement::one(n)) || !(qt_mul(q, inv, x) == QTElement::one(n))) {
                ok = false;
                cex = "degree " + lam.str();
                break;
            }
        }
        report.add("monomial-invertibility", ok, cex);
    }

    {
        // The support contains every unit degree with an invertible
        // monomial, so it generates the whole lattice.
        bool ok = true;
        std::string cex;
        for (int i = 1; i <= n; ++i) {
            const Degree ei = Degree::unit(n, i);
            const QTElement gen = QTElement::monomial(ei, Rational(1));
            if (!(qt_mul(q, gen, qt_invert_monomial(q, ei)) == QTElement::one(n))) {
                ok = false;
                cex = "unit degree " + ei.str();
                break;
            }
        }
        report.add("support-generates-lattice", ok, cex,
                   "unit degrees e_1..e_" + std::to_string(n) + " all carry invertible monomials");
    }

    {
        bool ok = true;
        std::string cex;
        const size_t total = degrees.size() * degrees.size() * degrees.size();
        const size_t limit = 40000;
        if (total <= limit) {
            for (const Degree& a : degrees) {
                for (const Degree& b : degrees) {
                    for (const Degree& c : degrees) {
                        const QTElement xa = QTElement::monomial(a, Rational(1));
                        const QTElement xb = QTElement::monomial(b, Rational(1));
                        const QTElement xc = QTElement::monomial(c, Rational(1));
                        if (!(qt_mul(q, qt_mul(q, xa, xb), xc) == qt_mul(q, xa, qt_mul(q, xb, xc)))) {
                            ok = false;
                            cex = a.str() + ", " + b.str() + ", " + c.str();
                        }
                        if (!ok) break;
                    }
                    if (!ok) break;
                }
                if (!ok) break;
            }
        } else {
            SampleRng rng(opts.seed);
            for (size_t t = 0; t < limit && ok; ++t) {
                const Degree& a = degrees[static_cast<size_t>(rng.pick(0, degrees.size() - 1))];
                const Degree& b = degrees[static_cast<size_t>(rng.pick(0, degrees.size() - 1))];
                const Degree& c = degrees[static_cast<size_t>(rng.pick(0, degrees.size() - 1))];
                const QTElement xa = QTElement::monomial(a, Rational(1));
                const QTElement xb = QTElement::monomial(b, Rational(1));
                const QTElement xc = QTElement::monomial(c, Rational(1));
                if (!(qt_mul(q, qt_mul(q, xa, xb), xc) == qt_mul(q, xa, qt_mul(q, xb, xc)))) {
                    ok = false;
                    cex = a.str() + ", " + b.str() + ", " + c.str();
                }
            }
        }
        report.add("associativity-on-monomials", ok, cex);
    }

    {
        bool ok = true;
        std::string cex;
        for (const Degree& lam : degrees) {
            const QTElement x = QTElement::monomial(lam, Rational(1));
            if (!(qt_mul(q, QTElement::one(n), x) == x) || !(qt_mul(q, x, QTElement::one(n)) == x)) {
                ok = false;
                cex = "degree " + lam.str();
                break;
            }
        }
        report.add("unit-element", ok, cex);
    }
}

void torus_axioms_octonion(CheckReport& report, int n, int window, const VerifyOptions& opts) {
    const auto degrees = degree_window(n, window);

    {
        bool ok = true;
        std::string cex;
        for (int i = 1; i <= 3 && ok; ++i)
            for (int j = 1; j <= 3 && ok; ++j) {
                if (i == j) continue;
                const OctElement xi = OctElement::generator(n, i);
                const OctElement xj = OctElement::generator(n, j);
                if (!(oct_mul(xi, xj) + oct_mul(xj, xi)).is_zero()) {
                    ok = false;
                    cex = "x_" + std::to_string(i) + ", x_" + std::to_string(j);
                }
            }
        report.add("first-three-generators-anticommute", ok, cex);
    }

    {
        const OctElement x1 = OctElement::generator(n, 1);
        const OctElement x2 = OctElement::generator(n, 2);
        const OctElement x3 = OctElement::generator(n, 3);
        const bool ok = (oct_mul(oct_mul(x1, x2), x3) + oct_mul(x1, oct_mul(x2, x3))).is_zero();
        report.add("defining-associator-sign", ok, ok ? "" : "(x1 x2) x3 != -x1 (x2 x3)");
    }

    {
        bool ok = true;
        std::string cex;
        for (int j = 4; j <= n && ok; ++j)
            for (int i = 1; i <= n && ok; ++i) {
                const OctElement xi = OctElement::generator(n, i);
                const OctElement xj = OctElement::generator(n, j);
                if (!(oct_mul(xi, xj) == oct_mul(xj, xi))) {
                    ok = false;
                    cex = "x_" + std::to_string(i) + ", x_" + std::to_string(j);
                }
            }
        report.add("extra-generators-central", ok, cex);
    }

    {
        bool ok = true;
        std::string cex;
        for (const Degree& lam : degrees) {
            const OctElement x = OctElement::monomial(lam, Rational(1));
            const OctElement inv = oct_invert_monomial(x);
            if (!(oct_mul(x, inv) == OctElement::one(n)) || !(oct_mul(inv, x) == OctElement::one(n))) {
                ok = false;
                cex = "degree " + lam.str();
                break;
            }
        }
        report.add("monomial-invertibility", ok, cex);
    }

    {
        bool ok = true;
        std::string cex;
        SampleRng rng(opts.seed);
        const int samples = std::max(100, opts.pair_samples);
        for (int t = 0; t < samples && ok; ++t) {
            const Degree& la = degrees[static_cast<size_t>(rng.pick(0, degrees.size() - 1))];
            const Degree& lb = degrees[static_cast<size_t>(rng.pick(0, degrees.size() - 1))];
            const OctElement a = OctElement::monomial(la, Rational(rng.pick_nonzero(-3, 3)));
            const OctElement b = OctElement::monomial(lb, Rational(rng.pick_nonzero(-3, 3)));
            if (!oct_check_alternative(a, b)) {
                ok = false;
                cex = a.str() + "; " + b.str();
            }
        }
        report.add("alternative-laws", ok, cex);
    }

    {
        bool ok = true;
        std::string cex;
        for (int i = 1; i <= n; ++i) {
            const OctElement gen = OctElement::generator(n, i);
            if (!(oct_mul(gen, oct_invert_monomial(gen)) == OctElement::one(n))) {
                ok = false;
                cex = "unit degree " + Degree::unit(n, i).str();
                break;
            }
        }
        report.add("support-generates-lattice", ok, cex,
                   "unit degrees e_1..e_" + std::to_string(n) + " all carry invertible monomials");
    }
}

}  // namespace

CheckReport verify_torus_axioms(const CoordinateDescriptor& coord, int window, const VerifyOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckReport report;
    report.suite = "torus-axioms";
    report.window = window;
    report.seed = opts.seed;

    if (coord.kind == TorusKind::Quantum)
        torus_axioms_quantum(report, *coord.q, window, opts);
    else
        torus_axioms_octonion(report, coord.rank, window, opts);

    report.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace latorus
