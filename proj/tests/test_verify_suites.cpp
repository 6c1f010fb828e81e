#include <doctest.h>

#include "latorus/verify.hpp"

using namespace latorus;

namespace {
const QuantumMatrix kQm1 = QuantumMatrix::rank2(Rational(-1));
const QuantumMatrix kId2 = QuantumMatrix::identity(2);
const QuantumMatrix kQ2 = QuantumMatrix::rank2(Rational(2));
}  // namespace

TEST_CASE("root grading suite passes across the matrix family") {
    for (int ell : {2, 3})
        for (const QuantumMatrix& q : {kId2, kQm1, kQ2}) {
            const CheckReport report = verify_root_grading(ell, q, 1);
            CHECK(report.passed());
            CHECK(report.suite == "root-grading");
        }
}

TEST_CASE("division suite passes across the matrix family") {
    for (int ell : {2, 3})
        for (const QuantumMatrix& q : {kId2, kQm1, kQ2}) {
            VerifyOptions opts;
            opts.workers = 2;
            const CheckReport report = verify_division(ell, q, 2, opts);
            CHECK(report.passed());
        }
}

TEST_CASE("torus axiom suite passes for quantum and octonion coordinates") {
    for (const QuantumMatrix& q : {kId2, kQm1, kQ2})
        CHECK(verify_torus_axioms(CoordinateDescriptor::quantum(q), 2).passed());
    CHECK(verify_torus_axioms(CoordinateDescriptor::octonion(3), 2).passed());
    CHECK(verify_torus_axioms(CoordinateDescriptor::octonion(4), 1).passed());
}

TEST_CASE("non-elementary coordinates pass axioms yet fail the decision") {
    CHECK(verify_root_grading(3, kQ2, 1).passed());
    CHECK(verify_division(3, kQ2, 2).passed());
    CHECK(verify_torus_axioms(CoordinateDescriptor::quantum(kQ2), 2).passed());
    CHECK_FALSE(decide_chevalley_existence(CoordinateDescriptor::quantum(kQ2)).exists);
}

TEST_CASE("zero-part slice rank expectations") {
    const MatrixLieTorus torus(2, kQm1);
    // Witnessed degree: full diagonal.
    CHECK(detail::zero_part_expected_dim(2, true) == 3);
    CHECK(detail::zero_part_span_rank(torus, Degree{1, 1}, 1) == 3);
    // Degree zero is never witnessed: trace-zero diagonal only.
    CHECK(detail::zero_part_expected_dim(2, false) == 2);
    CHECK(detail::zero_part_span_rank(torus, Degree::zero(2), 1) == 2);

    // A mock with all opposite-root brackets removed has rank 0 and is
    // flagged against the expected dimension.
    CHECK(rational_row_rank({}) == 0);
    CHECK(rational_row_rank({}) != detail::zero_part_expected_dim(2, false));
}

TEST_CASE("reports carry failing checks with counterexamples") {
    CheckReport report;
    report.suite = "mock";
    report.add("passing-check", true);
    report.add("failing-check", false, "degree (0,0)");
    CHECK_FALSE(report.passed());
    CHECK(report.checks[1].counterexample == "degree (0,0)");
}
