#include <doctest.h>

#include "latorus/json_io.hpp"
#include "latorus/report.hpp"

using namespace latorus;

TEST_CASE("quantum matrix json round trip") {
    const QuantumMatrix q = QuantumMatrix::rank2(Rational(2, 3));
    CHECK(quantum_matrix_from_json(to_json(q)) == q);

    const QuantumMatrix parsed = quantum_matrix_from_json(R"({"n":2,"q":[["1","-1"],["-1","1"]]})");
    CHECK(parsed == QuantumMatrix::rank2(Rational(-1)));

    // Integer literals are accepted alongside "p/q" strings.
    CHECK(quantum_matrix_from_json(R"({"n":2,"q":[[1,2],["1/2",1]]})") ==
          QuantumMatrix::rank2(Rational(2)));
}

TEST_CASE("malformed matrix documents raise parse errors") {
    CHECK_THROWS_AS(quantum_matrix_from_json("not json"), ParseError);
    CHECK_THROWS_AS(quantum_matrix_from_json(R"({"q":[["1"]]})"), ParseError);
    CHECK_THROWS_AS(quantum_matrix_from_json(R"({"n":2,"q":[["1","2"]]})"), ParseError);
    // Well-formed JSON but invalid constraints also surfaces as ParseError.
    CHECK_THROWS_AS(quantum_matrix_from_json(R"({"n":2,"q":[["1","2"],["3","1"]]})"), ParseError);
}

TEST_CASE("element json round trips, seeded") {
    SampleRng rng(21);
    for (int t = 0; t < 30; ++t) {
        QTElement a(2);
        for (int k = 0; k < 4; ++k)
            a.add_term(Degree{rng.pick(-5, 5), rng.pick(-5, 5)},
                       Rational(rng.pick_nonzero(-9, 9), rng.pick(1, 9)));
        CHECK(qt_element_from_json(to_json(a)) == a);

        OctElement b(3);
        for (int k = 0; k < 4; ++k)
            b.add_term(Degree{rng.pick(-5, 5), rng.pick(-5, 5), rng.pick(-5, 5)},
                       Rational(rng.pick_nonzero(-9, 9), rng.pick(1, 9)));
        CHECK(oct_element_from_json(to_json(b)) == b);
        CHECK(to_json(b).find("octonion") != std::string::npos);
    }
}

TEST_CASE("lie element json round trip") {
    const QuantumMatrix q = QuantumMatrix::rank2(Rational(-1));
    const MatrixLieTorus torus(2, q);
    LieElement x = torus.chevalley_h(1) + torus.matrix_unit(1, 3, QTElement::generator(2, 2));
    const LieElementDoc doc = lie_element_from_json(to_json(x, 2, q));
    CHECK(doc.ell == 2);
    CHECK(doc.q == q);
    CHECK(doc.element == x);
}

TEST_CASE("coordinate descriptors") {
    const CoordinateDescriptor oct = coordinate_from_json(R"({"kind":"octonion","n":3})");
    CHECK(oct.kind == TorusKind::Octonion);
    CHECK(oct.rank == 3);
    CHECK_THROWS_AS(coordinate_from_json(R"({"kind":"octonion","n":2})"), ParseError);
    CHECK_THROWS_AS(coordinate_from_json(R"({"kind":"nonsense","n":3})"), ParseError);

    const CoordinateDescriptor qd = coordinate_from_json(R"({"n":2,"q":[["1","2"],["1/2","1"]]})");
    CHECK(qd.kind == TorusKind::Quantum);
    CHECK(*qd.q == QuantumMatrix::rank2(Rational(2)));
    CHECK(coordinate_from_json(to_json(qd)).kind == TorusKind::Quantum);
}

TEST_CASE("involution descriptor round trip") {
    const ChevalleyInvolutionDescriptor desc = synthesize_chevalley(3, QuantumMatrix::rank2(Rational(-1)));
    const ChevalleyInvolutionDescriptor back = involution_from_json(to_json(desc));
    CHECK(back.ell == 3);
    CHECK(*back.bar.q() == *desc.bar.q());
    // Descriptors over non-elementary coordinates cannot be materialized.
    CHECK_THROWS_AS(involution_from_json(R"({"ell":2,"coordinate":{"n":2,"q":[["1","2"],["1/2","1"]]}})"),
                    ParseError);
}

TEST_CASE("report serialization carries counterexamples only on failure") {
    CheckReport report;
    report.suite = "demo";
    report.window = 2;
    report.add("good", true);
    report.add("bad", false, "degree (1,0)");
    const std::string json = to_json(report);
    CHECK(json.find("\"suite\"") != std::string::npos);
    CHECK(json.find("degree (1,0)") != std::string::npos);
    CHECK(json.find("\"pass\": false") != std::string::npos);

    const DecisionResult yes{true, "elementary quantum matrix"};
    CHECK(decision_json(yes).find("\"exists\": true") != std::string::npos);
}
