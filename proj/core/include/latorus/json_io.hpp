#pragma once

#include <string>

#include "latorus/involutions.hpp"
#include "latorus/report.hpp"

namespace latorus {

// JSON schemas (all rationals as "p/q" or "p" strings, degrees as integer
// arrays):
//   quantum matrix: {"n": 2, "q": [["1","-1"],["-1","1"]]}
//   torus element:  {"rank": 2, "terms": [{"deg": [1,0], "coef": "1"}, ...]}
//                   octonion elements add "kind": "octonion"
//   lie element:    {"ell": 2, "q": {...}, "entries": [[element, ...], ...]}
//   coordinates:    quantum-matrix document, or {"kind": "octonion", "n": 3}
//   involution:     {"ell": 2, "coordinate": {...}}
//   reports:        {"suite": ..., "window": ..., "checks": [...]}
// Parsers throw ParseError on malformed input.

std::string to_json(const QuantumMatrix& q);
QuantumMatrix quantum_matrix_from_json(const std::string& text);

std::string to_json(const QTElement& a);
QTElement qt_element_from_json(const std::string& text);

std::string to_json(const OctElement& a);
OctElement oct_element_from_json(const std::string& text);

std::string to_json(const LieElement& x, int ell, const QuantumMatrix& q);
struct LieElementDoc {
    int ell;
    QuantumMatrix q;
    LieElement element;
};
LieElementDoc lie_element_from_json(const std::string& text);

std::string to_json(const CoordinateDescriptor& coord);
CoordinateDescriptor coordinate_from_json(const std::string& text);

std::string to_json(const ChevalleyInvolutionDescriptor& desc);
ChevalleyInvolutionDescriptor involution_from_json(const std::string& text);

std::string to_json(const CheckReport& report);

/// {"exists": ..., "reason": ..., "checks": [...]}; decision results carry
/// no checks, verification results carry the full list.
std::string decision_json(const DecisionResult& decision);
std::string involution_report_json(bool exists, const std::string& reason, const CheckReport& report);

}  // namespace latorus
