#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "latorus/matrix_lie_torus.hpp"
#include "latorus/octonion_torus.hpp"
#include "latorus/report.hpp"

namespace latorus {

enum class TorusKind { Quantum, Octonion };

/// A coordinate torus named by its defining data: a quantum matrix, or the
/// octonion torus of a given rank.
struct CoordinateDescriptor {
    TorusKind kind;
    std::optional<QuantumMatrix> q;  // quantum kind
    int rank = 0;

    static CoordinateDescriptor quantum(QuantumMatrix qm) {
        CoordinateDescriptor d{TorusKind::Quantum, std::move(qm), 0};
        d.rank = d.q->rank();
        return d;
    }
    static CoordinateDescriptor octonion(int n) {
        if (n < 3) throw OctonionRankBelow3("octonion descriptor: rank must be >= 3");
        return CoordinateDescriptor{TorusKind::Octonion, std::nullopt, n};
    }
};

/// The grade-reversing anti-involution of a coordinate torus, acting on
/// monomials as bar(x^lam) = s(lam) * x^(-lam). Synthesized tables compute
/// s on demand from the defining data; tables found by the brute-force
/// search carry an explicit finite sign map instead.
class AntiInvolutionTable {
public:
    static AntiInvolutionTable quantum(QuantumMatrix q);
    static AntiInvolutionTable octonion(int rank);
    static AntiInvolutionTable explicit_signs(QuantumMatrix q, std::map<Degree, Rational> signs);

    TorusKind kind() const { return kind_; }
    int rank() const { return rank_; }
    const std::optional<QuantumMatrix>& q() const { return q_; }
    bool has_explicit_signs() const { return !signs_.empty(); }
    const std::map<Degree, Rational>& signs() const { return signs_; }

    /// s(lam). Explicit tables throw when asked outside their domain.
    Rational sign(const Degree& lam) const;

    QTElement apply(const QTElement& a) const;
    OctElement apply(const OctElement& a) const;

private:
    AntiInvolutionTable(TorusKind kind, int rank) : kind_(kind), rank_(rank) {}

    TorusKind kind_;
    int rank_;
    std::optional<QuantumMatrix> q_;
    std::map<Degree, Rational> signs_;
};

/// A Chevalley involution of the matrix Lie torus in closed form:
/// X -> -transpose(bar(X)) with bar applied entrywise.
struct ChevalleyInvolutionDescriptor {
    int ell = 0;
    AntiInvolutionTable bar;
};

/// The anti-involution x_i -> x_i^(-1) of K_q, which exists exactly when
/// q is elementary; otherwise throws NotElementary.
AntiInvolutionTable synthesize_pre_chevalley_qt(const QuantumMatrix& q);

/// Brute-force search for a grade-reversing anti-involution on a degree
/// window: solves t(lam,mu) s(lam+mu) = s(lam) s(mu) t(mu,lam) for s by
/// propagation from the unit degrees (gauge-fixed to s(e_i) = 1). Returns
/// the solved table, or nullopt with the system certified unsolvable on
/// the window. Independent of synthesize_pre_chevalley_qt.
std::optional<AntiInvolutionTable> oracle_search_pre_chevalley(const QuantumMatrix& q, int window);

ChevalleyInvolutionDescriptor synthesize_chevalley(int ell, const QuantumMatrix& q);

LieElement apply_chevalley(const ChevalleyInvolutionDescriptor& desc, const LieElement& x);

/// Read the coordinate anti-involution back out of a black-box involution:
/// bar(a) = -theta_{alpha,-alpha}(tau(e_alpha(a))) at the base root.
QTElement extract_anti_involution(const MatrixLieTorus& torus,
                                  const std::function<LieElement(const LieElement&)>& tau,
                                  const QTElement& a);
QTElement extract_anti_involution(const MatrixLieTorus& torus, const ChevalleyInvolutionDescriptor& desc,
                                  const QTElement& a);

struct DecisionResult {
    bool exists = false;
    std::string reason;
};

/// The decision procedure: the octonion torus always carries a Chevalley
/// involution; a quantum torus does exactly when its matrix is elementary.
DecisionResult decide_chevalley_existence(const CoordinateDescriptor& coord);

/// Run the full Chevalley-involution axiom suite against a black-box
/// action on the matrix Lie torus.
CheckReport verify_chevalley_action(const MatrixLieTorus& torus,
                                    const std::function<LieElement(const LieElement&)>& tau, int window,
                                    const VerifyOptions& opts = {});

CheckReport verify_chevalley(const ChevalleyInvolutionDescriptor& desc, int window,
                             const VerifyOptions& opts = {});

}  // namespace latorus
