#pragma once

// The triple lattice Lambda = O^3 + Z(1/lambda, 1/lambda, 1/lambda), its nine
// cosets Lambda_{j,k}, the unitary transforms
//
//   M = (1/lambda) [[1, 1, 1], [1, w, w^2], [1, w^2, w]],   N = diag(1, w, w),
//
// the weight Phi(alpha) = q^|alpha|^2 z^T(s) w^T(s/lambda) with s the
// coordinate sum, and the subspace V = {alpha_1 = alpha_2}. Every property the
// identity proofs rely on is checked here by finite enumeration.

#include <optional>
#include <stdexcept>
#include <vector>

#include "eistheta/eisenstein.hpp"
#include "eistheta/report.hpp"
#include "eistheta/series.hpp"
#include "eistheta/theta.hpp"

namespace eistheta
{

class NotInLattice : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

struct Triple {
    EisRat a0;
    EisRat a1;
    EisRat a2;

    friend bool operator==(const Triple &, const Triple &) = default;
};

/// Coset Lambda_{j,k}: alpha in O^3 + k(1/lambda, 1/lambda, 1/lambda) with
/// alpha_0 + alpha_1 + alpha_2 = j (mod lambda). Both indices live mod 3.
struct CosetLabel {
    int j{0};
    int k{0};

    static CosetLabel make(Int j, Int k)
    {
        return CosetLabel{detail::mod3(j), detail::mod3(k)};
    }

    friend bool operator==(const CosetLabel &, const CosetLabel &) = default;
};

enum class Transform { M, N };

Rational triple_norm(const Triple &t);

/// Reads k off as the common residue of lambda*a_i (which must all be
/// integral) and j as the residue of the coordinate sum.
std::optional<CosetLabel> try_coset_of(const Triple &t);

/// As try_coset_of; throws NotInLattice for triples outside Lambda.
CosetLabel coset_of(const Triple &t);

/// Membership straight from the coset definition: t - k(1/lambda,...) is
/// integral and its coordinate sum is j mod lambda.
bool in_coset(const Triple &t, CosetLabel label);

/// Throws NotInLattice for triples outside Lambda.
Monomial phi(const Triple &t);

/// Row vector times matrix, t*T. M and N are symmetric so this is also T*t.
Triple apply(const Triple &t, Transform which);

/// Lambda-triples with 3|t|^2 <= norm3_bound, grouped by shift k and within
/// each shift in lexicographic enumeration order of the coordinates.
std::vector<Triple> enumerate_lattice_triples(Int norm3_bound);

/// Bound on |t|^2 expressed on the thirds grid (floor(3 * bound)).
Int norm3_bound_of(const Rational &bound);

VerificationReport verify_M_action(const Rational &bound);
VerificationReport verify_N_action(const Rational &bound);
VerificationReport verify_phi_pullback(const Rational &bound);
VerificationReport verify_V_stability(const Rational &bound);
/// Every enumerated triple lies in exactly one of the nine cosets.
VerificationReport verify_partition(const Rational &bound);

std::vector<VerificationReport> run_coset_sweeps(const Rational &bound);

/// sum of q^|b|^2 z^(-3T(b_0/lambda)) w^T(b_0) over b in Lambda_label with
/// |b|^2 <= order (optionally only b in V).
TriSeries coset_sum(CosetLabel label, bool restrict_V, Int order);

/// sum of Phi(alpha) over alpha in Lambda_label with |alpha|^2 <= order
/// (optionally only alpha in V).
TriSeries phi_sum(CosetLabel label, bool restrict_V, Int order);

/// Series-level coset identities for shift k at order n, checked against the
/// theta builders of `source`:
///   coset_cube_phi:       c_k^3 = sum_j phi_sum(j, k)
///   coset_cube_pullback:  c_k^3 = sum_s coset_sum(-k, s)
///   coset_first:          3 coset_sum(-k, 0) = a(q,w,z^-3)a(q)^2 + w^k b_1(q,w,z^-3)b(q)^2 + w^-k b_-1(...)b(q)^2
///   coset_rest:           3 coset_sum(j, s) = c_s(q,w,z^-3)c(q)^2 for s = +-1 and every j
/// With restrict_V the V-analogues are checked instead: c_k^3 becomes
/// c_k(q,z,w)c_k(q^2,z^2,w^2) and the one-variable squares become q^2 factors.
std::vector<VerificationReport> check_coset_series(Int k, Int n, bool restrict_V,
                                                   const ThetaSource &source = default_source());

} // namespace eistheta
