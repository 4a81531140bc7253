#ifndef ARASON_UNITARY_HPP_
#define ARASON_UNITARY_HPP_

#include <optional>
#include <vector>

#include "arason/hermitian.hpp"

namespace arason {

/* A unitary involution on a split algebra End(V) over Q(sqrt(delta)),
 * stored as the adjoint of a representative hermitian form. Two involutions
 * are isomorphic iff their representatives are similar.
 */
class UnitaryInv {
  public:
    explicit UnitaryInv(HermForm rep);
    static UnitaryInv of(long delta, std::initializer_list<long> entries);

    HermForm const& rep() const { return rep_; }
    HermContext const& ctx() const { return rep_.ctx(); }
    std::size_t degree() const { return rep_.rank(); }

  private:
    HermForm rep_;
};

/// The hyperbolic involution of the given even degree.
UnitaryInv hyperbolic_involution(HermContext const& ctx, std::size_t degree);

/// Values of the relative invariants: a coset of H3 together with its quotient.
struct RelArasonValue {
    Coset value;

    bool is_zero() const { return value.is_zero(); }
    friend bool operator==(RelArasonValue const&, RelArasonValue const&) = default;
};

QuatClass disc_algebra(UnitaryInv const& tau);

RelArasonValue rel_arason(UnitaryInv const& tau0, UnitaryInv const& tau);
RelArasonValue e3_hyp(UnitaryInv const& tau);
/// Degree-8 invariant relative to a totally decomposable base point.
RelArasonValue e3_td(UnitaryInv const& tau);
/// Twice the Rost-invariant class; identically zero for split B.
H3Class f3(UnitaryInv const& tau0, UnitaryInv const& tau);

/// Involution adjoint to rep(tau0) + <-lambda> rep(tau).
UnitaryInv theta_lambda(UnitaryInv const& tau0, UnitaryInv const& tau, SquareClass const& lambda);
/// A scalar making theta_lambda have split discriminant algebra (odd degree).
SquareClass split_theta_scalar(UnitaryInv const& tau0, UnitaryInv const& tau);

struct Rank2Factor {
    UnitaryInv involution;
    H3Class value;
};

/// ad_{<1,-lambda>} (x) tau0 together with its hyperbolic invariant.
Rank2Factor rank2_factor(UnitaryInv const& tau0, SquareClass const& lambda);

struct DescentComparison {
    H3Class direct;     // closed-form value in H3
    RelArasonValue relative;  // value computed from the unitary pair
};

/// Symplectic descent (C, gamma_i) = (M_m, ad_phi_i) (x) ((delta, a), bar).
DescentComparison symp_descent_e3(QuadForm const& phi0, QuadForm const& phi, SquareClass const& a,
                                  SquareClass const& delta);
/// Orthogonal descent tau_i = ad_{q_i} (x) iota on a split algebra.
DescentComparison orth_descent_rel(QuadForm const& q0, QuadForm const& q, SquareClass const& delta);

struct QuadExtReport {
    std::size_t rank = 0;
    InvariantProfile trace_profile;
    SquareClass predicted_disc;
    bool disc_ok = false;
    QuatClass predicted_clifford;
    bool clifford_ok = false;
    bool e2_ok = true;             // even rank: e2(q_h) = D(ad_h)
    bool even_clifford_split = true;  // odd rank: C_0(q_h) split over Q(sqrt(delta))

    bool ok() const { return disc_ok && clifford_ok && e2_ok && even_clifford_split; }
};

/// Invariants of the orthogonal extension ad_{q_h} of ad_h against their predictions.
QuadExtReport quad_ext_check(HermForm const& h);

bool classify_deg3(UnitaryInv const& tau0, UnitaryInv const& tau);
bool classify_deg4(UnitaryInv const& tau0, UnitaryInv const& tau);
bool classify_deg6(UnitaryInv const& tau0, UnitaryInv const& tau);
bool is_hyperbolic_deg6(UnitaryInv const& tau);

struct Deg8Decomposition {
    bool decision = false;  // D split and e3_td = 0
    PfisterOutcome outcome = PfisterOutcome::NotSimilar;
    std::vector<SquareClass> slots;  // (a, b, c) with tau ~ ad_<<a,b,c>>
};

Deg8Decomposition dec_deg8(UnitaryInv const& tau);

}  // namespace arason

#endif  // ARASON_UNITARY_HPP_
