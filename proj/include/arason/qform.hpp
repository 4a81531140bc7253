#ifndef ARASON_QFORM_HPP_
#define ARASON_QFORM_HPP_

#include <optional>
#include <vector>

#include "arason/exact_arith.hpp"
#include "arason/local_brauer.hpp"

namespace arason {

constexpr std::size_t kMaxFormDim = 64;

/// Nondegenerate diagonal quadratic form over Q, entries kept as square classes.
class QuadForm {
  public:
    QuadForm() = default;
    explicit QuadForm(std::vector<SquareClass> diag);
    static QuadForm of(std::vector<Rat> const& entries);
    static QuadForm of(std::initializer_list<long> entries);

    std::size_t dim() const { return diag_.size(); }
    std::vector<SquareClass> const& diag() const { return diag_; }

    /// Product of entries as a square class.
    SquareClass det() const;
    /// Signed discriminant (-1)^{n(n-1)/2} det.
    SquareClass disc() const;
    int signature() const;

    friend bool operator==(QuadForm const&, QuadForm const&) = default;

  private:
    std::vector<SquareClass> diag_;
};

struct InvariantProfile {
    std::size_t dim = 0;
    SquareClass disc;
    QuatClass hasse;  // places where prod_{i<j} (a_i, a_j)_v = -1
    int signature = 0;

    friend bool operator==(InvariantProfile const&, InvariantProfile const&) = default;
};

/// prod_{i<j} (a_i, a_j)_v.
int hasse_symbol(QuadForm const& q, Place v);
InvariantProfile profile(QuadForm const& q);

QuadForm dsum(QuadForm const& a, QuadForm const& b);
QuadForm scale(QuadForm const& q, SquareClass const& lambda);
QuadForm scale(QuadForm const& q, Rat const& lambda);
QuadForm tensor(QuadForm const& a, QuadForm const& b);
QuadForm neg(QuadForm const& q);
QuadForm hyperbolic(std::size_t planes);

/// <<a_1,...,a_n>> = tensor of <1,-a_i>.
QuadForm pfister(std::vector<SquareClass> const& slots);
QuadForm pfister(std::vector<Rat> const& slots);

bool is_locally_isotropic(QuadForm const& q, Place v);
/// Dimension of the anisotropic part of q over Q_v.
std::size_t local_anisotropic_dim(QuadForm const& q, Place v);

bool is_isotropic(QuadForm const& q);
std::size_t witt_index(QuadForm const& q);
bool is_hyperbolic(QuadForm const& q);
bool is_isometric(QuadForm const& a, QuadForm const& b);

/// A witness lambda with <lambda> a isometric to b, if one exists.
std::optional<SquareClass> is_similar(QuadForm const& a, QuadForm const& b);

/// Witt class in I^n(Q) for n in 1..4.
bool in_In(QuadForm const& q, int n);

/// Clifford (Witt) invariant: class of C(q) for even dim, C_0(q) for odd dim.
QuatClass clifford_class(QuadForm const& q);

SquareClass e1(QuadForm const& q);
QuatClass e2(QuadForm const& q);
H3Class e3(QuadForm const& q);

enum class PfisterOutcome { Similar, NotSimilar, WitnessNotFound };

struct PfisterMatch {
    PfisterOutcome outcome = PfisterOutcome::NotSimilar;
    std::vector<SquareClass> slots;  // filled when outcome == Similar
};

/* Decides whether q (of dimension 2^n, n in {3,4}) is similar to an n-fold
 * Pfister form and recovers slots. With first_slot set, only witnesses of
 * the form <<first_slot, ...>> are accepted.
 */
PfisterMatch pfister_similar(QuadForm const& q, int n,
                             std::optional<SquareClass> const& first_slot = std::nullopt);

/// Relative invariant of two odd-dimensional forms with isomorphic even Clifford algebras.
H3Class orth_rel_odd(QuadForm const& phi0, QuadForm const& phi);

}  // namespace arason

#endif  // ARASON_QFORM_HPP_
