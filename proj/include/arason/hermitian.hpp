#ifndef ARASON_HERMITIAN_HPP_
#define ARASON_HERMITIAN_HPP_

#include <optional>
#include <vector>

#include "arason/qform.hpp"

namespace arason {

/// The quadratic field Q(sqrt(delta)) with its conjugation. delta is never a square.
class HermContext {
  public:
    explicit HermContext(SquareClass delta);
    static HermContext of(long delta) { return HermContext(SquareClass::of(delta)); }

    SquareClass const& delta() const { return delta_; }
    friend bool operator==(HermContext const&, HermContext const&) = default;

  private:
    SquareClass delta_;
};

/// Diagonal hermitian form <a_1,...,a_n> over (Q(sqrt(delta)), conjugation), a_i in Q^x.
class HermForm {
  public:
    HermForm(HermContext ctx, std::vector<SquareClass> diag);
    static HermForm of(long delta, std::initializer_list<long> entries);

    HermContext const& ctx() const { return ctx_; }
    SquareClass const& delta() const { return ctx_.delta(); }
    std::vector<SquareClass> const& diag() const { return diag_; }
    std::size_t rank() const { return diag_.size(); }

    friend bool operator==(HermForm const&, HermForm const&) = default;

  private:
    HermContext ctx_;
    std::vector<SquareClass> diag_;
};

/// An element of Q^x modulo norms from Q(sqrt(delta)); stored by a square-class representative.
struct NormClass {
    SquareClass rep;
    SquareClass delta;

    friend bool operator==(NormClass const& a, NormClass const& b);
};

/// Jacobson trace form <1,-delta> (x) <a_1,...,a_n>.
QuadForm trace_form(HermForm const& h);

/// d(h) = (-1)^{n(n-1)/2} a_1 ... a_n, as a square class.
SquareClass disc_value(HermForm const& h);
NormClass disc_h(HermForm const& h);
/// (delta, d(h)); requires even rank.
QuatClass disc_algebra_h(HermForm const& h);

HermForm scale_h(HermForm const& h, SquareClass const& lambda);
HermForm dsum_h(HermForm const& a, HermForm const& b);

bool is_isometric_h(HermForm const& a, HermForm const& b);
std::optional<SquareClass> is_similar_h(HermForm const& a, HermForm const& b);

bool is_hyperbolic_h(HermForm const& h);
std::size_t witt_index_h(HermForm const& h);

/// h0 + <-lambda> h, the form underlying the orthogonal sum theta_lambda.
HermForm orth_sum_theta(HermForm const& h0, HermForm const& h, SquareClass const& lambda);

/// Hermitian Pfister form <<a_1,...,a_k>> = tensor of <1,-a_i> over Q(sqrt(delta)).
HermForm herm_pfister(HermContext const& ctx, std::vector<SquareClass> const& slots);

}  // namespace arason

#endif  // ARASON_HERMITIAN_HPP_
