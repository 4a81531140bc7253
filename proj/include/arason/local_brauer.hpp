#ifndef ARASON_LOCAL_BRAUER_HPP_
#define ARASON_LOCAL_BRAUER_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "arason/exact_arith.hpp"

namespace arason {

/// A place of Q: the real place or a finite prime. Real sorts first.
class Place {
  public:
    static Place real() { return Place(0); }
    static Place finite(std::uint64_t p);

    bool is_real() const { return prime_ == 0; }
    std::uint64_t prime() const { return prime_; }
    std::string to_string() const;

    friend auto operator<=>(Place const&, Place const&) = default;

  private:
    explicit Place(std::uint64_t p) : prime_(p) {}
    std::uint64_t prime_;
};

/// Local Hilbert symbol (a,b)_v on square classes; returns +1 or -1.
int hilbert_symbol(SquareClass const& a, SquareClass const& b, Place v);
int hilbert_symbol(Rat const& a, Rat const& b, Place v);

/// True iff c is a square in the completion Q_v.
bool is_local_square(SquareClass const& c, Place v);

/// Real, 2 and every prime dividing one of the classes, sorted.
std::vector<Place> relevant_places(std::vector<SquareClass> const& classes);

/* Brauer class of a quaternion algebra over Q, recorded by its set of
 * ramified places. The set always has even cardinality.
 */
class QuatClass {
  public:
    QuatClass() = default;  // split
    /// Throws if the set has odd cardinality.
    explicit QuatClass(std::vector<Place> ramified);

    std::vector<Place> const& ramified() const { return ramified_; }
    bool is_split() const { return ramified_.empty(); }
    bool ramified_at(Place v) const;
    bool ramified_at_real() const { return ramified_at(Place::real()); }

    /// Brauer group law: symmetric difference of ramification sets.
    friend QuatClass operator+(QuatClass const& a, QuatClass const& b);
    friend bool operator==(QuatClass const&, QuatClass const&) = default;

    std::string to_string() const;

  private:
    std::vector<Place> ramified_;
};

QuatClass quat_class(SquareClass const& a, SquareClass const& b);
QuatClass quat_class(Rat const& a, Rat const& b);

/// True iff lambda is a norm from Q(sqrt(delta)); delta must not be a square.
bool is_norm(SquareClass const& lambda, SquareClass const& delta);
bool is_norm(Rat const& lambda, SquareClass const& delta);

/// Element of the 2-torsion of H^3(Q), detected at the real place.
struct H3Class {
    bool real_bit = false;

    bool is_zero() const { return !real_bit; }
    friend H3Class operator+(H3Class a, H3Class b) { return H3Class{a.real_bit != b.real_bit}; }
    friend bool operator==(H3Class, H3Class) = default;
};

H3Class h3_symbol(SquareClass const& a, SquareClass const& b, SquareClass const& c);
H3Class h3_symbol(Rat const& a, Rat const& b, Rat const& c);
/// The cup product (lambda) . [A].
H3Class h3_cup(SquareClass const& lambda, QuatClass const& alpha);
H3Class h3_cup(Rat const& lambda, QuatClass const& alpha);

/// Subgroup of H3 under XOR: either {0} or everything.
struct H3Subgroup {
    bool full = false;

    bool contains(H3Class x) const { return full || x.is_zero(); }
    friend bool operator==(H3Subgroup, H3Subgroup) = default;
};

/// The subgroup Q^x . [A] of H3.
H3Subgroup subgroup_alpha(QuatClass const& alpha);

/// H3 modulo Q^x . alpha (the corestriction term vanishes since B is split).
struct CosetSpace {
    H3Subgroup modulus;
    QuatClass alpha;

    friend bool operator==(CosetSpace const&, CosetSpace const&) = default;
};

/// Only the split-B case is supported; beta_split = false is rejected.
CosetSpace coset_space(QuatClass const& alpha, bool beta_split = true);

/// A coset, stored by its canonical representative.
struct Coset {
    H3Class rep;
    CosetSpace space;

    bool is_zero() const { return rep.is_zero(); }
    /// Requires both operands to live in the same quotient.
    friend Coset operator+(Coset const& a, Coset const& b);
    friend bool operator==(Coset const&, Coset const&) = default;
};

Coset reduce(H3Class x, CosetSpace const& space);

}  // namespace arason

#endif  // ARASON_LOCAL_BRAUER_HPP_
