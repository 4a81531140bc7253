#ifndef ARASON_EXACT_ARITH_HPP_
#define ARASON_EXACT_ARITH_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace arason {

/// Raised when an input violates a mathematical precondition. The message
/// names the violated invariant.
class PreconditionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when two independent computations of the same quantity disagree.
class ConsistencyError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/* Nonzero-capable exact rational in lowest terms with positive denominator.
 * Zero is representable (it is a valid rational) but every form-entry or
 * scalar consumer rejects it.
 */
class Rat {
  public:
    Rat() : value_(0) {}
    Rat(long n) : value_(n) {}  // NOLINT: implicit by intent
    Rat(mpz_class const& num, mpz_class const& den = 1);
    explicit Rat(mpq_class v);

    /// Parses "p", "-p" or "p/q" (q != 0).
    static Rat parse(std::string const& text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    mpq_class const& value() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    std::string to_string() const;

    friend Rat operator*(Rat const& a, Rat const& b) { return Rat(a.value_ * b.value_); }
    friend Rat operator/(Rat const& a, Rat const& b);
    friend Rat operator+(Rat const& a, Rat const& b) { return Rat(a.value_ + b.value_); }
    friend Rat operator-(Rat const& a, Rat const& b) { return Rat(a.value_ - b.value_); }
    friend Rat operator-(Rat const& a) { return Rat(mpq_class(-a.value_)); }
    friend bool operator==(Rat const& a, Rat const& b) { return a.value_ == b.value_; }

  private:
    mpq_class value_;
};

bool is_prime(std::uint64_t n);
bool is_prime(mpz_class const& n);

/// Prime factors of n >= 1 with multiplicity, in nondecreasing order.
std::vector<mpz_class> factorize(mpz_class const& n);
std::vector<std::uint64_t> factorize(std::uint64_t n);

/// Legendre symbol (a/p) for an odd prime p; returns 0 when p | a.
int legendre(std::int64_t a, std::uint64_t p);
int legendre(mpz_class const& a, std::uint64_t p);

/* An element of Q^x / Q^x^2, stored as the squarefree integer
 * sign * prod(primes). Primes are kept sorted and distinct.
 */
class SquareClass {
  public:
    SquareClass() = default;  // class of 1

    /// Square class of a nonzero rational.
    static SquareClass of(Rat const& r);
    static SquareClass of(long n) { return of(Rat(n)); }
    /// Builds from sign and an arbitrary (unsorted, possibly repeated) prime list.
    static SquareClass from_primes(int sign, std::vector<std::uint64_t> primes);

    int sign() const { return negative_ ? -1 : 1; }
    bool negative() const { return negative_; }
    std::vector<std::uint64_t> const& primes() const { return primes_; }
    bool is_one() const { return !negative_ && primes_.empty(); }
    bool has_prime(std::uint64_t p) const;

    /// The squarefree integer representative.
    mpz_class representative() const;
    Rat as_rat() const { return Rat(representative()); }
    /// Representative reduced modulo m (m >= 1), in [0, m).
    std::uint64_t mod(std::uint64_t m) const;
    /// Representative with p removed (p must divide it), reduced modulo m.
    std::uint64_t unit_part_mod(std::uint64_t p, std::uint64_t m) const;

    std::string to_string() const;

    friend SquareClass operator*(SquareClass const& a, SquareClass const& b);
    friend bool operator==(SquareClass const& a, SquareClass const& b) = default;
    friend bool operator<(SquareClass const& a, SquareClass const& b);

  private:
    bool negative_ = false;
    std::vector<std::uint64_t> primes_;
};

SquareClass square_class(Rat const& r);
inline SquareClass sc_mul(SquareClass const& a, SquareClass const& b) { return a * b; }

}  // namespace arason

#endif  // ARASON_EXACT_ARITH_HPP_
