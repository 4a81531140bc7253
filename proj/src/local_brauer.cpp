#include "arason/local_brauer.hpp"

#include <algorithm>
#include <set>

namespace arason {

namespace {

int odd_prime_symbol(SquareClass const& a, SquareClass const& b, std::uint64_t p)
{
    // a = p^alpha u, b = p^beta v with u, v units and alpha, beta in {0,1}.
    bool alpha = a.has_prime(p);
    bool beta = b.has_prime(p);
    if (!alpha && !beta)
        return 1;
    int result = 1;
    if (alpha && beta && (p % 4 == 3))
        result = -result;
    if (beta)
        result *= legendre(static_cast<std::int64_t>(a.unit_part_mod(p, p)), p);
    if (alpha)
        result *= legendre(static_cast<std::int64_t>(b.unit_part_mod(p, p)), p);
    return result;
}

int two_adic_symbol(SquareClass const& a, SquareClass const& b)
{
    bool alpha = a.has_prime(2);
    bool beta = b.has_prime(2);
    std::uint64_t u = a.unit_part_mod(2, 8);
    std::uint64_t v = b.unit_part_mod(2, 8);
    auto eps = [](std::uint64_t x) { return ((x - 1) / 2) % 2; };
    auto omega = [](std::uint64_t x) { return ((x * x - 1) / 8) % 2; };
    std::uint64_t exponent = eps(u) * eps(v);
    if (alpha)
        exponent += omega(v);
    if (beta)
        exponent += omega(u);
    return exponent % 2 ? -1 : 1;
}

}  // namespace

Place Place::finite(std::uint64_t p)
{
    if (p < 2 || !is_prime(p))
        throw PreconditionError("finite place requires a prime, got " + std::to_string(p));
    return Place(p);
}

std::string Place::to_string() const { return is_real() ? "real" : std::to_string(prime_); }

int hilbert_symbol(SquareClass const& a, SquareClass const& b, Place v)
{
    if (v.is_real())
        return (a.negative() && b.negative()) ? -1 : 1;
    if (v.prime() == 2)
        return two_adic_symbol(a, b);
    return odd_prime_symbol(a, b, v.prime());
}

int hilbert_symbol(Rat const& a, Rat const& b, Place v)
{
    return hilbert_symbol(square_class(a), square_class(b), v);
}

bool is_local_square(SquareClass const& c, Place v)
{
    if (v.is_real())
        return !c.negative();
    std::uint64_t p = v.prime();
    if (c.has_prime(p))
        return false;
    if (p == 2)
        return c.mod(8) == 1;
    return legendre(static_cast<std::int64_t>(c.mod(p)), p) == 1;
}

std::vector<Place> relevant_places(std::vector<SquareClass> const& classes)
{
    std::set<std::uint64_t> primes{2};
    for (auto const& c : classes)
        primes.insert(c.primes().begin(), c.primes().end());
    std::vector<Place> out{Place::real()};
    for (auto p : primes)
        out.push_back(Place::finite(p));
    return out;
}

QuatClass::QuatClass(std::vector<Place> ramified) : ramified_(std::move(ramified))
{
    std::sort(ramified_.begin(), ramified_.end());
    ramified_.erase(std::unique(ramified_.begin(), ramified_.end()), ramified_.end());
    if (ramified_.size() % 2 != 0)
        throw PreconditionError("quaternion ramification set must have even cardinality");
}

bool QuatClass::ramified_at(Place v) const
{
    return std::binary_search(ramified_.begin(), ramified_.end(), v);
}

QuatClass operator+(QuatClass const& a, QuatClass const& b)
{
    std::vector<Place> out;
    std::set_symmetric_difference(a.ramified_.begin(), a.ramified_.end(), b.ramified_.begin(),
                                  b.ramified_.end(), std::back_inserter(out));
    return QuatClass(std::move(out));
}

std::string QuatClass::to_string() const
{
    std::string s = "{";
    for (std::size_t i = 0; i < ramified_.size(); ++i) {
        if (i)
            s += ",";
        s += ramified_[i].to_string();
    }
    return s + "}";
}

QuatClass quat_class(SquareClass const& a, SquareClass const& b)
{
    std::vector<Place> ramified;
    for (Place v : relevant_places({a, b})) {
        if (hilbert_symbol(a, b, v) == -1)
            ramified.push_back(v);
    }
    return QuatClass(std::move(ramified));
}

QuatClass quat_class(Rat const& a, Rat const& b) { return quat_class(square_class(a), square_class(b)); }

bool is_norm(SquareClass const& lambda, SquareClass const& delta)
{
    if (delta.is_one())
        throw PreconditionError("norm test requires delta to be a non-square (split etale case excluded)");
    return quat_class(delta, lambda).is_split();
}

bool is_norm(Rat const& lambda, SquareClass const& delta) { return is_norm(square_class(lambda), delta); }

H3Class h3_symbol(SquareClass const& a, SquareClass const& b, SquareClass const& c)
{
    return H3Class{a.negative() && b.negative() && c.negative()};
}

H3Class h3_symbol(Rat const& a, Rat const& b, Rat const& c)
{
    return h3_symbol(square_class(a), square_class(b), square_class(c));
}

H3Class h3_cup(SquareClass const& lambda, QuatClass const& alpha)
{
    return H3Class{lambda.negative() && alpha.ramified_at_real()};
}

H3Class h3_cup(Rat const& lambda, QuatClass const& alpha) { return h3_cup(square_class(lambda), alpha); }

H3Subgroup subgroup_alpha(QuatClass const& alpha) { return H3Subgroup{alpha.ramified_at_real()}; }

CosetSpace coset_space(QuatClass const& alpha, bool beta_split)
{
    if (!beta_split)
        throw PreconditionError("non-split B out of scope");
    return CosetSpace{subgroup_alpha(alpha), alpha};
}

Coset operator+(Coset const& a, Coset const& b)
{
    if (a.space.modulus != b.space.modulus)
        throw PreconditionError("cosets live in different quotients of H3");
    return reduce(a.rep + b.rep, a.space);
}

Coset reduce(H3Class x, CosetSpace const& space)
{
    if (space.modulus.contains(x))
        return Coset{H3Class{}, space};
    return Coset{x, space};
}

}  // namespace arason
