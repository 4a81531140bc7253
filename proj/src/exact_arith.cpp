#include "arason/exact_arith.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace arason {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTrialLimit = 1000000;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m)
{
    u64 result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1)
            result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// First 13 primes: a deterministic witness set below 3.3 * 10^24.
constexpr unsigned kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool miller_rabin_u64(u64 n)
{
    if (n < 2)
        return false;
    for (unsigned p : kWitnesses) {
        if (n % p == 0)
            return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (unsigned a : kWitnesses) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

u64 rho_u64(u64 n)
{
    if (n % 2 == 0)
        return 2;
    for (u64 c = 1;; ++c) {
        // Brent's cycle detection with batched gcds.
        u64 y = 2, x = 2, q = 1, g = 1, ys = 2;
        u64 r = 1;
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        do {
            x = y;
            for (u64 i = 0; i < r; ++i)
                y = f(y);
            u64 k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (u64 i = 0; i < std::min<u64>(128, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += 128;
            }
            r <<= 1;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void split_u64(u64 n, std::vector<u64>& out)
{
    if (n == 1)
        return;
    if (miller_rabin_u64(n)) {
        out.push_back(n);
        return;
    }
    u64 d = rho_u64(n);
    split_u64(d, out);
    split_u64(n / d, out);
}

bool miller_rabin_mpz(mpz_class const& n)
{
    if (n < 2)
        return false;
    if (n.fits_ulong_p())
        return miller_rabin_u64(n.get_ui());
    for (unsigned p : kWitnesses) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p))
            return false;
    }
    mpz_class nm1 = n - 1;
    mpz_class d = nm1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    for (unsigned a : kWitnesses) {
        mpz_class x;
        mpz_class base = a;
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == nm1)
            continue;
        bool composite = true;
        for (unsigned long r = 1; r < s; ++r) {
            x = x * x % n;
            if (x == nm1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

mpz_class rho_mpz(mpz_class const& n)
{
    for (unsigned long c = 1;; ++c) {
        mpz_class x = 2, y = 2, g = 1;
        auto f = [&](mpz_class const& v) { return mpz_class((v * v + c) % n); };
        while (g == 1) {
            x = f(x);
            y = f(f(y));
            mpz_class diff = abs(x - y);
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (g != n)
            return g;
    }
}

void split_mpz(mpz_class const& n, std::vector<mpz_class>& out)
{
    if (n == 1)
        return;
    if (n.fits_ulong_p()) {
        std::vector<u64> small;
        split_u64(n.get_ui(), small);
        for (u64 p : small)
            out.emplace_back(static_cast<unsigned long>(p));
        return;
    }
    if (miller_rabin_mpz(n)) {
        out.push_back(n);
        return;
    }
    mpz_class d = rho_mpz(n);
    split_mpz(d, out);
    split_mpz(n / d, out);
}

std::vector<u64> parity_primes(std::vector<mpz_class> const& factors)
{
    std::map<u64, int> count;
    for (auto const& p : factors) {
        if (!p.fits_ulong_p())
            throw PreconditionError("square class support exceeds 64-bit primes");
        count[p.get_ui()] ^= 1;
    }
    std::vector<u64> out;
    for (auto const& [p, parity] : count) {
        if (parity)
            out.push_back(p);
    }
    return out;
}

}  // namespace

Rat::Rat(mpz_class const& num, mpz_class const& den) : value_(num, den)
{
    if (den == 0)
        throw PreconditionError("rational with zero denominator");
    value_.canonicalize();
}

Rat::Rat(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rat Rat::parse(std::string const& text)
{
    auto slash = text.find('/');
    mpz_class num, den = 1;
    try {
        if (slash == std::string::npos) {
            num = mpz_class(text, 10);
        } else {
            num = mpz_class(text.substr(0, slash), 10);
            den = mpz_class(text.substr(slash + 1), 10);
        }
    } catch (std::invalid_argument const&) {
        throw PreconditionError("malformed rational \"" + text + "\"");
    }
    return Rat(num, den);
}

std::string Rat::to_string() const
{
    if (value_.get_den() == 1)
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rat operator/(Rat const& a, Rat const& b)
{
    if (b.is_zero())
        throw PreconditionError("division by zero");
    return Rat(mpq_class(a.value_ / b.value_));
}

bool is_prime(std::uint64_t n) { return miller_rabin_u64(n); }
bool is_prime(mpz_class const& n) { return miller_rabin_mpz(n); }

std::vector<std::uint64_t> factorize(std::uint64_t n)
{
    if (n == 0)
        throw PreconditionError("factorize requires n >= 1");
    std::vector<u64> out;
    for (u64 p = 2; p <= kTrialLimit && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    }
    split_u64(n, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<mpz_class> factorize(mpz_class const& n)
{
    if (n < 1)
        throw PreconditionError("factorize requires n >= 1");
    std::vector<mpz_class> out;
    if (n.fits_ulong_p()) {
        for (u64 p : factorize(static_cast<u64>(n.get_ui())))
            out.emplace_back(static_cast<unsigned long>(p));
        return out;
    }
    mpz_class m = n;
    for (unsigned long p = 2; p <= kTrialLimit && mpz_class(p) * p <= m; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            out.emplace_back(p);
            m /= p;
        }
    }
    split_mpz(m, out);
    std::sort(out.begin(), out.end());
    return out;
}

int legendre(std::int64_t a, std::uint64_t p)
{
    std::int64_t r = a % static_cast<std::int64_t>(p);
    if (r < 0)
        r += static_cast<std::int64_t>(p);
    if (r == 0)
        return 0;
    u64 e = powmod(static_cast<u64>(r), (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

int legendre(mpz_class const& a, std::uint64_t p)
{
    mpz_class pp = static_cast<unsigned long>(p);
    return mpz_legendre(a.get_mpz_t(), pp.get_mpz_t());
}

SquareClass SquareClass::of(Rat const& r)
{
    if (r.is_zero())
        throw PreconditionError("square class of zero is undefined");
    mpz_class num = abs(r.numerator());
    auto factors = factorize(num);
    auto den_factors = factorize(r.denominator());
    factors.insert(factors.end(), den_factors.begin(), den_factors.end());
    SquareClass out;
    out.negative_ = r.sign() < 0;
    out.primes_ = parity_primes(factors);
    return out;
}

SquareClass SquareClass::from_primes(int sign, std::vector<std::uint64_t> primes)
{
    std::sort(primes.begin(), primes.end());
    SquareClass out;
    out.negative_ = sign < 0;
    for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i])
            ++j;
        if ((j - i) % 2 == 1)
            out.primes_.push_back(primes[i]);
        i = j;
    }
    return out;
}

bool SquareClass::has_prime(std::uint64_t p) const
{
    return std::binary_search(primes_.begin(), primes_.end(), p);
}

mpz_class SquareClass::representative() const
{
    mpz_class v = 1;
    for (u64 p : primes_)
        v *= static_cast<unsigned long>(p);
    return negative_ ? mpz_class(-v) : v;
}

std::uint64_t SquareClass::mod(std::uint64_t m) const
{
    u64 r = 1 % m;
    for (u64 p : primes_)
        r = mulmod(r, p % m, m);
    if (negative_ && r != 0)
        r = m - r;
    return r;
}

std::uint64_t SquareClass::unit_part_mod(std::uint64_t p, std::uint64_t m) const
{
    u64 r = 1 % m;
    for (u64 q : primes_) {
        if (q != p)
            r = mulmod(r, q % m, m);
    }
    if (negative_ && r != 0)
        r = m - r;
    return r;
}

std::string SquareClass::to_string() const { return representative().get_str(); }

SquareClass operator*(SquareClass const& a, SquareClass const& b)
{
    SquareClass out;
    out.negative_ = a.negative_ != b.negative_;
    std::set_symmetric_difference(a.primes_.begin(), a.primes_.end(), b.primes_.begin(),
                                  b.primes_.end(), std::back_inserter(out.primes_));
    return out;
}

bool operator<(SquareClass const& a, SquareClass const& b)
{
    if (a.negative_ != b.negative_)
        return a.negative_;
    return a.primes_ < b.primes_;
}

SquareClass square_class(Rat const& r) { return SquareClass::of(r); }

}  // namespace arason
