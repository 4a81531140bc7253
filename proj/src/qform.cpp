#include "arason/qform.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

namespace arason {

namespace {

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

struct LocalData {
    std::size_t dim;
    SquareClass det;
    int eps;
};

bool local_isotropic(LocalData const& d, Place v)
{
    static const SquareClass minus_one = SquareClass::of(-1);
    switch (d.dim) {
    case 0:
    case 1:
        return false;
    case 2:
        return is_local_square(minus_one * d.det, v);
    case 3:
        return hilbert_symbol(minus_one, minus_one * d.det, v) == d.eps;
    case 4:
        return !is_local_square(d.det, v) || d.eps == hilbert_symbol(minus_one, minus_one, v);
    default:
        return true;
    }
}

/* Reduced-echelon basis over F2 that remembers, for each basis vector,
 * which generators were combined to produce it.
 */
class XorBasis {
  public:
    void add(boost::dynamic_bitset<> column)
    {
        std::size_t index = generator_count_++;
        for (auto& m : masks_)
            m.resize(generator_count_);
        boost::dynamic_bitset<> combo(generator_count_);
        combo.set(index);
        reduce(column, combo);
        if (column.none())
            return;
        std::size_t pivot = column.find_first();
        for (std::size_t i = 0; i < vectors_.size(); ++i) {
            if (vectors_[i].test(pivot)) {
                vectors_[i] ^= column;
                masks_[i] ^= combo;
            }
        }
        vectors_.push_back(column);
        masks_.push_back(combo);
        pivots_.push_back(pivot);
    }

    /// Generator subset whose columns sum to target, if any.
    std::optional<boost::dynamic_bitset<>> solve(boost::dynamic_bitset<> target) const
    {
        boost::dynamic_bitset<> combo(generator_count_);
        reduce(target, combo);
        if (target.any())
            return std::nullopt;
        return combo;
    }

  private:
    void reduce(boost::dynamic_bitset<>& v, boost::dynamic_bitset<>& combo) const
    {
        for (std::size_t i = 0; i < vectors_.size(); ++i) {
            if (v.test(pivots_[i])) {
                v ^= vectors_[i];
                combo ^= masks_[i];
            }
        }
    }

    std::size_t generator_count_ = 0;
    std::vector<boost::dynamic_bitset<>> vectors_;
    std::vector<boost::dynamic_bitset<>> masks_;
    std::vector<std::size_t> pivots_;
};

constexpr std::size_t kMaxAuxiliaryPrimes = 20000;

}  // namespace

QuadForm::QuadForm(std::vector<SquareClass> diag) : diag_(std::move(diag))
{
    if (diag_.size() > kMaxFormDim)
        throw PreconditionError("form dimension exceeds " + std::to_string(kMaxFormDim));
}

QuadForm QuadForm::of(std::vector<Rat> const& entries)
{
    std::vector<SquareClass> diag;
    diag.reserve(entries.size());
    for (auto const& r : entries) {
        if (r.is_zero())
            throw PreconditionError("form entries must be nonzero (nondegenerate forms only)");
        diag.push_back(square_class(r));
    }
    return QuadForm(std::move(diag));
}

QuadForm QuadForm::of(std::initializer_list<long> entries)
{
    std::vector<Rat> r(entries.begin(), entries.end());
    return of(r);
}

SquareClass QuadForm::det() const
{
    SquareClass d;
    for (auto const& a : diag_)
        d = d * a;
    return d;
}

SquareClass QuadForm::disc() const
{
    SquareClass d = det();
    if (pair_count(dim()) % 2 == 1)
        d = d * SquareClass::of(-1);
    return d;
}

int QuadForm::signature() const
{
    int s = 0;
    for (auto const& a : diag_)
        s += a.negative() ? -1 : 1;
    return s;
}

int hasse_symbol(QuadForm const& q, Place v)
{
    int s = 1;
    SquareClass prefix;
    for (auto const& a : q.diag()) {
        s *= hilbert_symbol(prefix, a, v);
        prefix = prefix * a;
    }
    return s;
}

InvariantProfile profile(QuadForm const& q)
{
    InvariantProfile p;
    p.dim = q.dim();
    p.disc = q.disc();
    p.signature = q.signature();
    std::vector<Place> ramified;
    for (Place v : relevant_places(q.diag())) {
        if (hasse_symbol(q, v) == -1)
            ramified.push_back(v);
    }
    p.hasse = QuatClass(std::move(ramified));
    return p;
}

QuadForm dsum(QuadForm const& a, QuadForm const& b)
{
    auto diag = a.diag();
    diag.insert(diag.end(), b.diag().begin(), b.diag().end());
    return QuadForm(std::move(diag));
}

QuadForm scale(QuadForm const& q, SquareClass const& lambda)
{
    auto diag = q.diag();
    for (auto& a : diag)
        a = a * lambda;
    return QuadForm(std::move(diag));
}

QuadForm scale(QuadForm const& q, Rat const& lambda)
{
    if (lambda.is_zero())
        throw PreconditionError("scaling factor must be nonzero");
    return scale(q, square_class(lambda));
}

QuadForm tensor(QuadForm const& a, QuadForm const& b)
{
    std::vector<SquareClass> diag;
    diag.reserve(a.dim() * b.dim());
    for (auto const& x : a.diag()) {
        for (auto const& y : b.diag())
            diag.push_back(x * y);
    }
    return QuadForm(std::move(diag));
}

QuadForm neg(QuadForm const& q) { return scale(q, SquareClass::of(-1)); }

QuadForm hyperbolic(std::size_t planes)
{
    std::vector<SquareClass> diag;
    for (std::size_t i = 0; i < planes; ++i) {
        diag.push_back(SquareClass{});
        diag.push_back(SquareClass::of(-1));
    }
    return QuadForm(std::move(diag));
}

QuadForm pfister(std::vector<SquareClass> const& slots)
{
    QuadForm q({SquareClass{}});
    for (auto const& a : slots)
        q = tensor(q, QuadForm({SquareClass{}, SquareClass::of(-1) * a}));
    return q;
}

QuadForm pfister(std::vector<Rat> const& slots)
{
    std::vector<SquareClass> classes;
    for (auto const& r : slots) {
        if (r.is_zero())
            throw PreconditionError("Pfister slots must be nonzero");
        classes.push_back(square_class(r));
    }
    return pfister(classes);
}

bool is_locally_isotropic(QuadForm const& q, Place v)
{
    if (v.is_real())
        return static_cast<std::size_t>(std::abs(q.signature())) < q.dim();
    return local_isotropic({q.dim(), q.det(), hasse_symbol(q, v)}, v);
}

std::size_t local_anisotropic_dim(QuadForm const& q, Place v)
{
    if (v.is_real())
        return static_cast<std::size_t>(std::abs(q.signature()));
    static const SquareClass minus_one = SquareClass::of(-1);
    LocalData d{q.dim(), q.det(), hasse_symbol(q, v)};
    // Split off hyperbolic planes: q = H + q' gives det q' = -det q and
    // eps(q) = eps(q') (-1, det q')_v.
    while (local_isotropic(d, v)) {
        d.dim -= 2;
        d.det = minus_one * d.det;
        d.eps *= hilbert_symbol(minus_one, d.det, v);
    }
    return d.dim;
}

bool is_isotropic(QuadForm const& q)
{
    if (q.dim() < 2)
        return false;
    for (Place v : relevant_places(q.diag())) {
        if (!is_locally_isotropic(q, v))
            return false;
    }
    return true;
}

std::size_t witt_index(QuadForm const& q)
{
    // Hasse-Minkowski: the global index is the minimum of the local indices,
    // and places outside the relevant set never realize that minimum.
    std::size_t index = q.dim() / 2;
    for (Place v : relevant_places(q.diag()))
        index = std::min(index, (q.dim() - local_anisotropic_dim(q, v)) / 2);
    return index;
}

bool is_hyperbolic(QuadForm const& q) { return q.dim() % 2 == 0 && witt_index(q) == q.dim() / 2; }

bool is_isometric(QuadForm const& a, QuadForm const& b)
{
    if (a.dim() != b.dim() || a.signature() != b.signature() || !(a.det() == b.det()))
        return false;
    return profile(a) == profile(b);
}

std::optional<SquareClass> is_similar(QuadForm const& a, QuadForm const& b)
{
    if (a.dim() != b.dim())
        return std::nullopt;
    if (a.dim() == 0)
        return SquareClass{};
    if (a.dim() % 2 == 1) {
        SquareClass lambda = a.det() * b.det();
        if (is_isometric(scale(a, lambda), b))
            return lambda;
        return std::nullopt;
    }

    InvariantProfile pa = profile(a);
    InvariantProfile pb = profile(b);
    if (!(pa.disc == pb.disc))
        return std::nullopt;
    std::optional<bool> need_negative;
    if (pa.signature == 0) {
        if (pb.signature != 0)
            return std::nullopt;
    } else if (pa.signature == pb.signature) {
        need_negative = false;
    } else if (pa.signature == -pb.signature) {
        need_negative = true;
    } else {
        return std::nullopt;
    }

    // For even n, s_v(<lambda> a) s_v(a) = (lambda, d(a))_v with d the signed
    // discriminant, so lambda must satisfy (lambda, c)_v = eps_v at every place.
    SquareClass const c = pa.disc;
    QuatClass const eps = pa.hasse + pb.hasse;
    std::vector<SquareClass> support{c};
    std::vector<std::uint64_t> eps_primes;
    for (Place v : eps.ramified()) {
        if (!v.is_real())
            eps_primes.push_back(v.prime());
    }
    support.push_back(SquareClass::from_primes(1, eps_primes));
    std::vector<Place> places = relevant_places(support);

    for (Place v : places) {
        if (eps.ramified_at(v) && is_local_square(c, v))
            return std::nullopt;
    }

    std::size_t rows = places.size() + (need_negative ? 1 : 0);
    boost::dynamic_bitset<> target(rows);
    for (std::size_t i = 0; i < places.size(); ++i)
        target[i] = eps.ramified_at(places[i]);
    if (need_negative)
        target[places.size()] = *need_negative;

    std::vector<SquareClass> generators;
    XorBasis basis;
    auto add_generator = [&](SquareClass const& g) {
        boost::dynamic_bitset<> col(rows);
        for (std::size_t i = 0; i < places.size(); ++i)
            col[i] = hilbert_symbol(g, c, places[i]) == -1;
        if (need_negative)
            col[places.size()] = g.negative();
        generators.push_back(g);
        basis.add(col);
    };

    add_generator(SquareClass::of(-1));
    std::set<std::uint64_t> used;
    for (Place v : places) {
        if (!v.is_real()) {
            add_generator(SquareClass::from_primes(1, {v.prime()}));
            used.insert(v.prime());
        }
    }

    auto solution = basis.solve(target);
    std::uint64_t candidate = 3;
    std::size_t aux = 0;
    while (!solution && aux < kMaxAuxiliaryPrimes) {
        for (;; candidate += 2) {
            if (used.count(candidate) || !is_prime(static_cast<std::uint64_t>(candidate)))
                continue;
            if (legendre(static_cast<std::int64_t>(c.mod(candidate)), candidate) == 1)
                break;
        }
        add_generator(SquareClass::from_primes(1, {candidate}));
        candidate += 2;
        ++aux;
        solution = basis.solve(target);
    }
    if (!solution)
        throw std::runtime_error("similarity witness search exhausted");

    SquareClass lambda;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (i < solution->size() && solution->test(i))
            lambda = lambda * generators[i];
    }
    if (!is_isometric(scale(a, lambda), b))
        throw std::logic_error("similarity witness failed verification");
    return lambda;
}

QuatClass clifford_class(QuadForm const& q)
{
    static const SquareClass minus_one = SquareClass::of(-1);
    QuatClass s = profile(q).hasse;
    SquareClass d = q.det();
    switch (q.dim() % 8) {
    case 1:
    case 2:
        return s;
    case 3:
    case 4:
        return s + quat_class(minus_one, minus_one * d);
    case 5:
    case 6:
        return s + quat_class(minus_one, minus_one);
    default:
        return s + quat_class(minus_one, d);
    }
}

bool in_In(QuadForm const& q, int n)
{
    if (n < 1 || n > 4)
        throw PreconditionError("I^n membership is decided for n in 1..4 only");
    if (q.dim() % 2 != 0)
        return false;
    if (n == 1)
        return true;
    if (!q.disc().is_one())
        return false;
    if (n == 2)
        return true;
    if (!clifford_class(q).is_split())
        return false;
    if (n == 3)
        return true;
    return q.signature() % 16 == 0;
}

SquareClass e1(QuadForm const& q)
{
    if (!in_In(q, 1))
        throw PreconditionError("e1 requires q in I (even dimension)");
    return q.disc();
}

QuatClass e2(QuadForm const& q)
{
    if (!in_In(q, 2))
        throw PreconditionError("e2 requires q in I^2 (even dimension, trivial discriminant)");
    return clifford_class(q);
}

H3Class e3(QuadForm const& q)
{
    if (!in_In(q, 3))
        throw PreconditionError("e3 requires q in I^3 (trivial discriminant and Clifford invariant)");
    int sig = q.signature();
    if (sig % 8 != 0)
        throw std::logic_error("form in I^3 with signature not divisible by 8");
    return H3Class{(std::abs(sig) / 8) % 2 == 1};
}

namespace {

std::vector<SquareClass> slot_pool(QuadForm const& q, std::optional<SquareClass> const& first_slot)
{
    std::set<std::uint64_t> primes;
    for (auto const& a : q.diag())
        primes.insert(a.primes().begin(), a.primes().end());
    if (first_slot)
        primes.insert(first_slot->primes().begin(), first_slot->primes().end());
    std::vector<std::uint64_t> plist(primes.begin(), primes.end());
    if (plist.size() > 4)
        plist.resize(4);
    std::vector<SquareClass> pool;
    for (std::size_t mask = 0; mask < (std::size_t{1} << plist.size()); ++mask) {
        std::vector<std::uint64_t> chosen;
        for (std::size_t i = 0; i < plist.size(); ++i) {
            if (mask & (std::size_t{1} << i))
                chosen.push_back(plist[i]);
        }
        pool.push_back(SquareClass::from_primes(1, chosen));
        pool.push_back(SquareClass::from_primes(-1, chosen));
    }
    return pool;
}

bool search_slots(QuadForm const& q, std::vector<SquareClass>& slots, std::size_t free_slots,
                  std::vector<SquareClass> const& pool, std::size_t start)
{
    if (free_slots == 0)
        return is_similar(q, pfister(slots)).has_value();
    for (std::size_t i = start; i < pool.size(); ++i) {
        slots.push_back(pool[i]);
        if (search_slots(q, slots, free_slots - 1, pool, i))
            return true;
        slots.pop_back();
    }
    return false;
}

}  // namespace

PfisterMatch pfister_similar(QuadForm const& q, int n, std::optional<SquareClass> const& first_slot)
{
    if (n != 3 && n != 4)
        throw PreconditionError("Pfister recognition is implemented for n in {3,4}");
    if (q.dim() != (std::size_t{1} << n))
        throw PreconditionError("Pfister recognition requires dim(q) = 2^n");
    PfisterMatch match;
    if (!in_In(q, n))
        return match;

    std::vector<SquareClass> prefix;
    if (first_slot)
        prefix.push_back(*first_slot);
    std::size_t free_slots = static_cast<std::size_t>(n) - prefix.size();

    // Over Q the Pfister forms of these sizes are either hyperbolic or
    // +/- definite, so these two candidates decide almost every case.
    for (long canonical : {1L, -1L}) {
        std::vector<SquareClass> slots = prefix;
        slots.resize(static_cast<std::size_t>(n), SquareClass::of(canonical));
        if (is_similar(q, pfister(slots))) {
            match.outcome = PfisterOutcome::Similar;
            match.slots = slots;
            return match;
        }
    }
    std::vector<SquareClass> slots = prefix;
    if (search_slots(q, slots, free_slots, slot_pool(q, first_slot), 0)) {
        match.outcome = PfisterOutcome::Similar;
        match.slots = slots;
        return match;
    }
    match.outcome = PfisterOutcome::WitnessNotFound;
    return match;
}

H3Class orth_rel_odd(QuadForm const& phi0, QuadForm const& phi)
{
    if (phi0.dim() != phi.dim())
        throw PreconditionError("relative orthogonal invariant requires equal dimensions");
    if (phi0.dim() % 2 == 0 || phi0.dim() < 5)
        throw PreconditionError("odd-degree orthogonal invariant requires odd dimension >= 5");
    SquareClass ratio = phi0.disc() * phi.disc();
    QuadForm diff = dsum(phi0, neg(scale(phi, ratio)));
    if (!in_In(diff, 3))
        throw PreconditionError("Clifford algebras not isomorphic");
    return e3(diff);
}

}  // namespace arason
