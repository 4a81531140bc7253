#include "arason/lab.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <thread>

namespace arason::lab {

namespace {

SquareClass sc(long a) { return SquareClass::of(a); }

bool is_squarefree(std::uint64_t n)
{
    auto f = factorize(n);
    return std::adjacent_find(f.begin(), f.end()) == f.end();
}

std::uint64_t fnv1a(std::string const& s)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

/* ---------- instance builders ---------- */

std::vector<SquareClass> random_diag(Rng& rng, long height, std::size_t n)
{
    std::vector<SquareClass> d;
    for (std::size_t i = 0; i < n; ++i)
        d.push_back(rng.square_class(height));
    return d;
}

SquareClass product(std::vector<SquareClass> const& d)
{
    SquareClass p;
    for (auto const& a : d)
        p = p * a;
    return p;
}

SquareClass sign_factor(std::size_t n) { return (n * (n - 1) / 2) % 2 ? sc(-1) : SquareClass{}; }

// Replace the last entry so that d(h) equals target.
void force_disc(std::vector<SquareClass>& d, SquareClass const& target)
{
    d.back() = SquareClass{};
    d.back() = target * sign_factor(d.size()) * product(d);
}

SquareClass random_norm(Rng& rng, SquareClass const& delta)
{
    Rat dl = delta.as_rat();
    for (;;) {
        long x = rng.range(-5, 5), y = rng.range(-5, 5);
        Rat v = Rat(x * x) - dl * Rat(y * y);
        if (!v.is_zero())
            return SquareClass::of(v);
    }
}

struct EditWeights {
    unsigned identity = 1, norm = 2, permute = 1, scale = 2, pair_mult = 2, sign_flip = 2, fresh = 2;
};

/* An edit of tau0 preserving the discriminant algebra. Returns the new
 * diagonal and the edit name.
 */
std::pair<std::vector<SquareClass>, std::string> edit(Rng& rng, HermForm const& h0, long height,
                                                      EditWeights const& w)
{
    std::vector<unsigned> weights{w.identity, w.norm, w.permute, w.scale, w.pair_mult, w.sign_flip, w.fresh};
    static const char* names[] = {"identity", "norm", "permute", "scale", "pair_mult", "sign_flip", "fresh"};
    unsigned total = 0;
    for (unsigned x : weights)
        total += x;
    unsigned r = (unsigned)rng.index(total);
    std::size_t kind = 0;
    while (r >= weights[kind])
        r -= weights[kind++];

    auto d = h0.diag();
    std::size_t n = d.size();
    switch (kind) {
    case 0:
        break;
    case 1: {
        std::size_t i = rng.index(n);
        d[i] = d[i] * random_norm(rng, h0.delta());
        break;
    }
    case 2:
        rng.shuffle(d);
        break;
    case 3: {
        SquareClass l = rng.square_class(height);
        for (auto& a : d)
            a = a * l;
        break;
    }
    case 4:
    case 5: {
        if (n < 2)
            break;
        std::size_t i = rng.index(n), j = rng.index(n - 1);
        if (j >= i)
            ++j;
        if (kind == 5 && d[i].sign() != d[j].sign()) {
            // prefer a same-sign pair so the signature moves
            for (std::size_t k = 0; k < n; ++k)
                if (k != i && d[k].sign() == d[i].sign()) {
                    j = k;
                    break;
                }
        }
        SquareClass t = kind == 4 ? rng.square_class(height) : sc(-1);
        d[i] = d[i] * t;
        d[j] = d[j] * t;
        break;
    }
    default: {
        auto fresh = random_diag(rng, height, n);
        if (n % 2 == 0)
            force_disc(fresh, disc_value(h0));
        d = fresh;
        break;
    }
    }
    if (kind != 0 && kind != 2 && rng.coin(0.3))
        rng.shuffle(d);
    return {d, names[kind]};
}

/* ---------- law plumbing ---------- */

struct Outcome {
    enum Kind { Pass, Fail, Invalid } kind = Pass;
    std::string message;
    std::vector<std::string> labels;
};

using Law = std::function<Outcome(Json const&)>;
using Generator = std::function<Json(Rng&, GenConfig const&, std::size_t)>;

struct CheckDef {
    Generator gen;
    Law law;
};

Outcome fail(std::string m) { return Outcome{Outcome::Fail, std::move(m), {}}; }

Outcome evaluate(Law const& law, Json const& instance)
{
    try {
        return law(instance);
    } catch (PreconditionError const& e) {
        return Outcome{Outcome::Invalid, std::string("precondition: ") + e.what(), {}};
    } catch (FormatError const& e) {
        return Outcome{Outcome::Invalid, std::string("format: ") + e.what(), {}};
    } catch (std::exception const& e) {
        return fail(std::string("exception: ") + e.what());
    }
}

std::size_t degree_for(GenConfig const& cfg, std::vector<std::size_t> const& defaults, std::size_t trial)
{
    auto const& list = cfg.degrees.empty() ? defaults : cfg.degrees;
    return list[trial % list.size()];
}

HermContext random_ctx(Rng& rng, GenConfig const& cfg) { return HermContext(rng.pick(cfg.delta_pool)); }

Json pair_instance(Rng& rng, GenConfig const& cfg, std::size_t n, EditWeights const& w = {},
                   bool split_disc = false)
{
    HermContext ctx = random_ctx(rng, cfg);
    auto d0 = random_diag(rng, cfg.height_bound, n);
    if (split_disc)
        force_disc(d0, SquareClass{});
    HermForm h0(ctx, d0);
    auto [d, name] = edit(rng, h0, cfg.height_bound, w);
    return Json{{"tau0", to_json(UnitaryInv(h0))}, {"tau", to_json(UnitaryInv(HermForm(ctx, d)))}, {"edit", name}};
}

std::string str(Json const& j) { return j.dump(); }

std::string coset_str(RelArasonValue const& v) { return to_json(v.value).dump(); }

/* ---------- individual laws ---------- */

Outcome law_reciprocity(Json const& j)
{
    SquareClass a = square_class_from_json(j.at("a")), b = square_class_from_json(j.at("b"));
    int prod = 1;
    for (auto const& v : relevant_places({a, b}))
        prod *= hilbert_symbol(a, b, v);
    if (prod != 1)
        return fail("product of local symbols is -1");
    if (quat_class(a, b).ramified().size() % 2 != 0)
        return fail("odd ramification set");
    return {};
}

Outcome law_e3_pfister(Json const& j)
{
    std::vector<SquareClass> s;
    for (auto const& x : j.at("slots"))
        s.push_back(square_class_from_json(x));
    QuadForm p = pfister(s);
    if (!in_In(p, 3))
        return fail("3-fold Pfister form not in I^3");
    if (!(e3(p) == h3_symbol(s[0], s[1], s[2])))
        return fail("e3 of Pfister form differs from the symbol");
    return {};
}

Outcome law_hm_bruteforce(Json const& j)
{
    QuadForm q = quad_form_from_json(j.at("q"));
    if (q.dim() != 3)
        throw PreconditionError("ternary form expected");
    auto rep = [&](std::size_t i) { return q.diag()[i].representative().get_si(); };
    bool truth = holzer_isotropic(rep(0), rep(1), rep(2));
    Outcome o;
    o.labels.push_back(truth ? "isotropic" : "anisotropic");
    if (is_isotropic(q) != truth)
        return fail(std::string("is_isotropic disagrees with brute force, expected ") + (truth ? "true" : "false"));
    return o;
}

Outcome law_order2(Json const& j)
{
    UnitaryInv t0 = unitary_from_json(j.at("tau0")), t = unitary_from_json(j.at("tau"));
    auto x = rel_arason(t0, t);
    auto y = rel_arason(t, t0);
    if (!(x.value + x.value).is_zero())
        return fail("2 * rel_arason is nonzero");
    if (!(x.value.rep == y.value.rep))
        return fail("rel_arason(tau0,tau) != -rel_arason(tau,tau0): " + coset_str(x) + " vs " + coset_str(y));
    Outcome o;
    o.labels.push_back(x.is_zero() ? "zero" : "nonzero");
    return o;
}

Outcome law_chasles(Json const& j)
{
    UnitaryInv t0 = unitary_from_json(j.at("tau0")), t1 = unitary_from_json(j.at("tau1")),
               t2 = unitary_from_json(j.at("tau2"));
    auto a = rel_arason(t0, t1), b = rel_arason(t1, t2), c = rel_arason(t0, t2);
    Outcome o;
    if (!(a.value.space == b.value.space))
        return fail("quotients differ for matched triple");
    if (!(a.value + b.value == c.value))
        return fail("cocycle relation fails: " + coset_str(a) + " + " + coset_str(b) + " != " + coset_str(c));
    if (!rel_arason(t0, t0).is_zero())
        return fail("rel_arason(tau0,tau0) nonzero");
    if (!(rel_arason(t1, t0).value.rep == a.value.rep))
        return fail("symmetry fails");
    o.labels.push_back(c.is_zero() ? "zero" : "nonzero");
    return o;
}

std::vector<SquareClass> theta_lambdas() { return {sc(1), sc(-1), sc(2), sc(-2), sc(3), sc(-3), sc(5), sc(-5)}; }

Outcome law_theta_sum(Json const& j)
{
    UnitaryInv t0 = unitary_from_json(j.at("tau0")), t = unitary_from_json(j.at("tau"));
    auto rel = rel_arason(t0, t);
    Outcome o;
    o.labels.push_back(rel.is_zero() ? "zero" : "nonzero");
    if (t.degree() % 2 == 1) {
        SquareClass l = split_theta_scalar(t0, t);
        auto hyp = e3_hyp(theta_lambda(t0, t, l));
        if (!(reduce(hyp.value.rep, rel.value.space) == rel.value))
            return fail("rel_arason != e3_hyp(theta) for lambda = " + str(to_json(l)));
        return o;
    }
    QuatClass d0 = disc_algebra(t0);
    std::vector<H3Class> values;
    for (auto const& l : theta_lambdas()) {
        auto hyp = e3_hyp(theta_lambda(t0, t, l));
        if (!(reduce(hyp.value.rep, rel.value.space) == rel.value))
            return fail("rel_arason != e3_hyp(theta) for lambda = " + str(to_json(l)));
        values.push_back(hyp.value.rep);
    }
    auto ls = theta_lambdas();
    for (std::size_t i = 0; i < ls.size(); ++i)
        for (std::size_t k = i + 1; k < ls.size(); ++k)
            if (!(values[i] + values[k] == h3_cup(ls[i] * ls[k], d0)))
                return fail("difference law fails for lambdas " + str(to_json(ls[i])) + ", " + str(to_json(ls[k])));
    return o;
}

Outcome law_theta_lambda_indep(Json const& j)
{
    UnitaryInv t0 = unitary_from_json(j.at("tau0")), t = unitary_from_json(j.at("tau"));
    std::vector<SquareClass> lambdas;
    if (t.degree() % 2 == 0) {
        lambdas = theta_lambdas();
    } else {
        SquareClass base = split_theta_scalar(t0, t);
        SquareClass delta = t.ctx().delta();
        for (long x = 1; x <= 4; ++x)
            lambdas.push_back(base * SquareClass::of(Rat(x * x) - delta.as_rat()));
        lambdas.push_back(base);
    }
    auto space = t.degree() % 2 == 0 ? coset_space(disc_algebra(t0)) : coset_space(QuatClass{});
    std::optional<Coset> first;
    for (auto const& l : lambdas) {
        Coset c = reduce(e3_hyp(theta_lambda(t0, t, l)).value.rep, space);
        if (first && !(*first == c))
            return fail("e3_hyp(theta_lambda) depends on lambda = " + str(to_json(l)));
        first = c;
    }
    return {};
}

Outcome law_rank2(Json const& j)
{
    UnitaryInv t0 = unitary_from_json(j.at("tau0"));
    SquareClass l = square_class_from_json(j.at("lambda"));
    auto r = rank2_factor(t0, l);
    H3Class expected = h3_cup(l, disc_algebra(t0));
    if (!(r.value == expected))
        return fail("e3_hyp of rank-2 factor differs from (lambda).D");
    // independent path: signature rule on the trace of <1,-lambda> (x) h0
    QuadForm q = trace_form(r.involution.rep());
    H3Class by_sig{(std::abs(q.signature()) / 8) % 2 == 1};
    if (!(by_sig == expected))
        return fail("signature rule disagrees with (lambda).D");
    Outcome o;
    o.labels.push_back(expected.is_zero() ? "zero" : "nonzero");
    return o;
}

Outcome classify_law(Json const& j, std::size_t n)
{
    UnitaryInv t0 = unitary_from_json(j.at("tau0")), t = unitary_from_json(j.at("tau"));
    if (t.degree() != n)
        throw PreconditionError("degree " + std::to_string(n) + " expected");
    bool truth = is_similar_h(t0.rep(), t.rep()).has_value();
    bool by_inv = rel_arason(t0, t).is_zero();
    bool decided = n == 3 ? classify_deg3(t0, t) : n == 4 ? classify_deg4(t0, t) : classify_deg6(t0, t);
    Outcome o;
    o.labels.push_back(truth ? "isomorphic" : "non_isomorphic");
    if (by_inv != truth || decided != truth)
        return fail(std::string("invariant says ") + (by_inv ? "isomorphic" : "non-isomorphic") +
                    ", similarity test says " + (truth ? "similar" : "not similar"));
    return o;
}

Outcome law_deg6_hyperbolic(Json const& j)
{
    UnitaryInv t = unitary_from_json(j.at("tau"));
    bool truth = is_hyperbolic(trace_form(t.rep()));
    bool decided = is_hyperbolic_deg6(t);
    Outcome o;
    o.labels.push_back(truth ? "hyperbolic" : "not_hyperbolic");
    if (decided != truth)
        return fail("hyperbolicity decision disagrees with trace form");
    return o;
}

std::vector<SquareClass> pfister_slot_pool() { return {sc(1), sc(-1), sc(2), sc(-2), sc(3), sc(-3), sc(5), sc(-5)}; }

bool pfister_truth(UnitaryInv const& t)
{
    auto pool = pfister_slot_pool();
    for (std::size_t a = 0; a < pool.size(); ++a)
        for (std::size_t b = a; b < pool.size(); ++b)
            for (std::size_t c = b; c < pool.size(); ++c)
                if (is_similar_h(t.rep(), herm_pfister(t.ctx(), {pool[a], pool[b], pool[c]})))
                    return true;
    return false;
}

Outcome law_deg8_td(Json const& j)
{
    UnitaryInv t = unitary_from_json(j.at("tau"));
    std::string kind = j.value("kind", "random");
    auto dec = dec_deg8(t);
    bool truth = pfister_truth(t);
    Outcome o;
    o.labels.push_back(kind + (dec.decision ? ":true" : ":false"));
    if (dec.decision && dec.outcome == PfisterOutcome::WitnessNotFound) {
        o.labels.push_back("witness_not_found");
        return Outcome{Outcome::Fail, "decision true, witness not found", o.labels};
    }
    if (dec.decision != truth)
        return fail(std::string("decision ") + (dec.decision ? "true" : "false") + " but Pfister similarity " +
                    (truth ? "exists" : "does not exist"));
    if (kind == "constructed" && !dec.decision)
        return fail("constructed decomposable involution decided false");
    if (kind == "obstructed" && dec.decision)
        return fail("signature-obstructed involution decided true");
    if (dec.decision && !is_similar_h(t.rep(), herm_pfister(t.ctx(), dec.slots)))
        return fail("returned slots are not a witness");
    return o;
}

Outcome law_symp_descent(Json const& j)
{
    QuadForm p0 = quad_form_from_json(j.at("phi0")), p = quad_form_from_json(j.at("phi"));
    SquareClass a = square_class_from_json(j.at("a")), delta = square_class_from_json(j.at("delta"));
    auto r = symp_descent_e3(p0, p, a, delta);
    QuatClass quat = quat_class(delta, a);
    H3Class symplectic = h3_cup(p.disc() * p0.disc(), quat);
    if (!(reduce(symplectic, r.relative.value.space) == r.relative.value))
        return fail("symplectic and unitary sides differ");
    if (p.dim() % 2 == 1 && !r.relative.is_zero())
        return fail("odd degree unitary side nonzero");
    Outcome o;
    o.labels.push_back(r.relative.is_zero() ? "zero" : "nonzero");
    return o;
}

Outcome law_orth_descent(Json const& j)
{
    QuadForm q0 = quad_form_from_json(j.at("q0")), q = quad_form_from_json(j.at("q"));
    SquareClass delta = square_class_from_json(j.at("delta"));
    auto r = orth_descent_rel(q0, q, delta);
    if (!(reduce(r.direct, r.relative.value.space) == r.relative.value))
        return fail("direct (delta).[C(q - q0)] and relative invariant differ");
    if (q.dim() % 2 == 1 && r.relative.value.space.modulus.full)
        return fail("odd dimension value not in H^3");
    Outcome o;
    o.labels.push_back(r.relative.is_zero() ? "zero" : "nonzero");
    return o;
}

Outcome law_quad_ext(Json const& j)
{
    HermForm h = herm_form_from_json(j.at("h"));
    auto r = quad_ext_check(h);
    if (!r.disc_ok)
        return fail("discriminant of trace form differs from prediction");
    if (!r.clifford_ok)
        return fail("Clifford invariant of trace form differs from (delta, d(h))");
    if (!r.e2_ok)
        return fail("e2(q_h) differs from the discriminant algebra");
    if (!r.even_clifford_split)
        return fail("even Clifford algebra not split over the extension");
    return {};
}

Outcome law_f3_zero(Json const& j)
{
    UnitaryInv t0 = unitary_from_json(j.at("tau0")), t = unitary_from_json(j.at("tau"));
    if (!f3(t0, t).is_zero())
        return fail("f3 nonzero");
    return {};
}

Outcome law_rescale(Json const& j)
{
    UnitaryInv t0 = unitary_from_json(j.at("tau0")), t = unitary_from_json(j.at("tau"));
    SquareClass l0 = square_class_from_json(j.at("lambda0")), l = square_class_from_json(j.at("lambda"));
    auto base = rel_arason(t0, t);
    auto moved = rel_arason(UnitaryInv(scale_h(t0.rep(), l0)), UnitaryInv(scale_h(t.rep(), l)));
    Outcome o;
    o.labels.push_back(base.is_zero() ? "zero" : "nonzero");
    if (!(base == moved))
        return fail("rel_arason changes under rescaling: " + coset_str(base) + " vs " + coset_str(moved));
    return o;
}

/* ---------- generators ---------- */

Json gen_pair_check(Rng& rng, GenConfig const& cfg, std::size_t trial, std::vector<std::size_t> const& defaults)
{
    return pair_instance(rng, cfg, degree_for(cfg, defaults, trial));
}

Json gen_classify(Rng& rng, GenConfig const& cfg, std::size_t n)
{
    EditWeights w;
    w.sign_flip = 8;
    w.fresh = 3;
    return pair_instance(rng, cfg, n, w, n == 6);
}

Json gen_triple(Rng& rng, GenConfig const& cfg, std::size_t n)
{
    HermContext ctx = random_ctx(rng, cfg);
    HermForm h0(ctx, random_diag(rng, cfg.height_bound, n));
    auto d1 = edit(rng, h0, cfg.height_bound, {}).first;
    auto d2 = edit(rng, h0, cfg.height_bound, {}).first;
    return Json{{"tau0", to_json(UnitaryInv(h0))},
                {"tau1", to_json(UnitaryInv(HermForm(ctx, d1)))},
                {"tau2", to_json(UnitaryInv(HermForm(ctx, d2)))}};
}

Json gen_deg6_hyperbolic(Rng& rng, GenConfig const& cfg)
{
    HermContext ctx = random_ctx(rng, cfg);
    std::vector<SquareClass> d;
    if (rng.coin()) {
        auto half = random_diag(rng, cfg.height_bound, 3);
        for (auto const& a : half) {
            d.push_back(a);
            d.push_back(sc(-1) * a * (rng.coin(0.3) ? random_norm(rng, ctx.delta()) : SquareClass{}));
        }
        rng.shuffle(d);
    } else {
        d = random_diag(rng, cfg.height_bound, 6);
        force_disc(d, SquareClass{});
    }
    return Json{{"tau", to_json(UnitaryInv(HermForm(ctx, d)))}};
}

Json gen_deg8(Rng& rng, GenConfig const& cfg)
{
    HermContext ctx = random_ctx(rng, cfg);
    std::size_t kind = rng.index(3);
    std::vector<SquareClass> d;
    std::string name;
    if (kind == 0) {
        name = "constructed";
        auto slots = random_diag(rng, cfg.height_bound, 3);
        d = herm_pfister(ctx, slots).diag();
        SquareClass l = rng.square_class(cfg.height_bound);
        for (auto& a : d)
            a = a * l;
        std::size_t i = rng.index(8);
        d[i] = d[i] * random_norm(rng, ctx.delta());
        rng.shuffle(d);
    } else if (kind == 1) {
        name = "random";
        d = random_diag(rng, cfg.height_bound, 8);
        force_disc(d, SquareClass{});
    } else {
        // herm signature +-4 over an imaginary field: trace signature +-8
        name = "obstructed";
        std::vector<SquareClass> neg_pool;
        for (auto const& x : cfg.delta_pool)
            if (x.negative())
                neg_pool.push_back(x);
        if (!neg_pool.empty())
            ctx = HermContext(rng.pick(neg_pool));
        for (int i = 0; i < 7; ++i) {
            long v = std::labs(rng.squarefree(cfg.height_bound));
            d.push_back(sc(i == 0 ? -v : v));
        }
        d.push_back(SquareClass{});
        force_disc(d, SquareClass{});
        if (rng.coin()) {
            for (auto& a : d)
                a = a * sc(-1);
        }
        rng.shuffle(d);
    }
    return Json{{"tau", to_json(UnitaryInv(HermForm(ctx, d)))}, {"kind", name}};
}

Json gen_rank2(Rng& rng, GenConfig const& cfg, std::size_t trial)
{
    static const std::vector<long> lambdas{1, -1, 2, -2, 3, -3, 5, -5, 7, -7};
    std::size_t n = degree_for(cfg, {2, 4}, trial);
    HermContext ctx = random_ctx(rng, cfg);
    return Json{{"tau0", to_json(UnitaryInv(HermForm(ctx, random_diag(rng, cfg.height_bound, n))))},
                {"lambda", rng.pick(lambdas)}};
}

Json gen_symp(Rng& rng, GenConfig const& cfg, std::size_t trial)
{
    std::size_t m = degree_for(cfg, {1, 2, 3, 4}, trial);
    auto p0 = random_diag(rng, cfg.height_bound, m);
    auto p = rng.coin(0.2) ? p0 : random_diag(rng, cfg.height_bound, m);
    return Json{{"phi0", to_json(QuadForm(p0))},
                {"phi", to_json(QuadForm(p))},
                {"a", to_json(rng.square_class(cfg.height_bound))},
                {"delta", to_json(rng.pick(cfg.delta_pool))}};
}

Json gen_orth(Rng& rng, GenConfig const& cfg, std::size_t trial)
{
    std::size_t n = degree_for(cfg, {2, 3, 4, 5}, trial);
    SquareClass delta = rng.pick(cfg.delta_pool);
    auto q0 = random_diag(rng, cfg.height_bound, n);
    auto q = random_diag(rng, cfg.height_bound, n);
    if (n % 2 == 0) {
        // match signed discriminants up to a norm
        QuadForm a(q0), b(q);
        q.back() = q.back() * a.disc() * b.disc();
        if (rng.coin())
            q.back() = q.back() * random_norm(rng, delta);
    }
    return Json{{"q0", to_json(QuadForm(q0))}, {"q", to_json(QuadForm(q))}, {"delta", to_json(delta)}};
}

std::map<std::string, CheckDef> const& registry()
{
    static const std::map<std::string, CheckDef> table = [] {
        std::map<std::string, CheckDef> t;
        t["reciprocity"] = {[](Rng& r, GenConfig const& c, std::size_t) {
                                return Json{{"a", r.squarefree(c.height_bound)}, {"b", r.squarefree(c.height_bound)}};
                            },
                            law_reciprocity};
        t["e3_pfister"] = {[](Rng& r, GenConfig const& c, std::size_t) {
                               return Json{{"slots", {r.squarefree(c.height_bound), r.squarefree(c.height_bound),
                                                      r.squarefree(c.height_bound)}}};
                           },
                           law_e3_pfister};
        t["hm_bruteforce"] = {[](Rng& r, GenConfig const& c, std::size_t) {
                                  return Json{{"q", to_json(QuadForm(random_diag(r, c.height_bound, 3)))}};
                              },
                              law_hm_bruteforce};
        t["order2"] = {[](Rng& r, GenConfig const& c, std::size_t i) { return gen_pair_check(r, c, i, {3, 4, 6, 8}); },
                       law_order2};
        t["chasles"] = {[](Rng& r, GenConfig const& c, std::size_t i) {
                            return gen_triple(r, c, degree_for(c, {4, 6, 8}, i));
                        },
                        law_chasles};
        t["theta_sum"] = {[](Rng& r, GenConfig const& c, std::size_t i) { return gen_pair_check(r, c, i, {2, 4, 6}); },
                          law_theta_sum};
        t["theta_lambda_indep"] = {[](Rng& r, GenConfig const& c, std::size_t i) {
                                       return gen_pair_check(r, c, i, {2, 3, 4, 5});
                                   },
                                   law_theta_lambda_indep};
        t["rank2"] = {gen_rank2, law_rank2};
        t["deg3_classify"] = {[](Rng& r, GenConfig const& c, std::size_t) { return gen_classify(r, c, 3); },
                              [](Json const& j) { return classify_law(j, 3); }};
        t["deg4_classify"] = {[](Rng& r, GenConfig const& c, std::size_t) { return gen_classify(r, c, 4); },
                              [](Json const& j) { return classify_law(j, 4); }};
        t["deg6_classify"] = {[](Rng& r, GenConfig const& c, std::size_t) { return gen_classify(r, c, 6); },
                              [](Json const& j) { return classify_law(j, 6); }};
        t["deg6_hyperbolic"] = {[](Rng& r, GenConfig const& c, std::size_t) { return gen_deg6_hyperbolic(r, c); },
                                law_deg6_hyperbolic};
        t["deg8_td"] = {[](Rng& r, GenConfig const& c, std::size_t) { return gen_deg8(r, c); }, law_deg8_td};
        t["symp_descent"] = {gen_symp, law_symp_descent};
        t["orth_descent"] = {gen_orth, law_orth_descent};
        t["quad_ext"] = {[](Rng& r, GenConfig const& c, std::size_t i) {
                             std::size_t n = degree_for(c, {1, 2, 3, 4, 5, 6, 7, 8}, i);
                             return Json{{"h", to_json(HermForm(random_ctx(r, c), random_diag(r, c.height_bound, n)))}};
                         },
                         law_quad_ext};
        t["f3_zero"] = {[](Rng& r, GenConfig const& c, std::size_t i) {
                            return gen_pair_check(r, c, i, {2, 3, 4, 5, 6, 7, 8});
                        },
                        law_f3_zero};
        t["rescale"] = {[](Rng& r, GenConfig const& c, std::size_t i) {
                            Json j = gen_pair_check(r, c, i, {3, 4, 6, 8});
                            j["lambda0"] = r.squarefree(c.height_bound);
                            j["lambda"] = r.squarefree(c.height_bound);
                            return j;
                        },
                        law_rescale};
        return t;
    }();
    return table;
}

CheckDef const& lookup(std::string const& name)
{
    auto it = registry().find(name);
    if (it == registry().end())
        throw std::invalid_argument("unknown check \"" + name + "\"");
    return it->second;
}

void for_each_int(Json& j, std::string const& key, std::function<void(Json&)> const& f)
{
    if (j.is_object()) {
        for (auto& [k, v] : j.items())
            if (k != "degree" && k != "kind" && k != "edit")
                for_each_int(v, k, f);
    } else if (j.is_array()) {
        for (auto& v : j)
            for_each_int(v, key, f);
    } else if (j.is_number_integer()) {
        f(j);
    }
}

}  // namespace

std::vector<SquareClass> default_delta_pool() { return {sc(-1), sc(2), sc(-2), sc(3), sc(-3), sc(5), sc(-7)}; }

std::size_t Rng::index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(eng_); }

long Rng::range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }

bool Rng::coin(double p) { return std::bernoulli_distribution(p)(eng_); }

long Rng::squarefree(long bound)
{
    if (bound < 1)
        throw std::invalid_argument("height bound must be positive");
    for (;;) {
        long v = range(-bound, bound);
        if (v != 0 && is_squarefree((std::uint64_t)std::labs(v)))
            return v;
    }
}

std::vector<HermForm> gen_herm(GenConfig const& cfg, HermContext const& ctx, std::size_t rank)
{
    Rng rng(cfg.seed);
    std::vector<HermForm> out;
    for (std::size_t i = 0; i < cfg.trials; ++i)
        out.emplace_back(ctx, random_diag(rng, cfg.height_bound, rank));
    return out;
}

std::vector<std::pair<UnitaryInv, UnitaryInv>> gen_matched_pair(GenConfig const& cfg, HermContext const& ctx,
                                                                 std::size_t n)
{
    if (n < 2)
        throw PreconditionError("matched pairs need degree >= 2");
    Rng rng(cfg.seed);
    std::vector<std::pair<UnitaryInv, UnitaryInv>> out;
    for (std::size_t i = 0; i < cfg.trials; ++i) {
        HermForm h0(ctx, random_diag(rng, cfg.height_bound, n));
        auto d = edit(rng, h0, cfg.height_bound, {}).first;
        HermForm h(ctx, d);
        // fallback: rejection sampling on the discriminant algebra
        while (n % 2 == 0 && !(disc_algebra_h(h0) == disc_algebra_h(h)))
            h = HermForm(ctx, random_diag(rng, cfg.height_bound, n));
        out.emplace_back(UnitaryInv(h0), UnitaryInv(h));
    }
    return out;
}

std::size_t CheckReport::stat(std::string const& key) const
{
    auto it = stats.find(key);
    return it == stats.end() ? 0 : it->second;
}

Json to_json(CheckReport const& r, bool include_timing)
{
    Json failures = Json::array();
    for (auto const& f : r.failures)
        failures.push_back(Json{{"trial", f.trial}, {"instance", f.instance}, {"message", f.message}});
    Json j{{"check", r.check}, {"seed", r.seed}, {"trials", r.trials}, {"failures", failures},
           {"passed", r.passed()}, {"stats", r.stats}};
    if (include_timing)
        j["elapsed_ms"] = std::llround(r.elapsed_ms);
    return j;
}

std::vector<std::string> const& check_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (auto const& [k, _] : registry())
            v.push_back(k);
        return v;
    }();
    return names;
}

bool is_check(std::string const& name) { return registry().count(name) > 0; }

std::optional<std::string> replay(std::string const& name, Json const& instance)
{
    Outcome o = evaluate(lookup(name).law, instance);
    if (o.kind == Outcome::Pass)
        return std::nullopt;
    return o.message;
}

Json minimize(std::string const& name, Json instance)
{
    Law const& law = lookup(name).law;
    static const long candidates[] = {1, -1, 2, -2, 3, -3};
    bool progress = true;
    while (progress) {
        progress = false;
        std::vector<Json*> leaves;
        for_each_int(instance, "", [&](Json& leaf) { leaves.push_back(&leaf); });
        for (Json* leaf : leaves) {
            long old = leaf->get<long>();
            for (long c : candidates) {
                if (std::labs(c) >= std::labs(old))
                    continue;
                *leaf = c;
                if (evaluate(law, instance).kind == Outcome::Fail) {
                    progress = true;
                    break;
                }
                *leaf = old;
            }
        }
    }
    return instance;
}

CheckReport run_check(std::string const& name, GenConfig const& cfg)
{
    CheckDef const& def = lookup(name);
    auto start = std::chrono::steady_clock::now();
    Rng rng(cfg.seed ^ fnv1a(name));
    std::vector<Json> instances;
    instances.reserve(cfg.trials);
    for (std::size_t i = 0; i < cfg.trials; ++i)
        instances.push_back(def.gen(rng, cfg, i));

    std::vector<Outcome> outcomes(cfg.trials);
    unsigned workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = (unsigned)std::min<std::size_t>(workers, std::max<std::size_t>(1, cfg.trials));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < cfg.trials; i += workers)
                outcomes[i] = evaluate(def.law, instances[i]);
        });
    for (auto& t : pool)
        t.join();

    CheckReport rep;
    rep.check = name;
    rep.seed = cfg.seed;
    rep.trials = cfg.trials;
    for (std::size_t i = 0; i < cfg.trials; ++i) {
        Outcome const& o = outcomes[i];
        for (auto const& l : o.labels)
            ++rep.stats[l];
        if (instances[i].contains("edit"))
            ++rep.stats["edit:" + instances[i]["edit"].get<std::string>()];
        if (o.kind == Outcome::Pass)
            continue;
        if (o.kind == Outcome::Invalid) {
            rep.failures.push_back({i, instances[i], "generator produced an invalid instance: " + o.message});
            continue;
        }
        Json small = minimize(name, instances[i]);
        auto msg = replay(name, small);
        rep.failures.push_back({i, small, msg ? *msg : o.message});
    }
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

/* ---------- Holzer oracle ---------- */

namespace {

bool is_square(long v)
{
    if (v < 0)
        return false;
    long r = std::lround(std::sqrt((double)v));
    for (long s = std::max(0L, r - 1); s <= r + 1; ++s)
        if (s * s == v)
            return true;
    return false;
}

long isqrt_floor(long v)
{
    long r = (long)std::sqrt((double)v);
    while (r * r > v)
        --r;
    while ((r + 1) * (r + 1) <= v)
        ++r;
    return r;
}

}  // namespace

bool holzer_isotropic(long a, long b, long c)
{
    if (a == 0 || b == 0 || c == 0)
        throw PreconditionError("ternary form entries must be nonzero");
    a = SquareClass::of(a).representative().get_si();
    b = SquareClass::of(b).representative().get_si();
    c = SquareClass::of(c).representative().get_si();
    // Legendre reduction to pairwise coprime squarefree coefficients
    for (bool changed = true; changed;) {
        changed = false;
        long g = std::gcd(std::gcd(a, b), c);
        if (g > 1) {
            a /= g, b /= g, c /= g;
            changed = true;
        }
        long* v[3] = {&a, &b, &c};
        for (int i = 0; i < 3 && !changed; ++i) {
            long& x = *v[i];
            long& y = *v[(i + 1) % 3];
            long& z = *v[(i + 2) % 3];
            long p = std::gcd(x, y);
            if (p > 1) {
                // <p x', p y', z> ~ <x', y', p z>
                x /= p, y /= p, z *= p;
                changed = true;
            }
        }
    }
    if ((a > 0) == (b > 0) && (b > 0) == (c > 0))
        return false;
    // Holzer: a nontrivial zero exists with |x| <= sqrt|bc|, |y| <= sqrt|ca|, |z| <= sqrt|ab|.
    long bx = isqrt_floor(std::labs(b * c)), by = isqrt_floor(std::labs(c * a)), bz = isqrt_floor(std::labs(a * b));
    // solve for the variable with the largest bound
    long coef[3] = {a, b, c};
    long bound[3] = {bx, by, bz};
    int k = 0;
    for (int i = 1; i < 3; ++i)
        if (bound[i] > bound[k])
            k = i;
    int i1 = (k + 1) % 3, i2 = (k + 2) % 3;
    for (long u = 0; u <= bound[i1]; ++u)
        for (long w = 0; w <= bound[i2]; ++w) {
            if (u == 0 && w == 0)
                continue;
            long s = coef[i1] * u * u + coef[i2] * w * w;
            if (s % coef[k] != 0)
                continue;
            long t = -s / coef[k];
            if (is_square(t) && isqrt_floor(t) <= bound[k])
                return true;
        }
    return false;
}

}  // namespace arason::lab
