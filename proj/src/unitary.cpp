#include "arason/unitary.hpp"

namespace arason {

namespace {

void require_pair(UnitaryInv const& tau0, UnitaryInv const& tau)
{
    if (!(tau0.ctx() == tau.ctx()))
        throw PreconditionError("involutions over different quadratic extensions");
    if (tau0.degree() != tau.degree())
        throw PreconditionError("involutions of different degree");
}

void require_degree(UnitaryInv const& tau, std::size_t n)
{
    if (tau.degree() != n)
        throw PreconditionError("degree must be " + std::to_string(n) + ", got " +
                                std::to_string(tau.degree()));
}

void require_split_disc(UnitaryInv const& tau, char const* what)
{
    if (!disc_algebra(tau).is_split())
        throw PreconditionError(std::string(what) + " requires split discriminant algebra");
}

SquareClass minus_one() { return SquareClass::of(-1); }

HermForm herm_from_quad(SquareClass const& delta, QuadForm const& q)
{
    return HermForm(HermContext(delta), q.diag());
}

}  // namespace

UnitaryInv::UnitaryInv(HermForm rep) : rep_(std::move(rep))
{
    if (rep_.rank() < 2)
        throw PreconditionError("unitary involution needs degree >= 2");
}

UnitaryInv UnitaryInv::of(long delta, std::initializer_list<long> entries)
{
    return UnitaryInv(HermForm::of(delta, entries));
}

UnitaryInv hyperbolic_involution(HermContext const& ctx, std::size_t degree)
{
    if (degree % 2 != 0)
        throw PreconditionError("hyperbolic involution needs even degree");
    std::vector<SquareClass> diag;
    for (std::size_t i = 0; i < degree / 2; ++i) {
        diag.emplace_back();
        diag.push_back(minus_one());
    }
    return UnitaryInv(HermForm(ctx, std::move(diag)));
}

QuatClass disc_algebra(UnitaryInv const& tau) { return disc_algebra_h(tau.rep()); }

RelArasonValue rel_arason(UnitaryInv const& tau0, UnitaryInv const& tau)
{
    require_pair(tau0, tau);
    HermForm const& h0 = tau0.rep();
    HermForm h = tau.rep();
    CosetSpace space = coset_space(QuatClass{});
    if (tau.degree() % 2 == 1) {
        h = scale_h(h, disc_value(h0) * disc_value(h));
    } else {
        QuatClass a0 = disc_algebra(tau0);
        if (!(a0 == disc_algebra(tau)))
            throw PreconditionError(
                "relative invariant needs isomorphic discriminant algebras in even degree");
        space = coset_space(a0);
    }
    QuadForm diff = dsum(trace_form(h), neg(trace_form(h0)));
    if (!in_In(diff, 3))
        throw ConsistencyError("trace-form difference not in I^3");
    return RelArasonValue{reduce(e3(diff), space)};
}

RelArasonValue e3_hyp(UnitaryInv const& tau)
{
    if (tau.degree() % 2 != 0)
        throw PreconditionError("hyperbolic invariant needs even degree");
    require_split_disc(tau, "hyperbolic invariant");
    QuadForm q = trace_form(tau.rep());
    if (!in_In(q, 3))
        throw ConsistencyError("trace form not in I^3");
    return RelArasonValue{reduce(e3(q), coset_space(QuatClass{}))};
}

RelArasonValue e3_td(UnitaryInv const& tau)
{
    require_degree(tau, 8);
    require_split_disc(tau, "degree-8 invariant");
    RelArasonValue v = e3_hyp(tau);
    UnitaryInv base(herm_pfister(tau.ctx(), {minus_one(), minus_one(), minus_one()}));
    if (!(rel_arason(base, tau) == v))
        throw ConsistencyError("e3_td disagrees with the invariant relative to <<-1,-1,-1>>");
    return v;
}

H3Class f3(UnitaryInv const& tau0, UnitaryInv const& tau)
{
    H3Class x = rel_arason(tau0, tau).value.rep;
    return x + x;
}

UnitaryInv theta_lambda(UnitaryInv const& tau0, UnitaryInv const& tau, SquareClass const& lambda)
{
    require_pair(tau0, tau);
    UnitaryInv out(orth_sum_theta(tau0.rep(), tau.rep(), lambda));
    if (tau.degree() % 2 == 0 && disc_algebra(tau0) == disc_algebra(tau) &&
        !disc_algebra(out).is_split())
        throw ConsistencyError("orthogonal sum of matched pair has non-split discriminant algebra");
    return out;
}

SquareClass split_theta_scalar(UnitaryInv const& tau0, UnitaryInv const& tau)
{
    require_pair(tau0, tau);
    SquareClass base = disc_value(tau0.rep()) * disc_value(tau.rep());
    // base times any norm works; try the plain candidate first
    std::vector<SquareClass> norms{SquareClass{}, SquareClass::of(Rat(1) - tau.ctx().delta().as_rat())};
    for (auto const& nrm : norms) {
        SquareClass lambda = base * nrm;
        if (disc_algebra(UnitaryInv(orth_sum_theta(tau0.rep(), tau.rep(), lambda))).is_split())
            return lambda;
    }
    throw ConsistencyError("no scalar found splitting the discriminant algebra");
}

Rank2Factor rank2_factor(UnitaryInv const& tau0, SquareClass const& lambda)
{
    if (tau0.degree() % 2 != 0)
        throw PreconditionError("rank-2 factor needs even degree");
    UnitaryInv inv(orth_sum_theta(tau0.rep(), tau0.rep(), lambda));
    H3Class value = e3_hyp(inv).value.rep;
    if (!(value == h3_cup(lambda, disc_algebra(tau0))))
        throw ConsistencyError("rank-2 factor invariant differs from (lambda).D");
    return Rank2Factor{std::move(inv), value};
}

DescentComparison symp_descent_e3(QuadForm const& phi0, QuadForm const& phi, SquareClass const& a,
                                  SquareClass const& delta)
{
    if (phi0.dim() != phi.dim() || phi0.dim() == 0)
        throw PreconditionError("symplectic descent needs forms of equal positive dimension");
    HermContext ctx(delta);
    QuatClass quat = quat_class(delta, a);
    H3Class direct = h3_cup(phi.disc() * phi0.disc(), quat);

    QuadForm base = QuadForm({SquareClass{}, minus_one() * a});
    UnitaryInv t0(HermForm(ctx, tensor(base, phi0).diag()));
    UnitaryInv t(HermForm(ctx, tensor(base, phi).diag()));
    RelArasonValue rel = rel_arason(t0, t);
    if (!(reduce(direct, rel.value.space) == rel.value))
        throw ConsistencyError("symplectic descent: direct and relative invariants differ");
    if (phi.dim() % 2 == 1 && !rel.is_zero())
        throw ConsistencyError("symplectic descent: odd degree invariant not zero");
    return DescentComparison{direct, rel};
}

DescentComparison orth_descent_rel(QuadForm const& q0, QuadForm const& q, SquareClass const& delta)
{
    if (q0.dim() != q.dim() || q0.dim() < 2)
        throw PreconditionError("orthogonal descent needs forms of equal dimension >= 2");
    HermContext ctx(delta);
    SquareClass ratio = q0.disc() * q.disc();
    QuadForm a = q0;
    QuadForm b = q;
    CosetSpace space = coset_space(QuatClass{});
    if (q.dim() % 2 == 1) {
        b = scale(q, ratio);
    } else {
        if (!ratio.is_one() && !is_norm(ratio, delta))
            throw PreconditionError(
                "orthogonal descent: d(q0) d(q) must be a norm so the discriminant algebras agree");
        auto diag = q0.diag();
        diag[0] = diag[0] * ratio;
        a = QuadForm(diag);
        space = coset_space(quat_class(delta, a.disc()));
    }
    H3Class direct = h3_cup(delta, e2(dsum(b, neg(a))));
    RelArasonValue rel =
        rel_arason(UnitaryInv(herm_from_quad(delta, q0)), UnitaryInv(herm_from_quad(delta, q)));
    if (!(rel.value.space == space))
        throw ConsistencyError("orthogonal descent: quotient groups differ");
    if (!(reduce(direct, space) == rel.value))
        throw ConsistencyError("orthogonal descent: direct and relative invariants differ");
    return DescentComparison{direct, rel};
}

QuadExtReport quad_ext_check(HermForm const& h)
{
    QuadExtReport r;
    r.rank = h.rank();
    QuadForm q = trace_form(h);
    r.trace_profile = profile(q);
    r.predicted_disc = h.rank() % 2 == 1 ? h.delta() : SquareClass{};
    r.disc_ok = r.trace_profile.disc == r.predicted_disc;
    r.predicted_clifford = quat_class(h.delta(), disc_value(h));
    r.clifford_ok = clifford_class(q) == r.predicted_clifford;
    if (h.rank() % 2 == 0)
        r.e2_ok = in_In(q, 2) && e2(q) == disc_algebra_h(h);
    else
        r.even_clifford_split = true;  // (delta, x) splits over Q(sqrt(delta))
    return r;
}

namespace {

bool checked_classification(UnitaryInv const& tau0, UnitaryInv const& tau, char const* name)
{
    bool decided = rel_arason(tau0, tau).is_zero();
    bool truth = is_similar_h(tau0.rep(), tau.rep()).has_value();
    if (decided != truth)
        throw ConsistencyError(std::string(name) + ": invariant disagrees with similarity test");
    return decided;
}

}  // namespace

bool classify_deg3(UnitaryInv const& tau0, UnitaryInv const& tau)
{
    require_pair(tau0, tau);
    require_degree(tau, 3);
    return checked_classification(tau0, tau, "classify_deg3");
}

bool classify_deg4(UnitaryInv const& tau0, UnitaryInv const& tau)
{
    require_pair(tau0, tau);
    require_degree(tau, 4);
    return checked_classification(tau0, tau, "classify_deg4");
}

bool classify_deg6(UnitaryInv const& tau0, UnitaryInv const& tau)
{
    require_pair(tau0, tau);
    require_degree(tau, 6);
    require_split_disc(tau0, "degree-6 classification");
    require_split_disc(tau, "degree-6 classification");
    return checked_classification(tau0, tau, "classify_deg6");
}

bool is_hyperbolic_deg6(UnitaryInv const& tau)
{
    require_degree(tau, 6);
    bool decided = disc_algebra(tau).is_split() && e3_hyp(tau).is_zero();
    if (decided != is_hyperbolic_h(tau.rep()))
        throw ConsistencyError("is_hyperbolic_deg6: invariant disagrees with hyperbolicity test");
    return decided;
}

Deg8Decomposition dec_deg8(UnitaryInv const& tau)
{
    require_degree(tau, 8);
    Deg8Decomposition out;
    out.decision = disc_algebra(tau).is_split() && e3_td(tau).is_zero();
    if (!out.decision)
        return out;
    PfisterMatch m = pfister_similar(trace_form(tau.rep()), 4, tau.ctx().delta());
    out.outcome = m.outcome;
    if (m.outcome == PfisterOutcome::NotSimilar)
        throw ConsistencyError("dec_deg8: invariants vanish but trace form is not a Pfister multiple");
    if (m.outcome == PfisterOutcome::Similar) {
        out.slots.assign(m.slots.begin() + 1, m.slots.end());
        if (!is_similar_h(tau.rep(), herm_pfister(tau.ctx(), out.slots)))
            throw ConsistencyError("dec_deg8: recovered Pfister slots do not match");
    }
    return out;
}

}  // namespace arason
