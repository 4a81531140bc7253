#include "doctest.h"

#include <random>

#include "arason/unitary.hpp"

using namespace arason;

namespace {

QuadForm form(std::vector<long> v)
{
    std::vector<SquareClass> d;
    for (long a : v)
        d.push_back(SquareClass::of(a));
    return QuadForm(d);
}

SquareClass sc(long a) { return SquareClass::of(a); }

}  // namespace

TEST_CASE("discriminant algebra")
{
    auto ctx = HermContext::of(-1);
    CHECK(disc_algebra(hyperbolic_involution(ctx, 4)).is_split());
    auto t = UnitaryInv::of(-1, {1, 1});
    CHECK(disc_algebra(t).ramified() == std::vector<Place>{Place::real(), Place::finite(2)});
    CHECK(disc_algebra(UnitaryInv(scale_h(t.rep(), sc(-5)))) == disc_algebra(t));
}

TEST_CASE("relative invariant basics")
{
    auto t = UnitaryInv::of(-1, {1, 2, -3, 5});
    CHECK(rel_arason(t, t).is_zero());
    CHECK(f3(t, t).is_zero());
    auto h = hyperbolic_involution(HermContext::of(-1), 4);
    CHECK(e3_hyp(h).is_zero());
    auto def = UnitaryInv::of(-1, {1, 1, 1, 1});
    CHECK_FALSE(e3_hyp(def).is_zero());
    CHECK(e3_hyp(def) == rel_arason(h, def));
    CHECK(f3(h, def).is_zero());
    CHECK_THROWS_AS(rel_arason(UnitaryInv::of(-1, {1, 1}), UnitaryInv::of(-1, {1, -1})), PreconditionError);
    CHECK_THROWS_AS(rel_arason(UnitaryInv::of(-1, {1, 1}), UnitaryInv::of(2, {1, 1})), PreconditionError);
}

TEST_CASE("totally decomposable degree 8")
{
    auto ctx = HermContext::of(-1);
    auto td = UnitaryInv(herm_pfister(ctx, {sc(2), sc(-3), sc(5)}));
    CHECK(e3_td(td).is_zero());
    auto dec = dec_deg8(td);
    CHECK(dec.decision);
    REQUIRE(dec.outcome == PfisterOutcome::Similar);
    CHECK(is_similar_h(td.rep(), herm_pfister(ctx, dec.slots)));

    auto hyp = dec_deg8(hyperbolic_involution(ctx, 8));
    CHECK(hyp.decision);
    CHECK(hyp.slots == std::vector<SquareClass>{sc(1), sc(1), sc(1)});

    auto bad = UnitaryInv::of(-1, {1, 1, 1, 1, 1, 1, -1, -1});
    CHECK_FALSE(dec_deg8(bad).decision);
}

TEST_CASE("orthogonal sums")
{
    auto t = UnitaryInv::of(-3, {1, 2, 7});
    CHECK(is_hyperbolic_h(theta_lambda(t, t, sc(1)).rep()));
    auto t2 = UnitaryInv::of(-3, {5, -1, 3});
    auto lam = split_theta_scalar(t, t2);
    CHECK(disc_algebra(theta_lambda(t, t2, lam)).is_split());
}

TEST_CASE("rank-2 factor")
{
    auto t0 = UnitaryInv::of(-1, {1, 1});
    auto r = rank2_factor(t0, sc(-1));
    CHECK(r.value.real_bit);
    CHECK(h3_cup(sc(-1), disc_algebra(t0)).real_bit);
    CHECK_FALSE(rank2_factor(t0, sc(1)).value.real_bit);
    CHECK_FALSE(rank2_factor(t0, sc(3)).value.real_bit);
}

TEST_CASE("descent")
{
    auto a = symp_descent_e3(form({1, 3}), form({1, 3}), sc(-1), sc(-1));
    CHECK(a.direct.is_zero());
    CHECK(a.relative.is_zero());
    auto b = symp_descent_e3(form({1, 1}), form({1, 2}), sc(-1), sc(-1));
    CHECK(b.direct.is_zero());
    auto c = symp_descent_e3(form({1, 1}), form({1, -1}), sc(-1), sc(-1));
    CHECK(c.direct.real_bit);
    CHECK(c.relative.value.rep == c.direct);

    auto o = orth_descent_rel(form({1, 1}), form({2, 2}), sc(-1));
    CHECK(reduce(o.direct, o.relative.value.space) == o.relative.value);
    auto odd = orth_descent_rel(form({1, 1, 1}), form({1, -1, 1}), sc(-1));
    CHECK_FALSE(odd.relative.value.space.modulus.full);
    CHECK(orth_descent_rel(form({1, 5}), form({1, 5}), sc(3)).direct.is_zero());
}

TEST_CASE("quadratic extension invariants")
{
    CHECK(quad_ext_check(HermForm::of(-1, {1, -1})).ok());
    auto r = quad_ext_check(HermForm::of(5, {1}));
    CHECK(r.ok());
    CHECK(r.trace_profile.disc == sc(5));
    CHECK(quad_ext_check(HermForm::of(-7, {2, 3, -5, 11})).ok());
}

TEST_CASE("classification")
{
    auto a = UnitaryInv::of(-1, {1, 1, 1});
    CHECK(classify_deg3(a, a));
    CHECK_FALSE(classify_deg3(a, UnitaryInv::of(-1, {1, 1, -1})));
    auto b = UnitaryInv::of(-1, {1, 2, 3, 6});
    CHECK(classify_deg4(b, UnitaryInv(scale_h(b.rep(), sc(-7)))));
    auto h6 = hyperbolic_involution(HermContext::of(-1), 6);
    CHECK(is_hyperbolic_deg6(h6));
    CHECK(classify_deg6(h6, h6));
    CHECK_FALSE(is_hyperbolic_deg6(UnitaryInv::of(-1, {1, 1, 1, 1, 1, 1})));
    CHECK_THROWS_AS(classify_deg6(h6, UnitaryInv::of(-1, {1, 1, 1, 1, 1, 1})), PreconditionError);
}
