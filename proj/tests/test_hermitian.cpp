#include "doctest.h"

#include <random>

#include "arason/hermitian.hpp"

using namespace arason;

namespace {

QuadForm form(std::vector<long> v)
{
    std::vector<SquareClass> d;
    for (long a : v)
        d.push_back(SquareClass::of(a));
    return QuadForm(d);
}

HermForm random_herm(std::mt19937_64& rng, long delta, std::size_t n)
{
    std::vector<SquareClass> d;
    while (d.size() < n) {
        long a = (long)(rng() % 61) - 30;
        if (a != 0)
            d.push_back(SquareClass::of(a));
    }
    return HermForm(HermContext::of(delta), d);
}

}  // namespace

TEST_CASE("trace form examples")
{
    CHECK(trace_form(HermForm::of(-1, {1})) == form({1, 1}));
    CHECK(is_hyperbolic(trace_form(HermForm::of(7, {1, -1}))));
    CHECK(is_isometric(trace_form(HermForm::of(-3, {2, 5})), form({2, 6, 5, 15})));
}

TEST_CASE("discriminants")
{
    CHECK(disc_value(HermForm::of(-1, {1})).is_one());
    CHECK(disc_value(HermForm::of(-1, {1, -1})).is_one());
    CHECK(disc_h(HermForm::of(-1, {1, 2})) == disc_h(HermForm::of(-1, {1, 1})));
    CHECK_FALSE(disc_h(HermForm::of(-1, {1, 3})) == disc_h(HermForm::of(-1, {1, 1})));
    CHECK(disc_algebra_h(HermForm::of(5, {1, -1})).is_split());
    CHECK(disc_algebra_h(HermForm::of(-1, {1, 1})).ramified() ==
          std::vector<Place>{Place::real(), Place::finite(2)});
    CHECK(disc_algebra_h(HermForm::of(3, {1, 1})) == quat_class(SquareClass::of(3), SquareClass::of(-1)));
    CHECK_THROWS_AS(disc_algebra_h(HermForm::of(3, {1, 1, 1})), PreconditionError);
    CHECK_THROWS_AS(HermContext::of(4), PreconditionError);
}

TEST_CASE("isometry, similarity and hyperbolicity")
{
    CHECK(is_isometric_h(HermForm::of(-1, {3, 5, 7}), HermForm::of(-1, {7, 3, 5})));
    auto h = HermForm::of(-3, {1, 2, -7});
    auto w = is_similar_h(h, scale_h(h, SquareClass::of(-1)));
    REQUIRE(w);
    CHECK(is_isometric_h(scale_h(h, *w), scale_h(h, SquareClass::of(-1))));
    CHECK_FALSE(is_similar_h(HermForm::of(-1, {1, 1}), HermForm::of(-1, {1, -1})));
    CHECK(is_hyperbolic_h(HermForm::of(2, {1, -1})));
    CHECK(witt_index_h(HermForm::of(2, {1, -1})) == 1);
    CHECK_FALSE(is_hyperbolic_h(HermForm::of(-1, {1, 1})));
    CHECK(witt_index_h(HermForm::of(-1, {1, 1})) == 0);
    CHECK(is_hyperbolic_h(HermForm::of(-1, {1, 2, -1, -2})));
    CHECK(witt_index_h(HermForm::of(-1, {1, 2, -1, -2})) == 2);
    CHECK(is_hyperbolic_h(orth_sum_theta(h, h, SquareClass{})));
    CHECK_THROWS_AS(dsum_h(HermForm::of(-1, {1}), HermForm::of(2, {1})), PreconditionError);
}

TEST_CASE("norm rescaling of an entry is an isometry")
{
    std::mt19937_64 rng(8);
    for (long delta : {-1, 2, -3, 5, -7}) {
        for (int i = 0; i < 40; ++i) {
            auto h = random_herm(rng, delta, 1 + rng() % 4);
            long x = (long)(rng() % 9) - 4, y = (long)(rng() % 9) - 4;
            long nrm = x * x - delta * y * y;
            if (nrm == 0)
                continue;
            auto d = h.diag();
            d[0] = d[0] * SquareClass::of(nrm);
            CHECK(is_isometric_h(h, HermForm(h.ctx(), d)));
        }
    }
}

TEST_CASE("hermitian similarity is sound")
{
    std::mt19937_64 rng(12);
    for (int i = 0; i < 200; ++i) {
        long delta = std::vector<long>{-1, 2, -3, 5, -7}[rng() % 5];
        std::size_t n = 1 + rng() % 4;
        auto a = random_herm(rng, delta, n);
        auto b = random_herm(rng, delta, n);
        if (auto lam = is_similar_h(a, b))
            CHECK(is_isometric_h(scale_h(a, *lam), b));
    }
}

TEST_CASE("hermitian pfister")
{
    auto ctx = HermContext::of(-1);
    auto p = herm_pfister(ctx, {SquareClass::of(2), SquareClass::of(-3)});
    CHECK(p.rank() == 4);
    CHECK(trace_form(p) == tensor(form({1, 1}), form({1, -2, 3, -6})));
}
