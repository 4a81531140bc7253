#include "arason/hermitian.hpp"

#include <stdexcept>

namespace arason {

namespace {

void require_same_ctx(HermForm const& a, HermForm const& b)
{
    if (!(a.ctx() == b.ctx()))
        throw PreconditionError("hermitian forms over different quadratic extensions");
}

}  // namespace

HermContext::HermContext(SquareClass delta) : delta_(std::move(delta))
{
    if (delta_.is_one())
        throw PreconditionError("delta must be a non-square: the split etale case is not supported");
}

HermForm::HermForm(HermContext ctx, std::vector<SquareClass> diag)
    : ctx_(std::move(ctx)), diag_(std::move(diag))
{
    if (diag_.empty())
        throw PreconditionError("hermitian form must have rank >= 1");
    if (2 * diag_.size() > kMaxFormDim)
        throw PreconditionError("hermitian rank exceeds " + std::to_string(kMaxFormDim / 2));
}

HermForm HermForm::of(long delta, std::initializer_list<long> entries)
{
    std::vector<SquareClass> diag;
    for (long a : entries)
        diag.push_back(SquareClass::of(a));
    return HermForm(HermContext::of(delta), std::move(diag));
}

bool operator==(NormClass const& a, NormClass const& b)
{
    return a.delta == b.delta && is_norm(a.rep * b.rep, a.delta);
}

QuadForm trace_form(HermForm const& h)
{
    QuadForm base({SquareClass{}, SquareClass::of(-1) * h.delta()});
    return tensor(base, QuadForm(h.diag()));
}

SquareClass disc_value(HermForm const& h)
{
    SquareClass d;
    for (auto const& a : h.diag())
        d = d * a;
    std::size_t n = h.rank();
    if ((n * (n - 1) / 2) % 2 == 1)
        d = d * SquareClass::of(-1);
    return d;
}

NormClass disc_h(HermForm const& h) { return NormClass{disc_value(h), h.delta()}; }

QuatClass disc_algebra_h(HermForm const& h)
{
    if (h.rank() % 2 != 0)
        throw PreconditionError("discriminant algebra defined for even degree");
    return quat_class(h.delta(), disc_value(h));
}

HermForm scale_h(HermForm const& h, SquareClass const& lambda)
{
    auto diag = h.diag();
    for (auto& a : diag)
        a = a * lambda;
    return HermForm(h.ctx(), std::move(diag));
}

HermForm dsum_h(HermForm const& a, HermForm const& b)
{
    require_same_ctx(a, b);
    auto diag = a.diag();
    diag.insert(diag.end(), b.diag().begin(), b.diag().end());
    return HermForm(a.ctx(), std::move(diag));
}

bool is_isometric_h(HermForm const& a, HermForm const& b)
{
    require_same_ctx(a, b);
    return a.rank() == b.rank() && is_isometric(trace_form(a), trace_form(b));
}

std::optional<SquareClass> is_similar_h(HermForm const& a, HermForm const& b)
{
    require_same_ctx(a, b);
    if (a.rank() != b.rank())
        return std::nullopt;
    // The trace of <lambda> h is <lambda> q_h, so a rational similarity factor
    // of the trace forms is a hermitian one.
    auto lambda = is_similar(trace_form(a), trace_form(b));
    if (!lambda)
        return std::nullopt;
    if (!is_isometric_h(scale_h(a, *lambda), b))
        throw std::logic_error("similar as quadratic spaces, hermitian witness not found");
    return lambda;
}

bool is_hyperbolic_h(HermForm const& h) { return is_hyperbolic(trace_form(h)); }

std::size_t witt_index_h(HermForm const& h) { return witt_index(trace_form(h)) / 2; }

HermForm orth_sum_theta(HermForm const& h0, HermForm const& h, SquareClass const& lambda)
{
    return dsum_h(h0, scale_h(h, SquareClass::of(-1) * lambda));
}

HermForm herm_pfister(HermContext const& ctx, std::vector<SquareClass> const& slots)
{
    std::vector<SquareClass> diag{SquareClass{}};
    for (auto const& a : slots) {
        std::vector<SquareClass> next;
        for (auto const& x : diag)
            next.push_back(x);
        for (auto const& x : diag)
            next.push_back(x * SquareClass::of(-1) * a);
        diag = std::move(next);
    }
    return HermForm(ctx, std::move(diag));
}

}  // namespace arason
