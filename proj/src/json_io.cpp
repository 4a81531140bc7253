#include "arason/json_io.hpp"

namespace arason {

namespace {

Json const& field(Json const& j, char const* key)
{
    if (!j.is_object() || !j.contains(key))
        throw FormatError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::vector<SquareClass> diag_from_json(Json const& j)
{
    if (!j.is_array())
        throw FormatError("\"diag\" must be an array");
    std::vector<SquareClass> out;
    for (auto const& e : j)
        out.push_back(square_class_from_json(e));
    return out;
}

Json diag_to_json(std::vector<SquareClass> const& d)
{
    Json out = Json::array();
    for (auto const& c : d)
        out.push_back(to_json(c));
    return out;
}

}  // namespace

Json to_json(SquareClass const& c)
{
    mpz_class r = c.representative();
    if (r.fits_slong_p())
        return Json(r.get_si());
    return Json(r.get_str());
}

Json to_json(Rat const& r) { return Json(r.to_string()); }

Json to_json(Place const& v)
{
    if (v.is_real())
        return Json("real");
    return Json(v.prime());
}

Json to_json(QuatClass const& a)
{
    Json out = Json::array();
    for (auto const& v : a.ramified())
        out.push_back(to_json(v));
    return out;
}

Json to_json(H3Class x) { return Json(x.real_bit ? 1 : 0); }

Json to_json(CosetSpace const& s)
{
    return Json{{"alpha", to_json(s.alpha)}, {"modulus", s.modulus.full ? "full" : "zero"}};
}

Json to_json(Coset const& c) { return Json{{"value", to_json(c.rep)}, {"space", to_json(c.space)}}; }

Json to_json(QuadForm const& q) { return Json{{"diag", diag_to_json(q.diag())}}; }

Json to_json(InvariantProfile const& p)
{
    return Json{{"dim", p.dim}, {"disc", to_json(p.disc)}, {"hasse", to_json(p.hasse)}, {"signature", p.signature}};
}

Json to_json(HermForm const& h) { return Json{{"delta", to_json(h.delta())}, {"diag", diag_to_json(h.diag())}}; }

Json to_json(UnitaryInv const& t)
{
    return Json{{"delta", to_json(t.ctx().delta())}, {"degree", t.degree()}, {"diag", diag_to_json(t.rep().diag())}};
}

Rat rat_from_json(Json const& j)
{
    if (j.is_number_integer())
        return Rat(mpz_class(std::to_string(j.get<long long>())));
    if (j.is_string()) {
        try {
            return Rat::parse(j.get<std::string>());
        } catch (std::exception const& e) {
            throw FormatError("bad rational \"" + j.get<std::string>() + "\"");
        }
    }
    throw FormatError("expected an integer or \"p/q\" string, got " + j.dump());
}

SquareClass square_class_from_json(Json const& j)
{
    Rat r = rat_from_json(j);
    if (r.is_zero())
        throw PreconditionError("entries and scalars must be nonzero");
    return SquareClass::of(r);
}

QuatClass quat_class_from_json(Json const& j)
{
    if (!j.is_array())
        throw FormatError("quaternion class must be an array of places");
    std::vector<Place> places;
    for (auto const& e : j) {
        if (e.is_string() && e.get<std::string>() == "real")
            places.push_back(Place::real());
        else if (e.is_number_unsigned())
            places.push_back(Place::finite(e.get<std::uint64_t>()));
        else
            throw FormatError("bad place " + e.dump());
    }
    return QuatClass(places);
}

QuadForm quad_form_from_json(Json const& j) { return QuadForm(diag_from_json(field(j, "diag"))); }

HermForm herm_form_from_json(Json const& j)
{
    return HermForm(HermContext(square_class_from_json(field(j, "delta"))), diag_from_json(field(j, "diag")));
}

UnitaryInv unitary_from_json(Json const& j)
{
    HermForm h = herm_form_from_json(j);
    if (j.contains("degree")) {
        Json const& d = j.at("degree");
        if (!d.is_number_unsigned())
            throw FormatError("\"degree\" must be a positive integer");
        if (d.get<std::size_t>() != h.rank())
            throw PreconditionError("degree does not match the length of diag");
    }
    return UnitaryInv(h);
}

}  // namespace arason
