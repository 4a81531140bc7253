#ifndef ARASON_JSON_IO_HPP_
#define ARASON_JSON_IO_HPP_

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "arason/unitary.hpp"

namespace arason {

using Json = nlohmann::json;

/// Structurally invalid input (wrong shape or type), as opposed to a violated precondition.
class FormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

Json to_json(SquareClass const& c);
Json to_json(Rat const& r);
Json to_json(Place const& v);
Json to_json(QuatClass const& a);
Json to_json(H3Class x);
Json to_json(CosetSpace const& s);
Json to_json(Coset const& c);
Json to_json(QuadForm const& q);
Json to_json(InvariantProfile const& p);
Json to_json(HermForm const& h);
Json to_json(UnitaryInv const& t);

/// Accepts an integer or a "p/q" string.
SquareClass square_class_from_json(Json const& j);
Rat rat_from_json(Json const& j);
QuatClass quat_class_from_json(Json const& j);
QuadForm quad_form_from_json(Json const& j);
HermForm herm_form_from_json(Json const& j);
UnitaryInv unitary_from_json(Json const& j);

}  // namespace arason

#endif  // ARASON_JSON_IO_HPP_
