#pragma once

#include "json.hpp"

#include "skewdet/decomp.hpp"
#include "skewdet/nested_det.hpp"
#include "skewdet/paths.hpp"
#include "skewdet/polynomial.hpp"
#include "skewdet/tableaux.hpp"

namespace skewdet {

using Json = nlohmann::json;

/* Parse errors throw std::invalid_argument. Big integers are decimal strings. */
Json to_json(const SkewShape& s);
SkewShape shape_from_json(const Json& j);

Json to_json(const Diagram& d);
Diagram diagram_from_json(const Json& j);

Json to_json(const Decomposition& d);
/* Strips are taken as given; shared corners are recomputed, never read. */
Decomposition decomposition_from_json(const Json& j);

Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j, int nvars);

Json to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j);

Json to_json(const ValidationReport& r);
Json to_json(const IdentityReport& r);
Json to_json(const DoubleLatticePath& p);
Json to_json(const PathTuple& t);

Json big(const mpz_class& v);
Json big(const mpq_class& v);

Json read_json_file(const std::string& path);

}  // namespace skewdet
