#pragma once

#include "wd/conjugacy.hpp"
#include "wd/fixtures.hpp"
#include "wd/isocrystal.hpp"
#include "wd/monodromy.hpp"
#include "wd/wdpair.hpp"

#include "json.hpp"

#include <string>

namespace wd {

/* ordered so dumped documents keep a stable key order */
using Json = nlohmann::ordered_json;

/* rationals as "a/b" strings, field elements as coordinate arrays, matrices
   as arrays of rows; documents carry their field under a "field" key */
Json rational_json(const Rational& r);
Json element_json(const FieldElement& x);
Json matrix_json(const Matrix& m);
Json field_json(const FieldPtr& K);
Json group_json(const GroupSpec& g);
Json pair_json(const WDPair& p);
Json presentation_json(const TamePresentation& t);
Json log_module_json(const LogModule& m);
Json phi_n_json(const PhiNModule& m);
Json finite_image_json(const FiniteImagePair& f);
Json invariant_json(const ChainInvariant& inv);
Json verdict_json(const Verdict& v);

Rational rational_from_json(const Json& j);
FieldPtr field_from_json(const Json& j);
FieldElement element_from_json(const Json& j, const FieldPtr& K);
Matrix matrix_from_json(const Json& j, const FieldPtr& K);
GroupSpec group_from_json(const Json& j, const FieldPtr& K);
WDPair pair_from_json(const Json& j);
TamePresentation presentation_from_json(const Json& j);
LogModule log_module_from_json(const Json& j);
PhiNModule phi_n_from_json(const Json& j);
FiniteImagePair finite_image_from_json(const Json& j);

/* parse text, converting syntax errors into ParseError with the byte offset */
Json parse_document(const std::string& text);

}
