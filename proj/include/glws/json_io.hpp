#pragma once

#include <json.hpp>

#include "glws/chord_diagram.hpp"
#include "glws/permutation.hpp"
#include "glws/polynomial.hpp"
#include "glws/sign_function.hpp"
#include "glws/uea.hpp"

namespace glws {

using Json = nlohmann::ordered_json;

/// {"k": 3, "images": [3, 1, 2]}    (1-based)
Json permutation_to_json(const Permutation& sigma);
Permutation permutation_from_json(const Json& j);

/// {"n": 2, "pairs": [[1, 2], [3, 4]]}    (1-based)
Json chord_diagram_to_json(const ChordDiagram& d);
ChordDiagram chord_diagram_from_json(const Json& j);

/// [{"coeff_num": 1, "coeff_den": 1, "monomial": [[3, 1]]}, ...]
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

/// {"linear": [3], "quadratic": [[1, 2], [1, 3]]}    (1-based)
Json sign_function_to_json(const SignFunction& f);

/// {"m": 1, "n": 1, "terms": [{"coeff_num":..., "coeff_den":..., "monomial": [[i, j, exp]]}]}
Json uea_element_to_json(const UEAElement& x);

}  // namespace glws
