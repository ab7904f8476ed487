#pragma once

#include "liesymp/construct.hpp"

#include <json.hpp>

namespace liesymp {

using Json = nlohmann::ordered_json;

Json algebra_to_json(const LieAlgebra &g);
LieAlgebra algebra_from_json(const Json &j);

// forms serialize as [{"idx": [i, j, ...], "c": "coeff"}, ...]
Json form_to_json(const KForm &w);
KForm form_from_json(int degree, int ambient, const Json &j,
                     const std::map<std::string, Rational> &params = {});

Json subspace_to_json(const Subspace &s);
Subspace subspace_from_json(int ambient, const Json &j);

// matrix from rows of expression strings, evaluated at `params`
Mat mat_from_json(const Json &j, const std::map<std::string, Rational> &params);
Json mat_to_json(const Mat &m);

Vec vec_from_json(const Json &j, const std::map<std::string, Rational> &params);
Json vec_to_json(const Vec &v);

std::map<std::string, Rational> params_from_json(const Json &j);

Json fingerprint_to_json(const Fingerprint &fp);

} // namespace liesymp
