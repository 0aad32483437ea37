#ifndef DQW_JSON_IO_HPP
#define DQW_JSON_IO_HPP

#include <json.hpp>

#include "dqw/coboundary_solver.hpp"
#include "dqw/lambda_series.hpp"
#include "dqw/matrix.hpp"
#include "dqw/positivity.hpp"
#include "dqw/star_product.hpp"
#include "dqw/tau.hpp"

namespace dqw {

/// Keys are kept sorted, so dumps are canonical. Numbers that must stay
/// exact (coefficients, points, theta) are strings such as "3/4-1/2 i".
using json = nlohmann::json;

json to_json(const rational& q);
json to_json(const gaussian& z);
json to_json(const lambda_series& s);
json to_json(const real_lambda_series& s);

/// Term lists: [{"c": .., "lambda": a, "p": [..], "q": [..]}], with "d": [[..], ..]
/// added for cochains. Missing "lambda", "p" or "q" read as zero.
json terms_to_json(const w_element& a);
w_element w_element_from_terms(const json& terms, int n, int order);

json to_json(const w_element& a);
w_element w_element_from_json(const json& j);
json to_json(const matrix_w_element& a);
matrix_w_element matrix_from_json(const json& j);
json to_json(const multi_diff_cochain& phi);
multi_diff_cochain cochain_from_json(const json& j);

json to_json(const rational_matrix& m);
rational_matrix rational_matrix_from_json(const json& j);
json to_json(const star_product_spec& spec);
star_product_spec star_product_from_json(const json& j);
json to_json(const star_validation_report& r);

json to_json(const solver_report& r);
json to_json(const build_report& r);
json to_json(const tau_map& tau);
/// Components and flags only; the build report is not read back.
tau_map tau_map_from_json(const json& j);
json to_json(const poisson_realization_report& r);

json to_json(const state_functional& f);
state_functional state_functional_from_json(const json& j);
json to_json(const positivity_verdict& v);

}  // namespace dqw

#endif  // DQW_JSON_IO_HPP
