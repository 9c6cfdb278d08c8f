#pragma once

#include <json.hpp>

#include "hecke8/cosets.hpp"
#include "hecke8/hecke.hpp"
#include "hecke8/qexp.hpp"

namespace hecke8 {

using nlohmann::json;

json to_json(const Dyadic& d);
json to_json(const Cyclo8& c);  // 4-tuple of exact rational strings
json to_json(const Mat2& m);    // 4-tuple of dyadic strings [a,b,c,d]
Dyadic dyadic_from_json(const json& j);
Cyclo8 cyclo8_from_json(const json& j);
Mat2 mat2_from_json(const json& j);

// {schema, label, rep, right_tails, left_tails, count}
json to_json(const CosetDecomposition& D);

// {schema, algebra, iota, coeffs: [{label, value}]}
json hecke_element_to_json(const HeckeElement& f, const Cyclo8& iota);
HeckeElement hecke_element_from_json(const json& j, Algebra* alg_out = nullptr,
                                     int* iota_sign_out = nullptr);

// {schema, k, level, N, coeffs: [[n, value]...]} (sparse)
json to_json(const QExpansion& f);
QExpansion qexpansion_from_json(const json& j);

// Matrix literal "[[a,b],[c,d]]" with dyadic entries, as accepted by the CLI.
Mat2 mat2_parse(const std::string& s);

}  // namespace hecke8
