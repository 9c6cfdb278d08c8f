#include "hecke8/json_io.hpp"

namespace hecke8 {

json to_json(const Dyadic& d) { return d.str(); }

json to_json(const Cyclo8& c) {
  json j = json::array();
  for (int i = 0; i < 4; ++i) j.push_back(c.coeff(i).str());
  return j;
}

json to_json(const Mat2& m) {
  return json::array({m.a.str(), m.b.str(), m.c.str(), m.d.str()});
}

Dyadic dyadic_from_json(const json& j) { return Dyadic::parse(j.get<std::string>()); }

Cyclo8 cyclo8_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4)
    throw std::domain_error("cyclo8_from_json: expected a 4-tuple");
  return Cyclo8(dyadic_from_json(j[0]), dyadic_from_json(j[1]), dyadic_from_json(j[2]),
                dyadic_from_json(j[3]));
}

Mat2 mat2_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4)
    throw std::domain_error("mat2_from_json: expected a 4-tuple");
  return Mat2{dyadic_from_json(j[0]), dyadic_from_json(j[1]), dyadic_from_json(j[2]),
              dyadic_from_json(j[3])};
}

json to_json(const CosetDecomposition& D) {
  json right = json::array(), left = json::array();
  for (const SingleCoset& sc : D.right_cosets) right.push_back(to_json(sc.tail));
  Mat2 rep_inv = D.rep.inverse();
  for (const Mat2& g : D.left_cosets) left.push_back(to_json(g * rep_inv));
  return json{{"schema", "hecke8/coset-decomposition/1"},
              {"label", label_str(D.label)},
              {"rep", to_json(D.rep)},
              {"right_tails", right},
              {"left_tails", left},
              {"count", D.right_cosets.size()}};
}

json hecke_element_to_json(const HeckeElement& f, const Cyclo8& iota) {
  json coeffs = json::array();
  for (const auto& [L, c] : f.coeffs)
    coeffs.push_back(json{{"label", label_str(L)}, {"value", to_json(c)}});
  json j{{"schema", "hecke8/hecke-element/1"},
         {"algebra", algebra_str(f.alg)},
         {"coeffs", coeffs}};
  if (f.alg != Algebra::GL2) j["iota"] = iota == Cyclo8::i4(+1) ? "+i" : "-i";
  return j;
}

HeckeElement hecke_element_from_json(const json& j, Algebra* alg_out,
                                     int* iota_sign_out) {
  std::string alg_s = j.at("algebra").get<std::string>();
  Algebra alg = alg_s == "chi1"  ? Algebra::Chi1
                : alg_s == "chi2" ? Algebra::Chi2
                : alg_s == "gl2"  ? Algebra::GL2
                                  : throw std::domain_error("unknown algebra " + alg_s);
  HeckeElement f{alg, {}};
  Flavor flavor = algebra_flavor(alg);
  for (const json& item : j.at("coeffs")) {
    CosetLabel L = label_parse(item.at("label").get<std::string>(), flavor);
    Cyclo8 v = cyclo8_from_json(item.at("value"));
    if (!v.is_zero()) f.coeffs[L] = v;
  }
  if (alg_out) *alg_out = alg;
  if (iota_sign_out)
    *iota_sign_out = j.value("iota", "+i") == std::string("-i") ? -1 : +1;
  return f;
}

json to_json(const QExpansion& f) {
  json coeffs = json::array();
  for (long n = 1; n <= f.N; ++n)
    if (!f.coeff(n).is_zero()) coeffs.push_back(json::array({n, f.coeff(n).str()}));
  return json{{"schema", "hecke8/qexpansion/1"},
              {"k", f.k},
              {"level", f.level},
              {"N", f.N},
              {"coeffs", coeffs}};
}

QExpansion qexpansion_from_json(const json& j) {
  QExpansion f = QExpansion::zero(j.at("k").get<int>(), j.at("level").get<long>(),
                                  j.at("N").get<long>());
  for (const json& item : j.at("coeffs"))
    f.set(item[0].get<long>(), Dyadic::parse(item[1].get<std::string>()));
  return f;
}

Mat2 mat2_parse(const std::string& s) {
  std::vector<std::string> entries;
  std::string cur;
  for (char ch : s) {
    if (ch == '[' || ch == ']' || ch == ' ') continue;
    if (ch == ',') {
      entries.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) entries.push_back(cur);
  if (entries.size() != 4)
    throw std::domain_error("mat2_parse: expected [[a,b],[c,d]] with 4 entries");
  return Mat2{Dyadic::parse(entries[0]), Dyadic::parse(entries[1]),
              Dyadic::parse(entries[2]), Dyadic::parse(entries[3])};
}

}  // namespace hecke8
