#include "permpath/json_io.hpp"

#include <limits>

#include "permpath/errors.hpp"

namespace permpath::json {

namespace {

void expect(bool ok, const char* what) {
  if (!ok) throw InvalidInput(std::string("malformed JSON: ") + what);
}

}  // namespace

json from_bigint(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

BigInt to_bigint(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  expect(j.is_string(), "integer must be a number or a decimal string");
  const auto s = j.get<std::string>();
  expect(!s.empty() && s.find_first_not_of("-0123456789") == std::string::npos, "bad decimal string");
  return BigInt(s);
}

json encode(const Permutation& p) { return json(p.letters()); }

Permutation decode_permutation(const json& j) {
  expect(j.is_array(), "permutation must be an array of integers");
  std::vector<int> w;
  for (const auto& x : j) {
    expect(x.is_number_integer(), "permutation must be an array of integers");
    w.push_back(x.get<int>());
  }
  return Permutation(std::move(w));
}

json encode(const LatticePath& p) {
  json out = json::array();
  for (Step s : p.steps()) out.push_back(s == Step::Up ? "U" : "D");
  return out;
}

LatticePath decode_path(const json& j) {
  expect(j.is_array(), "path must be an array of \"U\"/\"D\"");
  std::vector<Step> steps;
  for (const auto& x : j) {
    expect(x.is_string(), "path steps must be strings");
    const auto s = x.get<std::string>();
    expect(s == "U" || s == "D", "path steps must be \"U\" or \"D\"");
    steps.push_back(s == "U" ? Step::Up : Step::Down);
  }
  return LatticePath(std::move(steps));
}

json encode(const IntPolynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(from_bigint(c));
  return {{"coeffs", coeffs}};
}

IntPolynomial decode_polynomial(const json& j) {
  expect(j.is_object() && j.contains("coeffs") && j["coeffs"].is_array(), "polynomial needs a coeffs array");
  std::vector<BigInt> c;
  for (const auto& x : j["coeffs"]) c.push_back(to_bigint(x));
  return IntPolynomial(std::move(c));
}

json encode(const Decomposition& d) {
  return {{"rho", encode(d.rho)}, {"sigma", d.sigma ? encode(*d.sigma) : json(nullptr)}, {"param", d.param}};
}

Decomposition decode_decomposition(const json& j) {
  expect(j.is_object() && j.contains("rho"), "decomposition needs rho");
  Decomposition d;
  d.rho = decode_permutation(j["rho"]);
  if (j.contains("sigma") && !j["sigma"].is_null()) d.sigma = decode_permutation(j["sigma"]);
  if (j.contains("param")) {
    expect(j["param"].is_number_integer(), "param must be an integer");
    d.param = j["param"].get<int>();
  }
  return d;
}

}  // namespace permpath::json
