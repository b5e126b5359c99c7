#include <initializer_list>
#include <string>
#include <vector>

#include "anrcert/certificate.hpp"
#include "json.hpp"

namespace anrcert {

namespace {

using Json = nlohmann::ordered_json;

Json weights_to_json(const std::vector<WeightEntry>& entries) {
  Json arr = Json::array();
  for (const WeightEntry& e : entries) {
    arr.push_back(Json{{"element", e.element}, {"weight", e.weight}});
  }
  return arr;
}

void require_exact_keys(const Json& obj, std::initializer_list<const char*> keys,
                        const std::string& where) {
  if (!obj.is_object()) {
    throw SchemaError(where + " must be a JSON object");
  }
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : keys) {
      if (item.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw SchemaError("unknown field '" + item.key() + "' in " + where);
    }
  }
  for (const char* k : keys) {
    if (!obj.contains(k)) {
      throw SchemaError("missing field '" + std::string(k) + "' in " + where);
    }
  }
}

std::uint64_t get_u64(const Json& v, const std::string& name) {
  if (!v.is_number_unsigned()) {
    throw SchemaError("field '" + name + "' must be a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

std::vector<std::uint64_t> get_u64_array(const Json& v, const std::string& name) {
  if (!v.is_array()) {
    throw SchemaError("field '" + name + "' must be an array");
  }
  std::vector<std::uint64_t> out;
  out.reserve(v.size());
  for (const Json& item : v) {
    out.push_back(get_u64(item, name + "[]"));
  }
  return out;
}

std::vector<WeightEntry> get_weights(const Json& v, const std::string& name) {
  if (!v.is_array()) {
    throw SchemaError("field '" + name + "' must be an array");
  }
  std::vector<WeightEntry> out;
  out.reserve(v.size());
  for (const Json& item : v) {
    require_exact_keys(item, {"element", "weight"}, name + " entry");
    out.push_back({get_u64(item["element"], name + ".element"),
                   get_u64(item["weight"], name + ".weight")});
  }
  return out;
}

}  // namespace

std::string certificate_to_json(const Certificate& cert) {
  Json j;
  j["p"] = cert.p;
  j["A"] = cert.a;
  j["B"] = cert.b;
  j["route"] = route_name(cert.route);
  if (cert.reduction) {
    const ReductionRecord& r = *cert.reduction;
    j["reduction"] = Json{{"removed_from_A", r.removed_from_a},
                          {"removed_from_B", r.removed_from_b},
                          {"A_prime", r.a_prime},
                          {"B_prime", r.b_prime},
                          {"d", r.d},
                          {"d1", r.d1},
                          {"d2", r.d2}};
  } else {
    j["reduction"] = nullptr;
  }
  j["w1"] = weights_to_json(cert.w1);
  j["w2"] = weights_to_json(cert.w2);
  j["alpha"] = cert.alpha;
  j["beta"] = cert.beta;
  j["gamma"] = cert.gamma;
  if (cert.e_c) {
    j["e_C"] = *cert.e_c;
  } else {
    j["e_C"] = nullptr;
  }
  if (cert.binomial_check) {
    const BinomialCheck& b = *cert.binomial_check;
    j["binomial_check"] = Json{{"n", b.n},
                               {"r_choice", b.r_choice},
                               {"s_choice", b.s_choice},
                               {"value", b.value}};
  } else {
    j["binomial_check"] = nullptr;
  }
  j["claimed_bound"] = cert.claimed_bound;
  j["C"] = cert.c;
  j["C_size"] = cert.c_size;
  return j.dump(2);
}

Certificate certificate_from_json(std::string_view text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw SchemaError("input is not valid JSON");
  }
  require_exact_keys(j,
                     {"p", "A", "B", "route", "reduction", "w1", "w2", "alpha",
                      "beta", "gamma", "e_C", "binomial_check", "claimed_bound",
                      "C", "C_size"},
                     "certificate");

  Certificate cert;
  cert.p = get_u64(j["p"], "p");
  cert.a = get_u64_array(j["A"], "A");
  cert.b = get_u64_array(j["B"], "B");

  if (!j["route"].is_string()) {
    throw SchemaError("field 'route' must be a string");
  }
  const auto route = route_from_name(j["route"].get<std::string>());
  if (!route) {
    throw SchemaError("unknown route '" + j["route"].get<std::string>() + "'");
  }
  cert.route = *route;

  if (!j["reduction"].is_null()) {
    const Json& r = j["reduction"];
    require_exact_keys(r,
                       {"removed_from_A", "removed_from_B", "A_prime",
                        "B_prime", "d", "d1", "d2"},
                       "reduction");
    cert.reduction = ReductionRecord{
        get_u64_array(r["removed_from_A"], "reduction.removed_from_A"),
        get_u64_array(r["removed_from_B"], "reduction.removed_from_B"),
        get_u64_array(r["A_prime"], "reduction.A_prime"),
        get_u64_array(r["B_prime"], "reduction.B_prime"),
        get_u64(r["d"], "reduction.d"),
        get_u64(r["d1"], "reduction.d1"),
        get_u64(r["d2"], "reduction.d2")};
  }

  cert.w1 = get_weights(j["w1"], "w1");
  cert.w2 = get_weights(j["w2"], "w2");
  cert.alpha = get_u64_array(j["alpha"], "alpha");
  cert.beta = get_u64_array(j["beta"], "beta");
  cert.gamma = get_u64_array(j["gamma"], "gamma");

  if (!j["e_C"].is_null()) {
    cert.e_c = get_u64(j["e_C"], "e_C");
  }
  if (!j["binomial_check"].is_null()) {
    const Json& b = j["binomial_check"];
    require_exact_keys(b, {"n", "r_choice", "s_choice", "value"},
                       "binomial_check");
    cert.binomial_check = BinomialCheck{
        get_u64(b["n"], "binomial_check.n"),
        get_u64(b["r_choice"], "binomial_check.r_choice"),
        get_u64(b["s_choice"], "binomial_check.s_choice"),
        get_u64(b["value"], "binomial_check.value")};
  }

  cert.claimed_bound = get_u64(j["claimed_bound"], "claimed_bound");
  cert.c = get_u64_array(j["C"], "C");
  cert.c_size = get_u64(j["C_size"], "C_size");
  return cert;
}

}  // namespace anrcert
