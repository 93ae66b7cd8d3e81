#pragma once

// JSON and CSV forms of predictions and UnitSetReports.

#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "vstar/formulas.hpp"
#include "vstar/unitary.hpp"

namespace vstar {

using Json = nlohmann::ordered_json;

inline Json order_json(const Order& o) {
  return Json{{"base", o.base()}, {"exponent", o.exponent()}, {"cofactor", o.cofactor()}};
}

inline void put_order(Json& j, const std::string& key, const Order& o) {
  j[key] = order_json(o);
  if (auto v = o.value()) j[key + "_decimal"] = *v;
}

inline Json prediction_json(const OrderPrediction& p) {
  Json j;
  j["source"] = p.source;
  if (p.v_order) put_order(j, "v_order", *p.v_order);
  if (p.lg_size) j["lg_size"] = *p.lg_size;
  if (p.sk_order) put_order(j, "sk_order", *p.sk_order);
  if (p.vstar_order) put_order(j, "vstar_order", *p.vstar_order);
  j["caveats"] = p.caveats;
  return j;
}

/// Agreement of one report with the other methods that ran: method -> equal.
using Agreement = std::map<std::string, bool>;

inline Json report_json(const UnitSetReport& r, const Agreement& agreement, bool timings) {
  Json j;
  j["descriptor"] = r.descriptor;
  j["field"] = r.field;
  j["method"] = method_name(r.method);
  j["order"] = order_json(r.order);
  if (auto v = r.order.value()) j["order_decimal"] = *v;
  j["witnesses"] = r.witness_samples;
  if (timings) j["elapsed_s"] = r.elapsed_s;
  Json a = Json::object();
  for (const char* key : {"formula", "bruteforce", "closure", "structural"}) {
    auto it = agreement.find(key);
    if (it != agreement.end()) a[key] = it->second;
  }
  j["agreement"] = a;
  if (r.v_order) put_order(j, "v_order", *r.v_order);
  if (r.sk_order) put_order(j, "sk_order", *r.sk_order);
  if (r.r_order) put_order(j, "r_order", *r.r_order);
  if (r.abelian_vstar_order) put_order(j, "abelian_vstar_order", *r.abelian_vstar_order);
  return j;
}

inline const char* kCsvHeader = "descriptor,q,method,order_base,order_exponent,order_cofactor,agrees,elapsed_s";

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

/// `agrees` empty when there was nothing to compare with; elapsed empty
/// unless timings were requested.
inline std::string csv_row(const std::string& descriptor, std::uint64_t q, const std::string& method,
                           const std::optional<Order>& order, std::optional<bool> agrees, std::optional<double> elapsed) {
  std::ostringstream os;
  os << csv_quote(descriptor) << ',' << q << ',' << csv_quote(method) << ',';
  if (order)
    os << order->base() << ',' << order->exponent() << ',' << order->cofactor();
  else
    os << ",,";
  os << ',' << (agrees ? (*agrees ? "true" : "false") : "") << ',';
  if (elapsed) os << *elapsed;
  return os.str();
}

}  // namespace vstar
