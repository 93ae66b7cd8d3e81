#pragma once

// Command implementations behind the vstar CLI. Each returns its rendered
// output and exit status instead of printing, so reports can be compared
// byte for byte in tests.

#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "vstar/formulas.hpp"
#include "vstar/report.hpp"
#include "vstar/unitary.hpp"

namespace vstar {

inline constexpr const char* kVersion = "0.1.0";

namespace exit_status {
inline constexpr int agree = 0;
inline constexpr int disagree = 1;
inline constexpr int usage = 2;
inline constexpr int budget = 3;
}  // namespace exit_status

enum class Format { json, csv, text };

inline const char* format_name(Format f) {
  switch (f) {
    case Format::json:
      return "json";
    case Format::csv:
      return "csv";
    case Format::text:
      return "text";
  }
  return "?";
}

struct RunConfig {
  std::string command;
  std::string descriptor;
  std::string field = "GF(2)";
  std::uint64_t budget = kDefaultBudget;
  unsigned workers = 1;
  std::uint64_t seed = 1;
  Format format = Format::json;
  bool timings = false;
  // table
  std::string family;
  unsigned from = 0;
  unsigned to = 0;
  bool predict_only = false;
  // inspect
  std::string element;
};

struct RunResult {
  int exit_code = exit_status::agree;
  std::string output;
};

inline Json config_json(const RunConfig& c) {
  Json j;
  j["command"] = c.command;
  if (!c.descriptor.empty()) j["descriptor"] = c.descriptor;
  if (!c.family.empty()) {
    j["family"] = c.family;
    j["from"] = c.from;
    j["to"] = c.to;
    j["predict_only"] = c.predict_only;
  }
  j["field"] = c.field;
  j["budget"] = c.budget;
  j["workers"] = c.workers;
  j["seed"] = c.seed;
  j["format"] = format_name(c.format);
  return j;
}

inline Json envelope(const RunConfig& c) {
  Json j;
  j["version"] = kVersion;
  j["config"] = config_json(c);
  return j;
}

/// Whether |V_*| = [V : S_K] may be computed by closing S_K: characteristic
/// 2 and a group for which x -> x x* is a homomorphism (abelian groups,
/// inverting involutions, extraspecial groups and their central products
/// with C4).
inline bool symmetric_quotient_applies(const Group& g, const Field& k) {
  if (k.characteristic() != 2) return false;
  const auto& d = g.descriptor();
  switch (d.family) {
    case Family::cyclic:
    case Family::abelian:
    case Family::dihedral:
    case Family::extraspecial_q8_power:
    case Family::extraspecial_q8_power_y_c4:
      return true;
    case Family::quaternion:
      return d.params.at(0) == 8;
    case Family::semidirect_inversion:
      return d.params.at(0) == 2;
    case Family::central_product: {
      // Extraspecial: Z(G) = G' = Φ(G) of order 2.
      if (!is_p_group(g) || group_prime(g) != 2) return false;
      const auto z = center(g);
      return z.size() == 2 && commutator_subgroup(g) == z && frattini_subgroup(g) == z;
    }
    case Family::heisenberg:
      return false;
  }
  return false;
}

namespace detail {

inline std::string agreement_key(Method m) {
  switch (m) {
    case Method::formula:
      return "formula";
    case Method::bruteforce:
      return "bruteforce";
    case Method::closure_quotient:
      return "closure";
    case Method::structural:
      return "structural";
  }
  return "?";
}

struct VerifyOutcome {
  GroupDescriptor descriptor;
  std::uint64_t q = 0;
  OrderPrediction prediction;
  std::vector<UnitSetReport> reports;  // formula first when covered
  std::vector<Agreement> agreement;
  std::vector<std::string> skipped;
  bool all_agree = true;
};

inline VerifyOutcome verify_one(const GroupDescriptor& d, const Field& field, const RunConfig& c, bool predict_only) {
  VerifyOutcome out;
  out.descriptor = d;
  out.q = field.size();
  out.prediction = predict(d, field);
  const std::string dname = to_string(d);
  if (out.prediction.vstar_order) {
    UnitSetReport f;
    f.descriptor = dname;
    f.field = field.name();
    f.method = Method::formula;
    f.order = *out.prediction.vstar_order;
    out.reports.push_back(f);
  }
  if (!predict_only) {
    auto alg = std::make_shared<const GroupAlgebra>(std::make_shared<const Group>(build_group(d)),
                                                    std::make_shared<const Field>(field));
    const Group& g = alg->group();
    if (!alg->is_local()) {
      out.skipped.push_back("all computations: |G| is not a power of char K");
    } else {
      BruteforceOptions bo;
      bo.budget = c.budget;
      bo.workers = c.workers;
      try {
        out.reports.push_back(bruteforce_unitary(alg, bo));
      } catch (const BudgetExceeded& e) {
        out.skipped.push_back(std::string("bruteforce: ") + e.what());
      }
      if (symmetric_quotient_applies(g, field)) {
        ClosureOptions co;
        co.budget = c.budget;
        co.seed = c.seed;
        const auto& sk = out.prediction.sk_order;
        if (sk && (!sk->value() || *sk->value() > c.budget)) {
          out.skipped.push_back("closure-quotient: predicted |S_K| exceeds the budget of " + std::to_string(c.budget));
        } else {
          try {
            out.reports.push_back(unitary_order_via_quotient(alg, co));
          } catch (const BudgetExceeded& e) {
            out.skipped.push_back(std::string("closure-quotient: ") + e.what());
          }
        }
      } else if (field.characteristic() == 2) {
        out.skipped.push_back("closure-quotient: x -> xx* is not known to be a homomorphism for this group");
      }
      if (field.characteristic() != 2) {
        // Cayley transform: |V_*| equals the number of skew elements.
        const auto t0 = std::chrono::steady_clock::now();
        UnitSetReport s;
        s.descriptor = dname;
        s.field = field.name();
        s.method = Method::structural;
        s.order = Order(field.size(), skew_space_dimension(*alg));
        s.elapsed_s = detail::seconds_since(t0);
        out.reports.push_back(s);
      }
      if (g.semidirect() && g.semidirect()->b_order == 4 && field.characteristic() == 2) {
        try {
          out.reports.push_back(structural_unitary_order(alg, bo));
        } catch (const BudgetExceeded& e) {
          out.skipped.push_back(std::string("structural: ") + e.what());
        }
      }
    }
  }
  for (const auto& r : out.reports) {
    Agreement a;
    for (const auto& o : out.reports) {
      if (&o == &r) continue;
      const bool eq = r.order == o.order;
      a[agreement_key(o.method)] = eq;
      out.all_agree = out.all_agree && eq;
    }
    out.agreement.push_back(std::move(a));
  }
  return out;
}

inline std::string fmt_opt(const std::optional<Order>& o) { return o ? o->to_string() : "-"; }

}  // namespace detail

inline RunResult run_predict(const RunConfig& c) {
  const auto d = parse_descriptor(c.descriptor);
  const auto field = Field::parse_name(c.field);
  const auto p = predict(d, field);
  RunResult r;
  if (c.format == Format::json) {
    Json j = envelope(c);
    j["descriptor"] = to_string(d);
    j["field"] = field.name();
    j["group_order"] = descriptor_order(d);
    j["prediction"] = prediction_json(p);
    r.output = j.dump(2) + "\n";
  } else if (c.format == Format::csv) {
    r.output = std::string(kCsvHeader) + "\n" +
               csv_row(to_string(d), field.size(), "formula", p.vstar_order, std::nullopt, std::nullopt) + "\n";
  } else {
    std::ostringstream os;
    os << "group      " << to_string(d) << "  (order " << descriptor_order(d) << ")\n"
       << "field      " << field.name() << "\n"
       << "source     " << p.source << "\n"
       << "|V(KG)|    " << detail::fmt_opt(p.v_order) << "\n"
       << "|L_G|      " << (p.lg_size ? std::to_string(*p.lg_size) : "-") << "\n"
       << "|S_K(G)|   " << detail::fmt_opt(p.sk_order) << "\n"
       << "|V_*(KG)|  " << detail::fmt_opt(p.vstar_order) << "\n";
    for (const auto& cav : p.caveats) os << "caveat     " << cav << "\n";
    r.output = os.str();
  }
  return r;
}

inline RunResult render_reports(const RunConfig& c, const std::vector<UnitSetReport>& reports,
                                const std::vector<Agreement>& agreement, Json extra = Json::object()) {
  RunResult r;
  if (c.format == Format::json) {
    Json j = envelope(c);
    for (auto& [k, v] : extra.items()) j[k] = v;
    Json arr = Json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) arr.push_back(report_json(reports[i], agreement.at(i), c.timings));
    j["reports"] = arr;
    j["exit_code"] = r.exit_code;
    r.output = j.dump(2) + "\n";
  } else if (c.format == Format::csv) {
    std::string out = std::string(kCsvHeader) + "\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
      std::optional<bool> agrees;
      for (auto [k, v] : agreement.at(i)) agrees = agrees.value_or(true) && v;
      out += csv_row(reports[i].descriptor, Field::parse_name(reports[i].field).size(), method_name(reports[i].method),
                             reports[i].order, agrees, c.timings ? std::optional<double>(reports[i].elapsed_s) : std::nullopt) +
             "\n";
    }
    r.output = out;
  } else {
    std::ostringstream os;
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto& rep = reports[i];
      os << rep.descriptor << " over " << rep.field << "  " << method_name(rep.method) << ": |V_*| = " << rep.order.to_string();
      if (auto v = rep.order.value()) os << " = " << *v;
      if (rep.sk_order) os << "  (|S_K| = " << rep.sk_order->to_string() << ")";
      if (rep.r_order) os << "  (|R| = " << rep.r_order->to_string() << ")";
      if (c.timings) os << "  [" << rep.elapsed_s << " s]";
      os << "\n";
      for (auto [k, v] : agreement.at(i)) os << "    " << (v ? "agrees with " : "DISAGREES with ") << k << "\n";
    }
    r.output = os.str();
  }
  return r;
}

inline RunResult run_bruteforce(const RunConfig& c) {
  const auto d = parse_descriptor(c.descriptor);
  auto alg = std::make_shared<const GroupAlgebra>(std::make_shared<const Group>(build_group(d)),
                                                  std::make_shared<const Field>(Field::parse_name(c.field)));
  BruteforceOptions bo;
  bo.budget = c.budget;
  bo.workers = c.workers;
  const auto rep = bruteforce_unitary(alg, bo);
  return render_reports(c, {rep}, {Agreement{}});
}

inline RunResult run_closure(const RunConfig& c) {
  const auto d = parse_descriptor(c.descriptor);
  auto alg = std::make_shared<const GroupAlgebra>(std::make_shared<const Group>(build_group(d)),
                                                  std::make_shared<const Field>(Field::parse_name(c.field)));
  ClosureOptions co;
  co.budget = c.budget;
  co.seed = c.seed;
  const auto t0 = std::chrono::steady_clock::now();
  const auto sk = symmetric_subgroup_closure(alg, co);
  const double elapsed = detail::seconds_since(t0);
  const std::uint64_t q = alg->field().size();
  UnitSetReport rep;
  rep.descriptor = to_string(d);
  rep.field = alg->field().name();
  rep.method = Method::closure_quotient;
  rep.v_order = Order(q, alg->dimension() - 1);
  rep.sk_order = Order::from_count(sk.elements.size(), q);
  rep.order = *rep.v_order / *rep.sk_order;
  rep.elapsed_s = elapsed;
  for (std::size_t i = 1; i < sk.elements.size() && rep.witness_samples.size() < 8; ++i)
    rep.witness_samples.push_back(format_element(sk.elements.elements()[i]));
  Json extra;
  extra["generators_used"] = sk.generators_used;
  extra["quotient_valid"] = symmetric_quotient_applies(alg->group(), alg->field());
  RunResult r = render_reports(c, {rep}, {Agreement{}}, extra);
  if (c.format == Format::text) {
    for (const auto& line : sk.generators_used) r.output += "    " + line + "\n";
  }
  return r;
}

inline RunResult run_verify(const RunConfig& c) {
  const auto d = parse_descriptor(c.descriptor);
  const auto field = Field::parse_name(c.field);
  auto v = detail::verify_one(d, field, c, false);
  Json extra;
  extra["descriptor"] = to_string(d);
  extra["field"] = field.name();
  extra["prediction"] = prediction_json(v.prediction);
  extra["skipped"] = v.skipped;
  extra["all_agree"] = v.all_agree;
  RunConfig cc = c;
  RunResult r;
  r.exit_code = v.all_agree ? exit_status::agree : exit_status::disagree;
  if (c.format == Format::json) {
    Json j = envelope(c);
    for (auto& [k, val] : extra.items()) j[k] = val;
    Json arr = Json::array();
    for (std::size_t i = 0; i < v.reports.size(); ++i) arr.push_back(report_json(v.reports[i], v.agreement[i], c.timings));
    j["reports"] = arr;
    j["exit_code"] = r.exit_code;
    r.output = j.dump(2) + "\n";
    return r;
  }
  const int code = r.exit_code;
  r = render_reports(cc, v.reports, v.agreement);
  r.exit_code = code;
  if (c.format == Format::text) {
    for (const auto& cav : v.prediction.caveats) r.output += "caveat: " + cav + "\n";
    for (const auto& s : v.skipped) r.output += "skipped " + s + "\n";
    r.output += v.all_agree ? "all methods agree\n" : "DISAGREEMENT\n";
  }
  return r;
}

/// Descriptor for member n of a family in `table`: D and Q give order
/// 2^{n+1}, C gives order 2^n, ES and ESC4 take n directly.
inline std::string family_member(const std::string& family, unsigned n) {
  auto pow2 = [](unsigned e) { return std::to_string(std::uint64_t{1} << e); };
  if (family == "D" || family == "Q") return family + "(" + pow2(n + 1) + ")";
  if (family == "C") return "C(" + pow2(n) + ")";
  if (family == "ES" || family == "ESC4") return family + "(" + std::to_string(n) + ")";
  throw DescriptorError("table supports families D, Q, C, ES, ESC4; got '" + family + "'", 0);
}

inline RunResult run_table(const RunConfig& c) {
  const auto field = Field::parse_name(c.field);
  RunResult r;
  std::ostringstream csv;
  csv << kCsvHeader << "\n";
  Json rows = Json::array();
  std::ostringstream text;
  for (unsigned n = c.from; n <= c.to; ++n) {
    const std::string dtext = family_member(c.family, n);
    const auto d = parse_descriptor(dtext);
    detail::VerifyOutcome v;
    std::string error;
    try {
      v = detail::verify_one(d, field, c, c.predict_only);
    } catch (const std::exception& e) {
      error = e.what();
      v.descriptor = d;
      v.q = field.size();
    }
    if (!error.empty()) {
      csv << csv_row(dtext, field.size(), "error: " + error, std::nullopt, std::nullopt, std::nullopt) << "\n";
      rows.push_back(Json{{"descriptor", dtext}, {"q", field.size()}, {"error", error}});
      text << dtext << "  error: " << error << "\n";
      continue;
    }
    if (v.reports.empty()) {
      csv << csv_row(dtext, field.size(), "none", std::nullopt, std::nullopt, std::nullopt) << "\n";
      rows.push_back(Json{{"descriptor", dtext}, {"q", field.size()}, {"method", "none"}});
    }
    for (std::size_t i = 0; i < v.reports.size(); ++i) {
      const auto& rep = v.reports[i];
      std::optional<bool> agrees;
      for (auto [k, val] : v.agreement[i]) agrees = agrees.value_or(true) && val;
      const std::optional<double> el = c.timings ? std::optional<double>(rep.elapsed_s) : std::nullopt;
      csv << csv_row(dtext, field.size(), method_name(rep.method), rep.order, agrees, el) << "\n";
      Json row{{"descriptor", dtext}, {"q", field.size()}, {"method", method_name(rep.method)}, {"order", order_json(rep.order)}};
      if (agrees) row["agrees"] = *agrees;
      if (el) row["elapsed_s"] = *el;
      rows.push_back(row);
      text << dtext << "  " << method_name(rep.method) << "  " << rep.order.to_string()
           << (agrees ? (*agrees ? "  agrees" : "  DISAGREES") : "") << "\n";
    }
    if (!v.all_agree) r.exit_code = exit_status::disagree;
  }
  if (c.format == Format::csv) {
    r.output = csv.str();
  } else if (c.format == Format::json) {
    Json j = envelope(c);
    j["rows"] = rows;
    r.output = j.dump(2) + "\n";
  } else {
    r.output = text.str();
  }
  return r;
}

inline RunResult run_inspect(const RunConfig& c) {
  const auto d = parse_descriptor(c.descriptor);
  auto alg = std::make_shared<const GroupAlgebra>(std::make_shared<const Group>(build_group(d)),
                                                  std::make_shared<const Field>(Field::parse_name(c.field)));
  const Group& g = alg->group();
  const auto sd = structural_data(g);
  Json j = envelope(c);
  j["descriptor"] = to_string(d);
  j["order"] = g.order();
  j["generators"] = g.generator_symbols();
  Json hist = Json::object();
  for (auto [o, cnt] : sd.order_histogram) hist[std::to_string(o)] = cnt;
  j["order_histogram"] = hist;
  auto names = [&](const SubgroupHandle& h) {
    std::vector<std::string> out;
    for (Index x : h.members) out.push_back(g.name(x));
    return out;
  };
  j["center"] = names(sd.center);
  j["commutator_subgroup"] = names(sd.commutator);
  j["abelian"] = g.is_abelian();
  if (is_p_group(g)) j["frattini_subgroup"] = names(frattini_subgroup(g));
  if (sd.commutator.size() == 2) {
    std::vector<std::string> lg;
    for (Index x : order4_transversal(g)) lg.push_back(g.name(x));
    j["lg_size"] = lg.size();
    j["lg"] = lg;
  }
  if (g.is_abelian()) {
    const auto s = abelian_stats(g);
    j["size_A2"] = s.size_A2;
    j["size_Asq2"] = s.size_Asq2;
  }
  if (!c.element.empty()) {
    const auto x = parse_element(alg, c.element);
    Json e;
    e["element"] = format_element(x);
    e["star"] = format_element(star(x));
    e["augmentation"] = alg->field().format(augmentation(x));
    e["symmetric"] = is_symmetric(x);
    e["skew"] = is_skew(x);
    if (alg->is_local()) {
      e["unit"] = is_unit(x);
      if (is_unit(x)) {
        e["inverse"] = format_element(alg_inverse(x));
        e["phi"] = format_element(phi(x));
      }
      if (is_normalized_unit(x)) e["unitary"] = is_unitary(x);
    }
    j["element"] = e;
  }
  RunResult r;
  if (c.format == Format::text) {
    std::ostringstream os;
    for (auto& [k, v] : j.items()) {
      if (k == "version" || k == "config") continue;
      os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    r.output = os.str();
  } else {
    r.output = j.dump(2) + "\n";
  }
  return r;
}

/// Dispatch on c.command; library errors become usage/budget exit codes.
inline RunResult run(const RunConfig& c) {
  try {
    if (c.command == "predict") return run_predict(c);
    if (c.command == "bruteforce") return run_bruteforce(c);
    if (c.command == "closure") return run_closure(c);
    if (c.command == "verify") return run_verify(c);
    if (c.command == "table") return run_table(c);
    if (c.command == "inspect") return run_inspect(c);
    return {exit_status::usage, "unknown command '" + c.command + "'\n"};
  } catch (const BudgetExceeded& e) {
    return {exit_status::budget, std::string("budget exceeded: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return {exit_status::usage, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace vstar
