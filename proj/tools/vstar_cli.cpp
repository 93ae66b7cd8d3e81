#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "vstar/runner.hpp"

namespace {

void add_common(CLI::App* sub, vstar::RunConfig& c, std::string& field_opt, std::string& out, std::string& format) {
  sub->add_option("--field", field_opt, "coefficient field, e.g. GF(2), GF(4), GF(3^2)");
  sub->add_option("--budget", c.budget, "maximum number of elements any enumeration or closure may touch")
      ->capture_default_str();
  sub->add_option("--workers", c.workers, "worker threads for brute force")->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--seed", c.seed, "seed for random probes and sampling")->capture_default_str();
  sub->add_option("--out", out, "write output to this file instead of stdout");
  sub->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_flag("--timings", c.timings, "include elapsed times (output is then not reproducible)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orders of unitary subgroups of modular group algebras"};
  app.set_version_flag("--version", vstar::kVersion);
  app.require_subcommand(1);

  vstar::RunConfig c;
  std::string field_pos, field_opt, out, format;
  std::string from_text, to_text;

  struct Cmd {
    const char* name;
    const char* help;
  };
  const Cmd cmds[] = {
      {"predict", "closed-form orders for a group descriptor"},
      {"bruteforce", "count unitary units by enumerating V(KG)"},
      {"closure", "close S_K(G) and report [V(KG) : S_K(G)]"},
      {"verify", "run every applicable method and compare"},
      {"inspect", "group structure and optional algebra element diagnostics"},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& cmd : cmds) {
    auto* s = app.add_subcommand(cmd.name, cmd.help);
    s->add_option("descriptor", c.descriptor, "group, e.g. D(16), Q(8), ES(2), ESC4(1), SDI(A(2,4); b=2)")->required();
    s->add_option("FIELD", field_pos, "coefficient field (alternative to --field)");
    add_common(s, c, field_opt, out, format);
    subs[cmd.name] = s;
  }
  subs["inspect"]->add_option("--element", c.element, "algebra element, e.g. '1 + a + b'");

  auto* table = app.add_subcommand("table", "one row per family member and method");
  table->add_option("family", c.family, "D, Q, C, ES or ESC4")->required()->check(CLI::IsMember({"D", "Q", "C", "ES", "ESC4"}));
  table->add_option("from", c.from, "first parameter")->required();
  table->add_option("to", c.to, "last parameter")->required();
  table->add_option("FIELD", field_pos, "coefficient field (alternative to --field)");
  table->add_flag("--predict-only", c.predict_only, "skip computation, print formula rows only");
  add_common(table, c, field_opt, out, format);
  subs["table"] = table;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : vstar::exit_status::usage;
  }

  for (const auto& [name, s] : subs)
    if (s->parsed()) c.command = name;
  if (!field_pos.empty() && !field_opt.empty() && field_pos != field_opt) {
    std::cerr << "error: field given twice (" << field_pos << " and " << field_opt << ")\n";
    return vstar::exit_status::usage;
  }
  if (!field_pos.empty()) c.field = field_pos;
  if (!field_opt.empty()) c.field = field_opt;
  if (format.empty()) format = c.command == "table" ? "csv" : "json";
  c.format = format == "csv" ? vstar::Format::csv : format == "text" ? vstar::Format::text : vstar::Format::json;

  const auto result = vstar::run(c);
  const bool failed = result.exit_code == vstar::exit_status::usage || result.exit_code == vstar::exit_status::budget;
  if (failed) {
    std::cerr << result.output;
  } else if (!out.empty()) {
    std::ofstream f(out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << out << "\n";
      return vstar::exit_status::usage;
    }
    f << result.output;
  } else {
    std::cout << result.output;
  }
  return result.exit_code;
}
