#include "ecp/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace {

using ecp::Json;

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    bool flat = true;
    for (const auto& e : v) flat = flat && e.is_primitive();
    if (flat) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + scalar_text(v[i]);
      return s;
    }
  }
  return v.dump();
}

// tsv / text are projections of the JSON report: tables for row lists,
// key/value lines otherwise.
void write_projection(std::ostream& out, const Json& body, bool tsv) {
  const std::string sep = tsv ? "\t" : ": ";
  if (body.contains("rows") && body["rows"].is_array() && !body["rows"].empty()) {
    for (const auto& [key, value] : body.items())
      if (key != "rows") out << (tsv ? "#" : "") << key << sep << scalar_text(value) << '\n';
    const Json& rows = body["rows"];
    std::vector<std::string> columns;
    for (const auto& [key, value] : rows[0].items()) columns.push_back(key);
    const std::string cell_sep = tsv ? "\t" : "  ";
    for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? cell_sep : "") << columns[c];
    out << '\n';
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? cell_sep : "") << scalar_text(row[columns[c]]);
      out << '\n';
    }
    return;
  }
  for (const auto& [key, value] : body.items()) out << key << sep << scalar_text(value) << '\n';
}

void emit(const Json& body, const std::string& format) {
  if (format == "json")
    std::cout << body.dump(2) << '\n';
  else
    write_projection(std::cout, body, format == "tsv");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enriched chain polytopes of finite posets: counts, h*, gamma vectors, Groebner certificates"};
  app.set_help_all_flag("--help-all");
  ecp::RunConfig cfg;
  std::string poset_path;
  app.add_option("command", cfg.command, "command to run")->required()->check(CLI::IsMember(ecp::command_names()));
  app.add_option("--poset,-p", poset_path, "poset file (text or JSON)")->envname("ECP_POSET");
  auto* max_n = app.add_option("--max-n", cfg.guards.max_n, "largest poset size; for verify-all without --poset, the sweep range")
                    ->envname("ECP_MAX_N")
                    ->check(CLI::PositiveNumber);
  app.add_option("--max-m", cfg.max_m, "largest dilation / partition bound")->envname("ECP_MAX_M")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--truncation", cfg.truncation, "series truncation order")->envname("ECP_TRUNCATION")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--format", cfg.format, "output format")->envname("ECP_FORMAT")->check(CLI::IsMember({"json", "tsv", "text"}))->capture_default_str();
  app.add_option("--guard-points", cfg.guards.max_points, "bound on enumeration spaces")->envname("ECP_GUARD_POINTS")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--guard-spairs", cfg.guards.max_spairs, "bound on Buchberger S-pairs")->envname("ECP_GUARD_SPAIRS")->check(CLI::PositiveNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    std::optional<ecp::PosetInput> input;
    if (!poset_path.empty()) input = ecp::read_poset_file(poset_path);
    ecp::Report report;
    if (cfg.command == "verify-all") {
      if (!input) {
        cfg.sweep_n = max_n->count() || std::getenv("ECP_MAX_N") ? cfg.guards.max_n : 4;
        cfg.guards.max_n = std::max(cfg.guards.max_n, cfg.sweep_n);
      }
      report = ecp::verify_all(cfg, input);
    } else {
      if (!input) throw ecp::Error(ecp::ErrorCode::ParseError, "--poset is required for " + cfg.command);
      report = ecp::run_command(cfg, *input);
    }
    emit(report.body, cfg.format);
    return report.identities_hold ? 0 : 2;
  } catch (const ecp::Error& e) {
    // Library size limits surface as guard errors at this level.
    if (e.code() == ecp::ErrorCode::SizeLimit) std::cerr << "error: " << ecp::to_string(ecp::ErrorCode::GuardExceeded) << ": ";
    else std::cerr << "error: ";
    std::cerr << e.what() << '\n';
    return e.alarm() ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
