#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tightpoly/tightpoly.hpp"

namespace {

using tightpoly::Json;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;
constexpr int kEmpty = 3;
constexpr int kBound = 4;

struct CliConfig {
  bool json = false;
  std::size_t max_cosets = 0;  // 0 means the presentation's default
  std::size_t budget = 1'000'000;
  bool allow_skips = false;
  std::vector<std::string> export_spec;
  bool verbose = false;
};

std::string params_text(const Json& params) {
  std::string s;
  for (const auto& [key, value] : params.items()) {
    if (!s.empty()) s += " ";
    s += key + "=" + value.dump();
  }
  return s;
}

/// Human table built from the same objects the JSON output prints.
void print_table(std::ostream& out, const std::vector<Json>& rows) {
  out << std::left << std::setw(8) << "family" << std::setw(34) << "parameters" << std::right << std::setw(7)
      << "order" << std::setw(12) << "orientable" << std::setw(7) << "euler" << std::setw(6) << "V" << std::setw(6)
      << "E" << std::setw(6) << "F" << std::setw(6) << "mult" << std::setw(6) << "dual" << "\n";
  for (const Json& r : rows) {
    out << std::left << std::setw(8) << r["family"].get<std::string>() << std::setw(34) << params_text(r["parameters"])
        << std::right << std::setw(7) << r["order"].dump() << std::setw(12) << (r["orientable"].get<bool>() ? "yes" : "no")
        << std::setw(7) << r["euler"].dump() << std::setw(6) << r["vertices"].dump() << std::setw(6)
        << r["edges"].dump() << std::setw(6) << r["faces"].dump() << std::setw(6) << r["edge_multiplicity"].dump()
        << std::setw(6) << (r["dual_form"].get<bool>() ? "yes" : "no") << "\n";
  }
}

int cmd_classify(int p, int q, const CliConfig& cfg) {
  const auto records = tightpoly::classify_all(p, q);
  std::vector<Json> rows;
  for (const auto& r : records) rows.push_back(tightpoly::summary_json(tightpoly::header_of(r), r.invariants));
  if (cfg.json) {
    Json out;
    out["type"] = {p, q};
    out["records"] = rows;
    std::cout << out.dump(2) << "\n";
  } else {
    std::size_t orientable = 0;
    for (const auto& r : records) orientable += r.orientable();
    std::cout << "{" << p << "," << q << "}: " << records.size() << " tight regular polyhedra (" << orientable
              << " orientable, " << records.size() - orientable << " non-orientable)\n";
    if (!rows.empty()) print_table(std::cout, rows);
  }
  return records.empty() ? kEmpty : kOk;
}

int cmd_verify(int max_p, int max_q, const CliConfig& cfg) {
  tightpoly::SweepOptions opt;
  opt.budget = cfg.budget;
  const auto reports = tightpoly::verify_range(max_p, max_q, opt);
  std::size_t mismatches = 0;
  std::size_t skipped = 0;
  std::size_t runs = 0;
  Json rows = Json::array();
  for (const auto& r : reports) {
    mismatches += r.mismatches.size();
    skipped += r.skipped;
    runs += r.enumerations_run;
    Json row;
    row["type"] = {r.type.p, r.type.q};
    row["orientable"] = r.found_orientable.size();
    row["nonorientable"] = r.found_nonorientable.size();
    row["closed_orientable"] = r.closed_orientable;
    row["closed_nonorientable"] = r.closed_nonorientable;
    row["enumerations"] = r.enumerations_run;
    row["skipped"] = r.skipped;
    row["mismatches"] = r.mismatches;
    rows.push_back(std::move(row));
  }
  if (cfg.json) {
    Json out;
    out["max_p"] = max_p;
    out["max_q"] = max_q;
    out["types"] = std::move(rows);
    out["mismatches"] = mismatches;
    out["skipped"] = skipped;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << std::left << std::setw(10) << "type" << std::right << std::setw(8) << "or" << std::setw(8) << "non-or"
              << std::setw(14) << "enumerations" << "  status\n";
    for (const auto& r : reports) {
      std::string type = "{" + std::to_string(r.type.p) + "," + std::to_string(r.type.q) + "}";
      std::string status = !r.mismatches.empty() ? "MISMATCH" : r.skipped ? "skipped (" + r.skip_reason + ")" : "ok";
      std::cout << std::left << std::setw(10) << type << std::right << std::setw(8) << r.found_orientable.size()
                << std::setw(8) << (r.skipped ? std::string("-") : std::to_string(r.found_nonorientable.size()))
                << std::setw(14) << r.enumerations_run << "  " << status;
      if (cfg.verbose) std::cout << "  " << std::fixed << std::setprecision(3) << r.elapsed.count() << " s";
      std::cout << "\n";
      for (const auto& m : r.mismatches) std::cout << "    " << m << "\n";
    }
    std::cout << reports.size() << " types, " << runs << " enumerations, " << mismatches << " mismatches, "
              << skipped << " skipped\n";
  }
  if (mismatches > 0) return kFailure;
  if (skipped > 0 && !cfg.allow_skips) return kFailure;
  return kOk;
}

std::vector<long long> parse_params(const std::string& text) {
  std::vector<long long> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw CLI::ValidationError("params", "not an integer: '" + item + "'");
    }
    if (used != item.size()) throw CLI::ValidationError("params", "not an integer: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

tightpoly::Presentation presentation_for(const std::string& family, const std::string& params) {
  if (family == "custom") {
    std::ifstream in(params);
    if (!in) throw CLI::ValidationError("params", "cannot read relator file '" + params + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return tightpoly::Presentation::parse(buf.str());
  }
  const auto v = parse_params(params);
  auto need = [&](std::size_t n) {
    if (v.size() != n) {
      throw CLI::ValidationError("params", family + " takes " + std::to_string(n) + " parameters, got " +
                                               std::to_string(v.size()));
    }
  };
  auto narrow = [](long long x) { return static_cast<int>(x); };
  if (family == "coxeter") {
    need(2);
    return tightpoly::coxeter_presentation(narrow(v[0]), narrow(v[1]));
  }
  if (family == "lambda") {
    need(4);
    return tightpoly::lambda_presentation(narrow(v[0]), narrow(v[1]), v[2], v[3]);
  }
  need(6);
  return tightpoly::delta_presentation(narrow(v[0]), narrow(v[1]), v[2], v[3], v[4], v[5]);
}

int cmd_inspect(const std::string& family, const std::string& params, const CliConfig& cfg) {
  std::optional<tightpoly::ExportFormat> format;
  if (!cfg.export_spec.empty()) format = tightpoly::parse_export_format(cfg.export_spec[0]);
  const tightpoly::Presentation pres = presentation_for(family, params);
  const std::size_t bound = cfg.max_cosets ? cfg.max_cosets : pres.default_max_cosets();
  const tightpoly::RegularRepresentation rep = tightpoly::enumerate_cosets(pres, bound);
  const tightpoly::SggiReport report = tightpoly::analyze(rep);
  const tightpoly::MapStructure map = tightpoly::build_map(rep);
  const bool valid = tightpoly::validate_polyhedron(map);
  const tightpoly::MapInvariants inv = tightpoly::map_invariants(map, rep);
  const tightpoly::RecordHeader header = tightpoly::header_of(pres, report);

  Json row = tightpoly::summary_json(header, inv);
  row["sggi"] = report.is_sggi;
  row["string_c_group"] = report.is_string_c_group;
  row["tight"] = report.is_tight;
  row["polyhedron"] = valid;
  if (cfg.json) {
    std::cout << row.dump(2) << "\n";
  } else {
    std::cout << "presentation " << pres.family();
    if (!header.parameters.empty()) std::cout << " (" << params_text(header.parameters) << ")";
    std::cout << ":\n" << pres.to_text();
    std::cout << "order " << report.order << ", type {" << report.type.p << "," << report.type.q << "}\n"
              << "sggi " << (report.is_sggi ? "yes" : "no") << ", string C-group "
              << (report.is_string_c_group ? "yes" : "no") << ", tight " << (report.is_tight ? "yes" : "no")
              << ", orientable " << (report.orientable ? "yes" : "no") << "\n"
              << "V " << inv.vertex_count << ", E " << inv.edge_count << ", F " << inv.face_count << ", euler "
              << inv.euler_characteristic << ", edge multiplicity " << inv.edge_multiplicity << ", polyhedron axioms "
              << (valid ? "hold" : "fail") << "\n";
  }
  if (format) {
    std::ofstream out(cfg.export_spec[1], std::ios::binary);
    if (!out) throw CLI::ValidationError("--export", "cannot write '" + cfg.export_spec[1] + "'");
    out << tightpoly::export_map(map, inv, header, *format);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tight regular polyhedra: classification, verification sweeps and inspection"};
  app.require_subcommand(1);
  CliConfig cfg;
  app.add_flag("--json", cfg.json, "Machine-readable output");
  app.add_option("--max-cosets", cfg.max_cosets, "Coset bound for inspect")->check(CLI::PositiveNumber);
  app.add_option("--budget", cfg.budget, "Largest Delta sweep per type")->check(CLI::PositiveNumber);
  app.add_flag("--allow-skips", cfg.allow_skips, "Exit 0 even when some types were skipped");
  app.add_flag("-v,--verbose", cfg.verbose, "Per-type timings in verify");
  app.add_option("--export", cfg.export_spec, "Write the map: --export json|dot PATH")->expected(2);

  int p = 0;
  int q = 0;
  auto* classify = app.add_subcommand("classify", "List the tight regular polyhedra of type {P,Q}");
  classify->add_option("P", p)->required()->check(CLI::Range(2, 1 << 20));
  classify->add_option("Q", q)->required()->check(CLI::Range(2, 1 << 20));

  int max_p = 0;
  int max_q = 0;
  auto* verify = app.add_subcommand("verify", "Compare closed forms with exhaustive sweeps");
  verify->add_option("--max-p", max_p)->required()->check(CLI::Range(2, 1 << 10));
  verify->add_option("--max-q", max_q)->required()->check(CLI::Range(2, 1 << 10));

  std::string family;
  std::string params;
  auto* inspect = app.add_subcommand("inspect", "Enumerate one group and report on it");
  inspect->add_option("FAMILY", family)->required()->check(CLI::IsMember({"coxeter", "lambda", "delta", "custom"}));
  inspect->add_option("PARAMS", params, "Comma-separated integers, or a relator file for custom")->required();

  for (auto* sub : {classify, verify, inspect}) sub->fallthrough();
  app.allow_extras(false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*classify) return cmd_classify(p, q, cfg);
    if (*verify) return cmd_verify(max_p, max_q, cfg);
    return cmd_inspect(family, params, cfg);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const tightpoly::BoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\nhint: raise the limit with --max-cosets N\n";
    return kBound;
  } catch (const tightpoly::InvalidType& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const tightpoly::InvalidPresentation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const tightpoly::UnsupportedFormat& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}
