#include "wcoh/cli.hpp"

#include "wcoh/builders.hpp"
#include "wcoh/weight.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace wcoh {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Input {
  std::string id;
  std::optional<std::string> builder;
  SncDatum datum;
};

Input load_input(const std::optional<std::string>& path, const std::string& builder) {
  if (!builder.empty()) return {"builder:" + builder, builder, build(builder)};
  if (!path) throw ParseError("no input: give a JSON file or --builder NAME");
  return {*path, std::nullopt, from_json(*path)};
}

ordered_json group_json(const FgAbGroup& g) {
  ordered_json j;
  j["free_rank"] = g.free_rank();
  ordered_json t = ordered_json::array();
  for (const auto& x : g.torsion()) t.push_back(x.fits_slong_p() ? ordered_json(x.get_si()) : ordered_json(x.get_str()));
  j["torsion"] = std::move(t);
  j["group"] = g.to_string();
  return j;
}

ordered_json table_json(const BigradedTable& t) {
  ordered_json j;
  j["dim"] = t.dim();
  j["components"] = t.n_components();
  ordered_json entries = ordered_json::array();
  for (const auto& [ab, g] : t.entries()) {
    ordered_json e;
    e["a"] = ab.first;
    e["b"] = ab.second;
    const ordered_json group = group_json(g);
    for (const auto& [k, v] : group.items()) e[k] = v;
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

std::string table_text(const BigradedTable& t) {
  int max_b = 0;
  for (const auto& [ab, g] : t.entries()) max_b = std::max(max_b, ab.second);
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"b\\a"};
  for (int a = 0; a <= t.dim(); ++a) header.push_back(std::to_string(a));
  cells.push_back(header);
  for (int b = max_b; b >= 0; --b) {
    std::vector<std::string> row{std::to_string(b)};
    for (int a = 0; a <= t.dim(); ++a) row.push_back(t.at(a, b).to_string());
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  os << "H_Wc^{a,b}  (dim " << t.dim() << ", " << t.n_components() << " components)\n";
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << (c ? " | " : "") << std::setw(static_cast<int>(width[c])) << row[c];
    }
    os << '\n';
  }
  return os.str();
}

std::string table_csv(const BigradedTable& t) {
  std::ostringstream os;
  os << "a,b,free_rank,torsion\n";
  for (const auto& [ab, g] : t.entries()) {
    os << ab.first << ',' << ab.second << ',' << g.free_rank() << ',';
    for (std::size_t i = 0; i < g.torsion().size(); ++i) os << (i ? ";" : "") << g.torsion()[i].get_str();
    os << '\n';
  }
  return os.str();
}

std::map<int, long> parse_hc(const std::string& text) {
  std::map<int, long> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("--hc expects DEGREE:RANK pairs, got '" + item + "'");
    try {
      std::size_t used = 0;
      const int k = std::stoi(item.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument("degree");
      const std::string rank_text = item.substr(colon + 1);
      const long r = std::stol(rank_text, &used);
      if (used != rank_text.size() || r < 0) throw std::invalid_argument("rank");
      out[k] = r;
    } catch (const std::logic_error&) {
      throw ParseError("--hc expects DEGREE:RANK pairs, got '" + item + "'");
    }
  }
  return out;
}

ordered_json check_json(const CheckReport& r) {
  ordered_json j;
  j["name"] = r.name;
  j["passed"] = r.passed;
  j["details"] = r.details;
  return j;
}

void print_check(std::ostream& out, const CheckReport& r) {
  out << (r.passed ? "PASS " : "FAIL ") << r.name << '\n';
  for (const auto& d : r.details) out << "    " << d << '\n';
}

bool has_torsion_strata(const SncDatum& s) {
  for (const auto& [subset, data] : s.strata)
    for (const auto& [b, g] : data.cohomology)
      if (!canonical_form(g).is_free()) return true;
  return false;
}

std::string example_filename(const std::string& name) {
  std::string out;
  for (char c : name) out.push_back(c == ':' ? '_' : c == ',' ? '-' : c == '*' ? 'x' : c);
  return out + ".json";
}

// ---------------------------------------------------------------- commands

struct Options {
  std::vector<std::string> positionals;
  std::string builder;
  std::string format = "text";
  bool rational = false;
  bool raw_complex = false;
  std::size_t budget = kDefaultSimplifyBudget;
  std::string hc;
  std::string out_dir;
  bool timings = false;
};

int cmd_compute(const Options& o, std::ostream& out, std::ostream& err) {
  const std::optional<std::string> path =
      o.positionals.empty() ? std::nullopt : std::optional<std::string>(o.positionals.front());
  if (!o.builder.empty() && !o.positionals.empty()) throw ParseError("give either a file or --builder, not both");
  const Input in = load_input(path, o.builder);
  const ValidationReport valid = validate(in.datum);
  if (!valid.ok()) {
    err << "invalid datum " << in.id << ":\n" << valid.to_string();
    return kExitCheckFailed;
  }
  const auto start = std::chrono::steady_clock::now();
  const BigradedTable table = e2_page(in.datum, o.rational);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (o.format == "json") {
    ordered_json j;
    j["input"] = in.id;
    j["coefficients"] = o.rational ? "Q" : "Z";
    j["table"] = table_json(table);
    j["checks"] = ordered_json::array();
    if (o.timings) j["timings_ms"] = {{"table", ms}};
    out << j.dump(2) << '\n';
  } else if (o.format == "csv") {
    out << table_csv(table);
  } else {
    out << "input: " << in.id << (o.rational ? "  (rational ranks)" : "") << '\n' << table_text(table);
    if (o.timings) out << "time: " << ms << " ms\n";
  }
  return kExitOk;
}

int cmd_dual(const Options& o, std::ostream& out, std::ostream& err) {
  if (!o.builder.empty() && !o.positionals.empty()) throw ParseError("give either a file or --builder, not both");
  SimplicialComplex k;
  std::string id;
  if (o.raw_complex) {
    if (o.positionals.empty()) throw ParseError("--complex needs a JSON file");
    id = o.positionals.front();
    k = complex_from_json(id);
  } else {
    const Input in = load_input(o.positionals.empty() ? std::nullopt : std::optional(o.positionals.front()), o.builder);
    const ValidationReport valid = validate(in.datum);
    if (!valid.ok()) {
      err << "invalid datum " << in.id << ":\n" << valid.to_string();
      return kExitCheckFailed;
    }
    id = in.id;
    k = nerve(in.datum);
  }

  const ContractibilityReport report = contractibility_report(k, o.budget);
  std::map<int, std::size_t> f_vector;
  for (const auto& f : k.faces()) ++f_vector[static_cast<int>(f.size()) - 1];
  const auto components = connected_components(k);

  if (o.format == "json") {
    ordered_json j;
    j["input"] = id;
    ordered_json faces = ordered_json::array();
    for (const auto& f : k.faces()) faces.push_back(f);
    j["faces"] = std::move(faces);
    ordered_json reduced = ordered_json::array();
    for (const auto& [deg, g] : report.reduced) {
      ordered_json e = group_json(g);
      e["degree"] = deg;
      reduced.push_back(std::move(e));
    }
    j["reduced_cohomology"] = std::move(reduced);
    j["euler_characteristic"] = euler_characteristic(k);
    j["components"] = components.size();
    if (report.presentation) j["presentation"] = report.presentation->to_string();
    if (report.simplified) j["simplified_presentation"] = report.simplified->to_string();
    j["status"] = to_string(report.status);
    if (report.status == ContractibilityStatus::SphereLike) j["sphere_dimension"] = report.sphere_dimension;
    out << j.dump(2) << '\n';
    return kExitOk;
  }

  out << "input: " << id << '\n';
  out << "dual complex: dimension " << k.dimension() << ", f-vector";
  if (f_vector.empty()) out << " (empty)";
  for (const auto& [d, n] : f_vector) out << ' ' << n;
  out << ", " << components.size() << " component(s)\n";
  out << "reduced cohomology:";
  for (const auto& [deg, g] : report.reduced) out << "  H~^" << deg << " = " << g.to_string();
  out << '\n';
  out << "euler characteristic: " << euler_characteristic(k) << '\n';
  if (report.presentation) {
    out << "pi1 presentation: " << report.presentation->to_string() << '\n';
    out << "simplified (budget " << o.budget << "): " << report.simplified->to_string() << '\n';
  } else {
    out << "pi1 presentation: n/a (not connected)\n";
  }
  out << "status: " << report.summary() << '\n';
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  static const std::vector<std::string> suites{"prop1", "d2", "stability", "euler", "degeneration",
                                               "product-consistency"};
  std::optional<std::string> path;
  std::string which = "all";
  std::vector<std::string> pos = o.positionals;
  if (o.builder.empty()) {
    if (pos.empty()) throw ParseError("no input: give a JSON file or --builder NAME");
    path = pos.front();
    pos.erase(pos.begin());
  }
  if (!pos.empty()) which = pos.front();
  if (pos.size() > 1) throw ParseError("too many arguments to check");
  if (which != "all" && std::find(suites.begin(), suites.end(), which) == suites.end())
    throw ParseError("unknown check '" + which + "'");

  const Input in = load_input(path, o.builder);
  const auto selected = [&](const std::string& name) { return which == "all" || which == name; };

  std::optional<std::map<int, long>> expected;
  if (!o.hc.empty())
    expected = parse_hc(o.hc);
  else if (in.builder)
    expected = known_compact_betti(*in.builder);

  std::vector<CheckReport> reports;
  std::vector<std::pair<std::string, double>> times;
  auto run = [&](const std::string& name, const std::function<CheckReport()>& fn) {
    if (!selected(name)) return;
    const auto start = std::chrono::steady_clock::now();
    try {
      reports.push_back(fn());
    } catch (const InvalidInput& e) {
      CheckReport r{name};
      r.fail(e.what());
      reports.push_back(std::move(r));
    }
    times.emplace_back(name, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
  };

  const ValidationReport valid = validate(in.datum);
  CheckReport validation{"validate"};
  if (valid.ok())
    validation.note("ok");
  else
    validation.fail(valid.to_string());
  reports.push_back(validation);

  // The d o d check is meaningful on broken data too: it pinpoints (k, b).
  run("d2", [&] { return d2_check(in.datum); });
  if (valid.ok()) {
    const bool torsion = has_torsion_strata(in.datum);
    run("prop1", [&] { return check_prop1(in.datum); });
    run("euler", [&] { return euler_check(in.datum); });
    run("degeneration", [&] {
      if (!expected) {
        CheckReport r{"degeneration"};
        if (which == "all")
          r.note("skipped: no expected compactly supported Betti numbers (pass --hc)");
        else
          r.fail("no expected compactly supported Betti numbers (pass --hc K:RANK,...)");
        return r;
      }
      return degeneration_check(in.datum, *expected);
    });
    run("stability", [&] {
      if (torsion && which == "all") {
        CheckReport r{"stability"};
        r.note("skipped: strata cohomology has torsion (free Kunneth only)");
        return r;
      }
      return a1_stability_check(in.datum);
    });
    run("product-consistency", [&] {
      CheckReport r{"product-consistency"};
      if (torsion && which == "all") {
        r.note("skipped: strata cohomology has torsion (free Kunneth only)");
        return r;
      }
      for (const std::string partner : {"point", "affine:1", "torus:1"}) {
        const CheckReport sub = product_consistency_check(in.datum, build(partner));
        for (const auto& d : sub.details) r.details.push_back("x " + partner + ": " + d);
        if (!sub.passed) r.passed = false;
      }
      return r;
    });
  }

  bool all_passed = true;
  for (const auto& r : reports) all_passed = all_passed && r.passed;

  if (o.format == "json") {
    ordered_json j;
    j["input"] = in.id;
    j["passed"] = all_passed;
    ordered_json checks = ordered_json::array();
    for (const auto& r : reports) checks.push_back(check_json(r));
    j["checks"] = std::move(checks);
    if (o.timings) {
      ordered_json t = ordered_json::object();
      for (const auto& [name, ms] : times) t[name] = ms;
      j["timings_ms"] = std::move(t);
    }
    out << j.dump(2) << '\n';
  } else {
    out << "input: " << in.id << '\n';
    for (const auto& r : reports) print_check(out, r);
    if (o.timings)
      for (const auto& [name, ms] : times) out << "time " << name << ": " << ms << " ms\n";
    out << (all_passed ? "all checks passed" : "some checks FAILED") << '\n';
  }
  if (!valid.ok()) err << "invalid datum " << in.id << ":\n" << valid.to_string();
  return all_passed ? kExitOk : kExitCheckFailed;
}

int cmd_examples(const Options& o, std::ostream& out, std::ostream& /*err*/) {
  if (o.positionals.size() > 1) throw ParseError("examples takes at most one name");
  std::vector<std::string> names;
  if (!o.positionals.empty())
    names.push_back(o.positionals.front());
  else if (!o.out_dir.empty())
    names = example_names();

  if (names.empty()) {
    for (const auto& n : example_names()) out << n << '\n';
    return kExitOk;
  }
  for (const auto& name : names) {
    const std::string text = to_json(build(name));
    if (o.out_dir.empty()) {
      out << text;
      continue;
    }
    std::filesystem::create_directories(o.out_dir);
    const auto file = std::filesystem::path(o.out_dir) / example_filename(name);
    std::ofstream f(file, std::ios::binary);
    if (!f) throw ParseError("cannot write '" + file.string() + "'");
    f << text;
    out << file.string() << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integral weight cohomology with compact support from SNC compactification data"};
  app.require_subcommand(1);
  Options o;

  auto* compute = app.add_subcommand("compute", "Bigraded table H_Wc^{a,b}(X; Z)");
  compute->add_option("input", o.positionals, "SNC datum JSON file");
  compute->add_option("--builder", o.builder, "Built-in datum, e.g. affine:2, torus:1, curve:1,2, affine:1*torus:1");
  compute->add_option("--format", o.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  compute->add_flag("--rational", o.rational, "Report free ranks only");
  compute->add_flag("--timings", o.timings, "Include wall-clock timings");

  auto* dual = app.add_subcommand("dual", "Dual boundary complex: reduced cohomology, pi1, contractibility");
  dual->add_option("input", o.positionals, "SNC datum JSON file (or simplicial complex with --complex)");
  dual->add_option("--builder", o.builder, "Built-in datum");
  dual->add_flag("--complex", o.raw_complex, "Input is {\"vertices\": v, \"facets\": [...]}");
  dual->add_option("--simplify", o.budget, "Tietze move budget");
  dual->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* check = app.add_subcommand("check", "Run consistency checks");
  check->add_option("args", o.positionals, "[FILE] [all|prop1|d2|stability|euler|degeneration|product-consistency]");
  check->add_option("--builder", o.builder, "Built-in datum");
  check->add_option("--hc", o.hc, "Expected compactly supported Betti numbers, e.g. 1:3,2:1");
  check->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  check->add_flag("--timings", o.timings, "Include wall-clock timings");

  auto* examples = app.add_subcommand("examples", "List or emit built-in data as JSON");
  examples->add_option("name", o.positionals, "Builder name");
  examples->add_option("--out", o.out_dir, "Write files into this directory");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParseError;
  }

  try {
    if (compute->parsed()) return cmd_compute(o, out, err);
    if (dual->parsed()) return cmd_dual(o, out, err);
    if (check->parsed()) return cmd_check(o, out, err);
    return cmd_examples(o, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

}  // namespace wcoh
