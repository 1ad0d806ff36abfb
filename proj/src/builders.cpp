#include "wcoh/builders.hpp"

#include "wcoh/weight.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace wcoh {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------- builders

SncDatum point_snc() {
  SncDatum s;
  s.dim = 0;
  s.n_components = 0;
  s.strata[{}].cohomology[0] = FpAbPresentation::free(1);
  return s;
}

GradedGroupData projective_space_cohomology(int m) {
  if (m < 0) throw InvalidInput("projective space of negative dimension");
  GradedGroupData out;
  for (int j = 0; j <= m; ++j) out[2 * j] = FpAbPresentation::free(1);
  return out;
}

SncDatum affine_space_snc(int d) {
  if (d < 1) throw InvalidInput("affine_space_snc: dimension must be at least 1");
  SncDatum s;
  s.dim = d;
  s.n_components = 1;
  s.strata[{}].cohomology = projective_space_cohomology(d);
  StratumData& hyperplane = s.strata[{1}];
  hyperplane.cohomology = projective_space_cohomology(d - 1);
  // The hyperplane class restricts to the hyperplane class.
  for (int j = 0; j < d; ++j) hyperplane.restrictions[1][2 * j] = IntMatrix::identity(1);
  return s;
}

SncDatum torus_snc(int n) {
  if (n < 0) throw InvalidInput("torus_snc: negative rank");
  if (n == 0) return point_snc();
  if (n > 1) return product_snc(torus_snc(n - 1), torus_snc(1));
  SncDatum s;
  s.dim = 1;
  s.n_components = 2;
  s.strata[{}].cohomology = projective_space_cohomology(1);
  for (int i : {1, 2}) {
    StratumData& pt = s.strata[{i}];
    pt.cohomology = projective_space_cohomology(0);
    pt.restrictions[i][0] = IntMatrix::identity(1);
  }
  return s;
}

SncDatum punctured_curve_snc(int g, int n) {
  if (g < 0) throw InvalidInput("punctured_curve_snc: negative genus");
  if (n < 1) throw InvalidInput("punctured_curve_snc: at least one puncture required");
  SncDatum s;
  s.dim = 1;
  s.n_components = n;
  GradedGroupData& curve = s.strata[{}].cohomology;
  curve[0] = FpAbPresentation::free(1);
  if (g > 0) curve[1] = FpAbPresentation::free(static_cast<std::size_t>(2 * g));
  curve[2] = FpAbPresentation::free(1);
  for (int i = 1; i <= n; ++i) {
    StratumData& pt = s.strata[{i}];
    pt.cohomology = projective_space_cohomology(0);
    pt.restrictions[i][0] = IntMatrix::identity(1);
  }
  return s;
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

int parse_small_int(const std::string& text, const std::string& context) {
  if (text.empty() || text.size() > 6 || text.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("bad integer '" + text + "' in " + context);
  return std::stoi(text);
}

struct Factor {
  std::string kind;
  std::vector<int> args;
};

Factor parse_factor(const std::string& name) {
  const auto colon = name.find(':');
  Factor f{name.substr(0, colon), {}};
  if (colon != std::string::npos)
    for (const auto& a : split(name.substr(colon + 1), ',')) f.args.push_back(parse_small_int(a, "builder '" + name + "'"));
  const std::size_t want = f.kind == "point" ? 0 : f.kind == "curve" ? 2 : (f.kind == "affine" || f.kind == "torus") ? 1 : 99;
  if (want == 99) throw ParseError("unknown builder '" + f.kind + "' (expected point, affine:D, torus:N, curve:G,N)");
  if (f.args.size() != want) throw ParseError("builder '" + name + "' takes " + std::to_string(want) + " argument(s)");
  return f;
}

SncDatum build_factor(const Factor& f) {
  try {
    if (f.kind == "point") return point_snc();
    if (f.kind == "affine") return affine_space_snc(f.args[0]);
    if (f.kind == "torus") return torus_snc(f.args[0]);
    return punctured_curve_snc(f.args[0], f.args[1]);
  } catch (const InvalidInput& e) {
    throw ParseError(e.what());
  }
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::map<int, long> factor_betti(const Factor& f) {
  std::map<int, long> out;
  if (f.kind == "point") {
    out[0] = 1;
  } else if (f.kind == "affine") {
    out[2 * f.args[0]] = 1;
  } else if (f.kind == "torus") {
    const int n = f.args[0];
    for (int m = n; m <= 2 * n; ++m) out[m] = binomial(n, 2 * n - m);
  } else {
    const long h1 = f.args[1] - 1 + 2L * f.args[0];
    if (h1 > 0) out[1] = h1;
    out[2] = 1;
  }
  return out;
}

}  // namespace

SncDatum build(const std::string& name) {
  const auto parts = split(name, '*');
  SncDatum out = build_factor(parse_factor(parts[0]));
  for (std::size_t i = 1; i < parts.size(); ++i) out = product_snc(out, build_factor(parse_factor(parts[i])));
  return out;
}

std::optional<std::map<int, long>> known_compact_betti(const std::string& name) {
  std::map<int, long> acc{{0, 1}};
  for (const auto& part : split(name, '*')) {
    const auto factor = factor_betti(parse_factor(part));
    std::map<int, long> next;
    for (const auto& [i, x] : acc)
      for (const auto& [j, y] : factor) next[i + j] += x * y;
    acc = std::move(next);
  }
  return acc;
}

std::vector<std::string> example_names() {
  return {"point",     "affine:1",  "affine:2",  "affine:3",        "torus:1",         "torus:2",
          "curve:0,1", "curve:1,2", "curve:2,3", "affine:1*affine:1", "affine:1*torus:1", "torus:1*torus:1"};
}

// ---------------------------------------------------------------- JSON

namespace {

ordered_json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Integer integer_from_json(const ordered_json& j, const std::string& context) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    const auto text = j.get<std::string>();
    Integer out;
    if (text.empty() || out.set_str(text, 10) != 0) throw ParseError("bad integer string in " + context);
    return out;
  }
  throw ParseError("expected an integer in " + context);
}

int degree_key(const std::string& key, const std::string& context) {
  const bool negative = !key.empty() && key[0] == '-';
  const int v = parse_small_int(negative ? key.substr(1) : key, context);
  return negative ? -v : v;
}

std::vector<std::vector<Integer>> integer_rows(const ordered_json& j, const std::string& context) {
  if (!j.is_array()) throw ParseError("expected a list of lists in " + context);
  std::vector<std::vector<Integer>> out;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError("expected a list of integers in " + context);
    std::vector<Integer> r;
    for (const auto& x : row) r.push_back(integer_from_json(x, context));
    out.push_back(std::move(r));
  }
  return out;
}

ordered_json matrix_rows(const IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int nonnegative_field(const ordered_json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 0 ||
      j[key].get<long long>() > 1'000'000)
    throw ParseError(std::string("field '") + key + "' must be a nonnegative integer");
  return static_cast<int>(j[key].get<long long>());
}

}  // namespace

std::string to_json(const SncDatum& s) {
  ordered_json root;
  root["dim"] = s.dim;
  root["components"] = s.n_components;
  ordered_json strata = ordered_json::array();
  for (const auto& [subset, data] : s.strata) {
    ordered_json entry;
    entry["subset"] = subset;
    ordered_json coh = ordered_json::object();
    for (const auto& [b, p] : data.cohomology) {
      ordered_json g;
      g["generators"] = p.generators;
      g["relations"] = matrix_rows(p.relations.transpose());
      coh[std::to_string(b)] = std::move(g);
    }
    entry["cohomology"] = std::move(coh);
    ordered_json res = ordered_json::object();
    for (const auto& [i, per_degree] : data.restrictions) {
      ordered_json maps = ordered_json::object();
      for (const auto& [b, m] : per_degree) maps[std::to_string(b)] = matrix_rows(m);
      res[std::to_string(i)] = std::move(maps);
    }
    entry["restrictions"] = std::move(res);
    strata.push_back(std::move(entry));
  }
  root["strata"] = std::move(strata);
  return root.dump(2) + "\n";
}

SncDatum from_json_text(const std::string& text) {
  ordered_json root;
  try {
    root = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("top level must be an object");

  SncDatum s;
  s.dim = nonnegative_field(root, "dim");
  s.n_components = nonnegative_field(root, "components");
  if (!root.contains("strata") || !root["strata"].is_array()) throw ParseError("field 'strata' must be a list");

  // Restriction rows are read first; the column count of an empty (0-row)
  // matrix is only known once every stratum is loaded.
  struct PendingMap {
    Subset subset;
    int i;
    int b;
    std::vector<std::vector<Integer>> rows;
  };
  std::vector<PendingMap> pending;

  for (const auto& entry : root["strata"]) {
    if (!entry.is_object() || !entry.contains("subset") || !entry["subset"].is_array())
      throw ParseError("each stratum needs a 'subset' list");
    Subset subset;
    for (const auto& x : entry["subset"]) {
      if (!x.is_number_integer()) throw ParseError("malformed subset: entries must be integers");
      subset.push_back(static_cast<int>(x.get<long long>()));
    }
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (subset[i] < 1 || subset[i] > s.n_components)
        throw ParseError("malformed subset " + subset_to_string(subset) + ": index out of range 1.." +
                         std::to_string(s.n_components));
      if (i > 0 && subset[i] <= subset[i - 1])
        throw ParseError("malformed subset " + subset_to_string(subset) + ": indices must be strictly increasing");
    }
    const std::string where = "stratum " + subset_to_string(subset);
    if (s.strata.count(subset)) throw ParseError("duplicate " + where);
    StratumData& data = s.strata[subset];

    if (entry.contains("cohomology")) {
      if (!entry["cohomology"].is_object()) throw ParseError("'cohomology' of " + where + " must be an object");
      for (const auto& [key, g] : entry["cohomology"].items()) {
        const int b = degree_key(key, where + " cohomology");
        if (!g.is_object() || !g.contains("generators") || !g["generators"].is_number_integer() ||
            g["generators"].get<long long>() < 0)
          throw ParseError("H^" + key + " of " + where + " needs a nonnegative 'generators'");
        const auto n = static_cast<std::size_t>(g["generators"].get<long long>());
        std::vector<std::vector<Integer>> cols;
        if (g.contains("relations")) cols = integer_rows(g["relations"], where + " relations");
        try {
          data.cohomology[b] = FpAbPresentation(n, IntMatrix::from_columns(cols, n));
        } catch (const InvalidInput& e) {
          throw ParseError("H^" + key + " of " + where + ": " + e.what());
        }
      }
    }
    if (entry.contains("restrictions")) {
      if (!entry["restrictions"].is_object()) throw ParseError("'restrictions' of " + where + " must be an object");
      for (const auto& [ikey, maps] : entry["restrictions"].items()) {
        const int i = degree_key(ikey, where + " restrictions");
        if (!maps.is_object()) throw ParseError("restrictions along " + ikey + " of " + where + " must be an object");
        for (const auto& [bkey, rows] : maps.items())
          pending.push_back({subset, i, degree_key(bkey, where + " restrictions"), integer_rows(rows, where + " restrictions")});
      }
    }
  }

  for (auto& pm : pending) {
    std::size_t cols = 0;
    if (!pm.rows.empty())
      cols = pm.rows.front().size();
    else
      cols = s.cohomology(subset_without(pm.subset, pm.i), pm.b).generators;
    try {
      s.strata[pm.subset].restrictions[pm.i][pm.b] = IntMatrix::from_rows(pm.rows, cols);
    } catch (const InvalidInput& e) {
      throw ParseError("restriction of " + subset_to_string(pm.subset) + ": " + e.what());
    }
  }
  return s;
}

SncDatum from_json(const std::string& path) { return from_json_text(read_file(path)); }

SimplicialComplex complex_from_json_text(const std::string& text) {
  ordered_json root;
  try {
    root = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("top level must be an object");
  const int v = nonnegative_field(root, "vertices");
  if (!root.contains("facets") || !root["facets"].is_array()) throw ParseError("field 'facets' must be a list");
  std::vector<Face> facets;
  for (int x = 0; x < v; ++x) facets.push_back({x});
  for (const auto& f : root["facets"]) {
    if (!f.is_array()) throw ParseError("each facet must be a list of vertices");
    Face face;
    for (const auto& x : f) {
      if (!x.is_number_integer() || x.get<long long>() < 0 || x.get<long long>() >= v)
        throw ParseError("facet vertex out of range 0.." + std::to_string(v - 1));
      face.push_back(static_cast<int>(x.get<long long>()));
    }
    facets.push_back(std::move(face));
  }
  try {
    return SimplicialComplex::from_facets(facets);
  } catch (const InvalidInput& e) {
    throw ParseError(e.what());
  }
}

SimplicialComplex complex_from_json(const std::string& path) { return complex_from_json_text(read_file(path)); }

}  // namespace wcoh
