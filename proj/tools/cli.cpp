#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "capi_handles.hpp"
#include "json.hpp"

namespace czorb_cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int exit_code_for(czorb_status status) {
  switch (status) {
    case CZORB_OK: return kExitOk;
    case CZORB_UNCOVERED: return kExitUncovered;
    case CZORB_CONVERGENCE:
    case CZORB_RESOLUTION: return kExitNumeric;
    default: return kExitDomain;
  }
}

// ---- input parsing ------------------------------------------------------

std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("cannot parse " + std::string(what) + " entry '" + std::string(text) +
                     "' as an integer");
  }
  return v;
}

std::vector<std::int64_t> parse_csv(std::string_view text, std::string_view what) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_int(text.substr(start, comma - start), what));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

czorb_rational parse_rational(const std::string& text) {
  czorb_rational r{};
  const czorb_status st = czorb_rational_parse(text.c_str(), &r);
  if (st != CZORB_OK) throw UsageError(czorb_last_error_message());
  return r;
}

std::int64_t eval_budget() {
  const char* env = std::getenv("CZORB_EVAL_BUDGET");
  if (env == nullptr || *env == '\0') return 1'000'000;
  const std::int64_t v = parse_int(env, "CZORB_EVAL_BUDGET");
  if (v < 3) throw UsageError("CZORB_EVAL_BUDGET must be at least 3");
  return v;
}

// ---- JSON builders ------------------------------------------------------

Json rational_json(czorb_rational r) { return Json{{"num", r.num}, {"den", r.den}}; }

// null when ||w|| does not fit in 64 bits
Json product_json(const czorb_weight_invariants* inv) {
  std::int64_t p = 0;
  if (czorb_weight_invariants_product(inv, &p) == CZORB_OK) return p;
  return nullptr;
}

Json group_json(czorb_group g) {
  switch (g.kind) {
    case CZORB_GROUP_TRIVIAL: return "0";
    case CZORB_GROUP_FREE: return g.parameter == 1 ? "Z" : "Z^" + std::to_string(g.parameter);
    case CZORB_GROUP_CYCLIC: return "Z_" + std::to_string(g.parameter);
  }
  return "?";
}

Weights make_weights(const std::vector<std::int64_t>& w) {
  czorb_weights* h = nullptr;
  check(czorb_weights_new(w.data(), w.size(), &h));
  return Weights(h);
}

Brieskorn make_brieskorn(const std::vector<std::int64_t>& a) {
  czorb_brieskorn* h = nullptr;
  check(czorb_brieskorn_new(a.data(), a.size(), &h));
  return Brieskorn(h);
}

std::vector<std::int64_t> weight_values(const czorb_weights* w) {
  std::vector<std::int64_t> out(czorb_weights_size(w));
  check(czorb_weights_values(w, out.data(), out.size()));
  return out;
}

void append_report(Json& j, const czorb_report* r) {
  j["index"] = czorb_report_index(r);
  std::int64_t b = 0;
  j["b_constant"] = czorb_report_b_constant(r, &b) ? Json(b) : Json(nullptr);
  j["branch"] = czorb_branch_name(czorb_report_branch(r));
  j["extrapolated"] = czorb_report_extrapolated(r) != 0;
  j["paper_ref"] = czorb_report_formula(r);
  Json notes = Json::array();
  for (std::size_t i = 0; i < czorb_report_note_count(r); ++i) {
    notes.push_back(czorb_report_note(r, i));
  }
  j["notes"] = std::move(notes);
}

Json hypotheses_json(const czorb_space* s) {
  czorb_hypotheses h{};
  check(czorb_check_hypotheses(s, &h));
  return Json{
      {"b_constant", h.b_constant},
      {"first_chern", czorb_condition_name(h.first_chern)},
      {"simply_connected", czorb_condition_name(h.simply_connected)},
      {"total_space_manifold", czorb_condition_name(h.total_space_manifold)},
  };
}

Json weights_result(const std::vector<std::int64_t>& raw) {
  const Weights w = make_weights(raw);
  czorb_weight_invariants* inv_raw = nullptr;
  check(czorb_weights_invariants(w.get(), &inv_raw));
  const Invariants inv(inv_raw);
  const std::size_t n = raw.size();
  std::vector<std::int64_t> d(n), e(n), reduced(n);
  check(czorb_weight_invariants_d(inv.get(), d.data(), n));
  check(czorb_weight_invariants_e(inv.get(), e.data(), n));
  check(czorb_weight_invariants_reduced(inv.get(), reduced.data(), n));
  czorb_rational area{};
  std::int64_t degree = 0, multiplier = 0;
  check(czorb_symplectic_area(w.get(), &area));
  check(czorb_fw_degree(w.get(), &degree));
  check(czorb_classifying_multiplier(w.get(), &multiplier));
  return Json{
      {"command", "weights"},
      {"weights", raw},
      {"sum", czorb_weight_invariants_sum(inv.get())},
      {"product", product_json(inv.get())},
      {"d", d},
      {"e", e},
      {"a_w", czorb_weight_invariants_a_w(inv.get())},
      {"reduced", reduced},
      {"well_formed", czorb_weight_invariants_well_formed(inv.get()) != 0},
      {"symplectic_area", rational_json(area)},
      {"fw_degree", degree},
      {"classifying_multiplier", multiplier},
  };
}

Json principal_space_result(const czorb_space* s, Json space) {
  czorb_report* r = nullptr;
  check(czorb_mu_principal(s, &r));
  const Report report(r);
  Json j{{"command", "cz principal"}, {"space", std::move(space)}};
  append_report(j, report.get());
  j["hypotheses"] = hypotheses_json(s);
  return j;
}

Json principal_wps_result(const std::vector<std::int64_t>& raw) {
  const Weights w = make_weights(raw);
  czorb_space* s = nullptr;
  check(czorb_space_new_wps(w.get(), &s));
  const SpaceHandle space(s);
  return principal_space_result(space.get(), Json{{"kind", "wps"}, {"weights", raw}});
}

Json principal_wci_result(const std::vector<std::int64_t>& raw,
                          const std::vector<std::int64_t>& degrees) {
  const Weights w = make_weights(raw);
  czorb_space* s = nullptr;
  check(czorb_space_new_wci(w.get(), degrees.data(), degrees.size(), &s));
  const SpaceHandle space(s);
  return principal_space_result(
      space.get(), Json{{"kind", "wci"}, {"weights", raw}, {"degrees", degrees}});
}

Json brieskorn_space_json(const czorb_brieskorn* b, const std::vector<std::int64_t>& a) {
  czorb_space* s = nullptr;
  check(czorb_brieskorn_to_wci(b, &s));
  const SpaceHandle space(s);
  czorb_weights* w = nullptr;
  check(czorb_space_weights(space.get(), &w));
  const Weights weights(w);
  std::vector<std::int64_t> degrees(czorb_space_degree_count(space.get()));
  check(czorb_space_degrees(space.get(), degrees.data(), degrees.size()));
  return Json{
      {"kind", "brieskorn"},
      {"exponents", a},
      {"l", czorb_brieskorn_l(b)},
      {"l2", czorb_brieskorn_l2(b)},
      {"weights", weight_values(weights.get())},
      {"degrees", degrees},
  };
}

Json principal_brieskorn_result(const std::vector<std::int64_t>& a) {
  const Brieskorn b = make_brieskorn(a);
  czorb_report* r = nullptr;
  check(czorb_mu_principal_brieskorn(b.get(), &r));
  const Report report(r);
  Json j{{"command", "cz principal"}, {"space", brieskorn_space_json(b.get(), a)}};
  append_report(j, report.get());
  return j;
}

std::int64_t support_isotropy(const std::vector<std::int64_t>& weights,
                              const std::vector<std::int64_t>& support) {
  std::vector<std::int64_t> sub;
  for (auto j : support) sub.push_back(weights.at(static_cast<std::size_t>(j)));
  std::int64_t g = 0;
  check(czorb_gcd_all(sub.data(), sub.size(), &g));
  return g;
}

Json orbit_wps_result(const std::vector<std::int64_t>& raw,
                      const std::vector<std::int64_t>& support, bool allow) {
  const Weights w = make_weights(raw);
  czorb_report* r = nullptr;
  check(czorb_mu_orbit_wps(w.get(), support.data(), support.size(), allow ? 1 : 0, &r));
  const Report report(r);
  Json j{
      {"command", "cz orbit"},
      {"space", Json{{"kind", "wps"}, {"weights", raw}}},
      {"support", support},
      {"isotropy", support_isotropy(raw, support)},
  };
  append_report(j, report.get());
  return j;
}

Json orbit_brieskorn_result(const std::vector<std::int64_t>& a,
                            const std::vector<std::int64_t>& support, bool allow) {
  const Brieskorn b = make_brieskorn(a);
  czorb_report* r = nullptr;
  check(czorb_mu_orbit_brieskorn(b.get(), support.data(), support.size(), allow ? 1 : 0,
                                 &r));
  const Report report(r);
  Json space = brieskorn_space_json(b.get(), a);
  const auto weights = space["weights"].get<std::vector<std::int64_t>>();
  Json j{
      {"command", "cz orbit"},
      {"space", std::move(space)},
      {"support", support},
      {"isotropy", support_isotropy(weights, support)},
  };
  append_report(j, report.get());
  return j;
}

Json teardrop_result(std::int64_t m, std::optional<std::int64_t> degree) {
  czorb_rational chern{}, pstar{};
  check(czorb_teardrop_orbifold_chern(m, &chern));
  check(czorb_p_star_factor(m, &pstar));
  Json j{
      {"command", "teardrop"},
      {"m", m},
      {"orbifold_chern", rational_json(chern)},
      {"p_star_factor", rational_json(pstar)},
  };
  if (m < 2 && !degree) {
    j["groups"] = Json::array();
    j["notes"] = Json::array({"m = 1 is the smooth sphere; group tables need m >= 2"});
    return j;
  }
  const std::int64_t lo = degree.value_or(0);
  const std::int64_t hi = degree.value_or(6);
  Json groups = Json::array();
  for (std::int64_t q = lo; q <= hi; ++q) {
    czorb_group h{}, c{};
    check(czorb_teardrop_homology(m, q, &h));
    check(czorb_teardrop_cohomology(m, q, &c));
    groups.push_back(Json{{"q", q}, {"homology", group_json(h)}, {"cohomology", group_json(c)}});
  }
  j["groups"] = std::move(groups);
  return j;
}

Json lemma42_result(std::int64_t w0, std::int64_t w1, double tol) {
  czorb_quadrature q{};
  check(czorb_chart_integral(w0, w1, tol, eval_budget(), &q));
  const double expected = -1.0 / static_cast<double>(w0);
  const double abs_error = std::abs(q.value - expected);
  Json j{
      {"command", "verify lemma42"},
      {"w0", w0},
      {"w1", w1},
      {"tol", tol},
      {"value", q.value},
      {"estimated_error", q.estimated_error},
      {"evaluations", q.evaluations},
      {"expected", rational_json({-1, w0})},
      {"abs_error", abs_error},
      {"within_tol", abs_error <= tol},
  };
  const std::vector<std::int64_t> pair{w0, w1};
  std::int64_t g = 0;
  check(czorb_gcd_all(pair.data(), pair.size(), &g));
  if (g == 1) {
    const Weights w = make_weights(pair);
    czorb_area_chain_steps chain{};
    czorb_rational area{};
    check(czorb_area_chain(w.get(), &chain));
    check(czorb_symplectic_area(w.get(), &area));
    j["area_chain"] = Json{
        {"chart_value", rational_json(chain.chart_value)},
        {"group_order", chain.group_order},
        {"local_value", rational_json(chain.local_value)},
        {"inclusion_degree", rational_json(chain.inclusion_degree)},
        {"area", rational_json(chain.area)},
        {"matches_symplectic_area",
         chain.area.num == area.num && chain.area.den == area.den},
    };
  }
  if (abs_error > tol) {
    throw ApiError(CZORB_CONVERGENCE,
                   "chart integral differs from -1/w0 by " + std::to_string(abs_error), abs_error);
  }
  return j;
}

Json winding_result(const std::vector<std::int64_t>& rates,
                    std::optional<std::int64_t> samples) {
  std::int64_t needed = 0;
  check(czorb_min_winding_samples(rates.data(), rates.size(), &needed));
  czorb_winding wr{};
  check(czorb_det_winding(rates.data(), rates.size(), samples.value_or(needed), &wr));
  std::int64_t expected = 0;
  for (auto r : rates) expected += r;
  return Json{
      {"command", "verify winding"},
      {"rates", rates},
      {"samples", wr.samples},
      {"winding", wr.winding},
      {"residual", wr.residual},
      {"expected", expected},
      {"agrees", wr.winding == expected},
  };
}

Json scalar_cz_result(czorb_rational T) {
  std::int64_t formula = 0, oracle = 0;
  check(czorb_scalar_cz(T, &formula));
  check(czorb_crossing_oracle_scalar(T, &oracle));
  return Json{
      {"command", "verify scalar-cz"},
      {"T", rational_json(T)},
      {"index", formula},
      {"crossing_oracle", oracle},
      {"agrees", formula == oracle},
  };
}

// ---- rendering ----------------------------------------------------------

bool is_rational(const Json& v) {
  return v.is_object() && v.size() == 2 && v.contains("num") && v.contains("den");
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (is_rational(v)) {
    const auto num = v["num"].get<std::int64_t>();
    const auto den = v["den"].get<std::int64_t>();
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
  if (v.is_null()) return "-";
  return v.dump();
}

void render(const Json& obj, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : obj.items()) {
    const bool scalar_array =
        value.is_array() &&
        std::all_of(value.begin(), value.end(), [](const Json& x) { return x.is_primitive(); });
    if (value.is_object() && !is_rational(value)) {
      out << pad << key << ":\n";
      render(value, out, indent + 2);
    } else if (value.is_array() && !scalar_array) {
      out << pad << key << ":\n";
      for (const auto& item : value) {
        out << pad << "  -\n";
        render(item, out, indent + 4);
      }
    } else if (scalar_array && key == "notes") {
      for (const auto& note : value) {
        out << pad << std::left << std::setw(24) << "note" << note.get<std::string>() << '\n';
      }
    } else if (scalar_array) {
      std::string csv;
      for (const auto& x : value) csv += (csv.empty() ? "" : ",") + scalar_text(x);
      out << pad << std::left << std::setw(24) << key << csv << '\n';
    } else {
      out << pad << std::left << std::setw(24) << key << scalar_text(value) << '\n';
    }
  }
}

void emit(const Json& j, bool json, std::ostream& out) {
  if (json) {
    out << j.dump() << '\n';
  } else {
    render(j, out, 0);
  }
}

Json error_json(czorb_status status, const std::string& message, double value) {
  Json e{
      {"code", czorb_status_name(status)},
      {"exit_code", exit_code_for(status)},
      {"message", message},
  };
  if (status == CZORB_NOT_COPRIME) e["gcd"] = static_cast<std::int64_t>(value);
  if (status == CZORB_CONVERGENCE) e["achieved_error"] = value;
  if (status == CZORB_RESOLUTION) e["residual"] = value;
  return e;
}

// ---- batch --------------------------------------------------------------

std::vector<std::int64_t> int_list(const Json& rec, const char* key) {
  if (!rec.contains(key)) throw UsageError(std::string("missing field '") + key + "'");
  const Json& v = rec[key];
  if (v.is_string()) return parse_csv(v.get<std::string>(), key);
  if (!v.is_array()) throw UsageError(std::string("field '") + key + "' must be a list");
  std::vector<std::int64_t> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) {
      throw UsageError(std::string("field '") + key + "' must hold integers");
    }
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

std::int64_t int_field(const Json& rec, const char* key) {
  if (!rec.contains(key) || !rec[key].is_number_integer()) {
    throw UsageError(std::string("field '") + key + "' must be an integer");
  }
  return rec[key].get<std::int64_t>();
}

bool bool_field(const Json& rec, const char* key) {
  if (!rec.contains(key)) return false;
  if (!rec[key].is_boolean()) throw UsageError(std::string("field '") + key + "' must be boolean");
  return rec[key].get<bool>();
}

Json dispatch_record(const Json& rec) {
  if (!rec.is_object()) throw UsageError("record must be a JSON object");
  if (!rec.contains("kind") || !rec["kind"].is_string()) {
    throw UsageError("record needs a string field 'kind'");
  }
  const std::string kind = rec["kind"].get<std::string>();
  if (kind == "wps") return principal_wps_result(int_list(rec, "weights"));
  if (kind == "wci") return principal_wci_result(int_list(rec, "weights"), int_list(rec, "degrees"));
  if (kind == "brieskorn") return principal_brieskorn_result(int_list(rec, "exponents"));
  if (kind == "orbit-wps") {
    return orbit_wps_result(int_list(rec, "weights"), int_list(rec, "support"),
                            bool_field(rec, "allow_extrapolation"));
  }
  if (kind == "orbit-brieskorn") {
    return orbit_brieskorn_result(int_list(rec, "exponents"), int_list(rec, "support"),
                                  bool_field(rec, "allow_extrapolation"));
  }
  if (kind == "teardrop") {
    std::optional<std::int64_t> degree;
    if (rec.contains("degree")) degree = int_field(rec, "degree");
    return teardrop_result(int_field(rec, "m"), degree);
  }
  if (kind == "verify") {
    const std::string check_name = rec.value("check", "");
    if (check_name == "lemma42") {
      double tol = 1e-8;
      if (rec.contains("tol")) {
        if (!rec["tol"].is_number()) throw UsageError("field 'tol' must be a number");
        tol = rec["tol"].get<double>();
      }
      return lemma42_result(int_field(rec, "w0"), int_field(rec, "w1"), tol);
    }
    if (check_name == "winding") {
      std::optional<std::int64_t> samples;
      if (rec.contains("samples")) samples = int_field(rec, "samples");
      return winding_result(int_list(rec, "rates"), samples);
    }
    if (check_name == "scalar-cz") {
      if (!rec.contains("T")) throw UsageError("missing field 'T'");
      const Json& t = rec["T"];
      if (t.is_number_integer()) return scalar_cz_result({t.get<std::int64_t>(), 1});
      if (t.is_string()) return scalar_cz_result(parse_rational(t.get<std::string>()));
      throw UsageError("field 'T' must be an integer or a \"p/q\" string");
    }
    throw UsageError("verify record needs 'check' of lemma42, winding or scalar-cz");
  }
  throw UsageError("unknown record kind '" + kind + "'");
}

}  // namespace

int run_batch(const std::string& path, bool json, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot read batch file '" << path << "'\n";
    return kExitUsage;
  }
  int worst = kExitOk;
  std::string line;
  std::size_t line_no = 0;
  std::size_t record_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json record_out{{"id", nullptr}, {"line", line_no}};
    Json rec;
    try {
      rec = Json::parse(line);
    } catch (const Json::parse_error& e) {
      record_out["status"] = "error";
      record_out["error"] = Json{{"code", "parse"}, {"exit_code", kExitUsage}, {"message", e.what()}};
      worst = std::max(worst, kExitUsage);
      rec = nullptr;
    }
    if (!rec.is_null()) {
      if (rec.is_object() && rec.contains("id")) record_out["id"] = rec["id"];
      if (rec.is_object() && rec.contains("kind")) record_out["kind"] = rec["kind"];
      try {
        Json result = dispatch_record(rec);
        record_out["status"] = "ok";
        record_out["result"] = std::move(result);
      } catch (const ApiError& e) {
        record_out["status"] = "error";
        record_out["error"] = error_json(e.status(), e.what(), e.value());
        worst = std::max(worst, exit_code_for(e.status()));
      } catch (const UsageError& e) {
        record_out["status"] = "error";
        record_out["error"] =
            Json{{"code", "invalid-record"}, {"exit_code", kExitDomain}, {"message", e.what()}};
        worst = std::max(worst, kExitDomain);
      }
    }
    if (json) {
      out << record_out.dump() << '\n';
    } else {
      out << "record " << ++record_no << '\n';
      render(record_out, out, 2);
    }
  }
  return worst;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conley-Zehnder indices of Reeb orbits over weighted projective spaces, "
               "weighted complete intersections and Brieskorn orbifolds",
               "czorb"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit JSON instead of a table");

  std::string weights_csv;
  auto* weights_cmd = app.add_subcommand("weights", "Weight-vector invariants");
  weights_cmd->add_option("weights", weights_csv, "Comma-separated weights")->required();

  auto* cz = app.add_subcommand("cz", "Conley-Zehnder indices");
  cz->require_subcommand(1);
  std::string wps_csv, wci_csv, degrees_csv, brieskorn_csv, support_csv;
  bool allow = false;
  auto* principal = cz->add_subcommand("principal", "Index of the principal orbit");
  principal->add_option("--wps", wps_csv, "Weights of P(w)");
  principal->add_option("--wci", wci_csv, "Ambient weights of a complete intersection");
  principal->add_option("--degrees", degrees_csv, "Degrees m_1..m_r of the intersection");
  principal->add_option("--brieskorn", brieskorn_csv, "Brieskorn exponents a_0..a_n");
  auto* orbit = cz->add_subcommand("orbit", "Index of a non-principal orbit");
  orbit->add_option("--wps", wps_csv, "Weights of P(w)");
  orbit->add_option("--brieskorn", brieskorn_csv, "Brieskorn exponents a_0..a_n");
  orbit->add_option("--support", support_csv, "Nonzero coordinates of the orbit")->required();
  orbit->add_flag("--allow-extrapolation", allow,
                  "Evaluate branches that no worked case covers, marking them extrapolated");

  std::int64_t teardrop_m = 0;
  std::optional<std::int64_t> teardrop_degree;
  auto* teardrop = app.add_subcommand("teardrop", "Orbifold invariants of P(1,m)");
  teardrop->add_option("m", teardrop_m, "Cone order")->required();
  teardrop->add_option("--degree", teardrop_degree, "Single degree q for the group tables");

  auto* verify = app.add_subcommand("verify", "Numerical and enumeration cross-checks");
  verify->require_subcommand(1);
  std::int64_t w0 = 0, w1 = 0;
  double tol = 1e-8;
  auto* lemma42 = verify->add_subcommand("lemma42", "Chart integral of the symplectic form");
  lemma42->add_option("--w0", w0, "First weight")->required();
  lemma42->add_option("--w1", w1, "Second weight")->required();
  lemma42->add_option("--tol", tol, "Absolute tolerance, at most 1e-4");
  std::string rates_csv;
  std::optional<std::int64_t> samples;
  auto* winding = verify->add_subcommand("winding", "Determinant winding of a diagonal loop");
  winding->add_option("--rates", rates_csv, "Integer rotation rates")->required();
  winding->add_option("--samples", samples, "Sample count");
  std::string t_text;
  auto* scalar = verify->add_subcommand("scalar-cz", "Scalar index against crossing count");
  scalar->add_option("--T", t_text, "Duration p/q")->required();

  std::string batch_path;
  auto* batch = app.add_subcommand("batch", "Evaluate a newline-delimited JSON file");
  batch->add_option("file", batch_path, "Input path")->required();

  for (auto* sub : {weights_cmd, principal, orbit, teardrop, lemma42, winding, scalar, batch}) {
    sub->add_flag("--json", json, "Emit JSON instead of a table");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (batch->parsed()) return run_batch(batch_path, json, out, err);

    Json result;
    if (weights_cmd->parsed()) {
      result = weights_result(parse_csv(weights_csv, "weights"));
    } else if (principal->parsed()) {
      const int chosen = !wps_csv.empty() + !wci_csv.empty() + !brieskorn_csv.empty();
      if (chosen != 1) throw UsageError("give exactly one of --wps, --wci, --brieskorn");
      if (!degrees_csv.empty() && wci_csv.empty()) {
        throw UsageError("--degrees only applies with --wci");
      }
      if (!wps_csv.empty()) {
        result = principal_wps_result(parse_csv(wps_csv, "weights"));
      } else if (!wci_csv.empty()) {
        if (degrees_csv.empty()) throw UsageError("--wci needs --degrees");
        result = principal_wci_result(parse_csv(wci_csv, "weights"),
                                      parse_csv(degrees_csv, "degrees"));
      } else {
        result = principal_brieskorn_result(parse_csv(brieskorn_csv, "exponents"));
      }
    } else if (orbit->parsed()) {
      if (wps_csv.empty() == brieskorn_csv.empty()) {
        throw UsageError("give exactly one of --wps, --brieskorn");
      }
      const auto support = parse_csv(support_csv, "support");
      result = !wps_csv.empty()
                   ? orbit_wps_result(parse_csv(wps_csv, "weights"), support, allow)
                   : orbit_brieskorn_result(parse_csv(brieskorn_csv, "exponents"), support,
                                            allow);
    } else if (teardrop->parsed()) {
      result = teardrop_result(teardrop_m, teardrop_degree);
    } else if (lemma42->parsed()) {
      result = lemma42_result(w0, w1, tol);
    } else if (winding->parsed()) {
      result = winding_result(parse_csv(rates_csv, "rates"), samples);
    } else if (scalar->parsed()) {
      result = scalar_cz_result(parse_rational(t_text));
    }
    emit(result, json, out);
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ApiError& e) {
    err << "error (" << czorb_status_name(e.status()) << "): " << e.what() << '\n';
    if (json) out << Json{{"status", "error"}, {"error", error_json(e.status(), e.what(), e.value())}}.dump() << '\n';
    return exit_code_for(e.status());
  }
}

}  // namespace czorb_cli
