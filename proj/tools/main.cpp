#include <array>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "taut0/blowups.hpp"
#include "taut0/covers.hpp"
#include "taut0/cycles.hpp"
#include "taut0/errors.hpp"
#include "taut0/strata.hpp"
#include "taut0/tnumbers.hpp"

using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Output {
  std::string command;
  json inputs = json::object();
  json result = json::object();
  std::vector<Check> checks;
  std::string quiet_line;
};

json to_json(const taut0::covers::CoverData& c) {
  return json{{"k", c.k}, {"mono", {c.mono[0], c.mono[1], c.mono[2]}}};
}

json to_json(const taut0::strata::StableGraph& graph) {
  json vertices = json::array();
  for (const auto& v : graph.vertices)
    vertices.push_back(json{{"genus", v.genus}, {"legs", v.legs}});
  json edges = json::array();
  for (const auto& [a, b] : graph.edges) edges.push_back(json::array({a, b}));
  return json{{"edges", edges}, {"key", taut0::strata::to_string(graph)}, {"vertices", vertices}};
}

json to_json(const taut0::blowups::BlowupTrace& trace) {
  json steps = json::array();
  for (const auto& step : trace.steps)
    steps.push_back(json{{"e", step.e}, {"f", step.f}, {"mult", step.mult}});
  return json{{"ms_total", trace.ms_total}, {"steps", steps}};
}

json to_json(const taut0::tnumbers::TBound& bound) {
  json provenance = json::array();
  for (const auto& step : bound.provenance) {
    json row{{"kind", taut0::tnumbers::provenance_kind_name(step.kind)},
             {"genus", step.g},
             {"markings", step.n},
             {"factor", step.factor}};
    if (step.kind == taut0::tnumbers::ProvenanceStep::Kind::Recursion) row["m"] = step.m;
    provenance.push_back(row);
  }
  return json{{"bound", bound.bound}, {"genus", bound.g}, {"markings", bound.n},
              {"provenance", provenance}};
}

json base_table_json() {
  taut0::tnumbers::TBoundTable table;
  json rows = json::array();
  for (const auto& [g, n_max] : table.base()) {
    json row{{"genus", g}};
    if (n_max)
      row["n_max"] = *n_max;
    else
      row["n_max"] = "inf";
    rows.push_back(row);
  }
  return rows;
}

int emit(const Output& out, bool quiet, const std::string& out_path) {
  json checks = json::array();
  bool all_pass = true;
  for (const Check& c : out.checks) {
    checks.push_back(json{{"detail", c.detail}, {"name", c.name}, {"pass", c.pass}});
    if (!c.pass) all_pass = false;
  }
  json report{{"checks", checks},
              {"command", out.command},
              {"inputs", out.inputs},
              {"result", out.result},
              {"version", kVersion}};
  std::string text = report.dump(2) + "\n";
  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
    file << text;
  }
  if (quiet)
    std::cout << out.quiet_line << "\n";
  else
    std::cout << text;
  return all_pass ? 0 : 1;
}

taut0::covers::CoverData cover_from(std::int64_t k, const std::vector<std::int64_t>& mono) {
  if (mono.size() != 3)
    taut0::fail(taut0::Errc::DomainError,
                "--mono needs exactly three comma-separated residues, got " +
                    std::to_string(mono.size()));
  return taut0::covers::validate(k, {mono[0], mono[1], mono[2]});
}

std::vector<std::string> split(const std::string& text, const std::string& seps) {
  std::vector<std::string> parts;
  std::string current;
  for (char ch : text) {
    if (seps.find(ch) != std::string::npos) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  parts.push_back(current);
  return parts;
}

std::int64_t parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    std::int64_t value = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    taut0::fail(taut0::Errc::DomainError, "cannot parse " + what + " from '" + text + "'");
  }
}

taut0::tnumbers::AbelianGroup parse_group(const std::string& spec) {
  taut0::tnumbers::AbelianGroup group;
  for (const std::string& part : split(spec, "x,")) {
    std::int64_t order = parse_int(part, "cyclic order");
    if (order < 1) taut0::fail(taut0::Errc::DomainError, "cyclic orders must be positive");
    group.orders.push_back(order);
  }
  return group;
}

taut0::tnumbers::AbelianGroup::Element parse_element(const std::string& text, std::size_t rank) {
  taut0::tnumbers::AbelianGroup::Element element;
  for (const std::string& part : split(text, ":"))
    element.push_back(parse_int(part, "group element component"));
  if (element.size() != rank)
    taut0::fail(taut0::Errc::DomainError, "element '" + text + "' has " +
                                              std::to_string(element.size()) +
                                              " components, group has " + std::to_string(rank));
  return element;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checks for tautological 0-cycles on moduli of stable curves"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  bool quiet = false;
  std::string out_path;
  int jobs = 1;
  app.add_flag("--quiet", quiet, "print only the verdict line");
  app.add_option("--out", out_path, "also write the JSON report to PATH");
  app.add_option("--jobs", jobs, "worker threads for long scans")->check(CLI::PositiveNumber);

  std::function<Output()> action;

  // cover
  std::int64_t cover_k = 0;
  std::vector<std::int64_t> cover_mono;
  CLI::App* cover = app.add_subcommand("cover", "cyclic three-branch covers of the line");
  cover->require_subcommand(1);
  cover->fallthrough();
  auto add_cover_sub = [&](const char* name, const char* help) {
    CLI::App* sub = cover->add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("--k", cover_k, "cover degree")->required();
    sub->add_option("--mono", cover_mono, "monodromy residues a,b,c")
        ->required()
        ->delimiter(',');
    return sub;
  };

  add_cover_sub("validate", "check a monodromy datum")->callback([&] {
    action = [&]() {
      Output out;
      out.command = "cover validate";
      out.inputs = json{{"k", cover_k}, {"mono", cover_mono}};
      taut0::covers::CoverData c = cover_from(cover_k, cover_mono);
      out.result = json{{"cover", to_json(c)}, {"valid", true}};
      out.quiet_line = "valid";
      return out;
    };
  });

  add_cover_sub("invariants", "genus and ramification profile")->callback([&] {
    action = [&]() {
      Output out;
      out.command = "cover invariants";
      out.inputs = json{{"k", cover_k}, {"mono", cover_mono}};
      taut0::covers::CoverData c = cover_from(cover_k, cover_mono);
      taut0::covers::CoverInvariants inv = taut0::covers::invariants(c);
      out.result = json{{"cover", to_json(c)},
                        {"genus", inv.genus},
                        {"n_ram", inv.n_ram},
                        {"ram_counts", {inv.ram_counts[0], inv.ram_counts[1], inv.ram_counts[2]}},
                        {"totally_ramified", inv.totally_ramified}};
      out.quiet_line = "genus=" + std::to_string(inv.genus) + " n_ram=" +
                       std::to_string(inv.n_ram);
      return out;
    };
  });

  add_cover_sub("normalize", "totally ramified representative, if any")->callback([&] {
    action = [&]() {
      Output out;
      out.command = "cover normalize";
      out.inputs = json{{"k", cover_k}, {"mono", cover_mono}};
      taut0::covers::CoverData c = cover_from(cover_k, cover_mono);
      auto normalized = taut0::covers::normalize_total_ramification(c);
      if (normalized) {
        out.result = json{{"normalizable", true}, {"normalized", to_json(*normalized)}};
        out.quiet_line = "1," + std::to_string(normalized->mono[1]) + "," +
                         std::to_string(normalized->mono[2]);
      } else {
        out.result = json{{"normalizable", false}};
        out.quiet_line = "not_normalizable";
      }
      return out;
    };
  });

  add_cover_sub("orbit", "unit-group orbit of the datum")->callback([&] {
    action = [&]() {
      Output out;
      out.command = "cover orbit";
      out.inputs = json{{"k", cover_k}, {"mono", cover_mono}};
      taut0::covers::CoverData c = cover_from(cover_k, cover_mono);
      auto orbit = taut0::covers::unit_orbit(c);
      json reps = json::array();
      for (const auto& rep : orbit) reps.push_back(to_json(rep));
      out.result = json{{"length", orbit.size()}, {"orbit", reps}};
      out.quiet_line = std::to_string(orbit.size());
      return out;
    };
  });

  add_cover_sub("decide", "tautological-point certificate or Inconclusive")->callback([&] {
    action = [&]() {
      Output out;
      out.command = "cover decide";
      out.inputs = json{{"k", cover_k}, {"mono", cover_mono}};
      taut0::covers::CoverData c = cover_from(cover_k, cover_mono);
      taut0::blowups::TautDecision d = taut0::blowups::decide_tautological(c);
      out.result = json{{"c1", d.c1},
                        {"genus", d.genus},
                        {"n_ram", d.n_ram},
                        {"vdim", d.vdim},
                        {"verdict", taut0::blowups::verdict_name(d.verdict)}};
      out.result["witness"] = d.witness ? to_json(*d.witness) : json(nullptr);
      out.quiet_line = taut0::blowups::verdict_name(d.verdict);
      return out;
    };
  });

  // ms
  std::int64_t ms_e = 0, ms_f = 0;
  bool ms_trace = false;
  CLI::App* ms_cmd = app.add_subcommand("ms", "blowup multiplicity sum of z1^e = z2^f");
  ms_cmd->fallthrough();
  ms_cmd->add_option("--e", ms_e, "first multiplicity")->required();
  ms_cmd->add_option("--f", ms_f, "second multiplicity")->required();
  ms_cmd->add_flag("--trace", ms_trace, "include the subtractive step list");
  ms_cmd->callback([&] {
    action = [&]() {
      Output out;
      out.command = "ms";
      out.inputs = json{{"e", ms_e}, {"f", ms_f}, {"trace", ms_trace}};
      std::int64_t value = taut0::blowups::ms(ms_e, ms_f);
      out.result = json{{"e", ms_e}, {"f", ms_f}, {"ms", value}};
      if (ms_trace) out.result["trace"] = to_json(taut0::blowups::blowup_trace(ms_e, ms_f));
      out.quiet_line = std::to_string(value);
      return out;
    };
  });

  // blowup
  CLI::App* blowup = app.add_subcommand("blowup", "scans over the multiplicity-sum bounds");
  blowup->require_subcommand(1);
  blowup->fallthrough();

  std::int64_t bound_max = 0;
  CLI::App* verify_bound = blowup->add_subcommand("verify-bound", "ms axioms and sharp bound");
  verify_bound->fallthrough();
  verify_bound->add_option("--max", bound_max, "scan limit for e")->required();
  verify_bound->callback([&] {
    action = [&]() {
      Output out;
      out.command = "blowup verify-bound";
      out.inputs = json{{"max", bound_max}};
      taut0::blowups::MsAxiomReport axioms = taut0::blowups::verify_ms_axioms(bound_max);
      taut0::blowups::MsBoundReport bound = taut0::blowups::verify_ms_bound(bound_max);
      json axiom_violations = json::array();
      for (const auto& v : axioms.violations)
        axiom_violations.push_back(json{{"axiom", v.axiom}, {"e", v.e}, {"f", v.f},
                                        {"lhs", v.lhs}, {"rhs", v.rhs}});
      json bound_violations = json::array();
      for (const auto& v : bound.violations)
        bound_violations.push_back(json{{"bound", v.bound}, {"e", v.e}, {"f", v.f},
                                        {"ms", v.ms_value}});
      out.result = json{{"axiom_cases", axioms.cases_checked},
                        {"axiom_violations", axiom_violations},
                        {"bound_cases", bound.cases_checked},
                        {"bound_violations", bound_violations},
                        {"max", bound_max}};
      out.checks.push_back(Check{"ms_axioms", axioms.pass(),
                                 std::to_string(axioms.cases_checked) + " cases"});
      out.checks.push_back(Check{"ms_bound", bound.pass(),
                                 std::to_string(bound.cases_checked) + " cases"});
      out.quiet_line = axioms.pass() && bound.pass() ? "pass" : "fail";
      return out;
    };
  });

  std::int64_t ineq_kmax = 0;
  CLI::App* verify_ineq =
      blowup->add_subcommand("verify-inequality", "decision inequality on normalized data");
  verify_ineq->fallthrough();
  verify_ineq->add_option("--kmax", ineq_kmax, "largest degree to scan")->required();
  verify_ineq->callback([&] {
    action = [&]() {
      Output out;
      out.command = "blowup verify-inequality";
      out.inputs = json{{"jobs", jobs}, {"kmax", ineq_kmax}};
      taut0::blowups::InequalityReport report =
          taut0::blowups::verify_decision_inequality(ineq_kmax, jobs);
      auto rows = [](const std::vector<taut0::blowups::InequalityCase>& cases) {
        json out_rows = json::array();
        for (const auto& row : cases)
          out_rows.push_back(json{{"b", row.b}, {"c", row.c}, {"c1", row.c1},
                                  {"genus", row.genus}, {"k", row.k}, {"n_ram", row.n_ram},
                                  {"rhs", row.rhs}, {"vdim", row.vdim}});
        return out_rows;
      };
      out.result = json{{"c1_violations", rows(report.c1_violations)},
                        {"cases_checked", report.cases_checked},
                        {"kmax", report.k_max},
                        {"violations", rows(report.violations)}};
      out.checks.push_back(Check{"decision_inequality", report.violations.empty(),
                                 std::to_string(report.cases_checked) + " cases"});
      out.checks.push_back(Check{"c1_positive", report.c1_violations.empty(),
                                 std::to_string(report.cases_checked) + " cases"});
      out.quiet_line = report.pass() ? "pass" : "fail";
      return out;
    };
  });

  // strata
  CLI::App* strata_cmd = app.add_subcommand("strata", "stable dual graphs of (g, n)");
  strata_cmd->require_subcommand(1);
  strata_cmd->fallthrough();
  std::int64_t strata_g = 0, strata_n = 0;
  auto add_strata_sub = [&](const char* name, const char* help) {
    CLI::App* sub = strata_cmd->add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("--genus", strata_g, "total genus")->required();
    sub->add_option("--markings", strata_n, "number of markings")->required();
    return sub;
  };

  add_strata_sub("enum", "list all isomorphism classes")->callback([&] {
    action = [&]() {
      Output out;
      out.command = "strata enum";
      out.inputs = json{{"genus", strata_g}, {"markings", strata_n}};
      auto graphs = taut0::strata::enumerate_stable_graphs(strata_g, strata_n);
      json list = json::array();
      for (const auto& graph : graphs) list.push_back(to_json(graph));
      out.result = json{{"count", graphs.size()}, {"graphs", list}};
      out.quiet_line = std::to_string(graphs.size());
      return out;
    };
  });

  add_strata_sub("verify-r0", "0-cycles need fully rational support")->callback([&] {
    action = [&]() {
      Output out;
      out.command = "strata verify-r0";
      out.inputs = json{{"genus", strata_g}, {"markings", strata_n}};
      taut0::strata::SpanningReport report = taut0::strata::verify_r0_spanning(strata_g, strata_n);
      json rows = json::array();
      for (const auto& row : report.rows)
        rows.push_back(json{{"budget", row.budget}, {"dimension", row.dimension},
                            {"feasible", row.feasible}, {"graph", row.graph},
                            {"positive_genus", row.positive_genus}});
      out.result = json{{"graph_count", report.rows.size()}, {"rows", rows}};
      out.checks.push_back(Check{"no_feasible_positive_genus_stratum", report.pass,
                                 std::to_string(report.rows.size()) + " strata"});
      out.quiet_line = report.pass ? "pass" : "fail";
      return out;
    };
  });

  // sym
  CLI::App* sym = app.add_subcommand("sym", "symmetrized 0-cycles on S^n");
  sym->require_subcommand(1);
  sym->fallthrough();
  int sym_n = 0;
  int sym_limit = 6;

  CLI::App* sym_coeffs = sym->add_subcommand("coeffs", "inclusion-exclusion coefficients");
  sym_coeffs->fallthrough();
  sym_coeffs->add_option("--n", sym_n, "number of factors")->required();
  sym_coeffs->callback([&] {
    action = [&]() {
      Output out;
      out.command = "sym coeffs";
      out.inputs = json{{"n", sym_n}};
      auto coefficients = taut0::cycles::partition_coefficients(sym_n);
      json list = json::array();
      for (const auto& entry : coefficients)
        list.push_back(json{{"coefficient", entry.coefficient}, {"partition", entry.partition}});
      out.result = json{{"coefficients", list}, {"count", coefficients.size()}, {"n", sym_n}};
      out.quiet_line = std::to_string(coefficients.size());
      return out;
    };
  });

  CLI::App* sym_verify = sym->add_subcommand("verify", "blockwise expansion identity");
  sym_verify->fallthrough();
  sym_verify->add_option("--n", sym_n, "largest tuple length to check")->required();
  sym_verify->add_option("--limit", sym_limit, "brute-force cutoff (default 6)");
  sym_verify->callback([&] {
    action = [&]() {
      Output out;
      out.command = "sym verify";
      out.inputs = json{{"limit", sym_limit}, {"n", sym_n}};
      if (sym_n < 1) taut0::fail(taut0::Errc::DomainError, "--n must be at least 1");
      bool all = true;
      for (int size = 1; size <= sym_n; ++size) {
        taut0::cycles::Tuple p;
        for (int i = 0; i < size; ++i) p.push_back(std::string(1, static_cast<char>('a' + i)));
        bool holds = taut0::cycles::verify_blockwise_identity(p, sym_limit);
        all = all && holds;
        out.checks.push_back(Check{"identity_n_" + std::to_string(size), holds,
                                   std::to_string(size) + " symbols"});
      }
      out.result = json{{"n", sym_n}};
      out.quiet_line = all ? "pass" : "fail";
      return out;
    };
  });

  // tnum
  CLI::App* tnum = app.add_subcommand("tnum", "upper bounds for tautological completion counts");
  tnum->require_subcommand(1);
  tnum->fallthrough();
  std::int64_t tnum_g = 0, tnum_n = 0;

  CLI::App* tnum_bound = tnum->add_subcommand("bound", "best single-recursion bound");
  tnum_bound->fallthrough();
  tnum_bound->add_option("--genus", tnum_g, "genus")->required();
  tnum_bound->add_option("--markings", tnum_n, "number of markings")->required();
  tnum_bound->callback([&] {
    action = [&]() {
      Output out;
      out.command = "tnum bound";
      out.inputs = json{{"genus", tnum_g}, {"markings", tnum_n}};
      taut0::tnumbers::TBound bound = taut0::tnumbers::t_upper_bound(tnum_g, tnum_n);
      out.result = json{{"base_table", base_table_json()}, {"bound", to_json(bound)}};
      out.quiet_line = std::to_string(bound.bound);
      return out;
    };
  });

  CLI::App* tnum_verify = tnum->add_subcommand("verify", "recursion consistency scan");
  tnum_verify->fallthrough();
  tnum_verify->add_option("--genus", tnum_g, "largest genus to scan")->required();
  tnum_verify->add_option("--markings", tnum_n, "largest marking count to scan")->required();
  tnum_verify->callback([&] {
    action = [&]() {
      Output out;
      out.command = "tnum verify";
      out.inputs = json{{"genus", tnum_g}, {"markings", tnum_n}};
      taut0::tnumbers::RecursionReport report =
          taut0::tnumbers::verify_recursion_consistency(tnum_g, tnum_n);
      json rows = json::array();
      for (const auto& row : report.rows)
        rows.push_back(json{{"bound", row.bound}, {"genus", row.g}, {"markings", row.n},
                            {"next_bound", row.next_bound}});
      out.result = json{{"base_table", base_table_json()}, {"rows", rows}};
      out.checks.push_back(Check{"recursion_consistent", report.consistent,
                                 std::to_string(report.rows.size()) + " cells"});
      out.checks.push_back(Check{"provenance_replay", report.replay_ok,
                                 std::to_string(report.rows.size()) + " cells"});
      out.checks.push_back(Check{"single_application_dominance", report.dominance_ok,
                                 "m1+m2 <= " + std::to_string(std::max<std::int64_t>(20, tnum_n))});
      out.quiet_line = report.pass() ? "pass" : "fail";
      return out;
    };
  });

  // trade
  std::string trade_group, trade_anchor, trade_start;
  CLI::App* trade = app.add_subcommand("trade", "point trading in a finite-group genus-1 model");
  trade->fallthrough();
  trade->add_option("--group", trade_group, "cyclic orders, e.g. 7 or 2x3")->required();
  trade->add_option("--anchor", trade_anchor, "anchor element, components ':'-separated")
      ->required();
  trade->add_option("--start", trade_start, "start tuple, elements ','-separated")->required();
  trade->callback([&] {
    action = [&]() {
      Output out;
      out.command = "trade";
      out.inputs = json{{"anchor", trade_anchor}, {"group", trade_group}, {"start", trade_start}};
      taut0::tnumbers::AbelianGroup group = parse_group(trade_group);
      auto anchor = parse_element(trade_anchor, group.orders.size());
      std::vector<taut0::tnumbers::AbelianGroup::Element> start;
      for (const std::string& part : split(trade_start, ","))
        start.push_back(parse_element(part, group.orders.size()));
      taut0::tnumbers::TradeTrace trace = taut0::tnumbers::trade_points(group, anchor, start);

      json tuples = json::array();
      for (const auto& tuple : trace.tuples) {
        json row = json::array();
        for (const auto& element : tuple) row.push_back(element);
        tuples.push_back(row);
      }
      json steps = json::array();
      for (const auto& step : trace.steps)
        steps.push_back(json{{"replaced", step.replaced}, {"replacement", step.replacement},
                             {"stage", step.stage}});
      out.result = json{{"anchor", trace.anchor}, {"group", group.orders}, {"m", trace.m},
                        {"steps", steps}, {"target", trace.target}, {"tuples", tuples}};

      bool sums_ok = true;
      for (std::int64_t coord = 0; coord < trace.m; ++coord) {
        taut0::tnumbers::AbelianGroup::Element sum = group.zero();
        for (const auto& tuple : trace.tuples)
          sum = group.add(sum, tuple[static_cast<std::size_t>(coord)]);
        if (sum != group.scale(trace.m + 1, trace.anchor)) sums_ok = false;
      }
      bool stages_ok = true;
      for (const auto& step : trace.steps) {
        auto lhs = group.add(step.replacement, group.scale(step.stage, step.replaced));
        if (lhs != group.scale(step.stage + 1, trace.anchor)) stages_ok = false;
      }
      out.checks.push_back(Check{"class_sums", sums_ok,
                                 std::to_string(trace.m) + " coordinates"});
      out.checks.push_back(Check{"stage_identities", stages_ok,
                                 std::to_string(trace.steps.size()) + " stages"});
      out.quiet_line = sums_ok && stages_ok ? "pass" : "fail";
      return out;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Output out = action();
    return emit(out, quiet, out_path);
  } catch (const taut0::Error& e) {
    std::cerr << "error [" << taut0::errc_name(e.code()) << "]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
