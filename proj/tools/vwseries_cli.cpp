// vwseries: exact-arithmetic computations of Vafa-Witten-type invariants on
// K3 surfaces, pair-invariant wall-crossing, and the q-series behind them.
// All numeric output is exact; rationals print as "num/den", never floats.
//
// Exit codes: 0 success, 1 usage error, 2 computation error, 3 failed checks.

#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <vwseries/hilb.hpp>
#include <vwseries/k3vw.hpp>
#include <vwseries/checks.hpp>
#include <vwseries/qseries.hpp>
#include <vwseries/rational.hpp>
#include <vwseries/serialize.hpp>
#include <vwseries/surface.hpp>
#include <vwseries/wallcross.hpp>

namespace {

using nlohmann::json;
using namespace vwseries;

constexpr const char* kSchema = "vwseries/1";

// Bad input that the flag parser cannot catch (unknown presets, malformed
// charge or rational strings) is still a usage error, not a computation one.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& m) : std::runtime_error(m) {}
};

template <typename Fn>
auto resolve(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

// "1=48,2=1272" -> {1: 48, 2: 1272}; values may be rationals like "-3/4".
std::map<long, Rational> parse_indexed_values(const std::string& s) {
  std::map<long, Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("expected index=value, got '" + item + "'");
    }
    const long idx = std::stol(item.substr(0, eq));
    if (out.count(idx)) throw std::invalid_argument("duplicate index " + std::to_string(idx));
    out[idx] = Rational::parse(item.substr(eq + 1));
  }
  if (out.empty()) throw std::invalid_argument("empty index=value list");
  return out;
}

Theory parse_theory(const std::string& s) {
  if (s == "behrend") return Theory::BEHREND;
  if (s == "virtual") return Theory::VIRTUAL;
  throw std::invalid_argument("unknown theory '" + s + "'");
}

const char* wall_kind_name(WallKind k) {
  switch (k) {
    case WallKind::FULL_SUM_JS: return "full_sum_js";
    case WallKind::FULL_SUM_FIXED_DET: return "full_sum_fixed_det";
    case WallKind::FULL_SUM_VIRTUAL: return "full_sum_virtual";
    case WallKind::FIRST_TERM_BEHREND: return "first_term_behrend";
    case WallKind::FIRST_TERM_VIRTUAL: return "first_term_virtual";
  }
  return "?";
}

std::string exponent_str(const QSeries& a, QSeries::Key k) {
  return Rational(make_int(k), make_int(a.step_den())).str();
}

// ---------------------------------------------------------------------------
// command contexts
// ---------------------------------------------------------------------------

struct HilbCmd {
  std::string surface = "k3";
  long eul = 0;  // 0 = take the surface's Euler number
  long count = 10;
  std::string format = "table";
} hilb_cmd;

struct ChiCmd {
  std::string surface = "k3";
  std::string charge;
  long n = 1;
  std::string format = "table";
} chi_cmd;

struct VwCmd {
  std::string surface = "k3";
  long rank = 2;
  long max_c2 = 10;
  std::string method = "closed";
  std::string format = "table";
} vw_cmd;

struct PairsCmd {
  std::string surface = "k3";
  std::string charge;
  long n = 1;
  std::string theory = "behrend";
  std::string table;
  std::string format = "table";
} pairs_cmd;

struct SolveCmd {
  std::string surface = "k3";
  std::string charge;
  long n = 1;
  std::string theory = "behrend";
  std::string pairs;
  std::string format = "table";
} solve_cmd;

struct SeriesCmd {
  std::string kind = "euler";
  long power = 24;
  std::string scale = "1";
  long order = 10;
  std::string format = "table";
} series_cmd;

struct CheckCmd {
  std::string only;
  std::string format = "table";
} check_cmd;

// ---------------------------------------------------------------------------
// output helpers
// ---------------------------------------------------------------------------

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void print_series_sparse(const QSeries& a, const std::string& format) {
  if (format == "csv") {
    std::cout << "exponent,coefficient\n";
    for (const auto& [k, c] : a.terms()) std::cout << exponent_str(a, k) << "," << c.str() << "\n";
    return;
  }
  std::cout << a.str() << "\n";
}

int run_hilb() {
  const SurfaceData s = resolve([&] { return load_surface(hilb_cmd.surface); });
  if (hilb_cmd.count < 1) throw UsageError("--count must be >= 1");
  const long eul = hilb_cmd.eul != 0 ? hilb_cmd.eul : s.eulS;
  std::vector<Int> vals;
  for (long m = 0; m < hilb_cmd.count; ++m) vals.push_back(hilb_euler(eul, m));
  if (hilb_cmd.format == "json") {
    json values = json::array();
    for (long m = 0; m < hilb_cmd.count; ++m) {
      values.push_back(json::array({m, vals[static_cast<std::size_t>(m)].get_str()}));
    }
    emit(json{{"schema", kSchema},
              {"command", "hilb"},
              {"euler_number", eul},
              {"values", values}});
  } else if (hilb_cmd.format == "csv") {
    std::cout << "m,euler\n";
    for (long m = 0; m < hilb_cmd.count; ++m) {
      std::cout << m << "," << vals[static_cast<std::size_t>(m)].get_str() << "\n";
    }
  } else {
    std::cout << "m\te(Hilb^m)\n";
    for (long m = 0; m < hilb_cmd.count; ++m) {
      std::cout << m << "\t" << vals[static_cast<std::size_t>(m)].get_str() << "\n";
    }
  }
  return 0;
}

int run_chi() {
  const SurfaceData s = resolve([&] { return load_surface(chi_cmd.surface); });
  const Charge alpha = resolve([&] {
    Charge a = parse_charge(chi_cmd.charge);
    validate(a, s);
    return a;
  });
  const Rational chi = chi_twisted(alpha, s, chi_cmd.n);
  if (chi_cmd.format == "json") {
    emit(json{{"schema", kSchema},
              {"command", "chi"},
              {"surface", s.name},
              {"charge", charge_str(alpha)},
              {"n", chi_cmd.n},
              {"chi", chi.str()}});
  } else if (chi_cmd.format == "csv") {
    std::cout << "chi\n" << chi.str() << "\n";
  } else {
    std::cout << chi.str() << "\n";
  }
  return 0;
}

int run_vw() {
  const SurfaceData s = resolve([&] { return load_surface(vw_cmd.surface); });
  if (vw_cmd.rank < 1) throw UsageError("--rank must be >= 1");
  if (vw_cmd.max_c2 < 1) throw UsageError("--max-c2 must be >= 1");
  const long N = vw_cmd.max_c2;

  QSeries closed, termwise;
  const bool want_closed = vw_cmd.method == "closed" || vw_cmd.method == "both";
  const bool want_termwise = vw_cmd.method == "toda" || vw_cmd.method == "both";
  if (want_closed) closed = vw_k3_series_closed(vw_cmd.rank, N, s);
  if (want_termwise) termwise = vw_k3_series_termwise(vw_cmd.rank, N, s);
  const QSeries& shown = want_closed ? closed : termwise;

  json diff = json::array();
  if (vw_cmd.method == "both") {
    for (long c2 = 0; c2 < N; ++c2) {
      const Rational a = closed.coeff(Rational(c2));
      const Rational b = termwise.coeff(Rational(c2));
      if (a != b) diff.push_back(json::array({c2, a.str(), b.str()}));
    }
  }

  if (vw_cmd.format == "json") {
    json out{{"schema", kSchema},
             {"command", "vw"},
             {"surface", s.name},
             {"rank", vw_cmd.rank},
             {"max_c2", N},
             {"method", vw_cmd.method}};
    if (want_closed) out["closed"] = qseries_to_json(closed);
    if (want_termwise) out["toda"] = qseries_to_json(termwise);
    if (vw_cmd.method == "both") out["diff"] = diff;
    emit(out);
  } else if (vw_cmd.format == "csv") {
    std::cout << "c2,vw\n";
    for (long c2 = 0; c2 < N; ++c2) {
      std::cout << c2 << "," << shown.coeff(Rational(c2)).str() << "\n";
    }
  } else {
    std::cout << "c2\tvw(" << vw_cmd.rank << ",0,c2)\n";
    for (long c2 = 0; c2 < N; ++c2) {
      std::cout << c2 << "\t" << shown.coeff(Rational(c2)).str() << "\n";
    }
    if (vw_cmd.method == "both") {
      std::cout << (diff.empty() ? "diff: empty\n" : "diff: MISMATCH " + diff.dump() + "\n");
    }
  }
  return diff.empty() ? 0 : 2;
}

int run_pairs() {
  const SurfaceData s = resolve([&] { return load_surface(pairs_cmd.surface); });
  const Charge alpha = resolve([&] {
    Charge a = parse_charge(pairs_cmd.charge);
    validate(a, s);
    return a;
  });
  const Theory theory = resolve([&] { return parse_theory(pairs_cmd.theory); });
  const auto table_values = resolve([&] { return parse_indexed_values(pairs_cmd.table); });
  InvariantTable table(table_values.begin(), table_values.end());
  const WallVariant v = variant_select(s, theory);
  const PairEvaluation ev = pairs_from_vw_detailed(alpha, s, pairs_cmd.n, table, v);

  if (pairs_cmd.format == "json") {
    json terms = json::array();
    for (const auto& t : ev.terms) {
      terms.push_back(json{{"parts", t.parts}, {"value", t.value.str()}});
    }
    json chi = json::object();
    for (const auto& [j, c] : ev.part_chi) chi[std::to_string(j)] = c.str();
    emit(json{{"schema", kSchema},
              {"command", "pairs"},
              {"surface", s.name},
              {"charge", charge_str(alpha)},
              {"n", pairs_cmd.n},
              {"theory", pairs_cmd.theory},
              {"variant", wall_kind_name(v.kind)},
              {"total", ev.total.str()},
              {"terms", terms},
              {"part_chi", chi}});
  } else if (pairs_cmd.format == "csv") {
    std::cout << "parts,value\n";
    for (const auto& t : ev.terms) {
      std::string parts;
      for (std::size_t i = 0; i < t.parts.size(); ++i) {
        parts += (i ? "+" : "") + std::to_string(t.parts[i]);
      }
      std::cout << parts << "," << t.value.str() << "\n";
    }
    std::cout << "total," << ev.total.str() << "\n";
  } else {
    std::cout << "pair invariant of " << charge_str(alpha) << " at n=" << pairs_cmd.n << " ("
              << wall_kind_name(v.kind) << ")\n";
    for (const auto& t : ev.terms) {
      std::cout << "  (";
      for (std::size_t i = 0; i < t.parts.size(); ++i) {
        std::cout << (i ? "," : "") << t.parts[i];
      }
      std::cout << ") -> " << t.value.str() << "\n";
    }
    std::cout << "total = " << ev.total.str() << "\n";
  }
  return 0;
}

int run_solve() {
  const SurfaceData s = resolve([&] { return load_surface(solve_cmd.surface); });
  const Charge alpha = resolve([&] {
    Charge a = parse_charge(solve_cmd.charge);
    validate(a, s);
    return a;
  });
  const Theory theory = resolve([&] { return parse_theory(solve_cmd.theory); });
  const auto pair_values = resolve([&] { return parse_indexed_values(solve_cmd.pairs); });
  const WallVariant v = variant_select(s, theory);
  const InvariantTable table = vw_from_pairs(alpha, s, solve_cmd.n, pair_values, v);

  if (solve_cmd.format == "json") {
    json t = json::object();
    for (const auto& [j, val] : table) t[std::to_string(j)] = val.str();
    emit(json{{"schema", kSchema},
              {"command", "solve"},
              {"surface", s.name},
              {"charge", charge_str(alpha)},
              {"n", solve_cmd.n},
              {"theory", solve_cmd.theory},
              {"variant", wall_kind_name(v.kind)},
              {"table", t}});
  } else if (solve_cmd.format == "csv") {
    std::cout << "multiple,invariant\n";
    for (const auto& [j, val] : table) std::cout << j << "," << val.str() << "\n";
  } else {
    for (const auto& [j, val] : table) std::cout << j << "\t" << val.str() << "\n";
  }
  return 0;
}

int run_series() {
  if (series_cmd.order < 0) throw UsageError("--order must be >= 0");
  QSeries a;
  json meta;
  if (series_cmd.kind == "euler") {
    a = euler_product_power(series_cmd.power, series_cmd.order);
    meta = json{{"kind", "euler"}, {"power", series_cmd.power}};
  } else if (series_cmd.kind == "eta") {
    const Rational scale = resolve([&] {
      Rational r = Rational::parse(series_cmd.scale);
      if (r.sign() <= 0) throw std::invalid_argument("--scale must be positive");
      return r;
    });
    a = eta_pow_neg24(scale, series_cmd.order);
    meta = json{{"kind", "eta"}, {"scale", scale.str()}};
  } else {
    throw UsageError("unknown series kind '" + series_cmd.kind + "'");
  }

  if (series_cmd.format == "json") {
    json out{{"schema", kSchema}, {"command", "series"}, {"series", qseries_to_json(a)}};
    out.update(meta);
    emit(out);
  } else {
    print_series_sparse(a, series_cmd.format);
  }
  return 0;
}

int run_check() {
  const auto results = run_checks(check_cmd.only);
  if (!check_cmd.only.empty() && results.empty()) {
    throw UsageError("no check named '" + check_cmd.only + "'");
  }
  bool all = true;
  for (const auto& r : results) all = all && r.pass;

  if (check_cmd.format == "json") {
    json arr = json::array();
    for (const auto& r : results) {
      arr.push_back(json{{"id", r.id},
                         {"description", r.description},
                         {"anchor", r.anchor},
                         {"pass", r.pass},
                         {"details", r.details}});
    }
    emit(json{{"schema", kSchema}, {"command", "check"}, {"all_pass", all}, {"results", arr}});
  } else if (check_cmd.format == "csv") {
    std::cout << "id,pass,description\n";
    for (const auto& r : results) {
      std::cout << r.id << "," << (r.pass ? "pass" : "FAIL") << ",\"" << r.description << "\"\n";
    }
  } else {
    for (const auto& r : results) {
      std::cout << r.id << " " << (r.pass ? "PASS" : "FAIL") << "  " << r.description << "\n";
      if (!r.pass) std::cout << "    " << r.details << "\n";
    }
    std::cout << (all ? "all checks passed" : "CHECKS FAILED") << "\n";
  }
  return all ? 0 : 3;
}

void add_format_option(CLI::App* cmd, std::string& target) {
  cmd->add_option("--format", target, "Output format")
      ->check(CLI::IsMember({"json", "table", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Vafa-Witten invariant series on K3 surfaces and pair-invariant "
               "wall-crossing"};
  app.require_subcommand(1);

  auto* hilb = app.add_subcommand("hilb", "Euler numbers of Hilbert schemes of points");
  hilb->add_option("--surface", hilb_cmd.surface, "Surface preset name or JSON path");
  hilb->add_option("--eul", hilb_cmd.eul, "Override the surface Euler number");
  hilb->add_option("--count", hilb_cmd.count, "How many values (m = 0..count-1)");
  add_format_option(hilb, hilb_cmd.format);

  auto* chi = app.add_subcommand("chi", "Twisted Euler characteristic chi(alpha(n))");
  chi->add_option("--surface", chi_cmd.surface, "Surface preset name or JSON path");
  chi->add_option("--charge", chi_cmd.charge, "Charge as r,c1...,c2")->required();
  chi->add_option("--n", chi_cmd.n, "Twist");
  add_format_option(chi, chi_cmd.format);

  auto* vw = app.add_subcommand("vw", "Vafa-Witten generating series on a K3 surface");
  vw->add_option("--surface", vw_cmd.surface, "Surface preset name or JSON path");
  vw->add_option("--rank", vw_cmd.rank, "Rank r (charges (r,0,c2))");
  vw->add_option("--max-c2", vw_cmd.max_c2, "Compute coefficients for c2 = 0..max_c2-1");
  vw->add_option("--method", vw_cmd.method, "Evaluation route")
      ->check(CLI::IsMember({"toda", "closed", "both"}));
  add_format_option(vw, vw_cmd.format);

  auto* pairs = app.add_subcommand("pairs", "Pair invariant from a table of sheaf invariants");
  pairs->add_option("--surface", pairs_cmd.surface, "Surface preset name or JSON path");
  pairs->add_option("--charge", pairs_cmd.charge, "Charge as r,c1...,c2")->required();
  pairs->add_option("--n", pairs_cmd.n, "Twist");
  pairs->add_option("--theory", pairs_cmd.theory, "Which invariants the table holds")
      ->check(CLI::IsMember({"behrend", "virtual"}));
  pairs->add_option("--table", pairs_cmd.table, "Sheaf invariants as 1=v1,2=v2,...")->required();
  add_format_option(pairs, pairs_cmd.format);

  auto* solve = app.add_subcommand("solve", "Sheaf invariants from pair invariants");
  solve->add_option("--surface", solve_cmd.surface, "Surface preset name or JSON path");
  solve->add_option("--charge", solve_cmd.charge, "Charge as r,c1...,c2")->required();
  solve->add_option("--n", solve_cmd.n, "Twist");
  solve->add_option("--theory", solve_cmd.theory, "Which invariants to solve for")
      ->check(CLI::IsMember({"behrend", "virtual"}));
  solve->add_option("--pairs", solve_cmd.pairs, "Pair values as 1=p1,2=p2,...")->required();
  add_format_option(solve, solve_cmd.format);

  auto* series = app.add_subcommand("series", "Raw q-series: Euler products and eta powers");
  series->add_option("--kind", series_cmd.kind, "euler: prod (1-q^k)^-power; eta: eta(q^scale)^-24")
      ->check(CLI::IsMember({"euler", "eta"}));
  series->add_option("--power", series_cmd.power, "Exponent e in prod (1-q^k)^-e");
  series->add_option("--scale", series_cmd.scale, "Exponent scale (rational, e.g. 1/2)");
  series->add_option("--order", series_cmd.order, "Truncation order N (known below q^N)");
  add_format_option(series, series_cmd.format);

  auto* check = app.add_subcommand("check", "Run the built-in identity checks");
  check->add_option("--only", check_cmd.only, "Run a single check by id (e.g. C3)");
  add_format_option(check, check_cmd.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message
    return 1;
  }

  try {
    if (*hilb) return run_hilb();
    if (*chi) return run_chi();
    if (*vw) return run_vw();
    if (*pairs) return run_pairs();
    if (*solve) return run_solve();
    if (*series) return run_series();
    if (*check) return run_check();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
