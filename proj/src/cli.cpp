#include "fpss/cli.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "fpss/numerics.hpp"
#include "fpss/steenrod_comodule.hpp"
#include "fpss/tate_instances.hpp"
#include "fpss/tc_assembly.hpp"
#include "fpss/thh_instances.hpp"

namespace fpss {

namespace {

using json = nlohmann::ordered_json;

const char* status_of(bool pass) { return pass ? "PASS" : "FAIL"; }

json series_json(const PoincareSeries& ps) {
  json a = json::array();
  for (std::int64_t d = ps.lo; d <= ps.hi; ++d) a.push_back(json::array({d, ps.at(d)}));
  return a;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

std::int64_t parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw UsageError("invalid " + what + ": " + s);
  }
  if (used != s.size()) throw UsageError("invalid " + what + ": " + s);
  return v;
}

// Trailing ":<n>" of ids such as tate:cp:2.
std::int64_t id_suffix(const std::string& id, const std::string& prefix) {
  const std::int64_t n = parse_int(id.substr(prefix.size()), "n in " + id);
  if (n < 1) throw UsageError("n must be at least 1 in " + id);
  return n;
}

std::int64_t cut(Residue p) { return 2 * static_cast<std::int64_t>(p) - 1; }

RingId ring_of(const std::string& key) {
  auto r = parse_ring(key);
  if (!r) throw UsageError("unknown ring: " + key);
  return *r;
}

json page_json(const Page& page) {
  json cells = json::array();
  for (const auto& [b, c] : page.cells) {
    if (!c.dim()) continue;
    json cell;
    cell["s"] = b.s;
    cell["t"] = b.t;
    cell["dim"] = c.dim();
    cell["basis"] = page.labels(b);
    cells.push_back(cell);
  }
  return cells;
}

struct InstanceSpec {
  SSInstance inst;
  std::int64_t band = 0;
};

std::optional<InstanceSpec> instance_for(const std::string& id, const RunConfig& cfg) {
  InstanceSpec s;
  if (id == "tate:cp") {
    s.inst = cp_tate_instance(cfg.p);
    s.band = cfg.band.value_or(tate_band(cfg.p, 1));
  } else if (starts_with(id, "tate:cp:")) {
    const std::int64_t n = id_suffix(id, "tate:cp:");
    s.inst = cpn_tate_instance(cfg.p, n);
    s.band = cfg.band.value_or(tate_band(cfg.p, n));
  } else if (starts_with(id, "hofix:cp:")) {
    const std::int64_t n = id_suffix(id, "hofix:cp:");
    s.inst = cpn_hofix_instance(cfg.p, n);
    s.band = cfg.band.value_or(hofix_band(cfg.p, n, cfg.hi));
  } else {
    return std::nullopt;
  }
  return s;
}

CliResult run_result(const std::string& id, const RunReport& run, std::int64_t band) {
  CliResult r{id, status_of(run.pass), json::object()};
  r.details["mode"] = "propagation";
  r.details["band"] = band;
  json pages = json::array();
  for (const auto& c : run.checks) {
    json e;
    e["page"] = c.label;
    e["status"] = status_of(c.report.pass);
    e["checked"] = c.report.checked;
    if (!c.report.pass) e["failure"] = c.report.summary();
    pages.push_back(e);
  }
  r.details["pages"] = pages;
  if (!run.error.empty()) r.details["error"] = run.error;
  return r;
}

CliResult verify_one(const std::string& id, const RunConfig& cfg) {
  const Residue p = cfg.p;
  const std::int64_t lo = cfg.lo, hi = cfg.hi;
  const std::int64_t q = p;
  if (auto found = instance_for(id, cfg))
    return run_result(id, run_instance(found->inst, lo, hi, found->band, RunMode::Propagation), found->band);

  if (id == "oracle-hh") {
    const std::int64_t top = cfg.window_given ? hi : 12;
    Algebra ex(p, {Generator::exterior("x", 0, 9)});
    Algebra ex_closed(p, {Generator::exterior("x", 0, 9), Generator::divided("sx", 0, 10)});
    Algebra po(p, {Generator::polynomial("x", 0, 2)});
    Algebra po_closed(p, {Generator::polynomial("x", 0, 2), Generator::exterior("sx", 0, 3)});
    const bool e = hh_bruteforce(ex, top) == poincare_series(ex_closed, 0, top);
    const bool o = hh_bruteforce(po, top) == poincare_series(po_closed, 0, top);
    CliResult r{id, status_of(e && o), json::object()};
    r.details["max_degree"] = top;
    r.details["exterior_9"] = status_of(e);
    r.details["polynomial_2"] = status_of(o);
    return r;
  }
  if (starts_with(id, "bokstedt:")) {
    const RingId ring = ring_of(id.substr(9));
    auto run = bokstedt_run(ring, p, std::max<std::int64_t>(lo, 0), hi);
    CliResult r{id, status_of(run.report.pass), json::object()};
    r.details["checked"] = run.report.checked;
    r.details["einf_dim"] = run.einf.total_dim();
    if (!run.report.pass) r.details["failure"] = run.report.summary();
    return r;
  }
  if (id == "primitivity") {
    auto suite = primitivity_suite(p);
    auto alpha = alpha_forcing(p);
    const bool forced = alpha.forced_minus_one();
    CliResult r{id, status_of(suite.pass && forced), json::object()};
    json classes = json::object();
    for (const auto& [name, ok] : suite.results) classes[name] = status_of(ok);
    r.details["classes"] = classes;
    r.details["alpha_minus_one_forced"] = forced;
    return r;
  }
  if (id == "poincare-identity") {
    const std::int64_t top = cfg.window_given ? hi : 30;
    bool all = true;
    json rings = json::object();
    for (RingId ring : {RingId::Zp, RingId::Ell, RingId::EllModP}) {
      auto rep = poincare_identity_check(ring, p, top);
      all = all && rep.pass;
      rings[ring_key(ring)] = rep.pass ? std::string("PASS") : "FAIL at degree " + std::to_string(rep.failing_degree);
    }
    CliResult r{id, status_of(all), json::object()};
    r.details["max_degree"] = top;
    r.details["rings"] = rings;
    return r;
  }
  if (id == "tate:s1" || id == "hofix:s1") {
    const bool tate = id == "tate:s1";
    const std::int64_t band = cfg.band.value_or(tate ? tate_band(p, 2) : hofix_band(p, 1, hi));
    const std::int64_t n = tate ? window_sufficient_n(p, lo, hi, band) : hofix_window_sufficient_n(p, lo, hi, band);
    auto rep = tate ? s1_limit_check(p, n, lo, hi, band) : s1_hofix_limit_check(p, n, lo, hi, band);
    CliResult r{id, status_of(rep.pass), json::object()};
    r.details["n"] = n;
    r.details["band"] = band;
    r.details["compared"] = rep.compared;
    if (!rep.pass) r.details["witness"] = rep.witness;
    return r;
  }
  if (id == "filtration-gap" || id == "unique-source") {
    auto rep = id == "filtration-gap" ? filtration_gap_check(p, cfg.n, lo, hi) : unique_source_check(p, cfg.n, lo, hi);
    CliResult r{id, status_of(rep.pass), json::object()};
    r.details["n"] = cfg.n;
    r.details["parameters"] = rep.parameters;
    r.details["candidates"] = rep.candidates;
    if (!rep.pass) r.details["witness"] = rep.witness;
    return r;
  }
  const std::int64_t elo = std::max(lo, cut(p));
  if (id == "r-map") {
    auto rep = rh_map_check(p, elo, hi);
    CliResult r{id, status_of(rep.pass), json::object()};
    r.details["window"] = json::array({elo, hi});
    r.details["level"] = rep.kmax;
    r.details["clause_a"] = rep.checked[0];
    r.details["clause_b"] = rep.checked[1];
    r.details["clause_c"] = rep.checked[2];
    r.details["clause_d"] = rep.checked[3];
    r.details["targets_hit"] = rep.targets_hit;
    if (!rep.pass) r.details["witness"] = rep.witness;
    return r;
  }
  if (id == "tf-decomposition") {
    CliResult r{id, "PASS", json::object()};
    try {
      auto dec = tf_decompose(p, elo, hi);
      r.details["window"] = json::array({elo, hi});
      r.details["level"] = dec.kmax;
      r.details["A"] = dec.A.size();
      json b = json::object(), c = json::object();
      for (const auto& [k, v] : dec.B) b[std::to_string(k)] = v.size();
      for (const auto& [k, v] : dec.C) c[std::to_string(k)] = v.size();
      r.details["B"] = b;
      r.details["C"] = c;
      r.details["D"] = dec.D.size();
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::length_error*>(&e)) throw;
      r.status = "FAIL";
      r.details["error"] = e.what();
    }
    return r;
  }
  if (id == "fixed-points") {
    auto rep = r_fixed_points(p, elo, hi);
    CliResult r{id, status_of(rep.pass), json::object()};
    r.details["stable_level"] = rep.stable_level;
    r.details["level"] = rep.kmax;
    r.details["ker"] = series_json(rep.ker);
    r.details["cok"] = series_json(rep.cok);
    if (!rep.pass) r.details["failure"] = rep.failure;
    return r;
  }
  if (id == "tc") {
    auto rep = tc_exactness_check(p, lo, hi);
    auto tc = tc_presentation(p);
    CliResult r{id, status_of(rep.pass), json::object()};
    r.details["rank"] = tc.rank();
    r.details["exactness"] = status_of(rep.pass);
    if (rep.failing_degree) {
      r.details["failing_degree"] = *rep.failing_degree;
      r.details["presentation_dim"] = rep.expected;
      r.details["ker_plus_cok_dim"] = rep.actual;
    } else if (!rep.pass) {
      r.details["failure"] = rep.detail;
    }
    return r;
  }
  if (id == "k") {
    auto k = k_presentation(p);
    auto rep = k_tc_check(p, lo, hi);
    const std::size_t expected = static_cast<std::size_t>(2 * q * q - 2 * q + 8);
    CliResult r{id, status_of(rep.pass && k.rank() == expected && k.euler() == 0), json::object()};
    r.details["rank"] = k.rank();
    r.details["euler"] = k.euler();
    r.details["expected_rank"] = expected;
    r.details["tc_equals_k_plus_shifted_kzp"] = status_of(rep.pass);
    return r;
  }
  if (id == "k-lp-conditional") {
    auto rep = k_lp_checks(p);
    CliResult r{id, status_of(rep.pass), json::object(), true};
    r.details["conditional"] = true;
    r.details["localized_equal"] = rep.localized_equal;
    r.details["rank"] = rep.rank;
    r.details["euler"] = rep.euler;
    r.details["kzp"] = series_json(rep.kzp);
    return r;
  }
  throw UsageError("unknown id: " + id);
}

void check_prime(const RunConfig& cfg) {
  if (!is_prime(cfg.p)) throw UsageError("not a prime: " + std::to_string(cfg.p));
  const bool small_ok = starts_with(cfg.target, "bokstedt:") || cfg.target == "oracle-hh";
  if (cfg.p < (small_ok ? 3u : 5u))
    throw UsageError("prime " + std::to_string(cfg.p) + " too small for " + cfg.target);
}

std::string format_value(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void write_text(const RunConfig& cfg, const std::vector<CliResult>& results, std::ostream& out) {
  for (const auto& r : results) {
    if (cfg.command == "verify") {
      out << r.status << ' ' << r.id << (r.conditional ? " (conditional)" : "") << '\n';
      for (const auto& [k, v] : r.details.items())
        if (k == "pages") {
          for (const auto& pg : v)
            out << "  " << pg["page"].get<std::string>() << ' ' << pg["status"].get<std::string>()
                << (pg.contains("failure") ? " " + pg["failure"].get<std::string>() : "") << '\n';
        } else {
          out << "  " << k << '=' << format_value(v) << '\n';
        }
    } else if (cfg.command == "tables") {
      out << "# " << r.id << ' ' << r.details["page"].get<std::string>() << " p=" << cfg.p << " window=" << cfg.lo
          << ':' << cfg.hi << '\n';
      for (const auto& c : r.details["cells"]) {
        out << "s=" << c["s"].get<std::int64_t>() << " t=" << c["t"].get<std::int64_t>()
            << " dim=" << c["dim"].get<std::int64_t>() << " basis=";
        bool first = true;
        for (const auto& b : c["basis"]) {
          out << (first ? "" : ",") << b.get<std::string>();
          first = false;
        }
        out << '\n';
      }
    } else {
      out << "# " << r.id << " p=" << cfg.p << " window=" << cfg.lo << ':' << cfg.hi << '\n';
      for (const auto& e : r.details["series"]) out << e[0].get<std::int64_t>() << ' ' << e[1].get<std::int64_t>() << '\n';
    }
  }
  if (cfg.command == "verify") {
    bool all = true;
    for (const auto& r : results) all = all && (r.conditional || r.status == "PASS");
    out << "overall " << status_of(all) << '\n';
  }
}

void write_structured(const RunConfig& cfg, const std::vector<CliResult>& results, std::ostream& out) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  json c;
  c["command"] = cfg.command;
  c["target"] = cfg.target;
  c["prime"] = cfg.p;
  c["window"] = json::array({cfg.lo, cfg.hi});
  c["page"] = cfg.page;
  c["n"] = cfg.n;
  if (cfg.band) c["band"] = *cfg.band;
  doc["config"] = c;
  json rs = json::array();
  for (const auto& r : results) {
    json e;
    e["id"] = r.id;
    e["status"] = r.status;
    e["details"] = r.details;
    rs.push_back(e);
  }
  doc["results"] = rs;
  out << doc.dump(2) << '\n';
}

}  // namespace

const std::vector<std::pair<std::string, std::string>>& numbered_aliases() {
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"lem-4.45", "poincare-identity"}, {"prop-6.8", "tate:cp"},          {"thm-7.1", "tate:cp:<n>"},
      {"cor-7.2", "tate:cp:<n>"},        {"thm-7.4", "hofix:cp:<n>"},      {"cor-7.5", "hofix:cp:<n>"},
      {"lem-7.8", "filtration-gap"},     {"lem-7.9", "unique-source"},     {"thm-7.12", "tate:s1,hofix:s1"},
      {"prop-8.2", "r-map"},             {"prop-8.4", "tf-decomposition"}, {"prop-8.6", "fixed-points"},
      {"thm-8.8", "tc"},                 {"thm-8.10", "k"},                {"thm-1.2", "k"},
  };
  return table;
}

std::vector<std::string> resolve_verify_target(const std::string& id, std::int64_t n) {
  std::string target = id;
  for (const auto& [alias, canon] : numbered_aliases())
    if (alias == id) target = canon;
  std::vector<std::string> out;
  std::stringstream ss(target);
  for (std::string part; std::getline(ss, part, ',');) {
    auto pos = part.find("<n>");
    if (pos != std::string::npos) part.replace(pos, 3, std::to_string(n));
    out.push_back(part);
  }
  return out;
}

std::vector<CliResult> cmd_verify(const RunConfig& cfg) {
  std::vector<CliResult> out;
  for (const auto& id : resolve_verify_target(cfg.target, cfg.n)) out.push_back(verify_one(id, cfg));
  return out;
}

std::vector<CliResult> cmd_tables(const RunConfig& cfg) {
  const Residue p = cfg.p;
  const bool inf = cfg.page == "inf";
  const std::int64_t r = inf ? 0 : parse_int(cfg.page, "page");
  if (!inf && r < 2) throw UsageError("page must be at least 2");
  Page page;
  std::string name;
  if (starts_with(cfg.target, "bokstedt:")) {
    auto run = bokstedt_run(ring_of(cfg.target.substr(9)), p, std::max<std::int64_t>(cfg.lo, 0), cfg.hi);
    const bool last = inf || r >= static_cast<std::int64_t>(p);
    page = last ? run.einf : run.e2;
    name = last ? "E^inf" : "E^" + std::to_string(r);
  } else if (cfg.target == "tate:s1" || cfg.target == "hofix:s1") {
    if (!inf) throw UsageError("only --page inf is available for " + cfg.target);
    const bool tate = cfg.target == "tate:s1";
    const std::int64_t band = cfg.band.value_or(tate ? tate_band(p, 2) : hofix_band(p, 1, cfg.hi));
    page = tate ? seed_closed(tate_ambient(p, 1), TrustWindow{cfg.lo, cfg.hi, band}, 2, s1_tate_member(p), "E^inf")
                : seed_closed(hofix_ambient(p, 1), TrustWindow{cfg.lo, cfg.hi, band}, 2, s1_hofix_member(p), "E^inf");
    name = "E^inf";
  } else if (auto found = instance_for(cfg.target, cfg)) {
    const auto& inst = found->inst;
    if (!inf && r <= inst.script.front().r) {
      page = seed_full(inst.ambient, TrustWindow{cfg.lo, cfg.hi, found->band}, 2, "E^2");
    } else {
      auto run = run_instance(inst, cfg.lo, cfg.hi, found->band, RunMode::Propagation,
                              inf ? std::nullopt : std::optional<std::int64_t>(r));
      if (!run.pass) throw std::runtime_error("run failed: " + run.error);
      page = run.pages.back();
    }
    name = inf ? "E^inf" : "E^" + std::to_string(r);
  } else {
    throw UsageError("unknown instance id: " + cfg.target);
  }
  CliResult res{cfg.target, "OK", json::object()};
  res.details["page"] = name;
  res.details["cells"] = page_json(page);
  return {res};
}

std::vector<CliResult> cmd_poincare(const RunConfig& cfg) {
  const Residue p = cfg.p;
  CliResult res{cfg.target, "OK", json::object()};
  PoincareSeries ps;
  if (starts_with(cfg.target, "thh:v1:")) {
    ps = v1_thh_presentation(ring_of(cfg.target.substr(7)), p).series(cfg.lo, cfg.hi);
  } else {
    PvModule m;
    if (cfg.target == "tc")
      m = tc_presentation(p);
    else if (cfg.target == "k")
      m = k_presentation(p);
    else if (cfg.target == "k-lp-conditional")
      m = k_lp_presentation(p);
    else
      throw UsageError("unknown presentation id: " + cfg.target);
    ps = m.series(cfg.lo, cfg.hi);
    res.details["presentation"] = to_json(m);
  }
  res.details["series"] = series_json(ps);
  return {res};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact F_p spectral sequence verification", "fpss"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::int64_t prime = 5;
  std::string window, format = "text";
  std::optional<std::int64_t> band;
  for (const char* name : {"verify", "tables", "poincare"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("target", cfg.target, "theorem, instance or presentation id")->required();
    sub->add_option("--prime", prime, "odd prime p");
    sub->add_option("--window", window, "total degree window lo:hi");
    sub->add_option("--page", cfg.page, "page number or inf");
    sub->add_option("--n", cfg.n, "n for C_{p^n} instances and the lemma checks");
    sub->add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--band", band, "internal degree bound");
  }
  // Glue "--window -20:120" so the negative bound is not read as a flag.
  std::vector<std::string> joined;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if ((args[i] == "--window" || args[i] == "--band") && i + 1 < args.size()) {
      joined.push_back(args[i] + "=" + args[i + 1]);
      ++i;
    } else {
      joined.push_back(args[i]);
    }
  }
  std::vector<std::string> reversed(joined.rbegin(), joined.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.structured = format == "structured";
  cfg.band = band;
  try {
    if (prime < 2 || prime > (1ll << 30)) throw UsageError("not a prime: " + std::to_string(prime));
    cfg.p = static_cast<Residue>(prime);
    check_prime(cfg);
    if (cfg.n < 1) throw UsageError("--n must be at least 1");
    const std::int64_t q = cfg.p;
    cfg.lo = -2 * q * q;
    cfg.hi = 5 * q * q;
    if (!window.empty()) {
      static const std::regex re(R"(^(-?\d+):(-?\d+)$)");
      std::smatch m;
      if (!std::regex_match(window, m, re)) throw UsageError("window must be lo:hi");
      cfg.lo = parse_int(m[1], "window");
      cfg.hi = parse_int(m[2], "window");
      cfg.window_given = true;
    }
    std::vector<CliResult> results;
    if (cfg.command == "verify")
      results = cmd_verify(cfg);
    else if (cfg.command == "tables")
      results = cmd_tables(cfg);
    else
      results = cmd_poincare(cfg);
    if (cfg.structured)
      write_structured(cfg, results, out);
    else
      write_text(cfg, results, out);
    for (const auto& r : results)
      if (!r.conditional && r.status == "FAIL") return kExitMismatch;
    return kExitPass;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
}

}  // namespace fpss
