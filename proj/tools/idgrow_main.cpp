// Command-line front end: counting, census, optimization, Lie/group
// enumeration, claim audits, and exponent fits, with JSON or CSV output.
// Exit codes: 0 ok, 1 invariant failure, 2 usage, 3 guard breach.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <idgrow/idgrow.hpp>

namespace {

using ordered_json = nlohmann::ordered_json;
using namespace idgrow;

struct OutputOpts {
  std::string format = "json";
  std::string out;
};

void add_output_opts(CLI::App* cmd, OutputOpts& oo) {
  cmd->add_option("--format", oo.format, "Output format (json or csv)")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", oo.out, "Write the report to this file instead of stdout");
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  q += '"';
  return q;
}

std::string fmt_double(double v) {
  char b[64];
  std::snprintf(b, sizeof b, "%.10g", v);
  return std::string(b);
}

ordered_json count_json(const mpz_class& v) {
  if (v.fits_ulong_p() && v.get_ui() <= (1ull << 53)) return std::uint64_t(v.get_ui());
  return v.get_str();
}

ordered_json log_p_json(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

void write_payload(const OutputOpts& oo, const std::string& payload) {
  if (oo.out.empty()) {
    std::fwrite(payload.data(), 1, payload.size(), stdout);
    return;
  }
  std::ofstream f(oo.out, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + oo.out);
  f << payload;
}

void emit(const OutputOpts& oo, const ordered_json& j, const std::string& csv) {
  write_payload(oo, oo.format == "csv" ? csv : j.dump(2) + "\n");
}

void check_prime(std::uint32_t p) {
  if (!is_prime_u32(p)) throw std::invalid_argument("--p must be prime");
}

std::string staircase_str(const Staircase& s) { return s.to_json().dump(); }

// --- count-ideals ---

struct CountIdealsArgs {
  std::uint32_t p = 2, d = 2, n = 1;
  std::uint64_t guard = 5'000'000;
  std::string emit_ideals;
  OutputOpts oo;
};

void run_count_ideals(const CountIdealsArgs& a) {
  check_prime(a.p);
  if (a.d < 1) throw std::invalid_argument("--d must be >= 1");
  std::uint32_t dim_guard =
      std::uint32_t(std::max<std::uint64_t>(64, binom_u64(a.n + a.d, a.d)));

  ordered_json j;
  j["schema"] = 1;
  j["command"] = "count-ideals";
  j["p"] = a.p;
  j["d"] = a.d;
  j["n"] = a.n;

  std::string csv = "staircase_id,generators,colength,bucket\n";
  mpz_class total = 0;

  if (a.oo.format == "csv") {
    // Stratified report needs initial ideals, hence one extra layer.
    QuotientAlgebra A = build_algebra(a.p, a.d, a.n + 1, dim_guard);
    auto ideals = enumerate_ideals(A, a.n, a.guard);
    auto buckets = stratify(ideals, A.order());
    std::uint64_t sid = 0;
    for (const auto& [st, cnt] : buckets) {
      csv += std::to_string(sid++) + "," + csv_cell(staircase_str(st)) + "," +
             std::to_string(a.n) + "," + std::to_string(cnt) + "\n";
      total += cnt;
    }
  } else {
    CountValue cv = count_ideals(a.p, a.d, a.n, dim_guard, a.guard);
    total = cv.exact;
  }
  CountValue cv = CountValue::from_exact(total, a.p);
  j["count"] = count_json(cv.exact);
  j["log_p"] = log_p_json(cv.log_p);

  if (!a.emit_ideals.empty()) {
    QuotientAlgebra A = build_algebra(a.p, a.d, std::max<std::uint32_t>(a.n, 1), dim_guard);
    auto ideals = enumerate_ideals(A, a.n, a.guard);
    ordered_json out;
    out["schema"] = 1;
    out["p"] = a.p;
    out["d"] = a.d;
    out["n"] = a.n;
    out["modulus"] = A.modulus().to_json();
    ordered_json monos = ordered_json::array();
    for (std::uint32_t i = 0; i < A.dim(); ++i) monos.push_back(A.mono(i).e);
    out["basis_monomials"] = monos;
    ordered_json list = ordered_json::array();
    for (const auto& I : ideals) {
      ordered_json rows = ordered_json::array();
      for (const auto& r : I.space.basis()) {
        std::vector<std::uint32_t> coeffs(A.dim());
        for (std::uint32_t t = 0; t < A.dim(); ++t) coeffs[t] = r.get(t);
        rows.push_back(coeffs);
      }
      list.push_back(ordered_json{{"basis", rows}});
    }
    out["ideals"] = list;
    std::ofstream f(a.emit_ideals, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + a.emit_ideals);
    f << out.dump(2) << "\n";
  }

  emit(a.oo, j, csv);
}

// --- count-monomial ---

struct CountMonomialArgs {
  std::uint32_t d = 2, n = 1;
  std::uint64_t guard = 64;
  OutputOpts oo;
};

void run_count_monomial(const CountMonomialArgs& a) {
  auto stairs = enumerate_staircases(a.d, a.n, std::uint32_t(a.guard));
  ordered_json j;
  j["schema"] = 1;
  j["command"] = "count-monomial";
  j["d"] = a.d;
  j["n"] = a.n;
  j["count"] = std::uint64_t(stairs.size());
  std::string csv = "staircase_id,generators,colength\n";
  for (std::size_t i = 0; i < stairs.size(); ++i)
    csv += std::to_string(i) + "," + csv_cell(staircase_str(stairs[i])) + "," +
           std::to_string(a.n) + "\n";
  emit(a.oo, j, csv);
}

// --- lower-bound ---

struct LowerBoundArgs {
  std::uint32_t p = 2, d = 2, n = 6;
  std::uint64_t sample = 0, seed = 12345, guard = 1'000'000;
  OutputOpts oo;
};

void run_lower_bound(const LowerBoundArgs& a) {
  check_prime(a.p);
  PhiFamilySpec spec = build_family_spec(a.n, a.d, a.p);
  CensusReport rep = family_census(spec, a.guard, a.sample, a.seed);
  double fraction = rep.checked ? double(rep.valid) / double(rep.checked) : 0.0;
  ordered_json j;
  j["schema"] = 1;
  j["command"] = "lower-bound";
  j["p"] = a.p;
  j["d"] = a.d;
  j["n"] = a.n;
  j["m"] = spec.m;
  j["n_tilde"] = spec.n_tilde;
  j["claimed"] = count_json(rep.claimed.exact);
  j["checked"] = rep.checked;
  j["valid"] = rep.valid;
  j["valid_fraction"] = fraction;
  j["injective_on_valid"] = rep.injective_on_valid;
  j["sampled"] = rep.sampled;
  j["distinct_phi"] = rep.distinct_phi;
  std::string csv =
      "p,d,n,m,n_tilde,claimed,checked,valid,valid_fraction,injective_on_valid,sampled,"
      "distinct_phi\n";
  csv += std::to_string(a.p) + "," + std::to_string(a.d) + "," + std::to_string(a.n) + "," +
         std::to_string(spec.m) + "," + std::to_string(spec.n_tilde) + "," +
         rep.claimed.exact.get_str() + "," + std::to_string(rep.checked) + "," +
         std::to_string(rep.valid) + "," + fmt_double(fraction) + "," +
         (rep.injective_on_valid ? "true" : "false") + "," + (rep.sampled ? "true" : "false") +
         "," + std::to_string(rep.distinct_phi) + "\n";
  emit(a.oo, j, csv);
}

// --- maximize ---

struct MaximizeArgs {
  std::uint32_t N = 100;
  OutputOpts oo;
};

void run_maximize(const MaximizeArgs& a) {
  if (a.N < 1) throw std::invalid_argument("--N must be >= 1");
  DpTable dp(a.N);
  std::int64_t best = dp.dp_max(a.N);
  TailOnesBest tail = tail_ones_max(a.N);
  double c_main = std::pow(2.0 / 3.0, 1.5);
  double c_alt = std::pow(2.0, 1.5) / std::pow(3.0, 2.5);
  double scale = std::pow(double(a.N), 1.5);
  ordered_json j;
  j["schema"] = 1;
  j["command"] = "maximize";
  j["N"] = a.N;
  j["dp_max"] = best;
  j["tail_ones_value"] = tail.value;
  j["tail_ones_n0"] = tail.n0;
  j["c_main"] = c_main;
  j["ratio_to_c_main"] = double(best) / (c_main * scale);
  j["c_alt"] = c_alt;
  j["ratio_to_c_alt"] = double(best) / (c_alt * scale);
  std::string csv = "N,dp_max,tail_ones_value,tail_ones_n0,c_main,ratio_to_c_main,c_alt,"
                    "ratio_to_c_alt\n";
  csv += std::to_string(a.N) + "," + std::to_string(best) + "," + std::to_string(tail.value) +
         "," + std::to_string(tail.n0) + "," + fmt_double(c_main) + "," +
         fmt_double(double(best) / (c_main * scale)) + "," + fmt_double(c_alt) + "," +
         fmt_double(double(best) / (c_alt * scale)) + "\n";
  emit(a.oo, j, csv);
}

// --- lie-count ---

struct LieCountArgs {
  std::uint32_t p = 3, d = 1, n = 2, max_codim = 3;
  std::uint64_t guard = 5'000'000;
  OutputOpts oo;
};

void run_lie_count(const LieCountArgs& a) {
  check_prime(a.p);
  QuotientAlgebra A = build_algebra(a.p, a.d, a.n);
  Sl2Algebra L(A);
  auto ideals = enumerate_lie_ideals(L, a.max_codim, a.guard);
  std::map<std::uint32_t, std::uint64_t> by_codim;
  bool sandwich = true;
  for (const auto& J : ideals) {
    ++by_codim[J.codim()];
    sandwich = sandwich && lie_sandwich_check(J);
  }
  ordered_json j;
  j["schema"] = 1;
  j["command"] = "lie-count";
  j["p"] = a.p;
  j["d"] = a.d;
  j["n"] = a.n;
  j["ambient_dim"] = L.dim();
  ordered_json counts = ordered_json::array();
  std::string csv = "codim,count\n";
  for (const auto& [codim, cnt] : by_codim) {
    counts.push_back(ordered_json{{"codim", codim}, {"count", cnt}});
    csv += std::to_string(codim) + "," + std::to_string(cnt) + "\n";
  }
  j["counts"] = counts;
  j["total"] = std::uint64_t(ideals.size());
  j["sandwich_pass"] = sandwich;
  emit(a.oo, j, csv);
}

// --- group-count ---

struct GroupCountArgs {
  std::uint32_t p = 3, d = 1, n = 2;
  std::uint64_t max_index = 1u << 30;
  std::uint64_t guard = 729;
  OutputOpts oo;
};

void run_group_count(const GroupCountArgs& a) {
  check_prime(a.p);
  QuotientAlgebra A = build_algebra(a.p, a.d, a.n);
  CongruenceGroup G(A);
  auto E = G.materialize(a.guard);
  auto subs = enumerate_normal_subgroups(G, E, a.max_index);
  std::map<std::uint64_t, std::uint64_t> by_index;
  bool sandwich = true;
  for (const auto& ns : subs) {
    ++by_index[E.n / ns.order];
    std::vector<Mat2> elems;
    for (auto id : ns.elems) elems.push_back(E.list[id]);
    sandwich = sandwich && group_sandwich_check(G, elems);
  }
  ordered_json j;
  j["schema"] = 1;
  j["command"] = "group-count";
  j["p"] = a.p;
  j["d"] = a.d;
  j["n"] = a.n;
  j["order"] = count_json(G.order().exact);
  ordered_json counts = ordered_json::array();
  std::string csv = "index,count\n";
  for (const auto& [idx, cnt] : by_index) {
    counts.push_back(ordered_json{{"index", idx}, {"count", cnt}});
    csv += std::to_string(idx) + "," + std::to_string(cnt) + "\n";
  }
  j["counts"] = counts;
  j["total"] = std::uint64_t(subs.size());
  j["sandwich_pass"] = sandwich;
  emit(a.oo, j, csv);
}

// --- audit ---

struct AuditArgs {
  std::string scale = "small";
  std::uint64_t seed = 12345;
  OutputOpts oo;
};

void run_audit(const AuditArgs& a) {
  AuditScale scale = a.scale == "small" ? AuditScale::Small : AuditScale::Default;
  auto reports = audit_all(scale, a.seed);
  ordered_json j;
  j["schema"] = 1;
  j["command"] = "audit";
  j["scale"] = a.scale;
  j["seed"] = a.seed;
  ordered_json arr = ordered_json::array();
  std::string csv = "claim,statement,claimed,measured,verdict\n";
  for (const auto& r : reports) {
    arr.push_back(ordered_json{{"claim", r.claim},
                               {"statement", r.statement},
                               {"claimed", r.claimed},
                               {"measured", r.measured},
                               {"verdict", r.verdict}});
    csv += csv_cell(r.claim) + "," + csv_cell(r.statement) + "," + csv_cell(r.claimed) + "," +
           csv_cell(r.measured) + "," + csv_cell(r.verdict) + "\n";
  }
  j["reports"] = arr;
  emit(a.oo, j, csv);
}

// --- fit ---

struct FitArgs {
  std::uint32_t p = 2, d = 2, n = 6;
  std::uint64_t guard = 5'000'000;
  OutputOpts oo;
};

void run_fit(const FitArgs& a) {
  check_prime(a.p);
  std::vector<std::pair<std::uint32_t, double>> series;
  for (std::uint32_t k = 1; k <= a.n; ++k) {
    std::uint32_t dim_guard =
        std::uint32_t(std::max<std::uint64_t>(64, binom_u64(k + a.d, a.d)));
    series.emplace_back(k, count_ideals(a.p, a.d, k, dim_guard, a.guard).log_p);
  }
  FitResult fr = fit_exponent(series, default_alphas(a.d));
  ordered_json j;
  j["schema"] = 1;
  j["command"] = "fit";
  j["p"] = a.p;
  j["d"] = a.d;
  j["n"] = a.n;
  ordered_json ser = ordered_json::array();
  for (const auto& [x, y] : series) ser.push_back(ordered_json{{"n", x}, {"log_p_count", y}});
  j["series"] = ser;
  ordered_json cands = ordered_json::array();
  std::string csv = "alpha,c,residual,best\n";
  for (std::size_t i = 0; i < fr.candidates.size(); ++i) {
    const auto& cand = fr.candidates[i];
    cands.push_back(
        ordered_json{{"alpha", cand.alpha}, {"c", cand.c}, {"residual", cand.residual}});
    csv += fmt_double(cand.alpha) + "," + fmt_double(cand.c) + "," + fmt_double(cand.residual) +
           "," + (i == fr.best ? "true" : "false") + "\n";
  }
  j["candidates"] = cands;
  j["best_alpha"] = fr.candidates[fr.best].alpha;
  j["inconclusive"] = fr.inconclusive;
  emit(a.oo, j, csv);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-index ideal and congruence subgroup counting"};
  app.require_subcommand(1);

  CountIdealsArgs ci;
  auto* c_ci = app.add_subcommand("count-ideals", "Count colength-n ideals of F_p[[x_1..x_d]]");
  c_ci->add_option("--p", ci.p, "Prime field characteristic")->required();
  c_ci->add_option("--d", ci.d, "Number of variables")->required();
  c_ci->add_option("--n", ci.n, "Colength")->required();
  c_ci->add_option("--guard", ci.guard, "Enumeration node guard");
  c_ci->add_option("--emit-ideals", ci.emit_ideals, "Also write every ideal basis to this JSON file");
  add_output_opts(c_ci, ci.oo);

  CountMonomialArgs cm;
  auto* c_cm = app.add_subcommand("count-monomial", "Count colength-n monomial ideals (d <= 3)");
  c_cm->add_option("--d", cm.d, "Number of variables")->required();
  c_cm->add_option("--n", cm.n, "Colength")->required();
  c_cm->add_option("--guard", cm.guard, "Colength guard");
  add_output_opts(c_cm, cm.oo);

  LowerBoundArgs lb;
  auto* c_lb = app.add_subcommand("lower-bound", "Census of the perturbed-staircase family");
  c_lb->add_option("--n", lb.n, "Colength")->required();
  c_lb->add_option("--d", lb.d, "Number of variables")->required();
  c_lb->add_option("--p", lb.p, "Prime field characteristic")->required();
  c_lb->add_option("--sample", lb.sample, "Sample size (0 = exhaustive when within guard)");
  c_lb->add_option("--seed", lb.seed, "Sampling seed");
  c_lb->add_option("--guard", lb.guard, "Exhaustive-enumeration guard");
  add_output_opts(c_lb, lb.oo);

  MaximizeArgs mx;
  auto* c_mx = app.add_subcommand("maximize", "Maximize the stratification objective at total N");
  c_mx->add_option("--N", mx.N, "Total of the sequence")->required();
  add_output_opts(c_mx, mx.oo);

  LieCountArgs lc;
  auto* c_lc = app.add_subcommand("lie-count", "Count Lie ideals of sl_2(m) over F_p[x..]/m^n");
  c_lc->add_option("--p", lc.p, "Prime field characteristic (p != 2)")->required();
  c_lc->add_option("--d", lc.d, "Number of variables");
  c_lc->add_option("--n", lc.n, "Truncation exponent")->required();
  c_lc->add_option("--max-codim", lc.max_codim, "Largest codimension to enumerate");
  c_lc->add_option("--guard", lc.guard, "Enumeration node guard");
  add_output_opts(c_lc, lc.oo);

  GroupCountArgs gc;
  auto* c_gc = app.add_subcommand("group-count",
                                  "Count normal subgroups of SL_2^1 over F_p[x..]/m^n");
  c_gc->add_option("--p", gc.p, "Prime field characteristic (p != 2)")->required();
  c_gc->add_option("--d", gc.d, "Number of variables");
  c_gc->add_option("--n", gc.n, "Truncation exponent")->required();
  c_gc->add_option("--max-index", gc.max_index, "Largest index to report");
  c_gc->add_option("--guard", gc.guard, "Group order guard for materialization");
  add_output_opts(c_gc, gc.oo);

  AuditArgs au;
  auto* c_au = app.add_subcommand("audit", "Run the registered claim checks");
  c_au->add_option("--scale", au.scale, "Audit scale")
      ->check(CLI::IsMember({"small", "default"}));
  c_au->add_option("--seed", au.seed, "Seed for the sampled checks");
  add_output_opts(c_au, au.oo);

  FitArgs ft;
  auto* c_ft = app.add_subcommand("fit", "Fit the growth exponent of measured ideal counts");
  c_ft->add_option("--p", ft.p, "Prime field characteristic")->required();
  c_ft->add_option("--d", ft.d, "Number of variables")->required();
  c_ft->add_option("--n", ft.n, "Largest colength in the series")->required();
  c_ft->add_option("--guard", ft.guard, "Enumeration node guard");
  add_output_opts(c_ft, ft.oo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_ci->parsed()) run_count_ideals(ci);
    if (c_cm->parsed()) run_count_monomial(cm);
    if (c_lb->parsed()) run_lower_bound(lb);
    if (c_mx->parsed()) run_maximize(mx);
    if (c_lc->parsed()) run_lie_count(lc);
    if (c_gc->parsed()) run_group_count(gc);
    if (c_au->parsed()) run_audit(au);
    if (c_ft->parsed()) run_fit(ft);
    return 0;
  } catch (const guard_error& e) {
    std::fprintf(stderr, "guard breach: %s\n", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "invariant failure: %s\n", e.what());
    return 1;
  }
}
