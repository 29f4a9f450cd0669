#include <cctype>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rtg/arithmetic.hpp"
#include "rtg/boost_experiment.hpp"
#include "rtg/constraint.hpp"
#include "rtg/davkd.hpp"
#include "rtg/davkd_enum.hpp"
#include "rtg/decide.hpp"
#include "rtg/fulfill.hpp"
#include "rtg/gprime.hpp"
#include "rtg/manifest.hpp"
#include "rtg/presentation.hpp"
#include "rtg/rational.hpp"
#include "rtg/sampling.hpp"
#include "rtg/threshold.hpp"
#include "rtg/zgraph.hpp"

using nlohmann::json;

namespace {

// Flags shared by every subcommand.  --seed and --threads are accepted
// everywhere (and echoed in the manifest) even where the computation is
// deterministic without them, so scripts can pass them uniformly.
struct Common {
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string output;
  std::int64_t epoch = 0;
  bool epoch_set = false;
  CLI::Option* epoch_opt = nullptr;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "Master seed (decimal uint64)");
  cmd->add_option("--threads", c.threads, "Worker threads; output is identical for any value")
      ->check(CLI::Range(1u, 1024u));
  cmd->add_option("--output", c.output, "Output file (default: stdout)");
  c.epoch_opt = cmd->add_option("--epoch", c.epoch,
                                "Pin the manifest timestamp (unix seconds)");
}

rtg::RunManifest make_manifest(const std::string& sub, const json& config,
                               const Common& c,
                               std::vector<std::string> inputs = {}) {
  rtg::RunManifest m;
  m.subcommand = sub;
  m.config_json = config.dump();
  m.seed = c.seed;
  m.timestamp = c.epoch_opt && c.epoch_opt->count() ? c.epoch
                                                    : std::time(nullptr);
  m.inputs = std::move(inputs);
  if (!c.output.empty()) m.outputs = {c.output};
  return m;
}

void write_out(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.output);
  if (!f) throw std::runtime_error("cannot open " + c.output + " for writing");
  f << text;
}

std::string manifest_line(const rtg::RunManifest& m) {
  json j;
  j["manifest"] = json::parse(rtg::manifest_json(m));
  return j.dump() + "\n";
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> parse_grid(const std::string& spec) {
  double lo = 0, hi = 0, step = 0;
  char extra = 0;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%lf%c", &lo, &hi, &step, &extra) != 3 ||
      step <= 0 || hi < lo)
    throw std::runtime_error("bad grid '" + spec +
                             "': expected lo:hi:step with step > 0, hi >= lo");
  std::vector<double> grid;
  for (std::uint64_t i = 0;; ++i) {
    double c = lo + static_cast<double>(i) * step;
    if (c > hi + step * 1e-9) break;
    grid.push_back(c);
  }
  return grid;
}

json estimate_json(const rtg::HEstimate& e) {
  return json{{"trials", e.trials},
              {"lower", e.lower()},
              {"upper", e.upper()},
              {"trivial", e.trivial_frac},
              {"nontrivial", e.nontrivial_frac},
              {"undecided", e.undecided_frac},
              {"trivial_ci", {e.trivial_ci.lo, e.trivial_ci.hi}},
              {"exact", e.exact}};
}

json letters_json(const std::vector<rtg::LetterId>& ls) {
  json a = json::array();
  for (rtg::LetterId l : ls) a.push_back(rtg::letter_name(l));
  return a;
}

// ---------------------------------------------------------------- sample

struct SampleCmd {
  Common c;
  std::uint32_t n = 2;
  double p = 0.0;
  bool cyclic = false;

  int run() const {
    json cfg{{"n", n}, {"p", p}, {"seed", std::to_string(c.seed)},
             {"cyclic", cyclic}};
    rtg::RunManifest m = make_manifest("sample", cfg, c);
    rtg::Presentation pres =
        rtg::sample_presentation({n, p, c.seed, cyclic});
    bool as_json = c.output.size() >= 5 &&
                   c.output.compare(c.output.size() - 5, 5, ".json") == 0;
    if (as_json) {
      json j = json::parse(rtg::serialize_presentation_json(pres));
      j["manifest"] = json::parse(rtg::manifest_json(m));
      write_out(c, j.dump(2) + "\n");
    } else {
      std::string text = rtg::serialize_presentation_text(pres);
      text.insert(text.find('\n') + 1,
                  "# manifest: " + rtg::manifest_json(m) + "\n");
      write_out(c, text);
    }
    return 0;
  }
};

// ---------------------------------------------------------------- decide

struct DecideCmd {
  Common c;
  std::string input;
  std::uint64_t max_cosets = 0;
  std::string cascade = "on";

  int run() const {
    json cfg{{"input", input}, {"max_cosets", max_cosets},
             {"cascade", cascade}, {"seed", std::to_string(c.seed)}};
    rtg::RunManifest m = make_manifest("decide", cfg, c, {input});
    rtg::Presentation pres = rtg::load_presentation_file(input);
    rtg::DecideBudget budget;
    budget.use_cascade = cascade == "on";
    budget.max_cosets = max_cosets;
    rtg::Verdict v = rtg::decide(pres, budget);

    std::string word = rtg::outcome_name(v.outcome);
    word[0] = static_cast<char>(std::toupper(word[0]));
    std::cout << word << " stage=" << rtg::stage_name(v.stage) << "\n";

    if (!c.output.empty()) {
      json row = json::parse(rtg::verdict_json(v));
      row["input"] = input;
      row["n"] = pres.n;
      row["relators"] = pres.size();
      std::ostringstream out;
      out << manifest_line(m) << row.dump() << "\n";
      write_out(c, out.str());
    }
    return 0;
  }
};

// ----------------------------------------------------------------- sweep

struct SweepCmd {
  Common c;
  std::uint32_t n = 2;
  std::string grid = "0.2:3.0:0.2";
  std::uint64_t trials = 100;
  std::uint64_t max_cosets = 0;
  bool cyclic = false;

  int run() const {
    json cfg{{"n", n}, {"c", grid}, {"trials", trials},
             {"max_cosets", max_cosets}, {"cyclic", cyclic},
             {"seed", std::to_string(c.seed)}};
    rtg::RunManifest m = make_manifest("sweep", cfg, c);
    rtg::EstimateOptions opt;
    opt.budget.max_cosets = max_cosets;
    opt.cyclic_slots = cyclic;
    opt.threads = c.threads;
    rtg::ThresholdCurve curve =
        rtg::sweep(n, parse_grid(grid), trials, c.seed, opt);

    std::ostringstream out;
    out << "# manifest: " << rtg::manifest_json(m) << "\n";
    out << "c,p,lower,upper,undecided,ci_lo,ci_hi\n";
    for (const rtg::CurvePoint& pt : curve.points) {
      const rtg::HEstimate& e = pt.estimate;
      out << fmt_double(pt.c) << ',' << fmt_double(pt.p) << ','
          << fmt_double(e.lower()) << ',' << fmt_double(e.upper()) << ','
          << fmt_double(e.undecided_frac) << ','
          << fmt_double(e.trivial_ci.lo) << ','
          << fmt_double(e.trivial_ci.hi) << "\n";
    }
    json summary{{"coupled_monotone", curve.coupled_monotone}};
    if (curve.c_half) summary["c_half"] = *curve.c_half;
    if (curve.p_half) summary["p_half"] = *curve.p_half;
    if (curve.p_10) summary["p_10"] = *curve.p_10;
    if (curve.p_90) summary["p_90"] = *curve.p_90;
    if (curve.relative_width) summary["relative_width"] = *curve.relative_width;
    out << "# summary: " << summary.dump() << "\n";
    write_out(c, out.str());
    return 0;
  }
};

// ------------------------------------------------------------- threshold

struct ThresholdCmd {
  Common c;
  std::uint32_t n = 2;
  std::uint64_t trials = 100;
  double tol = 0.05;
  double c_lo = 0.05, c_hi = 6.0;
  std::uint64_t max_cosets = 0;
  bool cyclic = false;

  int run() const {
    json cfg{{"n", n}, {"trials", trials}, {"tol", tol},
             {"c_lo", c_lo}, {"c_hi", c_hi}, {"max_cosets", max_cosets},
             {"cyclic", cyclic}, {"seed", std::to_string(c.seed)}};
    rtg::RunManifest m = make_manifest("threshold", cfg, c);
    rtg::FindThresholdOptions opt;
    opt.c_lo = c_lo;
    opt.c_hi = c_hi;
    opt.estimate.budget.max_cosets = max_cosets;
    opt.estimate.cyclic_slots = cyclic;
    opt.estimate.threads = c.threads;
    rtg::ThresholdResult r =
        rtg::find_threshold(n, trials, tol, c.seed, opt);

    std::ostringstream out;
    out << manifest_line(m);
    json row{{"n", r.n},
             {"c_hat", r.c_hat},
             {"p_hat", rtg::p_of_c(r.c_hat, n)},
             {"bracket_lo", r.bracket_lo},
             {"bracket_hi", r.bracket_hi},
             {"ci_ambiguous", r.ci_ambiguous},
             {"undecided_near_c_hat", r.undecided_near_c_hat}};
    out << row.dump() << "\n";
    for (const rtg::CurvePoint& pt : r.evaluations) {
      json ev{{"c", pt.c}, {"p", pt.p}};
      ev["estimate"] = estimate_json(pt.estimate);
      out << ev.dump() << "\n";
    }
    write_out(c, out.str());
    return 0;
  }
};

// ----------------------------------------------------------------- boost

struct BoostCmd {
  Common c;
  std::uint32_t n = 2;
  double p = 0.0;
  double eps = 0.0;
  std::uint64_t trials = 100;
  std::uint64_t max_cosets = 0;
  std::string fixed_path;
  bool cyclic = false;
  bool records = false;

  int run() const {
    json cfg{{"n", n}, {"p", p}, {"eps", eps}, {"trials", trials},
             {"max_cosets", max_cosets}, {"fixed", fixed_path},
             {"cyclic", cyclic}, {"records", records},
             {"seed", std::to_string(c.seed)}};
    std::vector<std::string> inputs;
    if (!fixed_path.empty()) inputs.push_back(fixed_path);
    rtg::RunManifest m = make_manifest("boost", cfg, c, inputs);

    rtg::BoostConfig bc;
    bc.n = n;
    bc.p = p;
    bc.eps = eps;
    bc.fixed = fixed_path.empty() ? rtg::default_fixed_relators(n)
                                  : rtg::load_presentation_file(fixed_path);
    bc.trials = trials;
    bc.seed = c.seed;
    bc.budget.max_cosets = max_cosets;
    bc.cyclic_slots = cyclic;
    bc.threads = c.threads;
    std::vector<rtg::BoostTrialRecord> recs;
    rtg::BoostReport r =
        rtg::boost_experiment(bc, records ? &recs : nullptr);

    std::ostringstream out;
    out << manifest_line(m);
    json row{{"n", r.n},
             {"p", r.p},
             {"eps", r.eps},
             {"trials", r.trials},
             {"z", letters_json(r.z)},
             {"h",
              {{"plain", estimate_json(r.plain)},
               {"fixed", estimate_json(r.with_fixed)},
               {"eps", estimate_json(r.with_eps)},
               {"strong", estimate_json(r.strong)}}},
             {"gap_fixed", r.gap_fixed},
             {"gap_fixed_ci", {r.gap_fixed_ci.lo, r.gap_fixed_ci.hi}},
             {"gap_eps", r.gap_eps},
             {"gap_eps_ci", {r.gap_eps_ci.lo, r.gap_eps_ci.hi}},
             {"gap_strong", r.gap_strong},
             {"gap_strong_ci", {r.gap_strong_ci.lo, r.gap_strong_ci.hi}},
             {"alpha_fixed", r.alpha_fixed},
             {"alpha_eps", r.alpha_eps},
             {"dominance_checks", r.dominance_checks},
             {"dominance_violations", r.dominance_violations}};
    out << row.dump() << "\n";
    for (const rtg::BoostTrialRecord& t : recs) {
      json tr{{"trial", t.trial},
              {"seed", std::to_string(t.seed)},
              {"plain", rtg::outcome_name(t.plain)},
              {"fixed", rtg::outcome_name(t.with_fixed)},
              {"eps", rtg::outcome_name(t.with_eps)},
              {"strong", rtg::outcome_name(t.strong)}};
      out << tr.dump() << "\n";
    }
    write_out(c, out.str());
    return 0;
  }
};

// ------------------------------------------------------------ davkd-enum

struct DavkdEnumCmd {
  Common c;
  std::uint32_t m_faces = 1;
  std::string mode = "canonical";
  std::uint64_t limit = 0;
  bool count_only = false;

  int run() const {
    json cfg{{"m", m_faces}, {"mode", mode}, {"limit", limit},
             {"count_only", count_only}, {"seed", std::to_string(c.seed)}};
    rtg::RunManifest man = make_manifest("davkd-enum", cfg, c);
    rtg::EnumMode em = mode == "raw" ? rtg::EnumMode::Raw
                                     : rtg::EnumMode::Canonical;
    std::ostringstream out;
    out << manifest_line(man);
    if (count_only) {
      std::uint64_t count =
          em == rtg::EnumMode::Raw
              ? rtg::raw_davkd_count(m_faces)
              : rtg::for_each_davkd(m_faces, em,
                                    [](const rtg::Diagram&) { return true; });
      json row{{"m", m_faces}, {"mode", mode}, {"count", count},
               {"structures", rtg::enumerate_structures(m_faces).size()}};
      out << row.dump() << "\n";
    } else {
      std::uint64_t emitted = 0;
      rtg::for_each_davkd(m_faces, em, [&](const rtg::Diagram& d) {
        out << rtg::diagram_json(d) << "\n";
        ++emitted;
        return limit == 0 || emitted < limit;
      });
    }
    write_out(c, out.str());
    return 0;
  }
};

// ----------------------------------------------------------- davkd-check

struct DavkdCheckCmd {
  Common c;
  std::string input;
  std::string f_str = "0.5";
  std::uint32_t n = 0;
  double p = 0.0;
  bool exact = false;

  int run() const {
    json cfg{{"input", input}, {"f", f_str}, {"n", n}, {"p", p},
             {"exact", exact}, {"seed", std::to_string(c.seed)}};
    rtg::RunManifest m = make_manifest("davkd-check", cfg, c, {input});
    rtg::Diagram d = rtg::load_diagram_file(input);
    rtg::Rational f = rtg::rational_from_decimal(f_str);

    json row = json::parse(rtg::analysis_json(d, f));
    row["valid"] = true;
    row["f"] = f.str();
    if (n > 0 && p > 0) {
      row["letter_bound"] = rtg::fulfillability_upper_bound(d, n, p);
      rtg::UnionBound u = rtg::fulfillability_union_bound(d, n, p);
      row["union_bound"] = json{{"value", u.value}, {"stages", u.stage_values}};
      if (exact) {
        auto ex = rtg::exact_fulfillability_probability(d, n, p);
        row["exact_probability"] = ex ? json(*ex) : json(nullptr);
      }
    }
    std::ostringstream out;
    out << manifest_line(m) << row.dump() << "\n";
    write_out(c, out.str());
    return 0;
  }
};

// ---------------------------------------------------------------- zgraph

struct ZgraphCmd {
  Common c;
  std::uint32_t n = 2;
  double p = 0.0;
  std::uint32_t z_gens = 1;
  std::uint64_t trials = 1;
  bool cyclic = false;

  int run() const {
    json cfg{{"n", n}, {"p", p}, {"z_gens", z_gens}, {"trials", trials},
             {"cyclic", cyclic}, {"seed", std::to_string(c.seed)}};
    rtg::RunManifest m = make_manifest("zgraph", cfg, c);
    if (z_gens < 1 || z_gens > n)
      throw std::runtime_error("--z-gens must be in [1, n]");
    std::vector<rtg::LetterId> z;
    for (std::uint32_t g = 1; g <= z_gens; ++g) {
      z.push_back(rtg::make_letter(g, +1));
      z.push_back(rtg::make_letter(g, -1));
    }
    std::ostringstream out;
    out << manifest_line(m);
    for (std::uint64_t t = 0; t < trials; ++t) {
      std::uint64_t seed_t = c.seed + t;
      rtg::Presentation pres =
          rtg::sample_presentation({n, p, seed_t, cyclic});
      rtg::ZGraphStats s = rtg::z_graph_stats(pres, z);
      json row{{"trial", t},
               {"seed", std::to_string(seed_t)},
               {"n", s.n},
               {"p", p},
               {"relators", pres.size()},
               {"z", letters_json(s.z)},
               {"vertices", s.vertex_count},
               {"edges", s.edge_count},
               {"nontrivial_components", s.nontrivial_components},
               {"max_component_edges", s.max_component_edges},
               {"q", s.q},
               {"n_power_bound", s.n_power_bound},
               {"within_sparse_shape", s.within_sparse_shape}};
      out << row.dump() << "\n";
    }
    write_out(c, out.str());
    return 0;
  }
};

// ----------------------------------------------------------------- paths

struct PathsCmd {
  Common c;
  std::uint32_t n = 2;
  std::uint64_t pairs = 1;
  double eps = 0.0;
  double p = 0.0;
  std::uint64_t trials = 100;

  int run() const {
    json cfg{{"n", n}, {"pairs", pairs}, {"eps", eps}, {"p", p},
             {"trials", trials}, {"seed", std::to_string(c.seed)}};
    rtg::RunManifest m = make_manifest("paths", cfg, c);
    rtg::GPrimeConfig gc;
    gc.n = n;
    gc.m_pairs = pairs;
    gc.eps = eps;
    gc.p = p;
    gc.trials = trials;
    gc.seed = c.seed;
    gc.threads = c.threads;
    rtg::PathStats s = rtg::gprime_path_stats(gc);

    json planted = json::array();
    for (auto [a, b] : s.planted)
      planted.push_back({rtg::letter_name(a), rtg::letter_name(b)});
    json row{{"n", s.n},
             {"pairs", s.m_pairs},
             {"eps", s.eps},
             {"p", s.p},
             {"trials", s.trials},
             {"planted", planted},
             {"mean_edges", s.mean_edges},
             {"mean_x", s.mean_x},
             {"std_x", s.std_x},
             {"mean_y", s.mean_y},
             {"max_x", s.max_x},
             {"max_y", s.max_y},
             {"y_pair_bound_ok", s.y_pair_bound_ok},
             {"exact_mean_x", s.exact_mean_x},
             {"formula_x_low", s.formula_x_low},
             {"formula_y_high", s.formula_y_high}};
    std::ostringstream out;
    out << manifest_line(m) << row.dump() << "\n";
    write_out(c, out.str());
    return 0;
  }
};

// ------------------------------------------------------------ arithmetic

struct ArithmeticCmd {
  Common c;
  std::uint64_t n = 16;
  double a = 30.0;
  double b = 3e7;

  int run() const {
    json cfg{{"n", n}, {"a", a}, {"b", b},
             {"seed", std::to_string(c.seed)}};
    rtg::RunManifest m = make_manifest("arithmetic", cfg, c);
    rtg::ArithmeticParams ap = rtg::arithmetic_params(n, a, b);
    json row{{"n", ap.n},
             {"a", ap.a},
             {"b", ap.b},
             {"f", ap.f},
             {"density", ap.density},
             {"p", ap.p},
             {"k_window", ap.k_window},
             {"window_lo", ap.window_lo},
             {"window_hi", ap.window_hi},
             {"tail_terms", ap.tail_terms},
             {"log_tail_sum", ap.log_tail_sum},
             {"log_majorant", ap.log_majorant},
             {"majorant_holds", ap.majorant_holds}};
    std::ostringstream out;
    out << manifest_line(m) << row.dump() << "\n";
    write_out(c, out.str());
    return 0;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rtg: a desk-scale laboratory for random triangular groups"};
  app.name("rtg");  // stable usage lines regardless of argv[0]
  app.set_version_flag("--version", std::string("rtg ") + rtg::kToolVersion);
  app.require_subcommand(1);

  SampleCmd sample;
  {
    CLI::App* s = app.add_subcommand(
        "sample", "Sample a random presentation and write it out");
    s->add_option("--n", sample.n, "Generator count")->required()->check(CLI::Range(1, 512));
    s->add_option("--p", sample.p, "Inclusion probability per relator")
        ->required();
    s->add_flag("--cyclic", sample.cyclic,
                "Sample rotation classes instead of linear words");
    add_common(s, sample.c);
  }

  DecideCmd decide;
  {
    CLI::App* s = app.add_subcommand(
        "decide", "Decide collapse for a presentation file");
    s->add_option("--input", decide.input, "Presentation file (text or JSON)")
        ->required();
    s->add_option("--max-cosets", decide.max_cosets,
                  "Coset enumeration budget (0 = skip)");
    s->add_option("--cascade", decide.cascade, "Run the cascade stage")
        ->check(CLI::IsMember({"on", "off"}));
    add_common(s, decide.c);
  }

  SweepCmd sweep;
  {
    CLI::App* s = app.add_subcommand(
        "sweep", "Coupled h(n,p) curve over a c-grid; CSV output");
    s->add_option("--n", sweep.n, "Generator count")->required()->check(CLI::Range(1, 512));
    s->add_option("--c", sweep.grid, "Grid lo:hi:step in c units, p = c n^-1.5");
    s->add_option("--trials", sweep.trials, "Trials per grid point");
    s->add_option("--max-cosets", sweep.max_cosets,
                  "Coset budget per trial (0 = monotone stages only)");
    s->add_flag("--cyclic", sweep.cyclic, "Rotation-class slot space");
    add_common(s, sweep.c);
  }

  ThresholdCmd threshold;
  {
    CLI::App* s = app.add_subcommand(
        "threshold", "Bisect for the c where half the samples collapse");
    s->add_option("--n", threshold.n, "Generator count")->required()->check(CLI::Range(1, 512));
    s->add_option("--trials", threshold.trials, "Trials per evaluation");
    s->add_option("--tol", threshold.tol, "Bisection tolerance in c");
    s->add_option("--c-lo", threshold.c_lo, "Initial bracket low end");
    s->add_option("--c-hi", threshold.c_hi, "Initial bracket high end");
    s->add_option("--max-cosets", threshold.max_cosets, "Coset budget");
    s->add_flag("--cyclic", threshold.cyclic, "Rotation-class slot space");
    add_common(s, threshold.c);
  }

  BoostCmd boost;
  {
    CLI::App* s = app.add_subcommand(
        "boost", "Paired comparison of h with and without helper relators");
    s->add_option("--n", boost.n, "Generator count")->required()->check(CLI::Range(2, 512));
    s->add_option("--p", boost.p, "Inclusion probability")->required();
    s->add_option("--eps", boost.eps, "Extra stream rate, relators at eps*p");
    s->add_option("--trials", boost.trials, "Paired trials");
    s->add_option("--max-cosets", boost.max_cosets, "Coset budget");
    s->add_option("--fixed", boost.fixed_path,
                  "Presentation file for R_fixed (default: built-in)");
    s->add_flag("--cyclic", boost.cyclic, "Rotation-class slot space");
    s->add_flag("--records", boost.records, "Emit one JSONL row per trial");
    add_common(s, boost.c);
  }

  DavkdEnumCmd davkd_enum;
  {
    CLI::App* s = app.add_subcommand(
        "davkd-enum", "Enumerate decorated diagrams as JSONL");
    s->add_option("--m", davkd_enum.m_faces, "Face count")->required();
    s->add_option("--mode", davkd_enum.mode, "raw or canonical")
        ->check(CLI::IsMember({"raw", "canonical"}));
    s->add_option("--limit", davkd_enum.limit, "Stop after this many rows (0 = all)");
    s->add_flag("--count-only", davkd_enum.count_only,
                "Print the count instead of the diagrams");
    add_common(s, davkd_enum.c);
  }

  DavkdCheckCmd davkd_check;
  {
    CLI::App* s = app.add_subcommand(
        "davkd-check", "Analyze one diagram: constraint graphs, bounds");
    s->add_option("--input", davkd_check.input, "Diagram JSON file")
        ->required();
    s->add_option("--f", davkd_check.f_str,
                  "Exponent f as a decimal (exact rational arithmetic)");
    s->add_option("--n", davkd_check.n,
                  "Generator count for fulfillability bounds")
        ->check(CLI::Range(0, 512));
    s->add_option("--p", davkd_check.p,
                  "Relator probability for fulfillability bounds");
    s->add_flag("--exact", davkd_check.exact,
                "Also compute the exact fulfillability probability");
    add_common(s, davkd_check.c);
  }

  ZgraphCmd zgraph;
  {
    CLI::App* s = app.add_subcommand(
        "zgraph", "Z-graph statistics of sampled presentations");
    s->add_option("--n", zgraph.n, "Generator count")->required()->check(CLI::Range(1, 512));
    s->add_option("--p", zgraph.p, "Inclusion probability")->required();
    s->add_option("--z-gens", zgraph.z_gens,
                  "Z = generators 1..k closed under inversion");
    s->add_option("--trials", zgraph.trials, "Samples (seed, seed+1, ...)");
    s->add_flag("--cyclic", zgraph.cyclic, "Rotation-class slot space");
    add_common(s, zgraph.c);
  }

  PathsCmd paths;
  {
    CLI::App* s = app.add_subcommand(
        "paths", "Length-two path statistics in the planted-pair graph");
    s->add_option("--n", paths.n, "Generator count")->required()->check(CLI::Range(1, 512));
    s->add_option("--pairs", paths.pairs, "Planted pair count |M|");
    s->add_option("--eps", paths.eps, "Epsilon")->required();
    s->add_option("--p", paths.p, "Base probability")->required();
    s->add_option("--trials", paths.trials, "Trials");
    add_common(s, paths.c);
  }

  ArithmeticCmd arithmetic;
  {
    CLI::App* s = app.add_subcommand(
        "arithmetic", "Exponent, window and tail-sum arithmetic at a given n");
    s->add_option("--n", arithmetic.n, "Group size parameter (n >= 16)")
        ->required();
    s->add_option("--a", arithmetic.a, "Diagram-count base constant");
    s->add_option("--b", arithmetic.b, "Tail majorant constant");
    add_common(s, arithmetic.c);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("sample")) return sample.run();
    if (app.got_subcommand("decide")) return decide.run();
    if (app.got_subcommand("sweep")) return sweep.run();
    if (app.got_subcommand("threshold")) return threshold.run();
    if (app.got_subcommand("boost")) return boost.run();
    if (app.got_subcommand("davkd-enum")) return davkd_enum.run();
    if (app.got_subcommand("davkd-check")) return davkd_check.run();
    if (app.got_subcommand("zgraph")) return zgraph.run();
    if (app.got_subcommand("paths")) return paths.run();
    if (app.got_subcommand("arithmetic")) return arithmetic.run();
  } catch (const rtg::NoBracket& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const rtg::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
