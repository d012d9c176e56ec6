// Command-line interface for the ramification / depth toolkit.
//
// Subcommands
//   conductor  per-character conductors, kernels and kernel depths
//   depth      kernel depths, Weil-Deligne conductor/depth, projective depths
//   herbrand   filtration table with the transition function and its inverse
//   factors    closed local factors of twisted Steinberg shape in U = q^{-s}
//   jl         inner-form transfer on segment data, or a bounded sweep
//   proj       projective-kernel reports and minimal twist depths
//   verify     every stored expectation plus the built-in invariant suites
//
// Exit codes: 0 all checks pass, 1 at least one check failed, 2 input error.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "ramdepth/checks.hpp"

namespace {

using namespace ramdepth;

struct Options {
  std::string fixture;
  std::string corpus;
  long max_nd = 12;
  long psi_level = -1;
  bool json = false;
};

void add_common(CLI::App* cmd, Options& opt, bool wants_fixture = true) {
  if (wants_fixture) {
    cmd->add_option("--fixture", opt.fixture, "fixture file to load");
    cmd->add_option("--corpus", opt.corpus, "directory of fixture files (*.json)");
  }
  cmd->add_option("--max-nd", opt.max_nd, "bound on a*d for transfer sweeps")
      ->default_val(12);
  cmd->add_option("--psi-level", opt.psi_level,
                  "additive character level for local factors")
      ->default_val(-1);
  cmd->add_flag("--json", opt.json, "emit a JSON report instead of text");
}

std::vector<std::string> fixture_paths(const Options& opt, bool required) {
  std::vector<std::string> paths;
  if (!opt.fixture.empty()) paths.push_back(opt.fixture);
  if (!opt.corpus.empty()) {
    require(std::filesystem::is_directory(opt.corpus), "SchemaError",
            "corpus path is not a directory: " + opt.corpus);
    for (const auto& entry : std::filesystem::directory_iterator(opt.corpus))
      if (entry.is_regular_file() && entry.path().extension() == ".json")
        paths.push_back(entry.path().string());
    std::sort(paths.begin(), paths.end());
  }
  if (required)
    require(!paths.empty(), "SchemaError",
            "no input: pass --fixture FILE or --corpus DIR");
  return paths;
}

// Collects human-readable detail lines next to the structured check results.
struct Output {
  explicit Output(bool as_json) : json(as_json) {}
  bool json;
  Json details = Json::array();
  CheckReport report;

  void line(const std::string& s) {
    details.push_back(s);
    if (!json) std::cout << s << "\n";
  }

  int finish() {
    if (json) {
      Json out;
      out["details"] = details;
      out["checks"] = report.to_json();
      out["failures"] = report.failures();
      out["pass"] = report.all_pass();
      std::cout << out.dump(2) << "\n";
    } else {
      for (const auto& r : report.results) {
        if (r.pass)
          std::cout << "[ ok ] " << r.name << " = " << r.computed << "\n";
        else
          std::cout << "[FAIL] " << r.name << " = " << r.computed
                    << " (expected " << r.expected << ")\n";
      }
      std::cout << report.results.size() << " checks, " << report.failures()
                << " failures\n";
    }
    return report.all_pass() ? 0 : 1;
  }
};

std::string describe_group(const FixtureDocument& doc) {
  if (!doc.fg) return doc.name + ": no group section";
  std::string s = doc.name + ": group order " +
                  std::to_string(doc.fg->group().order()) + ", inertia order " +
                  std::to_string(doc.fg->inertia_order());
  if (doc.fg->residual_char())
    s += ", residual characteristic " + std::to_string(*doc.fg->residual_char());
  return s;
}

int cmd_conductor(const Options& opt) {
  Output out(opt.json);
  for (const std::string& path : fixture_paths(opt, true)) {
    FixtureDocument doc = load_fixture(path);
    out.line(describe_group(doc));
    if (doc.fg) {
      for (const auto& [name, chi] : doc.characters) {
        Subgroup k = kernel_of(chi);
        out.line("  " + name + ": degree " + std::to_string(chi.degree()) +
                 ", conductor " + std::to_string(artin_conductor(*doc.fg, chi)) +
                 ", kernel order " + std::to_string(k.size()) + ", kernel depth " +
                 rat_str(depth_of_kernel(*doc.fg, k)));
      }
    }
    out.report.merge(run_expectations(
        doc, {"conductor/", "depth_kernel/", "degree/", "kernel_order/", "dim_fixed/"}));
  }
  return out.finish();
}

int cmd_depth(const Options& opt) {
  Output out(opt.json);
  for (const std::string& path : fixture_paths(opt, true)) {
    FixtureDocument doc = load_fixture(path);
    out.line(describe_group(doc));
    if (doc.fg)
      for (const auto& [name, chi] : doc.characters)
        out.line("  character " + name + ": kernel depth " +
                 rat_str(depth_of_kernel(*doc.fg, kernel_of(chi))));
    for (const auto& spec : doc.parameters) {
      if (spec.kind == "wd") {
        WDParameter phi = doc.wd_parameter(spec);
        out.line("  parameter " + spec.name + ": dim " + std::to_string(phi.dim()) +
                 ", conductor " + std::to_string(conductor_wd(phi)) + ", depth " +
                 rat_str(depth_wd(phi)));
      } else {
        ProjectiveKernelReport rep = depth_projective(doc.monomial_parameter(spec));
        out.line("  parameter " + spec.name + ": depth " + rat_str(rep.depth_bar) +
                 ", projective depth " + rat_str(rep.depth_proj));
      }
    }
    out.report.merge(run_expectations(doc, {"depth_kernel/", "wd/", "proj/"}));
  }
  return out.finish();
}

int cmd_herbrand(const Options& opt) {
  Output out(opt.json);
  for (const std::string& path : fixture_paths(opt, true)) {
    FixtureDocument doc = load_fixture(path);
    out.line(describe_group(doc));
    if (doc.fg) {
      const FilteredGroup& fg = *doc.fg;
      std::string orders = "  lower filtration orders:";
      for (const Subgroup& level : fg.levels())
        orders += " " + std::to_string(level.size());
      out.line(orders);
      for (long i = 0; i <= fg.deepest_stored() + 1; ++i) {
        Rat l = herbrand_phi(fg, Rat(i));
        out.line("  phi(" + std::to_string(i) + ") = " + rat_str(l) + ", psi(" +
                 rat_str(l) + ") = " + rat_str(herbrand_psi(fg, l)) + ", |G^" +
                 rat_str(l) + "| = " + std::to_string(upper_subgroup(fg, l).size()));
      }
    }
    out.report.merge(run_expectations(
        doc, {"phi/", "psi/", "upper_order/", "lower_order/", "inertia_order",
              "group_order", "num_classes"}));
  }
  return out.finish();
}

int cmd_factors(const Options& opt) {
  Output out(opt.json);
  for (long n = 1; n <= 4; ++n) {
    SteinbergFactors f = steinberg_factors(n, cs_z(), opt.psi_level);
    out.line("steinberg n=" + std::to_string(n) + " (psi level " +
             std::to_string(opt.psi_level) + ")");
    out.line("  L      = " + render_l(f.l));
    out.line("  L_dual = " + render_l(f.l_dual));
    out.line("  eps    = " + render_eps(f.eps));
    out.line("  gamma  = " + render_gamma(f.gamma));
  }
  for (const std::string& path : fixture_paths(opt, false)) {
    FixtureDocument doc = load_fixture(path);
    out.report.merge(run_expectations(doc, {"steinberg/"}));
  }
  return out.finish();
}

int cmd_jl(const Options& opt) {
  Output out(opt.json);
  std::vector<std::string> paths = fixture_paths(opt, false);
  if (paths.empty()) {
    out.line("transfer sweep over a*d <= " + std::to_string(opt.max_nd) +
             ", b <= 4, depth numerator <= 6");
    out.report.merge(transfer_sweep_report(opt.max_nd, 4, 6));
    return out.finish();
  }
  for (const std::string& path : paths) {
    FixtureDocument doc = load_fixture(path);
    out.line(doc.name + ": " + std::to_string(doc.segments.size()) + " segments");
    for (std::size_t i = 0; i < doc.segments.size(); ++i) {
      const EssL2Datum& e = doc.segments[i];
      PreservationReport rep = verify_depth_preservation(e);
      out.line("  segment " + std::to_string(i) + ": n=" + std::to_string(e.form.n) +
               " d=" + std::to_string(e.form.d) + " b=" + std::to_string(e.b) +
               ": f = " + std::to_string(rep.f_pi) + ", depth = " + rat_str(rep.d_pi) +
               "; transfer f = " + std::to_string(rep.f_parameter) + ", depth = " +
               rat_str(rep.d_parameter) +
               (rep.pass ? " (depth preserved)" : " (MISMATCH)"));
    }
    out.report.merge(run_expectations(doc, {"segment/"}));
  }
  return out.finish();
}

int cmd_proj(const Options& opt) {
  Output out(opt.json);
  for (const std::string& path : fixture_paths(opt, true)) {
    FixtureDocument doc = load_fixture(path);
    out.line(describe_group(doc));
    for (const auto& spec : doc.parameters) {
      if (spec.kind != "monomial") continue;
      MonomialParameter mp = doc.monomial_parameter(spec);
      ProjectiveKernelReport rep = depth_projective(mp);
      TwistSearchResult tw = min_twist_depth(mp);
      out.line("  parameter " + spec.name + ": lift degree " +
               std::to_string(rep.lift.degree()) + ", depth " + rat_str(rep.depth_bar) +
               ", projective depth " + rat_str(rep.depth_proj) +
               (rep.strict ? " (strictly smaller)" : ""));
      out.line("    essentially tame: " + std::string(tw.essentially_tame ? "yes" : "no") +
               "; minimal twist depth " + rat_str(tw.min_depth) + " at twist " +
               std::to_string(tw.twist_index) + " of " + std::to_string(tw.twist_count));
    }
    out.report.merge(run_expectations(doc, {"proj/"}));
  }
  return out.finish();
}

CheckResult roundtrip_check(const FixtureDocument& doc) {
  Json once = fixture_to_json(doc);
  Json twice = fixture_to_json(fixture_from_json(once));
  return CheckResult{doc.name + ":roundtrip", once == twice ? "stable" : "unstable",
                     "stable", "serialize, reparse and reserialize the document",
                     once == twice};
}

int cmd_verify(const Options& opt) {
  Output out(opt.json);
  std::vector<std::string> paths = fixture_paths(opt, false);
  for (const std::string& path : paths) {
    FixtureDocument doc = load_fixture(path);
    out.line("fixture " + path + ": " + std::to_string(doc.expect.size()) +
             " expectations");
    out.report.results.push_back(roundtrip_check(doc));
    out.report.merge(run_expectations(doc));
  }
  if (!opt.corpus.empty() || paths.empty()) {
    out.line("running built-in invariant suites");
    out.report.merge(run_octahedral_checks());
    out.report.merge(run_lemma_checks(standard_fixture_pool()));
    out.report.merge(run_tame_twist_checks());
    out.report.merge(run_steinberg_checks());
    out.report.merge(run_property_checks());
    out.report.merge(transfer_sweep_report(opt.max_nd, 4, 6));
  }
  return out.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact ramification filtrations, conductors, depths and local factors"};
  app.require_subcommand(1);

  Options opt;
  CLI::App* conductor = app.add_subcommand("conductor", "character conductors and kernel depths");
  CLI::App* depth = app.add_subcommand("depth", "depths of characters and parameters");
  CLI::App* herbrand = app.add_subcommand("herbrand", "filtration transition tables");
  CLI::App* factors = app.add_subcommand("factors", "closed local factors in U = q^{-s}");
  CLI::App* jl = app.add_subcommand("jl", "inner-form transfer on segment data");
  CLI::App* proj = app.add_subcommand("proj", "projective kernels and twist search");
  CLI::App* verify = app.add_subcommand("verify", "all expectations and invariant suites");
  for (CLI::App* cmd : {conductor, depth, herbrand, jl, proj, verify})
    add_common(cmd, opt);
  add_common(factors, opt, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (conductor->parsed()) return cmd_conductor(opt);
    if (depth->parsed()) return cmd_depth(opt);
    if (herbrand->parsed()) return cmd_herbrand(opt);
    if (factors->parsed()) return cmd_factors(opt);
    if (jl->parsed()) return cmd_jl(opt);
    if (proj->parsed()) return cmd_proj(opt);
    if (verify->parsed()) return cmd_verify(opt);
  } catch (const ramdepth::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
