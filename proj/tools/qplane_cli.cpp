// qplane: batch driver for the verification suites.
//
// Exit status: 2 on usage or parse errors, 1 if any check failed, 0 otherwise.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qplane/ansatz.hpp"
#include "qplane/coalgebra.hpp"
#include "qplane/covariance.hpp"
#include "qplane/parser.hpp"
#include "qplane/presentations.hpp"
#include "qplane/series_oracle.hpp"
#include "qplane/suites.hpp"

using namespace qplane;

namespace {

constexpr int kUsage = 2;

const char* kLegend =
    "generator names:\n"
    "  X, Y        Lie algebra generators, [X, Y] = h Y\n"
    "  dX, dY      differentials of X and Y (odd)\n"
    "  pX, pY      partial derivatives\n"
    "  w1, w2      invariant one-forms (odd)\n"
    "  eX, eXi     e^X and e^-X\n"
    "  T1, T2      vector fields; G, Gi the group-like 1 + (E^-1 - 1) T1 and its inverse\n"
    "  H, N        dual generators, [H, N] = H; K, Ki for e^{hN} and e^{-hN}\n"
    "scalars: integers, h, E (= e^h), E^-1, + - * / ^ and parentheses; '@' separates tensor slots\n";

struct Globals {
  std::string json_path;
  std::uint64_t seed = 42;
  bool timing = false;
  bool verbose = false;
};

void print_diagnostic(const std::string& text, std::size_t offset, std::size_t length, const std::string& what) {
  std::cerr << "error: " << what << "\n  " << text << "\n  " << std::string(std::min(offset, text.size()), ' ')
            << std::string(std::max<std::size_t>(length, 1), '^') << "\n";
}

int finish(const std::vector<CheckReport>& reports, const Globals& g) {
  for (const auto& r : reports) std::cout << r.to_text(g.verbose);
  std::size_t fails = 0, findings = 0, passes = 0;
  double ms = 0;
  for (const auto& r : reports) {
    fails += r.count(Status::Fail);
    findings += r.count(Status::Finding);
    passes += r.count(Status::Pass);
    ms += r.timing_ms;
  }
  if (reports.size() > 1) {
    std::cout << "total: " << passes << " passed, " << fails << " failed, " << findings << " findings";
    if (g.timing) std::cout << " in " << static_cast<long>(ms) << " ms";
    std::cout << "\n";
  }
  if (!g.json_path.empty()) {
    CheckReport out = reports.size() == 1 ? reports.front() : merge_reports("check-all", reports);
    std::ofstream f(g.json_path);
    if (!f) {
      std::cerr << "error: cannot write " << g.json_path << "\n";
      return kUsage;
    }
    f << out.to_json(g.timing);
  }
  return fails ? 1 : 0;
}

int run_normalize(const std::string& name, const std::string& text) {
  auto p = get_presentation(name);
  ParsedExpr e = parse(text, *p);
  if (auto* a = std::get_if<AlgElement>(&e)) {
    std::cout << format(p->normalize(*a), *p) << "\n";
  } else {
    std::cout << format(tensor_normalize(std::get<TensorElement>(e), slot_algebra(p)), *p) << "\n";
  }
  return 0;
}

std::string system_text(const ConstraintSystem& s) { return s.to_text(); }

int run_solve_ansatz(const Globals& g) {
  auto cons = generate_consistency_system();
  auto combined = generate_covariance_system(cons, PhiVariant::Derived);
  std::cout << "ansatz:\n"
               "  X dX = A11 dX X + B1 dX + B2 dY      X dY = A12 dY X + B3 dX + B4 dY\n"
               "  Y dX = A21 dX Y + B5 dX + B6 dY      Y dY = A22 dY Y + B7 dX + B8 dY\n"
               "  auxiliary: eXi dX = S11 dX eXi + S12 dY eXi, eXi dY = S21 dX eXi + S22 dY eXi\n\n";
  std::cout << "consistency system (" << cons.size() << " constraints):\n" << system_text(cons) << "\n";
  ConstraintSystem cov(combined);
  cov.constraints.erase(cov.constraints.begin(), cov.constraints.begin() + static_cast<std::ptrdiff_t>(cons.size()));
  std::cout << "covariance system (" << cov.size() << " constraints):\n" << system_text(cov) << "\n";
  std::cout << "printed intermediate system vs generated:\n";
  auto sol = complete_assignment(solution_assignment());
  for (const auto& [text, value] : printed_intermediate_system()) {
    Scalar at = value.evaluate(sol);
    std::cout << "  " << text << "    " << (cons.spans(value) ? "generated" : "NOT generated") << ", "
              << (at.is_zero() ? "holds at the solution" : "violated at the solution: " + at.to_string()) << "\n";
  }
  std::cout << "\nsolution: A11 = A12 = A21 = 1, A22 = E, B1 = B6 = -h, other B = 0";
  std::cout << " (S11 = " << sol.at("S11").to_string() << ", S22 = " << sol.at("S22").to_string() << ")\n";
  auto v = verify_solution(combined, solution_assignment());
  std::cout << "verdict: " << (v.ok() ? "satisfies" : "violates") << " all " << combined.size() << " constraints\n\n";
  return finish({ansatz_suite()}, g);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the differential calculus on the h-deformed Lie algebra [X, Y] = hY"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--json", g.json_path, "write the report as JSON to PATH");
  app.add_option("--seed", g.seed, "seed for sampled elements");
  app.add_flag("--timing", g.timing, "report wall-clock timings (also in JSON)");
  app.add_flag("-v,--verbose", g.verbose, "list passing checks too");

  std::string pres, expr, phiL = "both";
  int max_deg = 4, samples = 100, cutoff = 6;

  auto* check_all_cmd = app.add_subcommand("check-all", "run every suite");
  auto* normalize_cmd = app.add_subcommand("normalize", "print the normal form of an element or tensor");
  normalize_cmd->add_option("-p,--presentation", pres, "presentation name")->required();
  normalize_cmd->add_option("expr", expr, "expression")->required();
  auto* confluence_cmd = app.add_subcommand("confluence", "local confluence through a degree");
  confluence_cmd->add_option("-p,--presentation", pres, "presentation name")->required();
  confluence_cmd->add_option("--max-deg", max_deg, "largest overlap degree")->check(CLI::Range(2, 8));
  auto* hopf_cmd = app.add_subcommand("hopf", "Hopf algebra axioms");
  hopf_cmd->add_option("-p,--presentation", pres, "LIE, FORMS, VECT or HN")->required();
  hopf_cmd->add_option("--samples", samples, "number of random elements")->check(CLI::Range(0, 100000));
  auto* gamma_cmd = app.add_subcommand("gamma-hopf", "graded Hopf structure on the first-order calculus");
  auto* cov_cmd = app.add_subcommand("covariance", "bicovariance of the first-order calculus");
  cov_cmd->add_option("--phiL", phiL, "left coaction of dY")->check(CLI::IsMember({"printed", "derived", "both"}));
  auto* ansatz_cmd = app.add_subcommand("solve-ansatz", "generate and verify the coefficient constraints");
  auto* oracle_cmd = app.add_subcommand("oracle", "truncated-series validation");
  oracle_cmd->add_option("--cutoff", cutoff, "grade cutoff")->check(CLI::Range(1, 12));
  auto* list_cmd = app.add_subcommand("list-presentations", "alphabets and rules of every presentation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*check_all_cmd) {
      CheckAllOptions o;
      o.seed = g.seed;
      return finish(check_all(o), g);
    }
    if (*normalize_cmd) return run_normalize(pres, expr);
    if (*confluence_cmd) {
      auto r = check_confluence(*get_presentation(pres), max_deg);
      return finish({r}, g);
    }
    if (*hopf_cmd) {
      if (pres != "LIE" && pres != "LIE_EXP" && pres != "FORMS" && pres != "VECT" && pres != "HN") {
        get_presentation(pres);
        std::cerr << "error: no Hopf tables for " << pres << " (available: LIE, FORMS, VECT, HN)\n";
        return kUsage;
      }
      if (pres == "LIE") std::cout << "(LIE is checked on LIE_EXP, which adjoins e^X and e^-X)\n";
      return finish({hopf_suite(pres, samples, g.seed)}, g);
    }
    if (*gamma_cmd) return finish({graded_hopf_gamma(true, 40, g.seed)}, g);
    if (*cov_cmd) return finish({covariance_suite(phiL != "derived", phiL != "printed", 40, g.seed)}, g);
    if (*ansatz_cmd) return run_solve_ansatz(g);
    if (*oracle_cmd) return finish({run_oracle_suite(cutoff)}, g);
    if (*list_cmd) {
      std::cout << kLegend << "\n" << catalog_table();
      return 0;
    }
  } catch (const ParseError& e) {
    print_diagnostic(expr, e.offset, e.length, e.what());
    return kUsage;
  } catch (const ForeignSymbol& e) {
    print_diagnostic(expr, e.offset, e.length, e.what());
    return kUsage;
  } catch (const UnknownPresentation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
