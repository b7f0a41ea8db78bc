// Command-line front end: generate masses, classify regimes, construct and
// verify covers, and render SVG diagrams.
//
// Exit codes: 0 = pass/cover, 1 = fail/infeasible, 2 = error, 3 = unknown.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "equicover/equicover.hpp"

namespace {

using namespace equicover;

int parse_threads_cap() {
  // EQUICOVER_THREADS caps internal parallelism; all library routines are
  // sequential, so any positive cap is honored as-is.
  const char* env = std::getenv("EQUICOVER_THREADS");
  if (env == nullptr) return 0;
  const int n = std::atoi(env);
  return n > 0 ? n : 0;
}

struct GenArgs {
  std::string kind;
  std::uint64_t seed = 1;
  int k = 5;
  double epsilon = 0.01;
  std::string out = "mass.json";
};

int run_gen(const GenArgs& args) {
  Mass mass;
  if (args.kind == "square") {
    mass = uniform_square();
  } else if (args.kind == "random") {
    mass = random_mass(args.seed, args.k);
  } else if (args.kind == "tight") {
    mass = tight_mass(args.epsilon);
  } else {
    throw std::invalid_argument("gen: kind must be square, random or tight");
  }
  save_json(args.out, mass_to_json(mass));
  std::cout << "wrote " << args.out << "\n";
  return 0;
}

struct ConstructArgs {
  std::string mass_path;
  int p = 0, q = 0;
  std::string budget = "12x16";
  double hline_angle = 0.0;
  double tol = 1e-8;
  bool nonspiral = false;
  long samples = 10000;
  std::uint64_t seed = 20240901;
  std::string out = "cover.json";
  std::string report;
};

SearchBudget parse_budget(const std::string& text) {
  const auto x = text.find('x');
  if (x == std::string::npos) throw std::invalid_argument("budget must look like 50x64");
  SearchBudget budget;
  budget.apexes = std::stoi(text.substr(0, x));
  budget.angles = std::stoi(text.substr(x + 1));
  if (budget.apexes < 1 || budget.angles < 1) {
    throw std::invalid_argument("budget entries must be positive");
  }
  return budget;
}

int run_construct(const ConstructArgs& args) {
  const Mass mass = load_mass(args.mass_path);
  const std::string report_path = args.report.empty() ? args.out + ".report.json" : args.report;

  if (args.nonspiral) {
    if (args.p != 3 || args.q != 8) {
      throw std::invalid_argument("--nonspiral supports only p=3 q=8");
    }
    const NonSpiral83 result =
        construct_83(mass, args.hline_angle, args.tol, args.samples, args.seed);
    save_json(args.out, cover_to_json(result.cover));
    const VerifyReport report =
        verify_general(mass, result.cover, args.tol, args.samples, args.seed);
    save_json(report_path, report_to_json(report));
    std::cout << "non-spiral (8,3) cover written to " << args.out << "\n";
    return report.passed() ? 0 : 1;
  }

  const ConstructResult result =
      construct(mass, args.p, args.q, parse_budget(args.budget), args.tol);
  std::cout << "regime: " << to_string(result.regime) << "\n";
  switch (result.outcome) {
    case ConstructOutcome::Infeasible:
      std::cout << "infeasible: " << result.reason << "\n";
      return 1;
    case ConstructOutcome::Unknown: {
      std::cout << "unknown: " << result.reason << "\n";
      json j{{"outcome", "unknown"},
             {"reason", result.reason},
             {"attempts", result.search ? result.search->attempts : 0},
             {"min_worst_sweep",
              result.search ? result.search->min_worst_sweep : 0.0}};
      save_json(report_path, j);
      return 3;
    }
    case ConstructOutcome::Cover: {
      save_json(args.out, cover_to_json(*result.cover));
      const VerifyReport report = verify_spiral(mass, *result.cover, args.tol);
      save_json(report_path, report_to_json(report));
      std::cout << "cover written to " << args.out << " (" << result.reason << ")\n";
      return report.passed() ? 0 : 1;
    }
  }
  return 2;
}

struct VerifyArgs {
  std::string mass_path, cover_path;
  long samples = 10000;
  std::uint64_t seed = 20240901;
  double tol = 1e-8;
};

int run_verify(const VerifyArgs& args) {
  const Mass mass = load_mass(args.mass_path);
  const CoverFile cover = load_cover(args.cover_path);
  const VerifyReport report = std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, SpiralCover>) {
          return verify_spiral(mass, c, args.tol);
        } else {
          return verify_general(mass, c, args.tol, args.samples, args.seed);
        }
      },
      cover);
  std::cout << report_to_json(report).dump(2) << "\n";
  return report.passed() ? 0 : 1;
}

struct RenderArgs {
  std::string mass_path, cover_path;
  std::string out = "cover.svg";
};

int run_render(const RenderArgs& args) {
  const Mass mass = load_mass(args.mass_path);
  std::string svg;
  if (args.cover_path.empty()) {
    svg = render_svg(mass);
  } else {
    const CoverFile cover = load_cover(args.cover_path);
    svg = std::visit([&](const auto& c) { return render_svg(mass, c); }, cover);
  }
  write_text_file(args.out, svg);
  std::cout << "wrote " << args.out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  (void)parse_threads_cap();
  CLI::App app{"equicover: spiral and non-spiral equicoverings of planar masses"};
  app.require_subcommand(1);

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "generate a mass file");
  gen->add_option("kind", gen_args.kind, "square | random | tight")->required();
  gen->add_option("--seed", gen_args.seed, "seed for random masses");
  gen->add_option("--k", gen_args.k, "number of polygons for random masses");
  gen->add_option("--epsilon", gen_args.epsilon, "cluster half-size for tight masses");
  gen->add_option("--out", gen_args.out, "output path");

  int cp = 0, cq = 0;
  CLI::App* classify = app.add_subcommand("classify", "print the regime of (p, q)");
  classify->add_option("--p", cp)->required();
  classify->add_option("--q", cq)->required();

  ConstructArgs con_args;
  CLI::App* con = app.add_subcommand("construct", "construct a (q,p) equicovering");
  con->add_option("--mass", con_args.mass_path)->required();
  con->add_option("--p", con_args.p)->required();
  con->add_option("--q", con_args.q)->required();
  con->add_option("--budget", con_args.budget, "heuristic budget, apexes x angles");
  con->add_option("--hline-angle", con_args.hline_angle, "halving line direction (non-spiral)");
  con->add_option("--tol", con_args.tol, "measure tolerance");
  con->add_flag("--nonspiral", con_args.nonspiral, "build the non-spiral (8,3) cover");
  con->add_option("--samples", con_args.samples, "samples for sampled verification");
  con->add_option("--seed", con_args.seed, "sampling seed");
  con->add_option("--out", con_args.out, "cover output path");
  con->add_option("--report", con_args.report, "report output path");

  VerifyArgs ver_args;
  CLI::App* ver = app.add_subcommand("verify", "verify a cover file against a mass");
  ver->add_option("--mass", ver_args.mass_path)->required();
  ver->add_option("--cover", ver_args.cover_path)->required();
  ver->add_option("--samples", ver_args.samples);
  ver->add_option("--seed", ver_args.seed);
  ver->add_option("--tol", ver_args.tol);

  RenderArgs ren_args;
  CLI::App* ren = app.add_subcommand("render", "render a mass (and cover) as SVG");
  ren->add_option("--mass", ren_args.mass_path)->required();
  ren->add_option("--cover", ren_args.cover_path);
  ren->add_option("--out", ren_args.out);

  try {
    app.parse(argc, argv);
    if (gen->parsed()) return run_gen(gen_args);
    if (classify->parsed()) {
      std::cout << cp << "/" << cq << " -> " << to_string(classify_regime(cp, cq)) << "\n";
      return 0;
    }
    if (con->parsed()) return run_construct(con_args);
    if (ver->parsed()) return run_verify(ver_args);
    if (ren->parsed()) return run_render(ren_args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
