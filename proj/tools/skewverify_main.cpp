#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "skewverify/braid.hpp"
#include "skewverify/spec_io.hpp"
#include "skewverify/suite.hpp"

using namespace skewverify;

namespace {

constexpr int kInputError = 2;
constexpr int kInternalError = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a path if one exists, otherwise a bundled fixture name
BialgebraSpec load(const std::string& spec) {
  std::string path = spec;
  if (!std::filesystem::exists(path)) {
    const auto& names = fixture_names();
    if (std::find(names.begin(), names.end(), spec) == names.end()) {
      throw InputError("no spec file or fixture named '" + spec + "'");
    }
    path = fixture_path(spec);
  }
  if (!std::ifstream(path)) throw InputError("cannot read '" + path + "'");
  return parse_spec(path);
}

std::array<std::size_t, 4> parse_dims(const std::string& text) {
  std::array<std::size_t, 4> d{};
  std::stringstream ss(text);
  std::string part;
  std::size_t k = 0;
  while (std::getline(ss, part, ',')) {
    if (k == 4) throw ValidationError("--probe-dims takes four numbers");
    try {
      std::size_t used = 0;
      const long v = std::stol(part, &used);
      if (used != part.size() || v < 0) throw std::invalid_argument(part);
      d[k++] = static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
      throw ValidationError("bad probe dimension '" + part + "'");
    }
  }
  if (k != 4) throw ValidationError("--probe-dims takes four numbers");
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for braided skew monoidal structures on Vect[B]"};
  app.require_subcommand(1);

  std::string spec_arg, dims_arg = "1,1,1,1", format_arg = "human";
  SuiteConfig cfg;
  auto* check = app.add_subcommand("check", "Run a checker suite on a bialgebra spec");
  check->add_option("--spec", spec_arg, "Spec JSON file or bundled fixture name")->required();
  check->add_option("--suite", cfg.suite, "Suite id")->check(CLI::IsMember(suite_ids()))->capture_default_str();
  check->add_option("--probe-dims", dims_arg, "Probe generator dimensions d1,d2,d3,d4 (each 1.." +
                                                  std::to_string(kMaxProbeDim) + ")")
      ->capture_default_str();
  check->add_option("--seed", cfg.seed, "Seed for random probe maps")->capture_default_str();
  check->add_option("--format", format_arg, "Report format")
      ->check(CLI::IsMember({"human", "json"}))
      ->capture_default_str();
  check->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  check->add_flag("--timing", cfg.timing, "Include elapsed times (output is then not reproducible)");

  auto* fixtures = app.add_subcommand("fixtures", "Bundled fixture gallery");
  fixtures->require_subcommand(1);
  auto* list = fixtures->add_subcommand("list", "List fixtures");

  auto* braid = app.add_subcommand("braid", "Braid group utilities");
  braid->require_subcommand(1);
  std::string w1, w2;
  auto* eq = braid->add_subcommand("eq", "Decide whether two braid words are equal");
  eq->add_option("first", w1, "\"<strands>: i -j ...\"")->required();
  eq->add_option("second", w2, "\"<strands>: i -j ...\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  try {
    if (*check) {
      cfg.probe_dims = parse_dims(dims_arg);
      cfg.format = format_arg == "json" ? OutputFormat::json : OutputFormat::human;
      const BialgebraSpec spec = load(spec_arg);
      const SuiteRun run = run_suite(spec, cfg);
      std::cout << (cfg.format == OutputFormat::json ? render_json(spec, cfg, run) : render_human(spec, cfg, run));
      return run.exit_code;
    }
    if (*list) {
      for (const auto& n : fixture_names()) {
        const BialgebraSpec s = load(n);
        std::cout << n << "  dim " << s.bialgebra.dim() << "  " << s.field().name()
                  << (s.has_cobraiding() ? "  with r" : "") << "\n";
      }
      return 0;
    }
    if (*eq) {
      const BraidWord a = BraidWord::parse(w1), b = BraidWord::parse(w2);
      const bool same = braid_equal(a, b);
      std::cout << (same ? "equal" : "different") << "\n";
      if (!same) {
        std::cout << "  permutations " << braid_to_perm(a).to_string() << " and " << braid_to_perm(b).to_string()
                  << "\n";
      }
      return same ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInputError;
  } catch (const BraidError& e) {
    std::cerr << "invalid braid: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return 0;
}
