#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sylowlab/catalog.hpp"
#include "sylowlab/error.hpp"
#include "sylowlab/ratio.hpp"
#include "sylowlab/report.hpp"

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInternal = 3;

struct Arguments {
  std::string group;
  std::string subgroup;
  std::string element;
  std::string edge_list;
  std::vector<std::uint64_t> primes;
  std::vector<std::uint64_t> pi;
  std::string f = "1/2";
  std::size_t m = 1;
  std::size_t n = 1;
  std::size_t k = 1;
  std::size_t cap = 0;
  std::size_t lattice_cap = 0;
  bool parallel = false;
  std::string json_path;
};

void add_common_options(CLI::App* cmd, Arguments& args) {
  cmd->add_option("--group,-g", args.group, "group expression, or @FILE with one generator per line");
  cmd->add_option("--sub,-s", args.subgroup, "subgroup expression, or @FILE");
  cmd->add_option("-p,--prime", args.primes, "prime (repeatable)");
  cmd->add_option("--pi", args.pi, "set of primes, comma separated")->delimiter(',');
  cmd->add_option("--element,-x", args.element, "element in cycle notation");
  cmd->add_option("--edge-list", args.edge_list, "edge-list file for turan");
  cmd->add_option("--f", args.f, "threshold fraction for conjecture-d")->capture_default_str();
  cmd->add_option("-m", args.m, "left part size for c-pi")->capture_default_str();
  cmd->add_option("-n", args.n, "right part size for c-pi, or set size for subset-fpr")
      ->capture_default_str();
  cmd->add_option("-k", args.k, "subset size for subset-fpr")->capture_default_str();
  cmd->add_option("--cap", args.cap, "maximum group order for element enumeration");
  cmd->add_option("--lattice-cap", args.lattice_cap, "maximum group order for subgroup lattices");
  cmd->add_flag("--parallel", args.parallel, "evaluate independent report items concurrently");
  cmd->add_option("--json", args.json_path, "write the JSON report to PATH ('-' for stdout)");
}

sylowlab::CheckOptions to_options(const Arguments& args) {
  sylowlab::CheckOptions options;
  options.group = args.group;
  options.subgroup = args.subgroup;
  options.element = args.element;
  options.edge_list = args.edge_list;
  options.primes = args.primes;
  options.pi = args.pi;
  options.f = sylowlab::parse_ratio(args.f);
  options.m = args.m;
  options.n = args.n;
  options.k = args.k;
  options.parallel = args.parallel;
  if (const char* env = std::getenv("SYLOWLAB_CAP")) {
    try {
      options.caps.elements = std::stoull(env);
    } catch (const std::exception&) {
      throw sylowlab::Error(sylowlab::ErrorCode::kInvalidArgument,
                            std::string("SYLOWLAB_CAP is not a number: ") + env);
    }
  }
  if (args.cap != 0) options.caps.elements = args.cap;
  if (args.lattice_cap != 0) options.caps.lattice = args.lattice_cap;
  return options;
}

int emit(const sylowlab::VerificationReport& report, const Arguments& args) {
  if (args.json_path == "-") {
    std::cout << sylowlab::to_json(report);
  } else {
    std::cout << sylowlab::to_text(report);
    if (!args.json_path.empty()) {
      std::ofstream out(args.json_path);
      if (!out) {
        std::cerr << "sylowlab: cannot write " << args.json_path << "\n";
        return kExitInputError;
      }
      out << sylowlab::to_json(report);
    }
  }
  return report.all_hold() ? 0 : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sylow numbers, fixed point ratios and covering numbers of permutation groups"};
  app.require_subcommand(1);

  Arguments args;
  std::string check;
  std::string quantity;

  auto* verify = app.add_subcommand("verify", "run a verification check");
  verify->add_option("check", check, "check id")
      ->required()
      ->check(CLI::IsMember(sylowlab::verify_check_ids()));
  add_common_options(verify, args);

  auto* compute = app.add_subcommand("compute", "compute a single quantity");
  compute->add_option("quantity", quantity, "quantity")
      ->required()
      ->check(CLI::IsMember(sylowlab::compute_quantity_ids()));
  add_common_options(compute, args);

  auto* list = app.add_subcommand("list", "list check ids, quantities and catalog groups");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  if (list->parsed()) {
    std::cout << "checks:";
    for (const auto& id : sylowlab::verify_check_ids()) std::cout << " " << id;
    std::cout << "\nquantities:";
    for (const auto& id : sylowlab::compute_quantity_ids()) std::cout << " " << id;
    std::cout << "\ncatalog:\n";
    for (const auto& entry : sylowlab::catalog()) {
      std::cout << "  " << entry.name << "  order " << entry.order << "\n";
    }
    return 0;
  }

  try {
    const sylowlab::CheckOptions options = to_options(args);
    const auto report = verify->parsed() ? sylowlab::run_check(check, options)
                                         : sylowlab::run_compute(quantity, options);
    return emit(report, args);
  } catch (const sylowlab::Error& e) {
    std::cerr << "sylowlab: " << e.what() << "\n";
    return kExitInputError;
  } catch (const sylowlab::InternalError& e) {
    std::cerr << "sylowlab: internal cross-check failed: " << e.what() << "\n";
    return kExitInternal;
  }
}
