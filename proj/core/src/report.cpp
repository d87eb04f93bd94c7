#include "sylowlab/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "sylowlab/actions.hpp"
#include "sylowlab/catalog.hpp"
#include "sylowlab/commuting.hpp"
#include "sylowlab/covering.hpp"
#include "sylowlab/error.hpp"
#include "sylowlab/graph.hpp"
#include "sylowlab/group_ops.hpp"
#include "sylowlab/lattice.hpp"
#include "sylowlab/number_theory.hpp"

namespace sylowlab {

namespace {

using Task = std::function<ReportItem()>;

struct Input {
  GroupExpr expr;
  PermGroup group;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

GroupEcho echo(const GroupExpr& expr, const PermGroup& g) {
  GroupEcho out;
  out.expr = to_string(expr);
  out.degree = g.degree();
  out.order = g.order();
  for (const auto& x : g.generators()) out.generators.push_back(x.to_cycle_string());
  return out;
}

ExactRatio integer(const BigInt& v) { return ExactRatio(v, BigInt(1)); }
ExactRatio integer(std::uint64_t v) { return ExactRatio(BigInt(v), BigInt(1)); }
std::string flag(bool b) { return b ? "true" : "false"; }

std::string prime_label(std::uint64_t p) { return "p=" + std::to_string(p); }

std::string join_generators(const PermGroup& g) { return g.to_string(); }

std::string join_elements(const std::vector<Permutation>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) s += ",";
    s += xs[i].to_cycle_string();
  }
  return s;
}

// Runs a task, recording library errors inside the item.
ReportItem guarded(const std::string& label, const Task& task) {
  try {
    ReportItem item = task();
    if (item.label.empty()) item.label = label;
    return item;
  } catch (const Error& e) {
    ReportItem item;
    item.label = label;
    item.asserted = true;
    item.holds = false;
    item.error_code = std::string(error_code_name(e.code()));
    item.error_message = e.what();
    return item;
  }
}

std::vector<ReportItem> run_tasks(const std::vector<std::pair<std::string, Task>>& tasks,
                                  bool parallel) {
  std::vector<ReportItem> items(tasks.size());
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (!parallel || hw == 1 || tasks.size() <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) items[i] = guarded(tasks[i].first, tasks[i].second);
    return items;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> failures(tasks.size());
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < std::min<std::size_t>(hw, tasks.size()); ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < tasks.size(); i = next++) {
        try {
          items[i] = guarded(tasks[i].first, tasks[i].second);
        } catch (...) {
          failures[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return items;
}

class CheckContext {
 public:
  explicit CheckContext(const CheckOptions& options) : options_(options) {}

  const Caps& caps() const { return options_.caps; }
  const CheckOptions& options() const { return options_; }

  const Input& group() {
    if (!group_) {
      if (options_.group.empty()) throw Error(ErrorCode::kInvalidArgument, "--group is required");
      GroupExpr expr = resolve_group_argument(options_.group);
      PermGroup g = construct(expr, caps());
      group_ = Input{std::move(expr), std::move(g)};
    }
    return *group_;
  }

  bool has_subgroup() const { return !options_.subgroup.empty(); }

  const Input& subgroup() {
    if (!subgroup_) {
      if (!has_subgroup()) throw Error(ErrorCode::kInvalidArgument, "--sub is required");
      GroupExpr expr = resolve_group_argument(options_.subgroup);
      PermGroup h = construct(expr, caps());
      const std::size_t degree = group().group.degree();
      if (h.degree() < degree) {
        // Literal subgroups may omit trailing fixed points of the parent.
        std::vector<Permutation> gens;
        for (const auto& x : h.generators()) {
          std::vector<Point> images(degree);
          for (Point i = 1; i <= degree; ++i) images[i - 1] = i <= x.degree() ? x.image(i) : i;
          gens.push_back(Permutation::from_images(images));
        }
        h = PermGroup(degree, std::move(gens));
      }
      subgroup_ = Input{std::move(expr), std::move(h)};
    }
    return *subgroup_;
  }

  const SubgroupLattice& lattice() {
    if (!lattice_) lattice_ = subgroup_lattice(group().group, caps());
    return *lattice_;
  }

  GroupMetadata meta() { return metadata(group().expr); }

  std::vector<std::uint64_t> primes(bool odd_only = false) {
    std::vector<std::uint64_t> out;
    if (!options_.primes.empty()) {
      out = options_.primes;
    } else {
      out = prime_divisors(group().group.order());
    }
    for (auto p : out) {
      if (!is_prime(p)) throw Error(ErrorCode::kInvalidArgument, std::to_string(p) + " is not prime");
    }
    if (odd_only) out.erase(std::remove(out.begin(), out.end(), 2u), out.end());
    return out;
  }

  std::vector<std::vector<std::uint64_t>> prime_sets() {
    if (!options_.pi.empty()) return {options_.pi};
    std::vector<std::vector<std::uint64_t>> out;
    for (auto p : primes()) out.push_back({p});
    return out;
  }

  Permutation element() {
    if (options_.element.empty()) throw Error(ErrorCode::kInvalidArgument, "--element is required");
    return parse_cycles(options_.element, group().group.degree());
  }

  // The action on the cosets of --sub, or the natural action.
  CosetAction action() {
    if (has_subgroup()) return CosetAction(group().group, subgroup().group, caps());
    return natural_action(group().group, caps());
  }

 private:
  CheckOptions options_;
  std::optional<Input> group_;
  std::optional<Input> subgroup_;
  std::optional<SubgroupLattice> lattice_;
};

std::string pi_label(const std::vector<std::uint64_t>& pi) {
  std::string s = "pi={";
  for (std::size_t i = 0; i < pi.size(); ++i) s += (i ? "," : "") + std::to_string(pi[i]);
  return s + "}";
}

using Tasks = std::vector<std::pair<std::string, Task>>;

// Subgroups named by --sub, or the lattice class representatives passing
// `keep`.
std::vector<PermGroup> subgroups_or_scan(CheckContext& ctx,
                                         const std::function<bool(const SubgroupLattice&, std::size_t)>& keep) {
  if (ctx.has_subgroup()) return {ctx.subgroup().group};
  std::vector<PermGroup> out;
  const auto& lattice = ctx.lattice();
  for (std::size_t i : lattice.class_representatives()) {
    if (keep(lattice, i)) out.push_back(lattice.subgroup(i));
  }
  return out;
}

bool contains_sylow_index(const SubgroupLattice& lattice, std::size_t i, std::uint64_t p) {
  return p_part(BigInt(lattice[i].order), p) == p_part(lattice.parent().order(), p);
}

void check_theorem_c(CheckContext& ctx, Tasks& tasks, VerificationReport& report) {
  const auto& g = ctx.group().group;
  const GroupMetadata meta = ctx.meta();
  for (auto p : ctx.primes()) {
    if (!ctx.has_subgroup() && !is_generated_by_p_elements(g, p, ctx.caps())) {
      report.notices.push_back("p=" + std::to_string(p) + " skipped: group is not generated by its " +
                               std::to_string(p) + "-elements");
      continue;
    }
    const auto subs = subgroups_or_scan(ctx, [&](const SubgroupLattice& l, std::size_t i) {
      return i != l.top() && contains_sylow_index(l, i, p);
    });
    const bool exclusion = meta.excludes_alternating_and_mersenne(p);
    for (const auto& h : subs) {
      const Caps caps = ctx.caps();
      tasks.emplace_back(prime_label(p) + " H=" + join_generators(h), [g, h, p, exclusion, caps] {
        const auto r = theorem_c_check(g, h, p, exclusion, caps);
        ReportItem item;
        item.values = {{"nu_G", integer(r.nu_g)},
                       {"nu_H", integer(r.nu_h)},
                       {"ratio", r.ratio},
                       {"bound", ExactRatio(BigInt(p - 1), BigInt(2 * p - 1))},
                       {"strong_bound", ExactRatio(BigInt(1), BigInt(p + 1))}};
        item.details = {{"main_bound_holds", flag(r.main_bound_holds)},
                        {"exclusion_holds", flag(r.exclusion_holds)},
                        {"strong_bound_holds", flag(r.strong_bound_holds)}};
        item.asserted = true;
        item.holds = r.holds;
        return item;
      });
    }
  }
}

void check_nu_monotonicity(CheckContext& ctx, Tasks& tasks, VerificationReport&) {
  const auto& g = ctx.group().group;
  for (auto p : ctx.primes()) {
    const auto subs = subgroups_or_scan(ctx, [](const SubgroupLattice&, std::size_t) { return true; });
    for (const auto& h : subs) {
      const Caps caps = ctx.caps();
      tasks.emplace_back(prime_label(p) + " H=" + join_generators(h), [g, h, p, caps] {
        const auto r = nu_monotonicity_check(g, h, p, caps);
        ReportItem item;
        item.values = {{"nu_G", integer(r.nu_g)}, {"nu_H", integer(r.nu_h)}};
        item.details = {{"unique_containment", flag(r.unique_containment)},
                        {"product_covers", flag(r.product_covers)}};
        item.asserted = true;
        item.holds = r.holds;
        return item;
      });
    }
  }
}

void check_nu_fpr(CheckContext& ctx, Tasks& tasks, VerificationReport&) {
  const auto& g = ctx.group().group;
  for (auto p : ctx.primes()) {
    std::vector<PermGroup> subs;
    if (ctx.has_subgroup()) {
      subs.push_back(ctx.subgroup().group);
    } else {
      const auto& lattice = ctx.lattice();
      const auto reps = lattice.class_representatives();
      for (std::size_t m : lattice.maximal_indices()) {
        if (std::binary_search(reps.begin(), reps.end(), m) && contains_sylow_index(lattice, m, p)) {
          subs.push_back(lattice.subgroup(m));
        }
      }
    }
    for (const auto& h : subs) {
      const Caps caps = ctx.caps();
      tasks.emplace_back(prime_label(p) + " H=" + join_generators(h), [g, h, p, caps] {
        const auto r = nu_fpr_identity_check(g, h, p, caps);
        ReportItem item;
        item.values = {{"nu_G", integer(r.nu_g)},
                       {"nu_H", integer(r.nu_h)},
                       {"nu_ratio", r.nu_ratio},
                       {"fpr", r.fpr}};
        item.asserted = true;
        item.holds = r.holds;
        return item;
      });
    }
  }
}

void check_nu_quotient(CheckContext& ctx, Tasks& tasks, VerificationReport&) {
  const auto& g = ctx.group().group;
  for (auto p : ctx.primes()) {
    std::vector<PermGroup> normals;
    if (ctx.has_subgroup()) {
      normals.push_back(ctx.subgroup().group);
    } else {
      const auto& lattice = ctx.lattice();
      for (std::size_t i : lattice.normal_indices()) normals.push_back(lattice.subgroup(i));
    }
    for (const auto& n : normals) {
      const Caps caps = ctx.caps();
      tasks.emplace_back(prime_label(p) + " N=" + join_generators(n), [g, n, p, caps] {
        const auto r = nu_quotient_identity_check(g, n, p, caps);
        ReportItem item;
        item.values = {{"nu_G", integer(r.nu_g)},
                       {"nu_quotient", integer(r.nu_quotient)},
                       {"nu_PN", integer(r.nu_pn)}};
        item.asserted = true;
        item.holds = r.holds;
        return item;
      });
    }
  }
}

void check_p_solvable(CheckContext& ctx, Tasks& tasks, VerificationReport&) {
  const auto& g = ctx.group().group;
  for (auto p : ctx.primes()) {
    const Caps caps = ctx.caps();
    tasks.emplace_back(prime_label(p), [g, p, caps] {
      const auto r = p_solvable_divisibility_check(g, p, caps);
      ReportItem item;
      item.values = {{"nu_G", integer(r.nu_g)},
                     {"subgroups_checked", integer(static_cast<std::uint64_t>(r.subgroups_checked))},
                     {"failures", integer(static_cast<std::uint64_t>(r.failures.size()))}};
      item.asserted = true;
      item.holds = r.holds;
      return item;
    });
  }
}

void check_conjecture_d(CheckContext& ctx, Tasks& tasks, VerificationReport& report) {
  std::vector<NamedGroup> groups;
  if (!ctx.options().group.empty()) {
    groups.push_back({to_string(ctx.group().expr), ctx.group().group});
  } else {
    groups = named_groups(catalog());
  }
  std::vector<std::uint64_t> primes = ctx.options().primes;
  if (primes.empty()) throw Error(ErrorCode::kInvalidArgument, "conjecture-d needs -p");
  const unsigned threads = ctx.options().parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1;
  for (auto p : primes) {
    const ConjectureDScan scan = conjecture_d_scan(groups, p, ctx.options().f, ctx.caps(), threads);
    for (const auto& n : scan.notices) report.notices.push_back(n);
    for (const auto& v : scan.violations) report.violations.push_back(v);
    const ExactRatio f = ctx.options().f;
    tasks.emplace_back(prime_label(p), [scan, f] {
      ReportItem item;
      item.values = {{"f", f},
                     {"groups_scanned", integer(static_cast<std::uint64_t>(scan.groups_scanned))},
                     {"pairs_scanned", integer(static_cast<std::uint64_t>(scan.pairs_scanned))},
                     {"violations", integer(static_cast<std::uint64_t>(scan.violations.size()))}};
      if (!scan.violations.empty()) item.values.push_back({"largest_ratio", scan.violations.front().ratio});
      item.asserted = true;
      item.holds = scan.violations.empty();
      return item;
    });
  }
}

void check_orbit_bound(CheckContext& ctx, Tasks& tasks, VerificationReport&) {
  const GroupMetadata meta = ctx.meta();
  auto action = std::make_shared<CosetAction>(ctx.action());
  for (auto p : ctx.primes(true)) {
    const Caps caps = ctx.caps();
    const bool exclusion = meta.excludes_alternating(p);
    tasks.emplace_back(prime_label(p), [action, p, exclusion, caps] {
      const auto r = sylow_orbit_bound_check(*action, p, exclusion, caps);
      ReportItem item;
      item.values = {{"orbits", integer(static_cast<std::uint64_t>(r.orbit_count))},
                     {"degree", integer(static_cast<std::uint64_t>(r.degree))},
                     {"bound", ExactRatio(BigInt(p * r.degree), BigInt(2 * p - 1))},
                     {"strong_bound", ExactRatio(BigInt(2 * r.degree), BigInt(p + 1))}};
      item.details = {{"generated_by_p_elements", flag(r.generated_by_p_elements)},
                      {"orbit_bound_holds", flag(r.orbit_bound_holds)},
                      {"exclusion_holds", flag(r.exclusion_holds)},
                      {"strong_bound_holds", flag(r.strong_bound_holds)}};
      item.asserted = true;
      item.holds = r.holds;
      return item;
    });
  }
}

void check_min_fpr(CheckContext& ctx, Tasks& tasks, VerificationReport&) {
  const GroupMetadata meta = ctx.meta();
  auto action = std::make_shared<CosetAction>(ctx.action());
  for (auto p : ctx.primes()) {
    const Caps caps = ctx.caps();
    const bool exclusion = meta.excludes_alternating_and_mersenne(p);
    tasks.emplace_back(prime_label(p), [action, p, exclusion, caps] {
      const auto r = min_fpr_p_element(*action, p, caps);
      const bool generated = is_generated_by_p_elements(action->group(), p, caps);
      const ExactRatio bound(BigInt(p - 1), BigInt(2 * p - 1));
      const ExactRatio strong(BigInt(1), BigInt(p + 1));
      ReportItem item;
      item.values = {{"fpr", r.ratio}, {"bound", bound}, {"strong_bound", strong},
                     {"element_order", integer(r.element_order)}};
      item.details = {{"element", r.element.to_cycle_string()},
                      {"generated_by_p_elements", flag(generated)},
                      {"exclusion_holds", flag(exclusion)}};
      item.asserted = generated;
      item.holds = r.ratio <= bound && (!exclusion || r.ratio <= strong);
      return item;
    });
  }
}

ReportItem cover_item(const CoverResult& r) {
  ReportItem item;
  if (r.coverable) {
    item.values.push_back({"size", integer(static_cast<std::uint64_t>(r.size))});
  } else {
    item.details.push_back({"size", "infinite"});
  }
  item.values.push_back({"universe", integer(static_cast<std::uint64_t>(r.universe_size))});
  item.values.push_back({"candidates", integer(static_cast<std::uint64_t>(r.candidate_count))});
  std::string cover;
  for (std::size_t i = 0; i < r.cover.size(); ++i) cover += (i ? "; " : "") + r.cover[i].to_string();
  item.details.push_back({"cover", cover});
  return item;
}

void check_theorem_f(CheckContext& ctx, Tasks& tasks, VerificationReport& report) {
  const auto& g = ctx.group().group;
  for (auto p : ctx.primes()) {
    if (!is_generated_by_p_elements(g, p, ctx.caps())) {
      report.notices.push_back("p=" + std::to_string(p) + " skipped: group is not generated by its " +
                               std::to_string(p) + "-elements");
      continue;
    }
    const auto& lattice = ctx.lattice();
    tasks.emplace_back(prime_label(p), [&lattice, p] {
      const auto r = sigma_lower_bound_check(lattice, p);
      ReportItem item = cover_item(r.sigma);
      item.values.push_back({"bound", integer(p + 1)});
      item.asserted = true;
      item.holds = r.holds;
      return item;
    });
  }
}

void check_class_cover(CheckContext& ctx, Tasks& tasks, VerificationReport&) {
  const Permutation x = ctx.element();
  const auto& lattice = ctx.lattice();
  tasks.emplace_back("x=" + x.to_cycle_string(), [&lattice, x] {
    const auto r = class_cover_number(lattice, x);
    ReportItem item = cover_item(r);
    const auto p = prime_divisors(BigInt(x.order())).front();
    item.values.push_back({"p_plus_1", integer(p + 1)});
    item.details.push_back({"at_least_p_plus_1", flag(r.size >= p + 1)});
    item.asserted = false;
    return item;
  });
}

void check_sigma_le_clique(CheckContext& ctx, Tasks& tasks, VerificationReport& report) {
  const auto& g = ctx.group().group;
  for (auto p : ctx.primes()) {
    if (g.is_abelian() || !is_generated_by_p_elements(g, p, ctx.caps())) {
      report.notices.push_back("p=" + std::to_string(p) +
                               " skipped: needs a nonabelian group generated by its " +
                               std::to_string(p) + "-elements");
      continue;
    }
    const auto& lattice = ctx.lattice();
    const Caps caps = ctx.caps();
    tasks.emplace_back(prime_label(p), [&lattice, p, caps] {
      const auto r = sigma_le_clique_check(lattice, p, caps);
      ReportItem item = cover_item(r.sigma);
      item.values.push_back({"n_p", integer(static_cast<std::uint64_t>(r.clique.size()))});
      item.details.push_back({"noncommuting_set", join_elements(r.clique.elements)});
      item.details.push_back({"centralizers_cover", flag(r.centralizers_cover)});
      item.asserted = true;
      item.holds = r.holds;
      return item;
    });
  }
}

void check_pr_clique(CheckContext& ctx, Tasks& tasks, VerificationReport&) {
  const auto& g = ctx.group().group;
  for (const auto& pi : ctx.prime_sets()) {
    const Caps caps = ctx.caps();
    tasks.emplace_back(pi_label(pi), [g, pi, caps] {
      const auto r = pr_times_clique_check(g, pi, caps);
      ReportItem item;
      item.values = {{"pr", r.pr}, {"n_pi", integer(static_cast<std::uint64_t>(r.clique))},
                     {"product", r.product}};
      item.asserted = true;
      item.holds = r.holds;
      return item;
    });
  }
}

ReportItem turan_item(const SimpleGraph& graph) {
  const auto r = turan_bound_check(graph);
  ReportItem item;
  item.values = {{"vertices", integer(static_cast<std::uint64_t>(r.vertices))},
                 {"edges", integer(static_cast<std::uint64_t>(r.edges))},
                 {"clique_number", integer(static_cast<std::uint64_t>(r.clique_number))},
                 {"bound", r.bound}};
  item.asserted = true;
  item.holds = r.holds;
  return item;
}

void check_turan(CheckContext& ctx, Tasks& tasks, VerificationReport&) {
  if (!ctx.options().edge_list.empty()) {
    const std::string path = ctx.options().edge_list;
    const SimpleGraph graph = parse_edge_list(read_file(path));
    tasks.emplace_back(path, [graph] { return turan_item(graph); });
    return;
  }
  const auto& g = ctx.group().group;
  for (const auto& pi : ctx.prime_sets()) {
    const Caps caps = ctx.caps();
    tasks.emplace_back(pi_label(pi), [g, pi, caps] {
      return turan_item(noncommuting_graph(g, pi, caps).graph);
    });
  }
}

void check_c_pi(CheckContext& ctx, Tasks& tasks, VerificationReport&) {
  const auto& g = ctx.group().group;
  const std::size_t m = ctx.options().m, n = ctx.options().n;
  for (const auto& pi : ctx.prime_sets()) {
    const Caps caps = ctx.caps();
    tasks.emplace_back(pi_label(pi) + " m=" + std::to_string(m) + " n=" + std::to_string(n),
                       [g, pi, m, n, caps] {
                         const auto r = c_pi_membership(g, pi, m, n, caps);
                         ReportItem item;
                         item.details = {{"member", flag(r.member)}};
                         if (!r.member) {
                           item.details.push_back({"left", join_elements(r.left)});
                           item.details.push_back({"right", join_elements(r.right)});
                         }
                         item.asserted = false;
                         return item;
                       });
  }
}

void check_subset_fpr(CheckContext& ctx, Tasks& tasks, VerificationReport&) {
  const std::size_t n = ctx.options().n, k = ctx.options().k;
  std::vector<std::uint64_t> primes = ctx.options().primes;
  if (primes.empty()) {
    for (std::uint64_t p : {2, 3, 5, 7}) {
      if (p <= n) primes.push_back(p);
    }
  }
  for (auto p : primes) {
    tasks.emplace_back(prime_label(p) + " n=" + std::to_string(n) + " k=" + std::to_string(k), [n, k, p] {
      const Permutation x = canonical_p_element(n, p);
      const ExactRatio counted(fixed_subset_count(x, k), binomial(n, k));
      ReportItem item;
      item.details = {{"element", x.to_cycle_string()}};
      item.values = {{"counted", counted}};
      try {
        const ExactRatio formula = subset_fpr_formula(n, k, p);
        item.values.push_back({"formula", formula});
        item.asserted = true;
        item.holds = formula == counted;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kOutOfDomain) throw;
        item.details.push_back({"formula", std::string("not applicable: ") + e.what()});
        item.asserted = false;
      }
      return item;
    });
  }
}

using CheckFn = void (*)(CheckContext&, Tasks&, VerificationReport&);

const std::vector<std::pair<std::string, CheckFn>>& check_table() {
  static const std::vector<std::pair<std::string, CheckFn>> table = {
      {"theorem-c", check_theorem_c},
      {"nu-monotonicity", check_nu_monotonicity},
      {"nu-fpr-identity", check_nu_fpr},
      {"nu-quotient-identity", check_nu_quotient},
      {"p-solvable-divisibility", check_p_solvable},
      {"conjecture-d", check_conjecture_d},
      {"orbit-bound", check_orbit_bound},
      {"min-fpr", check_min_fpr},
      {"theorem-f", check_theorem_f},
      {"class-cover", check_class_cover},
      {"sigma-le-clique", check_sigma_le_clique},
      {"pr-clique", check_pr_clique},
      {"turan", check_turan},
      {"c-pi", check_c_pi},
      {"subset-fpr", check_subset_fpr},
  };
  return table;
}

void compute_fpr(CheckContext& ctx, Tasks& tasks, VerificationReport&) {
  auto action = std::make_shared<CosetAction>(ctx.action());
  const Permutation x = ctx.element();
  const Caps caps = ctx.caps();
  tasks.emplace_back("x=" + x.to_cycle_string(), [action, x, caps] {
    ReportItem item;
    item.values = {{"fpr", fpr_element(*action, x, caps)},
                   {"fixed_points", integer(static_cast<std::uint64_t>(action->fixed_points(x)))},
                   {"degree", integer(static_cast<std::uint64_t>(action->degree()))}};
    return item;
  });
}

void compute_nu(CheckContext& ctx, Tasks& tasks, VerificationReport&) {
  const auto& g = ctx.group().group;
  for (auto p : ctx.primes()) {
    const Caps caps = ctx.caps();
    tasks.emplace_back(prime_label(p), [g, p, caps] {
      ReportItem item;
      item.values = {{"nu", integer(nu_p(g, p, caps))}};
      return item;
    });
  }
}

void compute_sigma(CheckContext& ctx, Tasks& tasks, VerificationReport&) {
  const auto& g = ctx.group().group;
  for (auto p : ctx.primes()) {
    const Caps caps = ctx.caps();
    tasks.emplace_back(prime_label(p), [g, p, caps] { return cover_item(sigma_p(g, p, caps)); });
  }
}

void compute_clique(CheckContext& ctx, Tasks& tasks, VerificationReport&) {
  const auto& g = ctx.group().group;
  for (const auto& pi : ctx.prime_sets()) {
    const Caps caps = ctx.caps();
    tasks.emplace_back(pi_label(pi), [g, pi, caps] {
      const auto r = n_pi(g, pi, caps);
      ReportItem item;
      item.values = {{"n_pi", integer(static_cast<std::uint64_t>(r.size()))}};
      item.details = {{"noncommuting_set", join_elements(r.elements)}};
      return item;
    });
  }
}

void compute_pr(CheckContext& ctx, Tasks& tasks, VerificationReport&) {
  const auto& g = ctx.group().group;
  for (const auto& pi : ctx.prime_sets()) {
    const Caps caps = ctx.caps();
    tasks.emplace_back(pi_label(pi), [g, pi, caps] {
      ReportItem item;
      item.values = {{"pr", pr_pi(g, pi, caps)}};
      return item;
    });
  }
}

const std::vector<std::pair<std::string, CheckFn>>& compute_table() {
  static const std::vector<std::pair<std::string, CheckFn>> table = {
      {"fpr", compute_fpr}, {"nu", compute_nu}, {"sigma", compute_sigma},
      {"clique", compute_clique}, {"pr", compute_pr},
  };
  return table;
}

VerificationReport run(const std::vector<std::pair<std::string, CheckFn>>& table,
                       const std::string& id, const CheckOptions& options) {
  const auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.first == id; });
  if (it == table.end()) throw Error(ErrorCode::kInvalidArgument, "unknown check '" + id + "'");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.check = id;
  CheckContext ctx(options);
  Tasks tasks;
  it->second(ctx, tasks, report);
  report.items = run_tasks(tasks, options.parallel);
  if (!options.group.empty()) report.group = echo(ctx.group().expr, ctx.group().group);
  if (ctx.has_subgroup()) report.subgroup = echo(ctx.subgroup().expr, ctx.subgroup().group);
  report.primes = options.primes;
  if (report.primes.empty() && report.group) report.primes = prime_divisors(report.group->order);
  report.runtime_ms = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                                     std::chrono::steady_clock::now() - start)
                                                     .count());
  return report;
}

nlohmann::ordered_json ratio_json(const ExactRatio& r) {
  return {{"num", r.num().str()}, {"den", r.den().str()}};
}

nlohmann::ordered_json echo_json(const GroupEcho& e) {
  return {{"expr", e.expr}, {"degree", e.degree}, {"order", e.order.str()}, {"generators", e.generators}};
}

}  // namespace

bool VerificationReport::all_hold() const {
  return std::all_of(items.begin(), items.end(), [](const ReportItem& item) {
    return item.error_code.empty() && (!item.asserted || item.holds);
  });
}

const std::vector<std::string>& verify_check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : check_table()) out.push_back(id);
    return out;
  }();
  return ids;
}

const std::vector<std::string>& compute_quantity_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : compute_table()) out.push_back(id);
    return out;
  }();
  return ids;
}

VerificationReport run_check(const std::string& check, const CheckOptions& options) {
  return run(check_table(), check, options);
}

VerificationReport run_compute(const std::string& quantity, const CheckOptions& options) {
  return run(compute_table(), quantity, options);
}

GroupExpr resolve_group_argument(const std::string& text) {
  if (!text.empty() && text.front() == '@') return parse_generator_list(read_file(text.substr(1)));
  return parse_group_expr(text);
}

std::string to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["schema"] = "sylowlab.report/1";
  j["check"] = report.check;
  j["group"] = report.group ? echo_json(*report.group) : nlohmann::ordered_json(nullptr);
  if (report.subgroup) j["subgroup"] = echo_json(*report.subgroup);
  j["primes"] = report.primes;
  auto items = nlohmann::ordered_json::array();
  for (const auto& item : report.items) {
    nlohmann::ordered_json ji;
    ji["label"] = item.label;
    auto values = nlohmann::ordered_json::object();
    for (const auto& [k, v] : item.values) values[k] = ratio_json(v);
    ji["values"] = values;
    auto details = nlohmann::ordered_json::object();
    for (const auto& [k, v] : item.details) details[k] = v;
    ji["details"] = details;
    ji["asserted"] = item.asserted;
    ji["holds"] = item.holds;
    if (!item.error_code.empty()) {
      ji["error"] = {{"code", item.error_code}, {"message", item.error_message}};
    } else {
      ji["error"] = nullptr;
    }
    items.push_back(ji);
  }
  j["items"] = items;
  if (report.check == "conjecture-d") {
    auto violations = nlohmann::ordered_json::array();
    for (const auto& v : report.violations) {
      violations.push_back({{"group", v.group},
                            {"subgroup_generators", v.subgroup_generators},
                            {"p", v.p},
                            {"nu_G", v.nu_g},
                            {"nu_H", v.nu_h},
                            {"ratio_num", v.ratio.num().str()},
                            {"ratio_den", v.ratio.den().str()}});
    }
    j["violations"] = violations;
  }
  j["notices"] = report.notices;
  j["runtime_ms"] = report.runtime_ms;
  j["all_hold"] = report.all_hold();
  return j.dump(2) + "\n";
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << report.check;
  if (report.group) out << " " << report.group->expr << " (order " << report.group->order << ")";
  if (report.subgroup) out << " sub " << report.subgroup->expr;
  out << "\n";
  for (const auto& item : report.items) {
    const char* status = !item.error_code.empty() ? "ERROR"
                         : !item.asserted         ? "INFO"
                         : item.holds             ? "PASS"
                                                  : "FAIL";
    out << "  [" << status << "] " << item.label;
    for (const auto& [k, v] : item.values) out << "  " << k << "=" << v;
    for (const auto& [k, v] : item.details) out << "  " << k << "=" << v;
    if (!item.error_code.empty()) out << "  " << item.error_message;
    out << "\n";
  }
  for (const auto& v : report.violations) {
    out << "  violation: " << v.group << " H=" << v.subgroup_generators << " p=" << v.p
        << " nu_G=" << v.nu_g << " nu_H=" << v.nu_h << " ratio=" << v.ratio << "\n";
  }
  for (const auto& n : report.notices) out << "  note: " << n << "\n";
  out << (report.all_hold() ? "all asserted bounds hold" : "some asserted bound failed") << " ("
      << report.runtime_ms << " ms)\n";
  return out.str();
}

}  // namespace sylowlab
