#include "sylowlab/sylow.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "sylowlab/actions.hpp"
#include "sylowlab/error.hpp"
#include "sylowlab/group_ops.hpp"
#include "sylowlab/number_theory.hpp"

namespace sylowlab {

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::kInvalidArgument, std::to_string(p) + " is not prime");
  }
}

bool normalizes(const Permutation& x, const PermGroup& h) {
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](const Permutation& y) { return h.contains(conjugate(y, x)); });
}

bool contains_sylow(const PermGroup& h, const PermGroup& g, std::uint64_t p) {
  return p_part(h.order(), p) == p_part(g.order(), p);
}

std::vector<Permutation> conjugate_set(const std::vector<Permutation>& set,
                                       const Permutation& g) {
  std::vector<Permutation> out;
  out.reserve(set.size());
  for (const auto& x : set) out.push_back(conjugate(x, g));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p, const Caps& caps) {
  require_prime(p);
  const BigInt target = p_part(g.order(), p);
  if (target == 1) return PermGroup::trivial(g.degree());

  std::vector<const Permutation*> p_elements;
  std::uint64_t best_order = 1;
  const Permutation* start = nullptr;
  for (const auto& e : g.elements(caps)) {
    const std::uint64_t ord = e.order();
    if (ord == 1 || !is_power_of(ord, p)) continue;
    p_elements.push_back(&e);
    if (ord > best_order) {
      best_order = ord;
      start = &e;
    }
  }
  std::vector<Permutation> gens{*start};
  PermGroup sylow(g.degree(), gens);
  while (sylow.order() < target) {
    auto next = std::find_if(p_elements.begin(), p_elements.end(), [&](const Permutation* x) {
      return !sylow.contains(*x) && normalizes(*x, sylow);
    });
    if (next == p_elements.end()) {
      throw InternalError("Sylow construction stalled at order " + sylow.order().str());
    }
    gens.push_back(**next);
    sylow = PermGroup(g.degree(), gens);
  }
  if (sylow.order() != target) {
    throw InternalError("Sylow construction overshot: " + sylow.order().str());
  }
  return sylow;
}

BigInt nu_p(const PermGroup& g, std::uint64_t p, const Caps& caps) {
  const PermGroup sylow = sylow_subgroup(g, p, caps);
  const BigInt nu = g.order() / normalizer(g, sylow, caps).order();
  if (nu % p != 1 % p) {
    throw InternalError("Sylow number " + nu.str() + " is not 1 mod " + std::to_string(p));
  }
  return nu;
}

std::uint64_t lattice_nu_p(const SubgroupLattice& lattice, std::size_t index,
                           std::uint64_t p) {
  const auto sylow_order =
      static_cast<std::size_t>(p_part(BigInt(lattice[index].order), p));
  std::uint64_t count = 0;
  for (std::size_t j : lattice.of_order(sylow_order)) {
    if (lattice.includes(index, j)) ++count;
  }
  return count;
}

std::vector<std::vector<Permutation>> sylow_subgroups(const PermGroup& g, std::uint64_t p,
                                                      const Caps& caps) {
  const PermGroup sylow = sylow_subgroup(g, p, caps);
  std::set<std::vector<Permutation>> seen;
  std::vector<std::vector<Permutation>> found{sylow.elements(caps)};
  seen.insert(found.front());
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (const auto& s : g.generators()) {
      auto next = conjugate_set(found[k], s);
      if (seen.insert(next).second) found.push_back(std::move(next));
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

NuMonotonicityReport nu_monotonicity_check(const PermGroup& g, const PermGroup& h,
                                           std::uint64_t p, const Caps& caps) {
  require_subgroup(h, g);
  NuMonotonicityReport report;
  report.p = p;
  report.nu_g = nu_p(g, p, caps);
  report.nu_h = nu_p(h, p, caps);

  const auto sylows_g = sylow_subgroups(g, p, caps);
  const auto sylows_h = sylow_subgroups(h, p, caps);
  report.unique_containment = std::all_of(
      sylows_h.begin(), sylows_h.end(), [&](const std::vector<Permutation>& q) {
        return std::count_if(sylows_g.begin(), sylows_g.end(),
                             [&](const std::vector<Permutation>& s) {
                               return std::includes(s.begin(), s.end(), q.begin(), q.end());
                             }) == 1;
      });

  const PermGroup sylow = sylow_subgroup(g, p, caps);
  const PermGroup norm = normalizer(g, sylow, caps);
  const PermGroup meet = intersection(h, norm, caps);
  report.product_covers = h.order() * norm.order() == g.order() * meet.order();

  const bool equal = report.nu_h == report.nu_g;
  report.holds = report.nu_h <= report.nu_g &&
                 equal == (report.unique_containment && report.product_covers);
  return report;
}

NuQuotientReport nu_quotient_identity_check(const PermGroup& g, const PermGroup& n,
                                            std::uint64_t p, const Caps& caps) {
  require_prime(p);
  require_normal(n, g);
  NuQuotientReport report;
  report.p = p;
  report.nu_g = nu_p(g, p, caps);
  const QuotientGroup quotient(g, n, caps);
  report.nu_quotient = nu_p(quotient.group(), p, caps);
  const PermGroup sylow = sylow_subgroup(g, p, caps);
  std::vector<Permutation> gens = sylow.generators();
  gens.insert(gens.end(), n.generators().begin(), n.generators().end());
  report.nu_pn = nu_p(PermGroup(g.degree(), std::move(gens)), p, caps);
  report.holds = report.nu_g == report.nu_quotient * report.nu_pn;
  return report;
}

bool is_maximal_subgroup(const PermGroup& h, const PermGroup& g, const Caps& caps) {
  require_subgroup(h, g);
  if (h.order() == g.order()) return false;
  const RightCosets cosets(g, h, caps);
  for (std::size_t i = 1; i < cosets.size(); ++i) {
    std::vector<Permutation> gens = h.generators();
    gens.push_back(cosets.representatives()[i]);
    if (PermGroup(g.degree(), std::move(gens)).order() != g.order()) return false;
  }
  return true;
}

NuFprReport nu_fpr_identity_check(const PermGroup& g, const PermGroup& h, std::uint64_t p,
                                  const Caps& caps) {
  require_prime(p);
  if (!is_maximal_subgroup(h, g, caps)) {
    throw Error(ErrorCode::kNotMaximal, h.to_string() + " is not maximal");
  }
  if (!contains_sylow(h, g, p)) {
    throw Error(ErrorCode::kSylowNotContained,
                h.to_string() + " contains no Sylow " + std::to_string(p) + "-subgroup");
  }
  NuFprReport report;
  report.p = p;
  report.nu_g = nu_p(g, p, caps);
  report.nu_h = nu_p(h, p, caps);
  report.nu_ratio = ExactRatio(report.nu_h, report.nu_g);
  const CosetAction action(g, h, caps);
  report.fpr = fpr_subgroup(action, sylow_subgroup(h, p, caps));
  report.holds = report.nu_ratio == report.fpr;
  return report;
}

TheoremCReport theorem_c_check(const PermGroup& g, const PermGroup& h, std::uint64_t p,
                               bool exclusion_holds, const Caps& caps) {
  require_prime(p);
  require_subgroup(h, g);
  if (!is_generated_by_p_elements(g, p, caps)) {
    throw Error(ErrorCode::kPreconditionFailed,
                g.to_string() + " is not generated by its " + std::to_string(p) + "-elements");
  }
  if (h.order() == g.order()) {
    throw Error(ErrorCode::kPreconditionFailed, "subgroup is not proper");
  }
  if (!contains_sylow(h, g, p)) {
    throw Error(ErrorCode::kPreconditionFailed,
                h.to_string() + " contains no Sylow " + std::to_string(p) + "-subgroup");
  }
  TheoremCReport report;
  report.p = p;
  report.nu_g = nu_p(g, p, caps);
  report.nu_h = nu_p(h, p, caps);
  report.ratio = ExactRatio(report.nu_h, report.nu_g);
  report.main_bound_holds = report.nu_h * (2 * p - 1) <= report.nu_g * (p - 1);
  report.exclusion_holds = exclusion_holds;
  report.strong_bound_holds = report.nu_h * (p + 1) <= report.nu_g;
  report.holds = report.main_bound_holds && (!exclusion_holds || report.strong_bound_holds);
  return report;
}

PSolvableReport p_solvable_divisibility_check(const PermGroup& g, std::uint64_t p,
                                              const Caps& caps) {
  require_prime(p);
  const SubgroupLattice lattice = subgroup_lattice(g, caps);
  if (!is_p_solvable(lattice, p)) {
    throw Error(ErrorCode::kNotPSolvable,
                g.to_string() + " is not " + std::to_string(p) + "-solvable");
  }
  PSolvableReport report;
  report.p = p;
  report.nu_g = lattice_nu_p(lattice, lattice.top(), p);
  for (std::size_t i = 0; i < lattice.top(); ++i) {
    PSolvableEntry entry;
    entry.subgroup_index = i;
    entry.order = lattice[i].order;
    entry.nu_h = lattice_nu_p(lattice, i, p);
    entry.divides = report.nu_g % entry.nu_h == 0;
    entry.gap_holds = entry.nu_h == report.nu_g || entry.nu_h * (p + 1) <= report.nu_g;
    ++report.subgroups_checked;
    if (!entry.divides || !entry.gap_holds) report.failures.push_back(entry);
  }
  report.holds = report.failures.empty();
  return report;
}

namespace {

struct GroupScan {
  std::vector<ConjectureDViolation> violations;
  std::string notice;
  bool scanned = false;
  std::size_t pairs = 0;
};

GroupScan scan_group(const NamedGroup& named, std::uint64_t p, const ExactRatio& f,
                     const Caps& caps) {
  GroupScan result;
  try {
    const SubgroupLattice lattice = subgroup_lattice(named.group, caps);
    const std::uint64_t nu_g = lattice_nu_p(lattice, lattice.top(), p);
    for (std::size_t i = 0; i < lattice.top(); ++i) {
      ++result.pairs;
      const std::uint64_t nu_h = lattice_nu_p(lattice, i, p);
      if (nu_h >= nu_g) continue;
      if (BigInt(nu_h) * f.den() <= f.num() * nu_g) continue;
      result.violations.push_back({named.name, lattice.subgroup(i).to_string(), p, nu_g, nu_h,
                                   ExactRatio(BigInt(nu_h), BigInt(nu_g))});
    }
    result.scanned = true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kCapExceeded) throw;
    result.notice = "skipped " + named.name + ": " + e.what();
  }
  return result;
}

}  // namespace

ConjectureDScan conjecture_d_scan(const std::vector<NamedGroup>& groups, std::uint64_t p,
                                  const ExactRatio& f, const Caps& caps, unsigned threads) {
  require_prime(p);
  std::vector<GroupScan> scans(groups.size());
  if (threads <= 1 || groups.size() <= 1) {
    for (std::size_t i = 0; i < groups.size(); ++i) scans[i] = scan_group(groups[i], p, f, caps);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(groups.size());
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, groups.size()); ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < groups.size(); i = next++) {
          try {
            scans[i] = scan_group(groups[i], p, f, caps);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
    for (auto& w : workers) w.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  ConjectureDScan out;
  for (auto& scan : scans) {
    if (scan.scanned) ++out.groups_scanned;
    if (!scan.notice.empty()) out.notices.push_back(scan.notice);
    out.pairs_scanned += scan.pairs;
    for (auto& v : scan.violations) out.violations.push_back(std::move(v));
  }
  std::stable_sort(out.violations.begin(), out.violations.end(),
                   [](const ConjectureDViolation& a, const ConjectureDViolation& b) {
                     return a.ratio > b.ratio;
                   });
  return out;
}

}  // namespace sylowlab
