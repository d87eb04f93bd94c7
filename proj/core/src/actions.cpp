#include "sylowlab/actions.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

#include "sylowlab/error.hpp"
#include "sylowlab/number_theory.hpp"
#include "sylowlab/sylow.hpp"

namespace sylowlab {

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::kInvalidArgument, std::to_string(p) + " is not prime");
  }
}

PermGroup image_group(const RightCosets& cosets) {
  std::vector<Permutation> gens;
  for (const auto& g : cosets.group().generators()) gens.push_back(cosets.act(g));
  return PermGroup(cosets.size(), std::move(gens));
}

}  // namespace

PadicProfile PadicProfile::of(std::uint64_t n, std::uint64_t prime) {
  require_prime(prime);
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "p-adic profile of 0");
  PadicProfile profile;
  profile.prime = prime;
  while (n > 0) {
    profile.digits.push_back(n % prime);
    n /= prime;
  }
  return profile;
}

std::uint64_t PadicProfile::value() const {
  std::uint64_t v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) v = v * prime + digits[i];
  return v;
}

CosetAction::CosetAction(const PermGroup& g, const PermGroup& h, const Caps& caps)
    : cosets_(g, h, caps), image_(image_group(cosets_)) {
  if (cosets_.size() == 1) {
    throw Error(ErrorCode::kNotProper, h.to_string() + " is not a proper subgroup");
  }
}

CosetAction natural_action(const PermGroup& g, const Caps& caps) {
  if (g.is_trivial() || !g.is_transitive()) {
    throw Error(ErrorCode::kPreconditionFailed,
                "natural action needs a nontrivial transitive group");
  }
  return CosetAction(g, g.stabilizer(1), caps);
}

ExactRatio fpr_by_class(const CosetAction& action, const Permutation& x, const Caps& caps) {
  const auto cls = conjugacy_class(action.group(), x, caps);
  const auto& h = action.point_stabilizer();
  const auto inside = std::count_if(cls.begin(), cls.end(),
                                    [&](const Permutation& y) { return h.contains(y); });
  return ExactRatio(BigInt(inside), BigInt(cls.size()));
}

ExactRatio fpr_element(const CosetAction& action, const Permutation& x, const Caps& caps) {
  if (!action.group().contains(x)) {
    throw Error(ErrorCode::kNotAMember,
                x.to_cycle_string() + " is not in " + action.group().to_string());
  }
  ExactRatio by_points(BigInt(action.fixed_points(x)), BigInt(action.degree()));
  if (action.group().order() <= caps.elements) {
    const ExactRatio by_class = fpr_by_class(action, x, caps);
    if (by_class != by_points) {
      throw InternalError("fpr mismatch for " + x.to_cycle_string() + ": " +
                          by_points.to_string() + " by fixed points, " +
                          by_class.to_string() + " by class");
    }
  }
  return by_points;
}

ExactRatio fpr_subgroup(const CosetAction& action, const PermGroup& p) {
  require_subgroup(p, action.group());
  return ExactRatio(BigInt(action.cosets().common_fixed_count(p)),
                    BigInt(action.degree()));
}

bool canonical_element_is_split(std::uint64_t n, std::uint64_t p) {
  if (p != 2) return false;
  const auto profile = PadicProfile::of(n, p);
  std::uint64_t sum = 0;
  for (std::size_t i = 1; i < profile.digits.size(); ++i) sum += profile.digits[i];
  return sum % 2 == 1;
}

Permutation canonical_p_element(std::uint64_t n, std::uint64_t p) {
  require_prime(p);
  if (n < p) {
    throw Error(ErrorCode::kNoPElement,
                "A_" + std::to_string(n) + " has no elements of order " + std::to_string(p));
  }
  const auto profile = PadicProfile::of(n, p);
  const std::size_t f = profile.top();
  // counts[i] = number of cycles of length p^i
  std::vector<std::uint64_t> counts(profile.digits);
  if (canonical_element_is_split(n, p)) {
    counts[f] -= 1;
    counts[f - 1] += 2;
  }
  std::vector<std::vector<Point>> cycles;
  Point next = 1;
  std::uint64_t length = 1;
  for (std::size_t i = 0; i < f; ++i) length *= p;
  for (std::size_t i = f + 1; i-- > 1;) {
    for (std::uint64_t c = 0; c < counts[i]; ++c) {
      std::vector<Point> cycle;
      for (std::uint64_t j = 0; j < length; ++j) cycle.push_back(next++);
      cycles.push_back(std::move(cycle));
    }
    length /= p;
  }
  auto x = Permutation::from_cycles(n, cycles);
  if (!x.is_even() || !is_power_of(x.order(), p)) {
    throw InternalError("canonical element " + x.to_cycle_string() +
                        " is not an even p-element");
  }
  return x;
}

ExactRatio subset_fpr_formula(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  require_prime(p);
  if (k < 1 || 2 * k >= n) {
    throw Error(ErrorCode::kOutOfDomain, "subset size must satisfy 1 <= k < n/2");
  }
  if (n < p) {
    throw Error(ErrorCode::kOutOfDomain, "formula needs p <= n");
  }
  if (canonical_element_is_split(n, p)) {
    throw Error(ErrorCode::kOutOfDomain,
                "p = 2 with an odd number of nonzero higher digits is outside the formula");
  }
  const auto a = PadicProfile::of(n, p);
  const auto b = PadicProfile::of(k, p);
  BigInt fixed = 1;
  for (std::size_t i = 0; i < a.digits.size(); ++i) {
    fixed *= binomial(a.digit(i), b.digit(i));
  }
  return ExactRatio(fixed, binomial(n, k));
}

BigInt fixed_subset_count(const Permutation& x, std::size_t k) {
  // ways[s] = number of unions of the cycles seen so far with s points
  std::vector<BigInt> ways(k + 1, BigInt(0));
  ways[0] = 1;
  for (std::size_t length : x.cycle_type()) {
    for (std::size_t s = k + 1; s-- > length;) ways[s] += ways[s - length];
  }
  return ways[k];
}

MinFprResult min_fpr_p_element(const CosetAction& action, std::uint64_t p,
                               const Caps& caps) {
  require_prime(p);
  if (action.group().order() % p != 0) {
    throw Error(ErrorCode::kPreconditionFailed,
                std::to_string(p) + " does not divide the group order");
  }
  std::optional<MinFprResult> best;
  for (const auto& cls : conjugacy_classes(action.group(), caps)) {
    const Permutation& rep = cls.front();
    const std::uint64_t ord = rep.order();
    if (ord == 1 || !is_power_of(ord, p)) continue;
    MinFprResult candidate{rep, fpr_element(action, rep, caps), ord};
    if (!best || std::tie(candidate.ratio, candidate.element_order, candidate.element) <
                     std::tie(best->ratio, best->element_order, best->element)) {
      best = std::move(candidate);
    }
  }
  if (!best) throw InternalError("no p-element class found");
  return *best;
}

OrbitBoundReport sylow_orbit_bound_check(const CosetAction& action, std::uint64_t p,
                                         bool exclusion_holds, const Caps& caps) {
  require_prime(p);
  if (p == 2 || action.group().order() % p != 0) {
    throw Error(ErrorCode::kPreconditionFailed,
                "orbit bound needs an odd prime dividing the group order");
  }
  const PermGroup sylow = sylow_subgroup(action.group(), p, caps);
  std::vector<Permutation> gens;
  for (const auto& x : sylow.generators()) gens.push_back(action.image_of(x));
  const PermGroup on_points(action.degree(), std::move(gens));

  OrbitBoundReport report;
  report.p = p;
  report.degree = action.degree();
  report.orbit_count = on_points.orbits().size();
  report.generated_by_p_elements = is_generated_by_p_elements(action.group(), p, caps);
  report.orbit_bound_holds = report.orbit_count * (2 * p - 1) <= p * report.degree;
  report.exclusion_holds = exclusion_holds;
  report.strong_bound_holds = report.orbit_count * (p + 1) <= 2 * report.degree;
  report.holds = report.orbit_bound_holds && (!exclusion_holds || report.strong_bound_holds);
  return report;
}

}  // namespace sylowlab
