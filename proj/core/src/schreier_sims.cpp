#include "sylowlab/schreier_sims.hpp"

#include "sylowlab/error.hpp"

namespace sylowlab {

namespace {

Point smallest_moved_point(const Permutation& g) {
  const auto& im = g.raw_images();
  for (std::size_t i = 0; i < im.size(); ++i) {
    if (im[i] != i) return static_cast<Point>(i);
  }
  return 0;
}

}  // namespace

StabilizerChain::StabilizerChain(std::size_t degree,
                                 const std::vector<Permutation>& generators)
    : degree_(degree) {
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw Error(ErrorCode::kDegreeMismatch, "generator degree differs from group degree");
    }
    if (!g.is_identity()) gens.push_back(g);
  }

  // Every generator must move some base point.
  for (const auto& g : gens) {
    bool fixes_base = true;
    for (const auto& level : levels_) {
      if (g.raw_images()[level.base_point] != level.base_point) {
        fixes_base = false;
        break;
      }
    }
    if (fixes_base) {
      Level level;
      level.base_point = smallest_moved_point(g);
      levels_.push_back(std::move(level));
    }
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (const auto& g : gens) {
      bool fixes_prefix = true;
      for (std::size_t j = 0; j < i; ++j) {
        Point b = levels_[j].base_point;
        if (g.raw_images()[b] != b) {
          fixes_prefix = false;
          break;
        }
      }
      if (fixes_prefix) levels_[i].generators.push_back(g);
    }
    rebuild_orbit(levels_[i]);
  }

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool extended = false;
    const std::size_t li = static_cast<std::size_t>(i);
    for (std::size_t oi = 0; oi < levels_[li].orbit.size() && !extended; ++oi) {
      const std::size_t generator_count = levels_[li].generators.size();
      for (std::size_t si = 0; si < generator_count; ++si) {
        const Level& level = levels_[li];
        const Permutation& s = level.generators[si];
        Point beta = level.orbit[oi];
        Point image = s.raw_images()[beta];
        auto pos = static_cast<std::size_t>(level.position[image]);
        Permutation h = compose(compose(level.transversal[oi], s),
                                level.inverse_transversal[pos]);
        if (h.is_identity()) continue;
        SiftResult sifted = sift(h, li + 1);
        if (sifted.residue.is_identity()) continue;
        std::size_t j = sifted.level;
        if (j == levels_.size()) {
          Level fresh;
          fresh.base_point = smallest_moved_point(sifted.residue);
          levels_.push_back(std::move(fresh));
        }
        for (std::size_t l = li + 1; l <= j; ++l) {
          levels_[l].generators.push_back(sifted.residue);
          rebuild_orbit(levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(j);
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }
}

void StabilizerChain::rebuild_orbit(Level& level) const {
  level.orbit.assign(1, level.base_point);
  level.position.assign(degree_, -1);
  level.position[level.base_point] = 0;
  level.transversal.assign(1, Permutation(degree_));
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    Point beta = level.orbit[k];
    for (const auto& s : level.generators) {
      Point gamma = s.raw_images()[beta];
      if (level.position[gamma] >= 0) continue;
      level.position[gamma] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(gamma);
      level.transversal.push_back(compose(level.transversal[k], s));
    }
  }
  level.inverse_transversal.clear();
  level.inverse_transversal.reserve(level.transversal.size());
  for (const auto& u : level.transversal) {
    level.inverse_transversal.push_back(u.inverse());
  }
}

StabilizerChain::SiftResult StabilizerChain::sift(const Permutation& g,
                                                  std::size_t from_level) const {
  Permutation current = g;
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const Level& level = levels_[l];
    Point beta = current.raw_images()[level.base_point];
    std::int32_t pos = level.position[beta];
    if (pos < 0) return {current, l};
    current = compose(current, level.inverse_transversal[static_cast<std::size_t>(pos)]);
  }
  return {current, levels_.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) {
    throw Error(ErrorCode::kDegreeMismatch, "membership test with wrong degree");
  }
  SiftResult r = sift(g);
  return r.level == levels_.size() && r.residue.is_identity();
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> out;
  for (const auto& level : levels_) out.push_back(level.base_point + 1);
  return out;
}

std::vector<std::size_t> StabilizerChain::orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& level : levels_) out.push_back(level.orbit.size());
  return out;
}

BigInt StabilizerChain::order() const {
  BigInt result = 1;
  for (const auto& level : levels_) result *= level.orbit.size();
  return result;
}

std::vector<Permutation> StabilizerChain::enumerate() const {
  std::vector<Permutation> elements{Permutation(degree_)};
  for (std::size_t l = levels_.size(); l-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(elements.size() * levels_[l].transversal.size());
    for (const auto& e : elements) {
      for (const auto& u : levels_[l].transversal) next.push_back(compose(e, u));
    }
    elements = std::move(next);
  }
  return elements;
}

}  // namespace sylowlab
