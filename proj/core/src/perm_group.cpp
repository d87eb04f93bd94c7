#include "sylowlab/perm_group.hpp"

#include <algorithm>
#include <limits>
#include <mutex>

#include "sylowlab/error.hpp"

namespace sylowlab {

namespace detail {

struct GroupCache {
  std::once_flag chain_once;
  std::unique_ptr<StabilizerChain> chain;
  BigInt order;

  std::once_flag elements_once;
  std::vector<Permutation> elements;
};

}  // namespace detail

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), cache_(std::make_shared<detail::GroupCache>()) {
  if (degree == 0) {
    throw Error(ErrorCode::kInvalidArgument, "group degree must be positive");
  }
  for (auto& g : generators) {
    if (g.degree() != degree) {
      throw Error(ErrorCode::kDegreeMismatch,
                  "generator " + g.to_cycle_string() + " has degree " +
                      std::to_string(g.degree()) + ", expected " +
                      std::to_string(degree));
    }
    if (g.is_identity()) continue;
    if (std::find(generators_.begin(), generators_.end(), g) != generators_.end()) continue;
    generators_.push_back(std::move(g));
  }
}

const StabilizerChain& PermGroup::chain() const {
  std::call_once(cache_->chain_once, [this] {
    cache_->chain = std::make_unique<StabilizerChain>(degree_, generators_);
    cache_->order = cache_->chain->order();
  });
  return *cache_->chain;
}

const BigInt& PermGroup::order() const {
  chain();
  return cache_->order;
}

std::uint64_t PermGroup::order_u64() const {
  const BigInt& n = order();
  if (n > BigInt(std::numeric_limits<std::int64_t>::max())) {
    throw Error(ErrorCode::kCapExceeded, "group order " + n.str() + " exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(n);
}

bool PermGroup::contains(const Permutation& x) const {
  if (x.degree() != degree_) {
    throw Error(ErrorCode::kDegreeMismatch,
                "element of degree " + std::to_string(x.degree()) +
                    " tested against group of degree " + std::to_string(degree_));
  }
  return chain().contains(x);
}

const std::vector<Permutation>& PermGroup::elements(const Caps& caps) const {
  if (order() > caps.elements) {
    throw Error(ErrorCode::kCapExceeded,
                "group order " + order().str() + " exceeds element cap " +
                    std::to_string(caps.elements));
  }
  std::call_once(cache_->elements_once, [this] {
    auto all = chain().enumerate();
    std::sort(all.begin(), all.end());
    cache_->elements = std::move(all);
  });
  return cache_->elements;
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (!commute(generators_[i], generators_[j])) return false;
    }
  }
  return true;
}

std::vector<Point> PermGroup::orbit(Point point) const {
  if (point == 0 || point > degree_) {
    throw Error(ErrorCode::kOutOfRange,
                "point " + std::to_string(point) + " outside 1.." + std::to_string(degree_));
  }
  std::vector<bool> seen(degree_, false);
  std::vector<Point> queue{point - 1};
  seen[point - 1] = true;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const auto& g : generators_) {
      Point next = g.raw_images()[queue[k]];
      if (!seen[next]) {
        seen[next] = true;
        queue.push_back(next);
      }
    }
  }
  for (auto& p : queue) ++p;
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> covered(degree_, false);
  for (Point p = 1; p <= degree_; ++p) {
    if (covered[p - 1]) continue;
    auto o = orbit(p);
    for (Point q : o) covered[q - 1] = true;
    out.push_back(std::move(o));
  }
  return out;
}

bool PermGroup::is_transitive() const { return orbit(1).size() == degree_; }

PermGroup PermGroup::stabilizer(Point point) const {
  if (point == 0 || point > degree_) {
    throw Error(ErrorCode::kOutOfRange, "stabilizer point out of range");
  }
  // Orbit with transversal, then Schreier generators u_b s u_{b^s}^-1.
  std::vector<std::int64_t> position(degree_, -1);
  std::vector<Point> orbit_points{point - 1};
  std::vector<Permutation> transversal{identity()};
  position[point - 1] = 0;
  for (std::size_t k = 0; k < orbit_points.size(); ++k) {
    for (const auto& s : generators_) {
      Point next = s.raw_images()[orbit_points[k]];
      if (position[next] >= 0) continue;
      position[next] = static_cast<std::int64_t>(orbit_points.size());
      orbit_points.push_back(next);
      transversal.push_back(compose(transversal[k], s));
    }
  }
  std::vector<Permutation> schreier;
  for (std::size_t k = 0; k < orbit_points.size(); ++k) {
    for (const auto& s : generators_) {
      Point next = s.raw_images()[orbit_points[k]];
      const auto& back = transversal[static_cast<std::size_t>(position[next])];
      Permutation h = compose(compose(transversal[k], s), back.inverse());
      if (!h.is_identity()) schreier.push_back(std::move(h));
    }
  }
  std::sort(schreier.begin(), schreier.end());
  schreier.erase(std::unique(schreier.begin(), schreier.end()), schreier.end());
  // Greedy thinning keeps the generating set small.
  std::vector<Permutation> kept;
  PermGroup current = trivial(degree_);
  for (auto& h : schreier) {
    if (current.contains(h)) continue;
    kept.push_back(h);
    current = PermGroup(degree_, kept);
    if (current.order() * orbit_points.size() == order()) break;
  }
  return current;
}

std::string PermGroup::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i > 0) out += ",";
    out += generators_[i].to_cycle_string();
  }
  return out + ">";
}

}  // namespace sylowlab
