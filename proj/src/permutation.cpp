#include "semireg/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace semireg {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) throw ParameterError("Permutation: images do not form a bijection");
    seen[p] = 1;
  }
}

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.images_.resize(n);
  std::iota(p.images_.begin(), p.images_.end(), Point{0});
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

std::vector<std::size_t> Permutation::cycle_lengths() const {
  std::vector<char> seen(images_.size(), 0);
  std::vector<std::size_t> lengths;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (Point p = static_cast<Point>(i); !seen[p]; p = images_[p]) {
      seen[p] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::uint64_t Permutation::order() const {
  std::uint64_t r = 1;
  for (std::size_t len : cycle_lengths()) {
    const std::uint64_t g = std::gcd(r, static_cast<std::uint64_t>(len));
    const std::uint64_t factor = len / g;
    if (r > UINT64_MAX / factor) throw CapacityError("Permutation::order: overflow");
    r *= factor;
  }
  return r;
}

bool Permutation::is_semiregular() const {
  const auto lengths = cycle_lengths();
  return lengths.empty() || lengths.front() == lengths.back();
}

Permutation operator*(const Permutation& g, const Permutation& h) {
  if (g.degree() != h.degree()) throw ParameterError("Permutation: degree mismatch in product");
  Permutation r;
  r.images_.resize(g.images_.size());
  for (std::size_t i = 0; i < g.images_.size(); ++i) r.images_[i] = h.images_[g.images_[i]];
  return r;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators, std::vector<Point> base_prefix)
    : degree_(degree) {
  for (auto& g : generators) {
    check_degree(g);
    if (!g.is_identity()) generators_.push_back(std::move(g));
  }
  for (Point b : base_prefix)
    if (b >= degree_) throw ParameterError("PermGroup: base point out of range");
  build_chain(std::move(base_prefix));
}

void PermGroup::check_degree(const Permutation& p) const {
  if (p.degree() != degree_)
    throw ParameterError("PermGroup: permutation of degree " + std::to_string(p.degree()) +
                         " in group of degree " + std::to_string(degree_));
}

void PermGroup::rebuild_orbit(Level& level) const {
  level.orbit.assign(1, level.base_point);
  level.slot.assign(degree_, -1);
  level.reps.assign(1, Permutation::identity(degree_));
  level.slot[level.base_point] = 0;
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    const Point p = level.orbit[k];
    for (const auto& s : level.gens) {
      const Point q = s(p);
      if (level.slot[q] >= 0) continue;
      level.slot[q] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(q);
      level.reps.push_back(level.reps[k] * s);
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::strip(Permutation g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level& level = levels_[i];
    const Point x = g(level.base_point);
    const std::int32_t k = level.slot[x];
    if (k < 0) return {std::move(g), i};
    g = g * level.reps[static_cast<std::size_t>(k)].inverse();
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::build_chain(std::vector<Point> prefix) {
  auto first_moved = [](const Permutation& g) {
    for (std::size_t i = 0; i < g.degree(); ++i)
      if (g(static_cast<Point>(i)) != i) return static_cast<Point>(i);
    return Point{0};
  };

  base_ = std::move(prefix);
  for (const auto& g : generators_) {
    const bool fixes_base = std::all_of(base_.begin(), base_.end(), [&](Point b) { return g(b) == b; });
    if (fixes_base) base_.push_back(first_moved(g));
  }
  levels_.assign(base_.size(), Level{});
  for (std::size_t i = 0; i < base_.size(); ++i) {
    levels_[i].base_point = base_[i];
    for (const auto& g : generators_) {
      bool fixes_prefix = true;
      for (std::size_t j = 0; j < i && fixes_prefix; ++j) fixes_prefix = g(base_[j]) == base_[j];
      if (fixes_prefix) levels_[i].gens.push_back(g);
    }
  }

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    Level& level = levels_[static_cast<std::size_t>(i)];
    rebuild_orbit(level);
    bool restarted = false;
    for (std::size_t k = 0; !restarted && k < level.orbit.size(); ++k) {
      const Point p = level.orbit[k];
      for (std::size_t si = 0; !restarted && si < level.gens.size(); ++si) {
        const Permutation& s = level.gens[si];
        const Point q = s(p);
        Permutation h = level.reps[k] * s * level.reps[static_cast<std::size_t>(level.slot[q])].inverse();
        if (h.is_identity()) continue;
        auto [residue, stop] = strip(std::move(h), static_cast<std::size_t>(i) + 1);
        if (stop == levels_.size() && residue.is_identity()) continue;
        if (stop == levels_.size()) {
          const Point b = first_moved(residue);
          base_.push_back(b);
          Level fresh;
          fresh.base_point = b;
          levels_.push_back(std::move(fresh));
        }
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= stop; ++l) levels_[l].gens.push_back(residue);
        i = static_cast<std::ptrdiff_t>(stop);
        restarted = true;
      }
    }
    if (restarted) continue;
    --i;
  }
}

std::vector<Point> PermGroup::orbit(Point point) const {
  if (point >= degree_) throw ParameterError("PermGroup::orbit: point out of range");
  std::vector<char> seen(degree_, 0);
  std::vector<Point> out{point};
  seen[point] = 1;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : generators_) {
      const Point q = g(out[k]);
      if (seen[q]) continue;
      seen[q] = 1;
      out.push_back(q);
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool PermGroup::is_transitive() const { return degree_ == 0 || orbit(0).size() == degree_; }

std::uint64_t PermGroup::order() const {
  std::uint64_t r = 1;
  for (const auto& level : levels_) {
    const std::uint64_t s = level.orbit.size();
    if (r > UINT64_MAX / s) throw CapacityError("PermGroup::order: overflow");
    r *= s;
  }
  return r;
}

bool PermGroup::contains(const Permutation& p) const {
  check_degree(p);
  auto [residue, stop] = strip(p, 0);
  return stop == levels_.size() && residue.is_identity();
}

std::vector<std::size_t> PermGroup::basic_orbit_sizes() const {
  std::vector<std::size_t> sizes;
  for (const auto& level : levels_) sizes.push_back(level.orbit.size());
  return sizes;
}

PermGroup PermGroup::point_stabilizer(Point point) const {
  if (point >= degree_) throw ParameterError("PermGroup::point_stabilizer: point out of range");
  if (!base_.empty() && base_.front() == point) {
    std::vector<Permutation> gens = levels_.size() > 1 ? levels_[1].gens : std::vector<Permutation>{};
    return PermGroup(degree_, std::move(gens));
  }
  const PermGroup rebased(degree_, generators_, {point});
  std::vector<Permutation> gens = rebased.levels_.size() > 1 ? rebased.levels_[1].gens : std::vector<Permutation>{};
  return PermGroup(degree_, std::move(gens));
}

std::optional<Permutation> PermGroup::find_mapping(Point from, Point to) const {
  if (from >= degree_ || to >= degree_) throw ParameterError("PermGroup::find_mapping: point out of range");
  if (from == to) return Permutation::identity(degree_);
  if (levels_.empty()) return std::nullopt;
  const PermGroup rebased = (base_.front() == from) ? *this : PermGroup(degree_, generators_, {from});
  const Level& level = rebased.levels_.front();
  const std::int32_t k = level.slot[to];
  if (k < 0) return std::nullopt;
  return level.reps[static_cast<std::size_t>(k)];
}

}  // namespace semireg
