#include "fuzzytop/topology.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace fuzzytop {

namespace {

void require_ground(std::size_t n) {
  if (n < 1 || n > kMaxGround)
    throw std::invalid_argument("ground size must be in [1, " + std::to_string(kMaxGround) + "]");
}

std::vector<Subset> canonical(std::vector<Subset> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

// Closes `seed` under op with the generators, breadth first. Each element of the
// closure is a finite combination, so combining new elements with generators only
// reaches all of them.
std::vector<Subset> close_with(const std::vector<Subset>& generators, std::vector<Subset> seed,
                               Subset (*op)(Subset, Subset)) {
  std::unordered_set<std::uint32_t> seen;
  std::deque<Subset> queue;
  for (Subset s : seed)
    if (seen.insert(s.bits).second) queue.push_back(s);
  std::vector<Subset> out;
  while (!queue.empty()) {
    Subset s = queue.front();
    queue.pop_front();
    out.push_back(s);
    for (Subset g : generators) {
      Subset t = op(s, g);
      if (seen.insert(t.bits).second) queue.push_back(t);
    }
  }
  return out;
}

Subset unite(Subset a, Subset b) { return a | b; }
Subset intersect(Subset a, Subset b) { return a & b; }

}  // namespace

GroundMap::GroundMap(std::size_t target_size, std::vector<std::size_t> image)
    : target_size_(target_size), image_(std::move(image)) {
  if (target_size_ < 1 || target_size_ > kMaxGround) throw std::invalid_argument("map target size out of range");
  if (image_.empty() || image_.size() > kMaxGround) throw std::invalid_argument("map source size out of range");
  for (std::size_t y : image_)
    if (y >= target_size_) throw std::invalid_argument("map image index out of range");
}

GroundMap GroundMap::identity(std::size_t n) {
  std::vector<std::size_t> img(n);
  for (std::size_t x = 0; x < n; ++x) img[x] = x;
  return GroundMap(n, std::move(img));
}

GroundMap GroundMap::constant(std::size_t source_size, std::size_t target_size, std::size_t y) {
  return GroundMap(target_size, std::vector<std::size_t>(source_size, y));
}

GroundMap GroundMap::first_projection(std::size_t n1, std::size_t n2) {
  std::vector<std::size_t> img(n1 * n2);
  for (std::size_t p = 0; p < img.size(); ++p) img[p] = p / n2;
  return GroundMap(n1, std::move(img));
}

GroundMap GroundMap::second_projection(std::size_t n1, std::size_t n2) {
  std::vector<std::size_t> img(n1 * n2);
  for (std::size_t p = 0; p < img.size(); ++p) img[p] = p % n2;
  return GroundMap(n2, std::move(img));
}

Subset GroundMap::preimage(Subset u) const {
  Subset s;
  for (std::size_t x = 0; x < image_.size(); ++x)
    if (u.contains(image_[x])) s.bits |= 1u << x;
  return s;
}

Subset GroundMap::image_of(Subset s) const {
  Subset out;
  for (std::size_t x : points_of(s)) out.bits |= 1u << image_[x];
  return out;
}

bool GroundMap::is_surjective() const { return image_of(Subset::full(source_size())) == Subset::full(target_size_); }

std::vector<GroundMap> all_maps(std::size_t n1, std::size_t n2) {
  std::vector<GroundMap> out;
  std::vector<std::size_t> img(n1, 0);
  while (true) {
    out.emplace_back(n2, img);
    std::size_t x = n1;
    while (x > 0) {
      --x;
      if (++img[x] < n2) break;
      img[x] = 0;
      if (x == 0) return out;
    }
  }
}

Topology::Topology(std::size_t n, std::vector<Subset> opens) : n_(n), opens_(canonical(std::move(opens))) {
  require_ground(n);
  if (!is_topology(opens_, n)) throw std::invalid_argument("family is not a topology on " + std::to_string(n) + " points");
}

Topology Topology::discrete(std::size_t n) {
  require_ground(n);
  if (n > 16) throw std::invalid_argument("discrete topology too large to store");
  std::vector<Subset> all;
  for (std::uint32_t b = 0; b < (1u << n); ++b) all.push_back({b});
  return Topology(n, std::move(all));
}

Topology Topology::indiscrete(std::size_t n) { return Topology(n, {Subset::empty(), Subset::full(n)}); }

Topology Topology::sierpinski() { return Topology(2, {Subset::empty(), Subset::singleton(1), Subset::full(2)}); }

bool Topology::is_open(Subset u) const { return std::binary_search(opens_.begin(), opens_.end(), u); }

std::vector<Subset> Topology::closed_sets() const {
  std::vector<Subset> out;
  for (Subset u : opens_) out.push_back(complement_in(u, n_));
  return canonical(std::move(out));
}

Subset Topology::minimal_neighborhood(std::size_t x) const {
  Subset nb = full();
  for (Subset u : opens_)
    if (u.contains(x)) nb = nb & u;
  return nb;
}

std::string Topology::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < opens_.size(); ++i) {
    if (i) out += ',';
    out += to_string(opens_[i]);
  }
  return out + "}";
}

bool is_topology(std::span<const Subset> family, std::size_t n) {
  std::unordered_set<std::uint32_t> members;
  for (Subset s : family) {
    if (!s.fits(n)) return false;
    members.insert(s.bits);
  }
  if (!members.contains(0) || !members.contains(Subset::full(n).bits)) return false;
  std::vector<std::uint32_t> list(members.begin(), members.end());
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      if (!members.contains(list[i] | list[j]) || !members.contains(list[i] & list[j])) return false;
    }
  }
  return true;
}

Topology generate_topology(std::span<const Subset> subbase, std::size_t n) {
  require_ground(n);
  std::vector<Subset> gens;
  for (Subset s : subbase) {
    if (!s.fits(n)) throw std::invalid_argument("subbase element does not fit the ground set");
    gens.push_back(s);
  }
  gens = canonical(std::move(gens));
  // Finite intersections (the empty intersection is X), then arbitrary unions.
  std::vector<Subset> base_seed = gens;
  base_seed.push_back(Subset::full(n));
  std::vector<Subset> base = canonical(close_with(gens, base_seed, intersect));
  std::vector<Subset> opens = close_with(base, base, unite);
  opens.push_back(Subset::empty());
  return Topology(n, std::move(opens));
}

Topology relative_topology(const Topology& tau, Subset y) {
  if (y.is_empty()) throw std::invalid_argument("relative topology on the empty set");
  if (!y.fits(tau.ground_size())) throw std::invalid_argument("subset does not fit the ground set");
  std::vector<Subset> opens;
  for (Subset u : tau.opens()) opens.push_back(compress(u, y));
  return Topology(y.count(), std::move(opens));
}

Topology product_topology(const Topology& t1, const Topology& t2) {
  const std::size_t n1 = t1.ground_size(), n2 = t2.ground_size();
  if (n1 * n2 > kMaxGround) throw std::invalid_argument("product exceeds the ground size cap");
  GroundMap p1 = GroundMap::first_projection(n1, n2);
  GroundMap p2 = GroundMap::second_projection(n1, n2);
  std::vector<Subset> subbase;
  for (Subset u : t1.opens()) subbase.push_back(p1.preimage(u));
  for (Subset v : t2.opens()) subbase.push_back(p2.preimage(v));
  return generate_topology(subbase, n1 * n2);
}

Topology coproduct_topology(const Topology& t1, const Topology& t2) {
  const std::size_t n1 = t1.ground_size(), n2 = t2.ground_size();
  if (n1 + n2 > kMaxGround) throw std::invalid_argument("coproduct exceeds the ground size cap");
  std::vector<Subset> opens;
  for (Subset u : t1.opens())
    for (Subset v : t2.opens()) opens.push_back({u.bits | (v.bits << n1)});
  return Topology(n1 + n2, std::move(opens));
}

bool is_continuous(const GroundMap& h, const Topology& t1, const Topology& t2) {
  if (h.source_size() != t1.ground_size() || h.target_size() != t2.ground_size())
    throw std::invalid_argument("map does not match the topologies' ground sets");
  for (Subset u : t2.opens())
    if (!t1.is_open(h.preimage(u))) return false;
  return true;
}

bool is_quotient_map(const GroundMap& h, const Topology& t1, const Topology& t2) {
  if (h.source_size() != t1.ground_size() || h.target_size() != t2.ground_size())
    throw std::invalid_argument("map does not match the topologies' ground sets");
  const std::uint32_t limit = Subset::full(t2.ground_size()).bits;
  for (std::uint32_t b = 0;; ++b) {
    Subset u{b};
    if (t2.is_open(u) != t1.is_open(h.preimage(u))) return false;
    if (b == limit) break;
  }
  return true;
}

std::vector<Subset> clopen_sets(const Topology& tau) {
  std::vector<Subset> out;
  for (Subset u : tau.opens())
    if (tau.is_closed(u)) out.push_back(u);
  return out;
}

bool is_completely_regular(const Topology& tau) {
  const std::vector<Subset> clopens = clopen_sets(tau);
  for (Subset c : tau.closed_sets()) {
    for (std::size_t x = 0; x < tau.ground_size(); ++x) {
      if (c.contains(x)) continue;
      bool separated = std::any_of(clopens.begin(), clopens.end(),
                                   [&](Subset k) { return k.contains(x) && (k & c).is_empty(); });
      if (!separated) return false;
    }
  }
  return true;
}

bool is_hausdorff(const Topology& tau) {
  const std::size_t n = tau.ground_size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      bool separated = false;
      for (Subset u : tau.opens()) {
        if (!u.contains(x) || u.contains(y)) continue;
        for (Subset v : tau.opens()) {
          if (v.contains(y) && (u & v).is_empty()) {
            separated = true;
            break;
          }
        }
        if (separated) break;
      }
      if (!separated) return false;
    }
  }
  return true;
}

bool is_connected(const Topology& tau) {
  for (Subset k : clopen_sets(tau))
    if (!k.is_empty() && k != tau.full()) return false;
  return true;
}

Topology lower_topology_grid(unsigned q) {
  if (q < 1 || q + 1 > kMaxGround) throw std::invalid_argument("lower topology grid out of range");
  const std::size_t n = q + 1;
  std::vector<Subset> opens{Subset::empty(), Subset::full(n)};
  for (unsigned c = 0; c <= q; ++c) {
    Subset up;
    for (unsigned v = c + 1; v <= q; ++v) up.bits |= 1u << v;
    opens.push_back(up);
  }
  return Topology(n, std::move(opens));
}

}  // namespace fuzzytop
