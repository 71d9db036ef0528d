#include "treelabel/families.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "treelabel/bitcodec.hpp"
#include "treelabel/random.hpp"

namespace treelabel {

std::uint64_t HwaTree::level_weight(unsigned level) const {
  std::uint64_t w = W;
  for (unsigned i = 0; i < level; ++i) w /= a;
  return w;
}

std::optional<std::size_t> HwaTree::leaf_index(NodeId v) const {
  const auto it = std::find(leaves.begin(), leaves.end(), v);
  if (it == leaves.end()) return std::nullopt;
  return static_cast<std::size_t>(it - leaves.begin());
}

namespace {

void check_hwa_params(unsigned h, std::uint64_t W, std::uint64_t a) {
  if (a == 0) throw std::invalid_argument("a must be positive");
  if (W == 0) throw std::invalid_argument("W must be positive");
  if (h > 24) throw std::invalid_argument("h too large");
  std::uint64_t w = W;
  for (unsigned i = 1; i <= h; ++i) {
    if (w % a != 0) {
      throw std::invalid_argument("W/a^" + std::to_string(i) + " is not integral");
    }
    w /= a;
    if (w == 0) throw std::invalid_argument("W/a^" + std::to_string(i) + " is zero");
  }
}

HwaTree assemble(unsigned h, std::uint64_t W, std::uint64_t a, std::vector<std::uint64_t> x) {
  HwaTree out;
  out.h = h;
  out.W = W;
  out.a = a;
  out.x = std::move(x);

  std::vector<NodeId> parent{kNoParent};
  std::vector<Weight> weight{0};
  auto add = [&](NodeId p, Weight w) {
    parent.push_back(p);
    weight.push_back(w);
    return static_cast<NodeId>(parent.size() - 1);
  };

  // Level by level; roots[c] is the node the claw c hangs from.
  std::vector<NodeId> roots{0};
  for (unsigned level = 0; level < h; ++level) {
    const std::uint64_t budget = out.level_weight(level);
    const std::size_t first = (std::size_t{1} << level) - 1;
    std::vector<NodeId> next;
    next.reserve(roots.size() * 2);
    for (std::size_t j = 0; j < roots.size(); ++j) {
      const std::uint64_t xc = out.x[first + j];
      const NodeId center = add(roots[j], budget - xc);
      next.push_back(add(center, xc));
      next.push_back(add(center, xc));
    }
    roots = std::move(next);
  }
  out.leaves = std::move(roots);
  out.tree = Tree(std::move(parent), std::move(weight), WeightPolicy::kNonNegative);
  return out;
}

}  // namespace

HwaTree build_hwa(unsigned h, std::uint64_t W, std::uint64_t a, std::uint64_t seed) {
  check_hwa_params(h, W, a);
  Rng rng(seed);
  std::vector<std::uint64_t> x((std::size_t{1} << h) - 1);
  std::uint64_t budget = W;
  for (unsigned level = 0; level < h; ++level, budget /= a) {
    const std::size_t first = (std::size_t{1} << level) - 1;
    for (std::size_t j = 0; j < (std::size_t{1} << level); ++j) {
      x[first + j] = rng.uniform(0, budget - 1);
    }
  }
  return assemble(h, W, a, std::move(x));
}

HwaTree build_hwa(unsigned h, std::uint64_t W, std::uint64_t a, std::vector<std::uint64_t> x) {
  check_hwa_params(h, W, a);
  if (x.size() != (std::size_t{1} << h) - 1) {
    throw std::invalid_argument("expected 2^h - 1 claw weights");
  }
  std::uint64_t budget = W;
  for (unsigned level = 0; level < h; ++level, budget /= a) {
    const std::size_t first = (std::size_t{1} << level) - 1;
    for (std::size_t j = 0; j < (std::size_t{1} << level); ++j) {
      if (x[first + j] >= budget) {
        throw std::invalid_argument("claw " + std::to_string(first + j) + " weight out of range");
      }
    }
  }
  return assemble(h, W, a, std::move(x));
}

std::uint64_t hwa_leaf_distance(const HwaTree& t, NodeId u, NodeId v) {
  const auto iu = t.leaf_index(u);
  const auto iv = t.leaf_index(v);
  if (!iu || !iv) throw std::invalid_argument("hwa_leaf_distance takes two leaves");
  if (*iu == *iv) return 0;

  // Leaf indices are h-bit root-to-leaf side choices; the top differing bit
  // names the separating claw.
  const unsigned split = bit_width(*iu ^ *iv);  // bits below and including the split
  const unsigned level = t.h - split;
  const std::size_t claw = ((std::size_t{1} << level) - 1) + (*iu >> split);
  std::uint64_t below = 0;
  std::uint64_t w = t.level_weight(level);
  for (unsigned i = 1; i < split; ++i) {
    w /= t.a;
    below += w;
  }
  return 2 * t.x[claw] + 2 * below;
}

Expansion expand_unweighted(const Tree& t) {
  const std::size_t n = t.size();
  std::vector<NodeId> parent;
  Expansion out{Tree(std::vector<NodeId>{kNoParent}), std::vector<NodeId>(n, kNoParent)};
  for (NodeId v : t.top_down()) {
    if (v == t.root()) {
      parent.push_back(kNoParent);
      out.image[v] = 0;
      continue;
    }
    NodeId up = out.image[t.parent(v)];
    const Weight w = t.weight(v);
    if (w == 0) {
      out.image[v] = up;
      continue;
    }
    for (Weight i = 0; i < w; ++i) {
      parent.push_back(up);
      up = static_cast<NodeId>(parent.size() - 1);
    }
    out.image[v] = up;
  }
  out.tree = Tree(std::move(parent));
  return out;
}

HwaTree phi_split(const HwaTree& t_prime, std::uint64_t V, std::uint64_t a, unsigned side) {
  if (side > 1) throw std::invalid_argument("side must be 0 or 1");
  if (V == 0 || a == 0) throw std::invalid_argument("V and a must be positive");
  if (t_prime.W != V * V || t_prime.a != a * a) {
    throw std::invalid_argument("phi_split expects an (h, V^2, a^2)-tree");
  }
  check_hwa_params(t_prime.h, V, a);
  std::vector<std::uint64_t> x(t_prime.x.size());
  std::uint64_t base = V;
  for (unsigned level = 0; level < t_prime.h; ++level, base /= a) {
    const std::size_t first = (std::size_t{1} << level) - 1;
    for (std::size_t j = 0; j < (std::size_t{1} << level); ++j) {
      const std::uint64_t y = t_prime.x[first + j];
      x[first + j] = side == 0 ? y % base : y / base;
    }
  }
  return build_hwa(t_prime.h, V, a, std::move(x));
}

HardCaterpillar gen_hard_caterpillar(std::size_t n, std::uint64_t seed) {
  if (n < 4) throw std::invalid_argument("hard caterpillar needs n >= 4");
  const unsigned k = floor_log2(n);
  const std::size_t m = std::size_t{1} << k;
  const std::size_t spine = m / 2;
  HardCaterpillar out{Tree(std::vector<NodeId>{kNoParent}), {}, m / (2 * k)};

  Rng rng(seed);
  out.positions.push_back(1);
  for (unsigned t = 1; t < k; ++t) out.positions.push_back(rng.uniform(1, spine));

  std::vector<NodeId> parent(spine);
  parent[0] = kNoParent;
  for (std::size_t p = 1; p < spine; ++p) parent[p] = static_cast<NodeId>(p - 1);
  for (const std::uint64_t pos : out.positions) {
    for (std::size_t j = 0; j < out.group_size; ++j) {
      parent.push_back(static_cast<NodeId>(pos - 1));
    }
  }
  out.tree = Tree(std::move(parent));
  return out;
}

}  // namespace treelabel
