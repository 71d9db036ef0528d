#include "treelabel/tree.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "treelabel/errors.hpp"
#include "treelabel/random.hpp"

namespace treelabel {

namespace {

std::string node_msg(NodeId v, const std::string& what) {
  return "node " + std::to_string(v) + ": " + what;
}

}  // namespace

Tree::Tree(std::vector<NodeId> parent, std::vector<Weight> weight, WeightPolicy policy)
    : parent_(std::move(parent)), weight_(std::move(weight)) {
  const std::size_t n = parent_.size();
  if (n == 0) throw ParseError("tree must have at least one node");
  if (n >= kNoParent) throw ParseError("tree too large");
  if (!weight_.empty() && weight_.size() != n) {
    throw ParseError("weight array has " + std::to_string(weight_.size()) +
                     " entries, expected " + std::to_string(n));
  }

  bool found_root = false;
  for (NodeId v = 0; v < n; ++v) {
    if (parent_[v] == kNoParent) {
      if (found_root) throw ParseError(node_msg(v, "second root"));
      found_root = true;
      root_ = v;
    } else if (parent_[v] >= n) {
      throw ParseError(node_msg(v, "parent " + std::to_string(parent_[v]) + " out of range"));
    } else if (parent_[v] == v) {
      throw ParseError(node_msg(v, "parent cycle"));
    }
  }
  if (!found_root) throw ParseError("no root (every node has a parent)");

  if (!weight_.empty()) {
    weight_[root_] = 0;
    for (NodeId v = 0; v < n; ++v) {
      if (v == root_) continue;
      if (weight_[v] == 0 && policy == WeightPolicy::kPositive) {
        throw ParseError(node_msg(v, "non-positive edge weight"));
      }
    }
  }

  // Children in CSR form, ordered by id.
  child_begin_.assign(n + 1, 0);
  for (NodeId v = 0; v < n; ++v) {
    if (v != root_) ++child_begin_[parent_[v] + 1];
  }
  for (std::size_t i = 0; i < n; ++i) child_begin_[i + 1] += child_begin_[i];
  child_list_.resize(n - 1);
  std::vector<std::uint32_t> fill(child_begin_.begin(), child_begin_.end() - 1);
  for (NodeId v = 0; v < n; ++v) {
    if (v != root_) child_list_[fill[parent_[v]]++] = v;
  }

  order_.reserve(n);
  order_.push_back(root_);
  for (std::size_t head = 0; head < order_.size(); ++head) {
    for (NodeId c : children(order_[head])) order_.push_back(c);
  }
  if (order_.size() != n) {
    // Some node is not reachable from the root: it sits on a cycle.
    std::vector<bool> seen(n, false);
    for (NodeId v : order_) seen[v] = true;
    for (NodeId v = 0; v < n; ++v) {
      if (!seen[v]) throw ParseError(node_msg(v, "parent cycle (not connected to root)"));
    }
  }
}

bool Tree::unit_weighted() const noexcept {
  for (NodeId v = 0; v < weight_.size(); ++v) {
    if (v != root_ && weight_[v] != 1) return false;
  }
  return true;
}

Weight distroot(const Tree& t, NodeId v) {
  Weight d = 0;
  for (; v != t.root(); v = t.parent(v)) d += t.weight(v);
  return d;
}

std::vector<Weight> all_distroots(const Tree& t) {
  std::vector<Weight> d(t.size(), 0);
  for (NodeId v : t.top_down()) {
    if (v != t.root()) d[v] = d[t.parent(v)] + t.weight(v);
  }
  return d;
}

std::vector<std::uint32_t> all_depths(const Tree& t) {
  std::vector<std::uint32_t> d(t.size(), 0);
  for (NodeId v : t.top_down()) {
    if (v != t.root()) d[v] = d[t.parent(v)] + 1;
  }
  return d;
}

namespace {

std::uint32_t depth_of(const Tree& t, NodeId v) {
  std::uint32_t d = 0;
  for (; v != t.root(); v = t.parent(v)) ++d;
  return d;
}

}  // namespace

NodeId nca_by_walk(const Tree& t, NodeId u, NodeId v) {
  auto du = depth_of(t, u);
  auto dv = depth_of(t, v);
  for (; du > dv; --du) u = t.parent(u);
  for (; dv > du; --dv) v = t.parent(v);
  while (u != v) {
    u = t.parent(u);
    v = t.parent(v);
  }
  return u;
}

Weight oracle_dist(const Tree& t, NodeId u, NodeId v) {
  auto du = depth_of(t, u);
  auto dv = depth_of(t, v);
  Weight d = 0;
  for (; du > dv; --du) {
    d += t.weight(u);
    u = t.parent(u);
  }
  for (; dv > du; --dv) {
    d += t.weight(v);
    v = t.parent(v);
  }
  while (u != v) {
    d += t.weight(u) + t.weight(v);
    u = t.parent(u);
    v = t.parent(v);
  }
  return d;
}

std::vector<Weight> oracle_distances_from(const Tree& t, NodeId source) {
  constexpr Weight kUnset = std::numeric_limits<Weight>::max();
  std::vector<Weight> dist(t.size(), kUnset);
  std::vector<NodeId> stack{source};
  dist[source] = 0;
  while (!stack.empty()) {
    const NodeId x = stack.back();
    stack.pop_back();
    if (x != t.root() && dist[t.parent(x)] == kUnset) {
      dist[t.parent(x)] = dist[x] + t.weight(x);
      stack.push_back(t.parent(x));
    }
    for (NodeId c : t.children(x)) {
      if (dist[c] == kUnset) {
        dist[c] = dist[x] + t.weight(c);
        stack.push_back(c);
      }
    }
  }
  return dist;
}

Tree parse_tree(std::string_view text, WeightPolicy policy) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("tree document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("tree document must be an object");
  try {
    const auto n = doc.at("n").get<std::int64_t>();
    const auto root = doc.at("root").get<std::int64_t>();
    const auto& parents = doc.at("parent");
    if (n < 1) throw ParseError("n must be positive");
    if (!parents.is_array() || static_cast<std::int64_t>(parents.size()) != n) {
      throw ParseError("parent must be an array of n entries");
    }
    if (root < 0 || root >= n) throw ParseError("root out of range");
    std::vector<NodeId> parent(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
      const auto& p = parents[static_cast<std::size_t>(i)];
      if (p.is_null()) {
        if (i != root) throw ParseError(node_msg(static_cast<NodeId>(i), "null parent but not root"));
        parent[static_cast<std::size_t>(i)] = kNoParent;
      } else {
        if (i == root) throw ParseError(node_msg(static_cast<NodeId>(i), "root has a parent"));
        const auto pv = p.get<std::int64_t>();
        if (pv < 0 || pv >= n) {
          throw ParseError(node_msg(static_cast<NodeId>(i), "orphan (parent out of range)"));
        }
        parent[static_cast<std::size_t>(i)] = static_cast<NodeId>(pv);
      }
    }
    std::vector<Weight> weight;
    if (doc.contains("weight") && !doc["weight"].is_null()) {
      const auto& ws = doc["weight"];
      if (!ws.is_array() || static_cast<std::int64_t>(ws.size()) != n) {
        throw ParseError("weight must be an array of n entries");
      }
      weight.resize(static_cast<std::size_t>(n), 0);
      for (std::int64_t i = 0; i < n; ++i) {
        const auto& w = ws[static_cast<std::size_t>(i)];
        if (i == root) {
          if (!w.is_null()) throw ParseError("weight entry at root must be null");
          continue;
        }
        if (w.is_null()) throw ParseError(node_msg(static_cast<NodeId>(i), "missing weight"));
        const auto wv = w.get<std::int64_t>();
        if (wv < 0) throw ParseError(node_msg(static_cast<NodeId>(i), "non-positive edge weight"));
        weight[static_cast<std::size_t>(i)] = static_cast<Weight>(wv);
      }
    }
    return Tree(std::move(parent), std::move(weight), policy);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed tree document: ") + e.what());
  }
}

std::string serialize_tree(const Tree& t) {
  nlohmann::ordered_json doc;
  doc["n"] = t.size();
  doc["root"] = t.root();
  auto parents = nlohmann::ordered_json::array();
  for (NodeId v = 0; v < t.size(); ++v) {
    if (v == t.root()) {
      parents.push_back(nullptr);
    } else {
      parents.push_back(t.parent(v));
    }
  }
  doc["parent"] = std::move(parents);
  if (t.has_weights()) {
    auto ws = nlohmann::ordered_json::array();
    for (NodeId v = 0; v < t.size(); ++v) {
      if (v == t.root()) {
        ws.push_back(nullptr);
      } else {
        ws.push_back(t.weight(v));
      }
    }
    doc["weight"] = std::move(ws);
  }
  return doc.dump();
}

Tree gen_random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("gen_random_tree: n must be >= 1");
  Rng rng(seed);
  std::vector<NodeId> parent(n, kNoParent);
  for (std::size_t i = 1; i < n; ++i) parent[i] = static_cast<NodeId>(rng.uniform(0, i - 1));
  return Tree(std::move(parent));
}

Tree gen_random_caterpillar(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("gen_random_caterpillar: n must be >= 2");
  Rng rng(seed);
  const std::size_t spine = rng.uniform(1, n);
  std::vector<NodeId> parent(n, kNoParent);
  for (std::size_t i = 1; i < spine; ++i) parent[i] = static_cast<NodeId>(i - 1);
  for (std::size_t i = spine; i < n; ++i) {
    parent[i] = static_cast<NodeId>(rng.uniform(0, spine - 1));
  }
  return Tree(std::move(parent));
}

Tree gen_weighted_path(std::size_t k, Weight max_w, std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("gen_weighted_path: k must be >= 2");
  if (max_w < 1) throw std::invalid_argument("gen_weighted_path: max_w must be >= 1");
  Rng rng(seed);
  std::vector<NodeId> parent(k, kNoParent);
  std::vector<Weight> weight(k, 0);
  for (std::size_t i = 1; i < k; ++i) {
    parent[i] = static_cast<NodeId>(i - 1);
    weight[i] = rng.uniform(1, max_w);
  }
  return Tree(std::move(parent), std::move(weight));
}

bool is_caterpillar(const Tree& t) {
  const std::size_t n = t.size();
  if (n <= 2) return true;
  std::vector<std::uint32_t> degree(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    if (v != t.root()) {
      ++degree[v];
      ++degree[t.parent(v)];
    }
  }
  // Non-leaf nodes induce a subtree; it is a path iff no node has > 2
  // non-leaf neighbours.
  for (NodeId v = 0; v < n; ++v) {
    if (degree[v] < 2) continue;
    std::uint32_t spine_nbrs = 0;
    if (v != t.root() && degree[t.parent(v)] >= 2) ++spine_nbrs;
    for (NodeId c : t.children(v)) spine_nbrs += degree[c] >= 2;
    if (spine_nbrs > 2) return false;
  }
  return true;
}

bool is_rooted_path(const Tree& t) {
  for (NodeId v = 0; v < t.size(); ++v) {
    if (t.children(v).size() > 1) return false;
  }
  return true;
}

}  // namespace treelabel
