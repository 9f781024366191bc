#pragma once

/**
 * @file graph.hpp
 * @brief Simple undirected graphs and digraphs on vertices 0..n-1.
 *
 * Adjacency lists are sorted by vertex id. Adjacency queries use a bit matrix
 * when n <= kBitsetThreshold and a hash set of edge keys above it; the two
 * representations answer every query identically.
 */

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "error.hpp"

namespace powerchord {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

enum class AdjacencyMode { automatic, bitset, hashed };

class UndirectedGraph {
public:
  static constexpr std::size_t kBitsetThreshold = 4096;

  UndirectedGraph() = default;

  /// Duplicate edges and either orientation are accepted; self-loops are not.
  UndirectedGraph(std::size_t n, std::vector<Edge> edges, AdjacencyMode mode = AdjacencyMode::automatic) : n_(n) {
    for (auto &e : edges) {
      if (e.first >= n || e.second >= n)
        throw InvalidInput("edge endpoint out of range");
      if (e.first == e.second)
        throw InvalidInput("self-loop at vertex " + std::to_string(e.first));
      if (e.first > e.second)
        std::swap(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    adj_.assign(n, {});
    std::vector<std::size_t> deg(n, 0);
    for (const auto &[u, v] : edges) {
      ++deg[u];
      ++deg[v];
    }
    for (std::size_t v = 0; v < n; ++v)
      adj_[v].reserve(deg[v]);
    for (const auto &[u, v] : edges) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto &a : adj_)
      std::sort(a.begin(), a.end());
    edge_count_ = edges.size();

    if (mode == AdjacencyMode::automatic)
      mode = n <= kBitsetThreshold ? AdjacencyMode::bitset : AdjacencyMode::hashed;
    mode_ = mode;
    if (mode_ == AdjacencyMode::bitset) {
      words_ = (n + 63) / 64;
      bits_.assign(n * words_, 0);
      for (const auto &[u, v] : edges) {
        bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
        bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
      }
    } else {
      keys_.reserve(edges.size() * 2);
      for (const auto &[u, v] : edges)
        keys_.insert(key(u, v));
    }
  }

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }
  AdjacencyMode mode() const { return mode_; }

  const std::vector<Vertex> &neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  bool adjacent(Vertex u, Vertex v) const {
    if (u == v)
      return false;
    if (mode_ == AdjacencyMode::bitset)
      return (bits_[u * words_ + v / 64] >> (v % 64)) & 1;
    return keys_.count(key(std::min(u, v), std::max(u, v))) != 0;
  }

  /// Sorted (u, v) pairs with u < v.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : adj_[u])
        if (u < v)
          out.emplace_back(u, v);
    return out;
  }

  bool is_complete() const { return edge_count_ == n_ * (n_ == 0 ? 0 : n_ - 1) / 2; }

  /// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
  UndirectedGraph induced_subgraph(const std::vector<Vertex> &vertices) const {
    std::vector<std::int64_t> pos(n_, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (vertices[i] >= n_ || pos[vertices[i]] != -1)
        throw InvalidInput("induced_subgraph: vertex list must be distinct and in range");
      pos[vertices[i]] = static_cast<std::int64_t>(i);
    }
    std::vector<Edge> e;
    for (std::size_t i = 0; i < vertices.size(); ++i)
      for (Vertex w : adj_[vertices[i]])
        if (pos[w] > static_cast<std::int64_t>(i))
          e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(pos[w]));
    UndirectedGraph sub(vertices.size(), std::move(e));
    if (!labels_.empty()) {
      std::vector<std::string> l;
      l.reserve(vertices.size());
      for (Vertex v : vertices)
        l.push_back(labels_[v]);
      sub.set_labels(std::move(l));
    }
    return sub;
  }

  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != n_)
      throw InvalidInput("label count does not match vertex count");
    labels_ = std::move(labels);
  }
  const std::vector<std::string> &labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }
  std::string label(Vertex v) const { return labels_.empty() ? std::to_string(v) : labels_[v]; }

  friend bool operator==(const UndirectedGraph &a, const UndirectedGraph &b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

private:
  static std::uint64_t key(Vertex u, Vertex v) { return (std::uint64_t{u} << 32) | v; }

  std::size_t n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  AdjacencyMode mode_ = AdjacencyMode::bitset;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::unordered_set<std::uint64_t> keys_;
  std::vector<std::string> labels_;
};

class Digraph {
public:
  Digraph() = default;

  Digraph(std::size_t n, std::vector<Edge> arcs) : n_(n) {
    for (const auto &[u, v] : arcs) {
      if (u >= n || v >= n)
        throw InvalidInput("arc endpoint out of range");
      if (u == v)
        throw InvalidInput("self-arc at vertex " + std::to_string(u));
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    out_.assign(n, {});
    for (const auto &[u, v] : arcs)
      out_[u].push_back(v);
    arc_count_ = arcs.size();
  }

  std::size_t vertex_count() const { return n_; }
  std::size_t arc_count() const { return arc_count_; }
  const std::vector<Vertex> &out_neighbors(Vertex v) const { return out_[v]; }

  bool has_arc(Vertex u, Vertex v) const { return std::binary_search(out_[u].begin(), out_[u].end(), v); }

  /// Sorted (tail, head) pairs.
  std::vector<Edge> arcs() const {
    std::vector<Edge> out;
    out.reserve(arc_count_);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : out_[u])
        out.emplace_back(u, v);
    return out;
  }

  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != n_)
      throw InvalidInput("label count does not match vertex count");
    labels_ = std::move(labels);
  }
  const std::vector<std::string> &labels() const { return labels_; }
  std::string label(Vertex v) const { return labels_.empty() ? std::to_string(v) : labels_[v]; }

private:
  std::size_t n_ = 0;
  std::size_t arc_count_ = 0;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::string> labels_;
};

} // namespace powerchord
