#pragma once

// Reduced root systems of semisimple type, generated from Dynkin data.
//
// Roots live in simple-root coordinates only. The Cartan matrix convention is
// cartan[i][j] = <alpha_i, alpha_j^vee>, so the simple reflection is
//   s_i(beta) = beta - (sum_j beta_j cartan[j][i]) alpha_i.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crflag/node_set.hpp"

namespace crflag {

using CartanMatrix = std::vector<std::vector<int>>;

enum class SimpleType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Largest rank accepted for a single connected component.
inline constexpr int kMaxComponentRank = 8;

struct Component {
  SimpleType type;
  int rank;

  std::string name() const { return std::string(1, static_cast<char>(type)) + std::to_string(rank); }
  friend bool operator==(const Component&, const Component&) = default;
};

struct Edge {
  int i;             // 0-based, i < j
  int j;
  int multiplicity;  // 1, 2 or 3
  int shorter;       // endpoint of the shorter root when multiplicity > 1, else -1
};

/// Disjoint union of simple Dynkin diagrams, each numbered in Bourbaki order
/// and occupying a contiguous block of node indices.
class DynkinGraph {
 public:
  explicit DynkinGraph(std::vector<Component> components);

  /// Parses "A3", "A3+A1", "E6+E6".
  static DynkinGraph parse(std::string_view name);

  /// Canonical form of an arbitrary finite-type Cartan matrix. Returns the
  /// graph together with `order`, where new node a is old node order[a].
  /// Components are listed by their smallest old index.
  struct Identified;
  static Identified identify(const CartanMatrix& cartan);

  int rank() const { return rank_; }
  const std::vector<Component>& components() const { return components_; }
  const CartanMatrix& cartan() const { return cartan_; }
  std::vector<Edge> edges() const;
  std::string name() const;

  int component_of(int node) const { return component_of_[node]; }
  int component_offset(std::size_t c) const { return offsets_[c]; }
  NodeSet component_nodes(std::size_t c) const;
  NodeSet all_nodes() const { return NodeSet::first_n(rank_); }
  bool adjacent(int i, int j) const { return i != j && cartan_[i][j] != 0; }

  friend bool operator==(const DynkinGraph& a, const DynkinGraph& b) {
    return a.components_ == b.components_;
  }

 private:
  std::vector<Component> components_;
  std::vector<int> offsets_;
  std::vector<int> component_of_;
  CartanMatrix cartan_;
  int rank_ = 0;
};

struct DynkinGraph::Identified {
  DynkinGraph graph;
  std::vector<int> order;
};

/// Cartan matrix of one simple type in Bourbaki numbering.
CartanMatrix standard_cartan(Component c);

/// Number of roots of a simple type.
int classical_root_count(Component c);

/// A root in simple-root coordinates.
struct Root {
  std::vector<int> coeffs;

  int height() const;
  bool is_positive() const;
  bool is_negative() const;
  Root operator-() const;
  Root operator+(const Root& o) const;
  Root operator-(const Root& o) const;

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

std::string to_string(const Root& r);

/// Nodes where the coordinate is nonzero.
NodeSet support(const Root& r);

/// Linear endomorphism of the root lattice. Column j is the image of alpha_j.
class LatticeMap {
 public:
  LatticeMap() = default;
  explicit LatticeMap(int rank);  // identity
  static LatticeMap permutation(const std::vector<int>& perm);

  int rank() const { return rank_; }
  int at(int i, int j) const { return m_[static_cast<std::size_t>(i) * rank_ + j]; }
  int& at(int i, int j) { return m_[static_cast<std::size_t>(i) * rank_ + j]; }

  Root apply(const Root& r) const;
  /// (*this) ∘ o
  LatticeMap compose(const LatticeMap& o) const;
  bool is_identity() const;

  friend bool operator==(const LatticeMap&, const LatticeMap&) = default;

 private:
  int rank_ = 0;
  std::vector<int> m_;
};

/// Subset of the roots of a fixed RootSystem, indexed by root index.
class RootSet {
 public:
  RootSet() = default;
  explicit RootSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return universe_; }
  bool contains(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void insert(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void erase(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  bool subset_of(const RootSet& o) const;
  std::vector<std::size_t> indices() const;

  RootSet operator|(const RootSet& o) const;
  RootSet operator&(const RootSet& o) const;
  RootSet operator-(const RootSet& o) const;

  friend bool operator==(const RootSet&, const RootSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Complete reduced root system with positive system R+ = roots with
/// nonnegative coordinates. Immutable after construction.
///
/// Root order: positive roots by height then coordinates, followed by the
/// negatives in the same order, so root(i + |R+|) == -root(i).
class RootSystem {
 public:
  explicit RootSystem(DynkinGraph graph);

  /// Shared instance per graph; thread-safe.
  static std::shared_ptr<const RootSystem> get(const DynkinGraph& graph);

  const DynkinGraph& graph() const { return graph_; }
  const CartanMatrix& cartan() const { return graph_.cartan(); }
  int rank() const { return graph_.rank(); }
  std::size_t size() const { return roots_.size(); }
  std::size_t positive_count() const { return roots_.size() / 2; }

  const Root& root(std::size_t idx) const { return roots_[idx]; }
  const std::vector<Root>& roots() const { return roots_; }
  std::optional<std::size_t> index_of(const Root& r) const;
  std::size_t simple(int node) const { return simple_[node]; }
  std::size_t negation(std::size_t idx) const {
    return idx < positive_count() ? idx + positive_count() : idx - positive_count();
  }
  /// Index of root(a) + root(b) when that sum is a root.
  std::optional<std::size_t> sum(std::size_t a, std::size_t b) const {
    const std::int32_t s = sum_[a * roots_.size() + b];
    if (s < 0) return std::nullopt;
    return static_cast<std::size_t>(s);
  }
  NodeSet support(std::size_t idx) const { return supports_[idx]; }
  int component_of(std::size_t idx) const { return root_component_[idx]; }

  RootSet none() const { return RootSet(size()); }
  RootSet all() const;
  RootSet positive() const;
  RootSet negative() const;
  /// Roots whose support lies inside `nodes`.
  RootSet supported_in(NodeSet nodes) const;

  /// <beta, alpha_i^vee>
  int pairing(const Root& beta, int i) const;
  Root reflect(const Root& beta, int i) const;
  LatticeMap reflection(int i) const;

  /// Reduced word (0-based nodes) of the longest element of the parabolic
  /// Weyl subgroup generated by the simple reflections in `nodes`.
  std::vector<int> longest_word(NodeSet nodes) const;
  /// Action of that longest element on the lattice; cached per node set.
  LatticeMap longest_involution(NodeSet nodes) const;

  /// Smallest superset of s closed under root addition.
  RootSet closure(const RootSet& s) const;
  /// Image of a set of roots under a lattice map that preserves R.
  RootSet image(const LatticeMap& m, const RootSet& s) const;
  RootSet negate(const RootSet& s) const;

 private:
  DynkinGraph graph_;
  std::vector<Root> roots_;
  std::map<std::vector<int>, std::size_t> index_;
  std::vector<std::size_t> simple_;
  std::vector<NodeSet> supports_;
  std::vector<int> root_component_;
  std::vector<std::int32_t> sum_;

  mutable std::mutex cache_mutex_;
  mutable std::map<std::uint64_t, LatticeMap> longest_cache_;
};

}  // namespace crflag
