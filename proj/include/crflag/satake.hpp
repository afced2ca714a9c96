#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "crflag/node_set.hpp"
#include "crflag/rootcore.hpp"

namespace crflag {

/// Unvalidated Satake data: Dynkin graph, black nodes, arrows between white
/// nodes (0-based).
struct SatakeData {
  DynkinGraph graph;
  NodeSet black;
  std::vector<std::pair<int, int>> arrows;
};

/// The conjugation sigma induced on the root lattice by a real form.
struct Conjugation {
  LatticeMap sigma;
  std::vector<int> epsilon;
  RootSet imaginary;
  /// sigma as a permutation of root indices.
  std::vector<std::size_t> on_roots;

  std::size_t apply(std::size_t root) const { return on_roots[root]; }
  RootSet apply(const RootSet& s) const;
};

enum class RootKind { Real, Imaginary, Complex };

const char* to_string(RootKind k);

/// Node involution: arrows on white nodes, the permutation induced by
/// -w0(black) on black nodes. Throws InvalidArrows unless the result is an
/// involutive automorphism of the Dynkin graph preserving the black set.
std::vector<int> epsilon_of(const SatakeData& d, const RootSystem& rs);

/// sigma = w0(black) ∘ epsilon, followed by the mandatory checks: sigma is an
/// involution of R; sigma = -id exactly on black-supported roots; sigma keeps
/// R+ \ R_• positive; sigma(alpha) - epsilon(alpha) is a nonnegative
/// combination of black simple roots for white simple alpha.
/// Throws NotASatakeDiagram when a check fails.
Conjugation build_conjugation(const SatakeData& d, const RootSystem& rs);

/// A validated Satake diagram. Node labels and the name are presentation
/// only and do not take part in equality.
class SatakeDiagram {
 public:
  explicit SatakeDiagram(SatakeData data);

  const SatakeData& data() const { return data_; }
  const DynkinGraph& graph() const { return data_.graph; }
  int rank() const { return data_.graph.rank(); }
  NodeSet black() const { return data_.black; }
  NodeSet white() const { return data_.graph.all_nodes() - data_.black; }
  /// Sorted pairs (i, j), i < j.
  const std::vector<std::pair<int, int>>& arrows() const { return data_.arrows; }
  const RootSystem& roots() const { return *roots_; }
  const std::shared_ptr<const RootSystem>& root_system() const { return roots_; }
  const Conjugation& conjugation() const { return conj_; }
  const std::vector<int>& epsilon() const { return conj_.epsilon; }

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  friend bool operator==(const SatakeDiagram& a, const SatakeDiagram& b) {
    return a.data_.graph == b.data_.graph && a.data_.black == b.data_.black &&
           a.data_.arrows == b.data_.arrows;
  }

 private:
  SatakeData data_;
  std::shared_ptr<const RootSystem> roots_;
  Conjugation conj_;
  std::vector<std::string> labels_;
  std::string name_;
};

RootKind classify_root(const Conjugation& c, const RootSystem& rs, std::size_t root);

/// Connected components of the diagram, merged across arrows; ordered by
/// smallest node.
std::vector<NodeSet> sigma_components(const SatakeDiagram& d);

/// Subdiagram on `keep`, renumbered in canonical Bourbaki order. Arrows with
/// an erased endpoint are dropped; the result is re-validated.
struct Restriction {
  SatakeDiagram diagram;
  /// New node a was old node origin[a].
  std::vector<int> origin;
};
Restriction restrict_diagram(const SatakeDiagram& d, NodeSet keep);

SatakeDiagram direct_sum(const SatakeDiagram& a, const SatakeDiagram& b);

}  // namespace crflag
