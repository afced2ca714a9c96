#pragma once

// Parabolic minimal CR algebras (g, q_Phi) given by cross-marked Satake
// diagrams, and their CR invariants computed on root sets.

#include <vector>

#include "crflag/node_set.hpp"
#include "crflag/rootcore.hpp"
#include "crflag/satake.hpp"

namespace crflag {

/// Satake diagram plus cross set Phi. Throws OutOfRange if Phi has a node
/// outside the diagram.
class CrossedDiagram {
 public:
  CrossedDiagram(SatakeDiagram satake, NodeSet crosses);

  const SatakeDiagram& satake() const { return satake_; }
  const RootSystem& roots() const { return satake_.roots(); }
  const Conjugation& conjugation() const { return satake_.conjugation(); }
  NodeSet crosses() const { return crosses_; }
  int rank() const { return satake_.rank(); }

  /// Same Satake diagram, different crosses.
  CrossedDiagram with_crosses(NodeSet crosses) const { return {satake_, crosses}; }

  friend bool operator==(const CrossedDiagram&, const CrossedDiagram&) = default;

 private:
  SatakeDiagram satake_;
  NodeSet crosses_;
};

struct ParabolicRootData {
  RootSet q;          // R+ ∪ phi_check
  RootSet qr;         // Q ∩ -Q
  RootSet qn;         // Q \ Qr
  RootSet phi_check;  // negative roots whose support avoids Phi
};

ParabolicRootData parabolic_roots(const RootSystem& rs, NodeSet crosses);

/// Q_Phi alone.
RootSet parabolic_set(const RootSystem& rs, NodeSet crosses);

struct CrType {
  int n = 0;  // CR dimension
  int k = 0;  // CR codimension
  int dim_g = 0;
  int dim_isotropy = 0;

  friend bool operator==(const CrType&, const CrType&) = default;
};

CrType cr_type(const RootSystem& rs, const ParabolicRootData& pd, const Conjugation& c);
CrType cr_type(const CrossedDiagram& cd);

bool is_effective(const CrossedDiagram& cd);
bool is_totally_real(const CrossedDiagram& cd);
bool is_totally_complex(const CrossedDiagram& cd);
bool is_fundamental(const CrossedDiagram& cd);
bool is_weakly_nondegenerate(const CrossedDiagram& cd);
bool is_strictly_nondegenerate(const CrossedDiagram& cd);
bool is_ideal_nondegenerate(const CrossedDiagram& cd);

struct OrbitAnalysis {
  CrType type;
  bool effective = false;
  bool totally_real = false;
  bool totally_complex = false;
  bool fundamental = false;
  bool weakly_nondeg = false;
  bool strictly_nondeg = false;
  bool ideal_nondeg = false;
};

OrbitAnalysis analyze(const CrossedDiagram& cd);

/// Nodes alpha in Phi with Q_{Phi \ {alpha}} ⊆ Q_Phi ∪ sigma(Q_Phi).
NodeSet degenerate_crosses(const CrossedDiagram& cd);

}  // namespace crflag
