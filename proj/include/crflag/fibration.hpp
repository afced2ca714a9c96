#pragma once

// g-equivariant fibrations (g, q_Phi) -> (g, q_Psi) for Psi ⊆ Phi, their
// fibers, and the two canonical reductions.

#include <vector>

#include "crflag/parabolic.hpp"

namespace crflag {

/// A crossed subdiagram together with the nodes it came from.
struct SubDiagram {
  CrossedDiagram diagram;
  /// Node a of `diagram` is node origin[a] of the parent.
  std::vector<int> origin;

  NodeSet parent_nodes() const;
  bool trivial() const { return diagram.rank() == 0; }
};

/// Restriction of a crossed diagram to `keep`; crosses are restricted too.
SubDiagram restrict_crossed(const CrossedDiagram& cd, NodeSet keep);

struct FibrationReport {
  NodeSet psi;
  RootSet r_prime;   // Q_Psi ∩ sigma(Q_Psi)
  RootSet q_prime;   // Q_Phi ∩ sigma(Q_Psi)
  RootSet r_second;  // R' ∩ -R'
  RootSet q_second;  // Q' ∩ R''
  NodeSet b_second;  // simple roots in R''
  /// Nodes kept by the black/white rule: black nodes outside Psi, and white
  /// nodes alpha with ({alpha} ∪ supp sigma(alpha)) ∩ Psi empty.
  NodeSet fiber_nodes;
  SubDiagram fiber_diagram;
  /// Union of the sigma-connected components of the fiber carrying a cross.
  SubDiagram effective_fiber;
  bool is_cr_fibration = false;
};

/// Throws PsiNotSubset unless psi ⊆ Phi.
FibrationReport fiber_over(const CrossedDiagram& cd, NodeSet psi);

struct FundamentalReduction {
  NodeSet psi;
  CrossedDiagram base;  // (g, q_Psi), totally real
  SubDiagram fiber;     // effective fiber, fundamental
};

FundamentalReduction fundamental_reduction(const CrossedDiagram& cd);

struct WeakReduction {
  NodeSet removed;
  CrossedDiagram base;  // (g, q_{Phi \ removed})
  SubDiagram fiber;     // totally complex
  /// Set when the single-removal rule failed verification and the exhaustive
  /// search had to be used.
  bool used_fallback = false;
};

/// Requires a fundamental input; throws NotFundamental otherwise.
WeakReduction weak_reduction(const CrossedDiagram& cd);

/// Both reductions composed: the fundamental reduction of cd, then the weakly
/// nondegenerate reduction of its fundamental fiber.
struct ReductionReport {
  FundamentalReduction fundamental;
  WeakReduction weak;
  /// Root closure of Q ∪ sigma(Q): the roots of the algebra generated by q + q̄.
  RootSet generated;
  bool generated_is_base = false;  // generated == Q_Psi
};

ReductionReport reduction_diagram(const CrossedDiagram& cd);

}  // namespace crflag
