#include "crflag/fibration.hpp"

#include <optional>

#include "crflag/error.hpp"

namespace crflag {

NodeSet SubDiagram::parent_nodes() const {
  NodeSet s;
  for (int o : origin) s.insert(o);
  return s;
}

SubDiagram restrict_crossed(const CrossedDiagram& cd, NodeSet keep) {
  Restriction r = restrict_diagram(cd.satake(), keep);
  NodeSet crosses;
  for (std::size_t a = 0; a < r.origin.size(); ++a)
    if (cd.crosses().contains(r.origin[a])) crosses.insert(static_cast<int>(a));
  return {CrossedDiagram(std::move(r.diagram), crosses), std::move(r.origin)};
}

FibrationReport fiber_over(const CrossedDiagram& cd, NodeSet psi) {
  if (!psi.subset_of(cd.crosses()))
    throw PsiNotSubset("psi " + psi.to_string() + " is not contained in the cross set " +
                       cd.crosses().to_string());
  const RootSystem& rs = cd.roots();
  const Conjugation& conj = cd.conjugation();
  const NodeSet black = cd.satake().black();

  const RootSet q_psi = parabolic_set(rs, psi);
  const RootSet sq_psi = conj.apply(q_psi);
  const RootSet q_phi = parabolic_set(rs, cd.crosses());

  RootSet r_prime = q_psi & sq_psi;
  RootSet q_prime = q_phi & sq_psi;
  RootSet r_second = r_prime & rs.negate(r_prime);
  RootSet q_second = q_prime & r_second;
  NodeSet b_second;
  for (int i = 0; i < rs.rank(); ++i)
    if (r_second.contains(rs.simple(i))) b_second.insert(i);

  NodeSet nodes;
  for (int i = 0; i < rs.rank(); ++i) {
    if (black.contains(i)) {
      if (!psi.contains(i)) nodes.insert(i);
    } else {
      NodeSet touched = rs.support(conj.apply(rs.simple(i)));
      touched.insert(i);
      if (!touched.intersects(psi)) nodes.insert(i);
    }
  }

  SubDiagram fiber = restrict_crossed(cd, nodes);
  NodeSet effective;
  for (NodeSet comp : sigma_components(fiber.diagram.satake()))
    if (comp.intersects(fiber.diagram.crosses()))
      for (int a : comp.indices()) effective.insert(fiber.origin[a]);
  SubDiagram eff = restrict_crossed(cd, effective);

  const bool cr_fibration = q_psi.subset_of(q_phi | r_prime);
  return FibrationReport{psi,
                         std::move(r_prime),
                         std::move(q_prime),
                         std::move(r_second),
                         std::move(q_second),
                         b_second,
                         nodes,
                         std::move(fiber),
                         std::move(eff),
                         cr_fibration};
}

FundamentalReduction fundamental_reduction(const CrossedDiagram& cd) {
  const NodeSet phi = cd.crosses();
  const auto& eps = cd.satake().epsilon();
  NodeSet psi;
  for (int a : (phi - cd.satake().black()).indices())
    if (phi.contains(eps[a])) psi.insert(a);
  FibrationReport f = fiber_over(cd, psi);
  return {psi, cd.with_crosses(psi), std::move(f.effective_fiber)};
}

WeakReduction weak_reduction(const CrossedDiagram& cd) {
  if (!is_fundamental(cd))
    throw NotFundamental("the weakly nondegenerate reduction needs a fundamental CR algebra; " +
                         cd.crosses().to_string() + " pairs crosses under epsilon");
  const RootSystem& rs = cd.roots();
  const RootSet q = parabolic_set(rs, cd.crosses());
  const RootSet span = q | cd.conjugation().apply(q);

  NodeSet removed = degenerate_crosses(cd);
  bool fallback = false;
  if (!parabolic_set(rs, cd.crosses() - removed).subset_of(span)) {
    // Largest valid removal by exhaustive search; smallest bitmask on ties.
    fallback = true;
    std::optional<NodeSet> best;
    for_each_subset(cd.crosses(), [&](NodeSet keep) {
      if (!parabolic_set(rs, keep).subset_of(span)) return;
      if (!best || keep.size() < best->size()) best = keep;
    });
    removed = cd.crosses() - *best;
  }
  const NodeSet kept = cd.crosses() - removed;
  FibrationReport f = fiber_over(cd, kept);
  return {removed, cd.with_crosses(kept), std::move(f.effective_fiber), fallback};
}

ReductionReport reduction_diagram(const CrossedDiagram& cd) {
  FundamentalReduction fr = fundamental_reduction(cd);
  WeakReduction wr = weak_reduction(fr.fiber.diagram);
  const RootSystem& rs = cd.roots();
  const RootSet q = parabolic_set(rs, cd.crosses());
  RootSet generated = rs.closure(q | cd.conjugation().apply(q));
  const bool matches = generated == parabolic_set(rs, fr.psi);
  return {std::move(fr), std::move(wr), std::move(generated), matches};
}

}  // namespace crflag
