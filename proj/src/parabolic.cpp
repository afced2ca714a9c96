#include "crflag/parabolic.hpp"

#include "crflag/error.hpp"

namespace crflag {

namespace {

struct Sides {
  RootSet q;
  RootSet sq;  // sigma(Q)
  RootSet both() const { return q & sq; }
  RootSet either() const { return q | sq; }
};

Sides sides(const CrossedDiagram& cd) {
  RootSet q = parabolic_set(cd.roots(), cd.crosses());
  RootSet sq = cd.conjugation().apply(q);
  return {std::move(q), std::move(sq)};
}

}  // namespace

CrossedDiagram::CrossedDiagram(SatakeDiagram satake, NodeSet crosses)
    : satake_(std::move(satake)), crosses_(crosses) {
  if (!crosses_.subset_of(satake_.graph().all_nodes())) {
    const int bad = (crosses_ - satake_.graph().all_nodes()).indices().front();
    throw OutOfRange("node " + std::to_string(bad + 1) + " out of range (diagram has " +
                     std::to_string(satake_.rank()) + " nodes)");
  }
}

RootSet parabolic_set(const RootSystem& rs, NodeSet crosses) {
  RootSet q = rs.positive();
  for (std::size_t k = rs.positive_count(); k < rs.size(); ++k)
    if (!rs.support(k).intersects(crosses)) q.insert(k);
  return q;
}

ParabolicRootData parabolic_roots(const RootSystem& rs, NodeSet crosses) {
  ParabolicRootData pd;
  pd.phi_check = rs.none();
  for (std::size_t k = rs.positive_count(); k < rs.size(); ++k)
    if (!rs.support(k).intersects(crosses)) pd.phi_check.insert(k);
  pd.q = rs.positive() | pd.phi_check;
  pd.qr = pd.q & rs.negate(pd.q);
  pd.qn = pd.q - pd.qr;
  return pd;
}

CrType cr_type(const RootSystem& rs, const ParabolicRootData& pd, const Conjugation& c) {
  const RootSet sq = c.apply(pd.q);
  CrType t;
  t.n = static_cast<int>((pd.q - sq).count());
  t.k = static_cast<int>((rs.all() - (pd.q | sq)).count());
  t.dim_g = rs.rank() + static_cast<int>(rs.size());
  t.dim_isotropy = rs.rank() + static_cast<int>((pd.q & sq).count());
  return t;
}

CrType cr_type(const CrossedDiagram& cd) {
  return cr_type(cd.roots(), parabolic_roots(cd.roots(), cd.crosses()), cd.conjugation());
}

bool is_effective(const CrossedDiagram& cd) {
  const RootSet inner = sides(cd).both();
  const DynkinGraph& g = cd.satake().graph();
  for (std::size_t c = 0; c < g.components().size(); ++c)
    if (cd.roots().supported_in(g.component_nodes(c)).subset_of(inner)) return false;
  return true;
}

bool is_totally_real(const CrossedDiagram& cd) { return cr_type(cd).n == 0; }

bool is_totally_complex(const CrossedDiagram& cd) { return cr_type(cd).k == 0; }

bool is_fundamental(const CrossedDiagram& cd) {
  const NodeSet phi = cd.crosses();
  const auto& eps = cd.satake().epsilon();
  for (int a : (phi - cd.satake().black()).indices())
    if (phi.contains(eps[a])) return false;
  return true;
}

NodeSet degenerate_crosses(const CrossedDiagram& cd) {
  const RootSet span = sides(cd).either();
  NodeSet out;
  for (int a : cd.crosses().indices()) {
    NodeSet smaller = cd.crosses();
    smaller.erase(a);
    if (parabolic_set(cd.roots(), smaller).subset_of(span)) out.insert(a);
  }
  return out;
}

bool is_weakly_nondegenerate(const CrossedDiagram& cd) { return degenerate_crosses(cd).empty(); }

bool is_strictly_nondegenerate(const CrossedDiagram& cd) {
  const Sides s = sides(cd);
  const RootSet span = s.either();
  const RootSet moving = span - s.both();
  const RootSystem& rs = cd.roots();
  const std::vector<std::size_t> members = span.indices();
  for (std::size_t a : moving.indices()) {
    bool witnessed = false;
    for (std::size_t b : members) {
      const auto c = rs.sum(a, b);
      if (c && !span.contains(*c)) {
        witnessed = true;
        break;
      }
    }
    if (!witnessed) return false;
  }
  return true;
}

bool is_ideal_nondegenerate(const CrossedDiagram& cd) {
  const RootSet span = sides(cd).either();
  const RootSystem& rs = cd.roots();
  for (NodeSet comp : sigma_components(cd.satake())) {
    if (!cd.crosses().intersects(comp)) continue;
    const RootSet local = rs.supported_in(comp);
    if (local.subset_of(span)) return false;  // k_j = 0 with q_j != g_j
  }
  return true;
}

OrbitAnalysis analyze(const CrossedDiagram& cd) {
  OrbitAnalysis a;
  a.type = cr_type(cd);
  a.effective = is_effective(cd);
  a.totally_real = a.type.n == 0;
  a.totally_complex = a.type.k == 0;
  a.fundamental = is_fundamental(cd);
  a.weakly_nondeg = is_weakly_nondegenerate(cd);
  a.strictly_nondeg = is_strictly_nondegenerate(cd);
  a.ideal_nondeg = is_ideal_nondegenerate(cd);
  return a;
}

}  // namespace crflag
