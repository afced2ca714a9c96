#include "crflag/oracles.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "crflag/catalog.hpp"
#include "crflag/error.hpp"
#include "crflag/fibration.hpp"

namespace crflag {

namespace {

const char* yes_no(bool b) { return b ? "true" : "false"; }

struct Recorder {
  const std::string& form;
  NodeSet cross;
  SweepReport& report;

  void expect(const char* property, bool ok, const std::string& expected = "true",
              const std::string& got = "false") {
    ++report.checks[property];
    if (!ok) report.mismatches.push_back({form, cross, property, expected, got});
  }
  void equal(const char* property, bool expected, bool got) {
    expect(property, expected == got, yes_no(expected), yes_no(got));
  }
};

// Sigma on the fiber must be the restriction of sigma on R''.
bool fiber_sigma_agrees(const CrossedDiagram& cd, const FibrationReport& f) {
  const SubDiagram& sub = f.fiber_diagram;
  const RootSystem& rs = cd.roots();
  const RootSystem& frs = sub.diagram.roots();
  if (frs.size() != f.r_second.count()) return false;
  auto to_fiber = [&](std::size_t idx) -> std::optional<std::size_t> {
    const Root& r = rs.root(idx);
    if (!rs.support(idx).subset_of(sub.parent_nodes())) return std::nullopt;
    Root local{std::vector<int>(sub.origin.size())};
    for (std::size_t a = 0; a < sub.origin.size(); ++a) local.coeffs[a] = r.coeffs[sub.origin[a]];
    return frs.index_of(local);
  };
  for (std::size_t idx : f.r_second.indices()) {
    const auto local = to_fiber(idx);
    const auto local_image = to_fiber(cd.conjugation().apply(idx));
    if (!local || !local_image) return false;
    if (sub.diagram.conjugation().apply(*local) != *local_image) return false;
  }
  return true;
}

// Fundamental fiber read off by erasing the Psi nodes and keeping the
// sigma-connected components that still carry a cross.
NodeSet erasure_fiber_nodes(const CrossedDiagram& cd, NodeSet psi) {
  const NodeSet remaining = cd.satake().graph().all_nodes() - psi;
  const SubDiagram erased = restrict_crossed(cd, remaining);
  NodeSet out;
  for (NodeSet comp : sigma_components(erased.diagram.satake()))
    if (comp.intersects(erased.diagram.crosses()))
      for (int a : comp.indices()) out.insert(erased.origin[a]);
  return out;
}

}  // namespace

bool oracle_fundamental(const CrossedDiagram& cd) {
  const RootSystem& rs = cd.roots();
  const RootSet q = parabolic_set(rs, cd.crosses());
  return rs.closure(q | cd.conjugation().apply(q)) == rs.all();
}

WeakOracleResult oracle_weak_largest(const CrossedDiagram& cd) {
  const RootSystem& rs = cd.roots();
  const RootSet q = parabolic_set(rs, cd.crosses());
  const RootSet span = q | cd.conjugation().apply(q);
  std::vector<NodeSet> satisfiers;
  for_each_subset(cd.crosses(), [&](NodeSet psi) {
    if (psi == cd.crosses()) return;
    if (parabolic_set(rs, psi).subset_of(span)) satisfiers.push_back(psi);
  });
  WeakOracleResult result;
  if (satisfiers.empty()) return result;
  result.nondegenerate = false;
  std::vector<NodeSet> minimal;
  for (NodeSet s : satisfiers) {
    bool is_min = true;
    for (NodeSet t : satisfiers)
      if (t != s && t.subset_of(s)) is_min = false;
    if (is_min) minimal.push_back(s);
  }
  if (minimal.size() != 1)
    throw AmbiguousLargest("incomparable minimal node sets " + minimal[0].to_string() + " and " +
                           minimal[1].to_string() + " for cross set " + cd.crosses().to_string());
  result.largest = minimal.front();
  return result;
}

std::vector<SweepForm> sweep_forms(int rank_bound) {
  std::vector<SweepForm> out;
  if (rank_bound <= 0) return out;
  const std::vector<CatalogEntry> simple = catalog_forms(rank_bound);
  for (const auto& e : simple) out.push_back({e.diagram.name(), e.diagram});
  for (std::size_t a = 0; a < simple.size(); ++a)
    for (std::size_t b = a; b < simple.size(); ++b) {
      if (simple[a].rank + simple[b].rank > rank_bound) continue;
      SatakeDiagram sum = direct_sum(simple[a].diagram, simple[b].diagram);
      out.push_back({sum.name(), std::move(sum)});
    }
  std::stable_sort(out.begin(), out.end(),
                   [](const SweepForm& x, const SweepForm& y) { return x.name < y.name; });
  return out;
}

void check_instance(const std::string& form, const CrossedDiagram& cd, SweepReport& report) {
  Recorder rec{form, cd.crosses(), report};
  const RootSystem& rs = cd.roots();
  const Conjugation& conj = cd.conjugation();
  const OrbitAnalysis an = analyze(cd);

  rec.equal("fundamental", oracle_fundamental(cd), an.fundamental);

  try {
    const WeakOracleResult w = oracle_weak_largest(cd);
    rec.equal("weak", w.nondegenerate, an.weakly_nondeg);
    if (w.largest) {
      const NodeSet mine = cd.crosses() - degenerate_crosses(cd);
      rec.expect("weak_largest", mine == *w.largest, w.largest->to_string(), mine.to_string());
    }
  } catch (const AmbiguousLargest& e) {
    rec.expect("weak_unique", false, "unique", e.what());
  }

  const RootSet q = parabolic_set(rs, cd.crosses());
  const RootSet sq = conj.apply(q);
  const int inner = static_cast<int>((q & sq).count());
  rec.expect("dimension_identity", 2 * an.type.n + an.type.k == static_cast<int>(rs.size()) - inner,
             std::to_string(static_cast<int>(rs.size()) - inner),
             std::to_string(2 * an.type.n + an.type.k));
  rec.expect("dimension_balance", (q - sq).count() == (sq - q).count(),
             std::to_string((q - sq).count()), std::to_string((sq - q).count()));
  rec.expect("strict_implies_weak", !an.strictly_nondeg || an.weakly_nondeg);
  rec.expect("weak_implies_ideal", !an.weakly_nondeg || an.ideal_nondeg);

  const ReductionReport red = reduction_diagram(cd);
  rec.equal("fundamental_reduction_base_real", true, cr_type(red.fundamental.base).n == 0);
  rec.equal("fundamental_reduction_fiber_fundamental", true, is_fundamental(red.fundamental.fiber.diagram));
  rec.equal("fundamental_reduction_closure", true, red.generated_is_base);
  rec.equal("fundamental_reduction_trivial_iff_fundamental", an.fundamental, red.fundamental.psi.empty());
  {
    const NodeSet by_erasure = erasure_fiber_nodes(cd, red.fundamental.psi);
    const NodeSet by_fiber = red.fundamental.fiber.parent_nodes();
    rec.expect("fundamental_fiber_erasure", by_erasure == by_fiber, by_erasure.to_string(),
               by_fiber.to_string());
  }
  if (an.fundamental) {
    const WeakReduction wr = weak_reduction(cd);
    rec.equal("weak_reduction_base_weak", true, is_weakly_nondegenerate(wr.base));
    rec.equal("weak_reduction_fiber_complex", true, cr_type(wr.fiber.diagram).k == 0);
    rec.equal("weak_reduction_no_fallback", false, wr.used_fallback);
  }
  rec.equal("reduction_weak_base_weak", true, is_weakly_nondegenerate(red.weak.base));
  rec.equal("reduction_weak_fiber_complex", true, cr_type(red.weak.fiber.diagram).k == 0);

  for_each_subset(cd.crosses(), [&](NodeSet psi) {
    const FibrationReport f = fiber_over(cd, psi);
    rec.expect("fiber_basis", f.b_second == f.fiber_nodes, f.b_second.to_string(), f.fiber_nodes.to_string());
    rec.equal("fiber_sigma_stable", true, conj.apply(f.r_second) == f.r_second);
    rec.equal("fiber_revalidation", true, fiber_sigma_agrees(cd, f));
    rec.equal("fiber_effective_crossed", true, [&] {
      for (NodeSet c : sigma_components(f.effective_fiber.diagram.satake()))
        if (!c.intersects(f.effective_fiber.diagram.crosses())) return false;
      return true;
    }());
    if (cr_type(cd.with_crosses(psi)).n == 0) rec.equal("cr_fibration_over_real_base", true, f.is_cr_fibration);
  });

  const std::vector<NodeSet> comps = sigma_components(cd.satake());
  if (comps.size() > 1) {
    OrbitAnalysis conj_flags;
    conj_flags.effective = conj_flags.totally_real = conj_flags.totally_complex = conj_flags.fundamental =
        conj_flags.weakly_nondeg = conj_flags.strictly_nondeg = conj_flags.ideal_nondeg = true;
    for (NodeSet c : comps) {
      const OrbitAnalysis part = analyze(restrict_crossed(cd, c).diagram);
      conj_flags.effective &= part.effective;
      conj_flags.totally_real &= part.totally_real;
      conj_flags.totally_complex &= part.totally_complex;
      conj_flags.fundamental &= part.fundamental;
      conj_flags.weakly_nondeg &= part.weakly_nondeg;
      conj_flags.strictly_nondeg &= part.strictly_nondeg;
      conj_flags.ideal_nondeg &= part.ideal_nondeg;
    }
    rec.equal("conjunction_effective", conj_flags.effective, an.effective);
    rec.equal("conjunction_totally_real", conj_flags.totally_real, an.totally_real);
    rec.equal("conjunction_totally_complex", conj_flags.totally_complex, an.totally_complex);
    rec.equal("conjunction_fundamental", conj_flags.fundamental, an.fundamental);
    rec.equal("conjunction_weak", conj_flags.weakly_nondeg, an.weakly_nondeg);
    rec.equal("conjunction_strict", conj_flags.strictly_nondeg, an.strictly_nondeg);
    rec.equal("conjunction_ideal", conj_flags.ideal_nondeg, an.ideal_nondeg);
  }
  ++report.instances_checked;
}

SweepReport sweep_consistency(int rank_bound, int threads) {
  SweepReport report;
  report.rank_bound = rank_bound;
  const std::vector<SweepForm> forms = sweep_forms(rank_bound);
  report.forms_checked = forms.size();
  if (forms.empty()) return report;

  std::vector<SweepReport> partial(forms.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < forms.size(); i = next++) {
      const SweepForm& f = forms[i];
      ++partial[i].checks["satake_validation"];
      try {
        build_conjugation(f.diagram.data(), f.diagram.roots());
      } catch (const Error& e) {
        partial[i].mismatches.push_back({f.name, {}, "satake_validation", "valid", e.what()});
      }
      for_each_subset(f.diagram.graph().all_nodes(), [&](NodeSet phi) {
        check_instance(f.name, CrossedDiagram(f.diagram, phi), partial[i]);
      });
    }
  };
  int n = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  n = std::clamp<int>(n, 1, static_cast<int>(forms.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  // Forms are already sorted by name and each form's instances by bitmask.
  for (auto& p : partial) {
    report.instances_checked += p.instances_checked;
    for (const auto& [k, v] : p.checks) report.checks[k] += v;
    report.mismatches.insert(report.mismatches.end(), p.mismatches.begin(), p.mismatches.end());
  }
  return report;
}

}  // namespace crflag
