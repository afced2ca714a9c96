#include <gtest/gtest.h>

#include "crflag/catalog.hpp"
#include "crflag/error.hpp"
#include "crflag/fibration.hpp"

using namespace crflag;

namespace {

CrossedDiagram cd(const std::string& name, std::vector<std::string> args, std::initializer_list<int> cross) {
  return CrossedDiagram(catalog_lookup(name, args), NodeSet::from_labels(cross));
}

}  // namespace

TEST(FiberOver, Su13OverFirstNodeIsBlackCrossedNode) {
  const FibrationReport f = fiber_over(cd("su", {"1", "3"}, {1, 2}), NodeSet::from_labels({1}));
  EXPECT_EQ(f.fiber_nodes, NodeSet::from_labels({2}));
  EXPECT_EQ(f.b_second, NodeSet::from_labels({2}));
  const CrossedDiagram& eff = f.effective_fiber.diagram;
  ASSERT_EQ(eff.rank(), 1);
  EXPECT_EQ(eff.satake().black(), NodeSet::from_labels({1}));
  EXPECT_EQ(eff.crosses(), NodeSet::from_labels({1}));
  EXPECT_EQ(f.effective_fiber.origin, (std::vector<int>{1}));
}

TEST(FiberOver, Su13OverSecondNodeIsTrivialAndNotCr) {
  const FibrationReport f = fiber_over(cd("su", {"1", "3"}, {1, 2}), NodeSet::from_labels({2}));
  EXPECT_TRUE(f.effective_fiber.trivial());
  EXPECT_FALSE(f.is_cr_fibration);
}

TEST(FiberOver, PsiEqualPhiLeavesNoCrosses) {
  const CrossedDiagram c = cd("su", {"1", "4"}, {1, 2});
  const FibrationReport f = fiber_over(c, c.crosses());
  EXPECT_TRUE(f.effective_fiber.trivial());
  EXPECT_EQ(f.fiber_nodes, NodeSet::from_labels({3}));
  EXPECT_TRUE(f.is_cr_fibration);
}

TEST(FiberOver, EmptyPsiKeepsEverything) {
  const CrossedDiagram c = cd("su", {"1", "3"}, {1, 2});
  const FibrationReport f = fiber_over(c, NodeSet{});
  EXPECT_EQ(f.fiber_nodes, c.satake().graph().all_nodes());
  EXPECT_EQ(f.effective_fiber.diagram, c);
}

TEST(FiberOver, RejectsPsiOutsidePhi) {
  EXPECT_THROW(fiber_over(cd("su", {"1", "3"}, {1, 2}), NodeSet::from_labels({3})), PsiNotSubset);
}

TEST(FundamentalReduction, Su22) {
  const FundamentalReduction r = fundamental_reduction(cd("su", {"2", "2"}, {2, 3}));
  EXPECT_EQ(r.psi, NodeSet::from_labels({2}));
  EXPECT_EQ(cr_type(r.base).n, 0);
  const SubDiagram& fib = r.fiber;
  EXPECT_EQ(fib.origin, (std::vector<int>{0, 2}));
  EXPECT_EQ(fib.diagram.satake().graph().name(), "A1+A1");
  ASSERT_EQ(fib.diagram.satake().arrows().size(), 1u);
  EXPECT_TRUE(fib.diagram.satake().black().empty());
  EXPECT_EQ(fib.diagram.crosses(), NodeSet::from_labels({2}));  // the node that was alpha_3
  EXPECT_TRUE(is_fundamental(fib.diagram));
}

TEST(FundamentalReduction, AlreadyFundamental) {
  const CrossedDiagram c = cd("su", {"1", "3"}, {1, 2});
  const FundamentalReduction r = fundamental_reduction(c);
  EXPECT_TRUE(r.psi.empty());
  EXPECT_TRUE(r.base.crosses().empty());
  EXPECT_EQ(r.fiber.diagram, c);
}

TEST(FundamentalReduction, SplitRankOne) {
  const FundamentalReduction r = fundamental_reduction(cd("sl_r", {"2"}, {1}));
  EXPECT_EQ(r.psi, NodeSet::from_labels({1}));
  EXPECT_EQ(cr_type(r.base).n, 0);
  EXPECT_TRUE(r.fiber.trivial());
}

TEST(WeakReduction, Examples) {
  const WeakReduction id = weak_reduction(cd("su", {"1", "3"}, {1, 2}));
  EXPECT_TRUE(id.removed.empty());
  EXPECT_TRUE(id.fiber.trivial());
  EXPECT_FALSE(id.used_fallback);

  const WeakReduction compact = weak_reduction(cd("compact", {"A", "1"}, {1}));
  EXPECT_EQ(compact.removed, NodeSet::from_labels({1}));
  EXPECT_TRUE(compact.base.crosses().empty());
  EXPECT_EQ(compact.fiber.diagram.rank(), 1);
  EXPECT_EQ(cr_type(compact.fiber.diagram).k, 0);

  for (int q = 2; q <= 5; ++q) {
    const WeakReduction r = weak_reduction(cd("su", {"1", std::to_string(q)}, {1}));
    EXPECT_TRUE(r.removed.empty()) << q;
  }
  EXPECT_THROW(weak_reduction(cd("su", {"2", "2"}, {2, 3})), NotFundamental);
}

TEST(ReductionDiagram, Su22ClosureIsBase) {
  const CrossedDiagram c = cd("su", {"2", "2"}, {2, 3});
  const ReductionReport r = reduction_diagram(c);
  EXPECT_TRUE(r.generated_is_base);
  EXPECT_EQ(r.generated, parabolic_set(c.roots(), NodeSet::from_labels({2})));
}

TEST(ReductionDiagram, Su13Collapses) {
  const CrossedDiagram c = cd("su", {"1", "3"}, {1, 2});
  const ReductionReport r = reduction_diagram(c);
  EXPECT_EQ(r.generated, c.roots().all());
  EXPECT_TRUE(r.fundamental.psi.empty());
  EXPECT_TRUE(r.weak.removed.empty());
  EXPECT_TRUE(r.weak.fiber.trivial());
}

TEST(RestrictCrossed, CarriesCrosses) {
  const SubDiagram s = restrict_crossed(cd("su", {"2", "2"}, {2, 3}), NodeSet::from_labels({2, 3}));
  EXPECT_EQ(s.diagram.satake().graph().name(), "A2");
  EXPECT_EQ(s.diagram.crosses(), NodeSet::from_labels({1, 2}));
  EXPECT_TRUE(s.diagram.satake().arrows().empty());
}
