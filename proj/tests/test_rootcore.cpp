#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>

#include "crflag/error.hpp"
#include "crflag/rootcore.hpp"

using namespace crflag;

namespace {

using Coeffs = std::vector<int>;

// <beta, alpha_i^vee> straight from the Cartan matrix.
int pair_with(const CartanMatrix& c, const Coeffs& beta, int i) {
  int s = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) s += beta[j] * c[j][i];
  return s;
}

// Positive roots by alpha-strings: beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0,
// where p is the length of the string below beta.
std::set<Coeffs> positive_roots_by_strings(const CartanMatrix& c) {
  const int n = static_cast<int>(c.size());
  std::set<Coeffs> roots;
  std::vector<Coeffs> layer;
  for (int i = 0; i < n; ++i) {
    Coeffs e(n, 0);
    e[i] = 1;
    roots.insert(e);
    layer.push_back(e);
  }
  while (!layer.empty()) {
    std::vector<Coeffs> next;
    for (const Coeffs& b : layer)
      for (int i = 0; i < n; ++i) {
        int p = 0;
        for (Coeffs d = b;;) {
          d[i] -= 1;
          if (!roots.count(d)) break;
          ++p;
        }
        if (p - pair_with(c, b, i) > 0) {
          Coeffs up = b;
          up[i] += 1;
          if (roots.insert(up).second) next.push_back(up);
        }
      }
    layer = std::move(next);
  }
  return roots;
}

const std::vector<std::pair<std::string, int>> kRootCounts = {
    {"A1", 2},  {"A2", 6},   {"A3", 12},  {"A4", 20},  {"A5", 30}, {"A8", 72},  {"B2", 8},
    {"B3", 18}, {"B4", 32},  {"B8", 128}, {"C3", 18},  {"C4", 32}, {"D4", 24},  {"D5", 40},
    {"D8", 112}, {"E6", 72}, {"E7", 126}, {"E8", 240}, {"F4", 48}, {"G2", 12}, {"A1+A1", 4},
    {"A2+G2", 18}};

const std::vector<std::string> kSmallTypes = {"A1", "A2", "A3", "A4", "B2", "B3", "B4",
                                              "C3", "C4", "D4", "F4", "G2"};

using Matrix = std::vector<Coeffs>;  // row-major images: m[j] = image of alpha_j

Coeffs apply(const Matrix& m, const Coeffs& b) {
  Coeffs out(b.size(), 0);
  for (std::size_t j = 0; j < b.size(); ++j)
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[j] * m[j][i];
  return out;
}

Matrix simple_reflection(const CartanMatrix& c, int i) {
  const int n = static_cast<int>(c.size());
  Matrix m(n, Coeffs(n, 0));
  for (int j = 0; j < n; ++j) {
    m[j][j] = 1;
    m[j][i] -= c[j][i];
  }
  return m;
}

Matrix compose(const Matrix& a, const Matrix& b) {  // a after b
  Matrix out;
  for (const Coeffs& col : b) out.push_back(apply(a, col));
  return out;
}

// Longest element of the parabolic subgroup on `nodes` by exhaustive BFS.
Matrix longest_by_bfs(const CartanMatrix& c, const std::vector<Coeffs>& positive, NodeSet nodes) {
  const int n = static_cast<int>(c.size());
  Matrix id(n, Coeffs(n, 0));
  for (int i = 0; i < n; ++i) id[i][i] = 1;
  std::set<Matrix> seen{id};
  std::queue<Matrix> todo;
  todo.push(id);
  auto inversions = [&](const Matrix& w) {
    int count = 0;
    for (const Coeffs& b : positive) {
      if (!support(Root{b}).subset_of(nodes)) continue;
      const Coeffs img = apply(w, b);
      if (std::all_of(img.begin(), img.end(), [](int x) { return x <= 0; })) ++count;
    }
    return count;
  };
  Matrix best = id;
  int best_inv = 0;
  while (!todo.empty()) {
    Matrix w = todo.front();
    todo.pop();
    const int inv = inversions(w);
    if (inv > best_inv) {
      best = w;
      best_inv = inv;
    }
    for (int i : nodes.indices()) {
      Matrix v = compose(simple_reflection(c, i), w);
      if (seen.insert(v).second) todo.push(v);
    }
  }
  return best;
}

}  // namespace

TEST(DynkinGraph, ParsesSumsAndRejectsBadTypes) {
  const DynkinGraph g = DynkinGraph::parse("A3+A1");
  EXPECT_EQ(g.rank(), 4);
  EXPECT_EQ(g.components().size(), 2u);
  EXPECT_EQ(g.name(), "A3+A1");
  EXPECT_EQ(g.component_of(3), 1);
  EXPECT_THROW(DynkinGraph::parse("D3"), MalformedGraph);
  EXPECT_THROW(DynkinGraph::parse("E9"), MalformedGraph);
  EXPECT_THROW(DynkinGraph::parse("A9"), MalformedGraph);
  EXPECT_THROW(DynkinGraph::parse("B1"), MalformedGraph);
  EXPECT_THROW(DynkinGraph::parse("X2"), MalformedGraph);
}

TEST(DynkinGraph, CartanConventionLongToShortIsMinusTwo) {
  const CartanMatrix b2 = DynkinGraph::parse("B2").cartan();
  EXPECT_EQ(b2[0][1], -2);
  EXPECT_EQ(b2[1][0], -1);
  const CartanMatrix c3 = DynkinGraph::parse("C3").cartan();
  EXPECT_EQ(c3[2][1], -2);  // alpha_3 long, alpha_2 short
  const CartanMatrix g2 = DynkinGraph::parse("G2").cartan();
  EXPECT_EQ(g2[1][0], -3);  // alpha_1 short
  const CartanMatrix f4 = DynkinGraph::parse("F4").cartan();
  EXPECT_EQ(f4[1][2], -2);
}

TEST(DynkinGraph, EdgesReportMultiplicityAndShortEnd) {
  const auto edges = DynkinGraph::parse("B3").edges();
  ASSERT_EQ(edges.size(), 2u);
  EXPECT_EQ(edges[1].multiplicity, 2);
  EXPECT_EQ(edges[1].shorter, 2);
  const auto e6 = DynkinGraph::parse("E6").edges();
  EXPECT_EQ(e6.size(), 5u);
  EXPECT_TRUE(DynkinGraph::parse("E6").adjacent(1, 3));  // alpha_2 - alpha_4
}

TEST(DynkinGraph, IdentifyRecoversShuffledCartanMatrices) {
  std::mt19937 rng(7);
  for (const std::string& t : {"A4", "B4", "C4", "D5", "E6", "E7", "F4", "G2", "A2+B3", "D4+A1"}) {
    const DynkinGraph g = DynkinGraph::parse(t);
    std::vector<int> perm(g.rank());
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 10; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CartanMatrix shuffled(g.rank(), std::vector<int>(g.rank()));
      for (int a = 0; a < g.rank(); ++a)
        for (int b = 0; b < g.rank(); ++b) shuffled[a][b] = g.cartan()[perm[a]][perm[b]];
      const auto id = DynkinGraph::identify(shuffled);
      ASSERT_EQ(id.graph.rank(), g.rank()) << t;
      for (int a = 0; a < g.rank(); ++a)
        for (int b = 0; b < g.rank(); ++b)
          ASSERT_EQ(id.graph.cartan()[a][b], shuffled[id.order[a]][id.order[b]]) << t;
      std::multiset<std::string> want, got;
      for (const auto& c : g.components()) want.insert(c.name());
      for (const auto& c : id.graph.components()) got.insert(c.name());
      EXPECT_EQ(want, got) << t;
    }
  }
}

TEST(DynkinGraph, IdentifyRejectsNonFiniteCartan) {
  // Affine A2: a triangle.
  const CartanMatrix tri = {{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};
  EXPECT_THROW(DynkinGraph::identify(tri), MalformedGraph);
}

TEST(RootSystem, CountsMatchClassicalValues) {
  for (const auto& [name, count] : kRootCounts) {
    const RootSystem rs(DynkinGraph::parse(name));
    EXPECT_EQ(rs.size(), static_cast<std::size_t>(count)) << name;
    EXPECT_EQ(rs.positive_count() * 2, rs.size()) << name;
  }
}

TEST(RootSystem, MatchesRootStringGeneration) {
  for (const auto& [name, count] : kRootCounts) {
    const RootSystem rs(DynkinGraph::parse(name));
    const std::set<Coeffs> oracle = positive_roots_by_strings(rs.cartan());
    std::set<Coeffs> mine;
    for (std::size_t i = 0; i < rs.positive_count(); ++i) mine.insert(rs.root(i).coeffs);
    EXPECT_EQ(mine, oracle) << name;
  }
}

TEST(RootSystem, OrderingAndIndexing) {
  const RootSystem rs(DynkinGraph::parse("A3"));
  for (std::size_t i = 0; i < rs.size(); ++i) {
    EXPECT_EQ(rs.index_of(rs.root(i)), i);
    EXPECT_EQ(rs.root(rs.negation(i)), -rs.root(i));
    if (i + 1 < rs.positive_count()) EXPECT_LE(rs.root(i).height(), rs.root(i + 1).height());
  }
  EXPECT_EQ(rs.root(rs.simple(1)), (Root{{0, 1, 0}}));
  EXPECT_FALSE(rs.index_of(Root{{1, 0, 1}}).has_value());
}

TEST(RootSystem, RankOneAndB2Examples) {
  const RootSystem a1(DynkinGraph::parse("A1"));
  ASSERT_EQ(a1.size(), 2u);
  EXPECT_EQ(a1.root(0), (Root{{1}}));
  EXPECT_EQ(a1.root(1), (Root{{-1}}));

  const RootSystem b2(DynkinGraph::parse("B2"));
  EXPECT_EQ(b2.size(), 8u);
  EXPECT_TRUE(b2.index_of(Root{{1, 2}}).has_value());
  EXPECT_FALSE(b2.index_of(Root{{2, 1}}).has_value());
}

TEST(RootSystem, Supports) {
  const RootSystem rs(DynkinGraph::parse("A3"));
  EXPECT_EQ(support(Root{{1, 1, 0}}), NodeSet::from_labels({1, 2}));
  EXPECT_EQ(support(Root{{0, 0, -1}}), NodeSet::from_labels({3}));
  EXPECT_EQ(rs.support(rs.positive_count() - 1), NodeSet::from_labels({1, 2, 3}));
}

TEST(RootSystem, Reflections) {
  const RootSystem a3(DynkinGraph::parse("A3"));
  EXPECT_EQ(a3.reflect(Root{{1, 0, 0}}, 0), (Root{{-1, 0, 0}}));
  EXPECT_EQ(a3.reflect(Root{{1, 0, 0}}, 1), (Root{{1, 1, 0}}));
  const RootSystem b2(DynkinGraph::parse("B2"));
  EXPECT_EQ(b2.reflect(Root{{1, 0}}, 1), (Root{{1, 2}}));
  for (std::size_t k = 0; k < b2.size(); ++k)
    for (int i = 0; i < 2; ++i)
      EXPECT_EQ(b2.reflect(b2.reflect(b2.root(k), i), i), b2.root(k));
}

TEST(RootSystem, SumTableAgreesWithCoordinates) {
  for (const std::string& t : {"A3", "B3", "G2", "D4", "F4"}) {
    const RootSystem rs(DynkinGraph::parse(t));
    for (std::size_t a = 0; a < rs.size(); ++a)
      for (std::size_t b = 0; b < rs.size(); ++b) {
        const auto s = rs.sum(a, b);
        const auto direct = rs.index_of(rs.root(a) + rs.root(b));
        ASSERT_EQ(s, direct) << t;
      }
  }
}

TEST(LongestInvolution, Examples) {
  const RootSystem a3(DynkinGraph::parse("A3"));
  EXPECT_TRUE(a3.longest_involution(NodeSet{}).is_identity());
  const LatticeMap s2 = a3.longest_involution(NodeSet::from_labels({2}));
  EXPECT_EQ(s2.apply(Root{{1, 0, 0}}), (Root{{1, 1, 0}}));
  EXPECT_EQ(s2.apply(Root{{0, 0, 1}}), (Root{{0, 1, 1}}));

  const RootSystem a4(DynkinGraph::parse("A4"));
  const NodeSet black = NodeSet::from_labels({2, 3});
  EXPECT_EQ(a4.longest_involution(black).apply(Root{{1, 0, 0, 0}}), (Root{{1, 1, 1, 0}}));
  const std::vector<int> word = a4.longest_word(black);
  EXPECT_EQ(word.size(), 3u);
}

TEST(LongestInvolution, MatchesWeylGroupSearchOnEverySubset) {
  for (const std::string& t : kSmallTypes) {
    const RootSystem rs(DynkinGraph::parse(t));
    std::vector<Coeffs> positive;
    for (std::size_t i = 0; i < rs.positive_count(); ++i) positive.push_back(rs.root(i).coeffs);
    for_each_subset(rs.graph().all_nodes(), [&](NodeSet nodes) {
      const Matrix want = longest_by_bfs(rs.cartan(), positive, nodes);
      const LatticeMap got = rs.longest_involution(nodes);
      for (int j = 0; j < rs.rank(); ++j) {
        Coeffs e(rs.rank(), 0);
        e[j] = 1;
        ASSERT_EQ(got.apply(Root{e}).coeffs, want[j]) << t << " " << nodes.to_string();
      }
      ASSERT_TRUE(got.compose(got).is_identity()) << t << " " << nodes.to_string();
      ASSERT_EQ(rs.longest_word(nodes).size(), rs.supported_in(nodes).count() / 2) << t;
    });
  }
}

TEST(Closure, SmallExamples) {
  const RootSystem a2(DynkinGraph::parse("A2"));
  RootSet s = a2.none();
  s.insert(a2.simple(0));
  s.insert(a2.simple(1));
  const RootSet c = a2.closure(s);
  EXPECT_EQ(c.count(), 3u);
  EXPECT_TRUE(c.contains(*a2.index_of(Root{{1, 1}})));
  EXPECT_TRUE(a2.closure(a2.none()).empty());
}

TEST(Closure, PropertiesOnRandomSets) {
  std::mt19937 rng(20261016);
  for (const std::string& t : {"A3", "B3", "C3", "G2", "D4", "A2+A1"}) {
    const RootSystem rs(DynkinGraph::parse(t));
    std::bernoulli_distribution coin(0.25);
    for (int trial = 0; trial < 200; ++trial) {
      RootSet s = rs.none();
      RootSet bigger = rs.none();
      for (std::size_t i = 0; i < rs.size(); ++i) {
        if (coin(rng)) s.insert(i);
        if (s.contains(i) || coin(rng)) bigger.insert(i);
      }
      // Naive fixed point over all pairs.
      RootSet naive = s;
      for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t a : naive.indices())
          for (std::size_t b : naive.indices())
            if (auto c = rs.index_of(rs.root(a) + rs.root(b)); c && !naive.contains(*c)) {
              naive.insert(*c);
              grew = true;
            }
      }
      const RootSet cl = rs.closure(s);
      ASSERT_EQ(cl, naive) << t;
      ASSERT_EQ(rs.closure(cl), cl) << t;
      ASSERT_TRUE(s.subset_of(cl)) << t;
      ASSERT_TRUE(cl.subset_of(rs.closure(bigger))) << t;
    }
  }
}

TEST(RootSet, Algebra) {
  const RootSystem rs(DynkinGraph::parse("A4"));
  EXPECT_EQ((rs.positive() | rs.negative()), rs.all());
  EXPECT_TRUE((rs.positive() & rs.negative()).empty());
  EXPECT_EQ(rs.negate(rs.positive()), rs.negative());
  EXPECT_EQ((rs.all() - rs.positive()), rs.negative());
  EXPECT_EQ(rs.supported_in(NodeSet::from_labels({1, 2})).count(), 6u);
}
