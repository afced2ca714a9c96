#include "crflag/rootcore.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "crflag/error.hpp"

namespace crflag {

namespace {

// Bourbaki edge lists (0-based). `shorter` is set on the multiple edge only.
std::vector<Edge> standard_edges(Component c) {
  const int n = c.rank;
  std::vector<Edge> e;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) e.push_back({i, i + 1, 1, -1});
  };
  switch (c.type) {
    case SimpleType::A:
      chain(n);
      break;
    case SimpleType::B:
      chain(n - 1);
      e.push_back({n - 2, n - 1, 2, n - 1});
      break;
    case SimpleType::C:
      chain(n - 1);
      e.push_back({n - 2, n - 1, 2, n - 2});
      break;
    case SimpleType::D:
      chain(n - 1);
      e.push_back({n - 3, n - 1, 1, -1});
      break;
    case SimpleType::E:
      e.push_back({0, 2, 1, -1});
      e.push_back({1, 3, 1, -1});
      for (int i = 2; i + 1 < n; ++i) e.push_back({i, i + 1, 1, -1});
      break;
    case SimpleType::F:
      e.push_back({0, 1, 1, -1});
      e.push_back({1, 2, 2, 2});
      e.push_back({2, 3, 1, -1});
      break;
    case SimpleType::G:
      e.push_back({0, 1, 3, 0});
      break;
  }
  return e;
}

void check_component(Component c) {
  const int n = c.rank;
  bool ok = false;
  switch (c.type) {
    case SimpleType::A: ok = n >= 1; break;
    case SimpleType::B: ok = n >= 2; break;
    case SimpleType::C: ok = n >= 2; break;
    case SimpleType::D: ok = n >= 4; break;
    case SimpleType::E: ok = n >= 6 && n <= 8; break;
    case SimpleType::F: ok = n == 4; break;
    case SimpleType::G: ok = n == 2; break;
  }
  if (!ok) throw MalformedGraph("no simple Dynkin type " + c.name());
  if (n > kMaxComponentRank)
    throw MalformedGraph("component " + c.name() + " exceeds the supported rank bound of " +
                         std::to_string(kMaxComponentRank));
}

std::optional<SimpleType> type_from_char(char ch) {
  switch (ch) {
    case 'A': return SimpleType::A;
    case 'B': return SimpleType::B;
    case 'C': return SimpleType::C;
    case 'D': return SimpleType::D;
    case 'E': return SimpleType::E;
    case 'F': return SimpleType::F;
    case 'G': return SimpleType::G;
    default: return std::nullopt;
  }
}

// Orders one connected component of an arbitrary Cartan matrix in Bourbaki
// numbering. `nodes` are old indices, ascending.
std::pair<Component, std::vector<int>> identify_component(const CartanMatrix& a,
                                                          const std::vector<int>& nodes) {
  const int n = static_cast<int>(nodes.size());
  auto fail = [&](const std::string& why) -> MalformedGraph {
    std::ostringstream os;
    os << "component on nodes {";
    for (std::size_t k = 0; k < nodes.size(); ++k) os << (k ? "," : "") << nodes[k] + 1;
    os << "} is not of finite type: " << why;
    return MalformedGraph(os.str());
  };
  if (n > kMaxComponentRank) throw fail("rank exceeds the supported bound");

  std::map<int, std::vector<int>> nbrs;
  int edge_count = 0;
  std::vector<std::pair<int, int>> multi;  // (long, short)
  int multiplicity = 1;
  for (int x : nodes) nbrs[x];
  for (int x : nodes) {
    for (int y : nodes) {
      if (x >= y || a[x][y] == 0) continue;
      const int m = a[x][y] * a[y][x];
      if (m < 1 || m > 3) throw fail("bad Cartan product");
      ++edge_count;
      nbrs[x].push_back(y);
      nbrs[y].push_back(x);
      if (m > 1) {
        const bool x_long = a[x][y] == -m;
        if (!(x_long ? a[y][x] == -1 : (a[y][x] == -m && a[x][y] == -1))) throw fail("bad Cartan entry");
        multi.emplace_back(x_long ? x : y, x_long ? y : x);
        multiplicity = m;
      } else if (a[x][y] != -1 || a[y][x] != -1) {
        throw fail("bad Cartan entry");
      }
    }
  }
  if (edge_count != n - 1) throw fail("graph has a cycle");
  if (multi.size() > 1) throw fail("more than one multiple edge");

  // Walk a path starting at `start`, never revisiting.
  auto walk = [&](int start, int avoid) {
    std::vector<int> path{start};
    int prev = avoid, cur = start;
    while (true) {
      int next = -1;
      for (int y : nbrs[cur])
        if (y != prev) next = y;
      if (next < 0) break;
      path.push_back(next);
      prev = cur;
      cur = next;
    }
    return path;
  };
  int max_deg = 0;
  std::vector<int> leaves;
  for (int x : nodes) {
    max_deg = std::max<int>(max_deg, static_cast<int>(nbrs[x].size()));
    if (nbrs[x].size() <= 1) leaves.push_back(x);
  }

  if (multi.empty()) {
    if (max_deg <= 2) return {{SimpleType::A, n}, walk(leaves.front(), -1)};
    if (max_deg > 3) throw fail("node of degree > 3");
    int center = -1;
    for (int x : nodes)
      if (nbrs[x].size() == 3) {
        if (center >= 0) throw fail("two branch nodes");
        center = x;
      }
    std::vector<std::vector<int>> arms;
    for (int y : nbrs[center]) arms.push_back(walk(y, center));
    std::stable_sort(arms.begin(), arms.end(),
                     [](const auto& p, const auto& q) { return p.size() < q.size(); });
    const auto len = [&](int k) { return arms[k].size(); };
    std::vector<int> order;
    if (len(0) == 1 && len(1) == 1 && len(2) == 1) {
      std::vector<int> l{arms[0][0], arms[1][0], arms[2][0]};
      std::sort(l.begin(), l.end());
      return {{SimpleType::D, 4}, {l[0], center, l[1], l[2]}};
    }
    if (len(0) == 1 && len(1) == 1) {
      // D_n: long arm reversed, center, then the two short leaves.
      order.assign(arms[2].rbegin(), arms[2].rend());
      order.push_back(center);
      const int l0 = arms[0][0], l1 = arms[1][0];
      order.push_back(std::min(l0, l1));
      order.push_back(std::max(l0, l1));
      return {{SimpleType::D, n}, order};
    }
    if (len(0) == 1 && len(1) == 2 && len(2) >= 2 && len(2) <= 4) {
      // E_n: 1 - 3 - 4 - 5 - 6 ..., node 2 hangs off node 4.
      const std::vector<int>* short_arm = &arms[1];
      const std::vector<int>* long_arm = &arms[2];
      if (len(2) == 2 && arms[2][0] < arms[1][0]) std::swap(short_arm, long_arm);
      order = {(*short_arm)[1], arms[0][0], (*short_arm)[0], center};
      order.insert(order.end(), long_arm->begin(), long_arm->end());
      return {{SimpleType::E, n}, order};
    }
    throw fail("branch arms do not match D or E");
  }

  if (max_deg > 2) throw fail("multiple edge in a branched graph");
  const auto [long_node, short_node] = multi.front();
  if (multiplicity == 3) {
    if (n != 2) throw fail("triple edge outside G2");
    return {{SimpleType::G, 2}, {short_node, long_node}};
  }
  if (n == 2) {
    if (long_node < short_node) return {{SimpleType::B, 2}, {long_node, short_node}};
    return {{SimpleType::C, 2}, {short_node, long_node}};
  }
  const bool long_is_leaf = nbrs[long_node].size() == 1;
  const bool short_is_leaf = nbrs[short_node].size() == 1;
  if (short_is_leaf) {
    std::vector<int> order = walk(short_node, -1);
    std::reverse(order.begin(), order.end());
    return {{SimpleType::B, n}, order};
  }
  if (long_is_leaf) {
    std::vector<int> order = walk(long_node, -1);
    std::reverse(order.begin(), order.end());
    return {{SimpleType::C, n}, order};
  }
  if (n == 4) {
    std::vector<int> order = walk(long_node, short_node);
    std::reverse(order.begin(), order.end());
    std::vector<int> tail = walk(short_node, long_node);
    order.insert(order.end(), tail.begin(), tail.end());
    return {{SimpleType::F, 4}, order};
  }
  throw fail("double edge in the interior of a long chain");
}

}  // namespace

CartanMatrix standard_cartan(Component c) {
  check_component(c);
  CartanMatrix m(c.rank, std::vector<int>(c.rank, 0));
  for (int i = 0; i < c.rank; ++i) m[i][i] = 2;
  for (const Edge& e : standard_edges(c)) {
    if (e.multiplicity == 1) {
      m[e.i][e.j] = m[e.j][e.i] = -1;
    } else {
      const int shorter = e.shorter;
      const int longer = shorter == e.i ? e.j : e.i;
      m[longer][shorter] = -e.multiplicity;
      m[shorter][longer] = -1;
    }
  }
  return m;
}

int classical_root_count(Component c) {
  const int l = c.rank;
  switch (c.type) {
    case SimpleType::A: return l * (l + 1);
    case SimpleType::B:
    case SimpleType::C: return 2 * l * l;
    case SimpleType::D: return 2 * l * (l - 1);
    case SimpleType::E: return l == 6 ? 72 : l == 7 ? 126 : 240;
    case SimpleType::F: return 48;
    case SimpleType::G: return 12;
  }
  return 0;
}

DynkinGraph::DynkinGraph(std::vector<Component> components) : components_(std::move(components)) {
  for (const Component& c : components_) {
    check_component(c);
    offsets_.push_back(rank_);
    rank_ += c.rank;
  }
  if (rank_ > NodeSet::kMaxNodes) throw MalformedGraph("total rank exceeds 64 nodes");
  cartan_.assign(rank_, std::vector<int>(rank_, 0));
  for (std::size_t k = 0; k < components_.size(); ++k) {
    const CartanMatrix m = standard_cartan(components_[k]);
    const int off = offsets_[k];
    for (int i = 0; i < components_[k].rank; ++i) {
      component_of_.push_back(static_cast<int>(k));
      for (int j = 0; j < components_[k].rank; ++j) cartan_[off + i][off + j] = m[i][j];
    }
  }
}

DynkinGraph DynkinGraph::parse(std::string_view name) {
  std::vector<Component> comps;
  std::size_t pos = 0;
  while (pos <= name.size()) {
    const std::size_t plus = std::min(name.find('+', pos), name.size());
    const std::string_view part = name.substr(pos, plus - pos);
    if (part.size() < 2) throw MalformedGraph("bad Dynkin type '" + std::string(name) + "'");
    const auto t = type_from_char(part[0]);
    if (!t) throw MalformedGraph("unknown Dynkin type letter in '" + std::string(name) + "'");
    int r = 0;
    for (char ch : part.substr(1)) {
      if (ch < '0' || ch > '9' || r > 1000) throw MalformedGraph("bad rank in '" + std::string(name) + "'");
      r = r * 10 + (ch - '0');
    }
    comps.push_back({*t, r});
    pos = plus + 1;
  }
  return DynkinGraph(std::move(comps));
}

DynkinGraph::Identified DynkinGraph::identify(const CartanMatrix& a) {
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != n) throw MalformedGraph("Cartan matrix is not square");
    if (a[i][i] != 2) throw MalformedGraph("Cartan diagonal entry is not 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0 || a[i][j] < -3) throw MalformedGraph("Cartan entry out of range");
      if ((a[i][j] == 0) != (a[j][i] == 0)) throw MalformedGraph("Cartan matrix pattern is not symmetric");
    }
  }
  std::vector<int> comp(n, -1);
  std::vector<Component> comps;
  std::vector<int> order;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> nodes;
    std::deque<int> queue{s};
    comp[s] = s;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      nodes.push_back(x);
      for (int y = 0; y < n; ++y)
        if (y != x && a[x][y] != 0 && comp[y] < 0) {
          comp[y] = s;
          queue.push_back(y);
        }
    }
    std::sort(nodes.begin(), nodes.end());
    auto [c, ord] = identify_component(a, nodes);
    comps.push_back(c);
    order.insert(order.end(), ord.begin(), ord.end());
  }
  DynkinGraph g(std::move(comps));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (g.cartan()[x][y] != a[order[x]][order[y]])
        throw MalformedGraph("Cartan matrix does not match its identified type " + g.name());
  return {std::move(g), std::move(order)};
}

std::vector<Edge> DynkinGraph::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < rank_; ++i)
    for (int j = i + 1; j < rank_; ++j) {
      if (cartan_[i][j] == 0) continue;
      const int m = cartan_[i][j] * cartan_[j][i];
      int shorter = -1;
      if (m > 1) shorter = cartan_[i][j] == -m ? j : i;
      out.push_back({i, j, m, shorter});
    }
  return out;
}

std::string DynkinGraph::name() const {
  std::string s;
  for (const Component& c : components_) {
    if (!s.empty()) s += "+";
    s += c.name();
  }
  return s;
}

NodeSet DynkinGraph::component_nodes(std::size_t c) const {
  return NodeSet(NodeSet::first_n(components_[c].rank).bits() << offsets_[c]);
}

int Root::height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

bool Root::is_positive() const {
  bool nonzero = false;
  for (int c : coeffs) {
    if (c < 0) return false;
    nonzero |= c != 0;
  }
  return nonzero;
}

bool Root::is_negative() const { return (-*this).is_positive(); }

Root Root::operator-() const {
  Root r = *this;
  for (int& c : r.coeffs) c = -c;
  return r;
}

Root Root::operator+(const Root& o) const {
  Root r = *this;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
  return r;
}

Root Root::operator-(const Root& o) const { return *this + (-o); }

std::string to_string(const Root& r) {
  std::string s = "[";
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(r.coeffs[i]);
  }
  return s + "]";
}

NodeSet support(const Root& r) {
  NodeSet s;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i)
    if (r.coeffs[i] != 0) s.insert(static_cast<int>(i));
  return s;
}

LatticeMap::LatticeMap(int rank) : rank_(rank), m_(static_cast<std::size_t>(rank) * rank, 0) {
  for (int i = 0; i < rank; ++i) at(i, i) = 1;
}

LatticeMap LatticeMap::permutation(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  LatticeMap m(n);
  for (int j = 0; j < n; ++j) {
    m.at(j, j) = 0;
  }
  for (int j = 0; j < n; ++j) m.at(perm[j], j) = 1;
  return m;
}

Root LatticeMap::apply(const Root& r) const {
  Root out{std::vector<int>(rank_, 0)};
  for (int j = 0; j < rank_; ++j) {
    const int c = r.coeffs[j];
    if (c == 0) continue;
    for (int i = 0; i < rank_; ++i) out.coeffs[i] += at(i, j) * c;
  }
  return out;
}

LatticeMap LatticeMap::compose(const LatticeMap& o) const {
  LatticeMap out(rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) {
      int s = 0;
      for (int k = 0; k < rank_; ++k) s += at(i, k) * o.at(k, j);
      out.at(i, j) = s;
    }
  return out;
}

bool LatticeMap::is_identity() const { return *this == LatticeMap(rank_); }

std::size_t RootSet::count() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool RootSet::subset_of(const RootSet& o) const {
  assert(universe_ == o.universe_);
  for (std::size_t k = 0; k < words_.size(); ++k)
    if ((words_[k] & ~o.words_[k]) != 0) return false;
  return true;
}

std::vector<std::size_t> RootSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < words_.size(); ++k)
    for (std::uint64_t w = words_[k]; w != 0; w &= w - 1)
      out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
  return out;
}

RootSet RootSet::operator|(const RootSet& o) const {
  RootSet r = *this;
  for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] |= o.words_[k];
  return r;
}

RootSet RootSet::operator&(const RootSet& o) const {
  RootSet r = *this;
  for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= o.words_[k];
  return r;
}

RootSet RootSet::operator-(const RootSet& o) const {
  RootSet r = *this;
  for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= ~o.words_[k];
  return r;
}

RootSystem::RootSystem(DynkinGraph graph) : graph_(std::move(graph)) {
  const int n = graph_.rank();
  // Close the simple roots under all simple reflections.
  std::set<std::vector<int>> seen;
  std::deque<Root> queue;
  for (int i = 0; i < n; ++i) {
    Root r{std::vector<int>(n, 0)};
    r.coeffs[i] = 1;
    seen.insert(r.coeffs);
    queue.push_back(r);
  }
  while (!queue.empty()) {
    const Root r = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Root s = reflect(r, i);
      if (seen.insert(s.coeffs).second) queue.push_back(std::move(s));
    }
  }
  std::vector<Root> pos;
  for (const auto& c : seen) {
    Root r{c};
    if (r.is_positive()) pos.push_back(std::move(r));
  }
  std::sort(pos.begin(), pos.end(), [](const Root& a, const Root& b) {
    const int ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return a.coeffs > b.coeffs;
  });
  assert(pos.size() * 2 == seen.size());
  roots_ = pos;
  for (const Root& r : pos) roots_.push_back(-r);
  for (std::size_t k = 0; k < roots_.size(); ++k) index_.emplace(roots_[k].coeffs, k);
  simple_.resize(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> c(n, 0);
    c[i] = 1;
    simple_[i] = index_.at(c);
  }
  for (const Root& r : roots_) {
    supports_.push_back(crflag::support(r));
    root_component_.push_back(graph_.component_of(supports_.back().indices().front()));
  }
  const std::size_t total = roots_.size();
  sum_.assign(total * total, -1);
  for (std::size_t a = 0; a < total; ++a)
    for (std::size_t b = a; b < total; ++b) {
      if (root_component_[a] != root_component_[b]) continue;
      const auto it = index_.find((roots_[a] + roots_[b]).coeffs);
      if (it != index_.end()) sum_[a * total + b] = sum_[b * total + a] = static_cast<std::int32_t>(it->second);
    }
}

std::shared_ptr<const RootSystem> RootSystem::get(const DynkinGraph& graph) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const RootSystem>> cache;
  const std::string key = graph.name();
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto rs = std::make_shared<const RootSystem>(graph);
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(rs)).first->second;
}

std::optional<std::size_t> RootSystem::index_of(const Root& r) const {
  const auto it = index_.find(r.coeffs);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RootSet RootSystem::all() const {
  RootSet s(size());
  for (std::size_t k = 0; k < size(); ++k) s.insert(k);
  return s;
}

RootSet RootSystem::positive() const {
  RootSet s(size());
  for (std::size_t k = 0; k < positive_count(); ++k) s.insert(k);
  return s;
}

RootSet RootSystem::negative() const { return all() - positive(); }

RootSet RootSystem::supported_in(NodeSet nodes) const {
  RootSet s(size());
  for (std::size_t k = 0; k < size(); ++k)
    if (supports_[k].subset_of(nodes)) s.insert(k);
  return s;
}

int RootSystem::pairing(const Root& beta, int i) const {
  const CartanMatrix& a = graph_.cartan();
  int p = 0;
  for (int j = 0; j < rank(); ++j) p += beta.coeffs[j] * a[j][i];
  return p;
}

Root RootSystem::reflect(const Root& beta, int i) const {
  Root r = beta;
  r.coeffs[i] -= pairing(beta, i);
  return r;
}

LatticeMap RootSystem::reflection(int i) const {
  LatticeMap m(rank());
  const CartanMatrix& a = graph_.cartan();
  for (int j = 0; j < rank(); ++j) m.at(i, j) -= a[j][i];
  return m;
}

std::vector<int> RootSystem::longest_word(NodeSet nodes) const {
  // Greedy: extend w by s_j while w(alpha_j) > 0 for some j in `nodes`.
  // Each step raises the length by one, and the only element of the
  // subgroup without such a j is its longest element.
  std::vector<int> word;
  LatticeMap w(rank());
  const std::vector<int> gens = nodes.indices();
  while (true) {
    bool extended = false;
    for (int j : gens) {
      Root alpha{std::vector<int>(rank(), 0)};
      alpha.coeffs[j] = 1;
      if (w.apply(alpha).is_positive()) {
        w = w.compose(reflection(j));
        word.push_back(j);
        extended = true;
        break;
      }
    }
    if (!extended) break;
  }
  return word;
}

LatticeMap RootSystem::longest_involution(NodeSet nodes) const {
  {
    std::lock_guard lock(cache_mutex_);
    auto it = longest_cache_.find(nodes.bits());
    if (it != longest_cache_.end()) return it->second;
  }
  LatticeMap w(rank());
  for (int j : longest_word(nodes)) w = w.compose(reflection(j));
  std::lock_guard lock(cache_mutex_);
  return longest_cache_.emplace(nodes.bits(), std::move(w)).first->second;
}

RootSet RootSystem::closure(const RootSet& s) const {
  RootSet out = s;
  std::vector<std::size_t> members = out.indices();
  // Newly added roots only need pairing against everything present.
  std::size_t frontier = 0;
  while (frontier < members.size()) {
    const std::size_t a = members[frontier++];
    for (std::size_t k = 0; k < members.size(); ++k) {
      const auto c = sum(a, members[k]);
      if (c && !out.contains(*c)) {
        out.insert(*c);
        members.push_back(*c);
      }
    }
  }
  return out;
}

RootSet RootSystem::image(const LatticeMap& m, const RootSet& s) const {
  RootSet out(size());
  for (std::size_t k : s.indices()) {
    const auto idx = index_of(m.apply(roots_[k]));
    assert(idx);
    out.insert(*idx);
  }
  return out;
}

RootSet RootSystem::negate(const RootSet& s) const {
  RootSet out(size());
  for (std::size_t k : s.indices()) out.insert(negation(k));
  return out;
}

}  // namespace crflag
