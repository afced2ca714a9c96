#include "crflag/satake.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "crflag/error.hpp"

namespace crflag {

namespace {

std::string node_name(int i) { return std::to_string(i + 1); }

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(node_name(i));
  return out;
}

Root simple_root(int rank, int i) {
  Root r{std::vector<int>(rank, 0)};
  r.coeffs[i] = 1;
  return r;
}

}  // namespace

RootSet Conjugation::apply(const RootSet& s) const {
  RootSet out(s.universe());
  for (std::size_t k : s.indices()) out.insert(on_roots[k]);
  return out;
}

const char* to_string(RootKind k) {
  switch (k) {
    case RootKind::Real: return "real";
    case RootKind::Imaginary: return "imaginary";
    case RootKind::Complex: return "complex";
  }
  return "?";
}

std::vector<int> epsilon_of(const SatakeData& d, const RootSystem& rs) {
  const int n = d.graph.rank();
  if (!d.black.subset_of(d.graph.all_nodes())) throw InvalidArrows("black node out of range");
  std::vector<int> eps(n);
  std::iota(eps.begin(), eps.end(), 0);
  std::vector<bool> used(n, false);
  for (auto [i, j] : d.arrows) {
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw InvalidArrows("arrow endpoint out of range");
    if (i == j) throw InvalidArrows("arrow joins node " + node_name(i) + " to itself");
    if (d.black.contains(i) || d.black.contains(j))
      throw InvalidArrows("arrow (" + node_name(i) + "," + node_name(j) + ") touches a black node");
    if (used[i] || used[j]) throw InvalidArrows("node carries more than one arrow");
    used[i] = used[j] = true;
    eps[i] = j;
    eps[j] = i;
  }
  const LatticeMap w0 = rs.longest_involution(d.black);
  for (int b : d.black.indices()) {
    const Root img = -w0.apply(simple_root(n, b));
    const NodeSet supp = support(img);
    if (supp.size() != 1 || img.height() != 1 || !supp.subset_of(d.black))
      throw InvalidArrows("-w0 does not permute the black simple roots");
    eps[b] = supp.indices().front();
  }
  const CartanMatrix& a = d.graph.cartan();
  for (int i = 0; i < n; ++i) {
    if (eps[eps[i]] != i) throw InvalidArrows("node map is not an involution");
    for (int j = 0; j < n; ++j)
      if (a[eps[i]][eps[j]] != a[i][j])
        throw InvalidArrows("arrows do not extend to an automorphism of the Dynkin graph (nodes " +
                            node_name(i) + ", " + node_name(j) + ")");
  }
  return eps;
}

Conjugation build_conjugation(const SatakeData& d, const RootSystem& rs) {
  const int n = d.graph.rank();
  Conjugation c;
  c.epsilon = epsilon_of(d, rs);
  const LatticeMap w0 = rs.longest_involution(d.black);
  c.sigma = w0.compose(LatticeMap::permutation(c.epsilon));

  if (!c.sigma.compose(c.sigma).is_identity()) throw NotASatakeDiagram("sigma is not an involution");
  c.on_roots.resize(rs.size());
  for (std::size_t k = 0; k < rs.size(); ++k) {
    const auto img = rs.index_of(c.sigma.apply(rs.root(k)));
    if (!img) throw NotASatakeDiagram("sigma does not preserve the root system");
    c.on_roots[k] = *img;
  }
  c.imaginary = rs.none();
  for (std::size_t k = 0; k < rs.size(); ++k)
    if (c.on_roots[k] == rs.negation(k)) c.imaginary.insert(k);
  if (!(c.imaginary == rs.supported_in(d.black)))
    throw NotASatakeDiagram("imaginary roots differ from the black-supported roots");
  for (std::size_t k = 0; k < rs.positive_count(); ++k)
    if (!c.imaginary.contains(k) && !rs.root(c.on_roots[k]).is_positive())
      throw NotASatakeDiagram("sigma maps the non-imaginary positive root " + to_string(rs.root(k)) +
                              " to a negative root");
  for (int i = 0; i < n; ++i) {
    if (d.black.contains(i)) continue;
    const Root diff = c.sigma.apply(simple_root(n, i)) - simple_root(n, c.epsilon[i]);
    for (int j = 0; j < n; ++j) {
      if (diff.coeffs[j] < 0 || (diff.coeffs[j] != 0 && !d.black.contains(j)))
        throw NotASatakeDiagram("sigma(alpha_" + node_name(i) + ") - epsilon(alpha_" + node_name(i) +
                                ") is not a nonnegative combination of black simple roots");
    }
  }
  return c;
}

SatakeDiagram::SatakeDiagram(SatakeData data) : data_(std::move(data)) {
  for (auto& [i, j] : data_.arrows)
    if (i > j) std::swap(i, j);
  std::sort(data_.arrows.begin(), data_.arrows.end());
  roots_ = RootSystem::get(data_.graph);
  conj_ = build_conjugation(data_, *roots_);
  labels_ = default_labels(rank());
}

void SatakeDiagram::set_labels(std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) != rank()) throw Error("label count does not match rank");
  labels_ = std::move(labels);
}

RootKind classify_root(const Conjugation& c, const RootSystem& rs, std::size_t root) {
  const std::size_t img = c.apply(root);
  if (img == root) return RootKind::Real;
  if (img == rs.negation(root)) return RootKind::Imaginary;
  return RootKind::Complex;
}

std::vector<NodeSet> sigma_components(const SatakeDiagram& d) {
  const int n = d.rank();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
  for (const Edge& e : d.graph().edges()) unite(e.i, e.j);
  for (auto [i, j] : d.arrows()) unite(i, j);
  std::vector<NodeSet> out;
  std::vector<int> slot(n, -1);
  for (int i = 0; i < n; ++i) {
    const int r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].insert(i);
  }
  return out;
}

Restriction restrict_diagram(const SatakeDiagram& d, NodeSet keep) {
  const std::vector<int> kept = keep.indices();
  const int m = static_cast<int>(kept.size());
  CartanMatrix sub(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) sub[a][b] = d.graph().cartan()[kept[a]][kept[b]];
  auto identified = DynkinGraph::identify(sub);
  std::vector<int> origin(m);
  std::vector<int> new_of_old(d.rank(), -1);
  for (int a = 0; a < m; ++a) {
    origin[a] = kept[identified.order[a]];
    new_of_old[origin[a]] = a;
  }
  SatakeData data{std::move(identified.graph), {}, {}};
  for (int a = 0; a < m; ++a)
    if (d.black().contains(origin[a])) data.black.insert(a);
  for (auto [i, j] : d.arrows())
    if (new_of_old[i] >= 0 && new_of_old[j] >= 0) data.arrows.emplace_back(new_of_old[i], new_of_old[j]);
  SatakeDiagram out(std::move(data));
  std::vector<std::string> labels;
  for (int a = 0; a < m; ++a) labels.push_back(d.labels()[origin[a]]);
  out.set_labels(std::move(labels));
  return {std::move(out), std::move(origin)};
}

SatakeDiagram direct_sum(const SatakeDiagram& a, const SatakeDiagram& b) {
  std::vector<Component> comps = a.graph().components();
  comps.insert(comps.end(), b.graph().components().begin(), b.graph().components().end());
  const int shift = a.rank();
  SatakeData data{DynkinGraph(std::move(comps)),
                  a.black() | NodeSet(b.black().bits() << shift), a.arrows()};
  for (auto [i, j] : b.arrows()) data.arrows.emplace_back(i + shift, j + shift);
  SatakeDiagram out(std::move(data));
  if (!a.name().empty() && !b.name().empty()) out.set_name(a.name() + "+" + b.name());
  return out;
}

}  // namespace crflag
