#include "crflag/render.hpp"

#include <algorithm>
#include <sstream>

namespace crflag {

namespace {

using nlohmann::ordered_json;

std::string rstrip(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

// Bond text between consecutive nodes i and i+1, `width` characters wide.
std::string bond(const Edge& e, std::size_t width) {
  if (e.multiplicity == 1) return std::string(width, '-');
  const char fill = e.multiplicity == 2 ? '=' : '3';
  const bool right = e.shorter == e.j;
  std::string s(width, e.multiplicity == 2 ? fill : '-');
  if (e.multiplicity == 3) s[right ? 0 : width - 1] = '3';
  if (right)
    s.back() = '>';
  else
    s.front() = '<';
  return s;
}

std::string node_id(int i) { return "n" + std::to_string(i + 1); }

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string label_set(const SatakeDiagram& d, NodeSet nodes) {
  std::string s = "{";
  bool first = true;
  for (int i : nodes.indices()) {
    if (!first) s += ",";
    s += d.labels()[i];
    first = false;
  }
  return s + "}";
}

std::string render_ascii(const CrossedDiagram& cd) {
  const SatakeDiagram& d = cd.satake();
  if (d.rank() == 0) return "(trivial)\n";
  std::size_t width = 3;
  for (const auto& l : d.labels()) width = std::max(width, l.size() + 1);

  std::vector<Edge> next(d.rank(), Edge{-1, -1, 0, -1});
  std::vector<Edge> other;
  for (const Edge& e : d.graph().edges()) {
    if (e.j == e.i + 1)
      next[e.i] = e;
    else
      other.push_back(e);
  }

  std::string glyphs, labels, marks;
  for (int i = 0; i < d.rank(); ++i) {
    glyphs += d.black().contains(i) ? '*' : 'o';
    if (i + 1 < d.rank()) glyphs += next[i].multiplicity > 0 ? bond(next[i], width - 1) : std::string(width - 1, ' ');
    labels += pad(d.labels()[i], width);
    marks += pad(cd.crosses().contains(i) ? "x" : "", width);
  }
  std::string notes;
  for (const Edge& e : other) {
    notes += notes.empty() ? "" : " ";
    notes += "[" + d.labels()[e.i] + (e.multiplicity == 1 ? "-" : e.multiplicity == 2 ? "=" : "3") +
             d.labels()[e.j] + "]";
  }
  for (auto [a, b] : d.arrows()) {
    notes += notes.empty() ? "" : " ";
    notes += "(" + d.labels()[a] + "~" + d.labels()[b] + ")";
  }
  if (!notes.empty()) glyphs += "   " + notes;
  return rstrip(glyphs) + "\n" + rstrip(labels) + "\n" + rstrip(marks) + "\n";
}

std::string render_dot(const CrossedDiagram& cd) {
  const SatakeDiagram& d = cd.satake();
  std::ostringstream os;
  os << "graph satake {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle, width=0.3, fixedsize=true, fontsize=10];\n";
  for (int i = 0; i < d.rank(); ++i) {
    os << "  " << node_id(i) << " [label=" << quote(d.labels()[i]);
    if (d.black().contains(i)) os << ", style=filled, fillcolor=black, fontcolor=white";
    if (cd.crosses().contains(i)) os << ", xlabel=\"x\"";
    os << "];\n";
  }
  for (const Edge& e : d.graph().edges()) {
    os << "  " << node_id(e.i) << " -- " << node_id(e.j);
    if (e.multiplicity > 1) {
      std::string color = "black";
      for (int k = 1; k < e.multiplicity; ++k) color += ":black";
      os << " [color=" << quote(color) << ", dir=" << (e.shorter == e.j ? "forward" : "back")
         << ", arrowhead=normal, arrowtail=normal]";
    }
    os << ";\n";
  }
  for (auto [a, b] : d.arrows())
    os << "  " << node_id(a) << " -- " << node_id(b) << " [style=dashed, dir=both, constraint=false];\n";
  os << "}\n";
  return os.str();
}

ordered_json diagram_json(const CrossedDiagram& cd) {
  const SatakeDiagram& d = cd.satake();
  const auto& comps = d.graph().components();
  ordered_json j;
  j["type"] = comps.size() == 1 ? std::string(1, static_cast<char>(comps[0].type)) : d.graph().name();
  j["rank"] = d.rank();
  j["black"] = d.black().labels();
  ordered_json arrows = ordered_json::array();
  for (auto [a, b] : d.arrows()) arrows.push_back({a + 1, b + 1});
  j["arrows"] = arrows;
  j["cross"] = cd.crosses().labels();
  return j;
}

std::string render_json(const CrossedDiagram& cd) { return diagram_json(cd).dump() + "\n"; }

std::string render(const CrossedDiagram& cd, Format f) {
  switch (f) {
    case Format::Ascii: return render_ascii(cd);
    case Format::Dot: return render_dot(cd);
    case Format::Json: return render_json(cd);
  }
  return {};
}

ordered_json labels_json(const SatakeDiagram& d, NodeSet nodes) {
  ordered_json out = ordered_json::array();
  for (int i : nodes.indices()) out.push_back(d.labels()[i]);
  return out;
}

ordered_json analysis_json(const OrbitAnalysis& a) {
  ordered_json j;
  j["n"] = a.type.n;
  j["k"] = a.type.k;
  j["dim_g"] = a.type.dim_g;
  j["dim_isotropy"] = a.type.dim_isotropy;
  j["effective"] = a.effective;
  j["totally_real"] = a.totally_real;
  j["totally_complex"] = a.totally_complex;
  j["fundamental"] = a.fundamental;
  j["weakly_nondegenerate"] = a.weakly_nondeg;
  j["strictly_nondegenerate"] = a.strictly_nondeg;
  j["ideal_nondegenerate"] = a.ideal_nondeg;
  return j;
}

ordered_json subdiagram_json(const SubDiagram& sub) {
  ordered_json j;
  j["trivial"] = sub.trivial();
  j["nodes"] = labels_json(sub.diagram.satake(), sub.diagram.satake().graph().all_nodes());
  j["diagram"] = diagram_json(sub.diagram);
  return j;
}

ordered_json fibration_json(const CrossedDiagram& cd, const FibrationReport& f) {
  const SatakeDiagram& d = cd.satake();
  ordered_json j;
  j["psi"] = labels_json(d, f.psi);
  j["is_cr_fibration"] = f.is_cr_fibration;
  j["fiber_nodes"] = labels_json(d, f.fiber_nodes);
  j["fiber_simple_roots"] = labels_json(d, f.b_second);
  j["fiber"] = subdiagram_json(f.fiber_diagram);
  j["effective_fiber"] = subdiagram_json(f.effective_fiber);
  ordered_json counts;
  counts["r_prime"] = f.r_prime.count();
  counts["q_prime"] = f.q_prime.count();
  counts["r_second"] = f.r_second.count();
  counts["q_second"] = f.q_second.count();
  j["root_counts"] = counts;
  return j;
}

ordered_json sweep_json(const SweepReport& r) {
  ordered_json j;
  j["rank_bound"] = r.rank_bound;
  j["forms_checked"] = r.forms_checked;
  j["instances_checked"] = r.instances_checked;
  ordered_json checks = ordered_json::object();
  for (const auto& [k, v] : r.checks) checks[k] = v;
  j["checks"] = checks;
  ordered_json mism = ordered_json::array();
  for (const Mismatch& m : r.mismatches) {
    ordered_json row;
    row["form"] = m.form;
    row["cross"] = m.cross.labels();
    row["property"] = m.property;
    row["expected"] = m.expected;
    row["got"] = m.got;
    mism.push_back(row);
  }
  j["mismatches"] = mism;
  return j;
}

}  // namespace crflag
