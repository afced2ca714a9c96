#include "crflag/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "crflag/catalog.hpp"
#include "crflag/dsl.hpp"
#include "crflag/error.hpp"
#include "crflag/fibration.hpp"
#include "crflag/oracles.hpp"
#include "crflag/render.hpp"

namespace crflag {

namespace {

using nlohmann::ordered_json;

constexpr int kSweepRankLimit = 8;

const char* tf(bool b) { return b ? "true" : "false"; }

std::string form_name(const SatakeDiagram& d) {
  return d.name().empty() ? "custom " + d.graph().name() : d.name();
}

void write_analysis(std::ostream& out, const OrbitAnalysis& a) {
  out << "n = " << a.type.n << "\n"
      << "k = " << a.type.k << "\n"
      << "dim_g = " << a.type.dim_g << "\n"
      << "dim_isotropy = " << a.type.dim_isotropy << "\n"
      << "effective = " << tf(a.effective) << "\n"
      << "totally_real = " << tf(a.totally_real) << "\n"
      << "totally_complex = " << tf(a.totally_complex) << "\n"
      << "fundamental = " << tf(a.fundamental) << "\n"
      << "weakly_nondegenerate = " << tf(a.weakly_nondeg) << "\n"
      << "strictly_nondegenerate = " << tf(a.strictly_nondeg) << "\n"
      << "ideal_nondegenerate = " << tf(a.ideal_nondeg) << "\n";
}

void write_sub(std::ostream& out, const char* title, const SubDiagram& sub) {
  out << title << ":\n" << render_ascii(sub.diagram);
}

int cmd_classify(const std::string& spec, const std::string& format, std::ostream& out) {
  const CrossedDiagram cd = parse_spec(spec);
  const OrbitAnalysis a = analyze(cd);
  if (format == "json") {
    ordered_json j;
    j["form"] = form_name(cd.satake());
    j["diagram"] = diagram_json(cd);
    j["analysis"] = analysis_json(a);
    out << j.dump(2) << "\n";
  } else {
    out << "form = " << form_name(cd.satake()) << "\n"
        << "cross = " << label_set(cd.satake(), cd.crosses()) << "\n"
        << render_ascii(cd);
    write_analysis(out, a);
  }
  return kExitOk;
}

int cmd_fiber(const std::string& spec, const std::string& psi_text, const std::string& format,
              std::ostream& out) {
  const CrossedDiagram cd = parse_spec(spec);
  const FibrationReport f = fiber_over(cd, parse_node_set(psi_text));
  if (format == "json") {
    out << fibration_json(cd, f).dump(2) << "\n";
  } else {
    const SatakeDiagram& d = cd.satake();
    out << "psi = " << label_set(d, f.psi) << "\n"
        << "is_cr_fibration = " << tf(f.is_cr_fibration) << "\n"
        << "fiber_nodes = " << label_set(d, f.fiber_nodes) << "\n"
        << "effective_fiber_nodes = " << label_set(d, f.effective_fiber.parent_nodes()) << "\n";
    write_sub(out, "effective fiber", f.effective_fiber);
  }
  return kExitOk;
}

ordered_json fundamental_json(const CrossedDiagram& cd, const FundamentalReduction& r) {
  ordered_json j;
  j["psi"] = labels_json(cd.satake(), r.psi);
  j["base"] = diagram_json(r.base);
  j["base_analysis"] = analysis_json(analyze(r.base));
  j["fiber"] = subdiagram_json(r.fiber);
  return j;
}

ordered_json weak_json(const CrossedDiagram& cd, const WeakReduction& r) {
  ordered_json j;
  j["removed"] = labels_json(cd.satake(), r.removed);
  j["base"] = diagram_json(r.base);
  j["base_analysis"] = analysis_json(analyze(r.base));
  j["fiber"] = subdiagram_json(r.fiber);
  j["used_fallback"] = r.used_fallback;
  return j;
}

void write_fundamental(std::ostream& out, const CrossedDiagram& cd, const FundamentalReduction& r) {
  out << "psi = " << label_set(cd.satake(), r.psi) << "\n"
      << "base:\n"
      << render_ascii(r.base) << "base_n = " << cr_type(r.base).n << "\n";
  write_sub(out, "fiber", r.fiber);
}

void write_weak(std::ostream& out, const CrossedDiagram& cd, const WeakReduction& r) {
  out << "removed = " << label_set(cd.satake(), r.removed) << "\n"
      << "base:\n"
      << render_ascii(r.base) << "base_weakly_nondegenerate = " << tf(is_weakly_nondegenerate(r.base))
      << "\n";
  write_sub(out, "fiber", r.fiber);
  out << "fiber_k = " << cr_type(r.fiber.diagram).k << "\n";
}

int cmd_reduce(const std::string& spec, const std::string& mode, const std::string& format,
               std::ostream& out) {
  const CrossedDiagram cd = parse_spec(spec);
  const bool json = format == "json";
  ordered_json j;
  if (mode == "fundamental") {
    const FundamentalReduction r = fundamental_reduction(cd);
    if (json)
      j = fundamental_json(cd, r);
    else
      write_fundamental(out, cd, r);
  } else if (mode == "weak") {
    const WeakReduction r = weak_reduction(cd);
    if (json)
      j = weak_json(cd, r);
    else
      write_weak(out, cd, r);
  } else {
    const ReductionReport r = reduction_diagram(cd);
    if (json) {
      j["fundamental"] = fundamental_json(cd, r.fundamental);
      j["weak"] = weak_json(r.fundamental.fiber.diagram, r.weak);
      j["generated_is_base"] = r.generated_is_base;
    } else {
      out << "[fundamental reduction]\n";
      write_fundamental(out, cd, r.fundamental);
      out << "[weak reduction of the fiber]\n";
      write_weak(out, r.fundamental.fiber.diagram, r.weak);
      out << "generated_is_base = " << tf(r.generated_is_base) << "\n";
    }
  }
  if (json) out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_table(const std::string& family, int rank_max, const std::string& format, std::ostream& out) {
  const auto& families = catalog_families();
  if (std::find(families.begin(), families.end(), family) == families.end())
    throw UnknownForm("unknown family " + family);
  const std::vector<CatalogEntry> entries = catalog_family(family, rank_max);
  const bool json = format == "json";
  ordered_json rows = ordered_json::array();
  if (!json) out << "family,params,cross_bitmask,n,k,effective,fundamental,weak,strict,ideal\n";
  for (const CatalogEntry& e : entries) {
    for_each_subset(e.diagram.graph().all_nodes(), [&](NodeSet phi) {
      const OrbitAnalysis a = analyze(CrossedDiagram(e.diagram, phi));
      if (json) {
        ordered_json row;
        row["family"] = e.family;
        row["params"] = e.params;
        row["cross_bitmask"] = phi.bits();
        row["n"] = a.type.n;
        row["k"] = a.type.k;
        row["effective"] = a.effective;
        row["fundamental"] = a.fundamental;
        row["weak"] = a.weakly_nondeg;
        row["strict"] = a.strictly_nondeg;
        row["ideal"] = a.ideal_nondeg;
        rows.push_back(row);
      } else {
        out << e.family << ',' << e.params << ',' << phi.bits() << ',' << a.type.n << ',' << a.type.k << ','
            << a.effective << ',' << a.fundamental << ',' << a.weakly_nondeg << ',' << a.strictly_nondeg << ','
            << a.ideal_nondeg << '\n';
      }
    });
  }
  if (json) out << rows.dump(2) << "\n";
  return kExitOk;
}

int cmd_sweep(int rank_max, int threads, const std::string& format, std::ostream& out) {
  const SweepReport r = sweep_consistency(rank_max, threads);
  if (format == "json") {
    out << sweep_json(r).dump(2) << "\n";
  } else {
    out << "rank_bound = " << r.rank_bound << "\n"
        << "forms_checked = " << r.forms_checked << "\n"
        << "instances_checked = " << r.instances_checked << "\n"
        << "mismatches = " << r.mismatches.size() << "\n";
    for (const Mismatch& m : r.mismatches)
      out << "  " << m.form << " cross " << m.cross.to_string() << ": " << m.property << " expected "
          << m.expected << ", got " << m.got << "\n";
  }
  return sweep_exit_code(r);
}

int cmd_validate(const std::string& spec, std::ostream& out) {
  const CrossedDiagram cd = parse_spec(spec);
  const SatakeDiagram& d = cd.satake();
  const RootSystem& rs = d.roots();
  build_conjugation(d.data(), rs);
  std::size_t counts[3] = {0, 0, 0};
  for (std::size_t i = 0; i < rs.size(); ++i) ++counts[static_cast<int>(classify_root(d.conjugation(), rs, i))];
  out << "valid = true\n"
      << "form = " << form_name(d) << "\n"
      << "type = " << d.graph().name() << "\n"
      << "black = " << label_set(d, d.black()) << "\n"
      << "sigma_components = " << sigma_components(d).size() << "\n"
      << "roots = " << rs.size() << " (real " << counts[static_cast<int>(RootKind::Real)] << ", imaginary "
      << counts[static_cast<int>(RootKind::Imaginary)] << ", complex "
      << counts[static_cast<int>(RootKind::Complex)] << ")\n";
  return kExitOk;
}

int cmd_render(const std::string& spec, const std::string& format, std::ostream& out) {
  const CrossedDiagram cd = parse_spec(spec);
  out << render(cd, format == "dot" ? Format::Dot : format == "json" ? Format::Json : Format::Ascii);
  return kExitOk;
}

}  // namespace

int sweep_exit_code(const SweepReport& r) { return r.mismatches.empty() ? kExitOk : kExitViolation; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"CR invariants of parabolic minimal CR algebras from cross-marked Satake diagrams", "crflag"};
  app.require_subcommand(1);

  std::string spec, psi, mode, family, format;
  int rank_max = 0;
  int threads = 0;
  const auto text_json = CLI::IsMember({"text", "json"});

  auto* classify = app.add_subcommand("classify", "CR type and nondegeneracy flags");
  classify->add_option("spec", spec, "diagram spec")->required();
  classify->add_option("--format", format, "text or json")->check(text_json);

  auto* fiber = app.add_subcommand("fiber", "fiber of the fibration onto the Psi-parabolic");
  fiber->add_option("spec", spec, "diagram spec")->required();
  fiber->add_option("--psi", psi, "node set such as {1}")->required();
  fiber->add_option("--format", format, "text or json")->check(text_json);

  auto* reduce = app.add_subcommand("reduce", "fundamental, weak or combined reduction");
  reduce->add_option("spec", spec, "diagram spec")->required();
  reduce->add_option("--mode", mode, "fundamental, weak or full")
      ->required()
      ->check(CLI::IsMember({"fundamental", "weak", "full"}));
  reduce->add_option("--format", format, "text or json")->check(text_json);

  auto* table = app.add_subcommand("table", "flags for every cross set of a catalog family");
  table->add_option("--family", family, "catalog family")->required();
  table->add_option("--rank-max", rank_max, "largest rank")->required()->check(CLI::Range(0, kMaxComponentRank));
  table->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* sweep = app.add_subcommand("sweep", "compare criteria with brute-force oracles");
  sweep->add_option("--rank-max", rank_max, "largest total rank")->required()->check(CLI::Range(0, kSweepRankLimit));
  sweep->add_option("--threads", threads, "worker threads, 0 for all cores")->check(CLI::NonNegativeNumber);
  sweep->add_option("--format", format, "text or json")->check(text_json);

  auto* validate = app.add_subcommand("validate", "check that a spec names a valid Satake diagram");
  validate->add_option("spec", spec, "diagram spec")->required();

  auto* render_cmd = app.add_subcommand("render", "draw a crossed diagram");
  render_cmd->add_option("spec", spec, "diagram spec")->required();
  render_cmd->add_option("--format", format, "ascii, dot or json")->check(CLI::IsMember({"ascii", "dot", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (classify->parsed()) return cmd_classify(spec, format, out);
    if (fiber->parsed()) return cmd_fiber(spec, psi, format, out);
    if (reduce->parsed()) return cmd_reduce(spec, mode, format, out);
    if (table->parsed()) return cmd_table(family, rank_max, format, out);
    if (sweep->parsed()) return cmd_sweep(rank_max, threads, format, out);
    if (validate->parsed()) return cmd_validate(spec, out);
    if (render_cmd->parsed()) return cmd_render(spec, format, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const AmbiguousLargest& e) {
    err << "error: " << e.what() << "\n";
    return kExitViolation;
  } catch (const DataIntegrityError& e) {
    err << "error: " << e.what() << "\n";
    return kExitViolation;
  } catch (const Error& e) {
    if (validate->parsed()) out << "valid = false\n";
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitUsage;
}

}  // namespace crflag
