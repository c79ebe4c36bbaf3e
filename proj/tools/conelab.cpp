#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "conelab/catalog.hpp"
#include "conelab/io.hpp"
#include "conelab/repro.hpp"
#include "conelab/theorems.hpp"

namespace {

using namespace conelab;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

struct GlobalOptions {
  std::string format = "text";
  std::uint64_t seed = 1729;
  std::vector<std::string> command;  // argv, echoed into structured output
};

// Every command funnels through here so both formats carry the seed and the
// options that were in effect, defaults included.
int emit(const GlobalOptions& g, const Json& inputs, const Json& options,
         const std::string& result_key, const Json& result, const std::string& text,
         int exit_code) {
  if (g.format == "structured") {
    Json out;
    out["command"] = g.command;
    out["format"] = g.format;
    out["seed"] = std::to_string(g.seed);
    out["inputs"] = inputs;
    out["options"] = options;
    out[result_key] = result;
    std::cout << canonical_text(out);
  } else {
    std::cout << "seed " << g.seed << "\n" << text;
  }
  return exit_code;
}

std::string format_integer_matrix(const IntegerMatrix& m) {
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows; ++r) {
    out << "  [";
    for (std::size_t c = 0; c < m.cols; ++c)
      out << (c ? ", " : "") << format_integer(m.at(r, c));
    out << "]\n";
  }
  return out.str();
}

std::string format_vector_list(const std::vector<QVector>& vs) {
  std::ostringstream out;
  for (const QVector& v : vs) out << "  " << format_qvector(v) << "\n";
  return out.str();
}

std::vector<Integer> parse_integer_vector_literal(const std::string& text,
                                                  const std::string& what) {
  QVector q = parse_qvector(text);
  std::vector<Integer> out;
  for (const Rational& x : q) {
    if (x.get_den() != 1)
      throw input_error(what + ": expected integer entries, got " + format_rational(x));
    out.push_back(x.get_num());
  }
  return out;
}

int run_group(const GlobalOptions& g, const std::string& op, const std::string& file) {
  Json doc = load_document_file(file);
  Json inputs = {{"file", file}, {"document", doc}};
  Json options = Json::object();

  if (op == "snf") {
    IntegerMatrix m =
        integer_matrix_from_json(require_field(doc, "matrix", file + ": $"), file + ": $.matrix");
    SmithDecomposition s = smith_normal_form(m);
    GroupPresentation coker = presentation_from_relations(m.cols, m);
    Json result = {{"smith", smith_to_json(s)}, {"cokernel", presentation_to_json(coker)}};
    std::ostringstream text;
    text << "matrix " << m.rows << " x " << m.cols << "\n";
    text << "diagonal: " << Json(integer_vector_to_json(diagonal_of(s.d))).dump() << "\n";
    text << "cokernel of the relation rows: " << describe_group(coker) << "\n";
    text << "u (row transform):\n" << format_integer_matrix(s.u);
    text << "v (column transform):\n" << format_integer_matrix(s.v);
    return emit(g, inputs, options, "result", result, text.str(), kExitOk);
  }
  if (op == "present") {
    std::size_t generators = size_from_json(require_field(doc, "generator_count", file + ": $"),
                                            file + ": $.generator_count");
    IntegerMatrix relations = integer_matrix_from_json(
        require_field(doc, "relations", file + ": $"), file + ": $.relations");
    if (relations.rows > 0 && relations.cols != generators)
      throw input_error(file + ": $.relations: each relation must have " +
                        std::to_string(generators) + " coefficients, got " +
                        std::to_string(relations.cols));
    GroupPresentation p = presentation_from_relations(generators, relations);
    Json result = presentation_to_json(p);
    std::ostringstream text;
    text << generators << " generators, " << relations.rows << " relations\n";
    text << "presentation: " << describe_group(p) << "\n";
    return emit(g, inputs, options, "result", result, text.str(), kExitOk);
  }
  throw input_error("unknown group operation '" + op + "' (expected snf or present)");
}

int run_cone(const GlobalOptions& g, const std::string& op, const std::string& file,
             const std::optional<std::string>& point_text, std::size_t coordinate,
             const std::string& level_text) {
  Json doc = load_document_file(file);
  std::size_t dim =
      size_from_json(require_field(doc, "ambient_dim", file + ": $"), file + ": $.ambient_dim");
  std::vector<QVector> gens = vector_list_from_json(
      require_field(doc, "generators", file + ": $"), file + ": $.generators");
  RationalCone cone = RationalCone::from_generators(dim, gens);

  Json inputs = {{"file", file}, {"document", doc}};
  Json options = Json::object();

  if (op == "facets") {
    Json result = facets_to_json(cone.facets());
    std::ostringstream text;
    text << "facet normals (" << cone.facets().normals.size() << "):\n"
         << format_vector_list(cone.facets().normals);
    text << "span equations (" << cone.facets().span_equations.size() << "):\n"
         << format_vector_list(cone.facets().span_equations);
    return emit(g, inputs, options, "result", result, text.str(), kExitOk);
  }
  if (op == "contains") {
    if (!point_text) throw input_error("cone contains: --point is required");
    QVector x = parse_qvector(*point_text);
    if (x.size() != dim)
      throw input_error("cone contains: point has dimension " + std::to_string(x.size()) +
                        " but the cone lives in dimension " + std::to_string(dim));
    options["point"] = *point_text;
    Json result = {{"point", qvector_to_json(x)},
                   {"contains", cone.contains(x)},
                   {"interior", cone.interior_contains(x)},
                   {"relative_interior", cone.relative_interior_contains(x)}};
    std::ostringstream text;
    text << "point " << format_qvector(x) << "\n";
    text << "contains: " << (cone.contains(x) ? "true" : "false") << "\n";
    text << "interior: " << (cone.interior_contains(x) ? "true" : "false") << "\n";
    text << "relative interior: " << (cone.relative_interior_contains(x) ? "true" : "false")
         << "\n";
    return emit(g, inputs, options, "result", result, text.str(), kExitOk);
  }
  if (op == "lineality") {
    std::vector<QVector> basis = cone.lineality_space();
    Json result = {{"lineality_basis", vector_list_to_json(basis)},
                   {"strongly_convex", cone.is_strongly_convex()}};
    std::ostringstream text;
    text << "strongly convex: " << (cone.is_strongly_convex() ? "true" : "false") << "\n";
    text << "lineality basis (" << basis.size() << "):\n" << format_vector_list(basis);
    return emit(g, inputs, options, "result", result, text.str(), kExitOk);
  }
  if (op == "slice") {
    Rational level = parse_rational(level_text);
    if (coordinate >= dim)
      throw input_error("cone slice: coordinate " + std::to_string(coordinate) +
                        " is out of range for dimension " + std::to_string(dim));
    options["coordinate"] = std::to_string(coordinate);
    options["level"] = format_rational(level);
    LevelSetReport report = level_set_diameter_bounded(cone, coordinate, level);
    Json result = level_set_to_json(report);
    std::ostringstream text;
    text << "slice {x[" << coordinate << "] = " << format_rational(level) << "}\n";
    if (report.slice_empty) {
      text << "empty slice\n";
    } else if (report.bounded) {
      text << "bounded, squared diameter " << format_rational(report.squared_diameter) << "\n";
      text << "vertices:\n" << format_vector_list(report.vertices);
    } else {
      text << "unbounded";
      if (report.recession_direction)
        text << ", recession direction " << format_qvector(*report.recession_direction);
      text << "\n";
    }
    return emit(g, inputs, options, "result", result, text.str(), kExitOk);
  }
  throw input_error("unknown cone operation '" + op +
                    "' (expected facets, contains, lineality or slice)");
}

struct CheckOptions {
  std::string rank = "1";
  std::size_t horizon = 1000;
  std::string bound = "1000000";
  std::size_t depth = 3;
  std::optional<std::string> label;
  std::optional<std::string> probe;
  std::optional<std::string> stream;
  bool declared_unbounded = false;
};

const LabeledLine& select_line(const CatalogEntry& e, const std::optional<std::string>& label) {
  if (e.lines.empty()) throw input_error("entry '" + e.name + "' declares no lines");
  if (!label) return e.lines.front();
  for (const LabeledLine& ll : e.lines)
    if (ll.label == *label) return ll;
  std::string have;
  for (const LabeledLine& ll : e.lines) have += (have.empty() ? "" : ", ") + ll.label;
  throw input_error("entry '" + e.name + "' has no line labelled '" + *label +
                    "' (available: " + have + ")");
}

std::string betti_label(const CatalogEntry& e, const std::optional<std::string>& label) {
  if (label) return *label;
  if (e.betti.empty()) throw input_error("entry '" + e.name + "' declares no Betti data");
  return e.betti.begin()->first;
}

const ChiFunctional& select_functional(const CatalogEntry& e,
                                       const std::optional<std::string>& label) {
  if (e.chi.empty()) throw input_error("entry '" + e.name + "' declares no functionals");
  if (!label) return e.chi.front();
  for (const ChiFunctional& f : e.chi)
    if (f.label == *label) return f;
  std::string have;
  for (const ChiFunctional& f : e.chi) have += (have.empty() ? "" : ", ") + f.label;
  throw input_error("entry '" + e.name + "' has no functional labelled '" + *label +
                    "' (available: " + have + ")");
}

std::vector<ModuleClass> declared_mcm_classes(const CatalogEntry& e) {
  std::vector<ModuleClass> out;
  for (const ModuleClass& m : e.classes)
    if (m.mcm_flag.has_value() && *m.mcm_flag) out.push_back(m);
  return out;
}

int run_check(const GlobalOptions& g, const std::string& id, const std::string& target,
              const CheckOptions& opt) {
  CatalogEntry e = resolve_entry_or_file(target);

  Json inputs = {{"target", target}, {"document", e.document}};
  Json options;
  options["rank"] = opt.rank;
  options["horizon"] = std::to_string(opt.horizon);
  options["bound"] = opt.bound;
  options["depth"] = std::to_string(opt.depth);
  if (opt.label) options["label"] = *opt.label;
  if (opt.probe) options["probe"] = *opt.probe;
  if (opt.stream) options["stream"] = *opt.stream;
  if (opt.declared_unbounded) options["declared_unbounded"] = true;

  TheoremReport report;
  if (id == "t1") {
    Integer r = parse_integer(opt.rank);
    std::vector<ModuleClass> group;
    for (const ModuleClass& m : declared_mcm_classes(e))
      if (m.rank == r) group.push_back(m);
    if (group.empty())
      throw input_error("entry '" + e.name +
                        "' has no declared maximal Cohen-Macaulay classes of rank " +
                        format_integer(r));
    report = theorem1_report(group, r, e.ring);
  } else if (id == "t3") {
    report = theorem3_walk(select_line(e, opt.label).line, e.ring, opt.depth);
  } else if (id == "line") {
    report = line_constraints_check(select_line(e, opt.label).line);
  } else if (id == "p16") {
    report = prop16_separation(e.classes);
  } else if (id == "sym") {
    report = symmetry_check(e.classes, e.ring);
  } else if (id == "p44") {
    std::string label = betti_label(e, opt.label);
    report = prop44_boundary_check(e.class_by_label(label).rank, e.betti_by_label(label),
                                   opt.horizon);
  } else if (id == "t11") {
    std::string label = betti_label(e, opt.label);
    std::vector<ModuleClass> span = declared_mcm_classes(e);
    if (span.empty())
      throw input_error("entry '" + e.name +
                        "' has no declared maximal Cohen-Macaulay classes to span the cone");
    RationalCone v = class_cone(span, e.ring);
    report = theorem11_entry_indices(e.class_by_label(label), e.betti_by_label(label), v,
                                     opt.horizon, opt.declared_unbounded);
  } else if (id == "chi") {
    const ChiFunctional& f = select_functional(e, opt.label);
    GroupElement probe = [&]() {
      if (opt.probe) {
        std::vector<Integer> free_part = parse_integer_vector_literal(*opt.probe, "--probe");
        GroupPresentation kernel = e.ring.kernel_presentation();
        std::vector<Integer> torsion(kernel.torsion_rank(), Integer(0));
        return make_element(kernel, std::move(free_part), std::move(torsion));
      }
      if (!f.probe)
        throw input_error("functional '" + f.label + "' declares no probe; pass --probe");
      return *f.probe;
    }();
    report = chi_halfspace_report(f.values, e.classes, probe);
  } else if (id == "stream") {
    if (!opt.stream)
      throw input_error("check stream: --stream linear:[v] or alternating:[v] is required");
    std::size_t colon = opt.stream->find(':');
    if (colon == std::string::npos)
      throw input_error("--stream: expected kind:vector, e.g. linear:[1]");
    std::string kind = opt.stream->substr(0, colon);
    if (kind != "linear" && kind != "alternating")
      throw input_error("--stream: unknown kind '" + kind + "' (expected linear or alternating)");
    std::vector<Integer> free_part =
        parse_integer_vector_literal(opt.stream->substr(colon + 1), "--stream");
    GroupPresentation kernel = e.ring.kernel_presentation();
    std::vector<Integer> torsion(kernel.torsion_rank(), Integer(0));
    GroupElement step = make_element(kernel, std::move(free_part), std::move(torsion));
    const ModuleClass* base = nullptr;
    if (opt.label) {
      base = &e.class_by_label(*opt.label);
    } else {
      if (e.classes.empty()) throw input_error("entry '" + e.name + "' declares no classes");
      base = &e.classes.front();
    }
    ClassStream s = arithmetic_stream(*base, step, kind == "alternating");
    report = stream_divergence_monitor(s, base->rank, opt.horizon, parse_rational(opt.bound));
  } else {
    throw input_error("unknown check id '" + id +
                      "' (expected t1, t3, t11, p16, p44, sym, line, chi or stream)");
  }

  std::ostringstream text;
  text << "options: rank=" << opt.rank << " horizon=" << opt.horizon << " bound=" << opt.bound
       << " depth=" << opt.depth;
  if (opt.label) text << " label=" << *opt.label;
  text << "\n" << render_report_text(report);
  int code = report.verdict == Verdict::violated ? kExitViolation : kExitOk;
  return emit(g, inputs, options, "report", report_to_json(report), text.str(), code);
}

int run_repro(const GlobalOptions& g, const std::string& target) {
  if (target == "all") {
    AcceptanceSummary summary = run_acceptance_suite(g.seed);
    Json criteria = Json::array();
    for (const CriterionResult& c : summary.criteria)
      criteria.push_back({{"number", c.number},
                          {"title", c.title},
                          {"passed", c.passed},
                          {"detail", c.detail}});
    Json result = {{"seed", std::to_string(summary.seed)},
                   {"data_dir", summary.data_dir},
                   {"criteria", criteria},
                   {"all_passed", summary.all_passed()}};
    Json inputs = {{"target", target}};
    return emit(g, inputs, Json::object(), "result", result, render_summary_text(summary),
                summary.all_passed() ? kExitOk : kExitViolation);
  }

  CatalogEntry e = load_entry(target);
  std::vector<TheoremReport> reports = entry_validator_suite(e);
  Json report_list = Json::array();
  bool violated = false;
  std::ostringstream text;
  text << "entry " << e.name << ": " << reports.size() << " checks\n";
  for (const TheoremReport& r : reports) {
    report_list.push_back(report_to_json(r));
    violated = violated || r.verdict == Verdict::violated;
    text << "  " << r.id << ": " << to_string(r.verdict) << "\n";
  }
  text << (violated ? "entry suite FAILED" : "entry suite passed") << "\n";
  Json inputs = {{"target", target}, {"document", e.document}};
  Json result = {{"entry", e.name}, {"reports", report_list}, {"passed", !violated}};
  return emit(g, inputs, Json::object(), "result", result, text.str(),
              violated ? kExitViolation : kExitOk);
}

}  // namespace

int main(int argc, char** argv) {
  GlobalOptions g;
  g.command.assign(argv, argv + argc);

  CLI::App app{"exact computational algebra for class groups, cones and module classes"};
  app.require_subcommand(1);
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "seed for randomized suites")->capture_default_str();

  std::string group_op, group_file;
  CLI::App* group = app.add_subcommand("group", "Smith normal form and presentations");
  group->fallthrough();
  group->add_option("op", group_op, "snf or present")->required();
  group->add_option("file", group_file, "document with a matrix or relations")->required();

  std::string cone_op, cone_file, cone_level = "1";
  std::optional<std::string> cone_point;
  std::size_t cone_coordinate = 0;
  CLI::App* cone = app.add_subcommand("cone", "facets, membership, lineality, slices");
  cone->fallthrough();
  cone->add_option("op", cone_op, "facets, contains, lineality or slice")->required();
  cone->add_option("file", cone_file, "document with ambient_dim and generators")->required();
  cone->add_option("--point", cone_point, "probe point, e.g. [2, 1]");
  cone->add_option("--coordinate", cone_coordinate, "slice coordinate")->capture_default_str();
  cone->add_option("--level", cone_level, "slice level (rational)")->capture_default_str();

  std::string check_id, check_target;
  CheckOptions copt;
  CLI::App* check = app.add_subcommand("check", "run one validator on an entry or file");
  check->fallthrough();
  check->add_option("id", check_id, "t1, t3, t11, p16, p44, sym, line, chi or stream")
      ->required();
  check->add_option("target", check_target, "catalog entry name or document path")->required();
  check->add_option("--rank", copt.rank, "rank for the slice chain")->capture_default_str();
  check->add_option("--horizon", copt.horizon, "scan horizon")->capture_default_str();
  check->add_option("--bound", copt.bound, "divergence bound (rational)")->capture_default_str();
  check->add_option("--depth", copt.depth, "relation-chain depth")->capture_default_str();
  check->add_option("--label", copt.label, "class, line or functional label");
  check->add_option("--probe", copt.probe, "probe vector for chi, e.g. [1]");
  check->add_option("--stream", copt.stream, "stream spec: linear:[v] or alternating:[v]");
  check->add_flag("--declared-unbounded", copt.declared_unbounded,
                  "declare unbounded syzygy ranks for the entry-index scan");

  std::string repro_target = "all";
  CLI::App* repro = app.add_subcommand("repro", "acceptance suite or per-entry suite");
  repro->fallthrough();
  repro->add_option("target", repro_target, "'all' or a catalog entry name")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (group->parsed()) return run_group(g, group_op, group_file);
    if (cone->parsed()) return run_cone(g, cone_op, cone_file, cone_point, cone_coordinate,
                                        cone_level);
    if (check->parsed()) return run_check(g, check_id, check_target, copt);
    if (repro->parsed()) return run_repro(g, repro_target);
  } catch (const input_error& err) {
    std::cerr << "input error: " << err.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
