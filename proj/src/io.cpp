#include "conelab/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

namespace conelab {

namespace {

std::string element_path(const std::string& path, std::size_t index) {
  return path + "[" + std::to_string(index) + "]";
}

std::string key_path(const std::string& path, const std::string& key) {
  return path + "." + key;
}

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw input_error(path + ": " + message);
}

}  // namespace

Json parse_document_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    std::size_t limit = e.byte > 0 ? e.byte - 1 : 0;
    if (limit > text.size()) limit = text.size();
    for (std::size_t i = 0; i < limit; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw input_error(source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                      ": " + e.what());
  }
}

Json load_document_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document_text(buffer.str(), path);
}

std::string canonical_text(const Json& doc) { return doc.dump(2) + "\n"; }

void write_document_file(const Json& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot open file '" + path + "' for writing");
  out << canonical_text(doc);
  if (!out) throw input_error("failed to write file '" + path + "'");
}

const Json& require_field(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing required field '" + key + "'");
  return *it;
}

Integer integer_from_json(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected an integer written as a decimal string");
  try {
    return parse_integer(j.get<std::string>());
  } catch (const input_error& e) {
    fail(path, e.what());
  }
}

long long_from_json(const Json& j, const std::string& path) {
  Integer z = integer_from_json(j, path);
  if (!z.fits_slong_p()) fail(path, "integer out of machine range");
  return z.get_si();
}

std::size_t size_from_json(const Json& j, const std::string& path) {
  Integer z = integer_from_json(j, path);
  if (z < 0 || !z.fits_ulong_p()) fail(path, "expected a nonnegative machine-size integer");
  return static_cast<std::size_t>(z.get_ui());
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a rational written as 'p' or 'p/q'");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const input_error& e) {
    fail(path, e.what());
  }
}

std::string string_from_json(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

std::vector<Integer> integer_vector_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of integer strings");
  std::vector<Integer> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(integer_from_json(j[i], element_path(path, i)));
  return out;
}

QVector qvector_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of rational strings");
  QVector out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(rational_from_json(j[i], element_path(path, i)));
  return out;
}

Json integer_vector_to_json(const std::vector<Integer>& v) {
  Json arr = Json::array();
  for (const Integer& z : v) arr.push_back(format_integer(z));
  return arr;
}

Json qvector_to_json(const QVector& v) {
  Json arr = Json::array();
  for (const Rational& q : v) arr.push_back(format_rational(q));
  return arr;
}

IntegerMatrix integer_matrix_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of rows");
  std::vector<std::vector<Integer>> rows;
  rows.reserve(j.size());
  std::size_t cols = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    rows.push_back(integer_vector_from_json(j[i], element_path(path, i)));
    if (i == 0) {
      cols = rows[0].size();
    } else if (rows[i].size() != cols) {
      fail(element_path(path, i), "row length " + std::to_string(rows[i].size()) +
                                       " differs from first row length " + std::to_string(cols));
    }
  }
  return IntegerMatrix::from_rows(rows);
}

Json integer_matrix_to_json(const IntegerMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols; ++c) row.push_back(format_integer(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<QVector> vector_list_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of vectors");
  std::vector<QVector> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(qvector_from_json(j[i], element_path(path, i)));
  return out;
}

Json vector_list_to_json(const std::vector<QVector>& vs) {
  Json arr = Json::array();
  for (const QVector& v : vs) arr.push_back(qvector_to_json(v));
  return arr;
}

GroupElement element_from_json(const Json& j, const GroupPresentation& p,
                               const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object with free_part and torsion_part");
  std::vector<Integer> free_part;
  std::vector<Integer> torsion_part;
  if (j.contains("free_part"))
    free_part = integer_vector_from_json(j["free_part"], key_path(path, "free_part"));
  if (j.contains("torsion_part"))
    torsion_part = integer_vector_from_json(j["torsion_part"], key_path(path, "torsion_part"));
  for (const auto& item : j.items())
    if (item.key() != "free_part" && item.key() != "torsion_part")
      fail(key_path(path, item.key()), "unknown field in group element");
  try {
    return make_element(p, std::move(free_part), std::move(torsion_part));
  } catch (const input_error& e) {
    fail(path, e.what());
  }
}

Json element_to_json(const GroupElement& e) {
  Json j;
  j["free_part"] = integer_vector_to_json(e.free_part);
  j["torsion_part"] = integer_vector_to_json(e.torsion_part);
  return j;
}

Json presentation_to_json(const GroupPresentation& p) {
  Json j;
  j["free_rank"] = format_integer(Integer(static_cast<unsigned long>(p.free_rank)));
  j["torsion_orders"] = integer_vector_to_json(p.torsion_orders);
  j["description"] = describe_group(p);
  if (!p.basis_labels.empty()) {
    Json labels = Json::array();
    for (const std::string& s : p.basis_labels) labels.push_back(s);
    j["basis_labels"] = labels;
  }
  return j;
}

Json smith_to_json(const SmithDecomposition& s) {
  Json j;
  j["u"] = integer_matrix_to_json(s.u);
  j["d"] = integer_matrix_to_json(s.d);
  j["v"] = integer_matrix_to_json(s.v);
  j["diagonal"] = integer_vector_to_json(diagonal_of(s.d));
  return j;
}

RingDescriptor ring_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected a ring object");
  RingDescriptor ring;
  ring.name = string_from_json(require_field(j, "name", path), key_path(path, "name"));
  ring.zeta = size_from_json(require_field(j, "zeta", path), key_path(path, "zeta"));
  if (j.contains("torsion_orders"))
    ring.torsion_orders =
        integer_vector_from_json(j["torsion_orders"], key_path(path, "torsion_orders"));
  if (j.contains("flags")) {
    const Json& flags = j["flags"];
    if (!flags.is_array()) fail(key_path(path, "flags"), "expected an array of flag names");
    for (std::size_t i = 0; i < flags.size(); ++i) {
      const std::string fp = element_path(key_path(path, "flags"), i);
      try {
        ring.flags.insert(ring_flag_from_string(string_from_json(flags[i], fp)));
      } catch (const input_error& e) {
        fail(fp, e.what());
      }
    }
  }
  if (j.contains("provenance"))
    ring.provenance = string_from_json(j["provenance"], key_path(path, "provenance"));
  try {
    validate_presentation(ring.kernel_presentation());
  } catch (const input_error& e) {
    fail(key_path(path, "torsion_orders"), e.what());
  }
  if (j.contains("omega_kernel"))
    ring.omega_kernel_part = element_from_json(j["omega_kernel"], ring.kernel_presentation(),
                                               key_path(path, "omega_kernel"));
  for (const auto& item : j.items())
    if (item.key() != "name" && item.key() != "zeta" && item.key() != "torsion_orders" &&
        item.key() != "flags" && item.key() != "provenance" && item.key() != "omega_kernel")
      fail(key_path(path, item.key()), "unknown field in ring");
  return ring;
}

Json ring_to_json(const RingDescriptor& ring) {
  Json j;
  j["name"] = ring.name;
  j["zeta"] = format_integer(Integer(static_cast<unsigned long>(ring.zeta)));
  j["torsion_orders"] = integer_vector_to_json(ring.torsion_orders);
  Json flags = Json::array();
  for (RingFlag f : ring.flags) flags.push_back(to_string(f));
  j["flags"] = flags;
  if (ring.omega_kernel_part) j["omega_kernel"] = element_to_json(*ring.omega_kernel_part);
  j["provenance"] = ring.provenance;
  return j;
}

ModuleClass module_class_from_json(const Json& j, const GroupPresentation& kernel,
                                   const std::string& path) {
  if (!j.is_object()) fail(path, "expected a class object");
  std::string label =
      string_from_json(require_field(j, "label", path), key_path(path, "label"));
  Integer rank = integer_from_json(require_field(j, "rank", path), key_path(path, "rank"));
  GroupElement kp =
      element_from_json(require_field(j, "kernel", path), kernel, key_path(path, "kernel"));
  std::optional<bool> mcm;
  if (j.contains("mcm")) {
    if (!j["mcm"].is_boolean()) fail(key_path(path, "mcm"), "expected a boolean");
    mcm = j["mcm"].get<bool>();
  }
  std::string provenance;
  if (j.contains("provenance"))
    provenance = string_from_json(j["provenance"], key_path(path, "provenance"));
  for (const auto& item : j.items())
    if (item.key() != "label" && item.key() != "rank" && item.key() != "kernel" &&
        item.key() != "mcm" && item.key() != "provenance")
      fail(key_path(path, item.key()), "unknown field in class");
  try {
    return make_module_class(std::move(label), std::move(rank), std::move(kp), mcm,
                             std::move(provenance));
  } catch (const input_error& e) {
    fail(path, e.what());
  }
}

Json module_class_to_json(const ModuleClass& m) {
  Json j;
  j["label"] = m.label;
  j["rank"] = format_integer(m.rank);
  j["kernel"] = element_to_json(m.kernel_part);
  if (m.mcm_flag) j["mcm"] = *m.mcm_flag;
  j["provenance"] = m.provenance;
  return j;
}

BettiSequence betti_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected a Betti data object");
  BettiSequence b;
  if (j.contains("prefix"))
    b.prefix = integer_vector_from_json(j["prefix"], key_path(path, "prefix"));
  if (j.contains("closed_form")) {
    const Json& cf = j["closed_form"];
    const std::string cfp = key_path(path, "closed_form");
    if (!cf.is_object()) fail(cfp, "expected an object with kind and value");
    std::string kind =
        string_from_json(require_field(cf, "kind", cfp), key_path(cfp, "kind"));
    ClosedForm form;
    if (kind == "constant") {
      form.kind = ClosedForm::Kind::constant;
    } else if (kind == "polynomial") {
      form.kind = ClosedForm::Kind::polynomial;
    } else if (kind == "exponential") {
      form.kind = ClosedForm::Kind::exponential;
    } else {
      fail(key_path(cfp, "kind"), "unknown closed form kind '" + kind + "'");
    }
    if (cf.contains("value"))
      form.value = integer_from_json(cf["value"], key_path(cfp, "value"));
    else if (form.kind != ClosedForm::Kind::exponential)
      fail(cfp, "closed form of this kind needs a value");
    b.closed_form = form;
  }
  if (j.contains("dual_prefix"))
    b.dual_prefix = integer_vector_from_json(j["dual_prefix"], key_path(path, "dual_prefix"));
  if (j.contains("provenance"))
    b.provenance = string_from_json(j["provenance"], key_path(path, "provenance"));
  for (const auto& item : j.items())
    if (item.key() != "prefix" && item.key() != "closed_form" && item.key() != "dual_prefix" &&
        item.key() != "provenance")
      fail(key_path(path, item.key()), "unknown field in Betti data");
  return b;
}

Json betti_to_json(const BettiSequence& b) {
  Json j;
  j["prefix"] = integer_vector_to_json(b.prefix);
  if (b.closed_form) {
    Json cf;
    switch (b.closed_form->kind) {
      case ClosedForm::Kind::constant: cf["kind"] = "constant"; break;
      case ClosedForm::Kind::polynomial: cf["kind"] = "polynomial"; break;
      case ClosedForm::Kind::exponential: cf["kind"] = "exponential"; break;
    }
    if (b.closed_form->kind != ClosedForm::Kind::exponential)
      cf["value"] = format_integer(b.closed_form->value);
    j["closed_form"] = cf;
  }
  j["dual_prefix"] = integer_vector_to_json(b.dual_prefix);
  j["provenance"] = b.provenance;
  return j;
}

DivisorLine line_from_json(const Json& j, const GroupPresentation& kernel,
                           const std::string& path) {
  if (!j.is_object()) fail(path, "expected a line object");
  DivisorLine line;
  line.base =
      element_from_json(require_field(j, "base", path), kernel, key_path(path, "base"));
  line.direction = element_from_json(require_field(j, "direction", path), kernel,
                                     key_path(path, "direction"));
  const Json& declared = require_field(j, "declared_mcm", path);
  const std::string dp = key_path(path, "declared_mcm");
  if (!declared.is_array()) fail(dp, "expected an array of integer strings");
  for (std::size_t i = 0; i < declared.size(); ++i)
    line.declared_mcm.insert(long_from_json(declared[i], element_path(dp, i)));
  if (j.contains("assumptions")) {
    const Json& as = j["assumptions"];
    const std::string ap = key_path(path, "assumptions");
    if (!as.is_array()) fail(ap, "expected an array of assumption names");
    for (std::size_t i = 0; i < as.size(); ++i) {
      const std::string ip = element_path(ap, i);
      try {
        line.assumptions.insert(line_assumption_from_string(string_from_json(as[i], ip)));
      } catch (const input_error& e) {
        fail(ip, e.what());
      }
    }
  }
  if (j.contains("provenance"))
    line.provenance = string_from_json(j["provenance"], key_path(path, "provenance"));
  for (const auto& item : j.items())
    if (item.key() != "label" && item.key() != "base" && item.key() != "direction" &&
        item.key() != "declared_mcm" && item.key() != "assumptions" &&
        item.key() != "provenance")
      fail(key_path(path, item.key()), "unknown field in line");
  return line;
}

Json line_to_json(const DivisorLine& l) {
  Json j;
  j["base"] = element_to_json(l.base);
  j["direction"] = element_to_json(l.direction);
  Json declared = Json::array();
  for (long n : l.declared_mcm)
    declared.push_back(format_integer(Integer(n)));
  j["declared_mcm"] = declared;
  Json as = Json::array();
  for (LineAssumption a : l.assumptions) as.push_back(to_string(a));
  j["assumptions"] = as;
  j["provenance"] = l.provenance;
  return j;
}

Json facets_to_json(const FacetData& f) {
  Json j;
  j["normals"] = vector_list_to_json(f.normals);
  j["span_equations"] = vector_list_to_json(f.span_equations);
  return j;
}

Json generator_data_to_json(const GeneratorData& g) {
  Json j;
  j["rays"] = vector_list_to_json(g.rays);
  j["lineality"] = vector_list_to_json(g.lineality);
  return j;
}

Json level_set_to_json(const LevelSetReport& r) {
  Json j;
  j["bounded"] = r.bounded;
  j["slice_empty"] = r.slice_empty;
  j["vertices"] = vector_list_to_json(r.vertices);
  if (r.bounded) {
    j["squared_diameter"] = format_rational(r.squared_diameter);
    if (r.diameter_pair)
      j["diameter_pair"] = Json::array(
          {qvector_to_json(r.diameter_pair->first), qvector_to_json(r.diameter_pair->second)});
  }
  if (r.recession_direction)
    j["recession_direction"] = qvector_to_json(*r.recession_direction);
  return j;
}

Json report_to_json(const TheoremReport& r) {
  Json j;
  j["id"] = r.id;
  j["verdict"] = to_string(r.verdict);
  j["certificate"] = r.certificate;
  j["citation"] = r.citation;
  return j;
}

std::string render_report_text(const TheoremReport& r) {
  std::ostringstream out;
  out << "check " << r.id << ": " << to_string(r.verdict) << "\n";
  if (!r.citation.empty()) out << "citation: " << r.citation << "\n";
  out << "certificate:\n" << r.certificate.dump(2) << "\n";
  return out.str();
}

}  // namespace conelab
