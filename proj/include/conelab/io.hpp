#pragma once

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

#include "conelab/classes.hpp"
#include "conelab/cone.hpp"
#include "conelab/lattice.hpp"
#include "conelab/rational.hpp"
#include "conelab/theorems.hpp"

namespace conelab {

// One document format serves every subcommand: a JSON object whose known
// top-level sections are
//   ambient_dim, betti, chi, classes, generators, generator_count, lines,
//   matrix, name, notes, pushforward, relations, ring, version
// and each tool reads exactly the sections it needs.  Integers are decimal
// strings, rationals "p/q" strings, vectors arrays of such strings,
// booleans native JSON booleans.

// Parse failures carry source:line:column; semantic failures carry the
// JSON path of the offending value.
Json parse_document_text(const std::string& text, const std::string& source);
Json load_document_file(const std::string& path);

// Canonical serialization: two-space indent, object keys sorted, trailing
// newline.  Reload of canonical text reproduces the value exactly.
std::string canonical_text(const Json& doc);
void write_document_file(const Json& doc, const std::string& path);

// ---- scalar and vector codecs ----
const Json& require_field(const Json& obj, const std::string& key, const std::string& path);
Integer integer_from_json(const Json& j, const std::string& path);
long long_from_json(const Json& j, const std::string& path);
std::size_t size_from_json(const Json& j, const std::string& path);
Rational rational_from_json(const Json& j, const std::string& path);
std::string string_from_json(const Json& j, const std::string& path);
std::vector<Integer> integer_vector_from_json(const Json& j, const std::string& path);
QVector qvector_from_json(const Json& j, const std::string& path);
Json integer_vector_to_json(const std::vector<Integer>& v);
Json qvector_to_json(const QVector& v);

// ---- matrices and generator lists ----
IntegerMatrix integer_matrix_from_json(const Json& j, const std::string& path);
Json integer_matrix_to_json(const IntegerMatrix& m);
std::vector<QVector> vector_list_from_json(const Json& j, const std::string& path);
Json vector_list_to_json(const std::vector<QVector>& vs);

// ---- group data ----
GroupElement element_from_json(const Json& j, const GroupPresentation& p,
                               const std::string& path);
Json element_to_json(const GroupElement& e);
Json presentation_to_json(const GroupPresentation& p);
Json smith_to_json(const SmithDecomposition& s);

// ---- ring / class / Betti / line data ----
RingDescriptor ring_from_json(const Json& j, const std::string& path);
Json ring_to_json(const RingDescriptor& ring);
ModuleClass module_class_from_json(const Json& j, const GroupPresentation& kernel,
                                   const std::string& path);
Json module_class_to_json(const ModuleClass& m);
BettiSequence betti_from_json(const Json& j, const std::string& path);
Json betti_to_json(const BettiSequence& b);
DivisorLine line_from_json(const Json& j, const GroupPresentation& kernel,
                           const std::string& path);
Json line_to_json(const DivisorLine& l);

// ---- cone artifacts ----
Json facets_to_json(const FacetData& f);
Json generator_data_to_json(const GeneratorData& g);
Json level_set_to_json(const LevelSetReport& r);

// ---- reports ----
Json report_to_json(const TheoremReport& r);
std::string render_report_text(const TheoremReport& r);

}  // namespace conelab
