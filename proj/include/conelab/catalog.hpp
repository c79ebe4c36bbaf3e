#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conelab/classes.hpp"
#include "conelab/io.hpp"
#include "conelab/theorems.hpp"

namespace conelab {

// Declared intersection-multiplicity functional chi(L, -): one value per
// basis class (free-module class first), with an optional default probe in
// the kernel group.
struct ChiFunctional {
  std::string label;
  QVector values;
  std::optional<GroupElement> probe;
  std::string provenance;
};

// Declared map on rationalized class groups along a ring extension.
struct PushforwardData {
  QMatrix matrix;
  bool declared_injective_finite = false;
  std::string source;
  std::string target;
  std::string provenance;
};

struct LabeledLine {
  std::string label;
  DivisorLine line;
};

// A ring record: declared group shape, classes, Betti data, divisor lines,
// functionals.  Every datum carries a citation string; entries are
// immutable after load.
struct CatalogEntry {
  std::string name;
  std::string version;
  RingDescriptor ring;
  std::vector<ModuleClass> classes;
  std::map<std::string, BettiSequence> betti;
  std::vector<LabeledLine> lines;
  std::vector<ChiFunctional> chi;
  std::optional<PushforwardData> pushforward;
  std::string notes;
  Json document;  // the parsed source document, kept for structured echo

  const ModuleClass& class_by_label(const std::string& label) const;
  const BettiSequence& betti_by_label(const std::string& label) const;
};

// Data directory: CONELAB_DATA if set, else the compiled-in default.
std::string default_data_dir();
std::vector<std::string> list_entries(const std::string& data_dir = default_data_dir());

CatalogEntry entry_from_document(const Json& doc, const std::string& source);
CatalogEntry load_entry(const std::string& name, const std::string& data_dir = default_data_dir());
// A path (existing file, or anything with a slash or .json suffix) loads as
// a document; anything else resolves through the catalog.
CatalogEntry resolve_entry_or_file(const std::string& target,
                                   const std::string& data_dir = default_data_dir());

// The per-entry validation battery: rank-slice chain per declared
// maximal Cohen-Macaulay rank, separation, symmetry, and both line
// validators per declared line.
std::vector<TheoremReport> entry_validator_suite(const CatalogEntry& e);

}  // namespace conelab
