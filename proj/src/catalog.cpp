#include "conelab/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>

namespace conelab {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw input_error(path + ": " + message);
}

void require_citation(const std::string& provenance, const std::string& path) {
  if (provenance.empty()) fail(path, "catalog data must carry a citation in 'provenance'");
}

const char* const known_sections[] = {
    "ambient_dim", "betti",  "chi",   "classes",     "generators", "generator_count",
    "lines",       "matrix", "name",  "notes",       "pushforward", "relations",
    "ring",        "version",
};

}  // namespace

const ModuleClass& CatalogEntry::class_by_label(const std::string& label) const {
  for (const ModuleClass& m : classes)
    if (m.label == label) return m;
  std::string have;
  for (const ModuleClass& m : classes) have += (have.empty() ? "" : ", ") + m.label;
  throw input_error("entry '" + name + "' has no class labelled '" + label +
                    "' (available: " + (have.empty() ? "none" : have) + ")");
}

const BettiSequence& CatalogEntry::betti_by_label(const std::string& label) const {
  auto it = betti.find(label);
  if (it == betti.end()) {
    std::string have;
    for (const auto& [k, v] : betti) have += (have.empty() ? "" : ", ") + k;
    throw input_error("entry '" + name + "' has no Betti data for '" + label +
                      "' (available: " + (have.empty() ? "none" : have) + ")");
  }
  return it->second;
}

std::string default_data_dir() {
  if (const char* env = std::getenv("CONELAB_DATA"); env != nullptr && *env != '\0')
    return env;
  return CONELAB_SOURCE_DATA_DIR;
}

std::vector<std::string> list_entries(const std::string& data_dir) {
  std::error_code ec;
  std::filesystem::directory_iterator it(data_dir, ec);
  if (ec) throw input_error("catalog directory '" + data_dir + "': " + ec.message());
  std::vector<std::string> names;
  for (const auto& entry : it)
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      names.push_back(entry.path().stem().string());
  std::sort(names.begin(), names.end());
  return names;
}

CatalogEntry entry_from_document(const Json& doc, const std::string& source) {
  if (!doc.is_object()) fail(source, "expected a document object");
  for (const auto& item : doc.items())
    if (std::find_if(std::begin(known_sections), std::end(known_sections),
                     [&](const char* s) { return item.key() == s; }) ==
        std::end(known_sections))
      fail(source + ": $." + item.key(), "unknown top-level section");

  CatalogEntry e;
  e.document = doc;
  e.name = string_from_json(require_field(doc, "name", source + ": $"), source + ": $.name");
  if (doc.contains("version"))
    e.version = string_from_json(doc["version"], source + ": $.version");
  if (doc.contains("notes")) e.notes = string_from_json(doc["notes"], source + ": $.notes");

  e.ring = ring_from_json(require_field(doc, "ring", source + ": $"), source + ": $.ring");
  require_citation(e.ring.provenance, source + ": $.ring.provenance");
  const GroupPresentation kernel = e.ring.kernel_presentation();

  if (doc.contains("classes")) {
    const Json& cs = doc["classes"];
    const std::string cp = source + ": $.classes";
    if (!cs.is_array()) fail(cp, "expected an array of classes");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const std::string ip = cp + "[" + std::to_string(i) + "]";
      ModuleClass m = module_class_from_json(cs[i], kernel, ip);
      require_citation(m.provenance, ip + ".provenance");
      for (const ModuleClass& seen : e.classes)
        if (seen.label == m.label) fail(ip, "duplicate class label '" + m.label + "'");
      e.classes.push_back(std::move(m));
    }
  }

  if (doc.contains("betti")) {
    const Json& bs = doc["betti"];
    const std::string bp = source + ": $.betti";
    if (!bs.is_object()) fail(bp, "expected an object keyed by class label");
    for (const auto& item : bs.items()) {
      const std::string ip = bp + "." + item.key();
      bool known = std::any_of(e.classes.begin(), e.classes.end(),
                               [&](const ModuleClass& m) { return m.label == item.key(); });
      if (!known) fail(ip, "Betti data for unknown class label '" + item.key() + "'");
      BettiSequence b = betti_from_json(item.value(), ip);
      require_citation(b.provenance, ip + ".provenance");
      e.betti.emplace(item.key(), std::move(b));
    }
  }

  if (doc.contains("lines")) {
    const Json& ls = doc["lines"];
    const std::string lp = source + ": $.lines";
    if (!ls.is_array()) fail(lp, "expected an array of lines");
    for (std::size_t i = 0; i < ls.size(); ++i) {
      const std::string ip = lp + "[" + std::to_string(i) + "]";
      LabeledLine ll;
      if (ls[i].is_object() && ls[i].contains("label"))
        ll.label = string_from_json(ls[i]["label"], ip + ".label");
      else
        ll.label = "line" + std::to_string(i);
      ll.line = line_from_json(ls[i], kernel, ip);
      require_citation(ll.line.provenance, ip + ".provenance");
      // A declared maximal Cohen-Macaulay class sitting at the base point
      // forces 0 into the declared index set.
      bool base_mcm = std::any_of(e.classes.begin(), e.classes.end(), [&](const ModuleClass& m) {
        return m.mcm_flag.has_value() && *m.mcm_flag && m.kernel_part == ll.line.base;
      });
      if (base_mcm && !ll.line.declared_mcm.empty() && ll.line.declared_mcm.count(0) == 0)
        fail(ip + ".declared_mcm",
             "the base point carries a declared maximal Cohen-Macaulay class, so index 0 "
             "must be declared");
      e.lines.push_back(std::move(ll));
    }
  }

  if (doc.contains("chi")) {
    const Json& xs = doc["chi"];
    const std::string xp = source + ": $.chi";
    if (!xs.is_array()) fail(xp, "expected an array of functionals");
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const std::string ip = xp + "[" + std::to_string(i) + "]";
      const Json& x = xs[i];
      if (!x.is_object()) fail(ip, "expected a functional object");
      ChiFunctional f;
      f.label = string_from_json(require_field(x, "label", ip), ip + ".label");
      f.values = qvector_from_json(require_field(x, "functional", ip), ip + ".functional");
      if (f.values.size() != e.ring.zeta + 1)
        fail(ip + ".functional", "expected " + std::to_string(e.ring.zeta + 1) +
                                     " values (free class plus kernel basis), got " +
                                     std::to_string(f.values.size()));
      if (x.contains("probe"))
        f.probe = element_from_json(x["probe"], kernel, ip + ".probe");
      if (x.contains("provenance"))
        f.provenance = string_from_json(x["provenance"], ip + ".provenance");
      require_citation(f.provenance, ip + ".provenance");
      for (const auto& item : x.items())
        if (item.key() != "label" && item.key() != "functional" && item.key() != "probe" &&
            item.key() != "provenance")
          fail(ip + "." + item.key(), "unknown field in functional");
      e.chi.push_back(std::move(f));
    }
  }

  if (doc.contains("pushforward")) {
    const Json& p = doc["pushforward"];
    const std::string pp = source + ": $.pushforward";
    if (!p.is_object()) fail(pp, "expected a pushforward object");
    PushforwardData pd;
    std::vector<QVector> rows =
        vector_list_from_json(require_field(p, "matrix", pp), pp + ".matrix");
    pd.matrix = QMatrix::from_rows(rows);
    if (p.contains("declared_injective_finite")) {
      if (!p["declared_injective_finite"].is_boolean())
        fail(pp + ".declared_injective_finite", "expected a boolean");
      pd.declared_injective_finite = p["declared_injective_finite"].get<bool>();
    }
    if (p.contains("source")) pd.source = string_from_json(p["source"], pp + ".source");
    if (p.contains("target")) pd.target = string_from_json(p["target"], pp + ".target");
    if (p.contains("provenance"))
      pd.provenance = string_from_json(p["provenance"], pp + ".provenance");
    require_citation(pd.provenance, pp + ".provenance");
    for (const auto& item : p.items())
      if (item.key() != "matrix" && item.key() != "declared_injective_finite" &&
          item.key() != "source" && item.key() != "target" && item.key() != "provenance")
        fail(pp + "." + item.key(), "unknown field in pushforward");
    try {
      validate_pushforward_matrix(pd.matrix, pd.declared_injective_finite);
    } catch (const input_error& err) {
      fail(pp + ".matrix", err.what());
    }
    e.pushforward = std::move(pd);
  }

  return e;
}

CatalogEntry load_entry(const std::string& name, const std::string& data_dir) {
  std::filesystem::path path = std::filesystem::path(data_dir) / (name + ".json");
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    std::string available;
    for (const std::string& n : list_entries(data_dir))
      available += (available.empty() ? "" : ", ") + n;
    throw input_error("unknown catalog entry '" + name +
                      "' (available: " + (available.empty() ? "none" : available) + ")");
  }
  CatalogEntry e = entry_from_document(load_document_file(path.string()), path.string());
  if (e.name != name)
    throw input_error(path.string() + ": entry name '" + e.name +
                      "' does not match its file name '" + name + "'");
  return e;
}

CatalogEntry resolve_entry_or_file(const std::string& target, const std::string& data_dir) {
  bool looks_like_path = target.find('/') != std::string::npos ||
                         (target.size() > 5 && target.substr(target.size() - 5) == ".json");
  if (looks_like_path || std::filesystem::exists(target))
    return entry_from_document(load_document_file(target), target);
  return load_entry(target, data_dir);
}

std::vector<TheoremReport> entry_validator_suite(const CatalogEntry& e) {
  std::vector<TheoremReport> out;

  std::map<Integer, std::vector<ModuleClass>> by_rank;
  for (const ModuleClass& m : e.classes)
    if (m.mcm_flag.has_value() && *m.mcm_flag && m.rank >= 1) by_rank[m.rank].push_back(m);
  for (const auto& [rank, group] : by_rank)
    out.push_back(theorem1_report(group, rank, e.ring));

  if (e.classes.size() >= 2) out.push_back(prop16_separation(e.classes));
  if (!e.classes.empty()) out.push_back(symmetry_check(e.classes, e.ring));

  for (const LabeledLine& ll : e.lines) {
    out.push_back(theorem3_walk(ll.line, e.ring));
    out.push_back(line_constraints_check(ll.line));
  }
  return out;
}

}  // namespace conelab
