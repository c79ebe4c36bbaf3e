#include <doctest.h>

#include <functional>
#include <string>

#include "conelab/io.hpp"

using namespace conelab;

namespace {

std::string thrown_text(const std::function<void()>& f) {
  try {
    f();
  } catch (const input_error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse failures report source, line and column") {
  std::string text = "{\n  \"a\": ?\n}\n";
  std::string msg = thrown_text([&] { parse_document_text(text, "doc.json"); });
  CHECK(msg.find("doc.json:2:8") != std::string::npos);

  CHECK(thrown_text([] { load_document_file("/no/such/file.json"); })
            .find("cannot open file") != std::string::npos);
}

TEST_CASE("canonical text is sorted, indented, newline-terminated, and stable") {
  Json doc;
  doc["b"] = "2";
  doc["a"] = "1";
  CHECK(canonical_text(doc) == "{\n  \"a\": \"1\",\n  \"b\": \"2\"\n}\n");
  Json reparsed = parse_document_text(canonical_text(doc), "mem");
  CHECK(reparsed == doc);
  CHECK(canonical_text(reparsed) == canonical_text(doc));
}

TEST_CASE("scalar codecs insist on decimal strings") {
  CHECK(integer_from_json(Json("42"), "$") == 42);
  CHECK(integer_from_json(Json("-7"), "$") == -7);
  CHECK(thrown_text([] { integer_from_json(Json(42), "$"); }).find("decimal string") !=
        std::string::npos);
  CHECK_THROWS_AS(integer_from_json(Json("4x"), "$"), input_error);

  CHECK(rational_from_json(Json("3/6"), "$") == Rational(1, 2));
  CHECK(rational_from_json(Json("-2"), "$") == Rational(-2));
  CHECK_THROWS_AS(rational_from_json(Json("1/0"), "$"), input_error);
  CHECK_THROWS_AS(rational_from_json(Json(2), "$"), input_error);

  CHECK(size_from_json(Json("3"), "$") == 3);
  CHECK(thrown_text([] { size_from_json(Json("-1"), "$"); }).find("nonnegative") !=
        std::string::npos);
  CHECK(thrown_text([] {
          long_from_json(Json("99999999999999999999999999"), "$");
        }).find("out of machine range") != std::string::npos);

  Json missing = Json::object();
  CHECK(thrown_text([&] { require_field(missing, "x", "$"); })
            .find("missing required field 'x'") != std::string::npos);
}

TEST_CASE("matrix decoding rejects ragged rows with a located message") {
  Json rows = Json::array({Json::array({"1", "2"}), Json::array({"3"})});
  std::string msg = thrown_text([&] { integer_matrix_from_json(rows, "$.matrix"); });
  CHECK(msg.find("$.matrix[1]") != std::string::npos);
  CHECK(msg.find("row length 1") != std::string::npos);

  IntegerMatrix m = integer_matrix_from_json(
      Json::array({Json::array({"1", "2"}), Json::array({"3", "4"})}), "$.matrix");
  CHECK(m.rows == 2);
  CHECK(integer_matrix_to_json(m) ==
        Json::array({Json::array({"1", "2"}), Json::array({"3", "4"})}));
}

TEST_CASE("group elements round-trip and reject unknown fields") {
  GroupPresentation p;
  p.free_rank = 1;
  p.torsion_orders = {Integer(4)};
  GroupElement e = make_element(p, {Integer(2)}, {Integer(7)});  // torsion reduces mod 4

  Json j = element_to_json(e);
  CHECK(j["free_part"] == Json::array({"2"}));
  CHECK(j["torsion_part"] == Json::array({"3"}));
  CHECK(element_from_json(j, p, "$") == e);

  j["weird"] = "?";
  CHECK(thrown_text([&] { element_from_json(j, p, "$"); })
            .find("unknown field in group element") != std::string::npos);
}

TEST_CASE("ring descriptors round-trip through their document form") {
  RingDescriptor ring;
  ring.name = "test ring";
  ring.zeta = 1;
  ring.torsion_orders = {Integer(2)};
  ring.flags = {RingFlag::domain, RingFlag::normal, RingFlag::gorenstein,
                RingFlag::canonical_module};
  ring.provenance = "synthetic";

  RingDescriptor back = ring_from_json(ring_to_json(ring), "$");
  CHECK(back.name == ring.name);
  CHECK(back.zeta == ring.zeta);
  CHECK(back.torsion_orders == ring.torsion_orders);
  CHECK(back.flags == ring.flags);
  CHECK(back.provenance == ring.provenance);

  Json bad = ring_to_json(ring);
  bad["flags"].push_back("shiny");
  CHECK_THROWS_AS(ring_from_json(bad, "$"), input_error);
}

TEST_CASE("classes, Betti data and lines round-trip") {
  GroupPresentation kernel;
  kernel.free_rank = 1;
  ModuleClass m = make_module_class("p", 1, make_element(kernel, {Integer(-1)}, {}), true,
                                    "synthetic class");
  ModuleClass mb = module_class_from_json(module_class_to_json(m), kernel, "$");
  CHECK(same_class(m, mb));
  CHECK(mb.mcm_flag.has_value());

  BettiSequence b;
  b.prefix = {Integer(2), Integer(3)};
  b.closed_form = ClosedForm{ClosedForm::Kind::polynomial, 1};
  b.dual_prefix = {Integer(2)};
  b.provenance = "synthetic Betti numbers";
  Json bj = betti_to_json(b);
  BettiSequence bb = betti_from_json(bj, "$");
  CHECK(bb.prefix == b.prefix);
  CHECK(bb.dual_prefix == b.dual_prefix);
  REQUIRE(bb.closed_form.has_value());
  CHECK(bb.closed_form->kind == ClosedForm::Kind::polynomial);
  CHECK(bb.closed_form->value == 1);

  Json exp;
  exp["prefix"] = Json::array({"1", "2", "4"});
  exp["closed_form"]["kind"] = "exponential";  // growth kinds carry no value
  BettiSequence be = betti_from_json(exp, "$");
  CHECK(be.closed_form->kind == ClosedForm::Kind::exponential);

  Json noval;
  noval["closed_form"]["kind"] = "constant";
  CHECK(thrown_text([&] { betti_from_json(noval, "$"); }).find("needs a value") !=
        std::string::npos);
  bj["extra"] = 1;
  CHECK(thrown_text([&] { betti_from_json(bj, "$"); }).find("unknown field in Betti data") !=
        std::string::npos);

  DivisorLine line;
  line.base = make_element(kernel, {Integer(0)}, {});
  line.direction = make_element(kernel, {Integer(-1)}, {});
  line.declared_mcm = {-1, 0, 1};
  line.assumptions = {LineAssumption::gorenstein_ideal, LineAssumption::height_one};
  line.provenance = "synthetic line";
  DivisorLine lb = line_from_json(line_to_json(line), kernel, "$");
  CHECK(lb.declared_mcm == line.declared_mcm);
  CHECK(lb.assumptions == line.assumptions);
  CHECK(lb.base == line.base);
  CHECK(lb.direction == line.direction);

  Json badline = line_to_json(line);
  badline["assumptions"].push_back("optimism");
  CHECK_THROWS_AS(line_from_json(badline, kernel, "$"), input_error);
}

TEST_CASE("smith decompositions and reports serialize with their key facts") {
  IntegerMatrix m = IntegerMatrix::from_rows({{Integer(4)}});
  Json sj = smith_to_json(smith_normal_form(m));
  CHECK(sj["diagonal"] == Json::array({"4"}));
  CHECK(sj.contains("u"));
  CHECK(sj.contains("v"));

  TheoremReport r;
  r.id = "t1";
  r.verdict = Verdict::holds;
  r.certificate = {{"k", "v"}};
  r.citation = "synthetic";
  Json rj = report_to_json(r);
  CHECK(rj["id"] == "t1");
  CHECK(rj["verdict"] == "holds");
  CHECK(rj["certificate"]["k"] == "v");
  std::string text = render_report_text(r);
  CHECK(text.find("check t1: holds") != std::string::npos);
  CHECK(text.find("citation: synthetic") != std::string::npos);
  CHECK(text.find("certificate:") != std::string::npos);
}
