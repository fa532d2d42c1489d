#include <doctest.h>

#include <string>

#include "orbistruct/catalog.hpp"
#include "orbistruct/errors.hpp"
#include "orbistruct/report.hpp"
#include "test_helpers.hpp"

using namespace orbistruct;
using namespace orbistruct::doc;

namespace {

ReportDocument tower_document() {
  substructure::SubgroupChain chain = substructure::make_chain(
      testutil::a5(), testutil::a4_in_5(), testutil::a3_in_5());
  ReportDocument document;
  document.command = "analyze --gamma A5 --b A4 --delta A3";
  document.kind = "analysis";
  document.analysis = make_analysis_doc(substructure::analyze_chain(chain));
  return document;
}

} // namespace

TEST_CASE("analysis documents round-trip through JSON") {
  ReportDocument document = tower_document();
  std::string json = to_json_string(document);
  ReportDocument parsed = from_json_string(json);
  CHECK(parsed == document);
  CHECK(to_json_string(parsed) == json);
}

TEST_CASE("sweep documents round-trip through JSON") {
  ReportDocument document;
  document.command = "sweep S4";
  document.kind = "sweep";
  document.sweep = make_sweep_doc(catalog::sweep(testutil::s4()));
  ReportDocument parsed = from_json_string(to_json_string(document));
  CHECK(parsed == document);
}

TEST_CASE("the schema version is mandatory and checked") {
  CHECK_THROWS_AS(from_json_string("{\"command\":\"x\",\"kind\":\"analysis\"}"),
                  validation_error);
  CHECK_THROWS_AS(
      from_json_string("{\"schema_version\":999,\"command\":\"x\",\"kind\":\"analysis\"}"),
      validation_error);
  CHECK_THROWS_AS(from_json_string("not json"), validation_error);
}

TEST_CASE("witnesses are rendered in cycle notation") {
  ReportDocument document = tower_document();
  const auto& saturation = document.analysis->p_in_o.saturation;
  REQUIRE_FALSE(saturation.saturated);
  REQUIRE(saturation.witness.has_value());
  CHECK(saturation.witness->gamma.front() == '(');
  REQUIRE_FALSE(saturation.witness->support.empty());
  // the strings parse back to permutations
  CHECK_NOTHROW(notation::parse_permutation(saturation.witness->gamma, 5));
  for (const auto& s : saturation.witness->support)
    CHECK_NOTHROW(notation::parse_permutation(s, 5));
}

TEST_CASE("labels land in the document fields") {
  ReportDocument document = tower_document();
  const AnalysisDoc& a = *document.analysis;
  CHECK(a.chain.gamma.label == "A5");
  CHECK(a.p_in_o.isotropy.label == "A4");
  CHECK(a.q_in_o.isotropy.label == "Z2");
  CHECK(a.qp_in_p.isotropy.label == "1");
  CHECK(a.gamma_q_p_route2.label == "1");
  CHECK_FALSE(a.canonical_compatible);
  CHECK(a.warnings.empty());
}

TEST_CASE("text reports follow the narrative order") {
  ReportDocument document = tower_document();
  std::string text = to_text(document);
  std::size_t p = text.find("Gamma_P^O");
  std::size_t q = text.find("Gamma_Q^O");
  std::size_t qp = text.find("Gamma_Q^P");
  std::size_t flags = text.find("canonical_compatible");
  REQUIRE(p != std::string::npos);
  REQUIRE(q != std::string::npos);
  REQUIRE(qp != std::string::npos);
  REQUIRE(flags != std::string::npos);
  CHECK(p < q);
  CHECK(q < qp);
  CHECK(qp < flags);
  CHECK(text.find("canonical_compatible: no") != std::string::npos);
}

TEST_CASE("degenerate chains carry warnings in the document") {
  substructure::SubgroupChain chain = substructure::make_chain(
      testutil::a5(), testutil::a5(), testutil::a5());
  AnalysisDoc doc = make_analysis_doc(substructure::analyze_chain(chain));
  REQUIRE(doc.warnings.size() == 2);
  CHECK(doc.warnings[0].find("delta equals b") != std::string::npos);
  CHECK(doc.warnings[1].find("b equals gamma") != std::string::npos);
}

TEST_CASE("catalog documents round-trip") {
  ReportDocument document;
  document.command = "catalog list";
  document.kind = "catalog";
  CatalogDoc catalog_doc;
  catalog_doc.entries.push_back(CatalogEntryDoc{"A5", 5, 60, {"(1 2 3 4 5)", "(1 2 3)"}, "A5"});
  document.catalog = catalog_doc;
  CHECK(from_json_string(to_json_string(document)) == document);
}
