#include "orbistruct/report.hpp"

#include <sstream>

#include <json.hpp>

#include "orbistruct/cycle_notation.hpp"
#include "orbistruct/errors.hpp"
#include "orbistruct/isomorphism.hpp"

namespace orbistruct::doc {

using nlohmann::json;

GroupDoc describe_group(const PermGroup& g) {
  GroupDoc doc;
  doc.label = named_iso_class(g);
  doc.order = g.order();
  doc.degree = g.degree();
  for (const auto& gen : g.small_generating_set())
    doc.generators.push_back(notation::render_cycles(gen));
  return doc;
}

QuotientDoc describe_quotient(const QuotientGroup& q) {
  QuotientDoc doc;
  doc.label = named_iso_class(q.regular_rep());
  doc.order = q.order();
  doc.ambient = describe_group(q.ambient());
  doc.kernel = describe_group(q.kernel());
  return doc;
}

SaturationDoc make_saturation_doc(const substructure::SaturationResult& result) {
  SaturationDoc doc;
  doc.saturated = result.saturated;
  if (result.witness) {
    WitnessDoc w;
    w.gamma = notation::render_cycles(result.witness->gamma);
    for (const auto& s : result.witness->support)
      w.support.push_back(notation::render_cycles(s));
    doc.witness = std::move(w);
  }
  return doc;
}

LevelDoc make_level_doc(const substructure::LevelInfo& level) {
  LevelDoc doc;
  doc.isotropy = describe_quotient(level.sequence.isotropy);
  doc.isotropy.label = level.label;
  doc.split = level.sequence.split;
  if (level.sequence.complement)
    doc.complement = describe_group(*level.sequence.complement);
  doc.saturation = make_saturation_doc(level.saturation);
  doc.full = level.full;
  return doc;
}

AnalysisDoc make_analysis_doc(const substructure::ChainAnalysis& analysis) {
  AnalysisDoc doc;
  doc.chain.gamma = describe_group(analysis.chain.gamma);
  doc.chain.b = describe_group(analysis.chain.b);
  doc.chain.delta = describe_group(analysis.chain.delta);
  doc.chain.delta_nontrivial = analysis.chain.delta_nontrivial;
  doc.chain.delta_proper_in_b = analysis.chain.delta_proper_in_b;
  doc.chain.b_proper_in_gamma = analysis.chain.b_proper_in_gamma;
  doc.chain.gamma_centerless = analysis.gamma_centerless;

  doc.p_in_o = make_level_doc(analysis.p_in_o);
  doc.q_in_o = make_level_doc(analysis.q_in_o);
  doc.qp_in_p = make_level_doc(analysis.qp_in_p);
  doc.gamma_q_p_route2 = describe_quotient(analysis.gamma_q_p_route2);
  doc.gamma_q_p_route2.label = analysis.route2_label;
  doc.routes_agree = analysis.routes_agree;
  doc.canonical_compatible = analysis.canonical_compatible;
  doc.equal_as_subquotients = analysis.equal_as_subquotients;

  if (!doc.chain.delta_nontrivial)
    doc.warnings.push_back("degenerate chain: delta is the trivial group");
  if (!doc.chain.delta_proper_in_b)
    doc.warnings.push_back("degenerate chain: delta equals b");
  if (!doc.chain.b_proper_in_gamma)
    doc.warnings.push_back("degenerate chain: b equals gamma");
  if (!doc.chain.gamma_centerless)
    doc.warnings.push_back(
        "gamma has non-trivial center: the conjugation action on its group "
        "algebra is not effective, reports are group-theoretic only");
  return doc;
}

SweepDoc make_sweep_doc(const orbistruct::catalog::SweepResult& result) {
  SweepDoc doc;
  doc.gamma = describe_group(result.gamma);
  doc.total_chains = result.total_chains;
  doc.incompatible_count = result.incompatible_count;
  doc.non_saturated_count = result.non_saturated_count;
  doc.non_split_count = result.non_split_count;
  doc.warnings = result.warnings;
  for (const auto& entry : result.entries)
    doc.entries.push_back(SweepEntryDoc{entry.class_size, make_analysis_doc(entry.analysis)});
  return doc;
}

namespace {

json group_to_json(const GroupDoc& g) {
  return json{{"label", g.label},
              {"order", g.order},
              {"degree", g.degree},
              {"generators", g.generators}};
}

GroupDoc group_from_json(const json& j) {
  GroupDoc g;
  g.label = j.at("label").get<std::string>();
  g.order = j.at("order").get<std::size_t>();
  g.degree = j.at("degree").get<unsigned>();
  g.generators = j.at("generators").get<std::vector<std::string>>();
  return g;
}

json quotient_to_json(const QuotientDoc& q) {
  return json{{"label", q.label},
              {"order", q.order},
              {"ambient", group_to_json(q.ambient)},
              {"kernel", group_to_json(q.kernel)}};
}

QuotientDoc quotient_from_json(const json& j) {
  QuotientDoc q;
  q.label = j.at("label").get<std::string>();
  q.order = j.at("order").get<std::size_t>();
  q.ambient = group_from_json(j.at("ambient"));
  q.kernel = group_from_json(j.at("kernel"));
  return q;
}

json saturation_to_json(const SaturationDoc& s) {
  json j{{"saturated", s.saturated}};
  if (s.witness)
    j["witness"] = json{{"gamma", s.witness->gamma}, {"support", s.witness->support}};
  return j;
}

SaturationDoc saturation_from_json(const json& j) {
  SaturationDoc s;
  s.saturated = j.at("saturated").get<bool>();
  if (j.contains("witness")) {
    WitnessDoc w;
    w.gamma = j.at("witness").at("gamma").get<std::string>();
    w.support = j.at("witness").at("support").get<std::vector<std::string>>();
    s.witness = std::move(w);
  }
  return s;
}

json level_to_json(const LevelDoc& level) {
  json j{{"isotropy", quotient_to_json(level.isotropy)},
         {"split", level.split},
         {"saturation", saturation_to_json(level.saturation)},
         {"full", level.full}};
  if (level.complement)
    j["complement"] = group_to_json(*level.complement);
  return j;
}

LevelDoc level_from_json(const json& j) {
  LevelDoc level;
  level.isotropy = quotient_from_json(j.at("isotropy"));
  level.split = j.at("split").get<bool>();
  if (j.contains("complement"))
    level.complement = group_from_json(j.at("complement"));
  level.saturation = saturation_from_json(j.at("saturation"));
  level.full = j.at("full").get<bool>();
  return level;
}

json analysis_to_json(const AnalysisDoc& a) {
  json chain{{"gamma", group_to_json(a.chain.gamma)},
             {"b", group_to_json(a.chain.b)},
             {"delta", group_to_json(a.chain.delta)},
             {"delta_nontrivial", a.chain.delta_nontrivial},
             {"delta_proper_in_b", a.chain.delta_proper_in_b},
             {"b_proper_in_gamma", a.chain.b_proper_in_gamma},
             {"gamma_centerless", a.chain.gamma_centerless}};
  json j{{"chain", chain},
         {"p_in_o", level_to_json(a.p_in_o)},
         {"q_in_o", level_to_json(a.q_in_o)},
         {"qp_in_p", level_to_json(a.qp_in_p)},
         {"gamma_q_p_route2", quotient_to_json(a.gamma_q_p_route2)},
         {"routes_agree", a.routes_agree},
         {"canonical_compatible", a.canonical_compatible},
         {"equal_as_subquotients", a.equal_as_subquotients},
         {"warnings", a.warnings}};
  if (a.custom_lambda)
    j["custom_lambda"] = level_to_json(*a.custom_lambda);
  return j;
}

AnalysisDoc analysis_from_json(const json& j) {
  AnalysisDoc a;
  const json& chain = j.at("chain");
  a.chain.gamma = group_from_json(chain.at("gamma"));
  a.chain.b = group_from_json(chain.at("b"));
  a.chain.delta = group_from_json(chain.at("delta"));
  a.chain.delta_nontrivial = chain.at("delta_nontrivial").get<bool>();
  a.chain.delta_proper_in_b = chain.at("delta_proper_in_b").get<bool>();
  a.chain.b_proper_in_gamma = chain.at("b_proper_in_gamma").get<bool>();
  a.chain.gamma_centerless = chain.at("gamma_centerless").get<bool>();
  a.p_in_o = level_from_json(j.at("p_in_o"));
  a.q_in_o = level_from_json(j.at("q_in_o"));
  a.qp_in_p = level_from_json(j.at("qp_in_p"));
  a.gamma_q_p_route2 = quotient_from_json(j.at("gamma_q_p_route2"));
  a.routes_agree = j.at("routes_agree").get<bool>();
  a.canonical_compatible = j.at("canonical_compatible").get<bool>();
  a.equal_as_subquotients = j.at("equal_as_subquotients").get<bool>();
  if (j.contains("custom_lambda"))
    a.custom_lambda = level_from_json(j.at("custom_lambda"));
  a.warnings = j.at("warnings").get<std::vector<std::string>>();
  return a;
}

json sweep_to_json(const SweepDoc& s) {
  json entries = json::array();
  for (const auto& entry : s.entries)
    entries.push_back(json{{"class_size", entry.class_size},
                           {"analysis", analysis_to_json(entry.analysis)}});
  return json{{"gamma", group_to_json(s.gamma)},
              {"total_chains", s.total_chains},
              {"incompatible_count", s.incompatible_count},
              {"non_saturated_count", s.non_saturated_count},
              {"non_split_count", s.non_split_count},
              {"entries", entries},
              {"warnings", s.warnings}};
}

SweepDoc sweep_from_json(const json& j) {
  SweepDoc s;
  s.gamma = group_from_json(j.at("gamma"));
  s.total_chains = j.at("total_chains").get<std::size_t>();
  s.incompatible_count = j.at("incompatible_count").get<std::size_t>();
  s.non_saturated_count = j.at("non_saturated_count").get<std::size_t>();
  s.non_split_count = j.at("non_split_count").get<std::size_t>();
  for (const auto& entry : j.at("entries")) {
    SweepEntryDoc e;
    e.class_size = entry.at("class_size").get<std::size_t>();
    e.analysis = analysis_from_json(entry.at("analysis"));
    s.entries.push_back(std::move(e));
  }
  s.warnings = j.at("warnings").get<std::vector<std::string>>();
  return s;
}

json catalog_to_json(const CatalogDoc& c) {
  json entries = json::array();
  for (const auto& entry : c.entries)
    entries.push_back(json{{"name", entry.name},
                           {"degree", entry.degree},
                           {"order", entry.order},
                           {"generators", entry.generators},
                           {"label", entry.label}});
  return json{{"entries", entries}};
}

CatalogDoc catalog_from_json(const json& j) {
  CatalogDoc c;
  for (const auto& entry : j.at("entries")) {
    CatalogEntryDoc e;
    e.name = entry.at("name").get<std::string>();
    e.degree = entry.at("degree").get<unsigned>();
    e.order = entry.at("order").get<std::size_t>();
    e.generators = entry.at("generators").get<std::vector<std::string>>();
    e.label = entry.at("label").get<std::string>();
    c.entries.push_back(std::move(e));
  }
  return c;
}

} // namespace

std::string to_json_string(const ReportDocument& document) {
  json j{{"schema_version", document.schema_version},
         {"command", document.command},
         {"kind", document.kind}};
  if (document.analysis)
    j["analysis"] = analysis_to_json(*document.analysis);
  if (document.sweep)
    j["sweep"] = sweep_to_json(*document.sweep);
  if (document.catalog)
    j["catalog"] = catalog_to_json(*document.catalog);
  return j.dump(2) + "\n";
}

ReportDocument from_json_string(const std::string& text) {
  try {
    json j = json::parse(text);
    ReportDocument document;
    document.schema_version = j.at("schema_version").get<int>();
    if (document.schema_version != kSchemaVersion)
      throw validation_error("unsupported schema_version " +
                             std::to_string(document.schema_version));
    document.command = j.at("command").get<std::string>();
    document.kind = j.at("kind").get<std::string>();
    if (j.contains("analysis"))
      document.analysis = analysis_from_json(j.at("analysis"));
    if (j.contains("sweep"))
      document.sweep = sweep_from_json(j.at("sweep"));
    if (j.contains("catalog"))
      document.catalog = catalog_from_json(j.at("catalog"));
    return document;
  } catch (const json::exception& e) {
    throw validation_error(std::string("malformed report document: ") + e.what());
  }
}

namespace {

std::string yes_no(bool value) { return value ? "yes" : "no"; }

void render_group_inline(std::ostream& out, const GroupDoc& g) {
  out << g.label << " (order " << g.order << ", degree " << g.degree << ")";
}

void render_level(std::ostream& out, const std::string& heading, const LevelDoc& level) {
  out << "  " << heading << ": " << level.isotropy.label << " (order "
      << level.isotropy.order << ")\n";
  out << "    lambda: order " << level.isotropy.ambient.order
      << ", omega: order " << level.isotropy.kernel.order << "\n";
  out << "    split: " << yes_no(level.split);
  if (level.complement) {
    out << "  (complement of order " << level.complement->order << ":";
    for (const auto& gen : level.complement->generators)
      out << ' ' << gen;
    if (level.complement->generators.empty())
      out << " ()";
    out << ")";
  }
  out << "\n";
  out << "    saturated: " << yes_no(level.saturation.saturated);
  if (level.saturation.witness) {
    out << "  witness: gamma=" << level.saturation.witness->gamma << " support={";
    for (std::size_t i = 0; i < level.saturation.witness->support.size(); ++i) {
      if (i)
        out << ", ";
      out << level.saturation.witness->support[i];
    }
    out << "}";
  }
  out << "\n";
  out << "    full: " << yes_no(level.full) << "\n";
}

void render_analysis(std::ostream& out, const AnalysisDoc& a) {
  out << "chain: gamma=";
  render_group_inline(out, a.chain.gamma);
  out << ", b=";
  render_group_inline(out, a.chain.b);
  out << ", delta=";
  render_group_inline(out, a.chain.delta);
  out << "\n";
  for (const auto& warning : a.warnings)
    out << "warning: " << warning << "\n";

  render_level(out, "Gamma_P^O (P in O, canonical)", a.p_in_o);
  render_level(out, "Gamma_Q^O (Q in O, canonical)", a.q_in_o);
  render_level(out, "Gamma_Q^P (Q in P, route 1)", a.qp_in_p);
  out << "  Gamma_Q^P (route 2 formula): " << a.gamma_q_p_route2.label << " (order "
      << a.gamma_q_p_route2.order << ")\n";
  if (a.custom_lambda)
    render_level(out, "custom-lambda Q level", *a.custom_lambda);
  out << "  routes agree: " << yes_no(a.routes_agree) << "\n";
  out << "  canonical_compatible: " << yes_no(a.canonical_compatible) << "\n";
  out << "  equal as subquotients: " << yes_no(a.equal_as_subquotients) << "\n";
}

} // namespace

std::string to_text(const ReportDocument& document) {
  std::ostringstream out;
  out << "# " << document.command << "\n";
  if (document.analysis)
    render_analysis(out, *document.analysis);
  if (document.sweep) {
    const SweepDoc& s = *document.sweep;
    out << "sweep of gamma=";
    render_group_inline(out, s.gamma);
    out << "\n";
    for (const auto& warning : s.warnings)
      out << "warning: " << warning << "\n";
    out << "chains (up to simultaneous conjugacy): " << s.total_chains
        << ", incompatible: " << s.incompatible_count
        << ", non-saturated (P in O): " << s.non_saturated_count
        << ", non-split (P in O): " << s.non_split_count << "\n";
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
      out << "--- chain " << i + 1 << " (class size " << s.entries[i].class_size
          << ") ---\n";
      render_analysis(out, s.entries[i].analysis);
    }
  }
  if (document.catalog) {
    for (const auto& entry : document.catalog->entries) {
      out << entry.name << ": degree " << entry.degree << ", order " << entry.order
          << ", label " << entry.label << ", generators:";
      for (const auto& gen : entry.generators)
        out << ' ' << gen;
      out << "\n";
    }
  }
  return out.str();
}

} // namespace orbistruct::doc
