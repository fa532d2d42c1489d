#include "orbistruct/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "orbistruct/cycle_notation.hpp"
#include "orbistruct/errors.hpp"
#include "orbistruct/isomorphism.hpp"

namespace orbistruct::commands {

namespace cat = orbistruct::catalog;

OrderCaps caps_from_environment() {
  OrderCaps caps;
  const char* raw = std::getenv("ORBISTRUCT_ORDER_CAP");
  if (!raw)
    return caps;
  std::string text(raw);
  std::size_t value = 0;
  try {
    std::size_t consumed = 0;
    value = std::stoull(text, &consumed);
    if (consumed != text.size() || value == 0)
      throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw validation_error("ORBISTRUCT_ORDER_CAP must be a positive integer, got '" +
                           text + "'");
  }
  caps.closure = value;
  caps.subgroups = value;
  caps.isomorphism = value;
  caps.chains = value;
  return caps;
}

PermGroup resolve_group_spec(const std::string& spec, const cat::Catalog& groups,
                             std::optional<unsigned> degree, std::size_t closure_cap) {
  if (const cat::Entry* entry = groups.find(spec)) {
    PermGroup g = cat::build_group(*entry, closure_cap);
    if (degree && *degree > g.degree())
      g = g.extended(*degree);
    else if (degree && *degree < g.degree())
      throw validation_error("group '" + spec + "' has degree " +
                             std::to_string(g.degree()) + ", larger than the requested " +
                             std::to_string(*degree));
    return g;
  }
  if (spec.find('(') == std::string::npos)
    throw validation_error("unknown catalog group '" + spec +
                           "' (use `catalog list`, or give generators in cycle notation)");
  std::vector<Permutation> gens = notation::parse_generator_list(spec, degree);
  unsigned n = degree.value_or(1);
  for (const auto& g : gens)
    n = std::max(n, g.degree());
  for (auto& g : gens)
    g = g.extended(n);
  return PermGroup::closure(n, std::move(gens), closure_cap);
}

namespace {

// Pad a family of groups to their common degree.
unsigned unify_degrees(std::vector<PermGroup*> groups, std::optional<unsigned> degree) {
  unsigned n = degree.value_or(1);
  for (const PermGroup* g : groups)
    n = std::max(n, g->degree());
  for (PermGroup* g : groups)
    *g = g->extended(n);
  return n;
}

// Name a generator (or element) of h that fails to lie in g.
std::string offending_generator(const PermGroup& h, const PermGroup& g) {
  const std::vector<Permutation>& candidates =
      h.generators().empty() ? h.elements() : h.generators();
  for (const auto& x : candidates)
    if (!g.contains(x))
      return notation::render_cycles(x);
  return "?";
}

const cat::Catalog& catalog_of(const cat::Catalog* groups) {
  return groups ? *groups : cat::builtin_catalog();
}

std::string quote_spec(const std::string& spec) {
  if (spec.find(' ') == std::string::npos && spec.find('(') == std::string::npos)
    return spec;
  return "\"" + spec + "\"";
}

} // namespace

doc::ReportDocument run_analyze(const AnalyzeRequest& request) {
  const cat::Catalog& groups = catalog_of(request.groups);
  PermGroup gamma = resolve_group_spec(request.gamma_spec, groups, request.degree,
                                       request.caps.closure);
  PermGroup b = resolve_group_spec(request.b_spec, groups, request.degree,
                                   request.caps.closure);
  PermGroup delta = resolve_group_spec(request.delta_spec, groups, request.degree,
                                       request.caps.closure);
  unify_degrees({&gamma, &b, &delta}, request.degree);

  if (!b.is_subgroup_of(gamma))
    throw validation_error("b is not contained in gamma: generator " +
                           offending_generator(b, gamma) + " is not in gamma");
  if (!delta.is_subgroup_of(b))
    throw validation_error("delta is not contained in b: generator " +
                           offending_generator(delta, b) + " is not in b");

  substructure::SubgroupChain chain = substructure::make_chain(gamma, b, delta);
  substructure::AnalyzeChainOptions options;
  options.require_centerless = false; // flagged as a warning instead
  options.subgroup_cap = request.caps.subgroups;
  options.iso_cap = request.caps.isomorphism;
  substructure::ChainAnalysis analysis = substructure::analyze_chain(chain, options);

  doc::AnalysisDoc analysis_doc = doc::make_analysis_doc(analysis);

  if (request.lambda_spec) {
    PermGroup lambda = resolve_group_spec(*request.lambda_spec, groups,
                                          gamma.degree(), request.caps.closure);
    if (!lambda.is_subgroup_of(gamma))
      throw validation_error("lambda is not contained in gamma: generator " +
                             offending_generator(lambda, gamma) + " is not in gamma");
    substructure::SuborbifoldModel model =
        substructure::make_suborbifold(gamma, delta, lambda);
    substructure::ExactSequence seq =
        substructure::make_sequence(model.lambda, model.omega);
    std::string label = named_iso_class(seq.isotropy.regular_rep());
    substructure::SaturationResult sat =
        substructure::is_saturated(gamma, delta, lambda);
    bool full = substructure::is_full(gamma, lambda);
    substructure::LevelInfo level{std::move(seq), std::move(label), std::move(sat), full};
    analysis_doc.custom_lambda = doc::make_level_doc(level);
  }

  std::ostringstream command;
  command << "analyze --gamma " << quote_spec(request.gamma_spec) << " --b "
          << quote_spec(request.b_spec) << " --delta " << quote_spec(request.delta_spec);
  if (request.lambda_spec)
    command << " --lambda " << quote_spec(*request.lambda_spec);
  if (request.degree)
    command << " --degree " << *request.degree;

  doc::ReportDocument document;
  document.command = command.str();
  document.kind = "analysis";
  document.analysis = std::move(analysis_doc);
  return document;
}

doc::ReportDocument run_sweep(const SweepRequest& request) {
  const cat::Catalog& groups = catalog_of(request.groups);
  PermGroup gamma = resolve_group_spec(request.gamma_spec, groups, request.degree,
                                       request.caps.closure);

  cat::SweepOptions options;
  options.chain_cap = request.caps.chains;
  options.subgroup_cap = request.caps.subgroups;
  options.iso_cap = request.caps.isomorphism;
  options.jobs = request.jobs;
  cat::SweepResult result = cat::sweep(gamma, options);

  doc::SweepDoc sweep_doc = doc::make_sweep_doc(result);
  if (request.only_incompatible || request.only_unsaturated) {
    std::vector<doc::SweepEntryDoc> kept;
    for (auto& entry : sweep_doc.entries) {
      if (request.only_incompatible && entry.analysis.canonical_compatible)
        continue;
      if (request.only_unsaturated && entry.analysis.p_in_o.saturation.saturated)
        continue;
      kept.push_back(std::move(entry));
    }
    sweep_doc.entries = std::move(kept);
  }

  std::ostringstream command;
  command << "sweep " << quote_spec(request.gamma_spec);
  if (request.only_incompatible)
    command << " --only-incompatible";
  if (request.only_unsaturated)
    command << " --only-unsaturated";
  if (request.degree)
    command << " --degree " << *request.degree;

  doc::ReportDocument document;
  document.command = command.str();
  document.kind = "sweep";
  document.sweep = std::move(sweep_doc);
  return document;
}

namespace {

doc::CatalogEntryDoc entry_doc(const cat::Entry& entry) {
  doc::CatalogEntryDoc e;
  e.name = entry.name;
  e.degree = entry.degree;
  e.order = entry.expected_order;
  e.generators = entry.generator_text;
  e.label = named_iso_class(cat::build_group(entry));
  return e;
}

} // namespace

doc::ReportDocument run_catalog_list(const cat::Catalog* groups) {
  doc::CatalogDoc catalog_doc;
  for (const auto& entry : catalog_of(groups).entries())
    catalog_doc.entries.push_back(entry_doc(entry));
  doc::ReportDocument document;
  document.command = "catalog list";
  document.kind = "catalog";
  document.catalog = std::move(catalog_doc);
  return document;
}

doc::ReportDocument run_catalog_show(const std::string& name, const cat::Catalog* groups) {
  const cat::Entry* entry = catalog_of(groups).find(name);
  if (!entry)
    throw validation_error("unknown catalog group '" + name + "'");
  doc::CatalogDoc catalog_doc;
  catalog_doc.entries.push_back(entry_doc(*entry));
  doc::ReportDocument document;
  document.command = "catalog show " + name;
  document.kind = "catalog";
  document.catalog = std::move(catalog_doc);
  return document;
}

} // namespace orbistruct::commands
