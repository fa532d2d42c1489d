#include "orbistruct/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "orbistruct/cycle_notation.hpp"
#include "orbistruct/errors.hpp"

namespace orbistruct::catalog {

const Entry* Catalog::find(const std::string& name) const {
  for (const auto& entry : entries_)
    if (entry.name == name)
      return &entry;
  return nullptr;
}

Catalog parse_catalog(const std::string& manifest_text) {
  std::vector<Entry> entries;
  std::istringstream in(manifest_text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string trimmed = line;
    auto first = trimmed.find_first_not_of(" \t\r");
    if (first == std::string::npos || trimmed[first] == '#')
      continue;

    std::istringstream fields(line);
    Entry entry;
    if (!(fields >> entry.name >> entry.degree))
      throw validation_error("catalog line " + std::to_string(line_no) +
                             ": expected `name degree generators [order]`");
    std::string gens;
    std::getline(fields, gens);
    auto begin = gens.find_first_not_of(" \t\r");
    auto end = gens.find_last_not_of(" \t\r");
    if (begin == std::string::npos)
      throw validation_error("catalog line " + std::to_string(line_no) +
                             ": expected `name degree generators [order]`");
    gens = gens.substr(begin, end - begin + 1);

    // Cycle notation contains spaces, so the optional trailing order is the
    // last whitespace-separated token when it is all digits.
    std::size_t last_space = gens.find_last_of(" \t");
    if (last_space != std::string::npos) {
      std::string tail = gens.substr(last_space + 1);
      if (!tail.empty() &&
          tail.find_first_not_of("0123456789") == std::string::npos) {
        entry.expected_order = std::stoull(tail);
        gens = gens.substr(0, gens.find_last_not_of(" \t", last_space) + 1);
      }
    }

    std::size_t start = 0;
    while (true) {
      std::size_t semi = gens.find(';', start);
      entry.generator_text.push_back(gens.substr(start, semi - start));
      if (semi == std::string::npos)
        break;
      start = semi + 1;
    }

    // Validate: the generators must parse at the declared degree and close
    // to exactly the declared order (when one is given).
    PermGroup group = [&] {
      try {
        return build_group(entry);
      } catch (const validation_error& e) {
        throw validation_error("catalog entry '" + entry.name + "' (line " +
                               std::to_string(line_no) + "): " + e.what());
      }
    }();
    if (entry.expected_order == 0)
      entry.expected_order = group.order();
    else if (group.order() != entry.expected_order)
      throw validation_error("catalog entry '" + entry.name + "' (line " +
                             std::to_string(line_no) + "): generators close to order " +
                             std::to_string(group.order()) + ", expected " +
                             std::to_string(entry.expected_order));
    for (const auto& existing : entries)
      if (existing.name == entry.name)
        throw validation_error("catalog entry '" + entry.name + "' (line " +
                               std::to_string(line_no) + "): duplicate name");
    entries.push_back(std::move(entry));
  }
  return Catalog(std::move(entries));
}

Catalog load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw validation_error("cannot open catalog file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_catalog(buffer.str());
}

const Catalog& builtin_catalog() {
  static const Catalog instance = parse_catalog(builtin_manifest_text());
  return instance;
}

PermGroup build_group(const Entry& entry, std::size_t order_cap) {
  std::vector<Permutation> gens;
  for (const auto& text : entry.generator_text)
    gens.push_back(notation::parse_product(text, entry.degree));
  for (auto& g : gens)
    g = g.extended(entry.degree);
  return PermGroup::closure(entry.degree, std::move(gens), order_cap);
}

namespace {

// Deterministic chain order: by (|b|, |delta|, b elements, delta elements).
bool chain_key_less(const std::pair<PermGroup, PermGroup>& a,
                    const std::pair<PermGroup, PermGroup>& b) {
  if (a.first.order() != b.first.order())
    return a.first.order() < b.first.order();
  if (a.second.order() != b.second.order())
    return a.second.order() < b.second.order();
  if (a.first.elements() != b.first.elements())
    return a.first.elements() < b.first.elements();
  return a.second.elements() < b.second.elements();
}

} // namespace

std::vector<ChainClass> enumerate_chains(const PermGroup& g, std::size_t order_cap) {
  if (g.order() > order_cap)
    throw resource_error("enumerate_chains: group order " + std::to_string(g.order()) +
                         " exceeds cap (" + std::to_string(order_cap) + ")");

  std::vector<PermGroup> subgroups = all_subgroups(g, order_cap);

  // All (b, delta) pairs with {e} < delta < b < g, keyed for dedup.
  using Pair = std::pair<PermGroup, PermGroup>;
  std::map<std::vector<std::vector<Permutation>>, Pair> pairs;
  auto key_of = [](const Pair& p) {
    return std::vector<std::vector<Permutation>>{p.first.elements(),
                                                 p.second.elements()};
  };
  for (const auto& b : subgroups) {
    if (b.order() == 1 || b.order() == g.order())
      continue;
    for (const auto& delta : subgroups) {
      if (delta.order() == 1 || delta.order() >= b.order())
        continue;
      if (!delta.is_subgroup_of(b))
        continue;
      Pair p{b, delta};
      pairs.emplace(key_of(p), std::move(p));
    }
  }

  // Group into orbits under simultaneous conjugation.
  std::vector<ChainClass> classes;
  std::map<std::vector<std::vector<Permutation>>, bool> consumed;
  for (const auto& [key, pair] : pairs) {
    if (consumed[key])
      continue;
    Pair representative = pair;
    std::size_t orbit_size = 0;
    for (const auto& x : g.elements()) {
      Pair conj{conjugated_subgroup(pair.first, x), conjugated_subgroup(pair.second, x)};
      auto conj_key = key_of(conj);
      if (!consumed[conj_key]) {
        consumed[conj_key] = true;
        ++orbit_size;
        if (chain_key_less(conj, representative))
          representative = std::move(conj);
      }
    }
    classes.push_back(ChainClass{
        substructure::make_chain(g, representative.first, representative.second),
        orbit_size});
  }

  std::sort(classes.begin(), classes.end(), [](const ChainClass& a, const ChainClass& b) {
    return chain_key_less({a.chain.b, a.chain.delta}, {b.chain.b, b.chain.delta});
  });
  return classes;
}

SweepResult sweep(const PermGroup& g, const SweepOptions& options) {
  std::vector<ChainClass> classes = enumerate_chains(g, options.chain_cap);

  substructure::AnalyzeChainOptions analyze_options;
  analyze_options.require_centerless = false;
  analyze_options.subgroup_cap = options.subgroup_cap;
  analyze_options.iso_cap = options.iso_cap;

  std::vector<std::optional<substructure::ChainAnalysis>> analyses(classes.size());
  std::vector<std::exception_ptr> failures(classes.size());

  std::size_t jobs = options.jobs ? options.jobs : std::thread::hardware_concurrency();
  jobs = std::max<std::size_t>(1, std::min(jobs, classes.size() ? classes.size() : 1));

  if (jobs <= 1) {
    for (std::size_t i = 0; i < classes.size(); ++i)
      analyses[i] = substructure::analyze_chain(classes[i].chain, analyze_options);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= classes.size())
          return;
        try {
          analyses[i] = substructure::analyze_chain(classes[i].chain, analyze_options);
        } catch (...) {
          failures[i] = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t)
      pool.emplace_back(worker);
    for (auto& thread : pool)
      thread.join();
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (failures[i])
        std::rethrow_exception(failures[i]);
  }

  SweepResult result{g, {}, classes.size()};
  if (center(g).order() != 1)
    result.warnings.push_back(
        "gamma has non-trivial center: the conjugation action on its group "
        "algebra is not effective, reports are group-theoretic only");
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& analysis = *analyses[i];
    if (!analysis.canonical_compatible)
      ++result.incompatible_count;
    if (!analysis.p_in_o.saturation.saturated)
      ++result.non_saturated_count;
    if (!analysis.p_in_o.sequence.split)
      ++result.non_split_count;
    result.entries.push_back(SweepEntry{classes[i].class_size, analysis});
  }
  return result;
}

} // namespace orbistruct::catalog
