#include "orbistruct/substructure.hpp"

#include <algorithm>
#include <string>

#include "orbistruct/cycle_notation.hpp"
#include "orbistruct/errors.hpp"
#include "orbistruct/isomorphism.hpp"

namespace orbistruct::substructure {

namespace {

constexpr std::size_t kSaturationSupportCap = 24;

// Conjugation rows: row[x][i] = index within h of x h_i x^-1, or npos when
// the conjugate leaves h.
constexpr std::size_t npos = static_cast<std::size_t>(-1);

std::vector<std::vector<std::size_t>> conjugation_rows(const PermGroup& g,
                                                       const PermGroup& h) {
  std::vector<std::vector<std::size_t>> rows(g.order(),
                                             std::vector<std::size_t>(h.order()));
  for (std::size_t x = 0; x < g.order(); ++x) {
    const Permutation& p = g.elements()[x];
    Permutation pinv = p.inverse();
    for (std::size_t i = 0; i < h.order(); ++i) {
      Permutation conj = compose(compose(p, h.elements()[i]), pinv);
      auto idx = h.index_of(conj);
      rows[x][i] = idx ? *idx : npos;
    }
  }
  return rows;
}

// Non-empty subsets of {0..k-1} ordered by (size, lexicographic on the
// ascending index sequence); the witness minimality order.
std::vector<std::vector<std::size_t>> subsets_in_minimality_order(std::size_t k) {
  std::vector<std::vector<std::size_t>> subsets;
  subsets.reserve((static_cast<std::size_t>(1) << k) - 1);
  for (std::size_t mask = 1; mask < (static_cast<std::size_t>(1) << k); ++mask) {
    std::vector<std::size_t> indices;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (static_cast<std::size_t>(1) << i))
        indices.push_back(i);
    subsets.push_back(std::move(indices));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a < b;
  });
  return subsets;
}

struct QpDirectParts {
  QuotientGroup gamma_p;
  PermGroup stab_image;
  PermGroup fixer_image;
  QuotientGroup result;
};

// Gamma_P = N_Gamma(B)/C_Gamma(B) acts on R[B] by conjugation of
// representatives (well defined: C_Gamma(B) fixes every element of B).
// Collect the cosets that keep R[Delta] invariant and the cosets fixing it
// pointwise, realize both inside the regular representation of Gamma_P and
// quotient there.
QpDirectParts compute_qp_direct(const SubgroupChain& chain) {
  PermGroup n_b = normalizer(chain.gamma, chain.b);
  PermGroup c_b = centralizer(chain.gamma, chain.b);
  QuotientGroup gamma_p = quotient(n_b, c_b);

  std::vector<std::size_t> stab_cosets;
  std::vector<std::size_t> fixer_cosets;
  for (std::size_t i = 0; i < gamma_p.order(); ++i) {
    const Permutation& rep = gamma_p.representative(i);
    Permutation repinv = rep.inverse();
    bool stabilizes = true;
    bool fixes = true;
    for (const auto& d : chain.delta.elements()) {
      Permutation conj = compose(compose(rep, d), repinv);
      if (!chain.delta.contains(conj)) {
        stabilizes = false;
        fixes = false;
        break;
      }
      if (conj != d)
        fixes = false;
    }
    if (stabilizes)
      stab_cosets.push_back(i);
    if (fixes)
      fixer_cosets.push_back(i);
  }

  auto realize = [&gamma_p](const std::vector<std::size_t>& cosets) {
    std::vector<Permutation> elements;
    elements.reserve(cosets.size());
    for (std::size_t i : cosets) {
      std::vector<unsigned> images(gamma_p.order());
      for (std::size_t j = 0; j < gamma_p.order(); ++j)
        images[j] = static_cast<unsigned>(gamma_p.multiply(i, j));
      elements.emplace_back(std::move(images));
    }
    return PermGroup::from_elements(static_cast<unsigned>(gamma_p.order()),
                                    std::move(elements));
  };

  PermGroup stab_image = realize(stab_cosets);
  PermGroup fixer_image = realize(fixer_cosets);
  QuotientGroup result = quotient(stab_image, fixer_image);
  return {gamma_p, stab_image, fixer_image, result};
}

} // namespace

SubgroupChain make_chain(PermGroup gamma, PermGroup b, PermGroup delta) {
  if (!delta.is_subgroup_of(b))
    throw validation_error("chain: delta is not a subgroup of b");
  if (!b.is_subgroup_of(gamma))
    throw validation_error("chain: b is not a subgroup of gamma");
  SubgroupChain chain{std::move(gamma), std::move(b), std::move(delta)};
  chain.delta_nontrivial = chain.delta.order() > 1;
  chain.delta_proper_in_b = chain.delta.order() < chain.b.order();
  chain.b_proper_in_gamma = chain.b.order() < chain.gamma.order();
  return chain;
}

SuborbifoldModel make_suborbifold(const PermGroup& g, const PermGroup& h,
                                  const PermGroup& lambda) {
  algebra::SubalgebraSpan span = algebra::make_span(g, h);
  if (!lambda.is_subgroup_of(g))
    throw validation_error("suborbifold: lambda is not a subgroup of the ambient group");
  for (const auto& x : lambda.elements()) {
    Permutation xinv = x.inverse();
    for (const auto& y : h.elements()) {
      if (!h.contains(compose(compose(x, y), xinv)))
        throw validation_error("suborbifold: lambda element " +
                               notation::render_cycles(x) +
                               " does not stabilize the span");
    }
  }
  PermGroup omega = intersection(lambda, centralizer(g, h));
  QuotientGroup intrinsic = quotient(lambda, omega);
  return SuborbifoldModel{g, std::move(span), lambda, std::move(omega),
                          std::move(intrinsic)};
}

PermGroup canonical_lambda(const PermGroup& g, const PermGroup& h) {
  PermGroup stab = algebra::subspace_stabilizer(g, algebra::make_span(g, h));
  if (!(stab == normalizer(g, h)))
    throw internal_error("canonical_lambda: subspace stabilizer disagrees with normalizer");
  return stab;
}

QuotientGroup intrinsic_isotropy(const PermGroup& g, const PermGroup& h,
                                 const PermGroup& lambda) {
  return make_suborbifold(g, h, lambda).intrinsic;
}

ExactSequence make_sequence(const PermGroup& lambda, const PermGroup& omega) {
  ExactSequence seq{omega, lambda, quotient(lambda, omega)};
  std::size_t complement_order = seq.isotropy.order();
  for (const auto& candidate : all_subgroups(lambda, lambda.order())) {
    if (candidate.order() != complement_order)
      continue;
    if (intersection(candidate, omega).order() == 1) {
      seq.split = true;
      seq.complement = candidate;
      break;
    }
  }
  return seq;
}

SaturationResult is_saturated(const PermGroup& g, const PermGroup& h,
                              const PermGroup& lambda, bool exhaustive) {
  if (!h.is_subgroup_of(g))
    throw validation_error("is_saturated: h is not a subgroup of g");
  if (!lambda.is_subgroup_of(g))
    throw validation_error("is_saturated: lambda is not a subgroup of g");
  for (const auto& x : lambda.elements()) {
    Permutation xinv = x.inverse();
    for (const auto& y : h.elements())
      if (!h.contains(compose(compose(x, y), xinv)))
        throw validation_error("is_saturated: lambda element " +
                               notation::render_cycles(x) +
                               " does not stabilize the span of h");
  }
  // With lambda = g every ambient translate is trivially a lambda
  // translate; this also covers the whole-space suborbifold h = g.
  if (lambda == g)
    return SaturationResult{};

  if (h.order() > kSaturationSupportCap)
    throw resource_error("is_saturated: support cap (2^" +
                         std::to_string(kSaturationSupportCap) + ") exceeded by |h| = " +
                         std::to_string(h.order()));

  auto rows = conjugation_rows(g, h);
  std::vector<std::size_t> lambda_rows;
  lambda_rows.reserve(lambda.order());
  for (const auto& x : lambda.elements())
    lambda_rows.push_back(*g.index_of(x));

  SaturationResult result;
  for (const auto& subset : subsets_in_minimality_order(h.order())) {
    for (std::size_t x = 0; x < g.order(); ++x) {
      const auto& row = rows[x];
      bool maps_into_h = true;
      for (std::size_t i : subset) {
        if (row[i] == npos) {
          maps_into_h = false;
          break;
        }
      }
      if (!maps_into_h)
        continue;
      bool matched = false;
      for (std::size_t l : lambda_rows) {
        const auto& lrow = rows[l];
        bool agrees = true;
        for (std::size_t i : subset) {
          if (lrow[i] != row[i]) {
            agrees = false;
            break;
          }
        }
        if (agrees) {
          matched = true;
          break;
        }
      }
      if (!matched) {
        ++result.violation_count;
        if (!result.witness) {
          SaturationWitness w{g.elements()[x], {}};
          for (std::size_t i : subset)
            w.support.push_back(h.elements()[i]);
          result.witness = std::move(w);
        }
        if (!exhaustive) {
          result.saturated = false;
          return result;
        }
      }
    }
  }
  result.saturated = result.violation_count == 0;
  return result;
}

bool witness_violates(const PermGroup& g, const PermGroup& h, const PermGroup& lambda,
                      const SaturationWitness& witness) {
  algebra::AlgebraVector point = algebra::generic_vector(g, witness.support);
  algebra::AlgebraVector moved = algebra::conjugation_act(witness.gamma, point);
  for (const auto& s : moved.support())
    if (!h.contains(s))
      return false; // gamma does not even return the point to the subspace
  for (const auto& l : lambda.elements())
    if (algebra::conjugation_act(l, point) == moved)
      return false;
  return true;
}

bool is_full(const PermGroup& g, const PermGroup& lambda) {
  return lambda == g;
}

QuotientGroup gamma_q_p_direct(const SubgroupChain& chain) {
  return compute_qp_direct(chain).result;
}

QuotientGroup gamma_q_p_formula(const SubgroupChain& chain) {
  PermGroup n_delta = normalizer(chain.gamma, chain.delta);
  PermGroup n_b = normalizer(chain.gamma, chain.b);
  PermGroup c_delta = centralizer(chain.gamma, chain.delta);
  std::vector<Permutation> products =
      product_set(intersection(n_delta, n_b), c_delta);
  PermGroup numerator = [&] {
    try {
      return PermGroup::from_elements(chain.gamma.degree(), std::move(products));
    } catch (const validation_error&) {
      throw internal_error(
          "gamma_q_p_formula: (N n N) . C product set failed to be a subgroup");
    }
  }();
  return quotient(numerator, c_delta);
}

ChainAnalysis analyze_chain(const SubgroupChain& chain, const AnalyzeChainOptions& options) {
  bool centerless = center(chain.gamma).order() == 1;
  if (!centerless && options.require_centerless)
    throw validation_error(
        "analyze_chain: gamma has non-trivial center, the conjugation action is "
        "not effective");

  auto level = [&](const PermGroup& h) {
    PermGroup lambda = canonical_lambda(chain.gamma, h);
    SuborbifoldModel model = make_suborbifold(chain.gamma, h, lambda);
    ExactSequence seq = make_sequence(model.lambda, model.omega);
    std::string label = named_iso_class(seq.isotropy.regular_rep());
    SaturationResult sat = is_saturated(chain.gamma, h, lambda);
    bool full = is_full(chain.gamma, lambda);
    return LevelInfo{std::move(seq), std::move(label), std::move(sat), full};
  };

  LevelInfo p_in_o = level(chain.b);
  LevelInfo q_in_o = level(chain.delta);

  QpDirectParts parts = compute_qp_direct(chain);
  ExactSequence qp_seq = make_sequence(parts.stab_image, parts.fixer_image);
  std::string qp_label = named_iso_class(qp_seq.isotropy.regular_rep());
  // Saturation of Q inside P, lifted to Gamma-elements: Gamma_P's orbits on
  // R[B] are the N_Gamma(B)-orbits, and the stabilizer of R[Delta] in
  // Gamma_P is covered by N_Gamma(B) n N_Gamma(Delta).
  const PermGroup& n_b = p_in_o.sequence.lambda;
  PermGroup qp_lambda = intersection(n_b, q_in_o.sequence.lambda);
  SaturationResult qp_sat = is_saturated(n_b, chain.delta, qp_lambda);
  bool qp_full = is_full(parts.gamma_p.regular_rep(), parts.stab_image);
  LevelInfo qp_in_p{std::move(qp_seq), std::move(qp_label), std::move(qp_sat), qp_full};

  QuotientGroup route2 = gamma_q_p_formula(chain);
  std::string route2_label = named_iso_class(route2.regular_rep());
  bool routes_agree = is_isomorphic(parts.result.regular_rep(),
                                    route2.regular_rep(), options.iso_cap);
  bool compatible = is_isomorphic(q_in_o.sequence.isotropy.regular_rep(),
                                  parts.result.regular_rep(), options.iso_cap);
  bool equal_subquotients = route2.ambient() == q_in_o.sequence.lambda &&
                            route2.kernel() == q_in_o.sequence.omega;

  return ChainAnalysis{chain,
                       centerless,
                       std::move(p_in_o),
                       std::move(q_in_o),
                       std::move(qp_in_p),
                       std::move(route2),
                       std::move(route2_label),
                       routes_agree,
                       compatible,
                       equal_subquotients};
}

} // namespace orbistruct::substructure
