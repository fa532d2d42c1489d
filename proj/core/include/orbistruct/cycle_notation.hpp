#ifndef ORBISTRUCT_CYCLE_NOTATION_HPP
#define ORBISTRUCT_CYCLE_NOTATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "orbistruct/permutation.hpp"

namespace orbistruct::notation {

/// Parse standard cycle notation with 1-based points.
///
/// Grammar: expr := cycle* | "()" ; cycle := "(" int (sep int)+ ")" with
/// separators spaces or commas. Cycles must be disjoint (a repeated point
/// anywhere is a parse_error), so the expression is order-independent.
/// The degree defaults to the largest point mentioned (at least 1); an
/// explicit degree must cover every point.
Permutation parse_permutation(const std::string& text,
                              std::optional<unsigned> degree = std::nullopt);

/// Parse a '*'-separated product of cycle expressions, the rightmost factor
/// applied first. This is the escape hatch for non-disjoint products, which
/// plain cycle syntax deliberately rejects.
Permutation parse_product(const std::string& text,
                          std::optional<unsigned> degree = std::nullopt);

/// Parse a ';'-separated list of products. All results are extended to a
/// common degree (the maximum seen, or the explicit one).
std::vector<Permutation> parse_generator_list(const std::string& text,
                                              std::optional<unsigned> degree = std::nullopt);

/// Canonical cycle notation, 1-based: nontrivial cycles sorted by smallest
/// moved point, each starting at its smallest point; "()" for the identity.
std::string render_cycles(const Permutation& p);

} // namespace orbistruct::notation

#endif // ORBISTRUCT_CYCLE_NOTATION_HPP
