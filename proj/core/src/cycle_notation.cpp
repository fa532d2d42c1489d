#include "orbistruct/cycle_notation.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "orbistruct/errors.hpp"

namespace orbistruct::notation {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos;
  }
};

unsigned parse_point(Cursor& c) {
  c.skip_space();
  std::size_t start = c.pos;
  if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek())))
    throw parse_error("expected a point number", c.pos);
  unsigned long value = 0;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
    value = value * 10 + static_cast<unsigned long>(c.peek() - '0');
    if (value > 1000000)
      throw parse_error("point number too large", start);
    ++c.pos;
  }
  if (value == 0)
    throw parse_error("points are 1-based; 0 is not a point", start);
  return static_cast<unsigned>(value);
}

std::vector<std::vector<unsigned>> parse_cycle_list(const std::string& text) {
  Cursor c{text};
  std::vector<std::vector<unsigned>> cycles;
  std::set<unsigned> seen;

  c.skip_space();
  if (c.done())
    throw parse_error("empty permutation expression", c.pos);

  while (true) {
    c.skip_space();
    if (c.done())
      break;
    if (c.peek() != '(')
      throw parse_error("expected '('", c.pos);
    std::size_t open = c.pos;
    ++c.pos;

    c.skip_space();
    if (!c.done() && c.peek() == ')') {
      // "()": the identity, only valid as the sole token.
      ++c.pos;
      c.skip_space();
      if (!cycles.empty() || !c.done())
        throw parse_error("\"()\" cannot be combined with cycles", open);
      return cycles;
    }

    std::vector<unsigned> cycle;
    while (true) {
      std::size_t point_pos = c.pos;
      c.skip_space();
      point_pos = c.pos;
      unsigned point = parse_point(c);
      if (!seen.insert(point).second)
        throw parse_error("point " + std::to_string(point) + " repeats", point_pos);
      cycle.push_back(point);
      c.skip_space();
      if (c.done())
        throw parse_error("unterminated cycle", open);
      if (c.peek() == ')') {
        ++c.pos;
        break;
      }
      if (c.peek() == ',')
        ++c.pos;
      else if (!std::isdigit(static_cast<unsigned char>(c.peek())))
        throw parse_error("expected ',', space or ')' in cycle", c.pos);
    }
    if (cycle.size() < 2)
      throw parse_error("a cycle needs at least two points", open);
    cycles.push_back(std::move(cycle));
  }

  if (cycles.empty())
    throw parse_error("empty permutation expression", 0);
  return cycles;
}

} // namespace

Permutation parse_permutation(const std::string& text, std::optional<unsigned> degree) {
  auto cycles = parse_cycle_list(text);

  unsigned max_point = 0;
  for (const auto& cycle : cycles)
    for (unsigned point : cycle)
      max_point = std::max(max_point, point);

  unsigned n = degree.value_or(std::max(max_point, 1u));
  if (max_point > n)
    throw validation_error("point " + std::to_string(max_point) +
                           " exceeds degree " + std::to_string(n));

  std::vector<unsigned> images(n);
  for (unsigned i = 0; i < n; ++i)
    images[i] = i;
  for (const auto& cycle : cycles)
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i] - 1] = cycle[(i + 1) % cycle.size()] - 1;
  return Permutation(std::move(images));
}

Permutation parse_product(const std::string& text, std::optional<unsigned> degree) {
  std::vector<std::string> factors;
  std::size_t start = 0;
  while (true) {
    std::size_t star = text.find('*', start);
    factors.push_back(text.substr(start, star - start));
    if (star == std::string::npos)
      break;
    start = star + 1;
  }

  std::vector<Permutation> parsed;
  unsigned max_degree = degree.value_or(1);
  for (const auto& factor : factors) {
    Permutation p = parse_permutation(factor, std::nullopt);
    max_degree = std::max(max_degree, p.degree());
    parsed.push_back(std::move(p));
  }
  if (degree && max_degree > *degree)
    throw validation_error("point " + std::to_string(max_degree) +
                           " exceeds degree " + std::to_string(*degree));

  Permutation result(max_degree);
  for (const auto& factor : parsed)
    result = compose(result, factor.extended(max_degree));
  return result;
}

std::vector<Permutation> parse_generator_list(const std::string& text,
                                              std::optional<unsigned> degree) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t semi = text.find(';', start);
    parts.push_back(text.substr(start, semi - start));
    if (semi == std::string::npos)
      break;
    start = semi + 1;
  }

  std::vector<Permutation> gens;
  unsigned max_degree = degree.value_or(1);
  for (const auto& part : parts) {
    Permutation p = parse_product(part, degree);
    max_degree = std::max(max_degree, p.degree());
    gens.push_back(std::move(p));
  }
  for (auto& g : gens)
    g = g.extended(max_degree);
  return gens;
}

std::string render_cycles(const Permutation& p) {
  auto cycles = p.cycles();
  if (cycles.empty())
    return "()";
  std::ostringstream out;
  for (const auto& cycle : cycles) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i)
        out << ' ';
      out << cycle[i] + 1;
    }
    out << ')';
  }
  return out.str();
}

} // namespace orbistruct::notation
