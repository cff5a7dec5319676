#include "avgorder/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "avgorder/structure.hpp"

namespace avgorder {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto at = line.find(sep, start);
    out.push_back(trim(line.substr(start, at - start)));
    if (at == std::string_view::npos)
      return out;
    start = at + 1;
  }
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw CatalogError("catalog line " + std::to_string(line) + ": " + what);
}

Fixtures parse_fixtures(const std::string& text, std::size_t line) {
  Fixtures f;
  std::istringstream is(text);
  std::string item;
  while (is >> item) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      fail(line, "fixture '" + item + "' is not key=value");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    try {
      if (key == "psi")
        f.psi = BigInt(value, 10);
      else if (key == "o")
        f.average_order = Rational::parse(value);
      else if (key == "census")
        f.census = OrderCensus::parse(value);
      else if (key == "abelian" && (value == "yes" || value == "no"))
        f.abelian = value == "yes";
      else if (key == "squares")
        f.squares = std::stoull(value);
      else
        fail(line, "unknown fixture '" + item + "'");
    } catch (const CatalogError&) {
      throw;
    } catch (const std::exception& e) {
      fail(line, "bad fixture '" + item + "': " + e.what());
    }
  }
  return f;
}

}  // namespace

Catalog Catalog::parse(std::string_view text) {
  Catalog catalog;
  std::set<std::string> ids;
  std::istringstream is{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#')
      continue;
    auto fields = split(line, '|');
    if (fields.size() != 5)
      fail(lineno, "expected 5 '|'-separated fields, found " + std::to_string(fields.size()));

    CatalogEntry e;
    e.line = lineno;
    if (fields[0] == "small")
      e.kind = EntryKind::kSmall;
    else if (fields[0] == "named")
      e.kind = EntryKind::kNamed;
    else
      fail(lineno, "unknown kind '" + fields[0] + "'");

    e.id = fields[1];
    if (e.id.empty() || e.id.find_first_of(" \t") != std::string::npos)
      fail(lineno, "invalid id '" + e.id + "'");
    if (!ids.insert(e.id).second)
      fail(lineno, "duplicate id '" + e.id + "'");

    try {
      std::size_t used = 0;
      e.order = std::stoull(fields[2], &used);
      if (used != fields[2].size() || e.order == 0)
        throw std::invalid_argument("not a positive integer");
    } catch (const std::exception&) {
      fail(lineno, "invalid order '" + fields[2] + "'");
    }
    if (e.kind == EntryKind::kSmall && e.order > kSmallCatalogMaxOrder)
      fail(lineno, "small entries must have order at most " +
                       std::to_string(kSmallCatalogMaxOrder));

    try {
      e.recipe = parse_recipe(fields[3]);
    } catch (const RecipeError& err) {
      fail(lineno, std::string("recipe: ") + err.what());
    }
    if (auto d = declared_order(e.recipe); d && *d != e.order)
      fail(lineno, "recipe " + to_string(e.recipe) + " has order " + std::to_string(*d) +
                       ", entry says " + std::to_string(e.order));

    e.expected = parse_fixtures(fields[4], lineno);
    catalog.entries_.push_back(std::move(e));
  }
  return catalog;
}

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw CatalogError("cannot open catalog file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::vector<CatalogEntry> Catalog::small_entries() const {
  std::vector<CatalogEntry> out;
  std::copy_if(entries_.begin(), entries_.end(), std::back_inserter(out),
               [](const CatalogEntry& e) { return e.kind == EntryKind::kSmall; });
  return out;
}

std::vector<CatalogEntry> Catalog::all_groups_of_order(std::uint64_t n) const {
  if (n < 1 || n > kSmallCatalogMaxOrder)
    throw std::out_of_range("catalog covers orders 1.." + std::to_string(kSmallCatalogMaxOrder) +
                            ", asked for " + std::to_string(n));
  std::vector<CatalogEntry> out;
  for (const auto& e : entries_)
    if (e.kind == EntryKind::kSmall && e.order == n)
      out.push_back(e);
  return out;
}

const CatalogEntry* Catalog::find(std::string_view name) const {
  for (const auto& e : entries_)
    if (e.id == name)
      return &e;
  return nullptr;
}

const CatalogEntry& Catalog::named_group(std::string_view name) const {
  if (const auto* e = find(name))
    return *e;
  throw CatalogError("unknown group '" + std::string(name) + "'");
}

const Catalog& default_catalog() {
  static const Catalog catalog = Catalog::parse(embedded_catalog_text());
  return catalog;
}

FiniteGroup realize(const CatalogEntry& entry) {
  FiniteGroup g = realize(entry.recipe);
  if (g.order() != entry.order)
    throw CatalogError("entry " + entry.id + ": realized order " + std::to_string(g.order()) +
                       " differs from recorded order " + std::to_string(entry.order));
  return g;
}

std::vector<std::string> fixture_mismatches(const CatalogEntry& entry) {
  std::vector<std::string> out;
  const FiniteGroup g = realize(entry.recipe);
  if (g.order() != entry.order) {
    out.push_back("order: realized " + std::to_string(g.order()) + ", recorded " +
                  std::to_string(entry.order));
    return out;
  }
  const OrderCensus census = order_census(g);
  const auto& x = entry.expected;
  if (x.psi && psi(census) != *x.psi)
    out.push_back("psi: computed " + to_string(psi(census)) + ", recorded " + to_string(*x.psi));
  if (x.average_order && average_order(census) != *x.average_order)
    out.push_back("o: computed " + average_order(census).str() + ", recorded " +
                  x.average_order->str());
  if (x.census && census != *x.census)
    out.push_back("census: computed " + census.str() + ", recorded " + x.census->str());
  if (x.abelian && is_abelian(g) != *x.abelian)
    out.push_back(std::string("abelian: computed ") + (is_abelian(g) ? "yes" : "no"));
  if (x.squares && squares_count(g) != *x.squares)
    out.push_back("squares: computed " + std::to_string(squares_count(g)) + ", recorded " +
                  std::to_string(*x.squares));
  return out;
}

}  // namespace avgorder
