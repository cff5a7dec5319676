#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "avgorder/census.hpp"
#include "avgorder/rational.hpp"
#include "avgorder/recipe.hpp"

namespace avgorder {

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invariants recorded for an entry; every present field must be reproduced
/// exactly by the census pipeline.
struct Fixtures {
  std::optional<BigInt> psi;
  std::optional<Rational> average_order;
  std::optional<OrderCensus> census;
  std::optional<bool> abelian;
  std::optional<std::uint64_t> squares;
};

enum class EntryKind { kSmall, kNamed };

struct CatalogEntry {
  EntryKind kind = EntryKind::kSmall;
  std::string id;
  std::uint64_t order = 0;
  GroupRecipe recipe;
  Fixtures expected;
  std::size_t line = 0;  // source line, for diagnostics
};

/// Largest order for which the catalog lists every isomorphism class.
inline constexpr std::uint64_t kSmallCatalogMaxOrder = 23;

class Catalog {
 public:
  /// Parses the catalog text format (see data/catalog.txt). Throws CatalogError
  /// with the offending line number.
  static Catalog parse(std::string_view text);
  static Catalog load(const std::string& path);

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  /// Entries of kind "small".
  std::vector<CatalogEntry> small_entries() const;

  /// All classes of order n; throws std::out_of_range unless 1 <= n <= 23.
  std::vector<CatalogEntry> all_groups_of_order(std::uint64_t n) const;

  /// Lookup by id; throws CatalogError for unknown names.
  const CatalogEntry& named_group(std::string_view name) const;
  const CatalogEntry* find(std::string_view name) const;

 private:
  std::vector<CatalogEntry> entries_;
};

/// The catalog compiled into the library from data/catalog.txt.
std::string_view embedded_catalog_text();
const Catalog& default_catalog();

/// Realizes the entry's recipe and checks the order field.
FiniteGroup realize(const CatalogEntry& entry);

/// Human-readable descriptions of every fixture mismatch (empty when the
/// entry reproduces all recorded values).
std::vector<std::string> fixture_mismatches(const CatalogEntry& entry);

}  // namespace avgorder
