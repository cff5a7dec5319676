#pragma once

// Executable checks and searches over average orders: the n_{d2} bound, the
// C_p^m x G identity, the minimum-average-order table, the threshold
// implications, limit sequences, the density scan near 13/6 and the search for
// integer average orders.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "avgorder/catalog.hpp"
#include "avgorder/census.hpp"
#include "avgorder/rational.hpp"
#include "avgorder/recipe.hpp"

namespace avgorder {

class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Lower bound on the number of elements of the second-smallest order.

enum class BoundVariant {
  /// ((d3 - c)/(d3 - d2)) n - (d3 - 1)/(d3 - d2); needs r >= 3 element orders.
  kBasic,
  /// ((d3 - c)/(d3 - d2)) n - (d3 - 2)/(d3 - d2); needs r >= 4, where psi
  /// exceeds the r = 3 estimate by at least one.
  kStrengthened,
};

Rational n_d2_bound(const Rational& c, std::uint64_t d2, std::uint64_t d3, std::uint64_t n,
                    BoundVariant variant = BoundVariant::kBasic);

struct BoundCheck {
  Rational c;
  std::uint64_t d2 = 0;
  std::uint64_t d3 = 0;
  std::uint64_t n = 0;
  Rational bound;
  std::uint64_t n_d2 = 0;
  Rational avg_order;
  bool hypothesis_holds = false;  // o(G) < c
  bool conclusion_holds = false;  // n_d2 > bound

  bool vacuous() const { return !hypothesis_holds; }
  bool consistent() const { return !hypothesis_holds || conclusion_holds; }
};

/// Throws HypothesisError if the census has fewer element orders than the
/// variant requires.
BoundCheck lemma21_check(const OrderCensus& census, const Rational& c,
                         BoundVariant variant = BoundVariant::kBasic);
BoundCheck lemma21_check(const FiniteGroup& g, const Rational& c,
                         BoundVariant variant = BoundVariant::kBasic);

// ---------------------------------------------------------------------------
// o(C_p^m x G) = o(G) + (o(C_p^m) - 1)/|G| * sum_{p does not divide o(x)} o(x)

/// Closed-form side; only G is enumerated.
Rational lemma22_formula(std::uint64_t p, unsigned m, const FiniteGroup& g);
/// Census of the realized product E(p,m) x G.
Rational lemma22_direct(std::uint64_t p, unsigned m, const FiniteGroup& g);

struct Lemma22Result {
  Rational formula;
  Rational direct;
  bool agree() const { return formula == direct; }
};

Lemma22Result lemma22_check(std::uint64_t p, unsigned m, const FiniteGroup& g);

// ---------------------------------------------------------------------------
// Minimum average order per group order.

struct MinAverageOrder {
  Rational value;
  std::vector<std::string> attained_by;
};

MinAverageOrder min_average_order(std::uint64_t n, const Catalog& catalog = default_catalog());

/// The published values of min{o(G) : |G| = n} for n = 1..23.
Rational published_min_average_order(std::uint64_t n);

// ---------------------------------------------------------------------------
// Limit sequences: G_m = prod_i C_{p_i^{k_i}}^m for n = prod_i p_i^{k_i}.

struct LimitTerm {
  unsigned m = 0;
  Rational value;
  Rational gap;  // |o(G_m) - n|
};

struct LimitTrace {
  std::uint64_t n = 0;
  std::vector<LimitTerm> terms;

  bool gaps_strictly_decreasing() const;
};

/// Terms m = 1..m_max from the closed forms; no enumeration.
LimitTrace limit_sequence(std::uint64_t n, unsigned m_max);

GroupRecipe limit_group_recipe(std::uint64_t n, unsigned m);

/// o(G_m) by enumerating the realized group.
Rational limit_term_by_enumeration(std::uint64_t n, unsigned m);

// ---------------------------------------------------------------------------
// Average orders in [13/6, 9/4 - epsilon).

struct DensityHit {
  std::string label;
  std::uint64_t order = 0;
  Rational avg_order;
};

struct DensityScan {
  Rational epsilon;
  Rational lower;  // 13/6
  Rational upper;  // 9/4 - epsilon
  /// Least n with (3/4 + epsilon) n - 2 >= (3/4) n, i.e. ceil(2/epsilon).
  BigInt n0;
  std::vector<DensityHit> hits;
  std::size_t groups_scanned = 0;
  bool all_below_n0 = true;
  std::string note;
};

/// Scans the catalog plus the families C_2^m (m <= 20) and C_p (p <= 97).
/// Throws std::invalid_argument unless 0 < epsilon < 1/12.
DensityScan density_scan(const Rational& epsilon, const Catalog& catalog = default_catalog());

// ---------------------------------------------------------------------------
// Integer average orders within restricted families.

enum Family : unsigned {
  kFamilyCyclic = 1u << 0,
  kFamilyFrobenius = 1u << 1,
  kFamilyAbelian = 1u << 2,
  kAllFamilies = kFamilyCyclic | kFamilyFrobenius | kFamilyAbelian,
};

struct FrobeniusFactor {
  std::uint64_t q = 0;
  std::uint64_t r = 0;
  std::uint64_t k = 0;
  BigInt psi;  // by enumeration of SD(q, r)
};

/// C_q x| C_r for q prime <= q_max and r prime <= r_max dividing q - 1.
std::vector<FrobeniusFactor> frobenius_factors(std::uint64_t q_max = 200,
                                               std::uint64_t r_max = 5);

/// psi of the abelian p-group with cyclic factors of orders p^{exponents[i]}.
BigInt psi_abelian_p_group(std::uint64_t p, const std::vector<unsigned>& exponents);

struct IntegerHit {
  std::string family;
  GroupRecipe recipe;
  std::uint64_t order = 0;
  BigInt psi;
  BigInt avg_order;
};

struct IntegerSearchResult {
  std::uint64_t max_order = 0;
  unsigned families = 0;
  std::string scope;
  std::vector<IntegerHit> hits;  // sorted by order
};

/// Groups of order 2..max_order in the selected families with integral o(G).
IntegerSearchResult integer_search(std::uint64_t max_order, unsigned families = kAllFamilies);

// ---------------------------------------------------------------------------
// Verification suite.

struct CheckRecord {
  std::string suite;    // "lemma22", "theorem15", ...
  std::string id;       // unique within the run
  std::string claim;    // the statement being checked
  std::string subject;  // group or parameters
  bool passed = true;
  bool vacuous = false;
  std::vector<std::pair<std::string, std::string>> witness;
};

struct VerifyReport {
  std::vector<CheckRecord> records;

  std::size_t violations() const;
  void append(VerifyReport other);
};

/// Suite names accepted by verify(); "all" runs every one.
const std::vector<std::string>& verify_suites();

/// Throws std::invalid_argument for an unknown suite name.
VerifyReport verify(const std::string& suite, const Catalog& catalog = default_catalog());

VerifyReport verify_fixtures(const Catalog& catalog);
VerifyReport verify_min_table(const Catalog& catalog);
VerifyReport verify_lemma21(const Catalog& catalog);
VerifyReport verify_lemma22(const Catalog& catalog);
VerifyReport verify_theorem_1_5(const Catalog& catalog);
VerifyReport verify_ratio_criteria(const Catalog& catalog);
VerifyReport verify_n2_criteria(const Catalog& catalog);
VerifyReport verify_small_claims(const Catalog& catalog);
VerifyReport verify_limits();
VerifyReport verify_density(const Catalog& catalog);
VerifyReport verify_integer_search();

}  // namespace avgorder
