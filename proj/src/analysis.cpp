#include "avgorder/analysis.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "avgorder/number_theory.hpp"
#include "avgorder/structure.hpp"

namespace avgorder {

// ---------------------------------------------------------------------------
// n_{d2} bound

Rational n_d2_bound(const Rational& c, std::uint64_t d2, std::uint64_t d3, std::uint64_t n,
                    BoundVariant variant) {
  if (d3 <= d2)
    throw std::invalid_argument("n_d2_bound: need d3 > d2");
  const Rational gap(static_cast<long>(d3 - d2));
  const long slack = variant == BoundVariant::kBasic ? 1 : 2;
  const Rational d3r(static_cast<long>(d3));
  return (d3r - c) / gap * Rational(static_cast<long>(n)) - (d3r - slack) / gap;
}

BoundCheck lemma21_check(const OrderCensus& census, const Rational& c, BoundVariant variant) {
  const auto orders = census.element_orders();
  const std::size_t needed = variant == BoundVariant::kBasic ? 3 : 4;
  if (orders.size() < needed)
    throw HypothesisError("bound needs at least " + std::to_string(needed) +
                          " distinct element orders, group has " +
                          std::to_string(orders.size()));
  BoundCheck b;
  b.c = c;
  b.d2 = orders[1];
  b.d3 = orders[2];
  b.n = census.group_order();
  b.bound = n_d2_bound(c, b.d2, b.d3, b.n, variant);
  b.n_d2 = census.count(b.d2);
  b.avg_order = average_order(census);
  b.hypothesis_holds = b.avg_order < c;
  b.conclusion_holds = Rational(static_cast<long>(b.n_d2)) > b.bound;
  return b;
}

BoundCheck lemma21_check(const FiniteGroup& g, const Rational& c, BoundVariant variant) {
  return lemma21_check(order_census(g), c, variant);
}

// ---------------------------------------------------------------------------
// C_p^m x G

Rational lemma22_formula(std::uint64_t p, unsigned m, const FiniteGroup& g) {
  const OrderCensus census = order_census(g);
  const Rational o_power = rat(psi_elem_power(p, 1, m), big_pow(p, m));
  const Rational order(static_cast<long>(census.group_order()));
  return average_order(census) + (o_power - 1) / order * Rational(odd_part_sum(g, p));
}

Rational lemma22_direct(std::uint64_t p, unsigned m, const FiniteGroup& g) {
  const FiniteGroup power = realize(GroupRecipe{recipe::ElementaryAbelian{p, m}});
  return average_order(order_census(direct_product(power, g)));
}

Lemma22Result lemma22_check(std::uint64_t p, unsigned m, const FiniteGroup& g) {
  return {lemma22_formula(p, m, g), lemma22_direct(p, m, g)};
}

// ---------------------------------------------------------------------------
// Minimum average order table

MinAverageOrder min_average_order(std::uint64_t n, const Catalog& catalog) {
  const auto entries = catalog.all_groups_of_order(n);
  if (entries.empty())
    throw CatalogError("catalog has no group of order " + std::to_string(n));
  MinAverageOrder best;
  bool first = true;
  for (const auto& e : entries) {
    const Rational o = average_order(order_census(realize(e)));
    if (first || o < best.value) {
      best.value = o;
      best.attained_by = {e.id};
      first = false;
    } else if (o == best.value) {
      best.attained_by.push_back(e.id);
    }
  }
  return best;
}

Rational published_min_average_order(std::uint64_t n) {
  static const std::array<std::pair<long, long>, 23> table{{
      {1, 1},    {3, 2},    {7, 3},     {7, 4},    {21, 5},   {13, 6},   {43, 7},   {15, 8},
      {25, 9},   {31, 10},  {111, 11},  {31, 12},  {157, 13}, {57, 14},  {147, 15}, {31, 16},
      {273, 17}, {43, 18},  {343, 19},  {71, 20},  {85, 21},  {133, 22}, {507, 23},
  }};
  if (n < 1 || n > table.size())
    throw std::out_of_range("published table covers n = 1..23");
  return rat(table[n - 1].first, table[n - 1].second);
}

// ---------------------------------------------------------------------------
// Limit sequences

bool LimitTrace::gaps_strictly_decreasing() const {
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (!(terms[i].gap < terms[i - 1].gap))
      return false;
  return true;
}

LimitTrace limit_sequence(std::uint64_t n, unsigned m_max) {
  if (n < 2)
    throw std::invalid_argument("limit_sequence: n must be at least 2");
  if (m_max < 1)
    throw std::invalid_argument("limit_sequence: m_max must be at least 1");
  const auto factors = factorize(n);
  LimitTrace trace{n, {}};
  for (unsigned m = 1; m <= m_max; ++m) {
    Rational value(1);
    for (const auto& [p, k] : factors)
      value *= rat(psi_elem_power(p, k, m), big_pow(p, static_cast<unsigned long>(k) * m));
    trace.terms.push_back({m, value, abs(value - Rational(static_cast<long>(n)))});
  }
  return trace;
}

GroupRecipe limit_group_recipe(std::uint64_t n, unsigned m) {
  if (n < 2 || m < 1)
    throw std::invalid_argument("limit_group_recipe: need n >= 2, m >= 1");
  std::optional<GroupRecipe> out;
  auto append = [&out](GroupRecipe r) {
    out = out ? product(std::move(*out), std::move(r)) : std::move(r);
  };
  for (const auto& [p, k] : factorize(n)) {
    if (k == 1) {
      append(GroupRecipe{recipe::ElementaryAbelian{p, m}});
      continue;
    }
    for (unsigned i = 0; i < m; ++i)
      append(GroupRecipe{recipe::Cyclic{ipow(p, k)}});
  }
  return *out;
}

Rational limit_term_by_enumeration(std::uint64_t n, unsigned m) {
  return average_order(order_census(realize(limit_group_recipe(n, m))));
}

// ---------------------------------------------------------------------------
// Density scan

DensityScan density_scan(const Rational& epsilon, const Catalog& catalog) {
  if (!(epsilon > 0) || !(epsilon < rat(1, 12)))
    throw std::invalid_argument("density_scan: epsilon must lie in (0, 1/12), got " +
                                epsilon.str());
  DensityScan scan;
  scan.epsilon = epsilon;
  scan.lower = rat(13, 6);
  scan.upper = rat(9, 4) - epsilon;
  scan.n0 = ceil(Rational(2) / epsilon);
  scan.note =
      "n0 is the least n with (3/4 + epsilon) n - 2 >= (3/4) n; the bound is read as "
      "(3/4 + epsilon) n - 2, not (3/4 n + epsilon) n - 2";

  auto consider = [&scan](std::string label, std::uint64_t order, const Rational& o) {
    ++scan.groups_scanned;
    if (o >= scan.lower && o < scan.upper) {
      if (!(BigInt(order) < scan.n0))
        scan.all_below_n0 = false;
      scan.hits.push_back({std::move(label), order, o});
    }
  };

  for (const auto& e : catalog.entries())
    consider(e.id, e.order, average_order(order_census(realize(e))));
  for (unsigned m = 1; m <= 20; ++m)
    consider("E(2," + std::to_string(m) + ")", ipow(2, m),
             rat(psi_elem_power(2, 1, m), big_pow(2, m)));
  for (std::uint64_t p : primes_up_to(97))
    consider("C(" + std::to_string(p) + ")", p, rat(psi_cyclic(p), BigInt(p)));
  return scan;
}

// ---------------------------------------------------------------------------
// Integer search

std::vector<FrobeniusFactor> frobenius_factors(std::uint64_t q_max, std::uint64_t r_max) {
  std::vector<FrobeniusFactor> out;
  for (std::uint64_t q : primes_up_to(q_max)) {
    for (std::uint64_t r : primes_up_to(r_max)) {
      if ((q - 1) % r != 0)
        continue;
      const std::uint64_t k = default_action(q, r);
      const FiniteGroup f = semidirect_cyclic(q, r, k);
      out.push_back({q, r, k, psi(order_census(f))});
    }
  }
  return out;
}

BigInt psi_abelian_p_group(std::uint64_t p, const std::vector<unsigned>& exponents) {
  const unsigned top = exponents.empty() ? 0 : *std::max_element(exponents.begin(), exponents.end());
  BigInt total = 1;
  BigInt prev = 1;  // number of elements of order dividing p^(j-1)
  for (unsigned j = 1; j <= top; ++j) {
    unsigned long e = 0;
    for (unsigned a : exponents)
      e += std::min(a, j);
    const BigInt cur = big_pow(p, e);
    total += big_pow(p, j) * (cur - prev);
    prev = cur;
  }
  return total;
}

namespace {

void partitions_into(unsigned remaining, unsigned max_part, std::vector<unsigned>& current,
                     std::vector<std::vector<unsigned>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_into(remaining - part, part, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<unsigned>> partitions(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> current;
  partitions_into(n, n, current, out);
  return out;
}

GroupRecipe cyclic_product(const std::vector<std::uint64_t>& orders) {
  GroupRecipe r{recipe::Cyclic{orders.front()}};
  for (std::size_t i = 1; i < orders.size(); ++i)
    r = product(std::move(r), GroupRecipe{recipe::Cyclic{orders[i]}});
  return r;
}

}  // namespace

IntegerSearchResult integer_search(std::uint64_t max_order, unsigned families) {
  if (max_order < 1)
    throw std::invalid_argument("integer_search: max_order must be positive");
  IntegerSearchResult result;
  result.max_order = max_order;
  result.families = families;

  std::vector<std::string> scope;
  std::vector<BigInt> psi_c(max_order + 1);
  for (std::uint64_t n = 1; n <= max_order; ++n)
    psi_c[n] = psi_cyclic(n);

  auto record = [&result](std::string family, GroupRecipe recipe, std::uint64_t order,
                          const BigInt& total) {
    if (total % order != 0)
      return;
    result.hits.push_back({std::move(family), std::move(recipe), order, total,
                           BigInt(total / BigInt(order))});
  };

  if (families & kFamilyCyclic) {
    scope.push_back("cyclic C_n");
    for (std::uint64_t n = 2; n <= max_order; ++n)
      record("cyclic", GroupRecipe{recipe::Cyclic{n}}, n, psi_c[n]);
  }

  if (families & kFamilyFrobenius) {
    scope.push_back(
        "C_k x (C_q x| C_r), q prime <= 200, r prime <= 5 dividing q-1, gcd(k, qr) = 1");
    for (const auto& f : frobenius_factors()) {
      const std::uint64_t fo = f.q * f.r;
      for (std::uint64_t k = 1; k * fo <= max_order; ++k) {
        if (std::gcd(k, fo) != 1)
          continue;
        GroupRecipe sd{recipe::Semidirect{f.q, f.r, std::nullopt}};
        GroupRecipe r = k == 1 ? sd : product(GroupRecipe{recipe::Cyclic{k}}, sd);
        // Coprime orders: psi is multiplicative.
        record("frobenius", std::move(r), k * fo, psi_c[k] * f.psi);
      }
    }
  }

  if (families & kFamilyAbelian) {
    scope.push_back("non-cyclic abelian groups");
    std::map<unsigned, std::vector<std::vector<unsigned>>> parts;
    for (std::uint64_t n = 2; n <= max_order; ++n) {
      const auto f = factorize(n);
      std::vector<const std::vector<std::vector<unsigned>>*> choices;
      for (const auto& [p, e] : f) {
        auto it = parts.find(e);
        if (it == parts.end())
          it = parts.emplace(e, partitions(e)).first;
        choices.push_back(&it->second);
      }
      std::vector<std::size_t> idx(f.size(), 0);
      for (;;) {
        bool cyclic = true;
        for (std::size_t i = 0; i < f.size(); ++i)
          cyclic = cyclic && (*choices[i])[idx[i]].size() == 1;
        if (!cyclic) {
          BigInt total = 1;
          std::size_t width = 0;
          for (std::size_t i = 0; i < f.size(); ++i) {
            total *= psi_abelian_p_group(f[i].prime, (*choices[i])[idx[i]]);
            width = std::max(width, (*choices[i])[idx[i]].size());
          }
          if (total % n == 0) {
            // Invariant factors, smallest first.
            std::vector<std::uint64_t> inv(width, 1);
            for (std::size_t i = 0; i < f.size(); ++i) {
              const auto& lam = (*choices[i])[idx[i]];
              for (std::size_t j = 0; j < lam.size(); ++j)
                inv[width - 1 - j] *= ipow(f[i].prime, lam[j]);
            }
            record("abelian", cyclic_product(inv), n, total);
          }
        }
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == choices[i]->size())
          idx[i++] = 0;
        if (i == idx.size())
          break;
      }
    }
  }

  std::stable_sort(result.hits.begin(), result.hits.end(),
                   [](const IntegerHit& a, const IntegerHit& b) { return a.order < b.order; });
  std::string s;
  for (const auto& part : scope)
    s += (s.empty() ? "" : "; ") + part;
  result.scope = "orders 2.." + std::to_string(max_order) + " within: " + s +
                 ". Not an exhaustive search over all groups.";
  return result;
}

// ---------------------------------------------------------------------------
// Verification suite

std::size_t VerifyReport::violations() const {
  return static_cast<std::size_t>(std::count_if(
      records.begin(), records.end(), [](const CheckRecord& r) { return !r.passed; }));
}

void VerifyReport::append(VerifyReport other) {
  records.insert(records.end(), std::make_move_iterator(other.records.begin()),
                 std::make_move_iterator(other.records.end()));
}

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

CheckRecord make_record(std::string suite, std::string subject, std::string claim, bool passed) {
  CheckRecord r;
  r.id = suite + "/" + subject + "/" + claim;
  r.suite = std::move(suite);
  r.subject = std::move(subject);
  r.claim = std::move(claim);
  r.passed = passed;
  return r;
}

struct Realized {
  std::string id;
  FiniteGroup group;
  OrderCensus census;
};

std::vector<Realized> realize_all(const Catalog& catalog, bool include_named) {
  std::vector<Realized> out;
  for (const auto& e : catalog.entries()) {
    if (e.kind != EntryKind::kSmall && !include_named)
      continue;
    FiniteGroup g = realize(e);
    OrderCensus c = order_census(g);
    out.push_back({e.id, std::move(g), std::move(c)});
  }
  return out;
}

constexpr std::array<std::uint64_t, 23> kClassCounts{1, 1, 1, 2, 1, 2,  1, 5, 2, 2, 1, 5,
                                                     1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1};

}  // namespace

VerifyReport verify_fixtures(const Catalog& catalog) {
  VerifyReport rep;
  for (const auto& e : catalog.entries()) {
    std::vector<std::string> bad;
    try {
      bad = fixture_mismatches(e);
    } catch (const std::exception& ex) {
      bad = {ex.what()};
    }
    auto r = make_record("fixtures", e.id, "recorded invariants are reproduced", bad.empty());
    r.witness.emplace_back("line", std::to_string(e.line));
    for (const auto& b : bad)
      r.witness.emplace_back("mismatch", b);
    rep.records.push_back(std::move(r));
  }

  std::size_t total = 0;
  for (std::uint64_t n = 1; n <= kSmallCatalogMaxOrder; ++n) {
    const auto entries = catalog.all_groups_of_order(n);
    total += entries.size();
    auto r = make_record("fixtures", "order " + std::to_string(n),
                         "one entry per isomorphism class",
                         entries.size() == kClassCounts[n - 1]);
    r.witness.emplace_back("entries", std::to_string(entries.size()));
    r.witness.emplace_back("classes", std::to_string(kClassCounts[n - 1]));
    rep.records.push_back(std::move(r));

    // Entries sharing a census must be told apart by a recorded invariant.
    std::vector<std::pair<const CatalogEntry*, OrderCensus>> cs;
    for (const auto& e : entries)
      cs.emplace_back(&e, order_census(realize(e)));
    for (std::size_t i = 0; i < cs.size(); ++i) {
      for (std::size_t j = i + 1; j < cs.size(); ++j) {
        if (cs[i].second != cs[j].second)
          continue;
        const auto& a = cs[i].first->expected;
        const auto& b = cs[j].first->expected;
        const bool split = (a.abelian && b.abelian && *a.abelian != *b.abelian) ||
                           (a.squares && b.squares && *a.squares != *b.squares);
        auto pr = make_record("fixtures", cs[i].first->id + "~" + cs[j].first->id,
                              "census-coincident entries carry a distinguishing invariant",
                              split);
        pr.witness.emplace_back("census", cs[i].second.str());
        rep.records.push_back(std::move(pr));
      }
    }
  }
  auto r = make_record("fixtures", "catalog", "class counts sum over orders 1..23",
                       total == std::accumulate(kClassCounts.begin(), kClassCounts.end(),
                                                std::size_t{0}));
  r.witness.emplace_back("entries", std::to_string(total));
  rep.records.push_back(std::move(r));
  return rep;
}

VerifyReport verify_min_table(const Catalog& catalog) {
  VerifyReport rep;
  for (std::uint64_t n = 1; n <= kSmallCatalogMaxOrder; ++n) {
    const auto best = min_average_order(n, catalog);
    const Rational published = published_min_average_order(n);
    auto r = make_record("table", "n=" + std::to_string(n), "min o(G) over |G| = n",
                         best.value == published);
    r.witness.emplace_back("computed", best.value.str());
    r.witness.emplace_back("published", published.str());
    std::string by;
    for (const auto& id : best.attained_by)
      by += (by.empty() ? "" : ",") + id;
    r.witness.emplace_back("attained_by", by);
    rep.records.push_back(std::move(r));
  }
  return rep;
}

VerifyReport verify_lemma21(const Catalog& catalog) {
  VerifyReport rep;
  for (const auto& g : realize_all(catalog, true)) {
    const Rational o = average_order(g.census);
    const std::vector<Rational> cs{rat(13, 6), rat(11, 4), o + rat(1, 1000)};
    for (auto variant : {BoundVariant::kBasic, BoundVariant::kStrengthened}) {
      const std::string vname = variant == BoundVariant::kBasic ? "basic" : "strengthened";
      for (const auto& c : cs) {
        const std::string claim = "o<c => n_d2>bound (" + vname + ", c=" + c.str() + ")";
        try {
          const BoundCheck b = lemma21_check(g.census, c, variant);
          auto r = make_record("lemma21", g.id, claim, b.consistent());
          r.vacuous = b.vacuous();
          r.witness = {{"o", b.avg_order.str()},
                       {"d2", std::to_string(b.d2)},
                       {"d3", std::to_string(b.d3)},
                       {"n_d2", std::to_string(b.n_d2)},
                       {"bound", b.bound.str()}};
          rep.records.push_back(std::move(r));
        } catch (const HypothesisError& e) {
          auto r = make_record("lemma21", g.id, claim, true);
          r.vacuous = true;
          r.witness.emplace_back("skipped", e.what());
          rep.records.push_back(std::move(r));
        }
      }
    }
  }
  // Specializations used for the two thresholds.
  {
    const bool ok = n_d2_bound(rat(13, 6), 2, 3, 600) == rat(5, 6) * 600 - 2;
    rep.records.push_back(make_record("lemma21", "c=13/6,d2=2,d3=3", "bound = 5/6 n - 2", ok));
  }
  {
    const bool ok =
        n_d2_bound(rat(11, 4), 2, 3, 600, BoundVariant::kStrengthened) == rat(1, 4) * 600 - 1;
    rep.records.push_back(
        make_record("lemma21", "c=11/4,d2=2,d3=3", "strengthened bound = 1/4 n - 1", ok));
  }
  return rep;
}

VerifyReport verify_lemma22(const Catalog& catalog) {
  VerifyReport rep;
  const std::vector<std::string> ids{"C2", "C3", "C6", "S3", "D8", "Q8", "A4", "A5"};
  for (const auto& id : ids) {
    const FiniteGroup g = realize(catalog.named_group(id));
    for (std::uint64_t p : {2, 3, 5}) {
      for (unsigned m = 1; m <= 3; ++m) {
        if (id == "A5" && (p != 2 || m > 2))
          continue;
        const auto res = lemma22_check(p, m, g);
        auto r = make_record("lemma22", "p=" + std::to_string(p) + ",m=" + std::to_string(m) +
                                            ",G=" + id,
                             "o(C_p^m x G) formula = enumeration", res.agree());
        r.witness = {{"formula", res.formula.str()}, {"direct", res.direct.str()}};
        rep.records.push_back(std::move(r));
      }
    }
  }
  const FiniteGroup a5 = realize(catalog.named_group("A5"));
  const BigInt odd = odd_part_sum(a5, 2);
  auto r = make_record("lemma22", "A5", "sum of odd element orders = 181", odd == 181);
  r.witness.emplace_back("computed", to_string(odd));
  rep.records.push_back(std::move(r));
  return rep;
}

VerifyReport verify_theorem_1_5(const Catalog& catalog) {
  VerifyReport rep;
  for (const auto& g : realize_all(catalog, true)) {
    const Rational o = average_order(g.census);
    const bool ea2 = is_elementary_abelian_2(g.census);
    const bool below_a = o < rat(13, 6);
    const bool below_b = o < rat(11, 4);
    const bool solvable = is_solvable(g.group);
    const bool nilpotent = is_nilpotent(g.group);
    std::vector<std::pair<std::string, std::string>> w{
        {"o", o.str()},
        {"elementary_abelian_2", yes_no(ea2)},
        {"solvable", yes_no(solvable)},
        {"nilpotent", yes_no(nilpotent)}};

    auto r1 = make_record("theorem15", g.id, "o<13/6 => elementary abelian 2-group",
                          !below_a || ea2);
    r1.vacuous = !below_a;
    r1.witness = w;
    auto r2 = make_record("theorem15", g.id, "elementary abelian 2-group => o<13/6",
                          !ea2 || below_a);
    r2.vacuous = !ea2;
    r2.witness = w;
    auto r3 = make_record("theorem15", g.id, "o<13/6 => nilpotent", !below_a || nilpotent);
    r3.vacuous = !below_a;
    r3.witness = w;
    auto r4 = make_record("theorem15", g.id, "o<11/4 => solvable", !below_b || solvable);
    r4.vacuous = !below_b;
    r4.witness = std::move(w);
    rep.records.push_back(std::move(r1));
    rep.records.push_back(std::move(r2));
    rep.records.push_back(std::move(r3));
    rep.records.push_back(std::move(r4));
  }
  return rep;
}

VerifyReport verify_ratio_criteria(const Catalog& catalog) {
  VerifyReport rep;
  for (const auto& e : catalog.entries()) {
    const AnalysisReport a = psi_ratios(realize(e));
    for (const auto& v : a.verdicts) {
      auto r = make_record("ratios", e.id, v.id, v.consistent());
      r.vacuous = !v.fires || !v.conclusion_holds.has_value();
      r.witness = {{"value", v.value.str()},
                   {"threshold", v.threshold.str()},
                   {"fires", yes_no(v.fires)},
                   {"conclusion", v.conclusion_holds ? yes_no(*v.conclusion_holds)
                                                     : std::string("no oracle")}};
      rep.records.push_back(std::move(r));
    }
  }
  return rep;
}

VerifyReport verify_n2_criteria(const Catalog& catalog) {
  VerifyReport rep;
  std::vector<std::pair<std::string, FiniteGroup>> groups;
  for (const auto& e : catalog.entries())
    groups.emplace_back(e.id, realize(e));
  groups.emplace_back("E(2,2) x A(5)", realize(parse_recipe("E(2,2) x A(5)")));
  for (const auto& [id, g] : groups) {
    const N2Verdict v = n2_criteria_check(g);
    auto r = make_record("n2", id, "n2 criteria imply their conclusions", v.consistent());
    r.vacuous = !v.hypothesis_a && !v.hypothesis_b;
    r.witness = {{"n", std::to_string(v.group_order)},
                 {"n2", std::to_string(v.n2)},
                 {"hypothesis_a", yes_no(v.hypothesis_a)},
                 {"hypothesis_b", yes_no(v.hypothesis_b)},
                 {"solvable", yes_no(v.solvable)},
                 {"c2_power_times_a5", yes_no(v.c2_power_times_a5)}};
    rep.records.push_back(std::move(r));
  }
  return rep;
}

VerifyReport verify_small_claims(const Catalog& catalog) {
  struct Item {
    std::string label;
    std::uint64_t order;
    BigInt psi;
    bool ea2;
  };
  std::vector<Item> items;
  for (const auto& g : realize_all(catalog, true))
    items.push_back({g.id, g.census.group_order(), psi(g.census),
                     is_elementary_abelian_2(g.census)});
  for (unsigned m = 1; m <= 20; ++m)
    items.push_back({"E(2," + std::to_string(m) + ")", ipow(2, m), psi_elem_power(2, 1, m), true});
  for (std::uint64_t p : primes_up_to(97))
    items.push_back({"C(" + std::to_string(p) + ")", p, psi_cyclic(p), p == 2});

  VerifyReport rep;
  for (const auto& it : items) {
    const Rational o = rat(it.psi, BigInt(it.order));
    const std::vector<std::pair<std::string, std::string>> w{{"o", o.str()},
                                                             {"psi", to_string(it.psi)}};
    auto add = [&](const std::string& claim, bool ok, bool vacuous = false) {
      auto r = make_record("small", it.label, claim, ok);
      r.vacuous = vacuous;
      r.witness = w;
      rep.records.push_back(std::move(r));
    };
    add("psi is odd", it.psi % 2 != 0);
    add("o not in [2, 13/6)", !(o >= 2 && o < rat(13, 6)));
    add("o != 3", o != 3);
    if (auto p = prime_power_base(it.order)) {
      if (*p == 2)
        add("non-elementary-abelian 2-group => o >= 19/8", it.ea2 || o >= rat(19, 8), it.ea2);
      else
        add("odd p-group => o >= (p^2-p+1)/p",
            o >= rat(BigInt(*p * *p - *p + 1), BigInt(*p)));
    }
  }
  return rep;
}

VerifyReport verify_limits() {
  VerifyReport rep;
  const Rational tol = rat(1, 1'000'000);
  for (std::uint64_t n = 2; n <= 12; ++n) {
    const LimitTrace t = limit_sequence(n, 40);
    const std::string subject = "n=" + std::to_string(n);
    auto dec = make_record("limit", subject, "|o(G_m) - n| strictly decreasing for m <= 40",
                           t.gaps_strictly_decreasing());
    dec.witness.emplace_back("gap_m40", t.terms.back().gap.decimal());
    rep.records.push_back(std::move(dec));

    auto conv = make_record("limit", subject, "|o(G_40) - n| < 1e-6", t.terms.back().gap < tol);
    conv.witness.emplace_back("gap_m40", t.terms.back().gap.str());
    rep.records.push_back(std::move(conv));

    // Second algebraic route for each factor: p^k (1 - p^-m)/(1 - p^-(m+1))
    // + (p - 1)/(p^{mk}(p^{m+1} - 1)).
    bool alt_ok = true;
    for (const auto& term : t.terms) {
      Rational alt(1);
      for (const auto& [p, k] : factorize(n)) {
        const Rational pr(static_cast<long>(p));
        const Rational pm = Rational(big_pow(p, term.m));
        const Rational pm1 = Rational(big_pow(p, term.m + 1));
        const Rational pk = Rational(big_pow(p, k));
        alt *= pk * (Rational(1) - Rational(1) / pm) / (Rational(1) - Rational(1) / pm1) +
               (pr - 1) / (Rational(big_pow(p, static_cast<unsigned long>(term.m) * k)) *
                           (pm1 - 1));
      }
      alt_ok = alt_ok && alt == term.value;
    }
    rep.records.push_back(
        make_record("limit", subject, "closed form = normalized form for m <= 40", alt_ok));

    for (unsigned m = 1; m <= 3; ++m) {
      const Rational direct = limit_term_by_enumeration(n, m);
      auto r = make_record("limit", subject + ",m=" + std::to_string(m),
                           "closed form = enumeration", direct == t.terms[m - 1].value);
      r.witness = {{"closed_form", t.terms[m - 1].value.str()}, {"enumerated", direct.str()}};
      rep.records.push_back(std::move(r));
    }
  }
  return rep;
}

VerifyReport verify_density(const Catalog& catalog) {
  VerifyReport rep;
  for (const Rational& eps : {rat(1, 24), rat(1, 1000)}) {
    const DensityScan s = density_scan(eps, catalog);
    const std::string subject = "epsilon=" + eps.str();
    auto r = make_record("density", subject, "every group with o in [13/6, 9/4 - epsilon) has order < n0",
                         s.all_below_n0);
    r.witness = {{"n0", to_string(s.n0)},
                 {"hits", std::to_string(s.hits.size())},
                 {"scanned", std::to_string(s.groups_scanned)}};
    rep.records.push_back(std::move(r));
    const bool has_s3 = std::any_of(s.hits.begin(), s.hits.end(),
                                    [](const DensityHit& h) { return h.label == "S3"; });
    rep.records.push_back(make_record("density", subject, "S3 lies in the interval", has_s3));
  }
  return rep;
}

VerifyReport verify_integer_search() {
  VerifyReport rep;
  const IntegerSearchResult res = integer_search(5000);
  const std::vector<std::pair<std::uint64_t, long>> expected{
      {105, 17}, {357, 65}, {1785, 273}, {3887, 285}, {4515, 413}, {4641, 785}};
  std::vector<std::pair<std::uint64_t, long>> found;
  for (const auto& h : res.hits)
    found.emplace_back(h.order, h.avg_order.get_si());
  auto r = make_record("search", "max_order=5000", "integer average orders in the searched families",
                       found == expected);
  std::string list;
  for (const auto& [n, o] : found)
    list += (list.empty() ? "" : ",") + std::to_string(n) + ":" + std::to_string(o);
  r.witness = {{"found", list}, {"scope", res.scope}};
  rep.records.push_back(std::move(r));

  for (const auto& h : res.hits) {
    const OrderCensus c = order_census(realize(h.recipe));
    auto hr = make_record("search", to_string(h.recipe), "psi by enumeration = o * |G|",
                          c.group_order() == h.order && psi(c) == h.avg_order * h.order);
    hr.witness = {{"order", std::to_string(h.order)},
                  {"psi", to_string(psi(c))},
                  {"o", to_string(h.avg_order)}};
    rep.records.push_back(std::move(hr));
  }
  return rep;
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"fixtures", "table",  "lemma21", "lemma22",
                                              "theorem15", "ratios", "n2",      "small",
                                              "limit",     "density", "search"};
  return names;
}

VerifyReport verify(const std::string& suite, const Catalog& catalog) {
  static const std::map<std::string, std::function<VerifyReport(const Catalog&)>> runners{
      {"fixtures", verify_fixtures},
      {"table", verify_min_table},
      {"lemma21", verify_lemma21},
      {"lemma22", verify_lemma22},
      {"theorem15", verify_theorem_1_5},
      {"ratios", verify_ratio_criteria},
      {"n2", verify_n2_criteria},
      {"small", verify_small_claims},
      {"limit", [](const Catalog&) { return verify_limits(); }},
      {"density", verify_density},
      {"search", [](const Catalog&) { return verify_integer_search(); }},
  };
  if (suite == "all") {
    VerifyReport all;
    for (const auto& name : verify_suites())
      all.append(runners.at(name)(catalog));
    return all;
  }
  auto it = runners.find(suite);
  if (it == runners.end())
    throw std::invalid_argument("unknown verification suite '" + suite + "'");
  return it->second(catalog);
}

}  // namespace avgorder
