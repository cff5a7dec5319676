#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "avgorder/perm.hpp"
#include "avgorder/rational.hpp"

namespace avgorder {

/// Element-order statistics of a finite group: order d -> number of elements
/// of order exactly d.
class OrderCensus {
 public:
  using Counts = std::map<std::uint64_t, std::uint64_t>;

  /// Validates the census invariants (counts sum to the group order, one
  /// identity, every order divides |G|, phi(d) divides n_d); throws
  /// std::invalid_argument on violation.
  OrderCensus(Counts counts, std::uint64_t group_order);

  const Counts& counts() const { return counts_; }
  std::uint64_t group_order() const { return group_order_; }
  /// n_d, zero when no element has order d.
  std::uint64_t count(std::uint64_t d) const;
  /// d_1 < d_2 < ... < d_r.
  std::vector<std::uint64_t> element_orders() const;

  /// "1:1,2:3,3:2".
  std::string str() const;
  static OrderCensus parse(const std::string& text);

  friend bool operator==(const OrderCensus&, const OrderCensus&) = default;

 private:
  Counts counts_;
  std::uint64_t group_order_;
};

OrderCensus order_census(const FiniteGroup& g);

/// Sum of element orders.
BigInt psi(const OrderCensus& census);
/// psi / |G|.
Rational average_order(const OrderCensus& census);

/// psi of the cyclic group of order n, sum over d | n of d * phi(d).
BigInt psi_cyclic(std::uint64_t n);

/// Closed form for psi of the m-fold direct power of C_{p^k}:
/// (p^{(m+1)(k+1)} - p^{(m+1)k+1} + p - 1) / (p^{m+1} - 1).
BigInt psi_elem_power(std::uint64_t p, unsigned k, unsigned m);

/// Sum of o(x) over the elements of g whose order is not divisible by p.
BigInt odd_part_sum(const FiniteGroup& g, std::uint64_t p);

/// One threshold criterion evaluated on a group: whether the ratio crosses the
/// threshold, and whether the structural conclusion it promises holds.
struct ThresholdVerdict {
  std::string id;          // e.g. "psi1>7/11:cyclic"
  std::string quantity;    // "psi'", "psi''" or "o"
  Rational value;
  Rational threshold;
  bool fires = false;      // value > threshold (value < threshold for "o")
  std::string conclusion;  // "cyclic", "abelian", ...
  /// Absent when no oracle exists for the conclusion (supersolvability).
  std::optional<bool> conclusion_holds;

  bool consistent() const { return !fires || conclusion_holds.value_or(true); }
};

struct StructureFlags {
  bool elementary_abelian_2 = false;
  bool cyclic = false;
  bool abelian = false;
  bool nilpotent = false;
  bool solvable = false;
};

struct AnalysisReport {
  std::uint64_t group_order = 0;
  BigInt psi;
  Rational avg_order;
  Rational psi_prime;         // psi / psi(C_|G|)
  Rational psi_double_prime;  // psi / |G|^2
  OrderCensus census;
  StructureFlags flags;
  std::vector<ThresholdVerdict> verdicts;

  bool consistent() const;
};

/// Full report: psi, o, psi', psi'', census, structural flags and every
/// threshold comparison of the psi', psi'' and o criteria.
AnalysisReport psi_ratios(const FiniteGroup& g);

}  // namespace avgorder
