#include "avgorder/census.hpp"

#include <sstream>
#include <stdexcept>

#include "avgorder/number_theory.hpp"
#include "avgorder/structure.hpp"

namespace avgorder {

OrderCensus::OrderCensus(Counts counts, std::uint64_t group_order)
    : counts_(std::move(counts)), group_order_(group_order) {
  if (group_order_ == 0)
    throw std::invalid_argument("census: group order must be positive");
  std::uint64_t total = 0;
  for (auto it = counts_.begin(); it != counts_.end();) {
    if (it->second == 0) {
      it = counts_.erase(it);
      continue;
    }
    const auto [d, n] = *it;
    if (d == 0 || group_order_ % d != 0)
      throw std::invalid_argument("census: order " + std::to_string(d) + " does not divide " +
                                  std::to_string(group_order_));
    if (n % euler_phi(d) != 0)
      throw std::invalid_argument("census: phi(" + std::to_string(d) + ") does not divide " +
                                  std::to_string(n));
    total += n;
    ++it;
  }
  if (count(1) != 1)
    throw std::invalid_argument("census: exactly one element of order 1 required");
  if (total != group_order_)
    throw std::invalid_argument("census: counts sum to " + std::to_string(total) + ", not " +
                                std::to_string(group_order_));
}

std::uint64_t OrderCensus::count(std::uint64_t d) const {
  auto it = counts_.find(d);
  return it == counts_.end() ? 0 : it->second;
}

std::vector<std::uint64_t> OrderCensus::element_orders() const {
  std::vector<std::uint64_t> out;
  out.reserve(counts_.size());
  for (const auto& [d, n] : counts_)
    out.push_back(d);
  return out;
}

std::string OrderCensus::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, n] : counts_) {
    os << (first ? "" : ",") << d << ':' << n;
    first = false;
  }
  return os.str();
}

OrderCensus OrderCensus::parse(const std::string& text) {
  Counts counts;
  std::uint64_t total = 0;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("census: malformed item '" + item + "'");
    const std::uint64_t d = std::stoull(item.substr(0, colon));
    const std::uint64_t n = std::stoull(item.substr(colon + 1));
    counts[d] += n;
    total += n;
  }
  return OrderCensus(std::move(counts), total);
}

OrderCensus order_census(const FiniteGroup& g) {
  OrderCensus::Counts counts;
  for (const auto& x : g.elements())
    ++counts[perm_order(x)];
  return OrderCensus(std::move(counts), g.order());
}

BigInt psi(const OrderCensus& census) {
  BigInt total = 0;
  for (const auto& [d, n] : census.counts())
    total += BigInt(d) * BigInt(n);
  return total;
}

Rational average_order(const OrderCensus& census) {
  return rat(psi(census), BigInt(census.group_order()));
}

BigInt psi_cyclic(std::uint64_t n) {
  if (n == 0)
    throw std::invalid_argument("psi_cyclic: n must be positive");
  BigInt total = 0;
  for (std::uint64_t d : divisors(n))
    total += BigInt(d) * BigInt(euler_phi(d));
  return total;
}

BigInt psi_elem_power(std::uint64_t p, unsigned k, unsigned m) {
  if (!is_prime(p) || k == 0 || m == 0)
    throw std::invalid_argument("psi_elem_power: need p prime, k >= 1, m >= 1");
  const BigInt num = big_pow(p, static_cast<unsigned long>(m + 1) * (k + 1)) -
                     big_pow(p, static_cast<unsigned long>(m + 1) * k + 1) + BigInt(p) - 1;
  const BigInt den = big_pow(p, m + 1) - 1;
  if (num % den != 0)
    throw ArithmeticError("psi_elem_power: closed form is not integral");
  return num / den;
}

BigInt odd_part_sum(const FiniteGroup& g, std::uint64_t p) {
  if (!is_prime(p))
    throw std::invalid_argument("odd_part_sum: p must be prime");
  const OrderCensus census = order_census(g);
  BigInt total = 0;
  for (const auto& [d, n] : census.counts())
    if (d % p != 0)
      total += BigInt(d) * BigInt(n);
  return total;
}

bool AnalysisReport::consistent() const {
  for (const auto& v : verdicts)
    if (!v.consistent())
      return false;
  return true;
}

namespace {

ThresholdVerdict above(std::string quantity, const Rational& value, const Rational& threshold,
                       std::string conclusion, std::optional<bool> holds) {
  ThresholdVerdict v;
  v.id = quantity + ">" + threshold.str() + ":" + conclusion;
  v.quantity = std::move(quantity);
  v.value = value;
  v.threshold = threshold;
  v.fires = value > threshold;
  v.conclusion = std::move(conclusion);
  v.conclusion_holds = holds;
  return v;
}

ThresholdVerdict below(std::string quantity, const Rational& value, const Rational& threshold,
                       std::string conclusion, std::optional<bool> holds) {
  ThresholdVerdict v = above(quantity, value, threshold, std::move(conclusion), holds);
  v.id = v.quantity + "<" + threshold.str() + ":" + v.conclusion;
  v.fires = value < threshold;
  return v;
}

}  // namespace

AnalysisReport psi_ratios(const FiniteGroup& g) {
  OrderCensus census = order_census(g);
  const std::uint64_t n = census.group_order();
  const BigInt total = psi(census);

  StructureFlags flags;
  flags.elementary_abelian_2 = is_elementary_abelian_2(census);
  flags.cyclic = is_cyclic(census);
  flags.abelian = is_abelian(g);
  flags.nilpotent = is_nilpotent(g);
  flags.solvable = is_solvable(g);

  AnalysisReport report{
      .group_order = n,
      .psi = total,
      .avg_order = rat(total, BigInt(n)),
      .psi_prime = rat(total, psi_cyclic(n)),
      .psi_double_prime = rat(total, BigInt(n) * BigInt(n)),
      .census = std::move(census),
      .flags = flags,
      .verdicts = {},
  };

  const auto& p1 = report.psi_prime;
  const auto& p2 = report.psi_double_prime;
  const auto& o = report.avg_order;
  auto& v = report.verdicts;
  v.push_back(above("psi'", p1, rat(7, 11), "cyclic", flags.cyclic));
  v.push_back(above("psi'", p1, rat(13, 21), "nilpotent", flags.nilpotent));
  v.push_back(above("psi'", p1, rat(31, 77), "supersolvable", std::nullopt));
  v.push_back(above("psi'", p1, rat(211, 1617), "solvable", flags.solvable));
  v.push_back(above("psi''", p2, rat(7, 16), "cyclic", flags.cyclic));
  v.push_back(above("psi''", p2, rat(27, 64), "abelian", flags.abelian));
  v.push_back(above("psi''", p2, rat(13, 36), "nilpotent", flags.nilpotent));
  v.push_back(above("psi''", p2, rat(31, 144), "supersolvable", std::nullopt));
  v.push_back(above("psi''", p2, rat(211, 3600), "solvable", flags.solvable));
  v.push_back(below("o", o, rat(13, 6), "elementary-abelian-2", flags.elementary_abelian_2));
  v.push_back(below("o", o, rat(13, 6), "nilpotent", flags.nilpotent));
  v.push_back(below("o", o, rat(11, 4), "solvable", flags.solvable));
  return report;
}

}  // namespace avgorder
