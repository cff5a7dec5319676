#include "avgorder/recipe.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include "avgorder/number_theory.hpp"

namespace avgorder {

RecipeParseError::RecipeParseError(const std::string& what, std::size_t position)
    : RecipeError(what + " at position " + std::to_string(position)), position_(position) {}

namespace recipe {

bool operator==(const Product& a, const Product& b) {
  return *a.left == *b.left && *a.right == *b.right;
}

}  // namespace recipe

GroupRecipe product(GroupRecipe left, GroupRecipe right) {
  return GroupRecipe{recipe::Product{std::make_shared<const GroupRecipe>(std::move(left)),
                                     std::make_shared<const GroupRecipe>(std::move(right))}};
}

std::uint64_t default_action(std::uint64_t q, std::uint64_t r) {
  if (!is_prime(q))
    throw RecipeError("SD(" + std::to_string(q) + "," + std::to_string(r) + "): q must be prime");
  auto k = unit_of_order(q, r);
  if (!k)
    throw RecipeError("SD(" + std::to_string(q) + "," + std::to_string(r) +
                      "): no unit of order " + std::to_string(r) + " modulo " +
                      std::to_string(q));
  return *k;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : original_size_(text.size()) {
    for (std::size_t i = 0; i < text.size(); ++i)
      if (!std::isspace(static_cast<unsigned char>(text[i])))
        chars_.push_back({text[i], i});
  }

  GroupRecipe parse() {
    GroupRecipe r = parse_product();
    if (!at_end())
      fail("unexpected '" + std::string(1, peek()) + "'");
    return r;
  }

 private:
  struct Char {
    char c;
    std::size_t pos;
  };

  bool at_end() const { return i_ >= chars_.size(); }
  char peek() const { return at_end() ? '\0' : chars_[i_].c; }
  std::size_t pos() const { return at_end() ? original_size_ : chars_[i_].pos; }

  [[noreturn]] void fail(const std::string& what) const { throw RecipeParseError(what, pos()); }

  void expect(char c) {
    if (peek() != c)
      fail(std::string("expected '") + c + "'");
    ++i_;
  }

  bool accept(char c) {
    if (peek() != c)
      return false;
    ++i_;
    return true;
  }

  std::uint64_t number() {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected a number");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::uint64_t digit = static_cast<std::uint64_t>(peek() - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
        fail("number too large");
      v = v * 10 + digit;
      ++i_;
    }
    return v;
  }

  GroupRecipe parse_product() {
    GroupRecipe r = parse_factor();
    while (accept('x'))
      r = product(std::move(r), parse_factor());
    return r;
  }

  GroupRecipe parse_factor() {
    if (accept('(')) {
      GroupRecipe r = parse_product();
      expect(')');
      return r;
    }
    const std::size_t start = pos();
    std::string name;
    while (std::isalpha(static_cast<unsigned char>(peek())) && !(name.empty() && peek() == 'x'))
      name += chars_[i_++].c;
    if (name.empty())
      fail("expected a group constructor");
    expect('(');
    GroupRecipe r;
    if (name == "C") {
      r.node = recipe::Cyclic{number()};
    } else if (name == "E") {
      const auto p = number();
      expect(',');
      r.node = recipe::ElementaryAbelian{p, small(number())};
    } else if (name == "D") {
      r.node = recipe::Dihedral{number()};
    } else if (name == "Dic") {
      r.node = recipe::Dicyclic{number()};
    } else if (name == "S") {
      r.node = recipe::Symmetric{small(number())};
    } else if (name == "A") {
      r.node = recipe::Alternating{small(number())};
    } else if (name == "SD") {
      recipe::Semidirect sd{number(), 0, std::nullopt};
      expect(',');
      sd.r = number();
      if (accept(','))
        sd.k = number();
      r.node = sd;
    } else if (name == "P") {
      recipe::Explicit ex{static_cast<std::size_t>(number()), {}};
      if (ex.degree == 0 || ex.degree > std::numeric_limits<Point>::max())
        fail("degree out of range");
      do {
        expect(';');
        ex.generators.push_back(permutation(ex.degree));
      } while (peek() == ';');
      r.node = std::move(ex);
    } else {
      throw RecipeParseError("unknown group constructor '" + name + "'", start);
    }
    expect(')');
    return r;
  }

  unsigned small(std::uint64_t v) {
    if (v > 1000)
      fail("parameter too large");
    return static_cast<unsigned>(v);
  }

  Permutation permutation(std::size_t degree) {
    std::vector<std::vector<Point>> cycles;
    const std::size_t start = pos();
    if (peek() != '(')
      fail("expected a cycle");
    while (accept('(')) {
      std::vector<Point> cycle;
      if (!accept(')')) {
        do {
          const std::size_t at = pos();
          const auto v = number();
          if (v >= degree)
            throw RecipeParseError("point " + std::to_string(v) + " outside degree " +
                                       std::to_string(degree),
                                   at);
          cycle.push_back(static_cast<Point>(v));
        } while (accept(','));
        expect(')');
      }
      cycles.push_back(std::move(cycle));
    }
    try {
      return Permutation::from_cycles(degree, cycles);
    } catch (const GroupError& e) {
      throw RecipeParseError(e.what(), start);
    }
  }

  std::vector<Char> chars_;
  std::size_t original_size_;
  std::size_t i_ = 0;
};

}  // namespace

GroupRecipe parse_recipe(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Printing

namespace {

struct Printer {
  std::ostringstream& os;

  void operator()(const recipe::Cyclic& c) const { os << "C(" << c.n << ')'; }
  void operator()(const recipe::ElementaryAbelian& e) const {
    os << "E(" << e.p << ',' << e.m << ')';
  }
  void operator()(const recipe::Dihedral& d) const { os << "D(" << d.order << ')'; }
  void operator()(const recipe::Dicyclic& d) const { os << "Dic(" << d.order << ')'; }
  void operator()(const recipe::Symmetric& s) const { os << "S(" << s.n << ')'; }
  void operator()(const recipe::Alternating& a) const { os << "A(" << a.n << ')'; }
  void operator()(const recipe::Semidirect& sd) const {
    os << "SD(" << sd.q << ',' << sd.r;
    if (sd.k)
      os << ',' << *sd.k;
    os << ')';
  }
  void operator()(const recipe::Explicit& ex) const {
    os << "P(" << ex.degree;
    for (const auto& g : ex.generators)
      os << ';' << g.str();
    os << ')';
  }
  void operator()(const recipe::Product& p) const {
    std::visit(*this, p.left->node);
    os << " x ";
    const bool nested = std::holds_alternative<recipe::Product>(p.right->node);
    if (nested)
      os << '(';
    std::visit(*this, p.right->node);
    if (nested)
      os << ')';
  }
};

}  // namespace

std::string to_string(const GroupRecipe& r) {
  std::ostringstream os;
  std::visit(Printer{os}, r.node);
  return os.str();
}

// ---------------------------------------------------------------------------
// Orders and realization

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a)
    return kSaturated;
  return a * b;
}

std::uint64_t factorial(unsigned n) {
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i)
    f = sat_mul(f, i);
  return f;
}

struct OrderOf {
  std::optional<std::uint64_t> operator()(const recipe::Cyclic& c) const { return c.n; }
  std::optional<std::uint64_t> operator()(const recipe::ElementaryAbelian& e) const {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e.m; ++i)
      r = sat_mul(r, e.p);
    return r;
  }
  std::optional<std::uint64_t> operator()(const recipe::Dihedral& d) const { return d.order; }
  std::optional<std::uint64_t> operator()(const recipe::Dicyclic& d) const { return d.order; }
  std::optional<std::uint64_t> operator()(const recipe::Symmetric& s) const {
    return factorial(s.n);
  }
  std::optional<std::uint64_t> operator()(const recipe::Alternating& a) const {
    return a.n < 2 ? 1 : factorial(a.n) / 2;
  }
  std::optional<std::uint64_t> operator()(const recipe::Semidirect& sd) const {
    return sat_mul(sd.q, sd.r);
  }
  std::optional<std::uint64_t> operator()(const recipe::Explicit&) const { return std::nullopt; }
  std::optional<std::uint64_t> operator()(const recipe::Product& p) const {
    auto l = declared_order(*p.left);
    auto r = declared_order(*p.right);
    if (!l || !r)
      return std::nullopt;
    return sat_mul(*l, *r);
  }
};

Permutation cycle_on(std::size_t degree, std::size_t offset, std::size_t length) {
  std::vector<Point> c(length);
  for (std::size_t i = 0; i < length; ++i)
    c[i] = static_cast<Point>(offset + i);
  return Permutation::from_cycles(degree, {c});
}

FiniteGroup build(const GroupRecipe& r);

struct Builder {
  FiniteGroup operator()(const recipe::Cyclic& c) const {
    if (c.n == 0)
      throw RecipeError("C(0): order must be positive");
    if (c.n == 1)
      return FiniteGroup::trivial();
    // Disjoint prime-power cycles: degree is the sum of the prime powers.
    const auto f = factorize(c.n);
    std::size_t degree = 0;
    for (const auto& [p, e] : f)
      degree += ipow(p, e);
    std::vector<std::vector<Point>> cycles;
    std::size_t offset = 0;
    for (const auto& [p, e] : f) {
      std::vector<Point> cycle(ipow(p, e));
      for (auto& x : cycle)
        x = static_cast<Point>(offset++);
      cycles.push_back(std::move(cycle));
    }
    return FiniteGroup(degree, {Permutation::from_cycles(degree, cycles)});
  }

  FiniteGroup operator()(const recipe::ElementaryAbelian& e) const {
    if (!is_prime(e.p))
      throw RecipeError("E(" + std::to_string(e.p) + "," + std::to_string(e.m) +
                        "): p must be prime");
    if (e.m == 0)
      return FiniteGroup::trivial();
    const std::size_t degree = e.p * e.m;
    std::vector<Permutation> gens;
    for (unsigned i = 0; i < e.m; ++i)
      gens.push_back(cycle_on(degree, i * e.p, e.p));
    return FiniteGroup(degree, std::move(gens));
  }

  FiniteGroup operator()(const recipe::Dihedral& d) const {
    if (d.order < 2 || d.order % 2 != 0)
      throw RecipeError("D(" + std::to_string(d.order) + "): order must be even and positive");
    const std::uint64_t n = d.order / 2;
    if (n == 1)
      return FiniteGroup(2, {cycle_on(2, 0, 2)});
    if (n == 2)
      return FiniteGroup(4, {cycle_on(4, 0, 2), cycle_on(4, 2, 2)});
    std::vector<Point> reflect(n);
    for (std::uint64_t i = 0; i < n; ++i)
      reflect[i] = static_cast<Point>((n - i) % n);
    return FiniteGroup(n, {cycle_on(n, 0, n), Permutation(std::move(reflect))});
  }

  FiniteGroup operator()(const recipe::Dicyclic& d) const {
    if (d.order < 4 || d.order % 4 != 0)
      throw RecipeError("Dic(" + std::to_string(d.order) + "): order must be a multiple of 4");
    // Right regular representation of <a, x | a^2n, x^2 = a^n, x^-1 a x = a^-1>
    // on the normal forms a^i x^j, indexed i + 2n*j.
    const std::uint64_t n = d.order / 4;
    const std::uint64_t m = 2 * n;
    std::vector<Point> ra(d.order), rx(d.order);
    for (std::uint64_t i = 0; i < m; ++i) {
      ra[i] = static_cast<Point>((i + 1) % m);
      ra[m + i] = static_cast<Point>(m + (i + m - 1) % m);
      rx[i] = static_cast<Point>(m + i);
      rx[m + i] = static_cast<Point>((i + n) % m);
    }
    return FiniteGroup(d.order, {Permutation(std::move(ra)), Permutation(std::move(rx))});
  }

  FiniteGroup operator()(const recipe::Symmetric& s) const {
    if (s.n == 0)
      throw RecipeError("S(0): degree must be positive");
    if (s.n == 1)
      return FiniteGroup::trivial();
    if (s.n == 2)
      return FiniteGroup(2, {cycle_on(2, 0, 2)});
    return FiniteGroup(s.n, {cycle_on(s.n, 0, 2), cycle_on(s.n, 0, s.n)});
  }

  FiniteGroup operator()(const recipe::Alternating& a) const {
    if (a.n == 0)
      throw RecipeError("A(0): degree must be positive");
    if (a.n < 3)
      return FiniteGroup::trivial(a.n);
    std::vector<Permutation> gens;
    for (Point i = 2; i < a.n; ++i)
      gens.push_back(Permutation::from_cycles(a.n, {{0, 1, i}}));
    return FiniteGroup(a.n, std::move(gens));
  }

  FiniteGroup operator()(const recipe::Semidirect& sd) const {
    const std::uint64_t k = sd.k ? *sd.k : default_action(sd.q, sd.r);
    try {
      return semidirect_cyclic(sd.q, sd.r, k);
    } catch (const SizeCapExceeded&) {
      throw;
    } catch (const GroupError& e) {
      throw RecipeError(e.what());
    }
  }

  FiniteGroup operator()(const recipe::Explicit& ex) const {
    std::optional<FiniteGroup> g;
    try {
      g.emplace(ex.degree, ex.generators);
    } catch (const GroupError& e) {
      throw RecipeError(e.what());
    }
    g->elements();
    return *g;
  }

  FiniteGroup operator()(const recipe::Product& p) const {
    return direct_product(build(*p.left), build(*p.right));
  }
};

FiniteGroup build(const GroupRecipe& r) { return std::visit(Builder{}, r.node); }

}  // namespace

std::optional<std::uint64_t> declared_order(const GroupRecipe& r) {
  return std::visit(OrderOf{}, r.node);
}

FiniteGroup realize(const GroupRecipe& r) {
  const auto declared = declared_order(r);
  if (declared && *declared > kMaxGroupSize)
    throw SizeCapExceeded(to_string(r) + " has order " +
                          (*declared == kSaturated ? std::string("beyond 2^64")
                                                   : std::to_string(*declared)) +
                          ", over the size cap of " + std::to_string(kMaxGroupSize));
  FiniteGroup g = build(r);
  if (declared && g.order() != *declared)
    throw RecipeError(to_string(r) + ": realized order " + std::to_string(g.order()) +
                      " differs from declared order " + std::to_string(*declared));
  return g;
}

}  // namespace avgorder
