#pragma once

// Construction recipes for permutation groups and their text form.
//
// Grammar (whitespace-insensitive):
//
//   recipe  := factor ( 'x' factor )*
//   factor  := 'C(' n ')'            cyclic group of order n
//            | 'E(' p ',' m ')'      elementary abelian C_p^m
//            | 'D(' 2n ')'           dihedral group of order 2n
//            | 'Dic(' 4n ')'         dicyclic group of order 4n (Dic(8) = Q8)
//            | 'S(' n ')' | 'A(' n ')'
//            | 'SD(' q ',' r [',' k] ')'
//                                    C_q x| C_r, k a unit of order dividing r
//                                    mod q; when omitted, the smallest unit of
//                                    order exactly r is used
//            | 'P(' degree ( ';' perm )+ ')'
//                                    explicit generators in cycle notation,
//                                    e.g. P(4;(0,1,2,3);(1,3)); '()' is the identity
//            | '(' recipe ')'
//
// 'x' is left-associative.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "avgorder/perm.hpp"

namespace avgorder {

class RecipeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Syntax error; position() is the 0-based offset into the input.
class RecipeParseError : public RecipeError {
 public:
  RecipeParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct GroupRecipe;

namespace recipe {

struct Cyclic {
  std::uint64_t n;
  friend bool operator==(const Cyclic&, const Cyclic&) = default;
};
struct ElementaryAbelian {
  std::uint64_t p;
  unsigned m;
  friend bool operator==(const ElementaryAbelian&, const ElementaryAbelian&) = default;
};
struct Dihedral {
  std::uint64_t order;
  friend bool operator==(const Dihedral&, const Dihedral&) = default;
};
struct Dicyclic {
  std::uint64_t order;
  friend bool operator==(const Dicyclic&, const Dicyclic&) = default;
};
struct Symmetric {
  unsigned n;
  friend bool operator==(const Symmetric&, const Symmetric&) = default;
};
struct Alternating {
  unsigned n;
  friend bool operator==(const Alternating&, const Alternating&) = default;
};
struct Semidirect {
  std::uint64_t q;
  std::uint64_t r;
  std::optional<std::uint64_t> k;
  friend bool operator==(const Semidirect&, const Semidirect&) = default;
};
struct Explicit {
  std::size_t degree;
  std::vector<Permutation> generators;
  friend bool operator==(const Explicit&, const Explicit&) = default;
};
struct Product {
  std::shared_ptr<const GroupRecipe> left;
  std::shared_ptr<const GroupRecipe> right;
  friend bool operator==(const Product& a, const Product& b);
};

}  // namespace recipe

struct GroupRecipe {
  using Variant = std::variant<recipe::Cyclic, recipe::ElementaryAbelian, recipe::Dihedral,
                               recipe::Dicyclic, recipe::Symmetric, recipe::Alternating,
                               recipe::Semidirect, recipe::Explicit, recipe::Product>;
  Variant node;

  friend bool operator==(const GroupRecipe&, const GroupRecipe&) = default;
};

GroupRecipe product(GroupRecipe left, GroupRecipe right);

GroupRecipe parse_recipe(std::string_view text);
/// Canonical text; parse_recipe(to_string(r)) == r.
std::string to_string(const GroupRecipe& r);

/// Order implied by the recipe algebra; nullopt for explicit generators.
/// Saturates at UINT64_MAX.
std::optional<std::uint64_t> declared_order(const GroupRecipe& r);

/// Builds the permutation group. Throws RecipeError for malformed parameters
/// and SizeCapExceeded when the declared order is over the cap. The realized
/// order is checked against the declared order.
FiniteGroup realize(const GroupRecipe& r);

/// The action constant SD(q, r) uses when none is given.
std::uint64_t default_action(std::uint64_t q, std::uint64_t r);

}  // namespace avgorder
