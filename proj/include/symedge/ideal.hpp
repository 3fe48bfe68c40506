#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "symedge/graph.hpp"
#include "symedge/monomial.hpp"

namespace symedge {

/// Ordered variable names shared by every ideal built over the same ring.
using Variables = std::shared_ptr<const std::vector<std::string>>;

Variables make_variables(std::vector<std::string> names);
bool same_context(const Variables& a, const Variables& b);

/**
 * Monomial ideal held as its unique minimal generating set, sorted
 * lexicographically by exponent vector. The zero ideal has no generators;
 * the unit ideal has the single generator 1.
 */
class MonomialIdeal {
 public:
  /// Minimalizes `gens`.
  MonomialIdeal(Variables vars, std::vector<Monomial> gens);

  const Variables& context() const { return vars_; }
  const std::vector<std::string>& variables() const { return *vars_; }
  std::size_t variable_count() const { return vars_->size(); }
  std::span<const Monomial> generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return *a.vars_ == *b.vars_ && a.gens_ == b.gens_;
  }

 private:
  struct Trusted {};
  MonomialIdeal(Trusted, Variables vars, std::vector<Monomial> gens)
      : vars_(std::move(vars)), gens_(std::move(gens)) {}
  friend MonomialIdeal minimalize(Variables vars, std::vector<Monomial> gens);

  Variables vars_;
  std::vector<Monomial> gens_;
};

/**
 * Answers "does some stored monomial divide m" through a trie keyed on
 * successive exponents. Used for bulk membership and minimalization.
 */
class DivisorIndex {
 public:
  explicit DivisorIndex(std::size_t nvars);
  explicit DivisorIndex(const MonomialIdeal& ideal);

  void insert(const Monomial& m);
  bool has_divisor_of(const Monomial& m) const;
  std::size_t size() const { return count_; }

 private:
  struct Node {
    std::vector<std::pair<Exponent, std::uint32_t>> children;  // sorted by exponent
  };
  bool search(std::uint32_t node, std::size_t depth, const Monomial& m) const;

  std::size_t nvars_;
  std::vector<Node> nodes_;
  std::size_t count_ = 0;
};

MonomialIdeal minimalize(Variables vars, std::vector<Monomial> gens);

MonomialIdeal zero_ideal(Variables vars);
MonomialIdeal unit_ideal(Variables vars);
MonomialIdeal principal(Variables vars, Monomial m);
MonomialIdeal maximal_ideal(Variables vars);
/// Ideal generated by the variables in `mask`.
MonomialIdeal prime_ideal(Variables vars, VertexMask mask);

/// One squarefree quadric per edge, over the graph's vertex order.
MonomialIdeal edge_ideal(const Graph& g);
MonomialIdeal edge_ideal(const Graph& g, const Variables& vars);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
/// power(a, 0) is the unit ideal.
MonomialIdeal power(const MonomialIdeal& a, unsigned s);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// a ∩ p^d for the prime p generated by the variables in `prime`. Same
/// result as intersect(a, power(prime_ideal(...), d)) without materializing
/// p^d: each generator g is raised by exactly its deficit inside p.
MonomialIdeal intersect_with_prime_power(const MonomialIdeal& a, VertexMask prime, unsigned d);

MonomialIdeal colon(const MonomialIdeal& a, const Monomial& b);
/// Intersection over the generators g of b of colon(a, g). b must be nonzero.
MonomialIdeal colon_ideal(const MonomialIdeal& a, const MonomialIdeal& b);

bool contains(const MonomialIdeal& a, const Monomial& m);
bool contains_ideal(const MonomialIdeal& a, const MonomialIdeal& b);

/// Least generator degree; throws on the zero ideal.
unsigned alpha(const MonomialIdeal& a);

/// "(x1*x2, x2*x3)", "(0)" or "(1)".
std::string to_string(const MonomialIdeal& a);

nlohmann::json to_json(const MonomialIdeal& a);
/// Accepts any generating set and canonicalizes it. Throws ParseError.
MonomialIdeal ideal_from_json(const nlohmann::json& j);

}  // namespace symedge
