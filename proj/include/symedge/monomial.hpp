#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "symedge/graph.hpp"

namespace symedge {

using Exponent = std::uint16_t;

/**
 * Monomial x^a over an ambient list of variables, stored as its exponent
 * vector. Arithmetic is overflow-checked: any exponent above 65535 throws
 * std::overflow_error instead of wrapping.
 */
class Monomial {
 public:
  Monomial() = default;
  /// The monomial 1 over `nvars` variables.
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<unsigned> exps);
  static Monomial from_exponents(std::span<const unsigned> exps);
  /// Squarefree monomial prod_{i in mask} x_i.
  static Monomial from_support(std::size_t nvars, VertexMask mask);

  std::size_t size() const { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned degree() const { return degree_; }
  std::span<const Exponent> exponents() const { return {exps_.data(), exps_.size()}; }
  void set(std::size_t i, unsigned e);

  bool is_one() const { return degree_ == 0; }
  bool is_squarefree() const;
  VertexMask support() const;
  bool divides(const Monomial& m) const;

  /// this / d; requires d | this.
  Monomial divided_by(const Monomial& d) const;
  /// this / gcd(this, b): the generator of (this) : b.
  Monomial colon(const Monomial& b) const;
  Monomial pow(unsigned k) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  /// Lexicographic on exponent vectors.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  boost::container::small_vector<Exponent, 16> exps_;
  unsigned degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// "x1^2*x3", or "1" for the unit monomial.
std::string to_string(const Monomial& m, std::span<const std::string> variables);

}  // namespace symedge
