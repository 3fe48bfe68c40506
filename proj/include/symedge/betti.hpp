#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symedge/graph.hpp"
#include "symedge/ideal.hpp"

namespace symedge {

struct BettiBudget {
  std::size_t max_box_points = 5'000'000;
  std::size_t max_faces = std::size_t{1} << 16;
};

/**
 * Simplicial complex on a subset of the ambient variables, held by its
 * facets. A void complex has no faces at all; the irrelevant complex has
 * only the empty face. The two are distinct.
 */
class SimplicialComplex {
 public:
  static SimplicialComplex void_complex(VertexMask ground);
  /// Facets are reduced to the inclusion-maximal members of `faces`.
  SimplicialComplex(VertexMask ground, std::vector<VertexMask> faces);

  VertexMask ground() const { return ground_; }
  bool is_void() const { return void_; }
  const std::vector<VertexMask>& facets() const { return facets_; }
  bool has_face(VertexMask w) const;
  /// Every face, by size then numeric value. Throws BudgetError past max_faces.
  std::vector<VertexMask> faces(std::size_t max_faces = std::size_t{1} << 16) const;
  /// f_{-1}, f_0, f_1, ... (index 0 is the empty face).
  std::vector<std::size_t> f_vector() const;

 private:
  SimplicialComplex() = default;
  VertexMask ground_ = 0;
  bool void_ = true;
  std::vector<VertexMask> facets_;
};

/// Faces: squarefree W ⊆ supp(alpha) with x^alpha / prod(W) in `ideal`.
SimplicialComplex upper_koszul(const MonomialIdeal& ideal, const Monomial& alpha,
                               std::size_t max_faces = std::size_t{1} << 16);

/// Rank of reduced homology over Q in each dimension -1..dim(K). Empty for
/// the void complex.
std::map<int, std::size_t> reduced_homology_ranks(const SimplicialComplex& k,
                                                  std::size_t max_faces = std::size_t{1} << 16);

/// Rank over Q of an integer matrix by fraction-free (Bareiss) elimination.
/// Runs in checked 64-bit arithmetic and switches to arbitrary precision on
/// overflow.
std::size_t integer_rank(std::vector<std::vector<long long>> rows);

struct BettiTable {
  std::map<std::pair<int, unsigned>, std::uint64_t> entries;            // (i, j)
  std::map<std::pair<int, Monomial>, std::uint64_t> multigraded;        // (i, alpha)
  int regularity = 0;

  /// "i,j,beta" rows in (i, j) order, then "# reg=R".
  std::string to_csv() const;
  nlohmann::json multigraded_json(const std::vector<std::string>& variables) const;
};

/// Hochster's formula over the box between 0 and the componentwise maximum
/// generator exponent. Throws BudgetError when the box or a complex is too big.
BettiTable betti_table(const MonomialIdeal& ideal, const BettiBudget& budget = {});
int regularity(const MonomialIdeal& ideal, const BettiBudget& budget = {});

struct RegularityBound {
  int lhs = 0;  // reg I^(s)
  int rhs = 0;  // 2s + nu(G) - 1
  bool holds = false;
};

RegularityBound reg_lower_bound_check(const Graph& g, unsigned s, const BettiBudget& budget = {});

}  // namespace symedge
