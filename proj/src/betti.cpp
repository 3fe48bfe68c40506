#include "symedge/betti.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "symedge/errors.hpp"
#include "symedge/symbolic.hpp"

namespace symedge {

namespace {

struct Overflow {};

long long mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

long long sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

using Big = boost::multiprecision::cpp_int;

Big mul(const Big& a, const Big& b) { return a * b; }
Big sub(const Big& a, const Big& b) { return a - b; }

// Fraction-free elimination. After each pivot step every active entry is a
// minor of the original matrix, so the division by the previous pivot is exact.
template <typename T>
std::size_t bareiss_rank(std::vector<std::vector<T>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  T prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    const T pivot = m[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const T lead = m[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        T v = sub(mul(pivot, m[i][j]), mul(lead, m[rank][j]));
        m[i][j] = v / prev;
      }
      m[i][c] = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

template <typename F>
void for_each_bit(VertexMask m, F&& f) {
  while (m != 0) {
    f(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
}

Monomial remove_face(const Monomial& alpha, VertexMask w) {
  Monomial out = alpha;
  for_each_bit(w, [&](std::size_t i) { out.set(i, out[i] - 1); });
  return out;
}

}  // namespace

std::size_t integer_rank(std::vector<std::vector<long long>> rows) {
  try {
    return bareiss_rank<long long>(rows);
  } catch (const Overflow&) {
    std::vector<std::vector<Big>> big;
    big.reserve(rows.size());
    for (const auto& r : rows) big.emplace_back(r.begin(), r.end());
    return bareiss_rank<Big>(std::move(big));
  }
}

SimplicialComplex SimplicialComplex::void_complex(VertexMask ground) {
  SimplicialComplex k;
  k.ground_ = ground;
  return k;
}

SimplicialComplex::SimplicialComplex(VertexMask ground, std::vector<VertexMask> faces)
    : ground_(ground), void_(faces.empty()) {
  std::sort(faces.begin(), faces.end(), [](VertexMask a, VertexMask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  for (auto f : faces) {
    if ((f & ~ground) != 0) throw std::invalid_argument("face outside the ground set");
    bool covered = std::any_of(facets_.begin(), facets_.end(),
                               [&](VertexMask big) { return (f & ~big) == 0; });
    if (!covered) facets_.push_back(f);
  }
  std::sort(facets_.begin(), facets_.end());
}

bool SimplicialComplex::has_face(VertexMask w) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](VertexMask f) { return (w & ~f) == 0; });
}

std::vector<VertexMask> SimplicialComplex::faces(std::size_t max_faces) const {
  std::vector<VertexMask> out;
  if (void_) return out;
  for (auto f : facets_) {
    if (std::popcount(f) >= 63) throw BudgetError("facet too large to enumerate");
    // Every subset of the facet, via the standard submask walk.
    for (VertexMask sub = f;; sub = (sub - 1) & f) {
      out.push_back(sub);
      if (sub == 0) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.size() > max_faces)
      throw BudgetError("simplicial complex exceeds " + std::to_string(max_faces) + " faces");
  }
  std::sort(out.begin(), out.end(), [](VertexMask a, VertexMask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (auto face : faces()) {
    auto k = static_cast<std::size_t>(std::popcount(face));
    if (f.size() <= k) f.resize(k + 1, 0);
    ++f[k];
  }
  return f;
}

namespace {

// Faces are downward closed, so growing each face by a larger vertex
// reaches every face exactly once.
std::vector<VertexMask> koszul_faces(const DivisorIndex& index, const Monomial& alpha,
                                     std::size_t max_faces) {
  const VertexMask support = alpha.support();
  std::vector<VertexMask> all{0};
  std::vector<VertexMask> level{0};
  while (!level.empty()) {
    std::vector<VertexMask> next;
    for (auto f : level) {
      VertexMask below = f == 0 ? 0 : (VertexMask{2} << (63 - std::countl_zero(f))) - 1;
      for_each_bit(support & ~below, [&](std::size_t v) {
        VertexMask g = f | (VertexMask{1} << v);
        if (index.has_divisor_of(remove_face(alpha, g))) next.push_back(g);
      });
    }
    all.insert(all.end(), next.begin(), next.end());
    if (all.size() > max_faces)
      throw BudgetError("upper-Koszul complex exceeds " + std::to_string(max_faces) + " faces");
    level = std::move(next);
  }
  return all;
}

}  // namespace

SimplicialComplex upper_koszul(const MonomialIdeal& ideal, const Monomial& alpha,
                               std::size_t max_faces) {
  if (!contains(ideal, alpha)) return SimplicialComplex::void_complex(alpha.support());
  DivisorIndex index(ideal);
  return SimplicialComplex(alpha.support(), koszul_faces(index, alpha, max_faces));
}

namespace {

// Reduced homology ranks from a face list sorted by size, indices into
// `by_size[c]` for faces with c vertices.
std::map<int, std::size_t> ranks_from_faces(const std::vector<std::vector<VertexMask>>& by_size) {
  const std::size_t top = by_size.size();  // sizes 0..top-1
  std::vector<std::size_t> boundary_rank(top + 1, 0);
  for (std::size_t c = 1; c < top; ++c) {
    const auto& src = by_size[c];
    const auto& dst = by_size[c - 1];
    std::vector<std::vector<long long>> rows;
    rows.reserve(src.size());
    for (auto face : src) {
      std::vector<long long> row(dst.size(), 0);
      long long sign = 1;
      for_each_bit(face, [&](std::size_t v) {
        VertexMask sub = face & ~(VertexMask{1} << v);
        auto it = std::lower_bound(dst.begin(), dst.end(), sub);
        row[static_cast<std::size_t>(it - dst.begin())] = sign;
        sign = -sign;
      });
      rows.push_back(std::move(row));
    }
    boundary_rank[c] = integer_rank(std::move(rows));
  }
  std::map<int, std::size_t> out;
  for (std::size_t c = 0; c < top; ++c)
    out[static_cast<int>(c) - 1] = by_size[c].size() - boundary_rank[c] - boundary_rank[c + 1];
  return out;
}

std::vector<std::vector<VertexMask>> group_by_size(const std::vector<VertexMask>& faces) {
  std::vector<std::vector<VertexMask>> by_size;
  for (auto f : faces) {
    auto c = static_cast<std::size_t>(std::popcount(f));
    if (by_size.size() <= c) by_size.resize(c + 1);
    by_size[c].push_back(f);
  }
  for (auto& v : by_size) std::sort(v.begin(), v.end());
  return by_size;
}

bool has_cone_point(const std::vector<VertexMask>& facets) {
  VertexMask common = ~VertexMask{0};
  for (auto f : facets) common &= f;
  return !facets.empty() && common != 0;
}

}  // namespace

std::map<int, std::size_t> reduced_homology_ranks(const SimplicialComplex& k,
                                                  std::size_t max_faces) {
  if (k.is_void()) return {};
  return ranks_from_faces(group_by_size(k.faces(max_faces)));
}

std::string BettiTable::to_csv() const {
  std::ostringstream os;
  os << "i,j,beta\n";
  for (const auto& [key, beta] : entries) os << key.first << ',' << key.second << ',' << beta << '\n';
  os << "# reg=" << regularity << '\n';
  return os.str();
}

nlohmann::json BettiTable::multigraded_json(const std::vector<std::string>& variables) const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [key, beta] : multigraded) {
    nlohmann::json degree = nlohmann::json::array();
    for (auto e : key.second.exponents()) degree.push_back(static_cast<unsigned>(e));
    rows.push_back({{"i", key.first}, {"alpha", degree}, {"beta", beta}});
  }
  return {{"variables", variables}, {"entries", rows}, {"regularity", regularity}};
}

BettiTable betti_table(const MonomialIdeal& ideal, const BettiBudget& budget) {
  if (ideal.is_zero()) throw std::invalid_argument("Betti table of the zero ideal");
  const std::size_t n = ideal.variable_count();
  std::vector<unsigned> top(n, 0);
  for (const auto& g : ideal.generators())
    for (std::size_t i = 0; i < n; ++i) top[i] = std::max(top[i], g[i]);
  std::size_t box = 1;
  for (auto t : top) {
    if (box > budget.max_box_points / (t + 1))
      throw BudgetError("Betti box exceeds " + std::to_string(budget.max_box_points) + " points");
    box *= t + 1;
  }

  BettiTable table;
  DivisorIndex index(ideal);
  Monomial alpha(n);
  std::vector<unsigned> local_top(n);
  for (std::size_t step = 0; step < box; ++step) {
    if (step > 0) {
      for (std::size_t i = 0; i < n; ++i) {
        if (alpha[i] < top[i]) {
          alpha.set(i, alpha[i] + 1);
          break;
        }
        alpha.set(i, 0);
      }
    }
    if (!index.has_divisor_of(alpha)) continue;
    // If alpha is not the lcm of the generators dividing it, some variable
    // exceeds every such generator's exponent and is a cone point.
    std::fill(local_top.begin(), local_top.end(), 0);
    for (const auto& g : ideal.generators())
      if (g.divides(alpha))
        for (std::size_t i = 0; i < n; ++i) local_top[i] = std::max(local_top[i], g[i]);
    bool is_lcm = true;
    for (std::size_t i = 0; i < n && is_lcm; ++i) is_lcm = local_top[i] == alpha[i];
    if (!is_lcm) continue;

    auto faces = koszul_faces(index, alpha, budget.max_faces);
    if (has_cone_point(SimplicialComplex(alpha.support(), faces).facets())) continue;
    for (const auto& [dim, rank] : ranks_from_faces(group_by_size(faces))) {
      if (rank == 0) continue;
      const int i = dim + 1;
      table.multigraded[{i, alpha}] += rank;
      table.entries[{i, alpha.degree()}] += rank;
    }
  }
  bool first = true;
  for (const auto& [key, beta] : table.entries) {
    int r = static_cast<int>(key.second) - key.first;
    if (first || r > table.regularity) table.regularity = r;
    first = false;
  }
  return table;
}

int regularity(const MonomialIdeal& ideal, const BettiBudget& budget) {
  return betti_table(ideal, budget).regularity;
}

RegularityBound reg_lower_bound_check(const Graph& g, unsigned s, const BettiBudget& budget) {
  RegularityBound out;
  out.lhs = regularity(symbolic_power_cover(g, s).ideal, budget);
  out.rhs = static_cast<int>(2 * s + induced_matching_number(g)) - 1;
  out.holds = out.lhs >= out.rhs;
  return out;
}

}  // namespace symedge
