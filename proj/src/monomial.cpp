#include "symedge/monomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace symedge {

namespace {

constexpr unsigned kMaxExponent = std::numeric_limits<Exponent>::max();

Exponent checked(unsigned long long e) {
  if (e > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
  return static_cast<Exponent>(e);
}

void require_same_size(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("monomials over different variable counts");
}

}  // namespace

Monomial::Monomial(std::initializer_list<unsigned> exps) {
  exps_.reserve(exps.size());
  for (unsigned e : exps) {
    exps_.push_back(checked(e));
    degree_ += e;
  }
}

Monomial Monomial::from_exponents(std::span<const unsigned> exps) {
  Monomial m(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) m.set(i, exps[i]);
  return m;
}

Monomial Monomial::from_support(std::size_t nvars, VertexMask mask) {
  Monomial m(nvars);
  for (std::size_t i = 0; i < nvars; ++i)
    if ((mask >> i) & 1U) m.set(i, 1);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  Exponent v = checked(e);
  degree_ = degree_ - exps_.at(i) + v;
  exps_[i] = v;
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

VertexMask Monomial::support() const {
  VertexMask m = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0) m |= VertexMask{1} << i;
  return m;
}

bool Monomial::divides(const Monomial& m) const {
  if (degree_ > m.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > m.exps_[i]) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& d) const {
  require_same_size(*this, d);
  if (!d.divides(*this)) throw std::invalid_argument("monomial division with remainder");
  Monomial out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= d.exps_[i];
  out.degree_ -= d.degree_;
  return out;
}

Monomial Monomial::colon(const Monomial& b) const {
  require_same_size(*this, b);
  Monomial out = *this;
  unsigned deg = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    out.exps_[i] = exps_[i] > b.exps_[i] ? static_cast<Exponent>(exps_[i] - b.exps_[i]) : 0;
    deg += out.exps_[i];
  }
  out.degree_ = deg;
  return out;
}

Monomial Monomial::pow(unsigned k) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    out.exps_[i] = checked(static_cast<unsigned long long>(exps_[i]) * k);
  out.degree_ = degree_ * k;
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_size(a, b);
  Monomial out = a;
  for (std::size_t i = 0; i < a.exps_.size(); ++i)
    out.exps_[i] = checked(static_cast<unsigned>(a.exps_[i]) + b.exps_[i]);
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_size(a, b);
  Monomial out = a;
  unsigned deg = 0;
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    deg += out.exps_[i];
  }
  out.degree_ = deg;
  return out;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_size(a, b);
  Monomial out = a;
  unsigned deg = 0;
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    out.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    deg += out.exps_[i];
  }
  out.degree_ = deg;
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  return std::lexicographical_compare_three_way(a.exps_.begin(), a.exps_.end(), b.exps_.begin(),
                                                b.exps_.end());
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Exponent e : m.exponents()) {
    h ^= e;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string to_string(const Monomial& m, std::span<const std::string> variables) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < variables.size() ? variables[i] : "v" + std::to_string(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

}  // namespace symedge
