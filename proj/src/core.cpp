#include "semigap/core.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace semigap {
namespace {

// Inputs this large would let a*b or intermediate products leave int64
// range; reject instead of wrapping.
constexpr std::int64_t kMaxGenerator = std::int64_t{1} << 31;

// Membership tables beyond this are not desk scale.
constexpr std::int64_t kMaxTableSize = std::int64_t{1} << 28;

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) {
    throw std::overflow_error("semigap: integer overflow in a*b");
  }
  return r;
}

// Representative of x mod m in [0, m).
std::int64_t mod_floor(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace

Bezout extended_gcd(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) {
    throw std::invalid_argument("extended_gcd: arguments must be positive");
  }
  std::int64_t r0 = a, r1 = b;
  std::int64_t x0 = 1, x1 = 0;
  std::int64_t y0 = 0, y1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    x0 = std::exchange(x1, x0 - q * x1);
    y0 = std::exchange(y1, y0 - q * y1);
  }
  return Bezout{r0, x0, y0};
}

DlsSolution dls(std::int64_t a, std::int64_t b) {
  if (a <= 1) {
    throw std::invalid_argument("dls: require a > 1");
  }
  if (b <= a) {
    throw std::invalid_argument("dls: require a < b");
  }
  if (a >= kMaxGenerator || b >= kMaxGenerator) {
    throw std::invalid_argument("dls: generators must be below 2^31");
  }
  const Bezout e = extended_gcd(a, b);
  if (e.g != 1) {
    throw std::invalid_argument("dls: generators are not coprime");
  }

  // u is the representative of a^-1 mod b in the centered interval
  // (-b/2, b/2]; v follows from a*u + b*v = 1. The boundary u = b/2
  // cannot solve a*u == 1 mod b for b > 2, so |u| < b/2 strictly.
  std::int64_t u = mod_floor(e.x, b);
  if (2 * u > b) u -= b;
  const std::int64_t v = (1 - a * u) / b;
  assert((1 - a * u) % b == 0);
  assert(2 * std::abs(u) < b);
  assert(2 * std::abs(v) <= a);
  assert(u != 0 && v != 0 && (u < 0) != (v < 0));
  return DlsSolution{u, v};
}

PairSemigroup::PairSemigroup(std::int64_t a, std::int64_t b)
    : a_(a), b_(b), dls_(semigap::dls(a, b)),
      frobenius_(checked_mul(a, b) - a - b) {}

bool PairSemigroup::contains(std::int64_t x) const {
  if (x < 0) return false;
  if (x > frobenius_) return true;
  // b*v == 1 mod a, so the Apery element of x's class mod a is k*b with
  // k = x * v mod a. Reduce both factors first to keep the product small.
  const std::int64_t k =
      mod_floor(mod_floor(x, a_) * mod_floor(dls_.v, a_), a_);
  return x >= k * b_;
}

std::vector<std::int64_t> PairSemigroup::gaps() const {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>((a_ - 1) * (b_ - 1) / 2));
  for (std::int64_t x = 1; x <= frobenius_; ++x) {
    if (!contains(x)) out.push_back(x);
  }
  return out;
}

GenericSemigroup::GenericSemigroup(std::vector<std::int64_t> generators)
    : generators_(std::move(generators)) {
  if (generators_.empty()) {
    throw std::invalid_argument("semigroup: empty generating set");
  }
  for (std::int64_t g : generators_) {
    if (g < 1) {
      throw std::invalid_argument("semigroup: generators must be positive");
    }
    if (g >= kMaxGenerator) {
      throw std::invalid_argument("semigroup: generators must be below 2^31");
    }
  }
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()),
                    generators_.end());

  std::int64_t g = 0;
  for (std::int64_t x : generators_) g = std::gcd(g, x);
  if (g != 1) {
    throw std::invalid_argument("semigroup: generators are not coprime");
  }

  const std::int64_t base = generators_.front();
  if (base == 1) {
    frobenius_ = -1;
    minimal_generators_ = {1};
    return;
  }
  if (base > kMaxTableSize) {
    throw std::length_error("semigroup: too large for a membership table");
  }

  // Smallest member per residue class mod the least generator, by
  // round-robin relaxation (each generator is an edge r -> r+g mod base).
  constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 2;
  std::vector<std::int64_t> minima(static_cast<std::size_t>(base), inf);
  minima[0] = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::int64_t r = 0; r < base; ++r) {
      if (minima[static_cast<std::size_t>(r)] >= inf) continue;
      for (std::int64_t gen : generators_) {
        const std::size_t nr = static_cast<std::size_t>((r + gen) % base);
        const std::int64_t cand = minima[static_cast<std::size_t>(r)] + gen;
        if (cand < minima[nr]) {
          minima[nr] = cand;
          changed = true;
        }
      }
    }
  }

  frobenius_ = *std::max_element(minima.begin(), minima.end()) - base;
  if (frobenius_ + 1 > kMaxTableSize) {
    throw std::length_error("semigroup: too large for a membership table");
  }
  member_.assign(static_cast<std::size_t>(frobenius_ + 1), false);
  for (std::int64_t x = 0; x <= frobenius_; ++x) {
    member_[static_cast<std::size_t>(x)] =
        minima[static_cast<std::size_t>(x % base)] <= x;
  }

  // A generator is minimal iff it is not a sum of two nonzero members.
  for (std::int64_t gen : generators_) {
    bool reducible = false;
    for (std::int64_t s = base; 2 * s <= gen && !reducible; ++s) {
      reducible = contains(s) && contains(gen - s);
    }
    if (!reducible) minimal_generators_.push_back(gen);
  }
}

bool GenericSemigroup::contains(std::int64_t x) const {
  if (x < 0) return false;
  if (x > frobenius_) return true;
  return member_[static_cast<std::size_t>(x)];
}

std::vector<std::int64_t> GenericSemigroup::gaps() const {
  std::vector<std::int64_t> out;
  for (std::int64_t x = 1; x <= frobenius_; ++x) {
    if (!member_[static_cast<std::size_t>(x)]) out.push_back(x);
  }
  return out;
}

std::vector<std::int64_t> GenericSemigroup::apery_set(std::int64_t n) const {
  if (n <= 0) {
    throw std::invalid_argument("apery_set: n must be a positive member");
  }
  if (!contains(n)) {
    throw std::invalid_argument("apery_set: n is not a member");
  }
  if (n > kMaxTableSize) {
    throw std::length_error("apery_set: n too large");
  }
  // Every residue class has a member at or below F(S)+n, so the walk ends.
  std::vector<std::int64_t> smallest(static_cast<std::size_t>(n), -1);
  std::int64_t found = 0;
  for (std::int64_t x = 0; found < n; ++x) {
    const std::size_t r = static_cast<std::size_t>(x % n);
    if (smallest[r] < 0 && contains(x)) {
      smallest[r] = x;
      ++found;
    }
  }
  std::sort(smallest.begin(), smallest.end());
  return smallest;
}

bool GenericSemigroup::is_symmetric() const {
  for (std::int64_t x = 1; x <= frobenius_; ++x) {
    if (!member_[static_cast<std::size_t>(x)] && !contains(frobenius_ - x)) {
      return false;
    }
  }
  return true;
}

}  // namespace semigap
