// Finite groups as dense multiplication tables.
//
// Element 0 is always the identity. Every constructor relabels its input so
// that this holds, and derives the inverse table.

#ifndef RELCOMM_GROUP_TABLE_HPP_
#define RELCOMM_GROUP_TABLE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"

namespace relcomm {

using Elem = std::uint32_t;

inline constexpr std::size_t default_order_cap = 20000;

class GroupTable {
public:
  static constexpr Elem identity = 0;

  GroupTable() : GroupTable(1, {0}) {}

  std::size_t order() const noexcept { return n_; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[std::size_t(a) * n_ + b]; }
  Elem inv(Elem a) const noexcept { return inv_[a]; }
  std::span<const Elem> row(Elem a) const noexcept {
    return {mul_.data() + std::size_t(a) * n_, n_};
  }
  std::span<const Elem> table() const noexcept { return mul_; }

  // g x g^-1
  Elem conj(Elem g, Elem x) const noexcept { return mul(mul(g, x), inv(g)); }
  // [x, y] = x y x^-1 y^-1
  Elem commutator(Elem x, Elem y) const noexcept {
    return mul(mul(mul(x, y), inv_[x]), inv_[y]);
  }
  Elem power(Elem x, std::uint64_t k) const noexcept {
    Elem r = identity;
    Elem base = x;
    while (k) {
      if (k & 1)
        r = mul(r, base);
      base = mul(base, base);
      k >>= 1;
    }
    return r;
  }
  bool commute(Elem x, Elem y) const noexcept { return mul(x, y) == mul(y, x); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Elem a) const {
    return labels_.empty() ? std::to_string(a) : labels_[a];
  }

  bool is_abelian() const noexcept {
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = a + 1; b < n_; ++b)
        if (mul(a, b) != mul(b, a))
          return false;
    return true;
  }

  friend bool operator==(const GroupTable& a, const GroupTable& b) {
    return a.n_ == b.n_ && a.mul_ == b.mul_;
  }

  // For constructors whose multiplication is a group law by construction
  // (closure of permutations, direct products, collection). Requires
  // identity at 0 and a Latin-square table; inverses are read off row 0
  // hits. Call audit() when in doubt.
  static GroupTable trusted(std::size_t n, std::vector<Elem> mul,
                            std::vector<std::string> labels = {}) {
    return GroupTable(n, std::move(mul), std::move(labels));
  }

private:
  GroupTable(std::size_t n, std::vector<Elem> mul, std::vector<std::string> labels = {})
    : n_(n), mul_(std::move(mul)), inv_(n, identity), labels_(std::move(labels)) {
    for (Elem a = 0; a < n_; ++a) {
      auto r = row(a);
      for (Elem b = 0; b < n_; ++b)
        if (r[b] == identity) {
          inv_[a] = b;
          break;
        }
    }
  }

  std::size_t n_;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
  std::vector<std::string> labels_;
};

namespace detail {

// Latin square, identity at 0, two-sided inverses, associativity. The first
// failure is reported with the offending row/column/triple.
inline void validate_table(std::size_t n, std::span<const Elem> mul) {
  auto at = [&](std::size_t a, std::size_t b) { return mul[a * n + b]; };
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;
  for (std::size_t r = 0; r < n; ++r) {
    ++stamp;
    for (std::size_t c = 0; c < n; ++c) {
      Elem v = at(r, c);
      if (v >= n)
        fail(Errc::not_latin_square, "entry out of range at row " + std::to_string(r) +
                                         ", column " + std::to_string(c));
      if (seen[v] == stamp)
        fail(Errc::not_latin_square, "row " + std::to_string(r) + " repeats element " +
                                         std::to_string(v));
      seen[v] = stamp;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    ++stamp;
    for (std::size_t r = 0; r < n; ++r) {
      Elem v = at(r, c);
      if (seen[v] == stamp)
        fail(Errc::not_latin_square, "column " + std::to_string(c) + " repeats element " +
                                         std::to_string(v));
      seen[v] = stamp;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    if (at(0, a) != a || at(a, 0) != a)
      fail(Errc::no_identity, "element 0 is not a two-sided identity (fails at " +
                                  std::to_string(a) + ")");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t ab = at(a, b);
      for (std::size_t c = 0; c < n; ++c)
        if (at(ab, c) != at(a, at(b, c)))
          fail(Errc::not_associative, "associativity fails at (" + std::to_string(a) + ", " +
                                          std::to_string(b) + ", " + std::to_string(c) + ")");
    }
}

} // namespace detail

// Full re-validation of a table: Latin square, identity, inverses,
// associativity over all n^3 triples.
inline void audit(const GroupTable& g) {
  detail::validate_table(g.order(), g.table());
  for (Elem a = 0; a < g.order(); ++a)
    if (g.mul(a, g.inv(a)) != GroupTable::identity || g.mul(g.inv(a), a) != GroupTable::identity)
      fail(Errc::no_identity, "inverse table wrong at " + std::to_string(a));
}

// Validates an arbitrary Cayley table. The identity is located and moved to
// index 0 by swapping it with element 0.
inline GroupTable from_cayley_table(const std::vector<std::vector<Elem>>& table,
                                    std::vector<std::string> labels = {}) {
  const std::size_t n = table.size();
  if (n == 0)
    fail(Errc::not_latin_square, "empty table");
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n)
      fail(Errc::not_latin_square, "row " + std::to_string(r) + " has " +
                                       std::to_string(table[r].size()) + " entries, expected " +
                                       std::to_string(n));
    for (Elem v : table[r]) {
      if (v >= n)
        fail(Errc::not_latin_square, "entry " + std::to_string(v) + " out of range in row " +
                                         std::to_string(r));
      flat.push_back(v);
    }
  }
  if (!labels.empty() && labels.size() != n)
    fail(Errc::parse_error, "expected " + std::to_string(n) + " labels, got " +
                                std::to_string(labels.size()));
  std::optional<Elem> e;
  for (Elem a = 0; a < n && !e; ++a) {
    bool ok = true;
    for (Elem b = 0; b < n && ok; ++b)
      ok = flat[a * n + b] == b && flat[b * n + a] == b;
    if (ok)
      e = a;
  }
  if (!e) {
    // Report Latin-square defects ahead of the missing identity.
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<bool> seen(n, false);
      for (std::size_t c = 0; c < n; ++c) {
        if (seen[flat[r * n + c]])
          fail(Errc::not_latin_square, "row " + std::to_string(r) + " repeats element " +
                                           std::to_string(flat[r * n + c]));
        seen[flat[r * n + c]] = true;
      }
    }
    fail(Errc::no_identity, "no two-sided identity element");
  }
  if (*e != 0) {
    auto swap_id = [&](Elem x) -> Elem { return x == 0 ? *e : x == *e ? 0 : x; };
    std::vector<Elem> relabeled(n * n);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        relabeled[swap_id(a) * n + swap_id(b)] = swap_id(flat[a * n + b]);
    flat = std::move(relabeled);
    if (!labels.empty())
      std::swap(labels[0], labels[*e]);
  }
  detail::validate_table(n, flat);
  return GroupTable::trusted(n, std::move(flat), std::move(labels));
}

using Permutation = std::vector<Elem>;

// Disjoint-cycle rendering, "()" for the identity.
inline std::string cycle_notation(const Permutation& p) {
  std::string out;
  std::vector<bool> done(p.size(), false);
  for (Elem i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == i)
      continue;
    out += "(";
    Elem j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      out += (first ? "" : " ") + std::to_string(j);
      first = false;
      j = p[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

namespace detail {

struct PermHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Elem v : p)
      h = (h ^ v) * 1099511628211ull;
    return h;
  }
};

inline bool is_bijection(const Permutation& p) {
  std::vector<bool> hit(p.size(), false);
  for (Elem v : p) {
    if (v >= p.size() || hit[v])
      return false;
    hit[v] = true;
  }
  return true;
}

} // namespace detail

// Permutation group generated by `generators`, elements numbered in
// breadth-first discovery order from the identity. Products compose right to
// left: (a*b)(i) = a(b(i)).
inline GroupTable from_permutations(const std::vector<Permutation>& generators,
                                    std::size_t domain = 0,
                                    std::size_t cap = default_order_cap) {
  for (const auto& g : generators)
    domain = std::max(domain, g.size());
  std::vector<Permutation> gens;
  for (auto g : generators) {
    if (!detail::is_bijection(g))
      fail(Errc::invalid_argument, "generator is not a bijection: " + cycle_notation(g));
    for (Elem i = Elem(g.size()); i < domain; ++i)
      g.push_back(i);
    gens.push_back(std::move(g));
  }
  Permutation id(domain);
  for (Elem i = 0; i < domain; ++i)
    id[i] = i;

  auto compose = [domain](const Permutation& a, const Permutation& b) {
    Permutation r(domain);
    for (std::size_t i = 0; i < domain; ++i)
      r[i] = a[b[i]];
    return r;
  };

  std::vector<Permutation> elems{id};
  std::unordered_map<Permutation, Elem, detail::PermHash> index{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& s : gens) {
      Permutation next = compose(elems[head], s);
      if (index.contains(next))
        continue;
      if (elems.size() >= cap)
        fail(Errc::closure_cap_exceeded, "permutation closure exceeds cap " + std::to_string(cap));
      index.emplace(next, Elem(elems.size()));
      elems.push_back(std::move(next));
    }
  }
  const std::size_t n = elems.size();
  std::vector<Elem> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      mul[a * n + b] = index.at(compose(elems[a], elems[b]));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : elems)
    labels.push_back(cycle_notation(p));
  return GroupTable::trusted(n, std::move(mul), std::move(labels));
}

// (a, b) is stored at index a * |G2| + b.
inline GroupTable direct_product(const GroupTable& g1, const GroupTable& g2,
                                 std::size_t cap = default_order_cap) {
  const std::size_t n1 = g1.order(), n2 = g2.order(), n = n1 * n2;
  if (n > cap)
    fail(Errc::closure_cap_exceeded, "direct product order " + std::to_string(n) +
                                         " exceeds cap " + std::to_string(cap));
  std::vector<Elem> mul(n * n);
  for (std::size_t a1 = 0; a1 < n1; ++a1)
    for (std::size_t a2 = 0; a2 < n2; ++a2) {
      Elem* out = &mul[(a1 * n2 + a2) * n];
      for (std::size_t b1 = 0; b1 < n1; ++b1) {
        Elem c1 = g1.mul(Elem(a1), Elem(b1));
        for (std::size_t b2 = 0; b2 < n2; ++b2)
          out[b1 * n2 + b2] = Elem(c1 * n2 + g2.mul(Elem(a2), Elem(b2)));
      }
    }
  std::vector<std::string> labels;
  if (!g1.labels().empty() || !g2.labels().empty()) {
    labels.reserve(n);
    for (Elem a1 = 0; a1 < n1; ++a1)
      for (Elem a2 = 0; a2 < n2; ++a2)
        labels.push_back("(" + g1.label(a1) + "," + g2.label(a2) + ")");
  }
  return GroupTable::trusted(n, std::move(mul), std::move(labels));
}

inline std::uint64_t element_order(const GroupTable& g, Elem x) {
  std::uint64_t k = 1;
  for (Elem y = x; y != GroupTable::identity; y = g.mul(y, x))
    ++k;
  return k;
}

inline std::uint64_t exponent(const GroupTable& g) {
  std::uint64_t e = 1;
  for (Elem x = 0; x < g.order(); ++x)
    e = std::lcm(e, element_order(g, x));
  return e;
}

inline std::optional<std::uint64_t> smallest_prime_divisor(std::uint64_t n) {
  if (n < 2)
    return std::nullopt;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0)
      return p;
  return n;
}

inline std::optional<std::uint64_t> smallest_prime_divisor(const GroupTable& g) {
  return smallest_prime_divisor(g.order());
}

inline bool is_prime(std::uint64_t n) {
  return n >= 2 && smallest_prime_divisor(n) == n;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0)
        n /= p;
    }
  if (n > 1)
    out.push_back(n);
  return out;
}

} // namespace relcomm

#endif
