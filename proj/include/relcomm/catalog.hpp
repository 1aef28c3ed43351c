// Named group families and the group-spec grammar that selects them.
//
//   product := factor ('x' factor)*
//   factor  := FAMILY ':' param | '(' product ')'
//
// Families: C:n, D:2n, Q:8, Dic:4n, S:n, A:n (n <= 6), ESp:p, ESm:p, X5:p,
// EA:p^k.

#ifndef RELCOMM_CATALOG_HPP_
#define RELCOMM_CATALOG_HPP_

#include <cctype>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "collector.hpp"
#include "conjugacy.hpp"
#include "error.hpp"
#include "group_table.hpp"
#include "subgroup.hpp"
#include "subgroup_lattice.hpp"

namespace relcomm {

enum class Family {
  cyclic,
  dihedral,
  quaternion,
  dicyclic,
  symmetric,
  alternating,
  extraspecial_exp_p,
  extraspecial_exp_p2,
  x5,
  elementary_abelian,
  product,
};

struct GroupSpec {
  Family family = Family::cyclic;
  std::uint64_t param = 1;     // n, 2n, 4n, p ...
  std::uint64_t power = 1;     // k in EA:p^k
  std::vector<GroupSpec> factors;  // exactly two for products

  std::string str() const;
  std::uint64_t order() const;
};

struct FamilyInfo {
  const char* name;
  Family family;
  const char* syntax;
  const char* range;
  const char* description;
};

inline const std::vector<FamilyInfo>& families() {
  static const std::vector<FamilyInfo> table = {
    {"C", Family::cyclic, "C:n", "n >= 1", "cyclic group of order n"},
    {"D", Family::dihedral, "D:2n", "2n even, 2n >= 2", "dihedral group of order 2n"},
    {"Q", Family::quaternion, "Q:8", "8 only", "quaternion group of order 8"},
    {"Dic", Family::dicyclic, "Dic:4n", "4n divisible by 4, 4n >= 4", "dicyclic group of order 4n"},
    {"S", Family::symmetric, "S:n", "1 <= n <= 6", "symmetric group on n points"},
    {"A", Family::alternating, "A:n", "1 <= n <= 6", "alternating group on n points"},
    {"ESp", Family::extraspecial_exp_p, "ESp:p", "odd prime p",
     "extraspecial group of order p^3 and exponent p (Heisenberg group mod p)"},
    {"ESm", Family::extraspecial_exp_p2, "ESm:p", "prime p",
     "extraspecial group of order p^3 and exponent p^2: <a,b | a^(p^2), b^p, bab^-1 = a^(1+p)>"},
    {"X5", Family::x5, "X5:p", "odd prime p",
     "order p^5: <a1,a2,b,c1,c2 | [a1,a2]=b, [a1,b]=c1, [a2,b]=c2, c1,c2 central, p-th powers 1>"},
    {"EA", Family::elementary_abelian, "EA:p^k", "prime p, k >= 1", "elementary abelian group of order p^k"},
  };
  return table;
}

inline std::string GroupSpec::str() const {
  if (family == Family::product) {
    auto wrap = [](const GroupSpec& s) {
      return s.family == Family::product ? "(" + s.str() + ")" : s.str();
    };
    // Products are left-nested, so the left factor never needs parentheses.
    return factors[0].str() + " x " + wrap(factors[1]);
  }
  for (const auto& f : families())
    if (f.family == family) {
      std::string s = std::string(f.name) + ":" + std::to_string(param);
      if (family == Family::elementary_abelian)
        s += "^" + std::to_string(power);
      return s;
    }
  return "?";
}

inline std::uint64_t GroupSpec::order() const {
  auto ipow = [](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
      if (r > (std::uint64_t(1) << 40))
        return std::uint64_t(1) << 41;  // saturate; far beyond any cap
      r *= b;
    }
    return r;
  };
  switch (family) {
    case Family::cyclic:
    case Family::dihedral:
    case Family::quaternion:
    case Family::dicyclic:
      return param;
    case Family::symmetric:
    case Family::alternating: {
      std::uint64_t f = 1;
      for (std::uint64_t i = 2; i <= param; ++i)
        f *= i;
      return family == Family::alternating && param >= 2 ? f / 2 : f;
    }
    case Family::extraspecial_exp_p:
    case Family::extraspecial_exp_p2:
      return ipow(param, 3);
    case Family::x5:
      return ipow(param, 5);
    case Family::elementary_abelian:
      return ipow(param, power);
    case Family::product: {
      std::uint64_t a = factors[0].order(), b = factors[1].order();
      return a > (std::uint64_t(1) << 40) / std::max<std::uint64_t>(b, 1) ? std::uint64_t(1) << 41
                                                                           : a * b;
    }
  }
  return 0;
}

namespace detail {

class SpecParser {
public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec s = product();
    skip_ws();
    if (pos_ != text_.size())
      error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return s;
  }

private:
  [[noreturn]] void error(const std::string& what) const {
    fail(Errc::parse_error, "group spec column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  GroupSpec product() {
    GroupSpec left = factor();
    for (;;) {
      skip_ws();
      if (pos_ < text_.size() && (text_[pos_] == 'x' || text_[pos_] == '*')) {
        ++pos_;
        GroupSpec right = factor();
        GroupSpec p;
        p.family = Family::product;
        p.factors = {std::move(left), std::move(right)};
        left = std::move(p);
      } else {
        return left;
      }
    }
  }

  GroupSpec factor() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      GroupSpec inner = product();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')')
        error("expected ')'");
      ++pos_;
      return inner;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    if (name.empty())
      error("expected a family name");
    const FamilyInfo* info = nullptr;
    for (const auto& f : families())
      if (name == f.name)
        info = &f;
    if (!info) {
      pos_ = start;
      error("unknown family '" + name + "'");
    }
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != ':')
      error("expected ':' after " + name);
    ++pos_;
    skip_ws();
    GroupSpec s;
    s.family = info->family;
    s.param = number();
    if (s.family == Family::elementary_abelian) {
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != '^')
        error("expected '^' in EA:p^k");
      ++pos_;
      s.power = number();
    }
    validate(s);
    return s;
  }

  std::uint64_t number() {
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + std::uint64_t(text_[pos_] - '0');
      if (v > 1'000'000'000)
        error("number too large");
      ++pos_;
    }
    if (pos_ == start)
      error("expected a number");
    return v;
  }

  static void unsupported(const GroupSpec& s, const std::string& why) {
    fail(Errc::unsupported_parameter, s.str() + ": " + why);
  }

  static void validate(const GroupSpec& s) {
    const std::uint64_t n = s.param;
    switch (s.family) {
      case Family::cyclic:
        if (n < 1) unsupported(s, "order must be >= 1");
        break;
      case Family::dihedral:
        if (n < 2 || n % 2) unsupported(s, "order must be even and >= 2");
        break;
      case Family::quaternion:
        if (n != 8) unsupported(s, "only Q:8 is defined; use Dic:4n for larger orders");
        break;
      case Family::dicyclic:
        if (n < 4 || n % 4) unsupported(s, "order must be a positive multiple of 4");
        break;
      case Family::symmetric:
      case Family::alternating:
        if (n < 1 || n > 6) unsupported(s, "degree must be between 1 and 6");
        break;
      case Family::extraspecial_exp_p:
        if (!is_prime(n) || n == 2) unsupported(s, "p is an odd prime");
        break;
      case Family::extraspecial_exp_p2:
        if (!is_prime(n)) unsupported(s, "p must be prime");
        break;
      case Family::x5:
        if (!is_prime(n) || n == 2) unsupported(s, "p is an odd prime");
        break;
      case Family::elementary_abelian:
        if (!is_prime(n)) unsupported(s, "p must be prime");
        if (s.power < 1) unsupported(s, "k must be >= 1");
        break;
      case Family::product:
        break;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline GroupTable cyclic(std::uint64_t n) {
  std::vector<Elem> mul(n * n);
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b)
      mul[a * n + b] = Elem((a + b) % n);
  std::vector<std::string> labels;
  for (std::uint64_t a = 0; a < n; ++a)
    labels.push_back(a == 0 ? "1" : a == 1 ? "a" : "a^" + std::to_string(a));
  return GroupTable::trusted(n, std::move(mul), std::move(labels));
}

inline std::string word_label(const std::vector<std::pair<std::string, std::uint64_t>>& parts) {
  std::string out;
  for (const auto& [sym, e] : parts) {
    if (e == 0)
      continue;
    out += sym;
    if (e > 1)
      out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

// r^i s^j at index i + n j, with s r s^-1 = r^-1.
inline GroupTable dihedral(std::uint64_t order) {
  const std::uint64_t n = order / 2;
  std::vector<Elem> mul(order * order);
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = 0; j < 2; ++j)
      for (std::uint64_t k = 0; k < n; ++k)
        for (std::uint64_t l = 0; l < 2; ++l) {
          std::uint64_t r = j == 0 ? (i + k) % n : (i + n - k) % n;
          mul[(i + n * j) * order + (k + n * l)] = Elem(r + n * ((j + l) % 2));
        }
  std::vector<std::string> labels;
  for (std::uint64_t j = 0; j < 2; ++j)
    for (std::uint64_t i = 0; i < n; ++i)
      labels.push_back(word_label({{"r", i}, {"s", j}}));
  return GroupTable::trusted(order, std::move(mul), std::move(labels));
}

// a^i x^j at index i + 2n j, with a^(2n) = 1, x^2 = a^n, x a x^-1 = a^-1.
inline GroupTable dicyclic(std::uint64_t order) {
  const std::uint64_t n = order / 4, m = 2 * n;
  std::vector<Elem> mul(order * order);
  for (std::uint64_t i = 0; i < m; ++i)
    for (std::uint64_t j = 0; j < 2; ++j)
      for (std::uint64_t k = 0; k < m; ++k)
        for (std::uint64_t l = 0; l < 2; ++l) {
          std::uint64_t e = j == 0 ? i + k : i + m - k;
          std::uint64_t x = j + l;
          if (x == 2) {
            e += n;
            x = 0;
          }
          mul[(i + m * j) * order + (k + m * l)] = Elem(e % m + m * x);
        }
  std::vector<std::string> labels;
  for (std::uint64_t j = 0; j < 2; ++j)
    for (std::uint64_t i = 0; i < m; ++i)
      labels.push_back(word_label({{"a", i}, {"x", j}}));
  return GroupTable::trusted(order, std::move(mul), std::move(labels));
}

inline Permutation cycle_perm(std::size_t degree, const std::vector<Elem>& cycle) {
  Permutation p(degree);
  for (Elem i = 0; i < degree; ++i)
    p[i] = i;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    p[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return p;
}

inline GroupTable symmetric(std::uint64_t n) {
  std::vector<Permutation> gens;
  if (n >= 2)
    gens.push_back(cycle_perm(n, {0, 1}));
  if (n >= 3) {
    std::vector<Elem> full(n);
    for (Elem i = 0; i < n; ++i)
      full[i] = i;
    gens.push_back(cycle_perm(n, full));
  }
  return from_permutations(gens, n);
}

// Generated by the 3-cycles (0 1 k).
inline GroupTable alternating(std::uint64_t n) {
  std::vector<Permutation> gens;
  for (Elem k = 2; k < n; ++k)
    gens.push_back(cycle_perm(n, {0, 1, k}));
  return from_permutations(gens, n);
}

// (x, y, z)(x', y', z') = (x + x', y + y', z + z' + x y'), index x + p y + p^2 z.
inline GroupTable heisenberg(std::uint64_t p) {
  const std::uint64_t n = p * p * p;
  std::vector<Elem> mul(n * n);
  for (std::uint64_t a = 0; a < n; ++a) {
    std::uint64_t x = a % p, y = a / p % p, z = a / (p * p);
    for (std::uint64_t b = 0; b < n; ++b) {
      std::uint64_t x2 = b % p, y2 = b / p % p, z2 = b / (p * p);
      mul[a * n + b] = Elem((x + x2) % p + p * ((y + y2) % p) + p * p * ((z + z2 + x * y2) % p));
    }
  }
  std::vector<std::string> labels;
  for (std::uint64_t a = 0; a < n; ++a)
    labels.push_back(word_label({{"x", a % p}, {"y", a / p % p}, {"z", a / (p * p)}}));
  return GroupTable::trusted(n, std::move(mul), std::move(labels));
}

// a^i b^j at index i + p^2 j; b^j a^k b^-j = a^(k (1+p)^j).
inline GroupTable extraspecial_exp_p2(std::uint64_t p) {
  const std::uint64_t m = p * p, n = m * p;
  std::vector<std::uint64_t> twist(p);
  twist[0] = 1;
  for (std::uint64_t j = 1; j < p; ++j)
    twist[j] = twist[j - 1] * (1 + p) % m;
  std::vector<Elem> mul(n * n);
  for (std::uint64_t i = 0; i < m; ++i)
    for (std::uint64_t j = 0; j < p; ++j)
      for (std::uint64_t k = 0; k < m; ++k)
        for (std::uint64_t l = 0; l < p; ++l)
          mul[(i + m * j) * n + (k + m * l)] = Elem((i + k * twist[j]) % m + m * ((j + l) % p));
  std::vector<std::string> labels;
  for (std::uint64_t j = 0; j < p; ++j)
    for (std::uint64_t i = 0; i < m; ++i)
      labels.push_back(word_label({{"a", i}, {"b", j}}));
  return GroupTable::trusted(n, std::move(mul), std::move(labels));
}

// Generators a1, a2, b, c1, c2 (indices 0..4) with the commutator convention
// [x, y] = x y x^-1 y^-1:
//   [a1, a2] = b, [a1, b] = c1, [a2, b] = c2, c1 and c2 central.
// Rewritten as conjugates y^x = x^-1 y x:
//   a2^a1 = a2 b^-1 c1 c2,  b^a1 = b c1^-1,  b^a2 = b c2^-1.
inline PcCollector x5_collector(unsigned p) {
  PcCollector pc(p, 5);
  PcCollector::Word a2_a1{1};
  a2_a1.insert(a2_a1.end(), p - 1, 2);
  a2_a1.push_back(3);
  a2_a1.push_back(4);
  pc.set_conjugate(0, 1, a2_a1);
  PcCollector::Word b_a1{2};
  b_a1.insert(b_a1.end(), p - 1, 3);
  pc.set_conjugate(0, 2, b_a1);
  PcCollector::Word b_a2{2};
  b_a2.insert(b_a2.end(), p - 1, 4);
  pc.set_conjugate(1, 2, b_a2);
  return pc;
}

inline GroupTable x5(unsigned p, std::size_t cap) {
  auto pc = x5_collector(p);
  GroupTable t = pc.table(cap);
  std::vector<std::string> labels;
  labels.reserve(t.order());
  for (std::size_t i = 0; i < t.order(); ++i) {
    auto e = pc.exponents(i);
    labels.push_back(word_label({{"a1", e[0]}, {"a2", e[1]}, {"b", e[2]}, {"c1", e[3]}, {"c2", e[4]}}));
  }
  return GroupTable::trusted(t.order(), std::vector<Elem>(t.table().begin(), t.table().end()),
                             std::move(labels));
}

inline GroupTable elementary_abelian(std::uint64_t p, std::uint64_t k) {
  std::uint64_t n = 1;
  for (std::uint64_t i = 0; i < k; ++i)
    n *= p;
  std::vector<Elem> mul(n * n);
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b) {
      std::uint64_t r = 0, scale = 1, x = a, y = b;
      for (std::uint64_t i = 0; i < k; ++i) {
        r += ((x % p + y % p) % p) * scale;
        x /= p;
        y /= p;
        scale *= p;
      }
      mul[a * n + b] = Elem(r);
    }
  return GroupTable::trusted(n, std::move(mul));
}

} // namespace detail

inline GroupSpec parse_spec(std::string_view text) {
  return detail::SpecParser(text).parse();
}

inline GroupTable build_table(const GroupSpec& spec, std::size_t cap = default_order_cap) {
  if (spec.order() > cap)
    fail(Errc::closure_cap_exceeded, spec.str() + " has order " + std::to_string(spec.order()) +
                                         ", above cap " + std::to_string(cap));
  switch (spec.family) {
    case Family::cyclic: return detail::cyclic(spec.param);
    case Family::dihedral: return detail::dihedral(spec.param);
    case Family::quaternion:
    case Family::dicyclic: return detail::dicyclic(spec.param);
    case Family::symmetric: return detail::symmetric(spec.param);
    case Family::alternating: return detail::alternating(spec.param);
    case Family::extraspecial_exp_p: return detail::heisenberg(spec.param);
    case Family::extraspecial_exp_p2: return detail::extraspecial_exp_p2(spec.param);
    case Family::x5: return detail::x5(unsigned(spec.param), cap);
    case Family::elementary_abelian: return detail::elementary_abelian(spec.param, spec.power);
    case Family::product:
      return direct_product(build_table(spec.factors[0], cap), build_table(spec.factors[1], cap), cap);
  }
  fail(Errc::invalid_argument, "unknown family");
}

// Elements of p-power order. Only a subgroup (the unique Sylow p-subgroup)
// when G is nilpotent, which is checked.
inline SubgroupView sylow_subgroup(const GroupTable& g, std::uint64_t p) {
  if (!is_prime(p))
    fail(Errc::invalid_argument, std::to_string(p) + " is not prime");
  if (!is_nilpotent(g))
    fail(Errc::not_nilpotent, "Sylow subgroup requested in a non-nilpotent group");
  std::vector<Elem> out;
  for (Elem x = 0; x < g.order(); ++x) {
    std::uint64_t o = element_order(g, x);
    while (o % p == 0)
      o /= p;
    if (o == 1)
      out.push_back(x);
  }
  return SubgroupView::trusted(g, std::move(out));
}

struct Landmark {
  std::string name;
  SubgroupView subgroup;
};

// A built group with named subgroups. The table lives behind a shared
// pointer so landmarks stay valid when the entry is moved or copied.
class CatalogEntry {
public:
  CatalogEntry(GroupSpec spec, std::shared_ptr<const GroupTable> table)
    : spec_(std::move(spec)), name_(spec_.str()), table_(std::move(table)) {}

  const GroupSpec& spec() const { return spec_; }
  // The spec string, or whatever the caller named a group loaded from a file.
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const GroupTable& table() const { return *table_; }
  std::shared_ptr<const GroupTable> table_ptr() const { return table_; }
  const std::vector<Landmark>& landmarks() const { return landmarks_; }

  const SubgroupView* find(std::string_view name) const {
    for (const auto& l : landmarks_)
      if (l.name == name)
        return &l.subgroup;
    return nullptr;
  }

  const SubgroupView& landmark(std::string_view name) const {
    if (auto* s = find(name))
      return *s;
    fail(Errc::invalid_argument, "no landmark '" + std::string(name) + "' in " + name_);
  }

  void add(std::string name, SubgroupView s) { landmarks_.push_back({std::move(name), std::move(s)}); }

private:
  GroupSpec spec_;
  std::string name_;
  std::shared_ptr<const GroupTable> table_;
  std::vector<Landmark> landmarks_;
};

// Landmarks: G, trivial, center, derived, gamma<k> and zeta<k> for every
// series term, maximal (first maximal subgroup, order <= 1000) and
// sylow<p> for nilpotent groups.
inline CatalogEntry make_entry(GroupSpec spec, GroupTable table) {
  CatalogEntry entry(std::move(spec), std::make_shared<const GroupTable>(std::move(table)));
  const GroupTable& g = entry.table();
  entry.add("G", whole_group(g));
  entry.add("trivial", trivial_subgroup(g));
  entry.add("center", center(g));
  entry.add("derived", derived_subgroup(g));
  auto lower = lower_central_series(g);
  for (std::size_t k = 0; k < lower.terms.size(); ++k)
    entry.add("gamma" + std::to_string(k + 1), lower.terms[k]);
  auto upper = upper_central_series(g);
  for (std::size_t k = 1; k < upper.terms.size(); ++k)
    entry.add("zeta" + std::to_string(k), upper.terms[k]);
  if (g.order() <= maximal_subgroup_order_cap && g.order() > 1) {
    auto maxes = maximal_subgroups(g);
    entry.add("maximal", maxes.front());
  }
  if (lower.terms.back().is_trivial())
    for (std::uint64_t p : prime_divisors(g.order()))
      entry.add("sylow" + std::to_string(p), sylow_subgroup(g, p));
  return entry;
}

inline CatalogEntry build(const GroupSpec& spec, std::size_t cap = default_order_cap) {
  return make_entry(spec, build_table(spec, cap));
}

inline CatalogEntry build(std::string_view text, std::size_t cap = default_order_cap) {
  return build(parse_spec(text), cap);
}

// The groups every verification sweep runs over, by increasing order.
inline const std::vector<std::string>& standard_catalog() {
  static const std::vector<std::string> specs = {
    "C:1", "C:2", "C:3", "C:4", "EA:2^2", "C:5", "C:6", "S:3", "C:7",
    "C:8", "EA:2^3", "D:8", "Q:8", "C:4 x C:2", "EA:3^2", "D:10", "C:12",
    "D:12", "Dic:12", "A:4", "D:16", "Dic:16", "D:8 x C:2", "Q:8 x C:2",
    "S:3 x C:3", "C:6 x C:4", "S:4", "Q:8 x C:3", "D:8 x C:3", "ESp:3", "ESm:3",
    "EA:3^3", "S:3 x S:3", "Q:8 x S:3", "A:4 x C:4", "A:5", "D:8 x D:8",
    "Q:8 x D:8", "S:5", "ESp:5", "ESm:5", "ESp:3 x C:5", "X5:3",
  };
  return specs;
}

} // namespace relcomm

#endif
