// Collection in a power-conjugate presentation with generators g_0..g_{k-1}
// of prime relative order p, trivial power relations, and conjugates
// g_j^{g_i} = g_i^-1 g_j g_i (i < j) given as words in g_j..g_{k-1}.
//
// Elements are exponent vectors of the normal form g_0^e0 g_1^e1 ... .

#ifndef RELCOMM_COLLECTOR_HPP_
#define RELCOMM_COLLECTOR_HPP_

#include <cstdint>
#include <vector>

#include "error.hpp"
#include "group_table.hpp"

namespace relcomm {

class PcCollector {
public:
  using Word = std::vector<unsigned>;  // generator indices, repeats allowed
  using Exponents = std::vector<unsigned>;

  PcCollector(unsigned p, unsigned rank)
    : p_(p), rank_(rank), conj_(rank, std::vector<Word>(rank)) {
    for (unsigned i = 0; i < rank; ++i)
      for (unsigned j = i + 1; j < rank; ++j)
        conj_[i][j] = {j};
  }

  // g_j^{g_i} = word; every letter must be >= j.
  void set_conjugate(unsigned i, unsigned j, Word word) {
    if (i >= j || j >= rank_)
      fail(Errc::invalid_argument, "conjugate relation needs i < j < rank");
    for (unsigned l : word)
      if (l < j)
        fail(Errc::invalid_argument, "conjugate word must only use generators >= j");
    conj_[i][j] = std::move(word);
  }

  unsigned prime() const { return p_; }
  unsigned rank() const { return rank_; }

  Exponents multiply(const Exponents& a, const Exponents& b) const {
    Exponents r = a;
    for (unsigned j = 0; j < rank_; ++j)
      for (unsigned e = 0; e < b[j]; ++e)
        append(r, j);
    return r;
  }

  // Index sum e_i p^i; the identity is 0.
  std::uint64_t index(const Exponents& e) const {
    std::uint64_t idx = 0;
    for (unsigned i = rank_; i-- > 0;)
      idx = idx * p_ + e[i];
    return idx;
  }

  Exponents exponents(std::uint64_t idx) const {
    Exponents e(rank_);
    for (unsigned i = 0; i < rank_; ++i) {
      e[i] = unsigned(idx % p_);
      idx /= p_;
    }
    return e;
  }

  std::size_t order() const {
    std::size_t n = 1;
    for (unsigned i = 0; i < rank_; ++i)
      n *= p_;
    return n;
  }

  GroupTable table(std::size_t cap = default_order_cap) const {
    const std::size_t n = order();
    if (n > cap)
      fail(Errc::closure_cap_exceeded, "pc group order " + std::to_string(n) + " exceeds cap " +
                                           std::to_string(cap));
    std::vector<Exponents> elems(n);
    for (std::size_t i = 0; i < n; ++i)
      elems[i] = exponents(i);
    std::vector<Elem> mul(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        mul[a * n + b] = Elem(index(multiply(elems[a], elems[b])));
    return GroupTable::trusted(n, std::move(mul));
  }

private:
  // r := r * g_j. With r = P g_j^e T (P below j, T above j):
  // r g_j = P g_j^{e+1} T^{g_j}, and T^{g_j} is collected letter by letter.
  void append(Exponents& r, unsigned j) const {
    Word tail;
    for (unsigned k = j + 1; k < rank_; ++k) {
      for (unsigned e = 0; e < r[k]; ++e)
        tail.push_back(k);
      r[k] = 0;
    }
    r[j] = (r[j] + 1) % p_;
    for (unsigned k : tail)
      for (unsigned l : conj_[j][k])
        append(r, l);
  }

  unsigned p_;
  unsigned rank_;
  std::vector<std::vector<Word>> conj_;
};

} // namespace relcomm

#endif
