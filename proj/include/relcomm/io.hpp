// Group input files.
//
// Cayley format: first line n, then n lines of n space-separated indices,
// optionally followed by n label lines.
// Permutation format: one generator per line in disjoint-cycle notation,
// e.g. "(0 1 2)(3 4)". Blank lines and lines starting with '#' are skipped.

#ifndef RELCOMM_IO_HPP_
#define RELCOMM_IO_HPP_

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "group_table.hpp"

namespace relcomm {

inline GroupTable read_cayley(std::istream& in, std::size_t cap = default_order_cap) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      auto first = line.find_first_not_of(" \t\r");
      if (first != std::string::npos && line[first] != '#')
        return true;
    }
    return false;
  };
  if (!next_line())
    fail(Errc::parse_error, "empty Cayley table input");
  std::size_t n = 0;
  {
    std::istringstream ls(line);
    long long v = 0;
    if (!(ls >> v) || v <= 0)
      fail(Errc::parse_error, "line " + std::to_string(lineno) + ": expected a positive order");
    n = std::size_t(v);
  }
  if (n > cap)
    fail(Errc::cap_exceeded, "order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  std::vector<std::vector<Elem>> rows;
  rows.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!next_line())
      fail(Errc::parse_error, "expected " + std::to_string(n) + " table rows, got " +
                                  std::to_string(r));
    std::istringstream ls(line);
    std::vector<Elem> row;
    long long v = 0;
    while (ls >> v) {
      if (v < 0 || std::size_t(v) >= n)
        fail(Errc::parse_error, "line " + std::to_string(lineno) + ": entry " +
                                    std::to_string(v) + " out of range");
      row.push_back(Elem(v));
    }
    if (!ls.eof())
      fail(Errc::parse_error, "line " + std::to_string(lineno) + ": non-integer entry");
    if (row.size() != n)
      fail(Errc::parse_error, "line " + std::to_string(lineno) + ": expected " +
                                  std::to_string(n) + " entries, got " + std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  std::vector<std::string> labels;
  while (next_line()) {
    auto a = line.find_first_not_of(" \t");
    auto b = line.find_last_not_of(" \t\r");
    labels.push_back(line.substr(a, b - a + 1));
  }
  if (!labels.empty() && labels.size() != n)
    fail(Errc::parse_error, "label block has " + std::to_string(labels.size()) +
                                " lines, expected " + std::to_string(n));
  return from_cayley_table(rows, std::move(labels));
}

inline void write_cayley(std::ostream& out, const GroupTable& g, bool with_labels = true) {
  out << g.order() << '\n';
  for (Elem a = 0; a < g.order(); ++a) {
    auto row = g.row(a);
    for (Elem b = 0; b < g.order(); ++b)
      out << (b ? " " : "") << row[b];
    out << '\n';
  }
  if (with_labels && !g.labels().empty())
    for (const auto& l : g.labels())
      out << l << '\n';
}

// Parses one generator line. Columns in errors are 1-based.
inline std::vector<std::vector<std::size_t>> parse_cycles(std::string_view text) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t i = 0;
  auto col = [&](std::size_t at) { return "column " + std::to_string(at + 1); };
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  if (i == text.size())
    fail(Errc::parse_error, "empty generator");
  while (i < text.size()) {
    if (text[i] != '(')
      fail(Errc::parse_error, col(i) + ": expected '('");
    std::size_t open = i++;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_ws();
      if (i == text.size())
        fail(Errc::parse_error, col(i) + ": unclosed cycle opened at " + col(open));
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        fail(Errc::parse_error, col(i) + ": unexpected '" + std::string(1, text[i]) + "'");
      std::size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + std::size_t(text[i] - '0');
        if (v > 1'000'000)
          fail(Errc::parse_error, col(i) + ": point too large");
        ++i;
      }
      cycle.push_back(v);
    }
    cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return cycles;
}

// Generators as images on {0..d-1}, d the largest point seen plus one
// (or `domain` if larger).
inline std::vector<Permutation> read_permutations(std::istream& in, std::size_t domain = 0) {
  std::vector<std::vector<std::vector<std::size_t>>> parsed;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    try {
      parsed.push_back(parse_cycles(line));
    } catch (const Error& e) {
      fail(e.code(), "line " + std::to_string(lineno) + ", " + e.what());
    }
    for (const auto& c : parsed.back())
      for (std::size_t v : c)
        domain = std::max(domain, v + 1);
  }
  if (parsed.empty())
    fail(Errc::parse_error, "no generators given");
  std::vector<Permutation> gens;
  for (std::size_t k = 0; k < parsed.size(); ++k) {
    Permutation p(domain);
    for (std::size_t i = 0; i < domain; ++i)
      p[i] = static_cast<Elem>(i);
    std::vector<std::uint8_t> moved(domain, 0);
    for (const auto& c : parsed[k])
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (moved[c[j]])
          fail(Errc::parse_error, "generator " + std::to_string(k + 1) + ": point " +
                                      std::to_string(c[j]) + " appears twice");
        moved[c[j]] = 1;
        p[c[j]] = static_cast<Elem>(c[(j + 1) % c.size()]);
      }
    gens.push_back(std::move(p));
  }
  return gens;
}

inline std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    fail(Errc::file_not_found, "cannot open " + path.string());
  return in;
}

inline GroupTable load_cayley(const std::filesystem::path& path, std::size_t cap = default_order_cap) {
  auto in = open_input(path);
  return read_cayley(in, cap);
}

inline GroupTable load_permutations(const std::filesystem::path& path,
                                    std::size_t cap = default_order_cap) {
  auto in = open_input(path);
  return from_permutations(read_permutations(in), 0, cap);
}

// Sniffs the format: a file whose first meaningful character is '(' holds
// permutations, anything else a Cayley table.
inline GroupTable load_group(const std::filesystem::path& path, std::size_t cap = default_order_cap) {
  auto in = open_input(path);
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    in.close();
    return line[first] == '(' ? load_permutations(path, cap) : load_cayley(path, cap);
  }
  fail(Errc::parse_error, path.string() + " is empty");
}

} // namespace relcomm

#endif
