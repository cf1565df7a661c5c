#pragma once

// Plain-text group files:
//
//   order n
//   table
//   <n lines of n indices>
//
// or
//
//   order n
//   perm-generators m
//   (1 2)(3 4)
//   ...
//
// Blank lines and lines starting with '#' are ignored.

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "cgraph/group.hpp"

namespace cgraph {

class group_file_error : public std::runtime_error {
public:
  group_file_error(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::size_t parse_count(const std::string& word, std::size_t line) {
  if (word.empty() || word.find_first_not_of("0123456789") != std::string::npos)
    throw group_file_error(line, "expected a non-negative integer, got '" + word + "'");
  try {
    return std::stoul(word);
  } catch (const std::exception&) {
    throw group_file_error(line, "integer out of range: " + word);
  }
}

}  // namespace detail

inline FiniteGroup read_group(std::istream& in, std::size_t cap = default_closure_cap) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::string raw;
  for (std::size_t no = 1; std::getline(in, raw); ++no) {
    std::string s = detail::trim(raw);
    if (s.empty() || s[0] == '#') continue;
    lines.emplace_back(no, std::move(s));
  }
  if (lines.empty()) throw group_file_error(1, "empty group file");

  std::size_t pos = 0;
  auto header = [&](const char* keyword) {
    std::istringstream ss(lines[pos].second);
    std::string kw;
    ss >> kw;
    if (kw != keyword) throw group_file_error(lines[pos].first, std::string("expected '") + keyword + "', got '" + kw + "'");
    return lines[pos++];
  };

  const auto [order_line, order_text] = header("order");
  std::size_t n = 0;
  {
    std::istringstream ss(order_text);
    std::string kw, arg, extra;
    ss >> kw >> arg;
    if (ss >> extra) throw group_file_error(order_line, "trailing text after order");
    n = detail::parse_count(arg, order_line);
  }
  if (n == 0) throw group_file_error(order_line, "order must be positive");
  if (n > cap) throw group_file_error(order_line, "order exceeds the closure cap " + std::to_string(cap));

  if (pos >= lines.size()) throw group_file_error(order_line, "missing 'table' or 'perm-generators' section");
  std::istringstream ks(lines[pos].second);
  std::string kind;
  ks >> kind;
  const std::size_t kind_line = lines[pos].first;
  ++pos;

  if (kind == "table") {
    std::string extra;
    if (ks >> extra) throw group_file_error(kind_line, "trailing text after 'table'");
    std::vector<element> table;
    table.reserve(n * n);
    for (std::size_t row = 0; row < n; ++row) {
      if (pos >= lines.size())
        throw group_file_error(lines.back().first, "table has " + std::to_string(row) + " rows, expected " + std::to_string(n));
      const auto& [no, text] = lines[pos++];
      std::istringstream rs(text);
      std::string word;
      std::size_t cols = 0;
      while (rs >> word) {
        const std::size_t v = detail::parse_count(word, no);
        if (v >= n) throw group_file_error(no, "entry " + word + " outside 0.." + std::to_string(n - 1));
        table.push_back(static_cast<element>(v));
        ++cols;
      }
      if (cols != n)
        throw group_file_error(no, "row has " + std::to_string(cols) + " entries, expected " + std::to_string(n));
    }
    if (pos < lines.size()) throw group_file_error(lines[pos].first, "unexpected text after the table");
    FiniteGroup g;
    try {
      g = FiniteGroup(std::move(table));
    } catch (const group_error& e) {
      throw group_file_error(kind_line, e.what());
    }
    if (!g.is_associative()) throw group_file_error(kind_line, "table is not associative");
    return g;
  }

  if (kind == "perm-generators") {
    std::string arg, extra;
    ks >> arg;
    if (ks >> extra) throw group_file_error(kind_line, "trailing text after degree");
    const std::size_t degree = detail::parse_count(arg, kind_line);
    std::vector<permutation> gens;
    for (; pos < lines.size(); ++pos) {
      try {
        gens.push_back(parse_cycles(lines[pos].second, degree));
      } catch (const group_error& e) {
        throw group_file_error(lines[pos].first, e.what());
      }
    }
    FiniteGroup g;
    try {
      if (gens.empty()) {
        g = FiniteGroup();
      } else {
        g = group_from_permutations(gens, cap);
      }
    } catch (const group_error& e) {
      throw group_file_error(kind_line, e.what());
    }
    if (g.order() != n)
      throw group_file_error(order_line, "generators give a group of order " + std::to_string(g.order()) +
                                             ", header says " + std::to_string(n));
    return g;
  }

  throw group_file_error(kind_line, "expected 'table' or 'perm-generators', got '" + kind + "'");
}

inline FiniteGroup read_group_file(const std::string& path, std::size_t cap = default_closure_cap) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_group(in, cap);
}

inline void write_group_table(std::ostream& os, const FiniteGroup& g) {
  os << "order " << g.order() << "\ntable\n";
  for (element x = 0; x < g.order(); ++x) {
    for (element y = 0; y < g.order(); ++y) os << (y ? " " : "") << g.mul(x, y);
    os << "\n";
  }
}

}  // namespace cgraph
