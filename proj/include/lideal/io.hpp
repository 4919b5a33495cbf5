#ifndef LIDEAL_IO_HPP
#define LIDEAL_IO_HPP

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lideal/algebra.hpp"

/** Line-oriented algebra file format.
 *
 *     # comment
 *     algebra <name>
 *     elements <e0> <e1> ...
 *     bottom <name>
 *     top <name>
 *     imp:
 *     <n rows of n element names>    # row x, column y gives x -> y
 *     otimes:                        # optional, same shape
 *     <n rows of n element names>
 *
 * Tokens are whitespace-separated; parse errors cite the line number.
 */
namespace lideal {

struct ParseError : AlgebraError {
  int line;
  ParseError(int ln, const std::string& msg)
      : AlgebraError("line " + std::to_string(ln) + ": " + msg), line(ln) {}
};

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) {
    if (t[0] == '#') break;
    toks.push_back(t);
  }
  return toks;
}

}  // namespace detail

/// Parse an algebra file; derived fields are not filled (use analyze()).
inline FiniteAlgebra parse_algebra(std::istream& in) {
  FiniteAlgebra alg;
  std::map<std::string, Index> index;
  bool have_name = false, have_elements = false, have_bottom = false,
       have_top = false;

  auto elem = [&](const std::string& tok, int ln) -> Index {
    auto it = index.find(tok);
    if (it == index.end()) throw ParseError(ln, "unknown element name: " + tok);
    return it->second;
  };

  std::string line;
  int ln = 0;
  Table* pending = nullptr;
  int pending_row = 0;
  while (std::getline(in, line)) {
    ++ln;
    auto toks = detail::tokenize(line);
    if (toks.empty()) continue;
    if (pending) {
      if (static_cast<int>(toks.size()) != alg.n)
        throw ParseError(ln, "expected " + std::to_string(alg.n) +
                                 " entries in table row");
      for (int j = 0; j < alg.n; ++j)
        (*pending)[pending_row][j] = elem(toks[j], ln);
      if (++pending_row == alg.n) pending = nullptr;
      continue;
    }
    const std::string& kw = toks[0];
    if (kw == "algebra") {
      if (toks.size() != 2) throw ParseError(ln, "algebra needs one name");
      alg.name = toks[1];
      have_name = true;
    } else if (kw == "elements") {
      if (toks.size() < 2) throw ParseError(ln, "elements needs at least one name");
      alg.elements.assign(toks.begin() + 1, toks.end());
      alg.n = static_cast<int>(alg.elements.size());
      for (int i = 0; i < alg.n; ++i) {
        if (index.count(alg.elements[i]))
          throw ParseError(ln, "duplicate element name: " + alg.elements[i]);
        index[alg.elements[i]] = i;
      }
      have_elements = true;
    } else if (kw == "bottom" || kw == "top") {
      if (!have_elements) throw ParseError(ln, kw + " before elements");
      if (toks.size() != 2) throw ParseError(ln, kw + " needs one element name");
      (kw == "bottom" ? alg.bottom : alg.top) = elem(toks[1], ln);
      (kw == "bottom" ? have_bottom : have_top) = true;
    } else if (kw == "imp:" || kw == "otimes:") {
      if (!have_elements) throw ParseError(ln, kw + " before elements");
      if (toks.size() != 1) throw ParseError(ln, "unexpected tokens after " + kw);
      if (kw == "imp:") {
        alg.imp.assign(alg.n, std::vector<Index>(alg.n, 0));
        pending = &alg.imp;
      } else {
        alg.otimes = Table(alg.n, std::vector<Index>(alg.n, 0));
        pending = &*alg.otimes;
      }
      pending_row = 0;
    } else {
      throw ParseError(ln, "unknown keyword: " + kw);
    }
  }
  if (pending) throw ParseError(ln, "table ends before row " +
                                        std::to_string(pending_row + 1));
  if (!have_name) throw ParseError(ln, "missing algebra header");
  if (!have_elements) throw ParseError(ln, "missing elements line");
  if (!have_bottom || !have_top) throw ParseError(ln, "missing bottom or top");
  if (alg.imp.empty()) throw ParseError(ln, "missing imp: table");
  return alg;
}

/// Write in the same file format; parse(write(a)) reproduces a bit-identically.
inline void write_algebra(std::ostream& out, const FiniteAlgebra& alg) {
  out << "algebra " << alg.name << "\n";
  out << "elements";
  for (const auto& e : alg.elements) out << ' ' << e;
  out << "\nbottom " << alg.elements[alg.bottom];
  out << "\ntop " << alg.elements[alg.top] << "\n";
  auto table = [&](const char* header, const Table& t) {
    out << header << "\n";
    for (int x = 0; x < alg.n; ++x) {
      for (int y = 0; y < alg.n; ++y)
        out << (y ? " " : "") << alg.elements[t[x][y]];
      out << "\n";
    }
  };
  table("imp:", alg.imp);
  if (alg.otimes && !alg.otimes_derived) table("otimes:", *alg.otimes);
}

/// Parse a `--set` argument: comma-separated element names; "" is empty.
inline Subset parse_subset(const FiniteAlgebra& alg, const std::string& csv) {
  Subset s = 0;
  std::string cur;
  std::istringstream ss(csv);
  while (std::getline(ss, cur, ',')) {
    // trim
    auto b = cur.find_first_not_of(" \t");
    auto e = cur.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    cur = cur.substr(b, e - b + 1);
    bool found = false;
    for (Index i = 0; i < alg.n; ++i)
      if (alg.elements[i] == cur) {
        s = subset_with(s, i);
        found = true;
        break;
      }
    if (!found) throw AlgebraError("unknown element in set: " + cur);
  }
  return s;
}

}  // namespace lideal

#endif  // LIDEAL_IO_HPP
