#pragma once

// Isomorphism-free exhaustive generation of small tournaments and predicate
// sweeps over the resulting class catalogs.
//
// Generation is extend-and-canonicalize: every class of order n-1 is
// extended by all 2^(n-1) orientation vectors of one new vertex, each
// extension is canonicalized, and duplicates are merged; this keeps n = 8
// tractable (a raw scan over all 2^C(n,2) matrices stays available in the
// tests as a census oracle for n <= 6). Catalogs are ordered by canonical
// code regardless of generation schedule.
//
// Catalog file format: header "catalog n=<n> count=<c>", then the
// representatives in the core text format separated by blank lines.

#include <cstdint>
#include <cstdio>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "starfactor/canonical.hpp"
#include "starfactor/text_io.hpp"
#include "starfactor/tournament.hpp"

namespace starfactor {

struct ClassCatalog {
  int n = 0;
  std::vector<Tournament> representatives;  // canonical forms, code-sorted
  std::vector<CanonicalCode> codes;         // parallel to representatives
};

// One extension level: all classes of order parents.n + 1.
inline ClassCatalog extend_catalog(const ClassCatalog& parents) {
  const int n = parents.n + 1;
  if (n > kMaxCanonicalOrder)
    throw std::invalid_argument("extend_catalog: order " + std::to_string(n) +
                                " exceeds the enumeration bound " +
                                std::to_string(kMaxCanonicalOrder));
  const int pn = parents.n;
  std::map<std::uint32_t, detail::Board> classes;
  for (const Tournament& parent : parents.representatives) {
    detail::Board base = detail::pack_board(parent);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pn); ++mask) {
      detail::Board child = base;
      child[pn] = static_cast<std::uint8_t>(mask);  // new vertex beats the mask bits
      for (int j = 0; j < pn; ++j)
        if (!((mask >> j) & 1)) child[j] |= static_cast<std::uint8_t>(1u << pn);
      detail::Canon canon = detail::min_code(child, n);
      if (!classes.contains(canon.code))
        classes.emplace(canon.code, detail::apply_perm(child, canon.perm, n));
    }
  }
  ClassCatalog out;
  out.n = n;
  out.representatives.reserve(classes.size());
  out.codes.reserve(classes.size());
  for (const auto& [code, board] : classes) {
    out.representatives.push_back(
        Tournament::build(n, [&](int i, int j) { return (board[i] >> j) & 1; }));
    out.codes.push_back(detail::code_from_bits(code, n));
  }
  return out;
}

inline ClassCatalog enumerate_classes(int n) {
  if (n < 1 || n > kMaxCanonicalOrder)
    throw std::invalid_argument("enumerate_classes: order " + std::to_string(n) +
                                " outside [1," + std::to_string(kMaxCanonicalOrder) + "]");
  ClassCatalog cat;
  cat.n = 1;
  cat.representatives.push_back(Tournament::build(1, [](int, int) { return true; }));
  cat.codes.push_back(canonical_code(cat.representatives.back()));
  while (cat.n < n) cat = extend_catalog(cat);
  return cat;
}

// Indices of the representatives violating the predicate; empty means the
// universally quantified claim holds for this order.
inline std::vector<int> sweep(const ClassCatalog& catalog,
                              const std::function<bool(const Tournament&)>& predicate) {
  std::vector<int> failing;
  for (std::size_t i = 0; i < catalog.representatives.size(); ++i)
    if (!predicate(catalog.representatives[i])) failing.push_back(static_cast<int>(i));
  return failing;
}

inline void save_catalog(std::ostream& os, const ClassCatalog& catalog) {
  os << "catalog n=" << catalog.n << " count=" << catalog.representatives.size() << "\n";
  for (const Tournament& rep : catalog.representatives) os << "\n" << serialize_tournament(rep);
}

inline ClassCatalog load_catalog(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw std::runtime_error("load_catalog: empty input");
  int n = 0;
  std::size_t count = 0;
  if (std::sscanf(header.c_str(), "catalog n=%d count=%zu", &n, &count) != 2)
    throw std::runtime_error("load_catalog: malformed header: " + header);
  ClassCatalog cat;
  cat.n = n;
  std::string line, block;
  auto flush = [&]() {
    if (block.empty()) return;
    cat.representatives.push_back(parse_tournament(block));
    if (cat.representatives.back().size() != n)
      throw std::runtime_error("load_catalog: representative order mismatch");
    cat.codes.push_back(canonical_code(cat.representatives.back()));
    block.clear();
  };
  while (std::getline(is, line)) {
    if (line.empty()) {
      flush();
    } else {
      block += line;
      block += '\n';
    }
  }
  flush();
  if (cat.representatives.size() != count)
    throw std::runtime_error("load_catalog: header count " + std::to_string(count) +
                             " does not match " + std::to_string(cat.representatives.size()) +
                             " representatives");
  return cat;
}

}  // namespace starfactor
