#pragma once

// Slow, obviously-correct reference implementations used to check the
// library. None of them share code with the library's evaluators.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "stonework/boolalg.hpp"
#include "stonework/zhomology.hpp"

namespace oracle {

using stonework::Int;
using stonework::boolalg::Term;
using Assignment = std::map<std::string, bool>;

inline bool eval(const Term& t, const Assignment& a) {
  switch (t.kind()) {
    case Term::Kind::Zero: return false;
    case Term::Kind::One: return true;
    case Term::Kind::Gen: return a.at(t.name());
    case Term::Kind::Not: return !eval(t.lhs(), a);
    case Term::Kind::And: return eval(t.lhs(), a) && eval(t.rhs(), a);
    case Term::Kind::Or: return eval(t.lhs(), a) || eval(t.rhs(), a);
  }
  return false;
}

inline Assignment assignment(const std::vector<std::string>& gens, std::uint64_t key) {
  Assignment a;
  for (std::size_t i = 0; i < gens.size(); ++i) a[gens[i]] = (key >> (gens.size() - 1 - i)) & 1U;
  return a;
}

/// Satisfying assignments as bit strings, in increasing key order.
inline std::vector<std::string> spectrum(const std::vector<std::string>& gens, const std::vector<Term>& rels) {
  std::vector<std::string> out;
  for (std::uint64_t key = 0; key < (std::uint64_t{1} << gens.size()); ++key) {
    Assignment a = assignment(gens, key);
    bool ok = true;
    for (const auto& r : rels) ok = ok && !eval(r, a);
    if (!ok) continue;
    std::string s;
    for (const auto& g : gens) s.push_back(a[g] ? '1' : '0');
    out.push_back(s);
  }
  return out;
}

inline Term random_term(std::mt19937_64& rng, const std::vector<std::string>& gens, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 1 ? 2 : 5);
  int k = pick(rng);
  if (k == 0 || gens.empty()) return std::uniform_int_distribution<int>(0, 1)(rng) ? Term::one() : Term::zero();
  if (k <= 2) return Term::gen(gens[std::uniform_int_distribution<std::size_t>(0, gens.size() - 1)(rng)]);
  if (k == 3) return ~random_term(rng, gens, depth - 1);
  if (k == 4) return random_term(rng, gens, depth - 1) & random_term(rng, gens, depth - 1);
  return random_term(rng, gens, depth - 1) | random_term(rng, gens, depth - 1);
}

/// Rank over Q by Gaussian elimination on rationals.
inline std::size_t rational_rank(std::vector<std::vector<Int>> m) {
  using Q = boost::multiprecision::cpp_rational;
  std::vector<std::vector<Q>> a;
  for (auto& row : m) a.emplace_back(row.begin(), row.end());
  std::size_t rank = 0;
  std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      Q f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Determinant by cofactor-free rational elimination.
inline Int rational_det(const std::vector<std::vector<Int>>& m) {
  using Q = boost::multiprecision::cpp_rational;
  std::size_t n = m.size();
  std::vector<std::vector<Q>> a;
  for (const auto& row : m) a.emplace_back(row.begin(), row.end());
  Q det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Q f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return boost::multiprecision::numerator(det);
}

inline stonework::zhomology::IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                                     int lo, int hi, double density = 1.0) {
  std::uniform_int_distribution<int> entry(lo, hi);
  std::bernoulli_distribution keep(density);
  std::vector<std::vector<Int>> d(rows, std::vector<Int>(cols));
  for (auto& row : d)
    for (auto& x : row) x = keep(rng) ? entry(rng) : 0;
  return stonework::zhomology::IntMatrix::from_dense(d, cols);
}

}  // namespace oracle
