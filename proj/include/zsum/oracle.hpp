#pragma once

// Brute-force reference implementations for tests. They work on explicit
// term lists and subsets, use no memoization and share no search code with
// factorize/tame, so agreement with the fast paths is meaningful.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <iterator>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "zsum/error.hpp"
#include "zsum/group.hpp"
#include "zsum/sequence.hpp"

namespace zsum::oracle {

/// A factorization as a sorted list of atom exponent vectors.
using NaiveFactorization = std::vector<Exponents>;

namespace detail {

inline std::vector<std::size_t> terms_of(const Sequence& s) {
  std::vector<std::size_t> t;
  for (std::size_t i = 0; i < s.exponents().size(); ++i)
    for (std::uint32_t k = 0; k < s[i]; ++k) t.push_back(i);
  return t;
}

inline GroupElement sum_of(const Alphabet& a, const std::vector<std::size_t>& letters) {
  auto s = zero(a.spec());
  for (auto i : letters) s = s + a.class_of(i);
  return s;
}

inline void require_small(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) throw error(errc::size_limit, std::string(what) + " limited to " + std::to_string(cap));
}

inline bool minimal_zero_sum(const Alphabet& a, const std::vector<std::size_t>& letters) {
  if (letters.empty() || !sum_of(a, letters).is_zero()) return false;
  const auto n = letters.size();
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<std::size_t> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) sub.push_back(letters[i]);
    if (sum_of(a, sub).is_zero()) return false;
  }
  return true;
}

inline Exponents to_exponents(std::size_t letters, const std::vector<std::size_t>& terms) {
  Exponents e(letters, 0);
  for (auto i : terms) ++e[i];
  return e;
}

inline void partitions(const Alphabet& a, std::vector<std::size_t> rest, NaiveFactorization& cur,
                       std::set<NaiveFactorization>& out) {
  if (rest.empty()) {
    auto f = cur;
    std::sort(f.begin(), f.end());
    out.insert(std::move(f));
    return;
  }
  // The block containing rest[0] is rest[0] plus any subset of the others.
  const auto n = rest.size() - 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> block{rest[0]}, others;
    for (std::size_t i = 0; i < n; ++i) (mask >> i & 1u ? block : others).push_back(rest[i + 1]);
    if (!minimal_zero_sum(a, block)) continue;
    cur.push_back(to_exponents(a.size(), block));
    partitions(a, others, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Checks every proper nonempty sub-multiset; |S| <= 12.
inline bool naive_is_atom(const Sequence& s) {
  detail::require_small(s.length(), 12, "naive_is_atom");
  return detail::minimal_zero_sum(s.alphabet(), detail::terms_of(s));
}

/// All ways to split the terms of B into minimal zero-sum blocks; |B| <= 12.
inline std::set<NaiveFactorization> naive_factorizations(const Sequence& b) {
  detail::require_small(b.length(), 12, "naive_factorizations");
  if (!sigma(b).is_zero()) throw error(errc::not_zero_sum, "element has nonzero sum");
  std::set<NaiveFactorization> out;
  NaiveFactorization cur;
  detail::partitions(b.alphabet(), detail::terms_of(b), cur, out);
  return out;
}

inline std::set<std::size_t> naive_length_set(const std::set<NaiveFactorization>& z) {
  std::set<std::size_t> out;
  for (const auto& f : z) out.insert(f.size());
  return out;
}

/// Cancels the common sub-multiset and returns the larger remainder.
inline std::size_t naive_distance(const NaiveFactorization& x, const NaiveFactorization& y) {
  NaiveFactorization common;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
  return std::max(x.size(), y.size()) - common.size();
}

namespace detail {

// Is `to` reachable from `from` by steps of distance <= n?
inline bool chain_exists(const std::vector<NaiveFactorization>& z, std::size_t from, std::size_t to, std::size_t n) {
  std::vector<bool> seen(z.size(), false);
  std::deque<std::size_t> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    const auto cur = queue.front();
    queue.pop_front();
    if (cur == to) return true;
    for (std::size_t j = 0; j < z.size(); ++j)
      if (!seen[j] && naive_distance(z[cur], z[j]) <= n) {
        seen[j] = true;
        queue.push_back(j);
      }
  }
  return false;
}

}  // namespace detail

/// Smallest N such that any two factorizations are joined by an N-chain.
inline std::size_t naive_catenary(const std::set<NaiveFactorization>& zset) {
  detail::require_small(zset.size(), 200, "naive_catenary");
  const std::vector<NaiveFactorization> z(zset.begin(), zset.end());
  for (std::size_t n = 0;; ++n) {
    bool connected = true;
    for (std::size_t j = 1; j < z.size() && connected; ++j) connected = detail::chain_exists(z, 0, j, n);
    if (connected) return n;
  }
}

/// Distances d >= 2 of pairs that no (d-1)-chain joins.
inline std::set<std::size_t> naive_minimal_relations(const std::set<NaiveFactorization>& zset) {
  detail::require_small(zset.size(), 200, "naive_minimal_relations");
  const std::vector<NaiveFactorization> z(zset.begin(), zset.end());
  std::set<std::size_t> out;
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      const auto d = naive_distance(z[i], z[j]);
      if (d >= 2 && !detail::chain_exists(z, i, j, d - 1)) out.insert(d);
    }
  return out;
}

/// max over z of min over z' containing u of d(z, z'); 0 if no factorization
/// contains u or all do.
inline std::size_t naive_tame(const std::set<NaiveFactorization>& zset, const Exponents& u) {
  detail::require_small(zset.size(), 200, "naive_tame");
  std::vector<const NaiveFactorization*> with, without;
  for (const auto& f : zset) (std::find(f.begin(), f.end(), u) != f.end() ? with : without).push_back(&f);
  if (with.empty() || without.empty()) return 0;
  std::size_t worst = 0;
  for (const auto* z : without) {
    std::size_t best = SIZE_MAX;
    for (const auto* w : with) best = std::min(best, naive_distance(*z, *w));
    worst = std::max(worst, best);
  }
  return worst;
}

/// Exhaustive search for t columns x^(j) <= x with sum_i a_i x_i^(j) = prod a
/// and row sums x_i. Returns rows, or nullopt when none exists or the input
/// violates the hypotheses. prod a <= 120, t <= 3.
inline std::optional<std::vector<std::vector<std::int64_t>>> naive_decompose_weighted_sum(
    std::span<const std::int64_t> a, std::span<const std::int64_t> x, std::int64_t t) {
  if (a.empty() || a.size() != x.size() || t < 1) return std::nullopt;
  std::int64_t prod = 1, total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 1 || x[i] < 0) return std::nullopt;
    prod *= a[i];
    total += a[i] * x[i];
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] == a[j]) return std::nullopt;
  detail::require_small(static_cast<std::size_t>(prod), 120, "naive_decompose_weighted_sum");
  detail::require_small(static_cast<std::size_t>(t), 3, "naive_decompose_weighted_sum");
  if (total != t * prod) return std::nullopt;

  const auto n = a.size();
  std::vector<std::vector<std::int64_t>> cols;
  std::vector<std::int64_t> rem(x.begin(), x.end());
  auto search = [&](auto& self, std::int64_t left) -> bool {
    if (left == 0) return std::all_of(rem.begin(), rem.end(), [](auto v) { return v == 0; });
    std::vector<std::int64_t> col(n, 0);
    auto fill = [&](auto& fself, std::size_t i, std::int64_t sum) -> bool {
      if (i == n) {
        if (sum != prod) return false;
        for (std::size_t k = 0; k < n; ++k) rem[k] -= col[k];
        cols.push_back(col);
        if (self(self, left - 1)) return true;
        cols.pop_back();
        for (std::size_t k = 0; k < n; ++k) rem[k] += col[k];
        return false;
      }
      for (std::int64_t v = 0; v <= rem[i] && sum + v * a[i] <= prod; ++v) {
        col[i] = v;
        if (fself(fself, i + 1, sum + v * a[i])) return true;
      }
      col[i] = 0;
      return false;
    };
    return fill(fill, 0, 0);
  };
  if (!search(search, t)) return std::nullopt;
  std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(static_cast<std::size_t>(t)));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) rows[i][j] = cols[j][i];
  return rows;
}

/// Checks the three defining constraints of a decomposition.
inline bool valid_weighted_decomposition(std::span<const std::int64_t> a, std::span<const std::int64_t> x,
                                         std::int64_t t, const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.size() != a.size()) return false;
  std::int64_t prod = 1;
  for (auto v : a) prod *= v;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (rows[i].size() != static_cast<std::size_t>(t)) return false;
    std::int64_t s = 0;
    for (auto v : rows[i]) {
      if (v < 0 || v > x[i]) return false;
      s += v;
    }
    if (s != x[i]) return false;
  }
  for (std::size_t j = 0; j < static_cast<std::size_t>(t); ++j) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * rows[i][j];
    if (s != prod) return false;
  }
  return true;
}

}  // namespace zsum::oracle
