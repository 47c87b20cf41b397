#pragma once

// Tame degrees t(A, u), local scans t(H, u) and the set Ta(H).

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zsum/error.hpp"
#include "zsum/factorize.hpp"
#include "zsum/invariants.hpp"
#include "zsum/pinned.hpp"
#include "zsum/scan.hpp"
#include "zsum/sequence.hpp"

namespace zsum {

/// t(A, u) over an already enumerated Z(A); `u_index` is u's position in
/// z.atoms(), or nullopt when u does not divide A.
inline std::size_t tame_over(const FactorizationSet& z, std::optional<std::size_t> u_index) {
  if (!u_index) return 0;
  const auto& f = z.multiplicities();
  std::vector<std::size_t> with_u, without_u;
  for (std::size_t i = 0; i < f.size(); ++i) (f[i][*u_index] ? with_u : without_u).push_back(i);
  if (with_u.empty() || without_u.empty()) return 0;
  std::size_t worst = 0;
  for (auto i : without_u) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (auto j : with_u) {
      best = std::min(best, detail::count_distance(f[i], f[j]));
      if (best <= worst) break;  // cannot raise the maximum
    }
    worst = std::max(worst, best);
  }
  return worst;
}

inline std::size_t tame(const Sequence& a, const Sequence& u, Limits limits = {}) {
  require_same_alphabet(a, u);
  if (!is_atom(u)) throw error(errc::invalid_atom, to_string(u) + " is not an atom");
  detail::require_zero_sum(a);
  if (!divides(u, a)) return 0;
  const auto z = factorizations(a, limits);
  return tame_over(z, z.atom_index(u));
}

namespace detail {

inline void tame_bound_checks(ScanReport<std::size_t>& rep, const Alphabet& alphabet,
                              const std::vector<std::pair<std::size_t, std::size_t>>& t_and_u_len,
                              bool max_l_ok) {
  rep.check("t(A,u) <= max L(A)", max_l_ok);
  const auto& spec = alphabet.spec();
  if (!alphabet.is_block() || !spec.is_finite() || spec.order() < 3) return;
  auto d = ambient_davenport(spec);
  if (!d) return;
  bool ok = true;
  std::string detail;
  for (const auto& [t, len] : t_and_u_len) {
    // t <= 1 + |u| (D - 1) / 2, compared without division
    if (2 * t > 2 + len * (*d - 1)) {
      ok = false;
      detail = "t = " + std::to_string(t) + " with |u| = " + std::to_string(len);
      break;
    }
  }
  rep.check("t(A,u) <= 1 + |u|(D(G)-1)/2", ok, detail);
}

}  // namespace detail

/// t(A, u) over zero-sum A = uB with |A| <= bound. All values are reported,
/// 0 included.
inline ScanReport<std::size_t> tame_local_scan(const AlphabetPtr& alphabet, const Sequence& u,
                                               const ScanBound& bound, unsigned jobs = 1) {
  if (!is_atom(u)) throw error(errc::invalid_atom, to_string(u) + " is not an atom");
  ScanReport<std::size_t> rep;
  rep.invariant = "tame-local";
  rep.alphabet = alphabet;
  rep.bound = bound.max_element_length;
  if (u.length() > bound.max_element_length) return rep;

  ScanBound rest = bound;
  rest.max_element_length = bound.max_element_length - u.length();
  auto elems = detail::zero_sum_elements(*alphabet, rest, false);
  elems.insert(elems.begin(), Exponents(alphabet->size(), 0));
  for (auto& e : elems)
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += u[i];
  const auto atoms = detail::scan_atoms(*alphabet, bound.max_element_length);
  const auto limits = bound.limits();

  struct Result {
    std::size_t t = 0, max_l = 0;
    bool skipped = false;
  };
  auto results = detail::parallel_map<Result>(elems.size(), jobs, [&] {
    return [&](std::size_t i) {
      Result res;
      try {
        auto z = factorizations_over(Sequence(alphabet, elems[i]), detail::atoms_within(atoms, elems[i]), limits);
        res.t = tame_over(z, z.atom_index(u));
        res.max_l = *z.lengths().rbegin();
      } catch (const error& e) {
        if (e.code() != errc::size_limit) throw;
        res.skipped = true;
      }
      return res;
    };
  });

  std::vector<std::pair<std::size_t, std::size_t>> seen;
  bool max_l_ok = true;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    Sequence a(alphabet, elems[i]);
    if (results[i].skipped) {
      rep.skipped.push_back(a);
      continue;
    }
    rep.add(results[i].t, {a, u});
    seen.emplace_back(results[i].t, u.length());
    max_l_ok = max_l_ok && results[i].t <= results[i].max_l;
  }
  rep.elements_scanned = elems.size();
  detail::tame_bound_checks(rep, *alphabet, seen, max_l_ok);
  return rep;
}

/// Ta(H): positive t(A, u) over zero-sum A with |A| <= bound and atoms u | A.
/// Elements with a prime letter are skipped since t(pA, u) = t(A, u) for
/// u != p and t(pA, p) = 0.
inline ScanReport<std::size_t> ta_scan(const AlphabetPtr& alphabet, const ScanBound& bound, unsigned jobs = 1) {
  ScanReport<std::size_t> rep;
  rep.invariant = "ta";
  rep.alphabet = alphabet;
  rep.bound = bound.max_element_length;
  const auto elems = detail::zero_sum_elements(*alphabet, bound, true);
  const auto atoms = detail::scan_atoms(*alphabet, bound.max_element_length);
  const auto limits = bound.limits();

  struct Result {
    std::vector<std::pair<std::size_t, Exponents>> values;  // (t, u) in atom order
    std::vector<std::pair<std::size_t, std::size_t>> t_and_len;
    bool max_l_ok = true;
    bool skipped = false;
  };
  auto results = detail::parallel_map<Result>(elems.size(), jobs, [&] {
    return [&](std::size_t i) {
      Result res;
      try {
        auto z = factorizations_over(Sequence(alphabet, elems[i]), detail::atoms_within(atoms, elems[i]), limits);
        const auto max_l = *z.lengths().rbegin();
        for (std::size_t k = 0; k < z.atoms().size(); ++k) {
          const auto t = tame_over(z, k);
          res.max_l_ok = res.max_l_ok && t <= max_l;
          if (t > 0) {
            res.values.emplace_back(t, z.atoms()[k].exponents());
            res.t_and_len.emplace_back(t, z.atoms()[k].length());
          }
        }
      } catch (const error& e) {
        if (e.code() != errc::size_limit) throw;
        res.skipped = true;
      }
      return res;
    };
  });

  std::vector<std::pair<std::size_t, std::size_t>> seen;
  bool max_l_ok = true;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    Sequence a(alphabet, elems[i]);
    if (results[i].skipped) {
      rep.skipped.push_back(a);
      continue;
    }
    for (const auto& [t, u] : results[i].values) rep.add(t, {a, Sequence(alphabet, u)});
    seen.insert(seen.end(), results[i].t_and_len.begin(), results[i].t_and_len.end());
    max_l_ok = max_l_ok && results[i].max_l_ok;
  }
  rep.elements_scanned = elems.size();
  detail::tame_bound_checks(rep, *alphabet, seen, max_l_ok);

  const auto& spec = alphabet->spec();
  if (is_elementary_2(spec) && spec.rank() >= 5 && spec.rank() % 2 == 1) {
    const auto r = spec.rank();
    rep.annotations.push_back("conjecture (not asserted): t(H) = 2 + r(r-1)/2 = " + std::to_string(2 + r * (r - 1) / 2));
  }
  if (spec.is_finite() && !alphabet->is_block()) {
    if (auto d = detail::ambient_davenport(spec); d && *d >= 5)
      rep.annotations.push_back("t(H) and t(G) are reported separately; their equality is open for D(G) >= 5");
  }
  rep.set_pinned(pinned_set("ta", *alphabet));
  return rep;
}

}  // namespace zsum
