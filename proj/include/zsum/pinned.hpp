#pragma once

// Invariant sets known exactly for small configurations. A scan report is
// marked complete only when its observed set equals the entry found here.

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string_view>

#include "zsum/group.hpp"
#include "zsum/sequence.hpp"

namespace zsum {

/// 1 + sum (n_i - 1) for a finite group in invariant-factor form.
inline std::int64_t davenport_star(const GroupSpec& spec) {
  if (!spec.is_finite()) throw error(errc::unsupported_group, spec.to_string() + " is infinite");
  std::int64_t d = 1;
  for (auto n : spec.torsion()) d += n - 1;
  return d;
}

inline bool is_p_group(const GroupSpec& spec) {
  if (!spec.is_finite() || spec.is_trivial()) return spec.is_finite();
  std::int64_t n = spec.exponent(), p = 2;
  while (n % p) ++p;
  while (n % p == 0) n /= p;
  return n == 1;  // the exponent is a prime power, hence so is every n_i
}

/// D(G) where it coincides with D*(G): p-groups and groups of rank <= 2.
inline std::optional<std::int64_t> known_davenport(const GroupSpec& spec) {
  if (!spec.is_finite()) return std::nullopt;
  if (is_p_group(spec) || spec.rank() <= 2) return davenport_star(spec);
  return std::nullopt;
}

inline bool is_elementary_2(const GroupSpec& spec) {
  return spec.is_finite() && std::all_of(spec.torsion().begin(), spec.torsion().end(), [](auto n) { return n == 2; });
}

/// Number of letters per class, together with the facts the table keys on.
struct AlphabetProfile {
  std::map<GroupElement, std::size_t> multiplicity;
  bool full_cover = false;       // every class of the finite group has a letter
  bool doubled_nonzero = false;  // some nonzero class has at least two letters
  std::optional<std::uint64_t> symmetric_pair_order;  // letters {e,-e} (or two letters of class e, 2e = 0)

  explicit AlphabetProfile(const Alphabet& a) {
    for (const auto& l : a.letters()) ++multiplicity[l.cls];
    for (const auto& [g, m] : multiplicity)
      if (!g.is_zero() && m >= 2) doubled_nonzero = true;
    const auto& spec = a.spec();
    full_cover = spec.is_finite() && multiplicity.size() == spec.order();
    if (a.size() == 2) {
      const auto& g = a.class_of(0);
      const auto& h = a.class_of(1);
      const auto o = order(g);
      if (!g.is_zero() && o && h == neg(g)) symmetric_pair_order = *o;
    }
  }
};

namespace detail {
inline std::set<std::size_t> interval(std::size_t lo, std::size_t hi) {
  std::set<std::size_t> s;
  for (auto v = lo; v <= hi; ++v) s.insert(v);
  return s;
}
}  // namespace detail

/// Exact value set for "delta", "daleth", "ca", "r" or "ta" over the given
/// alphabet, when one is known; nullopt otherwise.
inline std::optional<std::set<std::size_t>> pinned_set(std::string_view invariant, const Alphabet& a) {
  using detail::interval;
  const AlphabetProfile prof(a);
  const auto& spec = a.spec();

  if (invariant == "ta" && prof.symmetric_pair_order) {
    const auto d = static_cast<std::size_t>(*prof.symmetric_pair_order);
    if (d >= 2) return std::set<std::size_t>{d};
  }
  if (!prof.full_cover) return std::nullopt;

  const auto dav = known_davenport(spec);
  if (!dav) return std::nullopt;
  const auto d = static_cast<std::size_t>(*dav);
  const bool c_is_d = (spec.is_finite() && spec.is_cyclic()) || is_elementary_2(spec);

  if (invariant == "delta" || invariant == "daleth") {
    const bool delta = invariant == "delta";
    if (d <= 2) return std::set<std::size_t>{};
    if (d == 3) return delta ? std::set<std::size_t>{1} : std::set<std::size_t>{3};
    if (c_is_d) return delta ? interval(1, d - 2) : interval(3, d);
    return std::nullopt;
  }
  if (invariant == "ca" || invariant == "r") {
    if (spec.order() == 1) return std::set<std::size_t>{};
    if (spec.order() == 2) return prof.doubled_nonzero ? std::set<std::size_t>{2} : std::set<std::size_t>{};
    if (d == 3) return prof.doubled_nonzero ? interval(2, 3) : std::set<std::size_t>{3};
    if (c_is_d) return interval(2, d);
    return std::nullopt;
  }
  if (invariant == "ta") {
    if (is_elementary_2(spec)) {
      const auto r = spec.rank();
      if (r == 0) return std::set<std::size_t>{};
      if (r == 1) return prof.doubled_nonzero ? std::set<std::size_t>{2} : std::set<std::size_t>{};
      if (r == 2) return prof.doubled_nonzero ? interval(2, 3) : std::set<std::size_t>{3};
      if (r == 3) return prof.doubled_nonzero ? interval(2, 5) : interval(2, 4);
      if (r % 2 == 0) return interval(2, 1 + r * r / 2);
      return std::nullopt;
    }
    if (spec.is_finite() && spec.is_cyclic() && spec.order() == 3 && !prof.doubled_nonzero) return std::set<std::size_t>{3};
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace zsum
