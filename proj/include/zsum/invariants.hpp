#pragma once

// Monoid-level invariants: sets of distances, the atom-pair set daleth*,
// elasticities, catenary degrees and minimal relations over bounded scans,
// and the weighted-sum decomposition used for full elasticity.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "zsum/error.hpp"
#include "zsum/factorize.hpp"
#include "zsum/group.hpp"
#include "zsum/pinned.hpp"
#include "zsum/scan.hpp"
#include "zsum/sequence.hpp"

namespace zsum {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& q) {
  return q.denominator() == 1 ? std::to_string(q.numerator())
                              : std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

/// Successive gaps of a sorted set.
inline std::set<std::size_t> delta_of(const std::set<std::size_t>& l) {
  std::set<std::size_t> out;
  for (auto it = l.begin(); it != l.end() && std::next(it) != l.end(); ++it) out.insert(*std::next(it) - *it);
  return out;
}

/// max L / min L, with rho({0}) = 1.
inline Rational elasticity_of(const std::set<std::size_t>& l) {
  if (l.empty()) throw error(errc::invalid_parameters, "elasticity of an empty set");
  if (*l.begin() == 0) {
    if (l.size() == 1) return Rational(1);
    throw error(errc::invalid_parameters, "length set contains 0 and a positive length");
  }
  return Rational(static_cast<std::int64_t>(*l.rbegin()), static_cast<std::int64_t>(*l.begin()));
}

/// D(G) by exhaustive atom enumeration.
inline std::size_t davenport(const GroupSpec& spec) {
  if (!spec.is_finite()) throw error(errc::not_enumerable, spec.to_string() + " is infinite");
  return enumerate_atoms(block_alphabet(spec)).davenport;
}

/// D(G) from the formula where it is known to be exact, by enumeration otherwise.
inline std::size_t davenport_of_group(const GroupSpec& spec) {
  if (auto d = known_davenport(spec)) return static_cast<std::size_t>(*d);
  return davenport(spec);
}

/// rho(G) = D(G)/2.
inline Rational rho_group(const GroupSpec& spec) {
  if (!spec.is_finite()) throw error(errc::unsupported_group, spec.to_string() + " is infinite");
  return Rational(static_cast<std::int64_t>(davenport_of_group(spec)), 2);
}

namespace detail {

inline std::size_t alphabet_davenport(const std::vector<Exponents>& atoms) {
  std::size_t d = 0;
  for (const auto& a : atoms) d = std::max(d, static_cast<std::size_t>(std::accumulate(a.begin(), a.end(), 0u)));
  return d;
}

inline std::string join(const std::set<std::size_t>& s) {
  std::string out = "{";
  for (auto v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

// D(G) of the ambient group when it is finite and cheap to get.
inline std::optional<std::size_t> ambient_davenport(const GroupSpec& spec) {
  if (!spec.is_finite()) return std::nullopt;
  if (auto d = known_davenport(spec)) return static_cast<std::size_t>(*d);
  if (spec.order() <= 64) return davenport(spec);
  return std::nullopt;
}

}  // namespace detail

/// daleth*: min(L(uv) \ {2}) over atom pairs with |L(uv)| > 1. Each value
/// keeps its shortest witness uv (with u recorded as the atom).
inline ScanReport<std::size_t> daleth_star_report(const AlphabetPtr& alphabet) {
  if (!alphabet->has_torsion_classes())
    throw error(errc::not_enumerable, "daleth* needs a finite atom set");
  ScanReport<std::size_t> rep;
  rep.invariant = "daleth";
  rep.alphabet = alphabet;
  std::vector<Exponents> atoms;
  detail::for_each_atom(*alphabet, nullptr, [&](const Exponents& e) { atoms.push_back(e); });
  detail::sort_atoms(atoms);
  LengthEngine engine(detail::AtomIndex(atoms, alphabet->size()));
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = i; j < atoms.size(); ++j) {
      Exponents uv = atoms[i];
      for (std::size_t k = 0; k < uv.size(); ++k) uv[k] += atoms[j][k];
      auto l = engine.lengths(uv);
      if (l.size() <= 1) continue;
      l.erase(2);
      const auto v = *l.begin();
      Sequence elem(alphabet, uv);
      auto it = rep.witnesses.find(v);
      if (it == rep.witnesses.end())
        rep.add(v, {elem, Sequence(alphabet, atoms[i])});
      else if (elem.length() < it->second.element.length())
        it->second = {elem, Sequence(alphabet, atoms[i])};
    }
  }
  rep.bound = 2 * detail::alphabet_davenport(atoms);
  rep.set_pinned(pinned_set("daleth", *alphabet));
  return rep;
}

inline std::set<std::size_t> daleth_star(const AlphabetPtr& alphabet) { return daleth_star_report(alphabet).values(); }

/// Union of Delta(L(B)) over zero-sum B with |B| <= bound. Elements with a
/// prime letter are skipped: L(p^k B) = k + L(B).
inline ScanReport<std::size_t> delta_scan(const AlphabetPtr& alphabet, const ScanBound& bound, unsigned jobs = 1) {
  ScanReport<std::size_t> rep;
  rep.invariant = "delta";
  rep.alphabet = alphabet;
  rep.bound = bound.max_element_length;
  const auto elems = detail::zero_sum_elements(*alphabet, bound, true);
  const auto atoms = detail::scan_atoms(*alphabet, bound.max_element_length);
  rep.elements_scanned = elems.size();

  auto results = detail::parallel_map<std::set<std::size_t>>(elems.size(), jobs, [&] {
    return [&, engine = LengthEngine(detail::AtomIndex(atoms, alphabet->size()))](std::size_t i) mutable {
      return delta_of(engine.lengths(elems[i]));
    };
  });
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (auto v : results[i]) rep.add(v, {Sequence(alphabet, elems[i]), std::nullopt});

  const auto vals = rep.values();
  if (!vals.empty()) {
    std::size_t g = 0;
    for (auto v : vals) g = std::gcd(g, v);
    rep.check("min Delta = gcd Delta", *vals.begin() == g,
              "min " + std::to_string(*vals.begin()) + ", gcd " + std::to_string(g));
  }
  if (alphabet->has_torsion_classes() && !bound.support) {
    const auto daleth = daleth_star_report(alphabet);
    bool ok = true;
    std::string detail;
    for (const auto& [v, w] : daleth.witnesses) {
      if (w.element.length() > bound.max_element_length) continue;
      if (!vals.count(v - 2)) {
        ok = false;
        detail += std::to_string(v) + " ";
      }
    }
    rep.check("daleth* within 2 + Delta", ok, detail.empty() ? "" : "missing " + detail);
  }
  rep.set_pinned(pinned_set("delta", *alphabet));
  return rep;
}

/// {rho(L(B))} over zero-sum B with |B| <= bound, primes included.
inline ScanReport<Rational> elasticity_scan(const AlphabetPtr& alphabet, const ScanBound& bound, unsigned jobs = 1) {
  ScanReport<Rational> rep;
  rep.invariant = "elasticity";
  rep.alphabet = alphabet;
  rep.bound = bound.max_element_length;
  const auto elems = detail::zero_sum_elements(*alphabet, bound, false);
  const auto atoms = detail::scan_atoms(*alphabet, bound.max_element_length);
  rep.elements_scanned = elems.size();

  auto results = detail::parallel_map<Rational>(elems.size(), jobs, [&] {
    return [&, engine = LengthEngine(detail::AtomIndex(atoms, alphabet->size()))](std::size_t i) mutable {
      auto ext = engine.extremes(elems[i]);
      return Rational(static_cast<std::int64_t>(ext->second), static_cast<std::int64_t>(ext->first));
    };
  });
  for (std::size_t i = 0; i < elems.size(); ++i) rep.add(results[i], {Sequence(alphabet, elems[i]), std::nullopt});

  if (alphabet->has_torsion_classes()) {
    const auto d = detail::alphabet_davenport(atoms);
    const Rational cap(static_cast<std::int64_t>(std::max<std::size_t>(d, 2)), 2);
    const auto vals = rep.values();
    rep.check("rho(L) <= D/2", vals.empty() || *vals.rbegin() <= cap, "D = " + std::to_string(d));
  }
  return rep;
}

/// Looks for B with rho(L(B)) = q and |B| <= bound. Symmetric products
/// U^x (-U)^x are tried first, then all prime-free elements by length; a
/// candidate with (min, max) lengths (m, M) is also padded with k copies of
/// a prime letter when (M + k) / (m + k) = q. NOT-FOUND (nullopt) says
/// nothing about elements beyond the bound.
inline std::optional<Sequence> find_elasticity_witness(const AlphabetPtr& alphabet, const Rational& q,
                                                       std::size_t bound) {
  if (!alphabet->has_torsion_classes())
    throw error(errc::unsupported_alphabet, "elasticity witnesses need a finite atom set");
  std::vector<Exponents> atoms;
  detail::for_each_atom(*alphabet, nullptr, [&](const Exponents& e) { atoms.push_back(e); });
  detail::sort_atoms(atoms);
  const auto d = detail::alphabet_davenport(atoms);
  const Rational cap(static_cast<std::int64_t>(std::max<std::size_t>(d, 2)), 2);
  if (q < Rational(1) || q > cap) throw error(errc::invalid_target, to_string(q) + " outside [1, " + to_string(cap) + "]");

  if (q == Rational(1)) {
    for (const auto& a : atoms) {
      Sequence s(alphabet, a);
      if (s.length() <= bound) return s;
    }
    return std::nullopt;
  }

  std::optional<std::size_t> prime;
  for (std::size_t i = 0; i < alphabet->size(); ++i)
    if (alphabet->class_of(i).is_zero()) {
      prime = i;
      break;
    }

  LengthEngine engine(detail::AtomIndex(atoms, alphabet->size()));
  const auto a = q.numerator(), b = q.denominator();
  auto attempt = [&](const Exponents& e) -> std::optional<Sequence> {
    auto ext = engine.extremes(e);
    if (!ext) return std::nullopt;
    const auto m = static_cast<std::int64_t>(ext->first), big = static_cast<std::int64_t>(ext->second);
    Sequence s(alphabet, e);
    if (big * b == a * m) return s;
    if (!prime) return std::nullopt;
    const auto num = b * big - a * m;
    if (num < 0 || num % (a - b)) return std::nullopt;
    const auto k = num / (a - b);
    if (s.length() + static_cast<std::size_t>(k) > bound) return std::nullopt;
    Exponents padded = e;
    padded[*prime] += static_cast<std::uint32_t>(k);
    return Sequence(alphabet, std::move(padded));
  };

  for (const auto& u : atoms) {
    Sequence su(alphabet, u);
    if (su.length() < 2) continue;
    std::optional<Sequence> nu;
    try {
      nu = neg_seq(su);
    } catch (const error&) {
      continue;
    }
    for (std::size_t x = 1; 2 * su.length() * x <= bound; ++x) {
      auto e = mul(pow(su, static_cast<std::uint32_t>(x)), pow(*nu, static_cast<std::uint32_t>(x))).exponents();
      if (auto hit = attempt(e)) return hit;
    }
  }

  ScanBound sb;
  sb.max_element_length = bound;
  for (const auto& e : detail::zero_sum_elements(*alphabet, sb, prime.has_value()))
    if (auto hit = attempt(e)) return hit;
  return std::nullopt;
}

/// Catenary degrees >= 2 and minimal relations over one scan.
struct CatenaryScan {
  ScanReport<std::size_t> ca;
  ScanReport<std::size_t> r;
};

inline CatenaryScan catenary_scan(const AlphabetPtr& alphabet, const ScanBound& bound, unsigned jobs = 1) {
  CatenaryScan out;
  for (auto* rep : {&out.ca, &out.r}) {
    rep->alphabet = alphabet;
    rep->bound = bound.max_element_length;
  }
  out.ca.invariant = "ca";
  out.r.invariant = "r";
  const auto elems = detail::zero_sum_elements(*alphabet, bound, true);
  const auto atoms = detail::scan_atoms(*alphabet, bound.max_element_length);
  const auto limits = bound.limits();

  struct Result {
    CatenaryInfo info;
    bool skipped = false;
  };
  auto results = detail::parallel_map<Result>(elems.size(), jobs, [&] {
    return [&](std::size_t i) {
      Result res;
      try {
        Sequence b(alphabet, elems[i]);
        res.info = catenary_info(factorizations_over(b, detail::atoms_within(atoms, elems[i]), limits));
      } catch (const error& e) {
        if (e.code() != errc::size_limit) throw;
        res.skipped = true;
      }
      return res;
    };
  });

  std::size_t worst = 0;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    Sequence b(alphabet, elems[i]);
    if (results[i].skipped) {
      out.ca.skipped.push_back(b);
      out.r.skipped.push_back(b);
      continue;
    }
    const auto& info = results[i].info;
    worst = std::max(worst, info.catenary);
    if (info.catenary >= 2) out.ca.add(info.catenary, {b, std::nullopt});
    for (auto v : info.minimal_relations) out.r.add(v, {b, std::nullopt});
  }
  out.ca.elements_scanned = out.r.elements_scanned = elems.size();

  const auto ca = out.ca.values(), r = out.r.values();
  const bool subset = std::includes(r.begin(), r.end(), ca.begin(), ca.end());
  const bool same_max = ca.empty() == r.empty() && (ca.empty() || *ca.rbegin() == *r.rbegin());
  for (auto* rep : {&out.ca, &out.r}) {
    rep->check("Ca within R", subset, "Ca " + detail::join(ca) + ", R " + detail::join(r));
    rep->check("max Ca = max R", same_max);
    if (auto d = detail::ambient_davenport(alphabet->spec()))
      rep->check("c <= D(G)", worst <= *d, "max c " + std::to_string(worst) + ", D(G) " + std::to_string(*d));
  }
  if (alphabet->has_torsion_classes() && !bound.support) {
    const auto daleth = daleth_star_report(alphabet);
    bool ok = true;
    std::string missing;
    for (const auto& [v, w] : daleth.witnesses) {
      if (w.element.length() > bound.max_element_length) continue;
      if (!r.count(v)) {
        ok = false;
        missing += std::to_string(v) + " ";
      }
    }
    out.r.check("daleth* within R", ok, missing.empty() ? "" : "missing " + missing);
  }
  out.ca.set_pinned(pinned_set("ca", *alphabet));
  out.r.set_pinned(pinned_set("r", *alphabet));
  return out;
}

inline ScanReport<std::size_t> ca_scan(const AlphabetPtr& alphabet, const ScanBound& bound, unsigned jobs = 1) {
  return catenary_scan(alphabet, bound, jobs).ca;
}

inline ScanReport<std::size_t> r_scan(const AlphabetPtr& alphabet, const ScanBound& bound, unsigned jobs = 1) {
  return catenary_scan(alphabet, bound, jobs).r;
}

namespace detail {

inline void require_weighted_instance(std::span<const std::int64_t> a, std::span<const std::int64_t> x,
                                      std::int64_t t) {
  if (a.empty() || a.size() != x.size()) throw error(errc::invalid_instance, "a and x must have equal nonzero length");
  if (t < 1) throw error(errc::invalid_instance, "t must be positive");
  std::set<std::int64_t> seen;
  std::int64_t prod = 1, sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 1 || x[i] < 0) throw error(errc::invalid_instance, "a_i must be positive and x_i nonnegative");
    if (!seen.insert(a[i]).second) throw error(errc::invalid_instance, "a_i must be pairwise distinct");
    prod *= a[i];
    sum += a[i] * x[i];
  }
  if (sum != t * prod) throw error(errc::invalid_instance, "sum a_i x_i differs from t * prod a_i");
}

// One column x' <= x with sum a_i x'_i = prod a_i, given sum a_i x_i = t prod a_i, t >= 2.
inline std::vector<std::int64_t> weighted_column(std::span<const std::int64_t> a, std::span<const std::int64_t> x) {
  const auto n = a.size();
  std::vector<std::int64_t> col(n, 0);
  std::int64_t prod = 1;
  for (auto v : a) prod *= v;
  if (n == 1) {
    col[0] = 1;
    return col;
  }
  if (n == 2) {
    if (a[0] * x[0] >= prod)
      col[0] = a[1];
    else
      col[1] = a[0];
    return col;
  }
  std::size_t i1 = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (a[i] * x[i] > a[i1] * x[i1]) i1 = i;
  const auto rest = prod / a[i1];
  // Largest reachable sum <= rest of a_i y'_i with y'_i <= floor(x_i / a_i1).
  std::vector<int> reach(static_cast<std::size_t>(rest) + 1, -1);
  std::vector<std::vector<std::int64_t>> choice(static_cast<std::size_t>(rest) + 1);
  reach[0] = 0;
  choice[0].assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == i1) continue;
    const auto y = x[i] / a[i1];
    for (std::int64_t s = rest; s >= 0; --s) {
      if (reach[static_cast<std::size_t>(s)] < 0) continue;
      for (std::int64_t k = 1; k <= y && s + k * a[i] <= rest; ++k) {
        const auto t = static_cast<std::size_t>(s + k * a[i]);
        if (reach[t] >= 0) continue;
        reach[t] = 0;
        choice[t] = choice[static_cast<std::size_t>(s)];
        choice[t][i] = k;
      }
    }
  }
  std::int64_t best = rest;
  while (reach[static_cast<std::size_t>(best)] < 0) --best;
  const auto gap = rest - best;
  if (gap > x[i1]) throw error(errc::invalid_instance, "no column found; the instance violates the hypotheses");
  for (std::size_t i = 0; i < n; ++i) col[i] = i == i1 ? gap : choice[static_cast<std::size_t>(best)][i] * a[i1];
  return col;
}

}  // namespace detail

/// Splits x into t columns x^(1..t) with 0 <= x_i^(j) <= x_i, row sums x_i and
/// sum_i a_i x_i^(j) = prod a_i for every j. Returns rows (one per a_i).
inline std::vector<std::vector<std::int64_t>> decompose_weighted_sum(std::span<const std::int64_t> a,
                                                                     std::span<const std::int64_t> x,
                                                                     std::int64_t t) {
  detail::require_weighted_instance(a, x, t);
  const auto n = a.size();
  std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(static_cast<std::size_t>(t), 0));
  std::vector<std::int64_t> rem(x.begin(), x.end());
  for (std::int64_t j = 0; j + 1 < t; ++j) {
    const auto col = detail::weighted_column(a, rem);
    for (std::size_t i = 0; i < n; ++i) {
      rows[i][static_cast<std::size_t>(j)] = col[i];
      rem[i] -= col[i];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rows[i][static_cast<std::size_t>(t - 1)] = rem[i];
  return rows;
}

}  // namespace zsum
