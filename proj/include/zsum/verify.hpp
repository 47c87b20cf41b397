#pragma once

// Named, versioned verification suites. Each suite recomputes a fixed list of
// known values with the generic engines and compares them exactly.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "zsum/factorize.hpp"
#include "zsum/invariants.hpp"
#include "zsum/oracle.hpp"
#include "zsum/pinned.hpp"
#include "zsum/scan.hpp"
#include "zsum/tame.hpp"
#include "zsum/witnesses.hpp"

namespace zsum {

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  int version = 1;
  std::vector<VerifyCheck> checks;
  double seconds = 0;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }
};

struct SuiteInfo {
  std::string name;
  int version;
  std::string summary;
  std::function<void(std::vector<VerifyCheck>&, unsigned jobs)> body;
};

namespace detail {

inline std::string show(const std::set<std::size_t>& s) { return join(s); }

inline void expect(std::vector<VerifyCheck>& out, std::string name, bool ok, std::string detail = {}) {
  out.push_back({std::move(name), ok, std::move(detail)});
}

inline void expect_set(std::vector<VerifyCheck>& out, std::string name, const std::set<std::size_t>& got,
                       const std::set<std::size_t>& want) {
  expect(out, std::move(name), got == want, "got " + show(got) + ", want " + show(want));
}

template <class T>
void expect_post_checks(std::vector<VerifyCheck>& out, const std::string& label, const ScanReport<T>& rep) {
  std::string failed;
  for (const auto& c : rep.checks)
    if (!c.passed) failed += c.name + " (" + c.detail + "); ";
  expect(out, label + ": post-checks", failed.empty() && rep.skipped.empty(),
         failed.empty() ? std::to_string(rep.checks.size()) + " checks, " + std::to_string(rep.skipped.size()) +
                              " skipped"
                        : failed);
}

inline void expect_witness(std::vector<VerifyCheck>& out, const Witness& w) {
  const auto r = verify_witness(w);
  expect(out, w.name, r.passed,
         "predicted " + std::to_string(w.predicted) + ", observed " +
             (r.observed ? std::to_string(*r.observed) : std::string("none")) + " via " + r.method +
             (r.detail.empty() ? "" : "; " + r.detail));
}

inline AlphabetPtr block(std::initializer_list<std::int64_t> n) { return block_alphabet(normalize_spec(n)); }

inline ScanBound bounded(std::size_t n) {
  ScanBound b;
  b.max_element_length = n;
  return b;
}

inline void davenport_constants(std::vector<VerifyCheck>& out, unsigned) {
  std::vector<std::pair<GroupSpec, std::size_t>> cases;
  for (std::int64_t n = 2; n <= 7; ++n) cases.emplace_back(normalize_spec({n}), static_cast<std::size_t>(n));
  for (std::size_t r = 1; r <= 4; ++r)
    cases.emplace_back(normalize_spec(std::vector<std::int64_t>(r, 2)), r + 1);
  cases.emplace_back(normalize_spec({3, 3}), 5);
  for (const auto& [spec, want] : cases) {
    const auto d = enumerate_atoms(block_alphabet(spec)).davenport;
    const auto star = static_cast<std::size_t>(davenport_star(spec));
    expect(out, "D(" + spec.to_string() + ") = " + std::to_string(want) + " = D*", d == want && star == want,
           "enumerated " + std::to_string(d) + ", D* " + std::to_string(star));
  }
}

inline void small_group_distances(std::vector<VerifyCheck>& out, unsigned jobs) {
  for (auto spec : {normalize_spec({3}), normalize_spec({2, 2})}) {
    auto a = block_alphabet(spec);
    auto delta = delta_scan(a, bounded(9), jobs);
    expect_set(out, "Delta(" + spec.to_string() + "), bound 9", delta.values(), {1});
    expect_post_checks(out, "delta " + spec.to_string(), delta);
    expect_set(out, "daleth*(" + spec.to_string() + ")", daleth_star(a), {3});
  }
  auto c2 = block({2});
  auto delta = delta_scan(c2, bounded(9), jobs);
  expect_set(out, "Delta(C2), bound 9", delta.values(), {});
  expect_set(out, "daleth*(C2)", daleth_star(c2), {});
}

inline void expect_catenary_scan(std::vector<VerifyCheck>& out, const std::string& label, const AlphabetPtr& a,
                                 std::size_t bound, const std::set<std::size_t>& want, unsigned jobs) {
  const auto cs = catenary_scan(a, bounded(bound), jobs);
  expect_set(out, "Ca " + label + ", bound " + std::to_string(bound), cs.ca.values(), want);
  const auto ca = cs.ca.values(), r = cs.r.values();
  const bool included = std::includes(r.begin(), r.end(), ca.begin(), ca.end());
  const bool same_max = ca.empty() == r.empty() && (ca.empty() || *ca.rbegin() == *r.rbegin());
  expect(out, "R contains Ca with equal maxima, " + label, included && same_max,
         "Ca " + show(ca) + ", R " + show(r));
  expect_post_checks(out, "catenary scan " + label, cs.ca);
  expect_post_checks(out, "relation scan " + label, cs.r);
}

inline void catenary_sets(std::vector<VerifyCheck>& out, unsigned jobs) {
  expect_catenary_scan(out, "C3", block({3}), 9, {3}, jobs);
  expect_catenary_scan(out, "C4", block({4}), 10, {2, 3, 4}, jobs);
  expect(out, "max Ca(C4) = D(C4)", *ca_scan(block({4}), bounded(10), jobs).values().rbegin() == 4);
  expect_catenary_scan(out, "C2^3", block({2, 2, 2}), 12, {2, 3, 4}, jobs);
}

inline void krull_catenary_sets(std::vector<VerifyCheck>& out, unsigned jobs) {
  const auto c2 = normalize_spec({2});
  const auto e = standard_basis(c2, false)[0];
  expect_catenary_scan(out, "C2 with two primes in class e", krull_alphabet(c2, {{zero(c2), 1}, {e, 2}}), 10, {2},
                       jobs);
  const auto c3 = normalize_spec({3});
  const auto g = standard_basis(c3, false)[0];
  expect_catenary_scan(out, "C3 with class g doubled",
                       krull_alphabet(c3, {{zero(c3), 1}, {g, 2}, {scale(2, g), 1}}), 10, {2, 3}, jobs);
  expect_catenary_scan(out, "C3 with all multiplicities 1", krull_alphabet(c3, 1), 10, {3}, jobs);
}

inline void infinite_cyclic_catenary(std::vector<VerifyCheck>& out, unsigned) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto ws = infinite_cyclic_catenary_witnesses(n);
    expect_witness(out, ws.front());
    if (n == 2)
      for (std::size_t i = 1; i < ws.size(); ++i) expect_witness(out, ws[i]);
  }
}

inline void elementary_two_tame(std::vector<VerifyCheck>& out, unsigned jobs) {
  const auto ta2 = ta_scan(block({2, 2}), bounded(12), jobs);
  expect_set(out, "Ta(C2^2), bound 12", ta2.values(), {3});
  expect_post_checks(out, "ta C2^2", ta2);
  const auto ta3 = ta_scan(block({2, 2, 2}), bounded(12), jobs);
  expect_set(out, "Ta(C2^3), bound 12", ta3.values(), {2, 3, 4});
  expect_post_checks(out, "ta C2^3", ta3);
  for (auto spec : {normalize_spec({5}), normalize_spec({2, 2, 2})})
    for (std::size_t m = 3; m <= static_cast<std::size_t>(davenport_star(spec)); ++m)
      expect_witness(out, symmetric_pair_witness(spec, m));
  for (std::size_t nu = 1; nu <= 4; ++nu)
    expect_witness(out, elementary_two_tame_construction(TameVariant::even_rank, 4, nu));
}

inline void two_letter_tame(std::vector<VerifyCheck>& out, unsigned jobs) {
  for (std::size_t d = 2; d <= 6; ++d) {
    auto a = two_letter_monoid(d);
    const auto ta = ta_scan(a, bounded(6 * d), jobs);
    expect_set(out, "Ta over {e,-e}, ord e = " + std::to_string(d) + ", bound " + std::to_string(6 * d), ta.values(),
               {d});
    expect_post_checks(out, "ta two-letter d=" + std::to_string(d), ta);
    std::size_t compared = 0, mismatched = 0;
    for (std::size_t s = 0; s <= 4 * d; ++s)
      for (std::size_t t = 0; t <= 4 * d; ++t) {
        if (s % d != t % d || s + t == 0) continue;
        const Sequence b(a, {static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(t)});
        const auto closed = two_letter_factorizations(s, t, d);
        const auto generic = factorizations(b);
        ++compared;
        if (closed.atoms() != generic.atoms() || closed.multiplicities() != generic.multiplicities()) ++mismatched;
      }
    expect(out, "closed-form Z = generic Z, d = " + std::to_string(d), mismatched == 0,
           std::to_string(compared) + " elements, " + std::to_string(mismatched) + " mismatched");
  }
}

inline void tame_two_cases(std::vector<VerifyCheck>& out, unsigned) {
  expect_witness(out, tame_two_witness(TameTwoCase::order_at_least_4, normalize_spec({6})));
  expect_witness(out, tame_two_witness(TameTwoCase::order_3, normalize_spec({3, 3})));
  expect_witness(out, two_primes_witness(2));
  expect_witness(out, two_primes_witness(3));
  expect_witness(out, tame_two_witness(TameTwoCase::infinite, parse_group_spec("Z")));
  expect_witness(out, rank3_tame_two_witness());
}

inline void full_elasticity(std::vector<VerifyCheck>& out, unsigned) {
  const auto c5 = normalize_spec({5});
  expect(out, "rho(C5) = 5/2", rho_group(c5) == Rational(5, 2), to_string(rho_group(c5)));
  auto a = block_alphabet(c5);
  for (std::int64_t den = 1; den <= 4; ++den)
    for (std::int64_t num = den; 2 * num <= 5 * den; ++num) {
      if (std::gcd(num, den) != 1) continue;
      const Rational q(num, den);
      const auto w = find_elasticity_witness(a, q, 40);
      if (!w) {
        expect(out, "elasticity witness for " + to_string(q), false, "none within bound 40");
        continue;
      }
      const auto l = length_set(*w);
      const auto rho = elasticity_of(l);
      expect(out, "elasticity witness for " + to_string(q), rho == q && w->length() <= 40,
             to_string(*w) + " has L = {" + join(l) + "}");
    }
}

// Random instances: distinct a_i with product <= 120, t in [1, 3] and x
// solving sum a_i x_i = t prod a_i, drawn from a fixed seed.
inline void weighted_sum_decomposition(std::vector<VerifyCheck>& out, unsigned) {
  std::mt19937_64 rng(20180517);
  auto uniform = [&](std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); };
  std::size_t instances = 0, failures = 0, infeasible = 0;
  std::string first_failure;
  while (instances < 200) {
    const auto n = static_cast<std::size_t>(uniform(1, 3));
    std::vector<std::int64_t> a;
    std::int64_t prod = 1;
    while (a.size() < n) {
      const auto v = uniform(1, 12);
      if (std::find(a.begin(), a.end(), v) != a.end() || prod * v > 120) continue;
      a.push_back(v);
      prod *= v;
    }
    const auto t = uniform(1, 3);
    std::vector<std::int64_t> x(n, 0);
    std::int64_t left = t * prod;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      x[i] = uniform(0, left / a[i]);
      left -= a[i] * x[i];
    }
    if (left % a[n - 1]) continue;
    x[n - 1] = left / a[n - 1];
    ++instances;
    std::string text = "a=(";
    for (auto v : a) text += std::to_string(v) + ",";
    text += ") x=(";
    for (auto v : x) text += std::to_string(v) + ",";
    text += ") t=" + std::to_string(t);
    bool ok = false;
    try {
      ok = oracle::valid_weighted_decomposition(a, x, t, decompose_weighted_sum(a, x, t));
    } catch (const error& e) {
      text += std::string(": ") + e.what();
    }
    if (!oracle::naive_decompose_weighted_sum(a, x, t)) ++infeasible;
    if (!ok && ++failures == 1) first_failure = text;
  }
  expect(out, "200 random instances decompose", failures == 0,
         failures ? std::to_string(failures) + " failed, first " + first_failure : "all constraints hold");
  expect(out, "exhaustive search finds every instance feasible", infeasible == 0,
         std::to_string(infeasible) + " infeasible");
}

inline std::set<oracle::NaiveFactorization> to_naive(const FactorizationSet& z) {
  std::set<oracle::NaiveFactorization> out;
  for (const auto& m : z.multiplicities()) {
    oracle::NaiveFactorization f;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::uint32_t k = 0; k < m[i]; ++k) f.push_back(z.atoms()[i].exponents());
    std::sort(f.begin(), f.end());
    out.insert(std::move(f));
  }
  return out;
}

inline void oracle_census(std::vector<VerifyCheck>& out, unsigned) {
  for (auto spec : {normalize_spec({3}), normalize_spec({2, 2})}) {
    auto a = block_alphabet(spec);
    const auto elems = zero_sum_elements(*a, bounded(8), false);
    std::map<std::string, std::size_t> mismatches;
    std::size_t atoms_checked = 0;
    for (const auto& e : elems) {
      const Sequence b(a, e);
      if (is_atom(b) != oracle::naive_is_atom(b)) ++mismatches["is_atom"];
      const auto z = factorizations(b);
      const auto nz = oracle::naive_factorizations(b);
      if (to_naive(z) != nz) ++mismatches["Z"];
      if (z.lengths() != oracle::naive_length_set(nz)) ++mismatches["L"];
      const auto info = catenary_info(z);
      if (info.catenary != oracle::naive_catenary(nz)) ++mismatches["c"];
      if (info.minimal_relations != oracle::naive_minimal_relations(nz)) ++mismatches["minimal relations"];
      for (std::size_t k = 0; k < z.atoms().size(); ++k) {
        ++atoms_checked;
        if (tame_over(z, k) != oracle::naive_tame(nz, z.atoms()[k].exponents())) ++mismatches["t"];
      }
    }
    // is_atom on sequences that are not zero-sum, including sub-multisets of atoms
    for (const auto& e : zero_sum_elements(*a, bounded(8), false))
      for (const auto& sub : subsequences(Sequence(a, e)))
        if (!sub.empty() && sub.length() <= 8 && is_atom(sub) != oracle::naive_is_atom(sub)) ++mismatches["is_atom"];
    std::string detail = std::to_string(elems.size()) + " elements, " + std::to_string(atoms_checked) + " (B, u) pairs";
    for (const auto& [what, n] : mismatches) detail += "; " + what + " mismatched " + std::to_string(n);
    expect(out, "fast = naive over " + spec.to_string() + ", |B| <= 8", mismatches.empty(), detail);
  }
}

// Every scan below must pass all of its post-checks. The checks cover
// daleth* within 2 + Delta, Ca within R with equal maxima, c <= D(G) and the
// tame-degree bounds.
inline void structural_inclusions(std::vector<VerifyCheck>& out, unsigned jobs) {
  auto require = [&](const std::string& label, const auto& rep, std::initializer_list<const char*> names) {
    for (const char* n : names) {
      const bool present =
          std::any_of(rep.checks.begin(), rep.checks.end(), [&](const ScanCheck& c) { return c.name == n; });
      expect(out, label + ": runs '" + n + "'", present);
    }
    expect_post_checks(out, label, rep);
  };
  for (auto spec : {normalize_spec({3}), normalize_spec({4}), normalize_spec({5}), normalize_spec({2, 2}),
                    normalize_spec({2, 2, 2})}) {
    auto a = block_alphabet(spec);
    const std::size_t bound = spec.order() <= 4 ? 10 : 9;
    require("delta " + spec.to_string(), delta_scan(a, bounded(bound), jobs), {"daleth* within 2 + Delta"});
    const auto cs = catenary_scan(a, bounded(bound), jobs);
    require("ca " + spec.to_string(), cs.ca, {"Ca within R", "max Ca = max R", "c <= D(G)"});
    require("r " + spec.to_string(), cs.r, {});
    require("ta " + spec.to_string(), ta_scan(a, bounded(bound), jobs),
            {"t(A,u) <= max L(A)", "t(A,u) <= 1 + |u|(D(G)-1)/2"});
  }
  const auto c3 = normalize_spec({3});
  auto k = krull_alphabet(c3, 2);
  require("ca krull C3 x2", catenary_scan(k, bounded(8), jobs).ca, {"Ca within R", "c <= D(G)"});
  require("ta krull C3 x2", ta_scan(k, bounded(8), jobs), {"t(A,u) <= max L(A)"});
}

}  // namespace detail

inline const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> all{
      {"davenport-constants", 1, "D(G) by atom enumeration equals D*(G) for small p-groups and rank-2 groups",
       detail::davenport_constants},
      {"small-group-distances", 1, "Delta and daleth* over C3, C2^2 and C2", detail::small_group_distances},
      {"catenary-sets", 1, "Ca over C3, C4 and C2^3 with R containing Ca", detail::catenary_sets},
      {"krull-catenary-sets", 1, "Ca for Krull alphabets with doubled classes", detail::krull_catenary_sets},
      {"infinite-cyclic-catenary", 1, "catenary witnesses over Z", detail::infinite_cyclic_catenary},
      {"elementary-two-tame", 1, "Ta over C2^2 and C2^3, symmetric pairs and the even-rank construction",
       detail::elementary_two_tame},
      {"two-letter-tame", 1, "Ta over {e,-e} and the closed form of its factorizations", detail::two_letter_tame},
      {"tame-two-cases", 1, "witnesses with tame degree 2", detail::tame_two_cases},
      {"full-elasticity", 1, "elasticity witnesses over C5 for every a/b in [1, 5/2] with b <= 4",
       detail::full_elasticity},
      {"weighted-sum-decomposition", 1, "splitting sum a_i x_i = t prod a_i into t columns",
       detail::weighted_sum_decomposition},
      {"oracle-census", 1, "fast engines agree with brute force on C3 and C2^2 up to length 8", detail::oracle_census},
      {"structural-inclusions", 1, "post-checks of every scan pass", detail::structural_inclusions},
  };
  return all;
}

inline const SuiteInfo* find_suite(std::string_view name) {
  for (const auto& s : suites())
    if (s.name == name) return &s;
  return nullptr;
}

inline SuiteResult run_suite(const SuiteInfo& s, unsigned jobs = 1) {
  SuiteResult r;
  r.suite = s.name;
  r.version = s.version;
  const auto start = std::chrono::steady_clock::now();
  try {
    s.body(r.checks, jobs);
  } catch (const std::exception& e) {
    r.checks.push_back({"suite completed", false, e.what()});
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace zsum
