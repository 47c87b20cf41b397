#pragma once

// Bounded scans over zero-sum sequences: enumeration in canonical order, a
// deterministic parallel map, and the report type shared by every scan.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "zsum/error.hpp"
#include "zsum/factorize.hpp"
#include "zsum/group.hpp"
#include "zsum/sequence.hpp"

namespace zsum {

struct ScanBound {
  std::size_t max_element_length = 0;
  std::optional<std::size_t> max_factorization_count;
  std::optional<std::vector<std::size_t>> support;  // allowed letter indices

  Limits limits() const {
    Limits l;
    if (max_factorization_count) l.max_factorizations = *max_factorization_count;
    return l;
  }
};

/// Element realizing a reported value; `atom` is set for tame degrees and
/// for atom pairs.
struct ScanWitness {
  Sequence element;
  std::optional<Sequence> atom;
};

struct ScanCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

template <class T>
struct ScanReport {
  std::string invariant;
  AlphabetPtr alphabet;
  std::size_t bound = 0;
  std::map<T, ScanWitness> witnesses;
  std::optional<std::set<T>> pinned;
  bool complete = false;
  std::vector<ScanCheck> checks;
  std::vector<std::string> annotations;
  std::size_t elements_scanned = 0;
  std::vector<Sequence> skipped;  // elements over the factorization limit

  std::set<T> values() const {
    std::set<T> out;
    for (const auto& [v, _] : witnesses) out.insert(v);
    return out;
  }

  bool checks_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const ScanCheck& c) { return c.passed; });
  }

  void add(const T& value, const ScanWitness& w) { witnesses.try_emplace(value, w); }

  void check(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }

  void set_pinned(std::optional<std::set<T>> p) {
    pinned = std::move(p);
    complete = pinned && skipped.empty() && *pinned == values();
  }
};

namespace detail {

inline unsigned resolve_jobs(unsigned jobs) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  return jobs;
}

/// Applies a per-worker function to [0, n) with dynamic chunking. `make`
/// builds one callable per worker (so memo tables stay thread-local). Output
/// slot i depends only on input i, so results do not depend on `jobs`.
template <class R, class Make>
std::vector<R> parallel_map(std::size_t n, unsigned jobs, Make&& make) {
  std::vector<R> out(n);
  jobs = static_cast<unsigned>(std::min<std::size_t>(resolve_jobs(jobs), std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto run = [&] {
    try {
      auto f = make();
      constexpr std::size_t chunk = 16;
      while (!failed.load()) {
        const auto start = next.fetch_add(chunk);
        if (start >= n) break;
        for (std::size_t i = start; i < std::min(n, start + chunk); ++i) out[i] = f(i);
      }
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  };
  if (jobs <= 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

inline std::vector<std::size_t> allowed_letters(const Alphabet& a, const ScanBound& bound, bool skip_primes) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (bound.support && std::find(bound.support->begin(), bound.support->end(), i) == bound.support->end())
      continue;
    if (skip_primes && a.class_of(i).is_zero()) continue;
    out.push_back(i);
  }
  return out;
}

template <class Classes>
void enumerate_zero_sums(const Classes& cl, std::size_t letters, const std::vector<std::size_t>& allowed,
                         std::size_t max_len, std::vector<Exponents>& out) {
  Exponents e(letters, 0);
  for (std::size_t len = 1; len <= max_len; ++len) {
    auto rec = [&](auto& self, std::size_t pos, std::size_t rem, const typename Classes::elem& sig) -> void {
      const auto letter = allowed[pos];
      if (pos + 1 == allowed.size()) {
        auto s = sig;
        for (std::size_t k = 0; k < rem; ++k) s = cl.add(s, cl.cls[letter]);
        if (cl.is_zero(s)) {
          e[letter] = static_cast<std::uint32_t>(rem);
          out.push_back(e);
          e[letter] = 0;
        }
        return;
      }
      // Descending exponents give descending lexicographic order.
      std::vector<typename Classes::elem> partial{sig};
      for (std::size_t k = 1; k <= rem; ++k) partial.push_back(cl.add(partial.back(), cl.cls[letter]));
      for (std::size_t k = rem + 1; k-- > 0;) {
        e[letter] = static_cast<std::uint32_t>(k);
        self(self, pos + 1, rem - k, partial[k]);
      }
      e[letter] = 0;
    };
    if (!allowed.empty()) rec(rec, 0, len, cl.zero());
  }
}

/// Nonempty zero-sum exponent vectors with |B| <= bound over the allowed
/// letters, by nondecreasing length and descending lexicographic order
/// within a length.
inline std::vector<Exponents> zero_sum_elements(const Alphabet& a, const ScanBound& bound, bool skip_primes) {
  const auto allowed = allowed_letters(a, bound, skip_primes);
  std::vector<Exponents> out;
  if (a.has_torsion_classes())
    enumerate_zero_sums(IndexedClasses(a), a.size(), allowed, bound.max_element_length, out);
  else
    enumerate_zero_sums(CoordClasses(a), a.size(), allowed, bound.max_element_length, out);
  return out;
}

/// Every atom that can divide an element of length <= bound.
inline std::vector<Exponents> scan_atoms(const Alphabet& a, std::size_t bound) {
  std::vector<Exponents> raw;
  std::vector<std::uint32_t> caps(a.size(), static_cast<std::uint32_t>(bound));
  for_each_atom(a, &caps, [&](const Exponents& e) {
    std::size_t n = 0;
    for (auto v : e) n += v;
    if (n <= bound) raw.push_back(e);
  });
  sort_atoms(raw);
  return raw;
}

inline AtomIndex atoms_within(const std::vector<Exponents>& all, const Exponents& element) {
  std::vector<Exponents> mine;
  for (const auto& a : all)
    if (fits(a, element)) mine.push_back(a);
  return AtomIndex(std::move(mine), element.size());
}

}  // namespace detail

}  // namespace zsum
