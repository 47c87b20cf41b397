#pragma once

// Atoms (minimal zero-sum sequences), factorization sets Z(B), sets of
// lengths L(B), the distance d, catenary degrees and minimal relations.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "zsum/error.hpp"
#include "zsum/group.hpp"
#include "zsum/sequence.hpp"

namespace zsum {

/// Resource limits shared by every operation that materializes Z(B).
struct Limits {
  std::size_t max_factorizations = 20000;
};

namespace detail {

// Class arithmetic on indices of the torsion subgroup.
struct IndexedClasses {
  using elem = std::uint64_t;
  using sums = std::vector<std::uint8_t>;

  const TorsionIndexer* ix;
  std::vector<elem> cls;
  std::vector<std::uint64_t> table;  // addition table for small groups
  std::uint64_t n;

  explicit IndexedClasses(const Alphabet& a)
      : ix(&a.indexer()), cls(a.class_indices().begin(), a.class_indices().end()), n(a.indexer().size()) {
    if (n <= 512) {
      table.resize(n * n);
      for (std::uint64_t i = 0; i < n; ++i)
        for (std::uint64_t j = 0; j < n; ++j) table[i * n + j] = ix->add(i, j);
    }
  }

  elem zero() const { return 0; }
  elem add(elem a, elem b) const { return table.empty() ? ix->add(a, b) : table[a * n + b]; }
  elem neg(elem a) const { return ix->neg(a); }
  bool is_zero(elem a) const { return a == 0; }
  sums empty_sums() const { return sums(n, 0); }
  bool contains(const sums& s, elem g) const { return s[g] != 0; }
  sums extend(const sums& s, elem g) const {
    sums out = s;
    for (std::uint64_t i = 0; i < n; ++i)
      if (s[i]) out[add(i, g)] = 1;
    out[g] = 1;
    return out;
  }
};

// Class arithmetic on coordinate vectors; works for infinite groups.
struct CoordClasses {
  using elem = std::vector<std::int64_t>;
  using sums = std::set<elem>;

  std::vector<std::int64_t> mod;  // 0 for free coordinates
  std::vector<elem> cls;

  explicit CoordClasses(const Alphabet& a) {
    const auto& spec = a.spec();
    mod.assign(spec.free_rank(), 0);
    for (auto t : spec.torsion()) mod.push_back(t);
    for (const auto& l : a.letters()) cls.emplace_back(l.cls.coords().begin(), l.cls.coords().end());
  }

  elem zero() const { return elem(mod.size(), 0); }
  elem add(const elem& a, const elem& b) const {
    elem c(a.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod[i] ? floor_mod(a[i] + b[i], mod[i]) : a[i] + b[i];
    return c;
  }
  elem neg(const elem& a) const {
    elem c(a.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod[i] ? floor_mod(-a[i], mod[i]) : -a[i];
    return c;
  }
  bool is_zero(const elem& a) const {
    return std::all_of(a.begin(), a.end(), [](auto v) { return v == 0; });
  }
  sums empty_sums() const { return {}; }
  bool contains(const sums& s, const elem& g) const { return s.count(g) != 0; }
  sums extend(const sums& s, const elem& g) const {
    sums out = s;
    for (const auto& x : s) out.insert(add(x, g));
    out.insert(g);
    return out;
  }
};

// Every atom S is T·g where T is zero-sum-free, g = -σ(T) and g is the
// largest letter of S. Walking zero-sum-free T with non-decreasing letters
// and appending only letters >= max(T) yields each atom exactly once.
template <class Classes, class Emit>
void search_atoms(const Classes& cl, std::size_t letters, const std::vector<std::uint32_t>* caps, Emit&& emit) {
  Exponents t(letters, 0);
  auto under_cap = [&](std::size_t j) { return !caps || t[j] < (*caps)[j]; };

  auto visit = [&](auto& self, std::size_t last, const typename Classes::elem& sig,
                   const typename Classes::sums& sums) -> void {
    const auto target = cl.neg(sig);
    for (std::size_t j = last; j < letters; ++j) {
      if (cl.cls[j] == target && under_cap(j)) {
        ++t[j];
        emit(t);
        --t[j];
      }
    }
    for (std::size_t j = last; j < letters; ++j) {
      const auto& g = cl.cls[j];
      if (cl.is_zero(g) || !under_cap(j)) continue;
      if (cl.contains(sums, cl.neg(g))) continue;
      auto next = cl.extend(sums, g);
      ++t[j];
      self(self, j, cl.add(sig, g), next);
      --t[j];
    }
  };
  visit(visit, 0, cl.zero(), cl.empty_sums());
}

template <class Emit>
void for_each_atom(const Alphabet& a, const std::vector<std::uint32_t>* caps, Emit&& emit) {
  if (a.has_torsion_classes()) {
    IndexedClasses cl(a);
    search_atoms(cl, a.size(), caps, emit);
  } else {
    CoordClasses cl(a);
    search_atoms(cl, a.size(), caps, emit);
  }
}

// Canonical atom order: exponent vectors in descending lexicographic order.
// Atoms are thereby grouped by their smallest letter, ascending.
inline void sort_atoms(std::vector<Exponents>& atoms) {
  std::sort(atoms.begin(), atoms.end(), std::greater<>());
}

inline std::string memo_key(const Exponents& e, std::size_t extra = 0) {
  std::string k;
  k.reserve(2 * e.size() + 4);
  for (auto v : e) {
    k.push_back(static_cast<char>(v & 0xff));
    k.push_back(static_cast<char>((v >> 8) & 0xff));
  }
  for (int i = 0; i < 4; ++i) k.push_back(static_cast<char>((extra >> (8 * i)) & 0xff));
  return k;
}

inline std::size_t first_letter(const Exponents& e) {
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i]) return i;
  return e.size();
}

inline bool fits(const Exponents& a, const Exponents& rem) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > rem[i]) return false;
  return true;
}

/// Atom list prepared for factorization searches: canonical order plus the
/// contiguous index range of atoms whose smallest letter is p.
struct AtomIndex {
  std::vector<Exponents> atoms;
  std::vector<std::size_t> lo, hi;

  AtomIndex() = default;
  AtomIndex(std::vector<Exponents> a, std::size_t letters) : atoms(std::move(a)) {
    sort_atoms(atoms);
    lo.assign(letters + 1, 0);
    hi.assign(letters + 1, 0);
    std::vector<bool> seen(letters + 1, false);
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      const auto p = first_letter(atoms[j]);
      if (!seen[p]) {
        lo[p] = j;
        seen[p] = true;
      }
      hi[p] = j + 1;
    }
  }
};

/// Multiset-of-atoms enumeration. Each step covers the smallest letter left
/// in the remainder with an atom of index >= the previous one, so every
/// factorization is produced once. Dead (remainder, index) states are memoized.
inline std::vector<Exponents> enumerate_factorizations(const Exponents& element, const AtomIndex& ai,
                                                       std::size_t limit) {
  std::vector<Exponents> out;
  Exponents counts(ai.atoms.size(), 0);
  std::unordered_set<std::string> dead;

  auto rec = [&](auto& self, Exponents& rem, std::size_t from) -> bool {
    const auto p = first_letter(rem);
    if (p == rem.size()) {
      out.push_back(counts);
      if (out.size() > limit)
        throw error(errc::size_limit, "more than " + std::to_string(limit) + " factorizations");
      return true;
    }
    auto key = memo_key(rem, from);
    if (dead.count(key)) return false;
    bool any = false;
    for (std::size_t j = std::max(from, ai.lo[p]); j < ai.hi[p]; ++j) {
      const auto& a = ai.atoms[j];
      if (!fits(a, rem)) continue;
      for (std::size_t i = 0; i < rem.size(); ++i) rem[i] -= a[i];
      ++counts[j];
      any |= self(self, rem, j);
      --counts[j];
      for (std::size_t i = 0; i < rem.size(); ++i) rem[i] += a[i];
    }
    if (!any) dead.insert(std::move(key));
    return any;
  };
  Exponents rem = element;
  rec(rec, rem, 0);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// d(z, z') = max of the two residual lengths after cancelling the gcd.
inline std::size_t count_distance(const Exponents& a, const Exponents& b) {
  std::size_t left = 0, right = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i])
      left += a[i] - b[i];
    else
      right += b[i] - a[i];
  }
  return std::max(left, right);
}

inline void require_zero_sum(const Sequence& b) {
  if (!is_zero_sum(b)) throw error(errc::not_zero_sum, to_string(b) + " has nonzero sum");
}

}  // namespace detail

/// True iff S is a nonempty zero-sum sequence without a proper nonempty
/// zero-sum subsequence. Subsums are grown term by term and the check exits as
/// soon as 0 shows up.
inline bool is_atom(const Sequence& s) {
  if (s.empty() || !is_zero_sum(s)) return false;
  const auto& a = s.alphabet();
  // S = T·g; S is an atom iff T is zero-sum-free.
  Exponents t = s.exponents();
  for (std::size_t i = t.size(); i-- > 0;)
    if (t[i]) {
      --t[i];
      break;
    }
  auto check = [&](const auto& cl) {
    auto sums = cl.empty_sums();
    for (std::size_t j = 0; j < t.size(); ++j) {
      for (std::uint32_t k = 0; k < t[j]; ++k) {
        const auto& g = cl.cls[j];
        if (cl.is_zero(g) || cl.contains(sums, cl.neg(g))) return false;
        sums = cl.extend(sums, g);
      }
    }
    return true;
  };
  if (a.has_torsion_classes()) return check(detail::IndexedClasses(a));
  return check(detail::CoordClasses(a));
}

/// The complete atom set of B(alphabet) together with D = max |A|.
struct AtomSet {
  AlphabetPtr alphabet;
  std::vector<Sequence> atoms;
  std::size_t davenport = 0;
};

inline AtomSet enumerate_atoms(const AlphabetPtr& alphabet) {
  if (!alphabet->has_torsion_classes())
    throw error(errc::not_enumerable, "atoms over classes of infinite order; use atoms_dividing");
  std::vector<Exponents> raw;
  detail::for_each_atom(*alphabet, nullptr, [&](const Exponents& e) { raw.push_back(e); });
  detail::sort_atoms(raw);
  AtomSet out{alphabet, {}, 0};
  for (auto& e : raw) {
    Sequence s(alphabet, std::move(e));
    out.davenport = std::max(out.davenport, s.length());
    out.atoms.push_back(std::move(s));
  }
  return out;
}

/// All atoms dividing a zero-sum sequence B, in canonical order. Works over
/// infinite groups since the search is capped by B.
inline std::vector<Sequence> atoms_dividing(const Sequence& b) {
  detail::require_zero_sum(b);
  std::vector<Exponents> raw;
  detail::for_each_atom(b.alphabet(), &b.exponents(), [&](const Exponents& e) { raw.push_back(e); });
  detail::sort_atoms(raw);
  std::vector<Sequence> out;
  for (auto& e : raw) out.emplace_back(b.alphabet_ptr(), std::move(e));
  return out;
}

/// A multiset of atoms, stored as multiplicities over a shared atom basis.
class Factorization {
 public:
  Factorization(std::shared_ptr<const std::vector<Sequence>> basis, Exponents mult)
      : basis_(std::move(basis)), mult_(std::move(mult)) {}

  const std::vector<Sequence>& basis() const noexcept { return *basis_; }
  const Exponents& multiplicities() const noexcept { return mult_; }

  std::size_t length() const noexcept {
    std::size_t n = 0;
    for (auto m : mult_) n += m;
    return n;
  }

  /// Multiplicity of a given atom (0 when it is not in the basis).
  std::uint32_t count(const Sequence& atom) const {
    for (std::size_t i = 0; i < basis_->size(); ++i)
      if ((*basis_)[i].exponents() == atom.exponents()) return mult_[i];
    return 0;
  }

  Sequence product() const {
    const auto& b = *basis_;
    if (b.empty()) throw error(errc::incompatible_factorizations, "factorization without basis");
    Exponents e(b.front().exponents().size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += mult_[i] * b[i][k];
    return Sequence(b.front().alphabet_ptr(), std::move(e));
  }

  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.basis_ == b.basis_ && a.mult_ == b.mult_;
  }

 private:
  std::shared_ptr<const std::vector<Sequence>> basis_;
  Exponents mult_;
};

inline std::string to_string(const Factorization& z) {
  std::string out;
  for (std::size_t i = 0; i < z.basis().size(); ++i) {
    for (std::uint32_t k = 0; k < z.multiplicities()[i]; ++k) {
      if (!out.empty()) out += " * ";
      out += "[" + to_string(z.basis()[i]) + "]";
    }
  }
  return out.empty() ? "1" : out;
}

/// Z(B): all factorizations of B, over the canonically ordered atoms dividing B.
class FactorizationSet {
 public:
  FactorizationSet(Sequence element, std::shared_ptr<const std::vector<Sequence>> atoms,
                   std::vector<Exponents> facts)
      : element_(std::move(element)), atoms_(std::move(atoms)), facts_(std::move(facts)) {}

  const Sequence& element() const noexcept { return element_; }
  const std::vector<Sequence>& atoms() const noexcept { return *atoms_; }
  const std::shared_ptr<const std::vector<Sequence>>& atoms_ptr() const noexcept { return atoms_; }
  const std::vector<Exponents>& multiplicities() const noexcept { return facts_; }
  std::size_t size() const noexcept { return facts_.size(); }
  Factorization operator[](std::size_t i) const { return Factorization(atoms_, facts_.at(i)); }

  std::optional<std::size_t> atom_index(const Sequence& u) const {
    for (std::size_t i = 0; i < atoms_->size(); ++i)
      if ((*atoms_)[i].exponents() == u.exponents()) return i;
    return std::nullopt;
  }

  std::set<std::size_t> lengths() const {
    std::set<std::size_t> out;
    for (const auto& f : facts_) {
      std::size_t n = 0;
      for (auto m : f) n += m;
      out.insert(n);
    }
    return out;
  }

 private:
  Sequence element_;
  std::shared_ptr<const std::vector<Sequence>> atoms_;
  std::vector<Exponents> facts_;
};

inline FactorizationSet factorizations_over(const Sequence& b, const detail::AtomIndex& ai, Limits limits = {}) {
  auto facts = detail::enumerate_factorizations(b.exponents(), ai, limits.max_factorizations);
  auto basis = std::make_shared<std::vector<Sequence>>();
  for (const auto& a : ai.atoms) basis->emplace_back(b.alphabet_ptr(), a);
  return FactorizationSet(b, std::move(basis), std::move(facts));
}

inline FactorizationSet factorizations(const Sequence& b, Limits limits = {}) {
  detail::require_zero_sum(b);
  std::vector<Exponents> raw;
  detail::for_each_atom(b.alphabet(), &b.exponents(), [&](const Exponents& e) { raw.push_back(e); });
  return factorizations_over(b, detail::AtomIndex(std::move(raw), b.alphabet().size()), limits);
}

inline std::size_t distance(const Factorization& z, const Factorization& w) {
  if (!(z.product() == w.product()))
    throw error(errc::incompatible_factorizations, "factorizations of different elements");
  if (&z.basis() == &w.basis()) return detail::count_distance(z.multiplicities(), w.multiplicities());
  // Different bases: align atoms by exponent vector.
  std::vector<std::pair<Exponents, std::pair<std::uint32_t, std::uint32_t>>> merged;
  auto put = [&](const Factorization& f, bool right) {
    for (std::size_t i = 0; i < f.basis().size(); ++i) {
      const auto m = f.multiplicities()[i];
      if (!m) continue;
      auto it = std::find_if(merged.begin(), merged.end(), [&](auto& e) { return e.first == f.basis()[i].exponents(); });
      if (it == merged.end()) {
        merged.push_back({f.basis()[i].exponents(), {0, 0}});
        it = std::prev(merged.end());
      }
      (right ? it->second.second : it->second.first) += m;
    }
  };
  put(z, false);
  put(w, true);
  Exponents a, b;
  for (auto& [_, m] : merged) {
    a.push_back(m.first);
    b.push_back(m.second);
  }
  return detail::count_distance(a, b);
}

/// Memoized set-of-lengths computation over a fixed atom list. One instance
/// may serve many elements (scans share it across a whole run).
class LengthEngine {
 public:
  using Bits = std::vector<std::uint64_t>;

  explicit LengthEngine(detail::AtomIndex ai) : ai_(std::move(ai)) {}

  /// Engine over every atom of a finite-class alphabet.
  static LengthEngine for_alphabet(const AlphabetPtr& a) {
    std::vector<Exponents> raw;
    detail::for_each_atom(*a, nullptr, [&](const Exponents& e) { raw.push_back(e); });
    return LengthEngine(detail::AtomIndex(std::move(raw), a->size()));
  }

  const detail::AtomIndex& atoms() const noexcept { return ai_; }

  std::set<std::size_t> lengths(const Exponents& e) {
    const auto& bits = compute(e);
    std::set<std::size_t> out;
    for (std::size_t w = 0; w < bits.size(); ++w)
      for (std::size_t b = 0; b < 64; ++b)
        if (bits[w] >> b & 1u) out.insert(w * 64 + b);
    return out;
  }

  /// (min L, max L); nullopt when e has no factorization.
  std::optional<std::pair<std::size_t, std::size_t>> extremes(const Exponents& e) {
    const auto& bits = compute(e);
    std::optional<std::size_t> lo, hi;
    for (std::size_t w = 0; w < bits.size(); ++w)
      for (std::size_t b = 0; b < 64; ++b)
        if (bits[w] >> b & 1u) {
          if (!lo) lo = w * 64 + b;
          hi = w * 64 + b;
        }
    if (!lo) return std::nullopt;
    return std::make_pair(*lo, *hi);
  }

  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  const Bits& compute(const Exponents& e) {
    auto key = detail::memo_key(e);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Bits bits;
    const auto p = detail::first_letter(e);
    if (p == e.size()) {
      bits.assign(1, 1u);
    } else {
      Exponents rem = e;
      for (std::size_t j = ai_.lo[p]; j < ai_.hi[p]; ++j) {
        const auto& a = ai_.atoms[j];
        if (!detail::fits(a, e)) continue;
        for (std::size_t i = 0; i < rem.size(); ++i) rem[i] = e[i] - a[i];
        const Bits sub = compute(rem);  // copy: the memo may rehash
        if (bits.size() < sub.size() + 1) bits.resize(sub.size() + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t w = 0; w < sub.size(); ++w) {
          bits[w] |= (sub[w] << 1) | carry;
          carry = sub[w] >> 63;
        }
        bits[sub.size()] |= carry;
      }
      while (!bits.empty() && bits.back() == 0) bits.pop_back();
    }
    return memo_.emplace(std::move(key), std::move(bits)).first->second;
  }

  detail::AtomIndex ai_;
  std::unordered_map<std::string, Bits> memo_;
};

/// L(B) = {|z| : z in Z(B)}; {0} for the empty sequence.
inline std::set<std::size_t> length_set(const Sequence& b) {
  detail::require_zero_sum(b);
  std::vector<Exponents> raw;
  detail::for_each_atom(b.alphabet(), &b.exponents(), [&](const Exponents& e) { raw.push_back(e); });
  LengthEngine engine(detail::AtomIndex(std::move(raw), b.alphabet().size()));
  return engine.lengths(b.exponents());
}

/// Catenary degree and minimal relations of one element, read off a minimax
/// spanning tree of the complete distance graph on Z(B) (Prim, distances
/// computed on the fly). The distinct tree weights are exactly the distances
/// d for which some pair at distance d is not joined by a (d-1)-chain.
struct CatenaryInfo {
  std::size_t catenary = 0;
  std::set<std::size_t> minimal_relations;
  std::size_t factorization_count = 0;
};

inline CatenaryInfo catenary_info(const FactorizationSet& z) {
  CatenaryInfo info;
  const auto& f = z.multiplicities();
  const auto n = f.size();
  info.factorization_count = n;
  if (n <= 1) return info;
  constexpr auto inf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> best(n, inf);
  std::vector<bool> done(n, false);
  best[0] = 0;
  for (std::size_t it = 0; it < n; ++it) {
    std::size_t u = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!done[v] && (u == n || best[v] < best[u])) u = v;
    done[u] = true;
    if (it > 0) {
      info.catenary = std::max(info.catenary, best[u]);
      info.minimal_relations.insert(best[u]);
    }
    for (std::size_t v = 0; v < n; ++v)
      if (!done[v]) best[v] = std::min(best[v], detail::count_distance(f[u], f[v]));
  }
  return info;
}

inline std::size_t catenary(const Sequence& b, Limits limits = {}) {
  return catenary_info(factorizations(b, limits)).catenary;
}

inline std::set<std::size_t> minimal_relations(const Sequence& b, Limits limits = {}) {
  return catenary_info(factorizations(b, limits)).minimal_relations;
}

}  // namespace zsum
