#pragma once

// Sequences (finite multisets) over a class-labelled alphabet. A block
// alphabet has one letter per group element; a Krull alphabet models several
// prime divisors per class by giving several letters the same class.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "zsum/error.hpp"
#include "zsum/group.hpp"

namespace zsum {

using Exponents = std::vector<std::uint32_t>;

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : e) h = (h ^ v) * 1099511628211ull;
    return h;
  }
};

/// 64-bit FNV-1a, rendered as 16 hex digits. Used for content addressing.
inline std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 0xf];
  return out;
}

struct Letter {
  std::string label;
  GroupElement cls;
};

class Alphabet {
 public:
  Alphabet(GroupSpec spec, std::vector<Letter> letters) : spec_(std::move(spec)), letters_(std::move(letters)) {
    if (letters_.empty()) throw error(errc::invalid_alphabet, "alphabet must not be empty");
    for (const auto& l : letters_)
      if (!(l.cls.spec() == spec_))
        throw error(errc::invalid_alphabet, "letter '" + l.label + "' belongs to a different group");
    std::sort(letters_.begin(), letters_.end(), [](const Letter& a, const Letter& b) {
      if (auto c = a.cls <=> b.cls; c != 0) return c < 0;
      return a.label < b.label;
    });
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (!by_label_.emplace(letters_[i].label, i).second)
        throw error(errc::invalid_alphabet, "duplicate label '" + letters_[i].label + "'");
    }
    block_ = true;
    for (std::size_t i = 1; i < letters_.size(); ++i)
      if (letters_[i].cls == letters_[i - 1].cls) block_ = false;

    torsion_classes_ = std::all_of(letters_.begin(), letters_.end(), [](const Letter& l) {
      return std::all_of(l.cls.free_part().begin(), l.cls.free_part().end(), [](auto v) { return v == 0; });
    });
    if (torsion_classes_) {
      indexer_.emplace(spec_);
      for (const auto& l : letters_) class_index_.push_back(indexer_->index_of(l.cls));
    }
    hash_ = fnv1a_hex(canonical_json().dump());
  }

  const GroupSpec& spec() const noexcept { return spec_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  const Letter& operator[](std::size_t i) const { return letters_.at(i); }
  const GroupElement& class_of(std::size_t i) const { return letters_.at(i).cls; }

  /// True when the class map is injective, i.e. this is B(G_0) for G_0 the
  /// set of classes.
  bool is_block() const noexcept { return block_; }

  /// True when every class lies in the (finite) torsion subgroup; enables the
  /// index-based fast paths.
  bool has_torsion_classes() const noexcept { return torsion_classes_; }
  const TorsionIndexer& indexer() const {
    if (!indexer_) throw error(errc::not_enumerable, "alphabet has classes of infinite order");
    return *indexer_;
  }
  std::span<const std::uint64_t> class_indices() const noexcept { return class_index_; }

  std::optional<std::size_t> find(std::string_view label) const {
    auto it = by_label_.find(std::string(label));
    if (it == by_label_.end()) return std::nullopt;
    return it->second;
  }

  std::vector<std::size_t> letters_of_class(const GroupElement& g) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < letters_.size(); ++i)
      if (letters_[i].cls == g) out.push_back(i);
    return out;
  }

  /// Classes with at least one letter, in canonical order.
  std::vector<GroupElement> classes() const {
    std::vector<GroupElement> out;
    for (const auto& l : letters_)
      if (out.empty() || !(out.back() == l.cls)) out.push_back(l.cls);
    return out;
  }

  nlohmann::json canonical_json() const {
    nlohmann::json letters = nlohmann::json::array();
    for (const auto& l : letters_) {
      nlohmann::json c = nlohmann::json::array();
      for (auto v : l.cls.coords()) c.push_back(v);
      letters.push_back({{"label", l.label}, {"class", c}});
    }
    return {{"group", spec_.to_string()}, {"letters", letters}};
  }

  /// Stable content hash of the canonical JSON rendering.
  const std::string& hash() const noexcept { return hash_; }

 private:
  GroupSpec spec_;
  std::vector<Letter> letters_;
  std::map<std::string, std::size_t, std::less<>> by_label_;
  bool block_ = true;
  bool torsion_classes_ = false;
  std::optional<TorsionIndexer> indexer_;
  std::vector<std::uint64_t> class_index_;
  std::string hash_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

inline AlphabetPtr make_alphabet(GroupSpec spec, std::vector<Letter> letters) {
  return std::make_shared<const Alphabet>(std::move(spec), std::move(letters));
}

/// B(G_0): one letter per element of G_0, labelled by the element's text form.
inline AlphabetPtr block_alphabet(std::span<const GroupElement> g0) {
  if (g0.empty()) throw error(errc::invalid_alphabet, "G_0 must not be empty");
  std::vector<Letter> letters;
  for (const auto& g : g0) {
    if (std::any_of(letters.begin(), letters.end(), [&](const Letter& l) { return l.cls == g; })) continue;
    letters.push_back({to_string(g), g});
  }
  return make_alphabet(g0.front().spec(), std::move(letters));
}

inline AlphabetPtr block_alphabet(std::initializer_list<GroupElement> g0) {
  return block_alphabet(std::span<const GroupElement>(g0.begin(), g0.size()));
}

/// B(G) for a finite group G.
inline AlphabetPtr block_alphabet(const GroupSpec& spec) {
  std::vector<GroupElement> all;
  for (auto g : elements(spec)) all.push_back(std::move(g));
  return block_alphabet(all);
}

/// Reduced Krull monoid with m(g) prime divisors in class g, modelled by
/// letters `<class>#1 .. <class>#m(g)`.
inline AlphabetPtr krull_alphabet(const GroupSpec& spec,
                                  const std::vector<std::pair<GroupElement, std::size_t>>& multiplicity) {
  std::vector<Letter> letters;
  for (const auto& [g, m] : multiplicity) {
    if (m == 0) throw error(errc::invalid_alphabet, "zero multiplicity for class " + to_string(g));
    if (!(g.spec() == spec)) throw error(errc::invalid_alphabet, "class outside " + spec.to_string());
    for (std::size_t k = 1; k <= m; ++k) letters.push_back({to_string(g) + "#" + std::to_string(k), g});
  }
  return make_alphabet(spec, std::move(letters));
}

/// Krull alphabet over all of a finite group with a constant multiplicity.
inline AlphabetPtr krull_alphabet(const GroupSpec& spec, std::size_t m) {
  std::vector<std::pair<GroupElement, std::size_t>> mult;
  for (auto g : elements(spec)) mult.emplace_back(std::move(g), m);
  return krull_alphabet(spec, mult);
}

class Sequence {
 public:
  explicit Sequence(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)), exps_(alphabet_->size(), 0) {}

  Sequence(AlphabetPtr alphabet, Exponents exps) : alphabet_(std::move(alphabet)), exps_(std::move(exps)) {
    if (exps_.size() != alphabet_->size())
      throw error(errc::invalid_alphabet, "exponent vector does not match alphabet size");
  }

  const AlphabetPtr& alphabet_ptr() const noexcept { return alphabet_; }
  const Alphabet& alphabet() const noexcept { return *alphabet_; }
  const Exponents& exponents() const noexcept { return exps_; }
  std::uint32_t operator[](std::size_t i) const { return exps_.at(i); }

  std::size_t length() const noexcept {
    std::size_t n = 0;
    for (auto e : exps_) n += e;
    return n;
  }
  bool empty() const noexcept { return length() == 0; }

  friend bool operator==(const Sequence& a, const Sequence& b) {
    return a.exps_ == b.exps_ && (a.alphabet_ == b.alphabet_ || a.alphabet_->hash() == b.alphabet_->hash());
  }
  friend auto operator<=>(const Sequence& a, const Sequence& b) { return a.exps_ <=> b.exps_; }

 private:
  AlphabetPtr alphabet_;
  Exponents exps_;
};

struct SequenceHash {
  std::size_t operator()(const Sequence& s) const noexcept { return ExponentsHash{}(s.exponents()); }
};

inline void require_same_alphabet(const Sequence& a, const Sequence& b) {
  if (a.alphabet_ptr() != b.alphabet_ptr() && a.alphabet().hash() != b.alphabet().hash())
    throw error(errc::incompatible_elements, "sequences over different alphabets");
}

/// Builds a sequence from (letter index, exponent) terms.
inline Sequence make_sequence(const AlphabetPtr& alphabet,
                              std::initializer_list<std::pair<std::size_t, std::uint32_t>> terms) {
  Exponents e(alphabet->size(), 0);
  for (auto [i, k] : terms) e.at(i) += k;
  return Sequence(alphabet, std::move(e));
}

/// Builds a sequence from group elements over a block alphabet; each element
/// maps to the first letter of its class.
inline Sequence sequence_of(const AlphabetPtr& alphabet, std::span<const GroupElement> terms) {
  Exponents e(alphabet->size(), 0);
  for (const auto& g : terms) {
    auto idx = alphabet->letters_of_class(g);
    if (idx.empty()) throw error(errc::unsupported_alphabet, "no letter of class " + to_string(g));
    ++e[idx.front()];
  }
  return Sequence(alphabet, std::move(e));
}

inline Sequence sequence_of(const AlphabetPtr& alphabet, std::initializer_list<GroupElement> terms) {
  return sequence_of(alphabet, std::span<const GroupElement>(terms.begin(), terms.size()));
}

inline GroupElement sigma(const Sequence& s) {
  const auto& a = s.alphabet();
  std::vector<std::int64_t> c(a.spec().dimension(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (s[i] == 0) continue;
    const auto cls = a.class_of(i).coords();
    for (std::size_t k = 0; k < c.size(); ++k) c[k] += cls[k] * static_cast<std::int64_t>(s[i]);
  }
  return GroupElement(a.spec(), std::move(c));
}

inline bool is_zero_sum(const Sequence& s) { return sigma(s).is_zero(); }

inline std::size_t length(const Sequence& s) { return s.length(); }

inline bool divides(const Sequence& s, const Sequence& t) {
  require_same_alphabet(s, t);
  for (std::size_t i = 0; i < s.exponents().size(); ++i)
    if (s[i] > t[i]) return false;
  return true;
}

/// t / s; requires s | t.
inline Sequence quotient(const Sequence& t, const Sequence& s) {
  if (!divides(s, t)) throw error(errc::non_divisor, "quotient by a non-divisor");
  Exponents e = t.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= s[i];
  return Sequence(t.alphabet_ptr(), std::move(e));
}

inline Sequence mul(const Sequence& s, const Sequence& t) {
  require_same_alphabet(s, t);
  Exponents e = s.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += t[i];
  return Sequence(s.alphabet_ptr(), std::move(e));
}

inline Sequence pow(const Sequence& s, std::uint32_t k) {
  Exponents e = s.exponents();
  for (auto& v : e) v *= k;
  return Sequence(s.alphabet_ptr(), std::move(e));
}

/// -S: each letter of class g goes to the first letter (canonical order) of
/// class -g.
inline Sequence neg_seq(const Sequence& s) {
  const auto& a = s.alphabet();
  Exponents e(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (s[i] == 0) continue;
    auto target = a.letters_of_class(neg(a.class_of(i)));
    if (target.empty())
      throw error(errc::unsupported_alphabet, "no letter of class " + to_string(neg(a.class_of(i))));
    e[target.front()] += s[i];
  }
  return Sequence(s.alphabet_ptr(), std::move(e));
}

inline std::vector<std::size_t> support(const Sequence& s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.exponents().size(); ++i)
    if (s[i] > 0) out.push_back(i);
  return out;
}

/// All divisors of a sequence in lexicographic exponent order (last letter
/// varies fastest), from the empty sequence up to the sequence itself.
class SubsequenceRange {
 public:
  explicit SubsequenceRange(Sequence s) : s_(std::move(s)) {}

  class iterator {
   public:
    using value_type = Sequence;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const Sequence* base, bool end) : base_(base), cur_(base->exponents().size(), 0), end_(end) {}

    Sequence operator*() const { return Sequence(base_->alphabet_ptr(), cur_); }
    iterator& operator++() {
      std::size_t i = cur_.size();
      while (i-- > 0) {
        if (cur_[i] < (*base_)[i]) {
          ++cur_[i];
          return *this;
        }
        cur_[i] = 0;
      }
      end_ = true;
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      if (a.end_ || b.end_) return a.end_ == b.end_;
      return a.cur_ == b.cur_;
    }

   private:
    const Sequence* base_ = nullptr;
    Exponents cur_;
    bool end_ = true;
  };

  iterator begin() const { return iterator(&s_, false); }
  iterator end() const { return iterator(&s_, true); }

  /// prod (v_p(S) + 1)
  std::size_t size() const {
    std::size_t n = 1;
    for (auto e : s_.exponents()) n *= e + 1;
    return n;
  }

 private:
  Sequence s_;
};

inline SubsequenceRange subsequences(const Sequence& s) { return SubsequenceRange(s); }

/// `label^e` factors joined by a middle dot in canonical letter order; the
/// empty sequence renders as "1".
inline std::string to_string(const Sequence& s) {
  std::string out;
  const auto& a = s.alphabet();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (s[i] == 0) continue;
    if (!out.empty()) out += "·";
    out += a[i].label;
    if (s[i] != 1) out += "^" + std::to_string(s[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace zsum
