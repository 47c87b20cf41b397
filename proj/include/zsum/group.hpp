#pragma once

// Finitely generated abelian groups Z^s + C_{n_1} + ... + C_{n_r} in
// invariant-factor form, and their elements.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zsum/error.hpp"

namespace zsum {

namespace detail {

inline std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
  const std::int64_t m = a % n;
  return m < 0 ? m + n : m;
}

inline bool is_chain(std::span<const std::int64_t> t) {
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i] % t[i - 1] != 0) return false;
  return true;
}

inline std::optional<std::int64_t> parse_int(std::string_view s) {
  std::int64_t v = 0;
  if (s.empty()) return std::nullopt;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace detail

/// Immutable group descriptor. Torsion is always stored in invariant-factor
/// form n_1 | n_2 | ... | n_r with every n_i >= 2.
class GroupSpec {
 public:
  GroupSpec() : rep_(std::make_shared<const Rep>()) {}

  std::size_t free_rank() const noexcept { return rep_->free_rank; }
  std::span<const std::int64_t> torsion() const noexcept { return rep_->torsion; }
  /// Number of cyclic torsion factors.
  std::size_t rank() const noexcept { return rep_->torsion.size(); }
  /// Number of coordinates of an element (free coordinates first).
  std::size_t dimension() const noexcept { return free_rank() + rank(); }
  bool is_finite() const noexcept { return free_rank() == 0; }
  bool is_trivial() const noexcept { return free_rank() == 0 && rank() == 0; }
  bool is_cyclic() const noexcept { return free_rank() + rank() <= 1; }

  /// |G|; only meaningful for finite groups.
  std::uint64_t order() const {
    if (!is_finite()) throw error(errc::not_enumerable, "order of an infinite group");
    std::uint64_t n = 1;
    for (auto t : torsion()) n *= static_cast<std::uint64_t>(t);
    return n;
  }

  /// exp(G) = n_r for finite nontrivial groups, 1 for the trivial group.
  std::int64_t exponent() const { return rank() == 0 ? 1 : torsion().back(); }

  std::string to_string() const {
    std::string out;
    auto sep = [&] {
      if (!out.empty()) out += 'x';
    };
    for (std::size_t i = 0; i < free_rank(); ++i) {
      sep();
      out += 'Z';
    }
    const auto t = torsion();
    for (std::size_t i = 0; i < t.size();) {
      std::size_t j = i;
      while (j < t.size() && t[j] == t[i]) ++j;
      sep();
      out += 'C' + std::to_string(t[i]);
      if (j - i > 1) out += '^' + std::to_string(j - i);
      i = j;
    }
    return out.empty() ? "C1" : out;
  }

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.rep_ == b.rep_ ||
           (a.rep_->free_rank == b.rep_->free_rank && a.rep_->torsion == b.rep_->torsion);
  }

 private:
  struct Rep {
    std::size_t free_rank = 0;
    std::vector<std::int64_t> torsion;
  };

  explicit GroupSpec(Rep rep) : rep_(std::make_shared<const Rep>(std::move(rep))) {}

  std::shared_ptr<const Rep> rep_;

  friend GroupSpec normalize_spec(std::span<const std::int64_t>, std::size_t);
};

/// Brings a diagonal torsion list into invariant-factor form by repeated
/// gcd/lcm exchange. Factors of 1 produced along the way are dropped.
inline GroupSpec normalize_spec(std::span<const std::int64_t> raw_torsion, std::size_t free_rank = 0) {
  std::vector<std::int64_t> t(raw_torsion.begin(), raw_torsion.end());
  for (auto n : t)
    if (n < 1) throw error(errc::invalid_spec, "torsion entry " + std::to_string(n) + " < 1");
  t.erase(std::remove(t.begin(), t.end(), 1), t.end());
  while (true) {
    std::sort(t.begin(), t.end());
    if (detail::is_chain(t)) break;
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = i + 1; j < t.size(); ++j) {
        if (t[j] % t[i] != 0) {
          const auto g = std::gcd(t[i], t[j]);
          const auto l = t[i] / g * t[j];
          t[i] = g;
          t[j] = l;
        }
      }
    }
    t.erase(std::remove(t.begin(), t.end(), 1), t.end());
  }
  return GroupSpec(GroupSpec::Rep{free_rank, std::move(t)});
}

inline GroupSpec normalize_spec(std::initializer_list<std::int64_t> raw_torsion, std::size_t free_rank = 0) {
  return normalize_spec(std::span<const std::int64_t>(raw_torsion.begin(), raw_torsion.size()), free_rank);
}

/// Parses `part ("x" part)*` with `part := "Z" | "C" INT ("^" INT)?`,
/// case-insensitive, no whitespace. `C1` denotes the trivial factor.
inline GroupSpec parse_group_spec(std::string_view text) {
  auto fail = [&](const std::string& why) {
    return error(errc::parse_error, "group spec '" + std::string(text) + "': " + why);
  };
  if (text.empty()) throw fail("empty");
  std::size_t free_rank = 0;
  std::vector<std::int64_t> raw;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = pos;
    while (end < text.size() && text[end] != 'x' && text[end] != 'X') ++end;
    std::string_view part = text.substr(pos, end - pos);
    if (part.empty()) throw fail("empty factor");
    const char head = part[0];
    if (head == 'Z' || head == 'z') {
      if (part.size() != 1) throw fail("unexpected characters after Z");
      ++free_rank;
    } else if (head == 'C' || head == 'c') {
      auto body = part.substr(1);
      std::int64_t count = 1;
      if (auto caret = body.find('^'); caret != std::string_view::npos) {
        auto c = detail::parse_int(body.substr(caret + 1));
        if (!c || *c < 1) throw fail("bad multiplicity");
        count = *c;
        body = body.substr(0, caret);
      }
      auto n = detail::parse_int(body);
      if (!n || *n < 1) throw fail("bad cyclic order");
      if (*n >= 2)
        for (std::int64_t i = 0; i < count; ++i) raw.push_back(*n);
    } else {
      throw fail("unknown factor '" + std::string(part) + "'");
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  return normalize_spec(raw, free_rank);
}

/// An element of a GroupSpec: integer free coordinates followed by torsion
/// residues, the latter always reduced modulo n_i.
class GroupElement {
 public:
  GroupElement() = default;

  GroupElement(GroupSpec spec, std::vector<std::int64_t> coords) : spec_(std::move(spec)), c_(std::move(coords)) {
    if (c_.size() != spec_.dimension())
      throw error(errc::incompatible_elements,
                  "element has " + std::to_string(c_.size()) + " coordinates, group needs " +
                      std::to_string(spec_.dimension()));
    reduce();
  }

  const GroupSpec& spec() const noexcept { return spec_; }
  std::span<const std::int64_t> coords() const noexcept { return c_; }
  std::span<const std::int64_t> free_part() const noexcept {
    return std::span<const std::int64_t>(c_).first(spec_.free_rank());
  }
  std::span<const std::int64_t> torsion_part() const noexcept {
    return std::span<const std::int64_t>(c_).subspan(spec_.free_rank());
  }
  bool is_zero() const noexcept {
    return std::all_of(c_.begin(), c_.end(), [](auto v) { return v == 0; });
  }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.c_ == b.c_ && a.spec_ == b.spec_;
  }
  /// Canonical order: lexicographic on coordinates.
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
    return a.c_ <=> b.c_;
  }

 private:
  void reduce() {
    const auto t = spec_.torsion();
    for (std::size_t i = 0; i < t.size(); ++i) {
      auto& v = c_[spec_.free_rank() + i];
      v = detail::floor_mod(v, t[i]);
    }
  }

  GroupSpec spec_;
  std::vector<std::int64_t> c_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : g.coords()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};

inline GroupElement zero(const GroupSpec& spec) {
  return GroupElement(spec, std::vector<std::int64_t>(spec.dimension(), 0));
}

inline void require_same_spec(const GroupElement& a, const GroupElement& b) {
  if (!(a.spec() == b.spec()))
    throw error(errc::incompatible_elements,
                "elements of " + a.spec().to_string() + " and " + b.spec().to_string());
}

inline GroupElement add(const GroupElement& a, const GroupElement& b) {
  require_same_spec(a, b);
  std::vector<std::int64_t> c(a.coords().begin(), a.coords().end());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords()[i];
  return GroupElement(a.spec(), std::move(c));
}

inline GroupElement neg(const GroupElement& a) {
  std::vector<std::int64_t> c(a.coords().begin(), a.coords().end());
  for (auto& v : c) v = -v;
  return GroupElement(a.spec(), std::move(c));
}

inline GroupElement sub(const GroupElement& a, const GroupElement& b) { return add(a, neg(b)); }

inline GroupElement scale(std::int64_t k, const GroupElement& a) {
  std::vector<std::int64_t> c(a.coords().begin(), a.coords().end());
  for (auto& v : c) v *= k;
  return GroupElement(a.spec(), std::move(c));
}

inline GroupElement operator+(const GroupElement& a, const GroupElement& b) { return add(a, b); }
inline GroupElement operator-(const GroupElement& a) { return neg(a); }
inline GroupElement operator-(const GroupElement& a, const GroupElement& b) { return sub(a, b); }
inline GroupElement operator*(std::int64_t k, const GroupElement& a) { return scale(k, a); }

/// Least k >= 1 with k*a = 0; std::nullopt encodes infinite order.
inline std::optional<std::uint64_t> order(const GroupElement& a) {
  for (auto v : a.free_part())
    if (v != 0) return std::nullopt;
  std::uint64_t ord = 1;
  const auto t = a.spec().torsion();
  const auto c = a.torsion_part();
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto n = static_cast<std::uint64_t>(t[i]);
    const auto o = n / std::gcd(n, static_cast<std::uint64_t>(c[i]));
    ord = std::lcm(ord, o);
  }
  return ord;
}

/// Mixed-radix indexing of the torsion subgroup; the last coordinate varies
/// fastest so index order is lexicographic order on torsion vectors.
class TorsionIndexer {
 public:
  explicit TorsionIndexer(GroupSpec spec) : spec_(std::move(spec)) {
    size_ = 1;
    for (auto n : spec_.torsion()) size_ *= static_cast<std::uint64_t>(n);
  }

  std::uint64_t size() const noexcept { return size_; }
  const GroupSpec& spec() const noexcept { return spec_; }

  std::uint64_t index_of(const GroupElement& g) const {
    std::uint64_t idx = 0;
    const auto t = spec_.torsion();
    const auto c = g.torsion_part();
    for (std::size_t i = 0; i < t.size(); ++i) idx = idx * static_cast<std::uint64_t>(t[i]) + static_cast<std::uint64_t>(c[i]);
    return idx;
  }

  GroupElement element_at(std::uint64_t idx) const {
    const auto t = spec_.torsion();
    std::vector<std::int64_t> c(spec_.dimension(), 0);
    for (std::size_t i = t.size(); i-- > 0;) {
      c[spec_.free_rank() + i] = static_cast<std::int64_t>(idx % static_cast<std::uint64_t>(t[i]));
      idx /= static_cast<std::uint64_t>(t[i]);
    }
    return GroupElement(spec_, std::move(c));
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const auto t = spec_.torsion();
    std::uint64_t out = 0, mul = 1;
    for (std::size_t i = t.size(); i-- > 0;) {
      const auto n = static_cast<std::uint64_t>(t[i]);
      const auto d = (a % n + b % n) % n;
      out += d * mul;
      mul *= n;
      a /= n;
      b /= n;
    }
    return out;
  }

  std::uint64_t neg(std::uint64_t a) const {
    const auto t = spec_.torsion();
    std::uint64_t out = 0, mul = 1;
    for (std::size_t i = t.size(); i-- > 0;) {
      const auto n = static_cast<std::uint64_t>(t[i]);
      const auto d = (n - a % n) % n;
      out += d * mul;
      mul *= n;
      a /= n;
    }
    return out;
  }

 private:
  GroupSpec spec_;
  std::uint64_t size_ = 1;
};

/// All elements of a finite group in lexicographic order of torsion vectors.
inline auto elements(const GroupSpec& spec) {
  if (!spec.is_finite()) throw error(errc::not_enumerable, "cannot enumerate " + spec.to_string());
  TorsionIndexer ix(spec);
  return std::views::iota(std::uint64_t{0}, ix.size()) |
         std::views::transform([ix](std::uint64_t i) { return ix.element_at(i); });
}

/// Unit vectors e_1..e_d over all coordinates; with `with_sum` the result is
/// prefixed by e_0 = e_1 + ... + e_d so that basis[i] == e_i.
inline std::vector<GroupElement> standard_basis(const GroupSpec& spec, bool with_sum = false) {
  std::vector<GroupElement> out;
  const auto d = spec.dimension();
  if (with_sum) out.emplace_back(spec, std::vector<std::int64_t>(d, 1));
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<std::int64_t> c(d, 0);
    c[i] = 1;
    out.emplace_back(spec, std::move(c));
  }
  return out;
}

namespace detail {

inline bool uses_generator_notation(const GroupSpec& spec) {
  return (spec.is_finite() && spec.rank() == 1) || (spec.free_rank() == 1 && spec.rank() == 0);
}

inline std::string multiple_label(std::int64_t k) {
  if (k == 0) return "0";
  std::string s = k < 0 ? "-" : "";
  const auto m = k < 0 ? -k : k;
  if (m != 1) s += std::to_string(m);
  return s + "g";
}

}  // namespace detail

/// Text form: `kg` notation for cyclic groups and Z (residues above n/2 are
/// written negatively), otherwise a coordinate tuple `(a,b,...)`.
inline std::string to_string(const GroupElement& g) {
  const auto& spec = g.spec();
  if (spec.is_trivial()) return "0";
  if (detail::uses_generator_notation(spec)) {
    auto v = g.coords()[0];
    if (spec.is_finite()) {
      const auto n = spec.torsion()[0];
      if (2 * v > n) v -= n;
    }
    return detail::multiple_label(v);
  }
  std::string s = "(";
  for (std::size_t i = 0; i < g.coords().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(g.coords()[i]);
  }
  return s + ")";
}

/// Inverse of to_string; also accepts `e<k>` for standard basis vectors
/// (e0 being their sum) and any integer multiple `kg` for cyclic groups.
inline GroupElement parse_element(const GroupSpec& spec, std::string_view text) {
  auto fail = [&] {
    return error(errc::parse_error, "cannot read '" + std::string(text) + "' as an element of " + spec.to_string());
  };
  if (text == "0") return zero(spec);
  if (!text.empty() && text.front() == '(' && text.back() == ')') {
    auto body = text.substr(1, text.size() - 2);
    std::vector<std::int64_t> c;
    std::size_t pos = 0;
    while (true) {
      auto comma = body.find(',', pos);
      auto v = detail::parse_int(body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
      if (!v) throw fail();
      c.push_back(*v);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    if (c.size() != spec.dimension()) throw fail();
    return GroupElement(spec, std::move(c));
  }
  if (text.size() >= 2 && (text[0] == 'e' || text[0] == 'E')) {
    auto k = detail::parse_int(text.substr(1));
    if (!k || *k < 0 || static_cast<std::size_t>(*k) > spec.dimension()) throw fail();
    return standard_basis(spec, true)[static_cast<std::size_t>(*k)];
  }
  if (detail::uses_generator_notation(spec) && !text.empty() && text.back() == 'g') {
    auto body = text.substr(0, text.size() - 1);
    std::int64_t k = 1;
    if (body == "-") {
      k = -1;
    } else if (!body.empty()) {
      auto v = detail::parse_int(body);
      if (!v) throw fail();
      k = *v;
    }
    return GroupElement(spec, {k});
  }
  throw fail();
}

}  // namespace zsum

template <>
struct std::hash<zsum::GroupElement> : zsum::GroupElementHash {};
