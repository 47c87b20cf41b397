#pragma once

// JSON encodings of sequences, factorization sets, scan reports and witnesses.

#include <string>

#include <json.hpp>

#include "zsum/factorize.hpp"
#include "zsum/invariants.hpp"
#include "zsum/scan.hpp"
#include "zsum/sequence.hpp"
#include "zsum/version.hpp"
#include "zsum/witnesses.hpp"

namespace zsum {

using json = nlohmann::ordered_json;

inline json to_json(const Sequence& s) {
  return json{{"alphabet", s.alphabet().hash()}, {"exponents", s.exponents()}, {"text", to_string(s)}};
}

inline json to_json(const Alphabet& a) {
  json letters = json::array();
  for (const auto& l : a.letters()) {
    std::vector<std::int64_t> c(l.cls.coords().begin(), l.cls.coords().end());
    letters.push_back(json{{"label", l.label}, {"class", c}});
  }
  return json{{"group", a.spec().to_string()}, {"hash", a.hash()}, {"letters", letters}};
}

inline json to_json(const FactorizationSet& z) {
  json atoms = json::array(), facts = json::array();
  for (const auto& a : z.atoms()) atoms.push_back(to_json(a));
  for (const auto& f : z.multiplicities()) facts.push_back(f);
  return json{{"schema_version", schema_version},
              {"element", to_json(z.element())},
              {"atoms", atoms},
              {"factorizations", facts},
              {"lengths", z.lengths()}};
}

inline json value_json(std::size_t v) { return v; }
inline json value_json(const Rational& q) { return to_string(q); }
inline std::string value_key(std::size_t v) { return std::to_string(v); }
inline std::string value_key(const Rational& q) { return to_string(q); }

template <class T>
json to_json(const ScanReport<T>& r) {
  json values = json::array(), witnesses = json::object(), checks = json::array();
  for (const auto& [v, w] : r.witnesses) {
    values.push_back(value_json(v));
    json wj{{"element", to_json(w.element)}};
    if (w.atom) wj["atom"] = to_json(*w.atom);
    witnesses[value_key(v)] = wj;
  }
  for (const auto& c : r.checks) checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  json pinned = nullptr;
  if (r.pinned) {
    pinned = json::array();
    for (const auto& v : *r.pinned) pinned.push_back(value_json(v));
  }
  json skipped = json::array();
  for (const auto& s : r.skipped) skipped.push_back(to_json(s));
  return json{{"schema_version", schema_version},
              {"invariant", r.invariant},
              {"group", r.alphabet->spec().to_string()},
              {"alphabet", r.alphabet->hash()},
              {"bound", r.bound},
              {"values", values},
              {"witnesses", witnesses},
              {"complete", r.complete},
              {"pinned", pinned},
              {"checks", checks},
              {"annotations", r.annotations},
              {"elements_scanned", r.elements_scanned},
              {"skipped", skipped}};
}

inline json to_json(const Witness& w, const WitnessResult& res) {
  json j{{"name", w.name},
         {"anchor", w.anchor},
         {"group", w.alphabet->spec().to_string()},
         {"element", to_json(w.element)},
         {"predicted", json{{"kind", to_string(w.kind)}, {"value", w.predicted}}},
         {"observed", res.observed ? json(*res.observed) : json(nullptr)},
         {"method", res.method},
         {"verified", res.passed}};
  if (w.atom) j["atom"] = to_json(*w.atom);
  if (!res.detail.empty()) j["detail"] = res.detail;
  json parts = json::object();
  for (const auto& [name, p] : w.parts) parts[name] = to_string(p);
  j["parts"] = parts;
  return j;
}

inline json to_json(const AtomSet& s) {
  json atoms = json::array();
  for (const auto& a : s.atoms) atoms.push_back(a.exponents());
  return json{{"schema_version", schema_version},
              {"tool_version", std::string(version)},
              {"alphabet", to_json(*s.alphabet)},
              {"davenport", s.davenport},
              {"atoms", atoms}};
}

}  // namespace zsum
