// zsum: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 factorization size limit (scans still print the partial report).

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "zsum/zsum.hpp"

namespace {

using namespace zsum;

enum exit_code { ok = 0, verification_failed = 1, usage = 2, resource_limit = 3 };

// A report is its canonical JSON plus a flat table for the csv/md projections.
struct Report {
  json doc;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_field(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out;
}

void emit(const Report& r, const std::string& format) {
  if (format == "json") {
    std::cout << r.doc.dump(2) << '\n';
    return;
  }
  auto line = [&](const std::vector<std::string>& cells) {
    if (format == "csv") {
      for (std::size_t i = 0; i < cells.size(); ++i) std::cout << (i ? "," : "") << csv_field(cells[i]);
    } else {
      std::cout << "|";
      for (const auto& c : cells) std::cout << ' ' << md_field(c) << " |";
    }
    std::cout << '\n';
  };
  line(r.header);
  if (format == "md") line(std::vector<std::string>(r.header.size(), "---"));
  for (const auto& row : r.rows) line(row);
}

std::string set_text(const std::set<std::size_t>& s) { return detail::join(s); }

struct AlphabetOptions {
  std::string terms;               // explicit classes, block alphabet over them
  std::vector<std::string> mult;   // class=m, Krull alphabet over the whole group
};

void add_alphabet_options(CLI::App* cmd, AlphabetOptions& o) {
  cmd->add_option("--alphabet", o.terms, "block alphabet over the listed classes, e.g. \"g -g 2g\"");
  cmd->add_option("--mult", o.mult, "prime divisors per class, e.g. g=2 (other classes get 1)");
}

// Alphabet for a spec: --mult gives a Krull alphabet over all of G,
// --alphabet a block alphabet over the given classes, otherwise B(G) for
// finite G or B(supp) of the `extra` terms for infinite G.
AlphabetPtr resolve_alphabet(const GroupSpec& spec, const AlphabetOptions& o, const std::vector<std::string>& extra = {}) {
  if (!o.mult.empty()) {
    if (!o.terms.empty()) throw error(errc::invalid_alphabet, "--alphabet and --mult are exclusive");
    if (!spec.is_finite()) throw error(errc::unsupported_group, "--mult needs a finite group");
    std::map<GroupElement, std::size_t> m;
    for (auto g : elements(spec)) m.emplace(std::move(g), 1);
    for (const auto& item : o.mult) {
      const auto eq = item.rfind('=');
      if (eq == std::string::npos) throw error(errc::parse_error, "expected class=m, got '" + item + "'");
      const auto g = detail::element_from_label(spec, item.substr(0, eq));
      const auto k = detail::parse_int(item.substr(eq + 1));
      if (!k || *k < 1) throw error(errc::parse_error, "bad multiplicity in '" + item + "'");
      m[g] = static_cast<std::size_t>(*k);
    }
    return krull_alphabet(spec, std::vector<std::pair<GroupElement, std::size_t>>(m.begin(), m.end()));
  }
  std::vector<std::string> sources;
  if (!o.terms.empty())
    sources.push_back(o.terms);
  else if (spec.is_finite())
    return block_alphabet(spec);
  else
    sources = extra;
  std::set<GroupElement> classes;
  for (const auto& s : sources)
    for (const auto& [g, k] : parse_terms(s, spec)) classes.insert(g);
  if (classes.empty())
    throw error(errc::invalid_alphabet, spec.to_string() + " is infinite; list the classes with --alphabet");
  return block_alphabet(std::vector<GroupElement>(classes.begin(), classes.end()));
}

Report atoms_report(const AtomSet& s) {
  Report r{to_json(s), {"index", "length", "atom"}, {}};
  for (std::size_t i = 0; i < s.atoms.size(); ++i)
    r.rows.push_back({std::to_string(i), std::to_string(s.atoms[i].length()), to_string(s.atoms[i])});
  return r;
}

Report factor_report(const FactorizationSet& z) {
  Report r{to_json(z), {"index", "length", "factorization"}, {}};
  for (std::size_t i = 0; i < z.size(); ++i)
    r.rows.push_back({std::to_string(i), std::to_string(z[i].length()), to_string(z[i])});
  return r;
}

template <class T>
Report scan_report(const ScanReport<T>& rep) {
  Report r{to_json(rep), {"value", "element", "atom"}, {}};
  for (const auto& [v, w] : rep.witnesses)
    r.rows.push_back({value_key(v), to_string(w.element), w.atom ? to_string(*w.atom) : ""});
  return r;
}

template <class T>
int scan_exit(const ScanReport<T>& rep) {
  if (!rep.checks_passed()) return verification_failed;
  return rep.skipped.empty() ? ok : resource_limit;
}

int code_for(const error& e) { return e.code() == errc::size_limit ? resource_limit : usage; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Factorization invariants of zero-sum sequences over abelian groups"};
  app.set_version_flag("--version", std::string(zsum::version));
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  unsigned jobs = 1;
  std::size_t max_factorizations = Limits{}.max_factorizations;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv", "md"}));
  app.add_option("--jobs", jobs, "worker threads; 0 uses every core");
  app.add_option("--max-factorizations", max_factorizations, "per-element limit on |Z(B)|")->check(CLI::PositiveNumber);

  std::string spec_text, seq_text, atom_text, name, target;
  std::size_t bound = 10;
  bool no_cache = false;
  AlphabetOptions alpha;
  std::vector<std::string> params;

  auto* atoms = app.add_subcommand("atoms", "list the atoms of an alphabet, using the cache");
  atoms->add_option("spec", spec_text)->required();
  atoms->add_flag("--no-cache", no_cache, "bypass the atom cache");
  add_alphabet_options(atoms, alpha);

  auto* dav = app.add_subcommand("davenport", "Davenport constant D(G) and D*(G)");
  dav->add_option("spec", spec_text)->required();

  auto* factor = app.add_subcommand("factor", "all factorizations of a zero-sum sequence");
  auto* cat = app.add_subcommand("catenary", "catenary degree and minimal relations of a zero-sum sequence");
  for (auto* c : {factor, cat}) {
    c->add_option("spec", spec_text)->required();
    c->add_option("sequence", seq_text)->required();
    add_alphabet_options(c, alpha);
  }

  auto* tame_cmd = app.add_subcommand("tame", "tame degree t(A, u)");
  tame_cmd->add_option("spec", spec_text)->required();
  tame_cmd->add_option("sequence", seq_text)->required();
  tame_cmd->add_option("atom", atom_text)->required();
  add_alphabet_options(tame_cmd, alpha);

  std::map<std::string, CLI::App*> scans;
  for (const auto* n : {"delta", "daleth", "elasticity", "scan-ca", "scan-r", "scan-ta"}) {
    auto* c = app.add_subcommand(n, std::string(n) + " over zero-sum elements up to a length bound");
    c->add_option("spec", spec_text)->required();
    auto* b = c->add_option("--bound", bound, "maximal element length")->check(CLI::PositiveNumber);
    if (std::string(n).rfind("scan-", 0) == 0) b->required();
    add_alphabet_options(c, alpha);
    scans[n] = c;
  }

  auto* wit = app.add_subcommand("witness", "build and verify a named witness");
  wit->add_option("name", name, "catenary-two | symmetric-pair | infinite-cyclic | elementary-two | rank3-tame-two | "
                                "tame-two | two-primes | two-letter | elasticity")
      ->required();
  wit->add_option("params", params, "witness parameters");
  wit->add_option("--bound", bound, "length bound for elasticity witnesses");

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", target, "suite name, 'all' or 'list'")->required();

  auto* cache = app.add_subcommand("cache", "inspect or clear the atom cache");
  cache->add_option("action", target, "list | clear")->check(CLI::IsMember({"list", "clear"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? ok : usage;
  }

  const Limits limits{max_factorizations};
  ScanBound sb;
  sb.max_element_length = bound;
  sb.max_factorization_count = max_factorizations;

  try {
    if (*atoms) {
      auto a = resolve_alphabet(parse_group_spec(spec_text), alpha);
      emit(atoms_report(cached_atoms(a, !no_cache)), format);
      return ok;
    }
    if (*dav) {
      const auto spec = parse_group_spec(spec_text);
      const auto star = davenport_star(spec);
      json doc{{"schema_version", schema_version}, {"group", spec.to_string()}};
      std::string method;
      std::int64_t d = 0;
      if (spec.order() <= 64) {
        d = static_cast<std::int64_t>(cached_atoms(block_alphabet(spec)).davenport);
        method = "enumeration";
      } else if (auto known = known_davenport(spec)) {
        d = *known;
        method = "p-group or rank <= 2";
      } else {
        throw error(errc::size_limit, "D(" + spec.to_string() + ") is neither known nor small enough to enumerate");
      }
      doc["D"] = d;
      doc["D_star"] = star;
      doc["method"] = method;
      emit({doc, {"group", "D", "D*", "method"}, {{spec.to_string(), std::to_string(d), std::to_string(star), method}}},
           format);
      return ok;
    }
    if (*factor || *cat || *tame_cmd) {
      const auto spec = parse_group_spec(spec_text);
      auto a = resolve_alphabet(spec, alpha, {seq_text, atom_text});
      const auto b = parse_sequence(seq_text, a);
      if (*factor) {
        emit(factor_report(factorizations(b, limits)), format);
      } else if (*cat) {
        const auto z = factorizations(b, limits);
        const auto info = catenary_info(z);
        json doc{{"schema_version", schema_version}, {"element", to_json(b)},           {"catenary", info.catenary},
                 {"minimal_relations", info.minimal_relations}, {"factorizations", z.size()}, {"lengths", z.lengths()}};
        emit({doc,
              {"element", "catenary", "minimal_relations", "factorizations"},
              {{to_string(b), std::to_string(info.catenary), set_text(info.minimal_relations), std::to_string(z.size())}}},
             format);
      } else {
        const auto u = parse_sequence(atom_text, a);
        const auto t = tame(b, u, limits);
        json doc{{"schema_version", schema_version}, {"element", to_json(b)}, {"atom", to_json(u)}, {"tame", t}};
        emit({doc, {"element", "atom", "tame"}, {{to_string(b), to_string(u), std::to_string(t)}}}, format);
      }
      return ok;
    }
    for (const auto& [n, c] : scans) {
      if (!*c) continue;
      auto a = resolve_alphabet(parse_group_spec(spec_text), alpha);
      if (n == "delta") {
        const auto rep = delta_scan(a, sb, jobs);
        emit(scan_report(rep), format);
        return scan_exit(rep);
      }
      if (n == "daleth") {
        const auto rep = daleth_star_report(a);
        emit(scan_report(rep), format);
        return scan_exit(rep);
      }
      if (n == "elasticity") {
        const auto rep = elasticity_scan(a, sb, jobs);
        emit(scan_report(rep), format);
        return scan_exit(rep);
      }
      if (n == "scan-ta") {
        const auto rep = ta_scan(a, sb, jobs);
        emit(scan_report(rep), format);
        return scan_exit(rep);
      }
      const auto cs = catenary_scan(a, sb, jobs);
      const auto& rep = n == "scan-ca" ? cs.ca : cs.r;
      emit(scan_report(rep), format);
      return scan_exit(rep);
    }
    if (*wit) {
      auto param = [&](std::size_t i) -> const std::string& {
        if (i >= params.size()) throw error(errc::invalid_parameters, name + " needs " + std::to_string(i + 1) + " parameters");
        return params[i];
      };
      auto count = [&](std::size_t i) {
        const auto v = detail::parse_int(param(i));
        if (!v || *v < 0) throw error(errc::parse_error, "expected a nonnegative integer, got '" + param(i) + "'");
        return static_cast<std::size_t>(*v);
      };
      if (name == "elasticity") {
        auto a = block_alphabet(parse_group_spec(param(0)));
        const auto& qt = param(1);
        const auto slash = qt.find('/');
        const auto num = detail::parse_int(qt.substr(0, slash));
        const auto den = slash == std::string::npos ? std::optional<std::int64_t>(1) : detail::parse_int(qt.substr(slash + 1));
        if (!num || !den || *den <= 0) throw error(errc::parse_error, "expected a rational a/b, got '" + qt + "'");
        const Rational q(*num, *den);
        const auto w = find_elasticity_witness(a, q, bound);
        json doc{{"schema_version", schema_version}, {"group", a->spec().to_string()}, {"target", to_string(q)},
                 {"bound", bound}};
        if (!w) {
          doc["found"] = false;
          emit({doc, {"target", "found", "element", "lengths"}, {{to_string(q), "false", "", ""}}}, format);
          return verification_failed;
        }
        const auto l = length_set(*w);
        doc["found"] = true;
        doc["element"] = to_json(*w);
        doc["lengths"] = l;
        doc["verified"] = elasticity_of(l) == q;
        emit({doc, {"target", "found", "element", "lengths"}, {{to_string(q), "true", to_string(*w), set_text(l)}}},
             format);
        return elasticity_of(l) == q ? ok : verification_failed;
      }
      std::vector<Witness> ws;
      if (name == "catenary-two") {
        ws.push_back(catenary_two_witness(parse_group_spec(param(0))));
      } else if (name == "symmetric-pair") {
        ws.push_back(symmetric_pair_witness(parse_group_spec(param(0)), count(1)));
      } else if (name == "infinite-cyclic") {
        ws = infinite_cyclic_catenary_witnesses(count(0));
      } else if (name == "elementary-two") {
        const std::map<std::string, TameVariant> variants{{"even-rank", TameVariant::even_rank},
                                                          {"odd-rank", TameVariant::odd_rank},
                                                          {"rank-2-mod-4", TameVariant::rank_2_mod_4},
                                                          {"rank-0-mod-4", TameVariant::rank_0_mod_4}};
        const auto it = variants.find(param(0));
        if (it == variants.end()) throw error(errc::invalid_parameters, "unknown variant '" + param(0) + "'");
        ws.push_back(elementary_two_tame_construction(it->second, count(1), count(2)));
      } else if (name == "rank3-tame-two") {
        ws.push_back(rank3_tame_two_witness());
      } else if (name == "tame-two") {
        const std::map<std::string, TameTwoCase> cases{{"ord4", TameTwoCase::order_at_least_4},
                                                       {"order3", TameTwoCase::order_3},
                                                       {"infinite", TameTwoCase::infinite}};
        const auto it = cases.find(param(0));
        if (it == cases.end()) throw error(errc::invalid_parameters, "unknown case '" + param(0) + "'");
        ws.push_back(tame_two_witness(it->second, parse_group_spec(param(1))));
      } else if (name == "two-primes") {
        ws.push_back(two_primes_witness(count(0)));
      } else if (name == "two-letter") {
        ws.push_back(two_letter_witness(count(0)));
      } else {
        throw error(errc::invalid_parameters, "unknown witness '" + name + "'");
      }
      Report r{json::array(), {"name", "predicted", "observed", "method", "verified"}, {}};
      bool all = true;
      for (const auto& w : ws) {
        const auto res = verify_witness(w, limits);
        all = all && res.passed;
        r.doc.push_back(to_json(w, res));
        r.rows.push_back({w.name, std::to_string(w.predicted), res.observed ? std::to_string(*res.observed) : "",
                          res.method, res.passed ? "true" : "false"});
      }
      emit(r, format);
      if (!all)
        for (const auto& row : r.rows)
          if (row[4] == "false") std::cerr << "witness failed: " << row[0] << '\n';
      return all ? ok : verification_failed;
    }
    if (*ver) {
      if (target == "list") {
        Report r{json::array(), {"suite", "version", "summary"}, {}};
        for (const auto& s : suites()) {
          r.doc.push_back(json{{"suite", s.name}, {"version", s.version}, {"summary", s.summary}});
          r.rows.push_back({s.name, std::to_string(s.version), s.summary});
        }
        emit(r, format);
        return ok;
      }
      std::vector<const SuiteInfo*> chosen;
      if (target == "all") {
        for (const auto& s : suites()) chosen.push_back(&s);
      } else if (const auto* s = find_suite(target)) {
        chosen.push_back(s);
      } else {
        std::cerr << "unknown suite '" << target << "'; try 'verify list'\n";
        return usage;
      }
      Report r{json{{"schema_version", schema_version}, {"tool_version", std::string(zsum::version)}},
               {"suite", "check", "passed", "detail"},
               {}};
      json results = json::array();
      bool all = true;
      for (const auto* s : chosen) {
        const auto res = run_suite(*s, jobs);
        all = all && res.passed();
        json checks = json::array();
        for (const auto& c : res.checks) {
          checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
          r.rows.push_back({s->name, c.name, c.passed ? "true" : "false", c.detail});
          if (!c.passed) std::cerr << "FAILED " << s->name << ": " << c.name << " (" << c.detail << ")\n";
        }
        results.push_back(json{{"suite", s->name}, {"version", s->version}, {"passed", res.passed()}, {"checks", checks}});
      }
      r.doc["suites"] = results;
      r.doc["passed"] = all;
      emit(r, format);
      return all ? ok : verification_failed;
    }
    if (*cache) {
      if (target == "clear") {
        const auto n = clear_cache();
        emit({json{{"cache_dir", cache_dir().string()}, {"removed", n}}, {"cache_dir", "removed"},
              {{cache_dir().string(), std::to_string(n)}}},
             format);
        return ok;
      }
      Report r{json{{"cache_dir", cache_dir().string()}, {"entries", json::array()}},
               {"path", "group", "atoms", "davenport"},
               {}};
      for (const auto& l : list_cache()) {
        r.doc["entries"].push_back(
            json{{"path", l.path.string()}, {"group", l.group}, {"atoms", l.atoms}, {"davenport", l.davenport}});
        r.rows.push_back({l.path.string(), l.group, std::to_string(l.atoms), std::to_string(l.davenport)});
      }
      emit(r, format);
      return ok;
    }
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (code_for(e) == usage) std::cerr << "run with --help for usage\n";
    return code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  }
  return usage;
}
