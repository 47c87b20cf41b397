#pragma once

// On-disk atom cache: one file `atoms-<alphabet hash>.json` per alphabet.
// Writes go to a temporary file in the same directory and are renamed into
// place, so concurrent writers never expose a partial file.

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <unistd.h>

#include "zsum/factorize.hpp"
#include "zsum/serialize.hpp"
#include "zsum/version.hpp"

namespace zsum {

namespace fs = std::filesystem;

inline fs::path cache_dir() {
  if (const char* d = std::getenv("ARITH_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return fs::path(x) / "zsum";
  if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "zsum";
  return fs::temp_directory_path() / "zsum-cache";
}

inline fs::path cache_path(const Alphabet& a, const fs::path& dir = cache_dir()) {
  return dir / ("atoms-" + a.hash() + ".json");
}

/// Reads a cache entry. Entries from another tool version, for another
/// alphabet, or whose stored D disagrees with the atom list are ignored.
inline std::optional<AtomSet> load_atoms(const AlphabetPtr& alphabet, const fs::path& dir = cache_dir()) {
  std::ifstream in(cache_path(*alphabet, dir));
  if (!in) return std::nullopt;
  try {
    const auto j = json::parse(in);
    if (j.at("tool_version").get<std::string>() != version) return std::nullopt;
    if (j.at("alphabet").at("hash").get<std::string>() != alphabet->hash()) return std::nullopt;
    std::vector<Exponents> raw = j.at("atoms").get<std::vector<Exponents>>();
    AtomSet out{alphabet, {}, 0};
    detail::sort_atoms(raw);
    for (auto& e : raw) {
      if (e.size() != alphabet->size()) return std::nullopt;
      Sequence s(alphabet, std::move(e));
      out.davenport = std::max(out.davenport, s.length());
      out.atoms.push_back(std::move(s));
    }
    if (out.davenport != j.at("davenport").get<std::size_t>()) return std::nullopt;
    return out;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

inline void store_atoms(const AtomSet& atoms, const fs::path& dir = cache_dir()) {
  static std::atomic<unsigned> counter{0};
  fs::create_directories(dir);
  const auto target = cache_path(*atoms.alphabet, dir);
  std::ostringstream tmp_name;
  tmp_name << ".tmp-" << ::getpid() << "-" << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "-"
           << counter++ << "-" << target.filename().string();
  const auto tmp = dir / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << to_json(atoms).dump() << '\n';
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  fs::rename(tmp, target);
}

/// Atoms of a finite alphabet, from the cache when possible.
inline AtomSet cached_atoms(const AlphabetPtr& alphabet, bool use_cache = true, const fs::path& dir = cache_dir()) {
  if (use_cache)
    if (auto hit = load_atoms(alphabet, dir)) return *hit;
  auto fresh = enumerate_atoms(alphabet);
  if (use_cache) {
    try {
      store_atoms(fresh, dir);
    } catch (const std::exception&) {
      // an unwritable cache only costs recomputation
    }
  }
  return fresh;
}

struct CacheListing {
  fs::path path;
  std::string group;
  std::size_t atoms = 0;
  std::size_t davenport = 0;
};

inline std::vector<CacheListing> list_cache(const fs::path& dir = cache_dir()) {
  std::vector<CacheListing> out;
  if (!fs::exists(dir)) return out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto name = entry.path().filename().string();
    if (name.rfind("atoms-", 0) != 0 || entry.path().extension() != ".json") continue;
    CacheListing l{entry.path(), "?", 0, 0};
    try {
      std::ifstream in(entry.path());
      const auto j = json::parse(in);
      l.group = j.at("alphabet").at("group").get<std::string>();
      l.atoms = j.at("atoms").size();
      l.davenport = j.at("davenport").get<std::size_t>();
    } catch (const std::exception&) {
    }
    out.push_back(std::move(l));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.path < b.path; });
  return out;
}

/// Removes cache entries (and stray temporaries); returns how many.
inline std::size_t clear_cache(const fs::path& dir = cache_dir()) {
  std::size_t n = 0;
  if (!fs::exists(dir)) return 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto name = entry.path().filename().string();
    if (name.rfind("atoms-", 0) == 0 || name.rfind(".tmp-", 0) == 0) {
      fs::remove(entry.path());
      ++n;
    }
  }
  return n;
}

}  // namespace zsum
