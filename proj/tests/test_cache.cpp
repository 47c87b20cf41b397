#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <thread>

#include "zsum/cache.hpp"

using namespace zsum;

namespace {

class CacheTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("zsum-cache-test-" + std::to_string(::getpid()) + "-" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string read(const fs::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CacheTest, RoundTrip) {
  const auto a = block_alphabet(normalize_spec({2, 2, 2}));
  EXPECT_FALSE(load_atoms(a, dir_).has_value());
  const auto cold = cached_atoms(a, true, dir_);
  ASSERT_TRUE(fs::exists(cache_path(*a, dir_)));
  const auto warm = load_atoms(a, dir_);
  ASSERT_TRUE(warm.has_value());
  EXPECT_EQ(warm->davenport, cold.davenport);
  ASSERT_EQ(warm->atoms.size(), cold.atoms.size());
  for (std::size_t i = 0; i < cold.atoms.size(); ++i) EXPECT_EQ(warm->atoms[i], cold.atoms[i]);
  EXPECT_EQ(to_json(*warm).dump(), to_json(cold).dump());
}

TEST_F(CacheTest, RejectsStaleOrInconsistentEntries) {
  const auto a = block_alphabet(normalize_spec({4}));
  store_atoms(enumerate_atoms(a), dir_);
  const auto path = cache_path(*a, dir_);
  auto doc = json::parse(read(path));

  auto rewrite = [&](const json& j) {
    std::ofstream(path) << j.dump();
  };
  auto stale = doc;
  stale["tool_version"] = "0.0.0";
  rewrite(stale);
  EXPECT_FALSE(load_atoms(a, dir_).has_value());

  auto wrong_d = doc;
  wrong_d["davenport"] = 7;
  rewrite(wrong_d);
  EXPECT_FALSE(load_atoms(a, dir_).has_value());

  std::ofstream(path) << "{truncated";
  EXPECT_FALSE(load_atoms(a, dir_).has_value());

  rewrite(doc);
  EXPECT_TRUE(load_atoms(a, dir_).has_value());
  // another alphabet never reads this entry
  EXPECT_FALSE(load_atoms(block_alphabet(normalize_spec({2, 2})), dir_).has_value());
}

TEST_F(CacheTest, ConcurrentWritersLeaveAValidEntry) {
  const auto a = block_alphabet(normalize_spec({3, 3}));
  const auto atoms = enumerate_atoms(a);
  std::vector<std::thread> writers;
  for (int i = 0; i < 4; ++i)
    writers.emplace_back([&] {
      for (int k = 0; k < 5; ++k) store_atoms(atoms, dir_);
    });
  for (auto& t : writers) t.join();
  const auto back = load_atoms(a, dir_);
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(back->atoms.size(), atoms.atoms.size());
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir_)) {
    (void)e;
    ++files;
  }
  EXPECT_EQ(files, 1u);
}

TEST_F(CacheTest, ListAndClear) {
  cached_atoms(block_alphabet(normalize_spec({3})), true, dir_);
  cached_atoms(block_alphabet(normalize_spec({5})), true, dir_);
  const auto l = list_cache(dir_);
  ASSERT_EQ(l.size(), 2u);
  std::set<std::string> groups{l[0].group, l[1].group};
  EXPECT_EQ(groups, (std::set<std::string>{"C3", "C5"}));
  EXPECT_EQ(clear_cache(dir_), 2u);
  EXPECT_TRUE(list_cache(dir_).empty());
  EXPECT_EQ(clear_cache(dir_ / "missing"), 0u);
}

TEST_F(CacheTest, EnvironmentOverride) {
  ::setenv("ARITH_CACHE_DIR", dir_.c_str(), 1);
  EXPECT_EQ(cache_dir(), dir_);
  ::unsetenv("ARITH_CACHE_DIR");
  ::setenv("XDG_CACHE_HOME", "/tmp/xdg", 1);
  EXPECT_EQ(cache_dir(), fs::path("/tmp/xdg/zsum"));
  ::unsetenv("XDG_CACHE_HOME");
}
