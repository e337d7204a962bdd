#include <gtest/gtest.h>

#include <filesystem>
#include <map>

#include "qra/orbit.hpp"
#include "support.hpp"

using namespace qra;
namespace fs = std::filesystem;

// Every fixture parses and validates: algebras, modules over the algebra
// named in their header, lists, and automorphisms of the repetitive category.
TEST(Fixtures, AllParse) {
  std::map<std::string, AlgebraPtr> by_name;
  std::size_t count = 0;
  for (const auto& f : fs::recursive_directory_iterator(QRA_FIXTURES))
    if (f.path().extension() == ".alg") {
      auto a = load_algebra(f.path().string());
      EXPECT_NO_THROW(a->structure().check_associative()) << f.path();
      by_name[a->name()] = a;
      ++count;
    }
  for (const auto& f : fs::recursive_directory_iterator(QRA_FIXTURES)) {
    const auto ext = f.path().extension();
    const std::string path = f.path().string();
    if (ext == ".rep") {
      std::istringstream in(read_file(path));
      std::string line, kw, name, over, alg;
      while (std::getline(in, line) && line.rfind("module", 0) != 0) {
      }
      std::istringstream(line) >> kw >> name >> over >> alg;
      ASSERT_TRUE(by_name.count(alg)) << path;
      EXPECT_NO_THROW(load_representation(path, by_name[alg])) << path;
      ++count;
    } else if (ext == ".list") {
      const AlgebraPtr a = path.find("a2") != std::string::npos ? by_name["A2"] : by_name["A"];
      EXPECT_NO_THROW(load_list(path, a)) << path;
      ++count;
    } else if (ext == ".auto") {
      Repetitive rep(by_name["B"]);
      EXPECT_NO_THROW(load_automorphism(path, rep)) << path;
      ++count;
    }
  }
  std::size_t files = 0;
  for (const auto& f : fs::recursive_directory_iterator(QRA_FIXTURES)) files += f.is_regular_file();
  EXPECT_EQ(count, files);
}
