#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace dpham::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    path_ = std::filesystem::temp_directory_path() /
            ("dpham_cli_test_" + std::to_string(counter_++) + ".json");
    std::ofstream(path_, std::ios::binary) << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

std::size_t word_count(const std::string& s) {
  std::istringstream in(s);
  std::size_t n = 0;
  for (std::string w; in >> w;) ++n;
  return n;
}

TEST(CliCycle, ListFormat) {
  const auto r = invoke({"cycle", "7", "3", "--format", "list"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(word_count(r.out), 28u);
  EXPECT_EQ(r.out.rfind("x0 ", 0), 0u);
  EXPECT_EQ(invoke({"cycle", "7", "3"}).out, r.out);
}

TEST(CliCycle, ParameterErrors) {
  const auto r = invoke({"cycle", "4", "2"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("2t < n"), std::string::npos);
  EXPECT_EQ(invoke({"cycle", "2", "1"}).code, kUsage);
  EXPECT_EQ(invoke({"cycle", "7"}).code, kUsage);
  EXPECT_EQ(invoke({"cycle", "7", "3", "--format", "xml"}).code, kUsage);
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
  EXPECT_EQ(invoke({"--help"}).code, kOk);
}

TEST(CliCycle, ASequenceHandling) {
  const auto bad = invoke({"cycle", "9", "3", "--a", "0,2,4"});
  EXPECT_EQ(bad.code, kBadASequence);
  EXPECT_NE(bad.err.find("must precede"), std::string::npos);
  EXPECT_EQ(invoke({"cycle", "9", "3", "--a", "0,4"}).code, kBadASequence);
  EXPECT_EQ(invoke({"cycle", "8", "3", "--a", "0"}).code, kBadASequence);

  const auto custom = invoke({"cycle", "15", "6", "--a", "0,7,2", "--format", "cert"});
  EXPECT_EQ(custom.code, kOk);
  EXPECT_NE(custom.out.find("\"a_sequence\":[0,7,2]"), std::string::npos);
}

TEST(CliCycle, CertificateIsDeterministic) {
  const auto a = invoke({"cycle", "9", "3", "--format", "cert"});
  const auto b = invoke({"cycle", "9", "3", "--format", "cert"});
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
}

TEST(CliCycle, DotFormat) {
  const auto r = invoke({"cycle", "7", "3", "--format", "dot"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.rfind("graph ", 0), 0u);
}

TEST(CliVerify, ExitCodes) {
  TempFile good(invoke({"cycle", "9", "3", "--format", "cert"}).out);
  const auto ok = invoke({"verify", good.path()});
  EXPECT_EQ(ok.code, kOk) << ok.err;

  auto text = invoke({"cycle", "9", "3", "--format", "cert"}).out;
  text.replace(text.find("[0,1,2,"), 7, "[0,1,1,");
  TempFile tampered(text);
  const auto bad = invoke({"verify", tampered.path()});
  EXPECT_EQ(bad.code, kVerificationFailed);
  EXPECT_NE(bad.out.find("duplication"), std::string::npos);
  EXPECT_NE(bad.out.find("adjacency"), std::string::npos);

  TempFile empty("");
  EXPECT_EQ(invoke({"verify", empty.path()}).code, kUsage);
  EXPECT_EQ(invoke({"verify", "/nonexistent/dir/cert.json"}).code, kUsage);
}

TEST(CliSweep, DefaultRangeAndOracle) {
  const auto r = invoke({"sweep", "--jobs", "2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("total 225 passed 225 failed 0"), std::string::npos);

  const auto o = invoke({"sweep", "--n-max", "12", "--oracle", "--quiet"});
  EXPECT_EQ(o.code, kOk);
  EXPECT_NE(o.out.find("oracle-found 30"), std::string::npos);

  EXPECT_EQ(invoke({"sweep", "--n-min", "2"}).code, kUsage);
  EXPECT_EQ(invoke({"sweep", "--n-min", "10", "--n-max", "12", "--t", "5"}).code, kUsage);

  // Same spec, same bytes, regardless of thread count.
  EXPECT_EQ(invoke({"sweep", "--n-max", "40", "--jobs", "1"}).out,
            invoke({"sweep", "--n-max", "40", "--jobs", "3"}).out);
}

TEST(CliExport, Formats) {
  const auto edges = invoke({"export", "7", "3", "--format", "edges"});
  EXPECT_EQ(edges.code, kOk);
  EXPECT_EQ(std::count(edges.out.begin(), edges.out.end(), '\n'), 43);

  const auto dot = invoke({"export", "3", "1", "--format", "dot"});
  EXPECT_EQ(dot.code, kOk);
  EXPECT_NE(dot.out.find("y2;"), std::string::npos);

  EXPECT_EQ(invoke({"export", "4", "2", "--format", "edges"}).code, kUsage);
}

}  // namespace
}  // namespace dpham::cli
