#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "goldbach/cli.hpp"

using namespace goldbach;
namespace fs = std::filesystem;

namespace {

fs::path scratch_root() { return fs::temp_directory_path() / ("goldbach_cli_test_" + std::to_string(::getpid())); }

class ScratchCleanup : public ::testing::Environment {
 public:
  void TearDown() override { fs::remove_all(scratch_root()); }
};

[[maybe_unused]] const auto* const kCleanup = ::testing::AddGlobalTestEnvironment(new ScratchCleanup);

fs::path scratch(const std::string& name) {
  const auto dir = scratch_root() / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

struct Outcome {
  int status = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome run_cli(const fs::path& dir, const std::string& args, const std::string& env = "") {
  const auto out = dir / "stdout.txt";
  const auto err = dir / "stderr.txt";
  const std::string command = "cd '" + dir.string() + "' && " + env + " '" + GOLDBACH_CLI_PATH + "' " + args + " > '" +
                              out.string() + "' 2> '" + err.string() + "'";
  const int raw = std::system(command.c_str());
  Outcome o;
  o.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  o.out = slurp(out);
  o.err = slurp(err);
  return o;
}

std::string body(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) {
    if (!line.empty() && line.front() != '#') out += line + "\n";
  }
  return out;
}

std::size_t count_lines(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST(Config, Validation) {
  cli::JobConfig c;
  EXPECT_NO_THROW(cli::validate(c));
  c.height = 1e4 + 1;
  EXPECT_THROW(cli::validate(c), ConfigurationError);
  c = {};
  c.xmax = 10'000'001;
  EXPECT_THROW(cli::validate(c), ConfigurationError);
  c = {};
  c.q1 = 6;
  c.a1 = 3;
  EXPECT_THROW(cli::validate(c), InvalidResidue);
  c = {};
  c.command = cli::Command::ruppel;
  c.q1 = 3;
  c.q2 = 4;
  EXPECT_THROW(cli::validate(c), ConfigurationError);
  c = {};
  c.modulus = 5;
  c.char_index = 4;
  EXPECT_THROW(cli::validate(c), ConfigurationError);
}

TEST(Config, EnvironmentOverridesCacheDir) {
  cli::JobConfig c;
  c.cache_dir = "from-flag";
  ::setenv("GOLDBACH_CACHE_DIR", "from-env", 1);
  cli::apply_environment(c);
  ::unsetenv("GOLDBACH_CACHE_DIR");
  ASSERT_TRUE(c.cache_dir.has_value());
  EXPECT_EQ(*c.cache_dir, fs::path("from-env"));
}

TEST(Run, InProcessAuditHasMetadataHeader) {
  cli::JobConfig c;
  c.command = cli::Command::audit;
  c.modulus = 12;
  std::ostringstream out, log;
  ASSERT_EQ(cli::run(c, out, log), cli::kOk) << log.str();
  std::istringstream lines(out.str());
  std::string first, second, third, header, row;
  std::getline(lines, first);
  std::getline(lines, second);
  std::getline(lines, third);
  std::getline(lines, header);
  std::getline(lines, row);
  EXPECT_EQ(first, std::string("# goldbach_cli ") + cli::kToolVersion);
  EXPECT_EQ(second, "# command audit");
  EXPECT_EQ(third, "# config q=12 c1=0.10000000000000001");
  EXPECT_EQ(header, "q,c1,threshold,characters_scanned,offender,beta");
  EXPECT_EQ(row.substr(0, 3), "12,");
  EXPECT_NE(row.find(",4,none,"), std::string::npos);
}

TEST(Cli, ExitCodesForInvalidConfiguration) {
  const auto dir = scratch("invalid");
  EXPECT_EQ(run_cli(dir, "theorem --q1 4 --a1 2").status, 2);
  EXPECT_EQ(run_cli(dir, "theorem --height 20000").status, 2);
  EXPECT_EQ(run_cli(dir, "theorem --xmax 20000000").status, 2);
  EXPECT_EQ(run_cli(dir, "theorem --no-such-flag").status, 2);
  EXPECT_EQ(run_cli(dir, "").status, 2);
  EXPECT_EQ(run_cli(dir, "ruppel --q1 3 --a1 1 --q2 4 --a2 1").status, 2);
  EXPECT_EQ(run_cli(dir, "explicit --modulus 4 --char-index 0 --N 100").status, 2);
  EXPECT_EQ(run_cli(dir, "zeros --modulus 5 --char-index 7").status, 2);
  EXPECT_EQ(run_cli(dir, "fujii --zero-table nonsense").status, 2);
}

TEST(Cli, ExitCodesForInputOutput) {
  const auto dir = scratch("io");
  EXPECT_EQ(run_cli(dir, "sieve --xmax 1000 --out /nonexistent-dir/x.csv").status, 4);
  EXPECT_FALSE(fs::exists("/nonexistent-dir/x.csv"));
  EXPECT_EQ(run_cli(dir, "fujii --xmax 2000 --height 50 --zero-table 1.0=missing.txt").status, 4);
  std::ofstream(dir / "bad.txt") << "14.13\nnot-a-number\n";
  EXPECT_EQ(run_cli(dir, "fujii --xmax 2000 --height 50 --zero-table 1.0=bad.txt").status, 4);
}

TEST(Cli, RecertificationFailureExitsThree) {
  const auto dir = scratch("recertify");
  const std::string reference = std::string(GOLDBACH_TEST_DATA) + "/zeta_zeros_T100.txt";
  const auto ok = run_cli(dir, "fujii --xmax 5000 --samples 3 --height 100 --recertify --zero-table 1.0=" + reference);
  EXPECT_EQ(ok.status, 0) << ok.err;
  // Dropping one ordinate keeps every remaining sign check but breaks the count.
  std::ifstream in(reference);
  std::ofstream short_table(dir / "short.txt");
  std::string line;
  int data = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.front() != '#' && ++data == 10) continue;
    short_table << line << "\n";
  }
  short_table.close();
  const auto bad = run_cli(dir, "fujii --xmax 5000 --samples 3 --height 100 --recertify --zero-table 1.0=short.txt");
  EXPECT_EQ(bad.status, 3);
  EXPECT_NE(bad.err.find("argument principle"), std::string::npos) << bad.err;
  const auto trusted = run_cli(dir, "fujii --xmax 5000 --samples 3 --height 100 --zero-table 1.0=short.txt");
  EXPECT_EQ(trusted.status, 0);
  EXPECT_NE(trusted.err.find("not recertified"), std::string::npos);
}

TEST(Cli, TheoremExampleEmitsFiftyRows) {
  const auto dir = scratch("theorem");
  const auto o = run_cli(dir, "theorem --q1 3 --a1 1 --q2 4 --a2 3 --xmax 100000 --samples 50 --height 1000");
  ASSERT_EQ(o.status, 0) << o.err;
  const auto rows = body(o.out);
  EXPECT_EQ(count_lines(rows), 51u);
  EXPECT_EQ(rows.substr(0, rows.find('\n')), std::string(kTheoremCsvHeader));
  EXPECT_NE(o.out.find("# config q1=3 a1=1 q2=4 a2=3 xmax=100000 samples=50 height=1000"), std::string::npos);
}

TEST(Cli, RerunsAreByteIdenticalWithColdAndWarmCache) {
  const auto dir = scratch("determinism");
  const std::string args = "theorem --q1 5 --a1 2 --q2 3 --a2 2 --xmax 20000 --samples 7 --height 300 --out run.csv";
  ASSERT_EQ(run_cli(dir, args).status, 0);
  const auto cold = slurp(dir / "run.csv");
  const auto warm_run = run_cli(dir, args);
  ASSERT_EQ(warm_run.status, 0);
  EXPECT_NE(warm_run.err.find("loaded"), std::string::npos);
  EXPECT_EQ(cold, slurp(dir / "run.csv"));
  fs::remove_all(dir / ".goldbach_cache");
  ASSERT_EQ(run_cli(dir, args + " --cache-dir ''").status, 0);
  EXPECT_EQ(cold, slurp(dir / "run.csv"));
  EXPECT_FALSE(fs::exists(dir / ".goldbach_cache"));
}

TEST(Cli, CacheDirFromEnvironmentAndInvalidation) {
  const auto dir = scratch("cache");
  const auto first = run_cli(dir, "fujii --xmax 3000 --samples 2 --height 60", "GOLDBACH_CACHE_DIR=envcache");
  ASSERT_EQ(first.status, 0) << first.err;
  EXPECT_TRUE(fs::exists(dir / "envcache" / "zeros_1_0.txt"));
  EXPECT_TRUE(fs::exists(dir / "envcache" / "mangoldt.bin"));
  EXPECT_FALSE(fs::exists(dir / ".goldbach_cache"));
  const auto taller = run_cli(dir, "fujii --xmax 4000 --samples 2 --height 80", "GOLDBACH_CACHE_DIR=envcache");
  ASSERT_EQ(taller.status, 0);
  EXPECT_NE(taller.err.find("sieve cache"), std::string::npos) << taller.err;
  EXPECT_NE(taller.err.find("invalidated"), std::string::npos) << taller.err;
  EXPECT_NE(taller.err.find("wanted 80"), std::string::npos) << taller.err;
}

TEST(Cli, AuditExampleHasNoOffender) {
  const auto dir = scratch("audit");
  const auto o = run_cli(dir, "audit --q 12 --c1 0.1");
  ASSERT_EQ(o.status, 0) << o.err;
  EXPECT_NE(o.out.find(",none,"), std::string::npos);
}

TEST(Cli, ZerosOutputRoundTripsThroughIngestion) {
  const auto dir = scratch("zeros");
  const auto o = run_cli(dir, "zeros --modulus 1 --char-index 0 --height 100 --out z.txt");
  ASSERT_EQ(o.status, 0) << o.err;
  const auto computed = ingest_zero_table((dir / "z.txt").string(), trivial_character(), true);
  const auto reference =
      ingest_zero_table(std::string(GOLDBACH_TEST_DATA) + "/zeta_zeros_T100.txt", trivial_character());
  ASSERT_EQ(computed.zeros.size(), 29u);
  ASSERT_EQ(reference.zeros.size(), 29u);
  for (std::size_t i = 0; i < 29; ++i) EXPECT_NEAR(computed.zeros[i].ordinate, reference.zeros[i].ordinate, 1e-6);
  EXPECT_NE(slurp(dir / "z.txt").find("# height 100 count 29\n"), std::string::npos);
}

TEST(Cli, FujiiExampleReportsBothResiduals) {
  const auto dir = scratch("fujii");
  const auto o = run_cli(dir, "fujii --xmax 100000 --samples 5 --height 500");
  ASSERT_EQ(o.status, 0) << o.err;
  EXPECT_NE(o.out.find("X,lhs,main,zero_terms,residual,bare_residual,T,tail_bound\n"), std::string::npos);
  EXPECT_EQ(count_lines(body(o.out)), 6u);
  EXPECT_NE(o.err.find("rms(residual) / rms(bare residual)"), std::string::npos);
}

TEST(Cli, CircleJobsRun) {
  const auto dir = scratch("circle");
  const auto ex = run_cli(dir, "explicit --modulus 3 --char-index 1 --N 300 --height 200 --alpha 0.1 0.2");
  ASSERT_EQ(ex.status, 0) << ex.err;
  EXPECT_EQ(count_lines(body(ex.out)), 5u);
  const auto ms = run_cli(dir, "mean-square --modulus 4 --char-index 1 --N 200 --xi 0.1");
  ASSERT_EQ(ms.status, 0) << ms.err;
  EXPECT_NE(ms.out.find("mean_square,chi=4.1;N=200;xi=0.10000000000000001,"), std::string::npos);
  const auto lemmas = run_cli(dir, "lemmas --height 300");
  ASSERT_EQ(lemmas.status, 0) << lemmas.err;
  EXPECT_EQ(count_lines(body(lemmas.out)), 1u + 52u + 6u);
}
