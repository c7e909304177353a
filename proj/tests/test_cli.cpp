#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "acp/acp.hpp"
#include "acp_cli.hpp"

using namespace acp;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden(const std::string& name) { return std::string(ACP_GOLDEN_DIR) + "/" + name; }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    unsetenv("ACP_DEFAULT_TOL");
    dir_ = fs::temp_directory_path() /
           ("acp_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override {
    unsetenv("ACP_DEFAULT_TOL");
    fs::remove_all(dir_);
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, GenerateCanonical) {
  const Outcome r = run({"generate", "--method", "canonical", "--size", "2", "--out-a", path("A.mat"), "--out-b",
                         path("B.mat")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(slurp(path("A.mat")), slurp(golden("sigma3.mat")));
  EXPECT_EQ(slurp(path("B.mat")), slurp(golden("sigma1.mat")));
  EXPECT_EQ(r.out, "certified n=2 tol=1e-10 max_residual=0\n");
}

TEST_F(CliTest, GenerateOddSizeIsRejected) {
  for (const char* method : {"random", "canonical", "pauli-chain"}) {
    const Outcome r = run({"generate", "--method", method, "--size", "3", "--out-a", path("A.mat"), "--out-b",
                           path("B.mat")});
    EXPECT_EQ(r.code, 2) << method;
    EXPECT_NE(r.err.find("OddDimension"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("odd dimension"), std::string::npos) << r.err;
  }
  EXPECT_FALSE(fs::exists(path("A.mat")));
}

TEST_F(CliTest, GeneratePauliChain) {
  const Outcome r = run({"generate", "--method", "pauli-chain", "--size", "4", "--out-a", path("A.mat"), "--out-b",
                         path("B.mat")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(slurp(path("A.mat")), slurp(golden("pauli4_a.mat")));
  EXPECT_EQ(slurp(path("B.mat")), slurp(golden("pauli4_b.mat")));
  const Outcome six = run({"generate", "--method", "pauli-chain", "--size", "6", "--out-a", path("A.mat"),
                           "--out-b", path("B.mat")});
  EXPECT_EQ(six.code, 2);
}

TEST_F(CliTest, GenerateRandomIsByteDeterministic) {
  auto gen = [&](const std::string& seed, const std::string& tag) {
    const Outcome r = run({"generate", "--method", "random", "--size", "8", "--seed", seed, "--out-a",
                           path(tag + "A.mat"), "--out-b", path(tag + "B.mat")});
    EXPECT_EQ(r.code, 0) << r.err;
    return slurp(path(tag + "A.mat")) + slurp(path(tag + "B.mat"));
  };
  const std::string first = gen("12345", "x");
  EXPECT_EQ(first, gen("12345", "y"));
  EXPECT_NE(first, gen("12346", "z"));
}

TEST_F(CliTest, VerifySigmaPair) {
  const Outcome r = run({"verify", "--a", golden("sigma1.mat"), "--b", golden("minus_sigma2.mat"), "--report",
                         path("report.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, slurp(golden("report_sigma_pair.json")));
  EXPECT_EQ(slurp(path("report.json")), slurp(golden("report_sigma_pair.json")));
}

TEST_F(CliTest, VerifyOutcomes) {
  EXPECT_EQ(run({"verify", "--a", golden("sigma1.mat"), "--b", golden("sigma3.mat")}).code, 0);

  const Outcome fail = run({"verify", "--a", golden("sigma1.mat"), "--b", golden("sigma1.mat")});
  EXPECT_EQ(fail.code, 1);
  EXPECT_EQ(fail.out, slurp(golden("report_sigma1_sigma1.json")));

  EXPECT_EQ(run({"verify", "--a", golden("sigma1.mat"), "--b", golden("pauli4_a.mat")}).code, 2);
  EXPECT_EQ(run({"verify", "--a", golden("sigma1.mat"), "--b", path("missing.mat")}).code, 2);

  std::ofstream(path("bad.mat")) << "{\"rows\":2,";
  EXPECT_EQ(run({"verify", "--a", golden("sigma1.mat"), "--b", path("bad.mat")}).code, 2);
  EXPECT_EQ(run({"verify", "--a", golden("sigma1.mat")}).code, 2);
}

TEST_F(CliTest, DefaultToleranceFromEnvironment) {
  ComplexMatrix b = -pauli::sigma2();
  b(0, 0) = 1e-8;  // spoils B^2 = I and AB + BA = 0 slightly
  write_matrix(b, path("b.mat"));
  EXPECT_EQ(run({"verify", "--a", golden("sigma1.mat"), "--b", path("b.mat")}).code, 1);
  setenv("ACP_DEFAULT_TOL", "1e-6", 1);
  EXPECT_EQ(run({"verify", "--a", golden("sigma1.mat"), "--b", path("b.mat")}).code, 0);
  EXPECT_EQ(run({"verify", "--a", golden("sigma1.mat"), "--b", path("b.mat"), "--tol", "1e-10"}).code, 1);
  setenv("ACP_DEFAULT_TOL", "tiny", 1);
  EXPECT_EQ(run({"verify", "--a", golden("sigma1.mat"), "--b", path("b.mat")}).code, 2);
}

TEST_F(CliTest, Derive) {
  const Outcome r = run({"derive", "--in", golden("sigma3.mat"), "--out", path("B.mat")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(slurp(path("B.mat")), slurp(golden("sigma1.mat")));

  const Outcome unbalanced = run({"derive", "--in", golden("identity2.mat"), "--out", path("C.mat")});
  EXPECT_EQ(unbalanced.code, 1);
  EXPECT_NE(unbalanced.err.find("UnbalancedSpectrum"), std::string::npos);

  EXPECT_EQ(run({"derive", "--in", path("missing.mat"), "--out", path("C.mat")}).code, 2);
  EXPECT_EQ(run({"derive", "--in", golden("non_hermitian.mat"), "--out", path("C.mat")}).code, 1);
}

TEST_F(CliTest, DeriveThenVerifyRandomInvolution) {
  RandomSource rng(91);
  write_matrix(random_involution(3, 3, rng), path("A.mat"));
  ASSERT_EQ(run({"derive", "--in", path("A.mat"), "--out", path("B.mat")}).code, 0);
  EXPECT_EQ(run({"verify", "--a", path("A.mat"), "--b", path("B.mat"), "--tol", "1e-9"}).code, 0);
}

TEST_F(CliTest, LiftKronSigmaExample) {
  const Outcome r = run({"lift", "--op", "kron", "--c", golden("sigma3.mat"), "--a", golden("sigma1.mat"), "--b",
                         golden("minus_sigma2.mat"), "--out-a", path("A4.mat"), "--out-b", path("B4.mat")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "certified n=4 tol=1e-09 max_residual=0\n");
  EXPECT_EQ(slurp(path("A4.mat")), slurp(golden("pauli4_a.mat")));
  EXPECT_EQ(slurp(path("B4.mat")), slurp(golden("pauli4_b.mat")));
  EXPECT_EQ(run({"verify", "--a", path("A4.mat"), "--b", path("B4.mat")}).code, 0);
}

TEST_F(CliTest, LiftErrors) {
  EXPECT_EQ(run({"lift", "--op", "star", "--a", golden("pauli4_a.mat"), "--b", golden("pauli4_b.mat"), "--out-a",
                 path("x.mat"), "--out-b", path("y.mat")})
                .code,
            2);
  // C = I + sigma1 is Hermitian but not an involution.
  write_matrix(ComplexMatrix{{1.0, 1.0}, {1.0, 1.0}}, path("c.mat"));
  EXPECT_EQ(run({"lift", "--op", "kron", "--c", path("c.mat"), "--a", golden("sigma1.mat"), "--b",
                 golden("minus_sigma2.mat"), "--out-a", path("x.mat"), "--out-b", path("y.mat")})
                .code,
            1);
  EXPECT_EQ(run({"lift", "--op", "kron", "--a", golden("sigma1.mat"), "--b", golden("minus_sigma2.mat"), "--out-a",
                 path("x.mat"), "--out-b", path("y.mat")})
                .code,
            2);
  EXPECT_EQ(run({"lift", "--op", "twist", "--a", golden("sigma1.mat"), "--b", golden("minus_sigma2.mat"),
                 "--out-a", path("x.mat"), "--out-b", path("y.mat")})
                .code,
            2);
}

TEST_F(CliTest, LiftDirectSumTwice) {
  ASSERT_EQ(run({"generate", "--method", "canonical", "--size", "2", "--out-a", path("A2.mat"), "--out-b",
                 path("B2.mat")})
                .code,
            0);
  ASSERT_EQ(run({"lift", "--op", "dirsum", "--a", path("A2.mat"), "--b", path("B2.mat"), "--out-a", path("A4.mat"),
                 "--out-b", path("B4.mat")})
                .code,
            0);
  const Outcome r = run({"lift", "--op", "dirsum", "--a", path("A4.mat"), "--b", path("B4.mat"), "--out-a",
                         path("A8.mat"), "--out-b", path("B8.mat")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read_matrix(path("A8.mat")).rows(), 8u);
  EXPECT_EQ(run({"verify", "--a", path("A8.mat"), "--b", path("B8.mat")}).code, 0);
}

TEST_F(CliTest, ExpmForms) {
  Outcome r = run({"expm", "--form", "involution", "--z", "0,0", "--a", golden("sigma1.mat"), "--out",
                   path("e.mat")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(slurp(path("e.mat")), slurp(golden("identity2.mat")));
  EXPECT_EQ(r.out.rfind("form=involution oracle_relative_deviation=", 0), 0u) << r.out;

  r = run({"expm", "--form", "product", "--z", "1.5707963267948966,0", "--a", golden("sigma1.mat"), "--b",
           golden("minus_sigma2.mat"), "--out", path("p.mat")});
  ASSERT_EQ(r.code, 0) << r.err;
  const ComplexMatrix expected{{Complex(0.0, -1.0), 0.0}, {0.0, Complex(0.0, 1.0)}};
  EXPECT_LE(frobenius_distance(read_matrix(path("p.mat")), expected), 1e-12);

  r = run({"expm", "--form", "nilpotent", "--z", "1,0", "--a", golden("sigma1.mat"), "--b",
           golden("minus_sigma2.mat"), "--out", path("n.mat")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(slurp(path("n.mat")), slurp(golden("expm_nilpotent_z1.mat")));

  r = run({"expm", "--form", "kron-pair", "--z", "0.5,0.25", "--a", golden("sigma1.mat"), "--b",
           golden("minus_sigma2.mat"), "--out", path("k.mat")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read_matrix(path("k.mat")).rows(), 4u);
}

TEST_F(CliTest, ExpmAutoResolution) {
  auto form_of = [&](std::vector<std::string> args) {
    args.insert(args.begin(), "expm");
    args.insert(args.end(), {"--z", "0.3,0.1", "--out", path("o.mat")});
    const Outcome r = run(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return r.out.substr(0, r.out.find(' '));
  };
  EXPECT_EQ(form_of({"--a", golden("sigma1.mat"), "--b", golden("minus_sigma2.mat"), "--nilpotent"}),
            "form=nilpotent");
  EXPECT_EQ(form_of({"--a", golden("sigma1.mat"), "--b", golden("minus_sigma2.mat")}), "form=product");
  EXPECT_EQ(form_of({"--a", golden("sigma3.mat")}), "form=involution");
  EXPECT_EQ(form_of({"--a", golden("non_hermitian.mat")}), "form=oracle");
}

TEST_F(CliTest, ExpmErrors) {
  EXPECT_EQ(run({"expm", "--form", "involution", "--z", "1,0", "--a", golden("non_hermitian.mat"), "--out",
                 path("e.mat")})
                .code,
            1);
  EXPECT_EQ(run({"expm", "--form", "product", "--z", "1,0", "--a", golden("sigma1.mat"), "--b", golden("sigma1.mat"),
                 "--out", path("e.mat")})
                .code,
            1);
  for (const char* z : {"1", "1, 0", "a,b", "1,0,0", ",1"}) {
    EXPECT_EQ(run({"expm", "--z", z, "--a", golden("sigma1.mat"), "--out", path("e.mat")}).code, 2) << z;
  }
  EXPECT_EQ(run({"expm", "--form", "product", "--z", "1,0", "--a", golden("sigma1.mat"), "--out", path("e.mat")})
                .code,
            2);
}

TEST_F(CliTest, Spectrum) {
  Outcome r = run({"spectrum", "--in", golden("sigma1.mat")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "eigenvalues: -1 1\ncount(+1): 1\ncount(-1): 1\n");

  write_matrix(canonical_pair(8).a(), path("a8.mat"));
  r = run({"spectrum", "--in", path("a8.mat")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "eigenvalues: -1 -1 -1 -1 1 1 1 1\ncount(+1): 4\ncount(-1): 4\n");

  EXPECT_EQ(run({"spectrum", "--in", golden("non_hermitian.mat")}).code, 1);
  EXPECT_EQ(run({"spectrum", "--in", path("missing.mat")}).code, 2);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"generate", "--method", "random", "--size", "2"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, PipelineClosure) {
  for (std::size_t n : {2u, 4u, 8u, 16u}) {
    for (int seed = 1; seed <= 20; ++seed) {
      const std::string sz = std::to_string(n), sd = std::to_string(seed);
      ASSERT_EQ(run({"generate", "--method", "random", "--size", sz, "--seed", sd, "--out-a", path("A.mat"),
                     "--out-b", path("B.mat")})
                    .code,
                0);
      ASSERT_EQ(run({"lift", "--op", "kron", "--c", golden("sigma3.mat"), "--a", path("A.mat"), "--b", path("B.mat"),
                     "--out-a", path("LA.mat"), "--out-b", path("LB.mat")})
                    .code,
                0);
      ASSERT_EQ(run({"derive", "--in", path("LA.mat"), "--out", path("DB.mat")}).code, 0) << n << "/" << seed;
      ASSERT_EQ(run({"verify", "--a", path("LA.mat"), "--b", path("DB.mat"), "--tol", "1e-9"}).code, 0);
      const Outcome e = run({"expm", "--z", "0.7,-0.4", "--a", path("LA.mat"), "--b", path("DB.mat"), "--out",
                             path("E.mat"), "--tol", "1e-9"});
      ASSERT_EQ(e.code, 0) << e.err;
      EXPECT_EQ(e.out.rfind("form=product", 0), 0u);
    }
  }
}

TEST_F(CliTest, BinaryExitCodes) {
  const std::string tool = ACP_TOOL_PATH;
  auto status = [&](const std::string& args) {
    const int raw = std::system((tool + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status("verify --a " + golden("sigma1.mat") + " --b " + golden("minus_sigma2.mat")), 0);
  EXPECT_EQ(status("verify --a " + golden("sigma1.mat") + " --b " + golden("sigma1.mat")), 1);
  EXPECT_EQ(status("verify --a " + golden("sigma1.mat") + " --b " + golden("pauli4_a.mat")), 2);
  EXPECT_EQ(status("generate --method random --size 5 --out-a " + path("a") + " --out-b " + path("b")), 2);
  EXPECT_EQ(status("spectrum --in " + golden("non_hermitian.mat")), 1);
}
