#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>

#include "sl2cp/cli.hpp"

namespace sl2cp::cli {
namespace {

struct Outcome {
  CommandResult result;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "sl2cp");
  std::ostringstream out, err;
  Outcome o{run(args, out, err), {}, {}};
  o.out = out.str();
  o.err = err.str();
  return o;
}

json payload(std::vector<std::string> args) {
  const auto o = call(std::move(args));
  EXPECT_EQ(o.result.exit_code, 0) << o.err;
  return json::parse(o.out);
}

struct Process {
  int status;
  std::string out;
};

Process spawn(const std::string& args) {
  const std::string cmd = std::string(SL2CP_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

TEST(Cli, Irrep) {
  const auto t = payload({"irrep", "--m", "2"}).get<RepTriple>();
  EXPECT_EQ(t, irrep_matrices(2));
}

TEST(Cli, CharpolyExpand) {
  const auto p = payload({"charpoly", "--m", "2", "--expand"}).get<MultiPoly>();
  EXPECT_EQ(p, parse_polynomial("z0^3 - 4*z0*z1^2 - 4*z0*z2*z3"));
  const auto text = call({"charpoly", "--m", "2", "--expand", "--format", "text"});
  EXPECT_EQ(text.out, "z0^3 - 4*z0*z1^2 - 4*z0*z2*z3\n");
  EXPECT_EQ(call({"--format", "text", "charpoly", "--m", "2"}).out, "z0 * (z0^2 - 4*u)\n");
}

TEST(Cli, CharpolyOracles) {
  const auto exact = payload({"charpoly", "--expr", R"({"tensor":[2,1]})", "--oracle", "exact"});
  EXPECT_EQ(exact["charpoly"].get<CanonicalCP>(), CanonicalCP(0, {{1, 2}, {3, 1}}));
  EXPECT_TRUE(exact["verification"]["agreed"].get<bool>());
  EXPECT_EQ(exact["verification"]["mode"], "exact");
  const auto rnd = payload({"charpoly", "--m", "9", "--oracle", "randomized", "--trials", "5"});
  EXPECT_EQ(rnd["verification"]["trials"], 5);
  EXPECT_TRUE(rnd["verification"]["agreed"].get<bool>());
  const auto big = call({"charpoly", "--m", "20", "--oracle", "exact"});
  EXPECT_EQ(big.result.exit_code, 1);
  EXPECT_EQ(big.result.error_kind, ErrorKind::SizeCapExceeded);
  EXPECT_EQ(call({"charpoly", "--m", "20", "--oracle", "exact", "--exact-cap", "21"}).result.exit_code, 0);
}

TEST(Cli, CharpolyFromTriple) {
  const std::string triple = json(tensor(irrep_matrices(1), irrep_matrices(1))).dump();
  EXPECT_EQ(payload({"charpoly", "--triple", triple}).get<CanonicalCP>(), CanonicalCP(2, {{2, 1}}));
  RepTriple broken = irrep_matrices(1);
  broken.F = broken.E;
  const auto o = call({"charpoly", "--triple", json(broken).dump()});
  EXPECT_EQ(o.result.exit_code, 1);
  EXPECT_EQ(o.result.error_kind, ErrorKind::BadInput);
}

TEST(Cli, Decompose) {
  const auto j = payload({"decompose", "--cp", R"({"d0":3,"factors":{"1":1,"2":2}})"});
  EXPECT_EQ(j.dump(), R"({"l":{"0":1,"1":1,"2":2}})");
  const auto from_text = payload({"decompose", "--cp", "z0^3 - 4*z0*z1^2 - 4*z0*z2*z3"});
  EXPECT_EQ(from_text.get<Decomposition>(), (Decomposition{{2, 1}}));
  const auto bad = call({"decompose", "--cp", R"({"d0":0,"factors":{"2":1}})"});
  EXPECT_EQ(bad.result.exit_code, 1);
  EXPECT_EQ(json::parse(bad.out)["error_kind"], "NotAdmissible");
}

TEST(Cli, Recognize) {
  const std::string expanded = json(expand_canonical(CanonicalCP(2, {{1, 2}, {2, 1}}))).dump();
  EXPECT_EQ(payload({"recognize", "--poly", expanded}).get<CanonicalCP>(),
            CanonicalCP(2, {{1, 2}, {2, 1}}));
  const auto bad = call({"recognize", "--poly", "z0^2 + z1^2 + z2*z3"});
  EXPECT_EQ(bad.result.exit_code, 1);
  EXPECT_EQ(bad.result.error_kind, ErrorKind::NotCharPoly);
  EXPECT_EQ(json::parse(bad.out)["status"], "error");
  EXPECT_EQ(call({"recognize", "--poly", "z0 +"}).result.error_kind, ErrorKind::BadInput);
}

TEST(Cli, ProductAndClebschGordan) {
  const auto prod = payload({"product", "--a", R"({"d0":0,"factors":{"1":1}})", "--b",
                             "z0^2 - z1^2 - z2*z3"});
  EXPECT_EQ(prod.get<CanonicalCP>(), CanonicalCP(2, {{2, 1}}));
  EXPECT_EQ(payload({"clebsch-gordan", "--m", "2", "--n", "1"}).get<Decomposition>(),
            (Decomposition{{1, 1}, {3, 1}}));
  EXPECT_EQ(call({"clebsch-gordan", "--m", "3", "--n", "3", "--format", "text"}).out,
            "V(0) + V(2) + V(4) + V(6)\n");
}

TEST(Cli, MonoidCheck) {
  const auto j = payload({"monoid-check"});
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["samples"], 56);
  const auto custom = payload({"monoid-check", "--samples", R"([{"d0":1},{"d0":0,"factors":{"1":1}}])"});
  EXPECT_EQ(custom["samples"], 2);
  EXPECT_EQ(custom["triples_checked"], 8);
}

TEST(Cli, HuZhangAndSymmetry) {
  const auto hz = payload({"hu-zhang", "--m", "4"});
  EXPECT_TRUE(hz["holds"].get<bool>());
  EXPECT_EQ(hz["polynomial"].get<MultiPoly>(), hu_zhang_product(4));
  EXPECT_TRUE(payload({"symmetry-check", "--expr", R"({"sum":[1,2]})"})["holds"].get<bool>());
}

TEST(Cli, Adjoint) {
  const auto r = payload({"adjoint", "--n", "4", "--report"});
  EXPECT_EQ(r.dump(), R"({"computed_z0_exponent":5,"match":false,"n":4,"paper_z0_exponent":2})");
  const auto a = payload({"adjoint", "--n", "3", "--i", "2"});
  EXPECT_EQ(a["charpoly"].get<CanonicalCP>(), CanonicalCP(2, {{1, 2}, {2, 1}}));
  EXPECT_TRUE(a["same_for_all_i"].get<bool>());
  EXPECT_TRUE(a["verification"]["agreed"].get<bool>());
  EXPECT_EQ(call({"adjoint", "--n", "3", "--i", "3"}).result.error_kind, ErrorKind::IndexOutOfRange);
}

TEST(Cli, RepBuild) {
  const auto t = payload({"rep-build", "--expr", R"({"sum":[{"irrep":1},{"tensor":[2,1]}]})"});
  EXPECT_EQ(t.get<RepTriple>(),
            direct_sum(irrep_matrices(1), tensor(irrep_matrices(2), irrep_matrices(1))));
  EXPECT_EQ(call({"rep-build", "--expr", R"({"cube":[1]})"}).result.error_kind, ErrorKind::BadInput);
  EXPECT_EQ(call({"rep-build", "--expr", "not json"}).result.error_kind, ErrorKind::BadInput);
}

TEST(Cli, RoundTripsThroughOutput) {
  const std::string cp = call({"charpoly", "--m", "5"}).out;
  EXPECT_EQ(call({"decompose", "--cp", cp}).out, "{\n  \"l\": {\n    \"5\": 1\n  }\n}\n");
  const std::string expanded = call({"charpoly", "--m", "5", "--expand"}).out;
  EXPECT_EQ(call({"recognize", "--poly", expanded}).out, cp);
  const std::string text = call({"charpoly", "--m", "5", "--expand", "--format", "text"}).out;
  EXPECT_EQ(call({"recognize", "--poly", text}).out, cp);
  const std::string triple = call({"irrep", "--m", "3"}).out;
  EXPECT_EQ(call({"charpoly", "--triple", triple}).out, call({"charpoly", "--m", "3"}).out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).result.exit_code, 2);
  EXPECT_EQ(call({"frobnicate"}).result.exit_code, 2);
  EXPECT_EQ(call({"irrep"}).result.exit_code, 2);
  EXPECT_EQ(call({"charpoly"}).result.exit_code, 2);
  EXPECT_EQ(call({"charpoly", "--m", "1", "--expr", "1"}).result.exit_code, 2);
  EXPECT_EQ(call({"charpoly", "--m", "1", "--oracle", "psychic"}).result.exit_code, 2);
  EXPECT_EQ(call({"--format", "xml", "irrep", "--m", "1"}).result.exit_code, 2);
  EXPECT_EQ(call({"--trials", "0", "irrep", "--m", "1"}).result.exit_code, 2);
  const auto o = call({"irrep", "--m", "-1"});
  EXPECT_EQ(o.result.exit_code, 2);
  EXPECT_FALSE(o.err.empty());
  EXPECT_EQ(call({"--help"}).result.exit_code, 0);
}

TEST(CliProcess, ExitCodes) {
  EXPECT_EQ(spawn("irrep --m 1").status, 0);
  EXPECT_EQ(spawn("recognize --poly 'z0^2 + 1'").status, 1);
  EXPECT_EQ(spawn("no-such-command").status, 2);
}

TEST(CliProcess, DeterministicOutput) {
  const std::string args = "--seed 17 charpoly --expr '{\"tensor\":[3,3]}' --oracle randomized";
  const auto a = spawn(args), b = spawn(args);
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  const std::string mismatch = "--seed 5 monoid-check --random 10";
  EXPECT_EQ(spawn(mismatch).out, spawn(mismatch).out);
}

}  // namespace
}  // namespace sl2cp::cli
