#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

using nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run workbench(const std::string& args) {
    const std::string cmd = std::string(WORKBENCH_EXE) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST(Counts, GammaTwoOnS3) {
    const auto r = workbench("counts --group builtin:S3 --tau gamma:2 --kmax 3");
    ASSERT_EQ(r.code, 0);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["counts"], json({1, 6, 18, 48}));
    EXPECT_EQ(j["tau"], "gamma:2");
    // Same table from the permutation presentation on disk.
    const auto f = workbench("counts --group " + fixture("group_s3.json") + " --tau gamma:2 --format csv");
    ASSERT_EQ(f.code, 0);
    EXPECT_EQ(f.out, "k,count\n0,1\n1,6\n2,18\n3,48\n");
}

TEST(Counts, FreeAndAbelian) {
    const auto free = json::parse(workbench("counts --group builtin:Q8 --kmax 3").out);
    EXPECT_EQ(free["counts"], json({1, 8, 64, 512}));
    const auto ab = json::parse(workbench("counts --group builtin:Z4 --tau gamma:2 --kmax 3").out);
    EXPECT_EQ(ab["counts"], json({1, 4, 16, 64}));
}

TEST(Homology, ClassifyingSpaceOfZ2) {
    const auto r = workbench("homology --construction wbar --group builtin:Z2 --trunc 5");
    ASSERT_EQ(r.code, 0);
    const auto H = json::parse(r.out)["homology"];
    ASSERT_EQ(H.size(), 5u);
    EXPECT_EQ(H[1]["torsion"], json({2}));
    EXPECT_EQ(H[2]["torsion"], json::array());
    EXPECT_EQ(H[3]["torsion"], json({2}));
    EXPECT_EQ(H[3]["truncation"], 5);

    const auto tau = json::parse(workbench("homology --construction wbar_tau --tau gamma:2 --group builtin:Z2 --trunc 5").out);
    EXPECT_EQ(tau["homology"], json::parse(r.out)["homology"]);
}

TEST(Homology, DiagonalAndTotalAgreeWithWbar) {
    const std::string common = " --group builtin:S3 --tau gamma:2 --trunc 3 --imax 2";
    const auto w = json::parse(workbench("homology --construction wbar_tau" + common).out)["homology"];
    const auto d = json::parse(workbench("homology --construction diagonal" + common).out)["homology"];
    const auto t = json::parse(workbench("homology --construction total" + common).out)["homology"];
    EXPECT_EQ(w, d);
    EXPECT_EQ(w, t);
    const auto wk = json::parse(workbench("homology --construction w_total --group builtin:Z2 --trunc 3").out);
    for (std::size_t i = 1; i < wk["homology"].size(); ++i) EXPECT_EQ(wk["homology"][i]["torsion"], json::array());
}

TEST(Homology, NeedsTruncation) {
    EXPECT_EQ(workbench("homology --group builtin:Z2 --trunc 3 --imax 3").code, 2);
    EXPECT_EQ(workbench("homology --construction nope --group builtin:Z2").code, 2);
}

TEST(Verify, AlgebraicTargets) {
    EXPECT_EQ(workbench("verify --target epsilon --k 3 --trunc 4").code, 0);
    const auto cr = workbench("verify --target cr --group builtin:Z2 --trunc 3");
    ASSERT_EQ(cr.code, 0);
    const auto j = json::parse(cr.out);
    EXPECT_EQ(j["status"], "pass");
    ASSERT_EQ(j["homology_agreement"].size(), 3u);
    EXPECT_EQ(j["homology_agreement"][1]["diagonal"], "Z/2");
    EXPECT_EQ(workbench("verify --target bk --group builtin:Z2 --trunc 2 --ordinal-cap 2").code, 0);
    EXPECT_EQ(workbench("verify --target tonks --group builtin:S3 --tau gamma:2 --trunc 2 --ordinal-cap 1").code, 0);
    EXPECT_EQ(workbench("verify --target zigzag --group builtin:Z2 --trunc 2 --ordinal-cap 1").code, 0);
}

TEST(Verify, BundleFixtures) {
    for (const char* name : {"bundle_circle_z2.json", "bundle_triangle_z4.json"}) {
        EXPECT_EQ(workbench("verify --target bundle-roundtrip --input " + fixture(name)).code, 0) << name;
        EXPECT_EQ(workbench("verify --target cocycle --input " + fixture(name)).code, 0) << name;
    }
    EXPECT_EQ(workbench("verify --target bundle-roundtrip --group builtin:S3 --seed 9").code, 0);
}

TEST(Verify, NegativeFixtures) {
    const auto bad = workbench("verify --target bundle-roundtrip --input " + fixture("bundle_not_simplicial.json"));
    EXPECT_EQ(bad.code, 1);
    const auto j = json::parse(bad.out);
    EXPECT_EQ(j["status"], "fail");
    EXPECT_NE(j["verdicts"][0]["counterexample"].get<std::string>().find("d1 on cell 0 of degree 2"), std::string::npos);

    const auto cocycle = workbench("verify --target cocycle --input " + fixture("bundle_corrupt_cocycle.json"));
    EXPECT_EQ(cocycle.code, 1);
    const auto c = json::parse(cocycle.out)["verdicts"][0];
    EXPECT_EQ(c["status"], "fail");
    EXPECT_NE(c["counterexample"].get<std::string>().find("theta = (1):[0]->[1]"), std::string::npos);
}

TEST(Errors, ExitCodes) {
    EXPECT_EQ(workbench("counts --group " + fixture("group_bad.json")).code, 2);
    EXPECT_EQ(workbench("counts --group builtin:NoSuchGroup").code, 2);
    EXPECT_EQ(workbench("verify --target nothing").code, 2);
    EXPECT_EQ(workbench("counts --tau gamma:x").code, 2);
    EXPECT_EQ(workbench("counts --format xml").code, 2);
    EXPECT_EQ(workbench("counts --bogus-flag").code, 2);
    EXPECT_EQ(workbench("verify --target bundle-roundtrip --input /nonexistent.json").code, 2);
    EXPECT_EQ(workbench("counts --group builtin:S3 --kmax 12").code, 3);
    const auto err = json::parse(workbench("counts --group builtin:S3 --kmax 12").out);
    EXPECT_EQ(err["error"], "budget");
}

TEST(Reports, Deterministic) {
    const std::string args = "verify --target bundle-roundtrip --group builtin:S3 --seed 17";
    EXPECT_EQ(workbench(args).out, workbench(args).out);
    const std::string h = "homology --construction wbar --group builtin:S3 --trunc 3 --format csv";
    EXPECT_EQ(workbench(h).out, workbench(h).out);
    EXPECT_EQ(workbench(h + " --seed 3").out, workbench(h).out);
}

TEST(Reports, OutFile) {
    const std::string path = ::testing::TempDir() + "wbar_counts.csv";
    ASSERT_EQ(workbench("counts --group builtin:Z2 --kmax 2 --format csv --out " + path).code, 0);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), "k,count\n0,1\n1,2\n2,4\n");
}
