#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

using nlohmann::json;

namespace {

struct Outcome {
    int code = -1;
    std::string out;
    json report() const { return json::parse(out); }
};

std::string quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

Outcome run(const std::vector<std::string>& args) {
    std::string cmd = CENTRUM_CLI;
    for (const auto& a : args) cmd += " " + quote(a);
    cmd += " 2>/dev/null";
    Outcome r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// A violation with this law anywhere in the report, carrying its basis indices.
bool has_violation(const json& j, const std::string& law) {
    if (j.is_object()) {
        if (j.value("law", "") == law && j.contains("indices") && !j["indices"].empty()) return true;
        for (const auto& [k, v] : j.items())
            if (has_violation(v, law)) return true;
    }
    if (j.is_array())
        for (const auto& v : j)
            if (has_violation(v, law)) return true;
    return false;
}

}  // namespace

TEST(Cli, CenterOfMatrixAlgebra) {
    Outcome r = run({"center", "--algebra", "matrix:2"});
    ASSERT_EQ(r.code, 0);
    json j = r.report();
    EXPECT_EQ(j["object"]["dim"], 1);
    EXPECT_EQ(j["command"], "center");
    EXPECT_TRUE(j["inputs"]["algebra"].contains("sha256"));
}

TEST(Cli, MoritaPasses) {
    Outcome r = run({"verify", "morita", "--algebra", "matrix:1", "--n", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.report()["pass"], true);
}

TEST(Cli, BrokenAssociativityIsAnInputError) {
    // e1 e1 = e2, e1 e2 = e1, e2 e1 = 0 with e0 the unit.
    json sc = json::array();
    for (int i = 0; i < 3; ++i) {
        sc.push_back({0, i, i, "1"});
        if (i) sc.push_back({i, 0, i, "1"});
    }
    sc.push_back({1, 1, 2, "1"});
    sc.push_back({1, 2, 1, "1"});
    sc.push_back({2, 2, 2, "1"});
    json alg = {{"dim", 3}, {"unit", {"1", "0", "0"}}, {"structure_constants", sc}};
    auto path = std::filesystem::temp_directory_path() / "centrum_broken_algebra.json";
    std::ofstream(path) << alg.dump();
    Outcome r = run({"validate", "--kind", "algebra", "--input", path.string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(has_violation(r.report(), "associativity"));
    std::filesystem::remove(path);
}

TEST(Cli, InputErrors) {
    EXPECT_EQ(run({"center", "--algebra", "quaternions"}).code, 2);
    EXPECT_EQ(run({"center", "--algebra", "{not json"}).code, 2);
    EXPECT_EQ(run({"center"}).code, 2);
    EXPECT_EQ(run({"--field", "gfp:9", "center", "--algebra", "k"}).code, 2);
}

TEST(Cli, FailedCheckExitsOne) {
    // Z(k^2 -> M_2) has legs k^2 -> k^2 <- k, so it is not invertible.
    Outcome z = run({"z-hom", "--map", R"({"diagonal": 2})"});
    ASSERT_EQ(z.code, 0);
    json cospan = z.report()["object"]["cospan"];
    Outcome r = run({"invertible", "cospan", "--cospan", cospan.dump()});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.report()["pass"], false);
}

TEST(Cli, PrimeField) {
    Outcome r = run({"--field", "gfp:7", "center", "--algebra", "group:C7"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.report()["object"]["dim"], 7);
    EXPECT_EQ(r.report()["field"], "gfp:7");
}

TEST(Cli, ReportsAreDeterministic) {
    std::vector<std::string> args{"--seed", "5", "beta-check", "--random", "1"};
    Outcome a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.report()["seed"], 5);
}

TEST(Cli, CoherenceCommands) {
    EXPECT_EQ(run({"verify", "triangle", "--bimodules", R"([{"column": 2}, {"row": 2}])"}).code, 0);
    EXPECT_EQ(run({"verify", "lax", "--random", "2"}).code, 0);
    Outcome w = run({"verify", "lax", "--maps",
                 R"([{"unit": "product:k^2"}, {"diagonal": 2}, {"identity": "matrix:2"}])"});
    EXPECT_EQ(w.code, 0);
    EXPECT_EQ(w.report()["object"]["rank_m"], 2);
    EXPECT_EQ(w.report()["object"]["target_dim"], 4);
    EXPECT_EQ(run({"tensor-over", "--left", R"({"row": 2})", "--right", R"({"column": 2})"}).code, 0);
}
