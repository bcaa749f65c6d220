#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "test_graphs.hpp"

using namespace diamkit;
using namespace diamkit::testing;

namespace {

namespace fs = std::filesystem;

struct Proc {
    int status = -1;
    std::string out;
};

Proc sh(const std::string& cmd) {
    Proc r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p)
        return r;
    char buf[4096];
    for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;)
        r.out.append(buf, n);
    int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

class Cli : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("diamkit-cli-" + std::to_string(::getpid()) + "-" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string file(const std::string& name, const std::string& content) {
        fs::path p = dir_ / name;
        std::ofstream(p) << content;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    static Proc cli(const std::string& args) { return sh(std::string(DIAMKIT_CLI) + " " + args + " 2>/dev/null"); }
    static Proc cli_err(const std::string& args) { return sh(std::string(DIAMKIT_CLI) + " " + args + " 2>&1 >/dev/null"); }

    fs::path dir_;
};

} // namespace

TEST_F(Cli, SolveNearBipartiteFiveCycle) {
    auto g = file("c5.graph", serialize_graph(cycle_graph(5)));
    auto r = cli("solve --problem nearbip --d 2 " + g);
    EXPECT_EQ(r.status, 0);
    std::istringstream in(r.out);
    EXPECT_EQ(parse_vertex_set(in).size(), 1u);
}

TEST_F(Cli, GeneratePipedIntoCount) {
    auto r = cli("generate gd --d 2 | " + std::string(DIAMKIT_CLI) + " count");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "48\n");
}

TEST_F(Cli, ReduceThenCheckGadget) {
    auto phi = file("phi.cnf", "p nae 3 3\n1 2 3 0\n-1 -2 -3 0\n1 -2 -3 0\n");
    auto g = sh(std::string(DIAMKIT_CLI) + " reduce ioct-gadget " + phi + " > " + path("g.txt"));
    ASSERT_EQ(g.status, 0);
    auto r = cli("check-gadget " + path("g.txt"));
    EXPECT_EQ(r.status, 0) << r.out;
    EXPECT_NE(r.out.find("pass diameter <= 4"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("pass K1,4^3-free"), std::string::npos) << r.out;
}

TEST_F(Cli, NoAnswerExitStatus) {
    auto g = file("c5.graph", serialize_graph(cycle_graph(5)));
    auto r = cli("solve --problem star3col --d 2 " + g);
    EXPECT_EQ(r.status, 1);
    EXPECT_EQ(r.out, "# answer no\n");
}

TEST_F(Cli, ErrorsAreOneLine) {
    auto bad = file("bad.graph", "p 2 1\ne 1 1\n");
    auto r = cli_err("solve --problem threecol --d 2 " + bad);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1) << r.out;
    EXPECT_TRUE(r.out.starts_with("error: "));
    EXPECT_EQ(cli("solve --problem threecol --d 2 " + bad).status, 2);
    EXPECT_EQ(cli("solve --problem bogus --d 2 " + bad).status, 2);
    EXPECT_EQ(cli("solve --problem threecol " + bad).status, 2); // --d is mandatory
    EXPECT_EQ(cli("frobnicate").status, 2);
}

TEST_F(Cli, CapOverflowExitStatus) {
    auto g = file("p25.graph", serialize_graph(path_graph(25)));
    EXPECT_EQ(cli("oracle --problem threecol " + g).status, 3);
    EXPECT_EQ(sh("DIAMKIT_CAPS=oracle=30 " + std::string(DIAMKIT_CLI) + " oracle --problem threecol " + g +
                 " >/dev/null 2>&1")
                  .status,
              0);
    // The flag wins over the environment.
    EXPECT_EQ(sh("DIAMKIT_CAPS=oracle=30 " + std::string(DIAMKIT_CLI) + " --caps oracle=10 oracle --problem threecol " +
                 g + " >/dev/null 2>&1")
                  .status,
              3);
    EXPECT_EQ(cli("--caps count=5 count " + g).status, 3);
}

TEST_F(Cli, CertificatesReverify) {
    std::mt19937_64 rng(53);
    auto corpus = random_chair_free_corpus(25, 10, rng);
    const char* problems[] = {"threecol", "acyclic3col", "star3col", "nearbip", "ifvs", "ioct"};
    int idx = 0;
    for (const Graph& g : corpus) {
        auto gp = file("g" + std::to_string(idx++) + ".graph", serialize_graph(g));
        int d = std::max(diameter(g), 1);
        for (const char* p : problems) {
            auto s = cli(std::string("solve --problem ") + p + " --d " + std::to_string(d) + " " + gp);
            auto o = cli(std::string("oracle --problem ") + p + " " + gp);
            ASSERT_EQ(s.status, o.status) << p << "\n" << serialize_graph(g);
            if (s.status != 0)
                continue;
            auto cert = file("cert", s.out);
            EXPECT_EQ(cli(std::string("verify --problem ") + p + " " + gp + " " + cert).status, 0) << s.out;
            auto ocert = file("ocert", o.out);
            EXPECT_EQ(cli(std::string("verify --problem ") + p + " " + gp + " " + ocert).status, 0) << o.out;
        }
    }
}

TEST_F(Cli, VerifyRejectsBadCertificate) {
    auto g = file("k3.graph", serialize_graph(complete_graph(3)));
    auto c = file("c.col", "c 3\nv 1 1\nv 2 1\nv 3 2\n");
    EXPECT_EQ(cli("verify --problem threecol " + g + " " + c).status, 1);
    EXPECT_EQ(cli("verify --problem ioct --k 0 " + g + " " + file("s", "s 0\n")).status, 1);
    EXPECT_EQ(cli("verify --problem ioct --k 1 " + g + " " + file("s1", "s 1\nv 2\n")).status, 0);
    EXPECT_EQ(cli("verify --problem threecol " + g + " " + file("s2", "s 1\nv 2\n")).status, 2);
}

TEST_F(Cli, Deterministic) {
    auto a = cli("generate random --n 12 --p 0.4 --seed 9");
    auto b = cli("generate random --n 12 --p 0.4 --seed 9");
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
    auto g = file("r.graph", a.out);
    Graph parsed = parse_graph(std::string_view(a.out));
    auto s1 = cli("solve --problem ifvs --d " + std::to_string(diameter(parsed)) + " " + g);
    auto s2 = cli("solve --problem ifvs --d " + std::to_string(diameter(parsed)) + " " + g);
    EXPECT_EQ(s1.out, s2.out);
}

TEST_F(Cli, GeneratorsAndClassify) {
    auto r = cli("generate pattern --kind chair");
    ASSERT_EQ(r.status, 0);
    auto chair = file("chair.graph", r.out);
    auto c = cli("classify " + chair);
    EXPECT_NE(c.out.find("chair-free no witness"), std::string::npos) << c.out;
    auto cx = cli("generate complex --a 5 --b 4 --matching 2");
    auto cxf = file("cx.graph", cx.out);
    auto cc = cli("classify " + cxf);
    EXPECT_NE(cc.out.find("class complex 5 4 matching 2"), std::string::npos) << cc.out;
    auto star = cli("generate pattern --kind subdivided-star --r 6 --ell 14");
    EXPECT_EQ(parse_graph(std::string_view(star.out)).order(), 21);
}

TEST_F(Cli, VariantAAndAcyclicGadget) {
    auto phi = file("phi.cnf", "p nae 3 3\n1 2 3 0\n1 -2 -3 0\n1 2 -3 0\n");
    auto va = sh(std::string(DIAMKIT_CLI) + " reduce variant-a " + phi + " --collection-out " + path("col.txt") + " > " +
                 path("va.cnf"));
    ASSERT_EQ(va.status, 0);
    auto g = sh(std::string(DIAMKIT_CLI) + " reduce acyclic-gadget " + path("va.cnf") + " --collection " +
                path("col.txt") + " > " + path("ag.txt"));
    ASSERT_EQ(g.status, 0);
    auto r = cli("check-gadget " + path("ag.txt"));
    EXPECT_EQ(r.status, 0) << r.out;
}

TEST_F(Cli, IndependentSetGadgets) {
    auto c5 = file("c5.graph", serialize_graph(cycle_graph(5)));
    ASSERT_EQ(sh(std::string(DIAMKIT_CLI) + " reduce is-c3-free " + c5 + " > " + path("a.txt")).status, 0);
    auto r = cli("check-gadget " + path("a.txt"));
    EXPECT_EQ(r.status, 0) << r.out;
    EXPECT_NE(r.out.find("pass alpha"), std::string::npos) << r.out;
    auto d = cli("reduce dominating " + c5);
    EXPECT_EQ(parse_graph(std::string_view(d.out)).order(), 6);
}
