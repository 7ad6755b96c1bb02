#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "test_support.hpp"

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run cli(const std::string& args)
{
    Run r;
    std::string cmd = std::string(TAUFAN_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, n);
    int st = pclose(pipe);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string alg(const std::string& name)
{
    return data_path("algebras/" + name);
}

}  // namespace

TEST_CASE("exit status contract")
{
    CHECK(cli("check " + alg("a2.alg")).status == 0);
    CHECK(cli("pairs " + alg("kronecker.alg") + " --max-module-dim 8").status == 2);
    CHECK(cli("pairs").status == 64);
    CHECK(cli("frobnicate " + alg("a2.alg")).status == 64);
    CHECK(cli("check " + alg("missing.alg")).status == 64);
    CHECK(cli("stability " + alg("a2.alg") + " --module " + data_path("modules/a2_p1.mod") + " --vector 1,x").status == 64);
    CHECK(cli("indec " + alg("a2.alg") + " --max-dim 4").status == 2);
}

TEST_CASE("stability verdict on the ray of P(1)")
{
    Run r = cli("stability " + alg("a2.alg") + " --module " + data_path("modules/a2_p1.mod") + " --vector 1,-1");
    CHECK(r.status == 0);
    CHECK(r.out.find("semistable: yes\nstable: yes\n") != std::string::npos);
    Run off = cli("stability " + alg("a2.alg") + " --module " + data_path("modules/a2_p1.mod") + " --vector -1,1");
    CHECK(off.out.find("semistable: no\n") != std::string::npos);
}

TEST_CASE("selfcheck")
{
    Run a2 = cli("selfcheck " + alg("a2.alg"));
    CHECK(a2.status == 0);
    CHECK(a2.out.find("selfcheck: pass") != std::string::npos);
    Run c3 = cli("selfcheck " + alg("cycle3.alg"));
    CHECK(c3.status == 0);
    CHECK(c3.out.find("chambers: 14\npairs: 14\n") != std::string::npos);
    Run kr = cli("selfcheck " + alg("kronecker.alg") + " --max-module-dim 8");
    CHECK(kr.status == 2);
    CHECK(kr.out.find("tau-tilting infinite suspected") != std::string::npos);
    CHECK(kr.out.find("status=fail") == std::string::npos);
}

TEST_CASE("threads override is validated")
{
    CHECK(cli("check " + alg("a2.alg")).status == 0);
    Run bad = cli("selfcheck " + alg("a2.alg") + " TAUFAN_THREADS=0");
    CHECK(bad.status == 64);
    std::string cmd = std::string("TAUFAN_THREADS=0 ") + TAUFAN_CLI + " selfcheck " + alg("a2.alg") + " >/dev/null 2>&1";
    int st = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(st) == 64);
    std::string ok = std::string("TAUFAN_THREADS=2 ") + TAUFAN_CLI + " selfcheck " + alg("cycle3.alg") + " >/dev/null 2>&1";
    CHECK(WEXITSTATUS(std::system(ok.c_str())) == 0);
}
