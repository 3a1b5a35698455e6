#include <doctest.h>

#include <acb/cli.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace {

struct Run {
    int code;
    std::string out;
};

Run shell(const std::string& args)
{
    std::string cmd = std::string(ACBGRAPH_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    for (std::size_t n; (n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0;)
        out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string golden(const std::string& name) { return std::string(GOLDEN_DIR) + "/" + name; }

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Run in_process(std::vector<std::string> args, const std::string& input = "")
{
    std::vector<char*> argv;
    std::string name = "acbgraph";
    argv.push_back(name.data());
    for (auto& a : args)
        argv.push_back(a.data());
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = acb::cli::main(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str() + err.str()};
}

} // namespace

TEST_CASE("golden outputs")
{
    const std::pair<const char*, const char*> cases[] = {
        {"generate Dk 5", "dk5.bip"},
        {"dilworth " GOLDEN_DIR "/dk5.bip", "dk5.dilworth"},
        {"dilworth " GOLDEN_DIR "/bk4.bip", "bk4.dilworth"},
        {"dilworth " GOLDEN_DIR "/empty.bip", "empty.dilworth"},
        {"recognize " GOLDEN_DIR "/c8.bip", "c8.recognize"},
        {"recognize " GOLDEN_DIR "/dk5.bip", "dk5.recognize"},
        {"matrix " GOLDEN_DIR "/yp7.bip", "yp7.matrix"},
        {"matrix " GOLDEN_DIR "/c6.bip", "c6.matrix"},
        {"matrix " GOLDEN_DIR "/k22.bip", "k22.matrix"},
        {"sperner-critical 3 --list", "sperner3.list"},
        {"sperner-critical 4", "sperner4"},
        {"sperner-critical 4 --workers 3", "sperner4"},
        {"generate Sk 3", "s3.split"},
        {"recognize " GOLDEN_DIR "/s3.split", "s3.recognize"},
        {"dilworth " GOLDEN_DIR "/s3.split", "s3.dilworth"},
        {"split --side X " GOLDEN_DIR "/c6.bip", "c6.splitx"},
        {"mirror " GOLDEN_DIR "/c6.bip", "c6.mirror"},
    };
    for (const auto& [args, file] : cases) {
        CAPTURE(args);
        Run r = shell(args);
        CHECK(r.code == 0);
        CHECK(r.out == slurp(golden(file)));
    }
}

TEST_CASE("documented example lines")
{
    CHECK(slurp(golden("c8.recognize")).find("acb: no\n") != std::string::npos);
    CHECK(slurp(golden("dk5.recognize")).find("acb: yes\n") != std::string::npos);
    CHECK(slurp(golden("dk5.dilworth")).starts_with("x: 5\ny: 5\n"));
    CHECK(slurp(golden("bk4.dilworth")).starts_with("x: 4\ny: 2\n"));
    CHECK(slurp(golden("empty.dilworth")).starts_with("x: 0\ny: 0\n"));
    CHECK(slurp(golden("yp7.matrix")).find("\n1100\n0110\n0011\ngamma: free\n") != std::string::npos);
    CHECK(slurp(golden("c6.matrix")).find("gamma: witness ") != std::string::npos);
    CHECK(slurp(golden("k22.matrix")).ends_with("\n11\n11\ngamma: free\n"));
}

TEST_CASE("pipes compose")
{
    Run r = shell("generate Dk 5 | " ACBGRAPH_PATH " recognize");
    CHECK(r.code == 0);
    CHECK(r.out.find("acb: yes\n") != std::string::npos);
    Run m = shell("generate C2k 3 | " ACBGRAPH_PATH " mirror | " ACBGRAPH_PATH " mirror");
    CHECK(m.out == slurp(golden("c6.bip")));
}

TEST_CASE("output is stable across runs")
{
    Run a = shell("sperner-critical 5 --list --workers 1");
    Run b = shell("sperner-critical 5 --list --workers 4");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.starts_with("count: 178\n"));
}

TEST_CASE("input errors exit with code 2")
{
    Run bad = shell("dilworth " GOLDEN_DIR "/malformed.bip");
    CHECK(bad.code == 2);
    CHECK(bad.out.find("line 3") != std::string::npos);
    CHECK(shell("dilworth /nonexistent/file.bip").code == 2);
    CHECK(shell("verify bogus").code == 2);
    CHECK(shell("sperner-critical 9").code == 2);
    CHECK(shell("generate Dk 1").code == 2);
    CHECK(shell("generate nothing").code == 2);
    CHECK(shell("bogus").code == 2);
    CHECK(shell("").code == 2);
    CHECK(shell("--help").code == 0);
}

TEST_CASE("verify suites")
{
    Run sperner = shell("verify sperner");
    CHECK(sperner.code == 0);
    CHECK(sperner.out.find("k=4: 15 ok\n") != std::string::npos);
    CHECK(sperner.out.find("k=5: 178 ok\n") != std::string::npos);
    Run small = shell("verify critical-small");
    CHECK(small.code == 0);
    CHECK(small.out.find("k=3: unique critical = B3 ok\n") != std::string::npos);
    for (const char* suite : {"families", "gamma"})
        CHECK(shell(std::string("verify ") + suite).code == 0);
}

TEST_CASE("in-process entry point")
{
    Run r = in_process({"dilworth"}, slurp(golden("bk4.bip")));
    CHECK(r.code == 0);
    CHECK(r.out == slurp(golden("bk4.dilworth")));
    Run e = in_process({"recognize"}, "bip 2\n");
    CHECK(e.code == 2);
    CHECK(e.out.starts_with("error: line 1"));
}

TEST_CASE("written files round-trip")
{
    char tmpl[] = "/tmp/acbgraph_XXXXXX";
    int fd = mkstemp(tmpl);
    REQUIRE(fd >= 0);
    close(fd);
    std::string file = tmpl;
    CHECK(shell("matrix " GOLDEN_DIR "/yp7.bip --out " + file).code == 0);
    std::string om = slurp(file);
    CHECK(om.starts_with("om 3 4\n"));
    CHECK(shell("generate Bk 4 --out " + file).code == 0);
    CHECK(slurp(file) == slurp(golden("bk4.bip")));
    std::remove(file.c_str());
}
