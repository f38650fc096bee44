// End-to-end checks of the command-line interface; the binary path comes
// from the GCDCERT_CLI environment variable (set by ctest).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

std::string cli_path() {
    const char* p = std::getenv("GCDCERT_CLI");
    REQUIRE_MESSAGE(p != nullptr, "GCDCERT_CLI must point at the CLI binary");
    return p;
}

int run_cli(const std::string& args) {
    const std::string cmd = "'" + cli_path() + "' " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::filesystem::path scratch_dir() {
    const auto dir = std::filesystem::temp_directory_path() /
                     ("gcdcert-cli-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    return dir;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

} // namespace

TEST_CASE("combine over the integers") {
    CHECK(run_cli("combine --ring int --elements 6,10,15") == 0);
    CHECK(run_cli("combine --ring int --elements 7") == 0);
    CHECK(run_cli("combine --ring int --elements 6,0,15") == 2);
    CHECK(run_cli("combine --ring int --elements 6,ten") == 2);
    CHECK(run_cli("combine --ring int") == 2);
}

TEST_CASE("combine over Z[x] requires witnesses") {
    const auto dir = scratch_dir();
    write_file(dir / "missing.json",
               R"({"elements": [{"coeffs": ["1", "0", "-1"]}, {"coeffs": ["1", "0", "0", "-1"]}]})");
    CHECK(run_cli("combine --ring polyz --file '" + (dir / "missing.json").string() + "'") == 2);

    write_file(dir / "ok.json", R"({
      "elements": [{"coeffs": ["1", "0", "-1"]}, {"coeffs": ["1", "0", "0", "-1"]}],
      "witnesses": [{"i": 0, "j": 1, "u": {"coeffs": ["0", "-1"]}, "v": {"coeffs": ["1"]}}]
    })");
    CHECK(run_cli("combine --ring polyz --file '" + (dir / "ok.json").string() + "'") == 0);
    CHECK(run_cli("combine --ring polyz") == 2);
    CHECK(run_cli("combine --ring polyz --file '" + (dir / "nonexistent.json").string() + "'") ==
          2);
}

TEST_CASE("theorem0 instances") {
    CHECK(run_cli("theorem0 -D 6 -d 2,3") == 0);
    CHECK(run_cli("theorem0 -D 6 -d 1,2,3") == 0);
    CHECK(run_cli("theorem0 -D 6 -d 4") == 2);
    CHECK(run_cli("theorem0 -D 0 -d 1") == 2);
    CHECK(run_cli("theorem0 -D 20000 -d 2") == 2);
    CHECK(run_cli("theorem0") == 2);
}

TEST_CASE("products commands") {
    CHECK(run_cli("products --ring int --elements 4,6,10") == 0);
    CHECK(run_cli("products --ring int --elements 2,3") == 0);
    CHECK(run_cli("products --ring int --elements 7") == 2);
    CHECK(run_cli("products --ring polyz -D 6 -d 1,2,3") == 0);
    CHECK(run_cli("products --ring polyz -D 6 -d 5") == 2);
}

TEST_CASE("verify exit codes") {
    const auto dir = scratch_dir();
    const auto cert = (dir / "cert.json").string();
    REQUIRE(run_cli("combine --ring int --elements 6,10,15 -o '" + cert + "'") == 0);
    CHECK(run_cli("verify '" + cert + "'") == 0);

    write_file(dir / "broken.json", "{\"ring\": \"int\"");
    CHECK(run_cli("verify '" + (dir / "broken.json").string() + "'") == 2);
    CHECK(run_cli("verify '" + (dir / "absent.json").string() + "'") == 2);
    CHECK(run_cli("verify") == 2);
    CHECK(run_cli("frobnicate") == 2);
}
