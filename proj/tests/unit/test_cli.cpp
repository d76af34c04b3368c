#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "cantor/certificate.hpp"
#include "cantor/cli.hpp"
#include "cantor/serialize.hpp"

using namespace cantor;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = runCli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("cantor-cli-" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("gen writes a tree and a certificate that verifies") {
  TempDir dir;
  const auto tree = dir / "t.json";
  const auto cert = dir / "t.cert";
  const auto r = run({"gen", "--depth", "6", "--target", "3/2^2", "--seed", "7", "--out", tree,
                      "--cert", cert});
  CHECK(r.code == kExitOk);
  const auto t = parseTree(readFile(tree));
  CHECK(t.depth() == 6);
  CHECK(t.measure() >= Dyadic(3, 2));
  CHECK(serializeTree(t) == readFile(tree));
  CHECK(run({"verify", "--in", cert}).code == kExitOk);

  const auto again = dir / "u.cert";
  run({"gen", "--depth", "6", "--target", "3/2^2", "--seed", "7", "--cert", again});
  CHECK(readFile(again) == readFile(cert));
}

TEST_CASE("pipeline subcommands") {
  TempDir dir;
  const auto tree = dir / "t.json";
  REQUIRE(run({"gen", "--depth", "9", "--target", "7/2^3", "--seed", "3", "--out", tree}).code == 0);
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"prune", "--in", tree, "--epsilon", "1/2^1"},
           {"extract", "--in", tree, "--epsilon", "1/2^1"},
           {"density", "--in", tree, "--epsilon", "1/2^2"},
       }) {
    CAPTURE(args[0]);
    const auto cert = dir / (args[0] + ".cert");
    auto withCert = args;
    withCert.insert(withCert.end(), {"--cert", cert, "--json"});
    const auto r = run(withCert);
    CHECK(r.code == kExitOk);
    CHECK_NOTHROW(parseJson(r.out));
    CHECK(run({"verify", "--in", cert}).code == kExitOk);
  }
}

TEST_CASE("tampered certificates fail verification") {
  TempDir dir;
  const auto cert = dir / "c.cert";
  REQUIRE(run({"gen", "--depth", "5", "--cert", cert}).code == 0);
  Json j = parseJson(readFile(cert));
  j["result"]["measure"] = "1/2^5";
  writeFile(cert, serializeCertificate(j));
  CHECK(run({"verify", "--in", cert}).code == kExitFailure);
  j["version"] = "cert/v999";
  writeFile(cert, serializeCertificate(j));
  CHECK(run({"verify", "--in", cert}).code == kExitMalformed);
}

TEST_CASE("malformed input and bad usage exit with 2") {
  TempDir dir;
  const auto bad = dir / "bad.json";
  writeFile(bad, "{\"format\":\"clopen-tree/v1\",\"depth\":3,\"leaves\":\"zz\"}\n");
  CHECK(run({"prune", "--in", bad, "--epsilon", "1/2^1"}).code == kExitMalformed);
  CHECK(run({"prune", "--in", bad, "--epsilon", "nonsense"}).code == kExitMalformed);
  CHECK(run({"frobnicate"}).code == kExitMalformed);
  CHECK(run({"gen"}).code == kExitMalformed);
  writeFile(bad, "not json");
  CHECK(run({"verify", "--in", bad}).code == kExitMalformed);
}

TEST_CASE("adversary, forcing and tt1 subcommands") {
  TempDir dir;
  const auto table = dir / "h.json";
  writeFile(table, R"([{"e":0,"haltTime":5},{"e":1,"haltTime":"divergent"},{"e":2,"haltTime":3}])");
  CHECK(run({"adversary", "encode", "--in", table, "--depth", "8"}).code == kExitOk);
  const auto ok = run({"adversary", "decode", "--in", table, "--string", "100001000001000001",
                       "--entries", "3", "--json"});
  CHECK(ok.code == kExitOk);
  CHECK(run({"adversary", "decode", "--in", table, "--string", "110000", "--entries", "1"}).code ==
        kExitFailure);

  const auto cond = dir / "c.json";
  writeFile(cond, R"({"format":"condition/v1","stem":[""],)"
                  R"("reservoir":{"format":"clopen-tree/v1","depth":3,"leaves":"ff"},)"
                  R"("ambient":{"format":"clopen-tree/v1","depth":3,"leaves":"ff"}})");
  const auto step = dir / "s.cert";
  const auto r = run({"force", "step", "--in", cond, "--functional", "probe-zeros", "--target", "0000",
                      "--lmax", "3", "--cert", step, "--json"});
  CHECK(r.code == kExitOk);
  CHECK(parseJson(r.out)["result"]["branch"] == "split");
  CHECK(run({"verify", "--in", step}).code == kExitOk);
  CHECK(run({"force", "extend", "--in", cond}).code == kExitOk);

  CHECK(run({"tt1", "--coloring", "length-mod:2", "--depth", "5", "--k", "2"}).code == kExitOk);
  CHECK(run({"tt1", "--coloring", "random:3:1", "--depth", "6", "--k", "2"}).code == kExitOk);
}
