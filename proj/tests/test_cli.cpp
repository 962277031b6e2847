#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

// Drives the installed binary end to end through a shell.  Inputs go through
// files so no JSON needs shell quoting.

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path& work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("stoc-cli-test-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string read_text(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
  REQUIRE(out.good());
}

fs::path file_in_dir(const std::string& name) { return work_dir() / name; }

struct run_result {
  int code = -1;
  std::string out;
  std::string err;
};

run_result run_cli(const std::string& args) {
  static int counter = 0;
  ++counter;
  const fs::path out = file_in_dir("stdout-" + std::to_string(counter));
  const fs::path err = file_in_dir("stderr-" + std::to_string(counter));
  const std::string cmd = std::string(STOC_CLI_PATH) + " " + args + " > " +
                          out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  run_result r;
  if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
  r.out = read_text(out);
  r.err = read_text(err);
  return r;
}

// Emits the graph info for a builtin and returns the file path.
std::string graph_file(const std::string& name, int n,
                       const std::string& stem) {
  const fs::path p = file_in_dir(stem + ".json");
  const auto r = run_cli("graph gen --name " + name + " --n " +
                         std::to_string(n) + " --out " + p.string());
  REQUIRE(r.code == 0);
  return p.string();
}

}  // namespace

TEST_CASE("version and help") {
  CHECK(run_cli("--version").code == 0);
  const auto help = run_cli("--help");
  CHECK(help.code == 0);
  CHECK(help.out.find("storage codes") != std::string::npos);
  CHECK(run_cli("").code == 2);
}

TEST_CASE("graph generation") {
  const auto r = run_cli("graph gen --name cycle --n 5");
  CHECK(r.code == 0);
  const auto info = json::parse(r.out);
  CHECK(info["n"] == 5);
  CHECK(info["triangle_free"] == true);

  CHECK(run_cli("graph gen --name nope").code == 2);

  const auto file = graph_file("cycle", 5, "c5-validate");
  const auto v = run_cli("graph validate --in " + file);
  CHECK(v.code == 0);
  CHECK(json::parse(v.out)["n"] == 5);
}

TEST_CASE("design pipeline") {
  const fs::path fam = file_in_dir("family.json");
  CHECK(run_cli("design gen --q 3 --family --out " + fam.string()).code == 0);
  const auto v = run_cli("design verify --in " + fam.string());
  CHECK(v.code == 0);
  CHECK(json::parse(v.out)["ok"] == true);
}

TEST_CASE("code build and verify pipeline") {
  const auto g3 = graph_file("complete", 3, "k3-pipe");
  const fs::path parity = file_in_dir("parity.json");
  write_text(parity, "[[1, 1, 1]]\n");
  const fs::path code = file_in_dir("code.json");
  const auto b = run_cli("code build --kind parity --q 3 --n 3 --parity " +
                         parity.string() + " --code-out " + code.string());
  CHECK(b.code == 0);
  const auto summary = json::parse(b.out);
  CHECK(summary["words"] == 9);
  CHECK(summary["written"] == code.string());

  const auto v =
      run_cli("code verify --code " + code.string() + " --graph " + g3);
  CHECK(v.code == 0);
  CHECK(json::parse(v.out)["ok"] == true);

  const auto rate = run_cli("code rate --code " + code.string());
  CHECK(rate.code == 0);
  CHECK(json::parse(rate.out)["value"] == "2/3");

  const fs::path bad = file_in_dir("bad-code.json");
  write_text(bad,
             "{\"q\": 2, \"level\": 1, \"n\": 3, "
             "\"words\": [[0, 0, 0], [1, 0, 0]]}\n");
  const auto bv = run_cli("code verify --code " + bad.string() + " --graph " + g3);
  CHECK(bv.code == 1);
  CHECK(json::parse(bv.out)["ok"] == false);
  CHECK(bv.err.find("storage property violated") != std::string::npos);
}

TEST_CASE("gcd construction summary") {
  const auto r = run_cli("code build --kind gcd --l 1 --r 1 --n 6 --q 2");
  CHECK(r.code == 0);
  const auto summary = json::parse(r.out);
  CHECK(summary["words"] == 8);
  CHECK(summary["declared_rate"] == "1/2");
}

TEST_CASE("bound certificates") {
  const auto c5 = graph_file("cycle", 5, "c5");
  const auto r = run_cli("bounds independence --graph " + c5 + " --revalidate");
  CHECK(r.code == 0);
  const auto cert = json::parse(r.out);
  CHECK(cert["value"] == "3/5");

  const auto csv = run_cli("--format csv bounds independence --graph " + c5);
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("graph,kind,direction,value,raw,witness_size\n", 0) == 0);
  CHECK(csv.out.find("c5,independence,upper,3/5,2,2") != std::string::npos);
}

TEST_CASE("capacity report verdicts") {
  const auto c4 = graph_file("cycle", 4, "c4");
  const fs::path low = file_in_dir("low.json");
  const fs::path up = file_in_dir("up.json");
  CHECK(run_cli("bounds matching --graph " + c4 + " --out " + low.string())
            .code == 0);
  CHECK(run_cli("bounds independence --graph " + c4 + " --out " + up.string())
            .code == 0);
  const auto tight = run_cli("bounds report --lower " + low.string() +
                             " --upper " + up.string() + " --expect tight");
  CHECK(tight.code == 0);
  CHECK(json::parse(tight.out)["verdict"] == "tight");
  const auto gap = run_cli("bounds report --lower " + low.string() +
                           " --upper " + up.string() + " --expect gap");
  CHECK(gap.code == 1);
}

TEST_CASE("cover relaxation") {
  const auto c5 = graph_file("cycle", 5, "c5-lp");
  const auto r = run_cli("lp bound --graph " + c5);
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["value"] == "1/2");
}

TEST_CASE("exhaustive search") {
  const auto k3 = graph_file("complete", 3, "k3-oracle");
  const auto r = run_cli("oracle --graph " + k3);
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["raw"] == "4");
}

TEST_CASE("solver cap overrides") {
  const auto k3 = graph_file("complete", 3, "k3-caps");
  CHECK(run_cli("--cap-override mais=999999 bounds mais --graph " + k3).code ==
        2);
  const auto ok =
      run_cli("--cap-override independence=128 bounds independence --graph " +
              k3);
  CHECK(ok.code == 0);
  CHECK(ok.err.find("caps overridden") != std::string::npos);
}

TEST_CASE("interleave tuple through the binary") {
  const auto k3 = graph_file("complete", 3, "k3-base");
  const fs::path parity = file_in_dir("seed-parity.json");
  write_text(parity, "[[1, 1, 1]]\n");
  const fs::path seed = file_in_dir("seed.json");
  CHECK(run_cli("code build --kind parity --q 3 --n 3 --parity " +
                parity.string() + " --code-out " + seed.string())
            .code == 0);
  const fs::path tuple = file_in_dir("tuple.json");
  write_text(tuple, "[4, 8, 0, 5, 1, 3]\n");
  const auto r = run_cli("interleave run --base " + k3 +
                         " --builtin-family 2x3 --seed-code " + seed.string() +
                         " --tuple " + tuple.string());
  CHECK(r.code == 0);
  const auto digits = json::parse(r.out);
  const json expect = {1, 2, 0, 1, 0, 1, 1, 1, 2, 0, 0, 2, 1, 0, 2, 2, 2, 0};
  CHECK(digits["digits"] == expect);
}

TEST_CASE("experiment surface") {
  const auto table = run_cli("--format table experiment list");
  CHECK(table.code == 0);
  CHECK(table.out.find("torus-3") != std::string::npos);

  CHECK(run_cli("experiment run torus-3").code == 0);
  CHECK(run_cli("experiment run nope").code == 2);
  CHECK(run_cli("experiment run").code == 2);
}
