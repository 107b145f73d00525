// Exit-code contract of the CLI: 0 = success/holds, 1 = fails or nothing
// found, 2 = usage or runtime error. Takes the CLI path as argv[1].

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "seminf/algebra_io.hpp"

namespace fs = std::filesystem;
using namespace seminf;

namespace {

int run(const std::string& cli, const std::string& args) {
  const int raw = std::system((cli + " " + args + " >/dev/null 2>&1").c_str());
  return (raw >= 0 && WIFEXITED(raw)) ? WEXITSTATUS(raw) : -1;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: seminf_cli_tests <path-to-seminf-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const fs::path workdir = fs::temp_directory_path() / "seminf_cli_tests";
  fs::create_directories(workdir);
  setenv("SEMINF_CACHE_DIR", (workdir / "cache").string().c_str(), 1);

  // A group admits no ai-semiring addition; additions must exit 1 on it.
  const fs::path z2 = workdir / "z2.alg";
  save_algebra_file(z2, testing::cyclic_group(2));
  const fs::path dot = workdir / "b21.dot";
  const fs::path ids = workdir / "ids.txt";
  std::ofstream(ids) << "x*x = x*x*x\nx'*x = x*x'\n";

  const std::vector<std::pair<std::string, int>> matrix = {
      {"gen b21", 0},
      {"gen cn --n 2", 0},
      {"gen cn --n 1", 2},
      {"gen mk --n 2 --k 1", 0},
      {"gen mk --n 2 --k 5", 2},
      {"check --algebra b21 \"x*x = x*x*x\"", 0},
      {"check --algebra b21 \"x*y = y*x\"", 1},
      {"check --algebra missing.alg \"x = x\"", 2},
      {"check --algebra b21 \"x* = y\"", 2},
      {"check --algebra b21 --identities " + ids.string(), 1},
      {"additions --algebra b21", 0},
      {"additions --algebra " + z2.string(), 1},
      {"separate --holds-in b21 --fails-in cn2 --vars 2 --max-size 6 "
       "--signature mul,inv",
       0},
      {"separate --holds-in b21 --fails-in b21 --vars 1 --max-size 3 "
       "--signature mul",
       1},
      {"order --algebra b21 --dot " + dot.string(), 0},
      {"spectrum --algebra b21 --vars 1 --max-size 3 --signature mul", 0},
      {"spectrum --algebra b21 --vars 1 --max-size 3 --signature bogus", 2},
      {"derive-add --algebra b21 --power 1", 2},
      {"derive-add --algebra b21", 0},
      {"verify lemma1 --n 2", 0},
      {"frobnicate", 2},
      {"check --algebra b21", 2},
  };

  int failures = 0;
  for (const auto& [args, expected] : matrix) {
    const int got = run(cli, args);
    if (got != expected) {
      ++failures;
      std::cout << "FAIL `" << args << "`: expected exit " << expected
                << ", got " << got << '\n';
    }
  }
  if (failures == 0)
    std::cout << "exit-code matrix: " << matrix.size()
              << " invocations as contracted\n";

  // Generated files round-trip byte-identically, including the cache
  // replay path (the second gen cn re-exports the cached file).
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  const fs::path first = workdir / "c2_first.alg";
  const fs::path second = workdir / "c2_second.alg";
  run(cli, "gen cn --n 2 --out " + first.string());
  run(cli, "gen cn --n 2 --out " + second.string());
  const std::string a = slurp(first), b = slurp(second);
  if (a.empty() || a != b) {
    ++failures;
    std::cout << "FAIL gen cn round-trip is not byte-identical\n";
  } else {
    std::cout << "gen cn cache replay re-exports byte-identically\n";
  }
  return failures == 0 ? 0 : 1;
}
