#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(OMEGALAB_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp(const std::string& name) { return std::string(OMEGALAB_TEST_TMP) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

} // namespace

TEST_CASE("functor writes Omega_3(K_4)") {
  auto r = run("functor --kind omega -k 3 --family clique:4");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("p 28 ", 0) == 0);
  CHECK(r.out.find("l 0 0{1}\n") != std::string::npos);
}

TEST_CASE("hom exit codes and witness") {
  CHECK(run("hom --g-family cycle:5 --h-family clique:2").code == 1);
  const std::string w = temp("witness.txt");
  auto yes = run("hom --g-family cycle:5 --h-family clique:3 --witness " + w);
  CHECK(yes.code == 0);
  CHECK(yes.out.rfind("hom: yes", 0) == 0);
  CHECK(slurp(w).rfind("m 0 ", 0) == 0);
  CHECK(run("hom --g-family cycle:5 --h-family clique:3 --propagation fc --order input").code == 0);
}

TEST_CASE("chromatic, box and homology") {
  CHECK(run("chromatic --family petersen").out == "chromatic: 3\n");
  const std::string b = temp("k4.cx");
  CHECK(run("box --family clique:4 -o " + b).code == 0);
  CHECK(run("homology -i " + b).out == "betti: 1 0 1 ; euler: 2\n");
  const std::string g = temp("c5.g");
  CHECK(run("functor --kind power -k 1 --family cycle:5 -o " + g).code == 0);
  CHECK(run("homology -g " + g).out == "betti: 1 1 ; euler: 0\n");
}

TEST_CASE("convert is canonical") {
  const std::string g = temp("om.g");
  CHECK(run("functor --kind omega-prime -k 3 --family clique:3 -o " + g).code == 0);
  CHECK(run("convert -i " + g).out == slurp(g));
  const std::string b = temp("c5.cx");
  CHECK(run("box --family cycle:5 -o " + b).code == 0);
  CHECK(run("convert -i " + b).out == slurp(b));
}

TEST_CASE("morse and approx report success") {
  auto m = run("morse --family clique:3 -k 1 --lemma both");
  CHECK(m.code == 0);
  CHECK(m.out.find("lemma54 exact: yes") != std::string::npos);
  CHECK(m.out.find("lemma52 exact: yes") != std::string::npos);
  const std::string rep = temp("approx.json");
  auto a = run("approx --family clique:2 -k 5 --report " + rep);
  CHECK(a.code == 0);
  CHECK(a.out.find("bound^2 (6D/k)^2: 36/25") != std::string::npos);
  auto j = nlohmann::json::parse(slurp(rep));
  CHECK(j.is_object());
}

TEST_CASE("usage and budget errors") {
  CHECK(run("").code == 64);
  CHECK(run("functor --kind omega -k 2 --family clique:3").code == 64);
  CHECK(run("functor --kind omega -k 5 --family clique:9 --vertex-budget 10").code == 2);
  CHECK(run("homology -i /nonexistent/file").code == 64);
  CHECK(run("verify nosuchsuite").code == 64);
}

TEST_CASE("verify report is deterministic") {
  auto a = run("verify kunneth");
  auto b = run("verify kunneth");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["schema"] == "omegalab-verify/1");
}
