#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "corpus.hpp"
#include "krasner/io.hpp"

namespace {

struct RunResult {
  int status = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(KRASNER_CLI_PATH) + " " + args + " 2>&1";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe)) {
    result.output.append(buffer, got);
  }
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path, std::ios::binary);
  out << text;
  return path;
}

}  // namespace

TEST_CASE("exit status contract: one fixture per status") {
  const auto good = write_temp("cli_z6.json", krasner::serialize_structure(corpus::z6_lift()));

  SUBCASE("0: ran and all assertions hold") {
    const auto result = run_cli("validate " + good.string());
    CHECK(result.status == 0);
    CHECK(result.output.find("\"all_pass\": true") != std::string::npos);
  }
  SUBCASE("1: ran with reported property violations") {
    const auto result = run_cli("validate --mode strict " + good.string());
    CHECK(result.status == 1);
    CHECK(result.output.find("\"distributivity\"") != std::string::npos);
    CHECK(result.output.find("\"fail\"") != std::string::npos);
  }
  SUBCASE("2: parse errors") {
    const auto broken = write_temp("cli_broken.json", "{ not json");
    const auto result = run_cli("validate " + broken.string());
    CHECK(result.status == 2);
    CHECK(result.output.find("line") != std::string::npos);
  }
  SUBCASE("2: usage errors") {
    CHECK(run_cli("radical " + good.string() + " --ideal 0 --method sideways").status == 2);
    CHECK(run_cli("validate /definitely/no/such/file.json").status == 2);
  }
}

TEST_CASE("lift emits a parseable document") {
  const auto out = std::filesystem::temp_directory_path() / "cli_lift_z6.json";
  const auto result =
      run_cli("lift --zmod 6 --t1 1/2 --t2 1/3 -o " + out.string());
  REQUIRE(result.status == 0);
  std::ifstream in(out);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text == krasner::serialize_structure(corpus::z6_lift()));
}

TEST_CASE("classify reports are byte-identical across runs") {
  const auto z12 = write_temp("cli_z12.json", krasner::serialize_structure(corpus::z12_lift()));
  const auto a = run_cli("--json - classify " + z12.string());
  const auto b = run_cli("--json - classify " + z12.string());
  CHECK(a.status == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("\"primary\": true") != std::string::npos);
}

TEST_CASE("radical agreement through the CLI") {
  const auto z12 = write_temp("cli_z12r.json", krasner::serialize_structure(corpus::z12_lift()));
  const auto result = run_cli("--json - radical " + z12.string() + " --ideal 0,4,8 --method both");
  CHECK(result.status == 0);
  CHECK(result.output.find("\"agreement\": true") != std::string::npos);
  for (const char* label : {"\"0\"", "\"2\"", "\"4\"", "\"6\"", "\"8\"", "\"10\""}) {
    CHECK(result.output.find(label) != std::string::npos);
  }
}

TEST_CASE("ideals command lists the lattice") {
  const auto z6 = write_temp("cli_z6i.json", krasner::serialize_structure(corpus::z6_lift()));
  const auto result = run_cli("--json - ideals " + z6.string());
  CHECK(result.status == 0);
  CHECK(result.output.find("\"count\": 4") != std::string::npos);
  CHECK(result.output.find("\"sweep_certified\": true") != std::string::npos);
}

TEST_CASE("quotient and product commands emit valid documents") {
  const auto z6 = write_temp("cli_z6q.json", krasner::serialize_structure(corpus::z6_lift()));
  const auto z2 = write_temp("cli_z2.json", krasner::serialize_structure(corpus::z_lift(2)));

  const auto qout = std::filesystem::temp_directory_path() / "cli_quot.json";
  const auto qres = run_cli("quotient " + z6.string() + " --ideal 0,3 -o " + qout.string());
  CHECK(qres.status == 0);
  std::ifstream qin(qout);
  std::string qtext((std::istreambuf_iterator<char>(qin)), std::istreambuf_iterator<char>());
  CHECK(krasner::parse_structure(qtext).size() == 3);

  const auto pout = std::filesystem::temp_directory_path() / "cli_prod.json";
  const auto pres = run_cli("product " + z2.string() + " " + z6.string() + " -o " + pout.string());
  CHECK(pres.status == 0);
  std::ifstream pin(pout);
  std::string ptext((std::istreambuf_iterator<char>(pin)), std::istreambuf_iterator<char>());
  CHECK(krasner::parse_structure(ptext).size() == 12);
}

TEST_CASE("hom-check through the CLI") {
  const auto z6 = write_temp("cli_z6h.json", krasner::serialize_structure(corpus::z6_lift()));
  const auto ok = run_cli("hom-check " + z6.string() + " " + z6.string() +
                          " --map 0=0,1=1,2=2,3=3,4=4,5=5");
  CHECK(ok.status == 0);
  const auto bad = run_cli("hom-check " + z6.string() + " " + z6.string() +
                           " --map 0=0,1=2,2=1,3=3,4=4,5=5");
  CHECK(bad.status == 1);
  CHECK(bad.output.find("f-compatibility") != std::string::npos);
}

TEST_CASE("search and witness through the CLI") {
  const auto search = run_cli("--json - search --carrier-size 2");
  CHECK(search.status == 0);
  CHECK(search.output.find("\"count\": 2") != std::string::npos);
  CHECK(search.output.find("\"truncated\": false") != std::string::npos);

  const auto z12 = write_temp("cli_z12w.json", krasner::serialize_structure(corpus::z12_lift()));
  const auto witness = run_cli("--json - witness --predicate primary-not-prime " + z12.string());
  CHECK(witness.status == 0);
  CHECK(witness.output.find("\"found\": true") != std::string::npos);
  CHECK(witness.output.find("\"4\"") != std::string::npos);

  const auto absent = run_cli("--json - witness --predicate prime-not-maximal " + z12.string());
  CHECK(absent.status == 0);
  CHECK(absent.output.find("\"found\": false") != std::string::npos);
}
