#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// Smoke tests against the built binary: exit codes and pipeline behavior.

namespace {

struct CliResult {
  int code;
  std::string out;
};

CliResult cli(const std::string& args) {
  std::string out_path = "/tmp/rtva_cli_out.txt";
  std::string cmd =
      std::string(RTVA_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
  int status = std::system(cmd.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_path);
  std::stringstream ss;
  ss << in.rdbuf();
  return CliResult{code, ss.str()};
}

}  // namespace

TEST_CASE("run: verdict exit codes") {
  CliResult accept = cli("run zoo:ugauss-dva2 --input aa");
  CHECK(accept.code == 0);
  CHECK(accept.out.find("ACCEPT") != std::string::npos);
  CHECK(accept.out.find("vector:") != std::string::npos);

  CliResult reject = cli("run zoo:pow-nbva2 --input aaaa");
  CHECK(reject.code == 1);
  CHECK(reject.out.find("REJECT") != std::string::npos);

  CHECK(cli("run zoo:mpal-dbva2 --input c").code == 0);
  CHECK(cli("run zoo:ugauss-dva2 --input ''").code == 0);
}

TEST_CASE("run: usage and parse failures exit 2") {
  CHECK(cli("run zoo:no-such-thing --input a").code == 2);
  CHECK(cli("run /tmp/definitely-missing-machine.json --input a").code == 2);
  CHECK(cli("run zoo:ugauss-dva2 --input xyz").code == 2);
  CHECK(cli("frobnicate").code == 2);
}

TEST_CASE("run: traces are JSON") {
  CliResult r = cli("run zoo:ugauss-dva2 --input aa --trace");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"verdict\": \"ACCEPT\"") != std::string::npos);
  CHECK(r.out.find("\"steps\"") != std::string::npos);
}

TEST_CASE("eval prints exact values") {
  CliResult one = cli("eval zoo:mod3-tufa --input aa");
  CHECK(one.code == 0);
  CHECK(one.out == "1\n");
  CliResult zero = cli("eval zoo:mod3-tufa --input aaa");
  CHECK(zero.out == "0\n");
  CliResult empty = cli("eval zoo:mod3-tufa --input ''");
  CHECK(empty.out == "0\n");
  CHECK(cli("eval zoo:mod3-tufa --input b").code == 2);
  CHECK(cli("eval zoo:ugauss-dva2 --input a").code == 2);
}

TEST_CASE("convert writes runnable machine files with provenance") {
  std::string path = "/tmp/rtva_cli_lng2_counters.json";
  CliResult conv =
      cli("convert zoo:lng-2 --to counters -o " + path);
  CHECK(conv.code == 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string doc = ss.str();
  CHECK(doc.find("\"kind\": \"counter\"") != std::string::npos);
  CHECK(doc.find("\"transform\": \"counters\"") != std::string::npos);
  CHECK(doc.find("\"source_digest\"") != std::string::npos);
  CHECK(doc.find("\"primes\"") != std::string::npos);
  CHECK(doc.find("5") != std::string::npos);  // primes 2, 3, 5

  // The converted machine runs and agrees with the source on a word.
  CHECK(cli("run " + path + " --input a0a1a2a3").code == 0);
  CHECK(cli("run zoo:lng-2 --input a0a1a2a3").code == 0);
  CHECK(cli("run " + path + " --input a0a1").code == 1);

  // Identical inputs give identical outputs.
  std::string path2 = "/tmp/rtva_cli_lng2_counters2.json";
  cli("convert zoo:lng-2 --to counters -o " + path2);
  std::ifstream i1(path), i2(path2);
  std::stringstream s1, s2;
  s1 << i1.rdbuf();
  s2 << i2.rdbuf();
  CHECK(s1.str() == s2.str());
}

TEST_CASE("convert reports inapplicable transforms on exit 2") {
  CliResult r = cli("convert zoo:mpal-dbva2 --to counters");
  CHECK(r.code == 2);
  CHECK(r.out.find("dimension") != std::string::npos);
  CHECK(cli("convert zoo:mod3-tufa --to dbva --lambda 1").code == 0);
}

TEST_CASE("check exits by counterexample status") {
  CHECK(cli("check zoo:geqstar-dva2 --against oracle --max-len 7").code == 0);
  CliResult bad =
      cli("check zoo:geqstar-dva2 --fidelity --against oracle --max-len 6");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("ababb") != std::string::npos);
  CHECK(cli("check zoo:ugauss-dva2 --against zoo:ugauss-2ca --max-len 30")
            .code == 0);
  CliResult rnd =
      cli("check zoo:subsetsum --against oracle --random 300 --seed 7");
  CHECK(rnd.code == 0);
  CHECK(rnd.out.find("\"clean\": true") != std::string::npos);
}

TEST_CASE("check writes its report where asked") {
  std::string path = "/tmp/rtva_cli_report.json";
  CliResult r = cli("check zoo:mod3-tufa --against oracle --max-len 12 --report " +
                    path);
  CHECK(r.code == 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().find("\"words_tested\": 13") != std::string::npos);
  CHECK(ss.str().find("\"clean\": true") != std::string::npos);
}

TEST_CASE("zoo list and export") {
  CliResult list = cli("zoo list");
  CHECK(list.code == 0);
  CHECK(list.out.find("ufibonacci") != std::string::npos);
  CHECK(list.out.find("subsetsum-nbva3") != std::string::npos);

  std::string path = "/tmp/rtva_cli_export.json";
  CHECK(cli("zoo export mpal-dbva2 -o " + path).code == 0);
  CHECK(cli("run " + path + " --input abcba").code == 0);
  CHECK(cli("run " + path + " --input abcab").code == 1);
  CHECK(cli("zoo export nope").code == 2);
}
