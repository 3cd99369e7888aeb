// End-to-end tests that drive the installed binary through a shell, checking
// exit codes, JSON payloads, golden-file handling, and environment overrides.

#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

int failures = 0;

#define EXPECT(cond)                                                       \
  do {                                                                     \
    if (!(cond)) {                                                         \
      ++failures;                                                          \
      std::cerr << "FAIL " << __FILE__ << ":" << __LINE__ << "  " << #cond \
                << "\n";                                                   \
    }                                                                      \
  } while (0)

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& command) {
  RunResult result;
  std::string full = command + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) {
    std::cerr << "popen failed for: " << full << "\n";
    ++failures;
    return result;
  }
  char buffer[4096];
  std::size_t n = 0;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.out.append(buffer, n);
  }
  int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

} // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: chowkit_cli_tests <path-to-chowkit-binary>\n";
    return 1;
  }
  const std::string bin = std::string("\"") + argv[1] + "\"";

  char tmpl[] = "/tmp/chowkit_cli_XXXXXX";
  const char* tmp_raw = mkdtemp(tmpl);
  if (!tmp_raw) {
    std::cerr << "mkdtemp failed\n";
    return 1;
  }
  const fs::path tmp(tmp_raw);

  // verify, even genus: clean report, exit 0
  {
    RunResult r = run(bin + " verify --g 2");
    EXPECT(r.code == 0);
    json j = json::parse(r.out);
    EXPECT(j["g"] == 2);
    EXPECT(j["parity"] == "even");
    EXPECT(j["max_degree"] == 10);
    EXPECT(j["char_hypothesis"] == "char(k) > 2g");
    EXPECT(j["first_discrepancy"].is_null());
    EXPECT(j["per_degree"].size() == 11);
    EXPECT(j["generators"]["image"] == j["generators"]["stated"]);
    EXPECT(j["per_degree"][1]["equal"] == true);
    EXPECT(j["per_degree"][1]["image_factors"]["rank"] == 1);
    EXPECT(j["per_degree"][1]["image_factors"]["torsion"] ==
           json::array({"10"}));
    EXPECT(j["per_degree"][2]["image_factors"]["torsion"] ==
           json::array({"2", "10", "120"}));
    EXPECT(j["variable_aliases"]["T0"] == "T₀");
    EXPECT(j["variable_aliases"]["T1"] == "T₁");
    EXPECT(j.contains("tool_version"));
  }

  // verify, odd genus: degree-2 discrepancy, exit 2
  {
    RunResult r = run(bin + " verify --g 3 --max-degree 6");
    EXPECT(r.code == 2);
    json j = json::parse(r.out);
    EXPECT(j["parity"] == "odd");
    EXPECT(j["max_degree"] == 6);
    EXPECT(j["first_discrepancy"] == 2);
    EXPECT(j["per_degree"][0]["equal"] == true);
    EXPECT(j["per_degree"][1]["equal"] == true);
    EXPECT(j["per_degree"][2]["equal"] == false);
    EXPECT(j["per_degree"][2]["image_factors"]["torsion"] ==
           json::array({"4", "28", "112"}));
    EXPECT(j["per_degree"][2]["stated_factors"]["torsion"] ==
           json::array({"4", "28", "168"}));
    EXPECT(j["generators"]["image"] ==
           json::array({"28*t", "8*t^2 + 16*r^2"}));
    EXPECT(j["generators"]["stated"] ==
           json::array({"28*t", "8*t^2 + 24*r^2"}));
    EXPECT(j["variable_aliases"]["t"] == "τ");
    EXPECT(j["variable_aliases"]["r"] == "ρ");
  }

  // byte-level determinism across runs
  {
    RunResult a = run(bin + " verify --g 3 --max-degree 6");
    RunResult b = run(bin + " verify --g 3 --max-degree 6");
    EXPECT(a.out == b.out);
    EXPECT(!a.out.empty());
  }

  // present
  {
    RunResult r = run(bin + " present --g 3");
    EXPECT(r.code == 0);
    json j = json::parse(r.out);
    EXPECT(j["g"] == 3);
    EXPECT(j["parity"] == "odd");
    EXPECT(j["generators"] == json::array({"28*t", "8*t^2 + 24*r^2"}));
    EXPECT(j["ring"]["variables"].size() == 2);
    EXPECT(j["ring"]["variables"][0]["name"] == "t");
    EXPECT(j["ring"]["variables"][0]["degree"] == 1);

    RunResult r2 = run(bin + " present --g 2");
    json j2 = json::parse(r2.out);
    EXPECT(j2["generators"] ==
           json::array({"10*T0 + 10*T1", "2*T0^2 - 20*T0*T1 + 2*T1^2"}));
  }

  // weights
  {
    RunResult r = run(bin + " weights --g 2");
    EXPECT(r.code == 0);
    json j = json::parse(r.out);
    EXPECT(j["g"] == 2);
    EXPECT(j["parity"] == "even");
    EXPECT(j["rows"].size() == 8);
    EXPECT(j["rows"][0]["label"] == "a0");
    EXPECT(j["rows"][0]["weights"] == json::array({-4, 2}));
    EXPECT(j["rows"][7]["label"] == "s");
    EXPECT(j["rows"][7]["weights"] == json::array({1, -2}));
    EXPECT(j["consistency_check"] == true);
  }

  // chow-bt
  {
    RunResult r = run(bin + " chow-bt --rank 2");
    EXPECT(r.code == 0);
    json j = json::parse(r.out);
    EXPECT(j["rank"] == 2);
    EXPECT(j["relations"] == json::array());
    EXPECT(j["ring"]["variables"][0]["name"] == "T1");
    EXPECT(j["ring"]["variables"][1]["name"] == "T2");
  }

  // identity-check
  {
    RunResult r = run(bin + " identity-check");
    EXPECT(r.code == 0);
    json j = json::parse(r.out);
    EXPECT(j["g_max"] == 10);
    EXPECT(j["all_equal"] == true);
    EXPECT(j["per_g"].size() == 5);
    for (const auto& entry : j["per_g"]) {
      EXPECT(entry["equal"] == true);
    }
  }

  // argument validation and usage errors all exit 1
  {
    EXPECT(run(bin + " verify --g 1").code == 1);
    EXPECT(run(bin + " verify --g 2 --max-degree 3").code == 1);
    EXPECT(run(bin + " present --g 1").code == 1);
    EXPECT(run(bin + " verify --g 2 --no-such-flag").code == 1);
    EXPECT(run(bin).code == 1);
    EXPECT(run(bin + " frobnicate").code == 1);
  }

  // --version
  {
    RunResult r = run(bin + " --version");
    EXPECT(r.code == 0);
    EXPECT(!r.out.empty());
  }

  // environment override of the degree cutoff, flag precedence, validation
  {
    RunResult r = run("CHOWKIT_MAX_DEGREE=6 " + bin + " verify --g 2");
    EXPECT(r.code == 0);
    json j = json::parse(r.out);
    EXPECT(j["max_degree"] == 6);
    EXPECT(j["per_degree"].size() == 7);

    RunResult r2 =
        run("CHOWKIT_MAX_DEGREE=6 " + bin + " verify --g 2 --max-degree 8");
    json j2 = json::parse(r2.out);
    EXPECT(j2["max_degree"] == 8);

    EXPECT(run("CHOWKIT_MAX_DEGREE=3 " + bin + " verify --g 2").code == 1);
    EXPECT(run("CHOWKIT_MAX_DEGREE=abc " + bin + " verify --g 2").code == 1);

    // an empty value counts as unset
    RunResult r3 = run("CHOWKIT_MAX_DEGREE= " + bin + " verify --g 2");
    EXPECT(r3.code == 0);
    EXPECT(json::parse(r3.out)["max_degree"] == 10);
  }

  // text format smoke tests
  {
    RunResult r = run(bin + " verify --g 2 --format text");
    EXPECT(r.code == 0);
    EXPECT(r.out.find("genus 2") != std::string::npos);
    EXPECT(r.out.find("no discrepancy") != std::string::npos);

    RunResult r2 = run(bin + " verify --g 3 --format text");
    EXPECT(r2.code == 2);
    EXPECT(r2.out.find("first discrepancy at degree 2") != std::string::npos);

    RunResult r3 = run(bin + " weights --g 3 --format text");
    EXPECT(r3.out.find("consistency") != std::string::npos);

    RunResult r4 = run(bin + " identity-check --format text");
    EXPECT(r4.out.find("identity holds") != std::string::npos);
  }

  // -o writes the same bytes that stdout would carry
  {
    fs::path out_path = tmp / "report.json";
    RunResult direct = run(bin + " verify --g 4");
    RunResult filed =
        run(bin + " verify --g 4 -o \"" + out_path.string() + "\"");
    EXPECT(filed.code == direct.code);
    EXPECT(filed.out.empty());
    EXPECT(read_file(out_path) == direct.out);
  }

  // golden corpus lifecycle in a scratch directory
  {
    fs::path dir = tmp / "golden";
    std::string dir_arg = " golden --dir \"" + dir.string() + "\"";

    RunResult missing = run(bin + dir_arg);
    EXPECT(missing.code == 1);
    EXPECT(missing.out.find("MISSING") != std::string::npos);

    RunResult bless = run(bin + dir_arg + " --bless");
    EXPECT(bless.code == 0);
    int count = 0;
    for (long g = 2; g <= 10; ++g) {
      if (fs::exists(dir / ("verify_g" + std::to_string(g) + "_d10.json"))) {
        ++count;
      }
    }
    EXPECT(count == 9);

    RunResult clean = run(bin + dir_arg);
    EXPECT(clean.code == 0);
    EXPECT(clean.out.find("MISMATCH") == std::string::npos);

    fs::path victim = dir / "verify_g5_d10.json";
    {
      std::ofstream out(victim, std::ios::app);
      out << " ";
    }
    RunResult mutated = run(bin + dir_arg);
    EXPECT(mutated.code == 2);
    EXPECT(mutated.out.find("g=5 MISMATCH") != std::string::npos);

    fs::remove(victim);
    RunResult removed = run(bin + dir_arg);
    EXPECT(removed.code == 1);
    EXPECT(removed.out.find("g=5 MISSING") != std::string::npos);
  }

  fs::remove_all(tmp);

  if (failures == 0) {
    std::cout << "cli tests passed\n";
    return 0;
  }
  std::cerr << failures << " cli check(s) failed\n";
  return 1;
}
