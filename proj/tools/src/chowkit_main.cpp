#include "chowkit/equivariant.hpp"
#include "chowkit/hyperelliptic.hpp"
#include "chowkit/render.hpp"
#include "chowkit/version.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

// 0 ok, 1 io failure.  Empty path or "-" means standard output.
int write_output(const std::string& content, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open output file: " << path << "\n";
    return 1;
  }
  out << content;
  out.flush();
  if (!out) {
    std::cerr << "error while writing " << path << "\n";
    return 1;
  }
  return 0;
}

std::string golden_name(long g) {
  return "verify_g" + std::to_string(g) + "_d10.json";
}

constexpr long golden_g_min = 2;
constexpr long golden_g_max = 10;
constexpr long golden_degree = 10;

int run_golden(const std::string& dir, bool bless) {
  namespace fs = std::filesystem;

  if (bless) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
      std::cerr << "cannot create " << dir << ": " << ec.message() << "\n";
      return 1;
    }
    for (long g = golden_g_min; g <= golden_g_max; ++g) {
      std::string content =
          chowkit::render::verify_report_json(chowkit::verify(g, golden_degree));
      fs::path path = fs::path(dir) / golden_name(g);
      std::ofstream out(path, std::ios::binary);
      out << content;
      out.flush();
      if (!out) {
        std::cerr << "error while writing " << path.string() << "\n";
        return 1;
      }
    }
    std::cout << "blessed " << (golden_g_max - golden_g_min + 1)
              << " golden reports into " << dir << "\n";
    return 0;
  }

  bool missing = false;
  bool mismatch = false;
  for (long g = golden_g_min; g <= golden_g_max; ++g) {
    fs::path path = fs::path(dir) / golden_name(g);
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      std::cout << "g=" << g << " MISSING " << path.string() << "\n";
      missing = true;
      continue;
    }
    std::ostringstream stored;
    stored << in.rdbuf();
    std::string current =
        chowkit::render::verify_report_json(chowkit::verify(g, golden_degree));
    if (stored.str() == current) {
      std::cout << "g=" << g << " ok\n";
    } else {
      std::cout << "g=" << g << " MISMATCH " << path.string() << "\n";
      mismatch = true;
    }
  }
  if (missing) return 1;
  return mismatch ? 2 : 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Builds torus-equivariant Chow-ring presentations from weight "
               "data and verifies hyperelliptic Chow-ring presentations by "
               "degree-wise lattice comparison"};
  app.set_version_flag("--version", chowkit::version_string);
  app.require_subcommand(1);

  long g = 0;
  long max_degree = 10;
  long g_max = 10;
  std::size_t rank = 1;
  std::string format = "json";
  std::string output;
  std::string golden_dir = "golden";
  bool bless = false;

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    sub->add_option("-o,--output", output,
                    "Output path (default: standard output)");
  };

  CLI::App* present = app.add_subcommand(
      "present", "Print the stated Chow-ring presentation for genus g");
  present->add_option("--g", g, "Genus")->required()->check(CLI::Range(2L, 1000000L));
  add_io(present);

  CLI::App* verify = app.add_subcommand(
      "verify",
      "Compare the pulled-back relation ideal against the stated one");
  verify->add_option("--g", g, "Genus")->required()->check(CLI::Range(2L, 1000000L));
  verify->add_option("--max-degree", max_degree,
                     "Degree cutoff (CHOWKIT_MAX_DEGREE overrides the "
                     "default when the flag is absent)")
      ->check(CLI::Range(4L, 1000000L))
      ->capture_default_str();
  add_io(verify);

  CLI::App* weights = app.add_subcommand(
      "weights", "Print the torus weight table of the genus-g action");
  weights->add_option("--g", g, "Genus")->required()->check(CLI::Range(2L, 1000000L));
  add_io(weights);

  CLI::App* chow_bt_cmd = app.add_subcommand(
      "chow-bt", "Print the free presentation of CH(BT) for a rank-r torus");
  chow_bt_cmd->add_option("--rank", rank, "Torus rank")
      ->required()
      ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  add_io(chow_bt_cmd);

  CLI::App* identity = app.add_subcommand(
      "identity-check",
      "Check the even-genus generator identity for all even g <= g-max");
  identity->add_option("--g-max", g_max, "Largest genus checked")
      ->check(CLI::Range(2L, 100000L))
      ->capture_default_str();
  add_io(identity);

  CLI::App* golden = app.add_subcommand(
      "golden", "Check the golden verification reports (g=2..10, degree 10)");
  golden->add_option("--dir", golden_dir, "Golden file directory")
      ->capture_default_str();
  golden->add_flag("--bless", bless,
                   "Rewrite the golden files with current output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  // Flag beats environment beats default; a set but unusable value is an
  // error rather than a silent fallback.
  if (verify->parsed() && verify->count("--max-degree") == 0) {
    const char* env = std::getenv("CHOWKIT_MAX_DEGREE");
    if (env && *env) {
      std::string value(env);
      std::size_t used = 0;
      long parsed = 0;
      bool ok = true;
      try {
        parsed = std::stol(value, &used);
      } catch (const std::exception&) {
        ok = false;
      }
      if (!ok || used != value.size() || parsed < 4 || parsed > 1000000) {
        std::cerr << "CHOWKIT_MAX_DEGREE must be an integer in "
                     "[4, 1000000], got \""
                  << value << "\"\n";
        return 1;
      }
      max_degree = parsed;
    }
  }

  try {
    bool json = format == "json";

    if (present->parsed()) {
      chowkit::Presentation p = chowkit::stated_presentation(g);
      return write_output(json ? chowkit::render::presentation_json(g, p)
                               : chowkit::render::presentation_text(g, p),
                          output);
    }

    if (verify->parsed()) {
      chowkit::VerificationReport report = chowkit::verify(g, max_degree);
      int io = write_output(
          json ? chowkit::render::verify_report_json(report)
               : chowkit::render::verify_report_text(report),
          output);
      if (io != 0) return io;
      return report.first_discrepancy ? 2 : 0;
    }

    if (weights->parsed()) {
      chowkit::WeightMatrix table = chowkit::action_weights(g);
      return write_output(json ? chowkit::render::weights_json(g, table)
                               : chowkit::render::weights_text(g, table),
                          output);
    }

    if (chow_bt_cmd->parsed()) {
      chowkit::Presentation p = chowkit::chow_bt(rank);
      return write_output(json ? chowkit::render::chow_bt_json(rank, p)
                               : chowkit::render::chow_bt_text(rank, p),
                          output);
    }

    if (identity->parsed()) {
      std::vector<std::pair<long, bool>> per_g;
      bool all = true;
      for (long even_g = 2; even_g <= g_max; even_g += 2) {
        chowkit::HgPresentation hg = chowkit::hg_presentation(even_g);
        chowkit::Presentation target = chowkit::stated_presentation(even_g);
        bool equal = hg.J.generators().size() ==
                     target.relations.generators().size();
        for (std::size_t i = 0; equal && i < hg.J.generators().size(); ++i) {
          equal = chowkit::pullback_even(hg.J.generators()[i]) ==
                  target.relations.generators()[i];
        }
        per_g.emplace_back(even_g, equal);
        all = all && equal;
      }
      int io = write_output(
          json ? chowkit::render::identity_check_json(g_max, per_g)
               : chowkit::render::identity_check_text(g_max, per_g),
          output);
      if (io != 0) return io;
      return all ? 0 : 2;
    }

    if (golden->parsed()) {
      return run_golden(golden_dir, bless);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  return 1;
}
