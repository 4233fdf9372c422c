#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "honeymirror/report.hpp"

namespace {

enum Exit { kOk = 0, kFail = 1, kConfig = 2, kInconclusive = 3 };

int exit_code(hm::Verdict v) {
  switch (v) {
    case hm::Verdict::Match:
      return kOk;
    case hm::Verdict::Mismatch:
      return kFail;
    default:
      return kInconclusive;
  }
}

bool write(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return static_cast<bool>(std::cout);
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homological mirror symmetry checks on permutohedral honeycombs"};
  app.require_subcommand(1);
  hm::RunConfig config;
  std::string out;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"build", "Permutohedron census and honeycomb window export"},
      {"arboreal", "Link posets, vertex degrees and cyclic orders over a window"},
      {"aside-hom", "Corepresentability of skyscrapers against rank-one branes"},
      {"bside-hom", "Equivariant Hom table of the structure factorizations"},
      {"acyclic", "Nullhomotopies and contraction of the f-map complexes"},
      {"mirror", "Generator dictionary and relation checks across both sides"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--n", config.n, "Dimension n")->capture_default_str();
    sub->add_option("--radius", config.radius, "Window radius")->capture_default_str();
    sub->add_option("--twist-radius", config.twist_radius, "Twist window radius")->capture_default_str();
    sub->add_option("--degree-cap", config.degree_cap, "Degree cap for truncation and homotopy searches")
        ->capture_default_str();
    sub->add_option("--out", out, "Output file (stdout when omitted)");
    sub->add_option("--format", config.format, "json or obj")->capture_default_str();
    sub->callback([&config, name = name] { config.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }
  try {
    hm::validate_config(config);
    if (config.format == "obj") {
      if (!write(out, hm::window_obj(config.n, config.radius))) return kConfig;
      out.clear();
    }
    const hm::Report report = hm::run_report(config);
    if (!write(out, report.json)) {
      std::cerr << "cannot write " << out << "\n";
      return kConfig;
    }
    std::cerr << config.command << ": " << hm::to_string(report.verdict) << "\n";
    return exit_code(report.verdict);
  } catch (const hm::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const hm::Inconclusive& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const hm::MarginError& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
}
