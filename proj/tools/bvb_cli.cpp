// bvb: batch verification harness. One subcommand per model family; the JSON report goes to
// stdout (or --json-out), a short summary and the wall time to stderr.

#include "bvb/suites.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

namespace {

bvb::Mat load_pi(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open Pi file: " + path);
  bvb::Json j = bvb::Json::parse(in);
  if (j.is_object()) {
    if (!j.contains("Pi")) throw std::invalid_argument("Pi file object needs a \"Pi\" field");
    j = j["Pi"];
  }
  return bvb::matrix_from_json(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of bulk-boundary BV models"};
  app.require_subcommand(1);

  bvb::SuiteConfig cfg;
  std::string pi = "zero", json_out;
  for (const auto& name : bvb::suite_names()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--g", cfg.g, "surface genus");
    sub->add_option("--b", cfg.b, "number of boundary circles");
    sub->add_option("--dimV", cfg.dimV, "dimension of V");
    sub->add_option("--pi", pi, "zero, symplectic, rank2, or a JSON matrix file");
    sub->add_option("--cells", cfg.cells, "cells N of the interval [0, N]");
    sub->add_option("--modes", cfg.modes, "nonzero mode pairs of the spectral surface");
    sub->add_option("--sym-cut", cfg.symCut, "Sym-degree cutoff");
    sub->add_option("--hbar-cut", cfg.hbarCut, "hbar-power cutoff");
    sub->add_option("--poly-cut", cfg.polyCut, "polynomial degree cutoff");
    sub->add_option("--seed", cfg.seed, "seed for random basis changes");
    sub->add_option("--json-out", json_out, "write the report here instead of stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  bvb::Report report;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (pi == "zero" || pi == "symplectic" || pi == "rank2") {
      cfg.pi = pi;
    } else {
      cfg.pi = "file";
      cfg.pi_matrix = load_pi(pi);
    }
    report = bvb::run_suite(command, cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const bvb::Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const std::string text = report.to_json().dump(2) + "\n";
  if (json_out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(json_out);
    if (!out) {
      std::cerr << "error: cannot write " << json_out << "\n";
      return 2;
    }
    out << text;
  }

  for (const auto& c : report.checks())
    if (!c.pass) std::cerr << "FAIL " << c.name << "\n";
  std::cerr << command << ": " << (report.checks().size() - report.failures()) << "/" << report.checks().size()
            << " checks passed in " << secs << " s\n";
  return report.pass() ? 0 : 1;
}
