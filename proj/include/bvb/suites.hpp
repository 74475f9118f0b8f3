#pragma once

#include "bvb/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bvb {

/// Inputs shared by every verification suite. Defaults are the CLI defaults.
struct SuiteConfig {
  int g = 1, b = 1, dimV = 2;
  std::string pi = "zero";  // zero | symplectic | rank2 | file
  std::optional<Mat> pi_matrix;  // set when pi == "file"
  int cells = 4, modes = 1, symCut = 3, hbarCut = 2, polyCut = 5;
  unsigned seed = 1;
};

// Throws std::invalid_argument on malformed input.
void validate(const SuiteConfig& c);
Mat poisson_of(const SuiteConfig& c);
Json config_json(const SuiteConfig& c);

const std::vector<std::string>& suite_names();
// Dispatches on the subcommand name; throws std::invalid_argument for unknown names.
Report run_suite(const std::string& name, const SuiteConfig& c);

Report run_topmech(const SuiteConfig& c);
Report run_boundary_algebras(const SuiteConfig& c);
Report run_swiss_cheese(const SuiteConfig& c);
Report run_koszul_strip(const SuiteConfig& c);
Report run_psm_global(const SuiteConfig& c);
Report run_slab(const SuiteConfig& c);
Report run_cs_canonical(const SuiteConfig& c);
Report run_higher_cs(const SuiteConfig& c);
Report run_props(const SuiteConfig& c);

// Building blocks, also driven directly with larger grids by the acceptance run.

// d^2 = 0 on every linear model up to `cells`; Q^2 = Delta^2 = [Q, Delta] = (Q + hbar Delta)^2 = 0
// on the Sym complexes of the smaller models.
Report structural_suite(int cells, int maxDimV, int modes, int symCut, int hbarCut);
// Green's defect equals the telescoping form on full intervals and vanishes on conditioned ones.
Report greens_suite(int maxN, int maxDimV, unsigned seed);
// E(U1 n U2) -> E(U1) + E(U2) -> E(U) exact for every overlapping pair of intervals in [0, N].
Report cosheaf_suite(int N, unsigned seed);
// Correspondence maps on the topological mechanics, strip and spectral models, three phi each.
Report maps_suite(int N, unsigned seed);
// Brylinski window and closed-form counts for one Pi.
Report brylinski_suite(const Mat& Pi, int polyCut);
// Lichnerowicz closed form and basis-change invariance for one Pi.
Report lichnerowicz_suite(const Mat& Pi, int polyCut, unsigned seed);
// Slab against the scalar complex, classical and quantum.
Report slab_suite(int pairs, int N, int symCut, int hbarCut);
// Rank and degree of the global observables with the truncated whole-space cross-check.
Report psm_suite(int g, int b, const Mat& Pi, double bruteforce_budget);
// Pushforward dims and cocycle for CP^n x Sigma.
Report higher_cs_suite(int n, int pairs);

// Closed forms used as expected values.
std::map<std::pair<int, int>, int> lichnerowicz_closed_form(int dimV, int kernel, int polyCut);
std::map<std::pair<int, int>, int> brylinski_closed_form(int dimV, int kernel, int polyCut);

}  // namespace bvb
