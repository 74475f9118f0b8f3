#include "bvb/suites.hpp"

#include "bvb/algebras.hpp"
#include "bvb/bv.hpp"
#include "bvb/models.hpp"
#include "bvb/strip.hpp"
#include "bvb/topmech.hpp"
#include "bvb/topology.hpp"

#include <random>
#include <set>
#include <stdexcept>

namespace bvb {

namespace {

long binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<Q> bump(int N, std::vector<std::pair<int, Q>> w) {
  std::vector<Q> phi(N + 1, Q(0));
  for (auto [e, x] : w) phi[e] = x;
  return phi;
}

std::string kind_of(int a, int b, int N) { return std::string(1, a == 0 ? 'c' : 'o') + std::string(1, b == N ? 'c' : 'o'); }

Mat random_poisson(std::mt19937& g, int n) {
  std::uniform_int_distribution<int> u(-3, 3);
  Mat P = zeros(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      P(i, j) = u(g);
      P(j, i) = -P(i, j);
    }
  return P;
}

Mat random_invertible(std::mt19937& g, int n) {
  std::uniform_int_distribution<int> u(-3, 3);
  while (true) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = u(g);
    if (rank(m) == n) return m;
  }
}

Json graded_dims_json(const std::map<int, std::map<int, int>>& d) {
  Json out = Json::object();
  for (auto& [k, dims] : d) out[std::to_string(k)] = dims_json(dims);
  return out;
}

WordElement word(const Word& w) { return {{w, HPoly(1)}}; }

int kernel_dim(const Mat& Pi) { return static_cast<int>(Pi.rows() - rank(Pi)); }

std::vector<BoundaryData> small_boundaries(int maxDimV, int modes) {
  std::vector<BoundaryData> out;
  for (int m = 1; 2 * m <= maxDimV; ++m) out.push_back(topmech_boundary(m));
  for (int n = 1; n <= std::max(1, maxDimV / 2); ++n)
    for (const Mat& P : {poisson_zero(n), poisson_symplectic(n), poisson_rank2(n)}) out.push_back(psm_boundary(P));
  for (int p = 0; p <= modes; ++p) out.push_back(spectral_dolbeault(spectral_surface(p), Q(2)));
  for (int g = 0; g <= 2; ++g) out.push_back(surface_hodge(g).bd);
  return out;
}

}  // namespace

// ---------------------------------------------------------------- config

void validate(const SuiteConfig& c) {
  auto need = [](bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
  };
  need(c.g >= 0 && c.g <= 6, "--g must be in 0..6");
  need(c.b >= 1 && c.b <= 6, "--b must be in 1..6");
  need(c.dimV >= 0 && c.dimV <= 8, "--dimV must be in 0..8");
  need(c.cells >= 1 && c.cells <= 12, "--cells must be in 1..12");
  need(c.modes >= 0 && c.modes <= 4, "--modes must be in 0..4");
  need(c.symCut >= 0 && c.symCut <= 8, "--sym-cut must be in 0..8");
  need(c.hbarCut >= 0 && c.hbarCut <= 6, "--hbar-cut must be in 0..6");
  need(c.polyCut >= 1 && c.polyCut <= 10, "--poly-cut must be in 1..10");
  need(c.pi == "zero" || c.pi == "symplectic" || c.pi == "rank2" || c.pi == "file", "--pi must be zero, symplectic, rank2 or a file");
  if (c.pi == "file") {
    need(c.pi_matrix.has_value(), "--pi file was not loaded");
    const Mat& P = *c.pi_matrix;
    need(P.rows() == P.cols(), "Pi must be square");
    need(P.rows() == c.dimV, "Pi must be dimV x dimV");
    need(is_zero(Mat(P + P.transpose())), "Pi must be antisymmetric");
  }
}

Mat poisson_of(const SuiteConfig& c) {
  if (c.pi == "file") return *c.pi_matrix;
  if (c.pi == "symplectic") return poisson_symplectic(c.dimV);
  if (c.pi == "rank2") return poisson_rank2(c.dimV);
  return poisson_zero(c.dimV);
}

Json config_json(const SuiteConfig& c) {
  Json j{{"g", c.g}, {"b", c.b}, {"dimV", c.dimV}, {"pi", c.pi}};
  if (c.pi_matrix) j["pi_matrix"] = matrix_json(*c.pi_matrix);
  j["cells"] = c.cells;
  j["modes"] = c.modes;
  j["sym_cut"] = c.symCut;
  j["hbar_cut"] = c.hbarCut;
  j["poly_cut"] = c.polyCut;
  j["seed"] = c.seed;
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"topmech", "boundary-algebras", "swiss-cheese", "koszul-strip", "psm-global",
                                              "slab",    "cs-canonical",      "higher-cs",    "props"};
  return names;
}

Report run_suite(const std::string& name, const SuiteConfig& c) {
  validate(c);
  Report r;
  if (name == "topmech") r = run_topmech(c);
  else if (name == "boundary-algebras") r = run_boundary_algebras(c);
  else if (name == "swiss-cheese") r = run_swiss_cheese(c);
  else if (name == "koszul-strip") r = run_koszul_strip(c);
  else if (name == "psm-global") r = run_psm_global(c);
  else if (name == "slab") r = run_slab(c);
  else if (name == "cs-canonical") r = run_cs_canonical(c);
  else if (name == "higher-cs") r = run_higher_cs(c);
  else if (name == "props") r = run_props(c);
  else throw std::invalid_argument("unknown subcommand: " + name);
  return r;
}

// ---------------------------------------------------------------- closed forms

std::map<std::pair<int, int>, int> lichnerowicz_closed_form(int dimV, int kernel, int polyCut) {
  // Darboux splitting: each symplectic pair contributes only constants, the kernel everything.
  std::map<std::pair<int, int>, int> out;
  (void)dimV;
  for (int p = 0; p <= polyCut - 1; ++p)
    for (int q = 0; q <= kernel; ++q) {
      long d = binom(kernel + p - 1, p) * binom(kernel, q);
      if (p == 0) d = binom(kernel, q);
      if (d != 0) out[{p, q}] = static_cast<int>(d);
    }
  return out;
}

std::map<std::pair<int, int>, int> brylinski_closed_form(int dimV, int kernel, int polyCut) {
  // each symplectic pair contributes one class in form degree 2
  const int shift = dimV - kernel;
  std::map<std::pair<int, int>, int> out;
  for (int p = 0; p <= polyCut - 1; ++p)
    for (int q = 0; q <= kernel; ++q) {
      long d = (p == 0 ? 1 : binom(kernel + p - 1, p)) * binom(kernel, q);
      if (d != 0) out[{p, q + shift}] = static_cast<int>(d);
    }
  return out;
}

// ---------------------------------------------------------------- topmech

Report run_topmech(const SuiteConfig& c) {
  if (c.dimV < 2 || c.dimV % 2 != 0) throw std::invalid_argument("topmech: --dimV must be even and positive");
  if (c.cells < 3) throw std::invalid_argument("topmech: --cells must be at least 3");
  if (c.symCut < 2) throw std::invalid_argument("topmech: --sym-cut must be at least 2");
  Report r("topmech");
  r.input("config", config_json(c));
  TopmechReport t = topmech_check(c.dimV, c.cells, c.symCut, c.hbarCut);
  r.expect("open_interval_cohomology_is_weyl_algebra", graded_dims_json(t.open_graded), graded_dims_json(t.weyl_graded),
           source::oracle);
  r.expect("half_closed_cohomology_is_fock_module", graded_dims_json(t.half_graded), graded_dims_json(t.fock_graded),
           source::oracle);
  r.require("open_interval_cohomology_in_degree_0", t.open_concentrated, source::closed_form);
  r.require("half_closed_cohomology_in_degree_0", t.half_concentrated, source::closed_form);
  r.require("ordered_commutator_is_hbar_omega", t.commutator);
  r.note("commutator_pairs", t.commutator_pairs);
  r.require("classical_projection_is_sym_quotient", t.projection);
  r.require("fock_action_matches_structure_map", t.fock_action, source::oracle);
  r.require("fock_module_axiom_on_generator_pairs", t.fock_module, source::oracle);
  r.require("quantum_projection_linear_part", t.pq_linear);
  r.require("structure_map_is_chain_map", t.structure_chain);
  return r;
}

// ---------------------------------------------------------------- boundary algebras

Report run_boundary_algebras(const SuiteConfig& c) {
  Report r("boundary-algebras");
  r.input("config", config_json(c));
  const int n = c.dimV;
  const Mat P = poisson_of(c);

  // star product
  Mat comm = zeros(n, n);
  int star_other = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto a = word({i}), b = word({j});
      auto x = word_sum(star_product(a, b, P), word_scale(star_product(b, a, P), -1));
      for (auto& [w, h] : x) {
        if (w.empty()) comm(i, j) = h.at(1);
        if (!w.empty() || h.at(0) != 0 || h.degree() > 1) ++star_other;
      }
    }
  r.expect("star_commutator_hbar_coefficient", matrix_json(comm), matrix_json(P), source::closed_form);
  r.expect("star_commutator_other_terms", star_other, 0, source::closed_form);

  std::vector<Word> ms;
  for (int d = 1; d <= 3; ++d)
    for (auto& m : multisets(n, d)) ms.push_back(m);
  int assoc_fail = 0, triples = 0, classical_fail = 0;
  const size_t step = ms.size() > 20 ? 5 : 1;
  for (size_t i = 0; i < ms.size(); i += step)
    for (size_t j = 0; j < ms.size(); ++j)
      for (size_t k = 0; k < ms.size(); k += step) {
        auto a = word(ms[i]), b = word(ms[j]), cc = word(ms[k]);
        ++triples;
        if (!(star_product(star_product(a, b, P), cc, P) == star_product(a, star_product(b, cc, P), P))) ++assoc_fail;
      }
  for (auto& f : ms)
    for (auto& g : ms) {
      auto s = star_product(word(f), word(g), P);
      for (auto& [u, h] : poly_product(word(f), word(g)))
        if (!s.count(u) || s.at(u).at(0) != h.at(0)) ++classical_fail;
    }
  r.expect("star_associativity_failures", assoc_fail, 0, source::identity);
  r.note("star_associativity_triples", triples);
  r.expect("star_hbar0_is_commutative_product_failures", classical_fail, 0, source::identity);

  // Weyl algebra and Fock module of (V, omega) in Darboux form
  if (n >= 2 && n % 2 == 0) {
    WeylAlgebra W = topmech_weyl(topmech_boundary(n / 2));
    Mat wc = zeros(n, n);
    int weyl_other = 0;
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w) {
        auto a = W.generator(v), b = W.generator(w);
        auto x = word_sum(W.product(a, b), word_scale(W.product(b, a), -1));
        for (auto& [u, h] : x) {
          if (u.empty()) wc(v, w) = h.at(1);
          if (!u.empty() || h.at(0) != 0 || h.degree() > 1) ++weyl_other;
        }
      }
    r.expect("weyl_commutator_hbar_coefficient", matrix_json(wc), matrix_json(W.omega()), source::closed_form);
    r.expect("weyl_commutator_other_terms", weyl_other, 0, source::closed_form);
    int wassoc = 0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int d = 0; d < n; ++d) {
          auto x = W.generator(a), y = W.generator(b), z = W.generator(d);
          if (!(W.product(W.product(x, y), z) == W.product(x, W.product(y, z)))) ++wassoc;
        }
    r.expect("weyl_associativity_failures_on_generator_triples", wassoc, 0, source::identity);

    std::vector<int> M = topmech_boundary(n / 2).Lperp();
    std::vector<WordElement> fock{W.one()};
    for (int d = 1; d <= 2; ++d)
      for (auto& w : multisets(static_cast<int>(M.size()), d)) {
        Word u;
        for (int x : w) u.push_back(M[x]);
        fock.push_back(W.normal_order(u));
      }
    int module_fail = 0, vacuum_fail = 0;
    for (auto& f : fock)
      for (int a = 0; a < n; ++a) {
        if (f.size() == 1 && f.begin()->first.empty() && W.in_L(a) && !W.fock_action(f, W.generator(a)).empty()) ++vacuum_fail;
        for (int b = 0; b < n; ++b) {
          auto x = W.generator(a), y = W.generator(b);
          if (!(W.fock_action(W.fock_action(f, x), y) == W.fock_action(f, W.product(x, y)))) ++module_fail;
        }
      }
    r.expect("fock_vacuum_killed_by_L_failures", vacuum_fail, 0, source::identity);
    r.expect("fock_right_module_failures", module_fail, 0, source::identity);
    Json fock_dims = Json::object(), sym_dims = Json::object();
    for (int d = 0; d <= std::max(c.symCut, 1); ++d) {
      std::set<Word> seen;
      for (auto& w : multisets(n, d))
        for (auto& [u, h] : W.fock_action(W.one(), W.normal_order(w)))
          if (static_cast<int>(u.size()) == d) seen.insert(u);
      fock_dims[std::to_string(d)] = seen.size();
      sym_dims[std::to_string(d)] = binom(n / 2 + d - 1, d);
    }
    r.expect("fock_degree_pieces_are_sym_of_quotient", fock_dims, sym_dims, source::closed_form);

    int symbol_fail = 0;
    std::vector<WordElement> quad;
    for (int d = 0; d <= 2; ++d)
      for (auto& w : multisets(n, d)) quad.push_back(W.normal_order(w));
    for (auto& a : quad)
      for (auto& b : quad)
        if (!(weyl_symbol(W, W.product(a, b)) == star_product(weyl_symbol(W, a), weyl_symbol(W, b), W.omega()))) ++symbol_fail;
    r.expect("symbol_map_intertwines_weyl_and_star", symbol_fail, 0, source::identity);
  }

  // Koszul pairing between Sym(V^) and Lambda(V) through the strip
  if (n >= 1) {
    int cut = std::max(c.symCut, 2);
    KoszulPairing kp(n, 2, cut, c.hbarCut);
    r.expect("koszul_pairing_unit", hpoly_json(kp.q({}, {})), hpoly_json(HPoly(1)), source::closed_form);
    int sym_fail = 0, ext_fail = 0, checked = 0;
    for (int d = 1; d <= std::min(3, cut); ++d) {
      for (auto& f : multisets(n, d)) {
        ++checked;
        if (!(kp.q(f, {}) == KoszulPairing::aug_sym(f))) ++sym_fail;
      }
      for (auto& l : subsets(n, d)) {
        ++checked;
        if (!(kp.q({}, l) == KoszulPairing::aug_ext(l))) ++ext_fail;
      }
    }
    r.expect("koszul_pairing_restricts_to_sym_augmentation", sym_fail, 0, source::closed_form);
    r.expect("koszul_pairing_restricts_to_exterior_augmentation", ext_fail, 0, source::closed_form);
    r.note("koszul_pairing_monomials_checked", checked);
    Json lin = Json::array();
    for (int i = 0; i < n; ++i) {
      Json row = Json::array();
      for (int j = 0; j < n; ++j) row.push_back(hpoly_json(kp.q({i}, {j})));
      lin.push_back(row);
    }
    r.note("koszul_pairing_linear", lin);
  }
  return r;
}

// ---------------------------------------------------------------- swiss cheese (polyvectors and Hochschild)

Report lichnerowicz_suite(const Mat& Pi, int polyCut, unsigned seed) {
  Report r;
  const int n = static_cast<int>(Pi.rows());
  auto H = lichnerowicz_cohomology(Pi, polyCut);
  r.expect("lichnerowicz_dims", bidims_json(H), bidims_json(lichnerowicz_closed_form(n, kernel_dim(Pi), polyCut)),
           source::closed_form);
  if (n >= 1) {
    std::mt19937 g(seed);
    Mat T = random_invertible(g, n);
    Mat P2 = T * Pi * T.transpose();
    r.expect("lichnerowicz_basis_change_invariance", bidims_json(lichnerowicz_cohomology(P2, polyCut)), bidims_json(H),
             source::identity);
    r.expect("brylinski_basis_change_invariance", bidims_json(brylinski_homology_bigraded(P2, polyCut)),
             bidims_json(brylinski_homology_bigraded(Pi, polyCut)), source::identity);
  }
  return r;
}

Report brylinski_suite(const Mat& Pi, int polyCut) {
  Report r;
  const int n = static_cast<int>(Pi.rows()), k = kernel_dim(Pi);
  BrylinskiReport br = brylinski_homology(Pi, polyCut);
  auto closed = brylinski_closed_form(n, k, polyCut);
  r.expect("brylinski_bigraded_dims", bidims_json(brylinski_homology_bigraded(Pi, polyCut)), bidims_json(closed),
           source::closed_form);
  std::map<int, int> by_degree;
  for (auto& [key, d] : closed) by_degree[-key.second] += d;
  r.expect("brylinski_dims_by_degree", dims_json(br.by_degree), dims_json(by_degree), source::closed_form);
  r.expect("brylinski_window", Json::array({br.window_low, br.window_high}), Json::array({-n, -(n - k)}), source::closed_form);
  r.require("brylinski_concentrated_in_window", br.in_window, source::closed_form);
  // the window is sharp: both ends are populated
  r.require("brylinski_window_ends_populated", br.by_degree.count(-n) && br.by_degree.count(-(n - k)), source::closed_form);
  return r;
}

Report run_swiss_cheese(const SuiteConfig& c) {
  Report r("swiss-cheese");
  r.input("config", config_json(c));
  Mat P = poisson_of(c);
  r.merge(lichnerowicz_suite(P, c.polyCut, c.seed), "");
  r.merge(brylinski_suite(P, c.polyCut), "");
  return r;
}

// ---------------------------------------------------------------- Koszul strip

Report run_koszul_strip(const SuiteConfig& c) {
  if (c.cells < 2) throw std::invalid_argument("koszul-strip: --cells must be at least 2");
  Report r("koszul-strip");
  r.input("config", config_json(c));
  KoszulStripReport k = koszul_strip_check(c.dimV, c.cells, poisson_of(c), std::max(c.symCut, 2), c.hbarCut, true);
  r.require("strip_acyclic", k.classical_acyclic, source::closed_form);
  r.require("pi_perturbed_differential_squares_to_zero", k.pi_square_zero);
  r.require("pi_perturbed_strip_acyclic", k.pi_acyclic, source::closed_form);
  r.require("pi_perturbed_retraction_identities", k.pi_retraction);
  r.expect("quantum_strip_observables", dims_json(k.quantum_dims), dims_json({{0, c.hbarCut + 1}}), source::closed_form);
  r.expect("koszul_pairing_unit", hpoly_json(k.q_unit), hpoly_json(HPoly(1)), source::closed_form);
  r.require("koszul_pairing_restricts_to_sym_augmentation", k.restricts_sym, source::closed_form);
  r.require("koszul_pairing_restricts_to_exterior_augmentation", k.restricts_ext, source::closed_form);
  r.note("monomials_checked", k.monomials_checked);
  return r;
}

// ---------------------------------------------------------------- PSM on surfaces

Report psm_suite(int g, int b, const Mat& Pi, double bruteforce_budget) {
  Report r;
  const int n = static_cast<int>(Pi.rows()), k = kernel_dim(Pi);
  SurfaceData s{g, b};
  LefschetzPackage lp = lefschetz_data(s);
  r.require("surface_cohomology_closed_form", lp.cohomology.matches_closed_form, source::closed_form);
  r.expect("lefschetz_rank_of_delta", lp.cellular_rank_delta, 2 * g, source::closed_form);
  r.require("lefschetz_pairing_nondegenerate", lp.nondegenerate);
  r.require("lefschetz_block_form", lp.block_diagonal && lp.rank_consistent);
  PsmFieldCohomology f = psm_field_cohomology(s, Pi);
  r.expect("field_cohomology", dims_json(f.dims), dims_json(f.closed_form), source::closed_form);
  r.expect("field_cohomology_euler", f.euler, 0, source::closed_form);
  PsmGlobalResult gl = psm_global_observables(s, Pi, bruteforce_budget);
  r.expect("global_observables_rank_degree", Json::array({gl.bv.rank, gl.bv.degree}),
           Json::array({1, -2 * g * k - b * n}), source::closed_form);
  r.require("global_observables_concentrated", gl.bv.concentrated, source::closed_form);
  if (gl.bruteforce_run) {
    r.expect("truncated_whole_space_elimination", dims_json(gl.bruteforce), dims_json(gl.bruteforce_expected),
             source::closed_form);
    r.note("truncation_cap", gl.bruteforce_cap);
    r.note("truncation_reaches_top_class", gl.bruteforce_complete);
  }
  return r;
}

Report run_psm_global(const SuiteConfig& c) {
  Report r("psm-global");
  r.input("config", config_json(c));
  r.merge(psm_suite(c.g, c.b, poisson_of(c), 2e4), "");
  SurfaceHodge h = surface_hodge(c.g);
  r.require("surface_hodge_lagrangian", h.check.pass());
  r.expect("surface_hodge_dims", dims_json(h.bd.B.space.dims()), dims_json(prune({{-1, 1}, {0, 2 * c.g}, {1, 1}})),
           source::closed_form);
  TopmechReport t = topmech_check(h.bd, std::max(c.cells, 3), std::max(c.symCut, 2), c.hbarCut);
  r.expect("surface_hodge_open_interval_is_weyl_algebra", graded_dims_json(t.open_graded), graded_dims_json(t.weyl_graded),
           source::oracle);
  r.expect("surface_hodge_half_closed_is_fock_module", graded_dims_json(t.half_graded), graded_dims_json(t.fock_graded),
           source::oracle);
  r.require("surface_hodge_commutator", t.commutator);
  r.require("surface_hodge_fock_action", t.fock_action && t.fock_module, source::oracle);
  return r;
}

// ---------------------------------------------------------------- slab and scalar

Report slab_suite(int pairs, int N, int symCut, int hbarCut) {
  Report r;
  const Q kappa(2);
  SpectralSurface s = spectral_surface(pairs);
  FieldComplex slab = slab_model(s, N, kappa);
  ScalarModel sc = scalar_complex(s, kappa);
  auto hs = cohomology_dims(slab.E), hc = cohomology_dims(sc.C);
  r.expect("slab_cohomology_matches_scalar", dims_json(hs), dims_json(hc), source::oracle);
  r.expect("scalar_cohomology", dims_json(hc), dims_json({{0, 1}, {1, 1}}), source::closed_form);
  r.require("slab_pairing_invariant", is_zero(pairing_invariance_defect(slab.E, slab.pairing)));
  int fails = 0;
  const std::vector<std::vector<Q>> phis{bump(N, {{1, 1}}), bump(N, {{N, 1}}),
                                         N >= 2 ? bump(N, {{1, Q(1, 2)}, {2, Q(1, 2)}}) : bump(N, {{1, 1}})};
  Cohomology h = cohomology(sc.C);
  for (const auto& phi : phis) {
    Mat I = slab_inclusion(s, slab, phi);
    bool chain = is_chain_map(sc.C, slab.E, GradedMap{sc.C.space, slab.E.space, 0, I});
    Mat img = hcat(I * h.reps[0], I * h.reps[1]);
    bool quasi = rank(hcat(img, slab.E.d)) == rank(slab.E.d) + 2;
    bool pairing = equal(Mat(I.transpose() * slab.pairing * I), sc.pairing);
    if (!chain || !quasi || !pairing) ++fails;
  }
  r.expect("scalar_inclusion_failures", fails, 0, source::identity);
  if (symCut >= 0) {
    SymComplex a = sym_observables(slab.E, slab.pairing, symCut, hbarCut);
    SymComplex b = sym_observables(sc.C, sc.pairing, symCut, hbarCut);
    r.expect("quantum_slab_matches_scalar", dims_json(sym_cohomology(a)), dims_json(sym_cohomology(b)), source::oracle);
  }
  return r;
}

Report run_slab(const SuiteConfig& c) {
  if (c.cells < 2) throw std::invalid_argument("slab: --cells must be at least 2");
  Report r("slab");
  r.input("config", config_json(c));
  r.merge(slab_suite(c.modes, c.cells, c.symCut, c.hbarCut), "");
  return r;
}

// ---------------------------------------------------------------- CS/WZW boundary

Report run_cs_canonical(const SuiteConfig& c) {
  if (c.cells < 4) throw std::invalid_argument("cs-canonical: --cells must be at least 4");
  Report r("cs-canonical");
  r.input("config", config_json(c));
  const int N = c.cells;
  const Q kappa(5, 3);
  SpectralSurface s = spectral_surface(c.modes);
  BoundaryData bd = spectral_dolbeault(s, kappa);
  r.require("chiral_condition_lagrangian", lagrangian_check(bd).pass());
  Decomposition dec = decompose(bd);
  r.require("q_maps_L_into_L", is_zero(dec.Q_L_to_Lperp));
  // mu is kappa times the rescaled one
  r.expect("mu_linear_in_kappa", matrix_json(dec.mu), matrix_json(Mat(kappa * decompose(spectral_dolbeault(s, Q(1))).mu)),
           source::identity);

  BulkBoundaryModel m = half_line_model(bd, N);
  const std::vector<std::vector<Q>> phis{bump(N, {{2, 1}}), bump(N, {{1, Q(1, 2)}, {3, Q(1, 2)}}),
                                         bump(N, {{1, 2}, {2, -3}, {4, 2}})};
  int fails = 0;
  Json integrals = Json::array();
  for (const auto& phi : phis) {
    Correspondence cr = correspondence_maps(m, N, phi);
    CorrespondenceCheck chk = check_correspondence(cr);
    CocycleCheck cc = quantum_cocycle_check(cr);
    if (!chk.all() || !cc.holds) ++fails;
    integrals.push_back(rational_json(cc.discrete_integral));
  }
  r.expect("correspondence_failures", fails, 0, source::identity);
  r.note("discrete_integrals", integrals);

  // quantum: observables on [0, N) against the twisted envelope of Lperp
  Correspondence cr = correspondence_maps(m, N, phis[0]);
  int cut = std::min(c.symCut, 2);
  SymComplex big = sym_observables(cr.fields.E, cr.fields.pairing, cut, c.hbarCut);
  SymComplex small = twisted_envelope(dec.Lperp, dec.mu, cut, c.hbarCut);
  r.expect("quantum_half_line_matches_twisted_envelope", dims_json(sym_cohomology(big)), dims_json(sym_cohomology(small)),
           source::oracle);
  SymRetraction q = perturb_quantum(sym_retraction(cr.r, cut, 1), big, small);
  r.require("quantum_retraction_identities", check_sym_retraction(q, cut).identities());
  return r;
}

// ---------------------------------------------------------------- CP^n pushforward

Report higher_cs_suite(int n, int pairs) {
  Report r;
  SpectralSurface s = spectral_surface(pairs);
  CpPushforward cp = cp_pushforward(n, s);
  r.expect("pushforward_dims", dims_json(cp.dims), dims_json(cp.derived), source::closed_form);
  r.note("pushforward_stated_reading", dims_json(cp.stated));
  r.note("pushforward_agrees_with_stated_reading", cp.agrees_stated);
  r.require("zero_mode_line_survives", cp.zero_mode_line);
  for (Q vol : {Q(1), Q(3), Q(7, 2)}) {
    PushforwardCocycle p = pushforward_cocycle(n, s, Q(2), vol);
    std::string tag = "vol_" + to_string(vol) + "_";
    r.expect(tag + "cocycle_middle_block", matrix_json(p.top_block), matrix_json(p.expected), source::closed_form);
    r.require(tag + "cocycle_other_blocks_zero", p.other_blocks_zero, source::closed_form);
  }
  return r;
}

Report run_higher_cs(const SuiteConfig& c) {
  Report r("higher-cs");
  r.input("config", config_json(c));
  for (int n = 1; n <= 2; ++n) r.merge(higher_cs_suite(n, c.modes), "n" + std::to_string(n) + "_");
  return r;
}

// ---------------------------------------------------------------- property suites

Report structural_suite(int cells, int maxDimV, int modes, int symCut, int hbarCut) {
  Report r;
  int linear = 0, linear_fail = 0;
  auto lin = [&](const CochainComplex& cx) {
    ++linear;
    if (!cx.square_zero() || !cx.respects_degree()) ++linear_fail;
  };
  for (int N = 1; N <= cells; ++N)
    for (int a = 0; a < N; ++a)
      for (int b = a + 1; b <= N; ++b)
        for (std::string k : {"cc", "co", "oc", "oo"}) lin(cellular_de_rham(N, a, b, k));
  std::vector<BoundaryData> bds = small_boundaries(maxDimV, modes);
  for (const auto& bd : bds) {
    lin(bd.B);
    for (int N = 1; N <= cells; ++N) {
      BulkBoundaryModel m = half_line_model(bd, N);
      for (std::string k : {"cc", "co", "oc", "oo"}) {
        if (N == 1 && k == "oo") continue;
        lin(bulk_fields(m, 0, N, k).E);
        lin(conditioned_fields(m, 0, N, k).E);
      }
    }
  }
  for (int n = 1; n <= std::max(1, maxDimV / 2); ++n)
    for (int N = 2; N <= cells; ++N) lin(conditioned_fields(koszul_strip_model(n, N), 0, N, "cc").E);
  for (int p = 0; p <= modes; ++p) {
    lin(scalar_complex(spectral_surface(p), Q(2)).C);
    for (int N = 2; N <= cells; ++N) lin(slab_model(spectral_surface(p), N, Q(2)).E);
  }
  for (int g = 0; g <= 2; ++g)
    for (int b = 1; b <= 3; ++b) {
      SurfaceComplex sc = surface_complex({g, b});
      lin(sc.absolute);
      lin(sc.relative);
    }
  r.expect("linear_d_squared_failures", linear_fail, 0, source::identity);
  r.note("linear_complexes", linear);

  int sym = 0, sym_fail = 0;
  size_t monomials = 0;
  auto quantum = [&](const SymComplex& cx) {
    StructuralCheck s = check_structure(cx);
    ++sym;
    monomials += s.monomials;
    if (!s.all()) ++sym_fail;
  };
  for (const auto& bd : bds) {
    if (bd.size() > 8) continue;
    BulkBoundaryModel m = half_line_model(bd, 2);
    for (std::string k : {"co", "oo"}) {
      FieldComplex f = conditioned_fields(m, 0, 2, k);
      quantum(sym_observables(f.E, f.pairing, symCut, hbarCut));
    }
    Decomposition d = decompose(bd);
    quantum(twisted_envelope(d.Lperp, d.mu, symCut, hbarCut));
  }
  FieldComplex strip = conditioned_fields(koszul_strip_model(1, 2), 0, 2, "cc");
  quantum(sym_observables(strip.E, strip.pairing, symCut, hbarCut));
  FieldComplex slab = slab_model(spectral_surface(0), 2, Q(2));
  quantum(sym_observables(slab.E, slab.pairing, symCut, hbarCut));
  ScalarModel sc = scalar_complex(spectral_surface(1), Q(2));
  quantum(sym_observables(sc.C, sc.pairing, symCut, hbarCut));
  r.expect("quantum_structure_failures", sym_fail, 0, source::identity);
  r.note("sym_complexes", sym);
  r.note("monomials_checked", monomials);
  return r;
}

Report greens_suite(int maxN, int maxDimV, unsigned seed) {
  Report r;
  std::mt19937 g(seed);
  std::vector<BoundaryData> bds;
  for (int m = 1; 2 * m <= maxDimV; ++m) bds.push_back(topmech_boundary(m));
  if (maxDimV >= 4) {
    bds.push_back(psm_boundary(random_poisson(g, 1)));
    bds.push_back(spectral_dolbeault(spectral_surface(0), Q(3)));
    bds.push_back(surface_hodge(1).bd);
  }
  if (maxDimV >= 2) bds.push_back(surface_hodge(0).bd);
  int full = 0, full_fail = 0, cond = 0, cond_fail = 0;
  for (const auto& bd : bds)
    for (int N = 1; N <= maxN; ++N) {
      BulkBoundaryModel m;
      m.bd = bd;
      m.N = N;
      for (std::string k : {"cc", "co", "oc", "oo"}) {
        if (N == 1 && k == "oo") continue;
        FieldComplex f = bulk_fields(m, 0, N, k);
        ++full;
        if (!equal(pairing_invariance_defect(f.E, f.pairing), telescoping_form(f, bd))) ++full_fail;
      }
      BulkBoundaryModel half = half_line_model(bd, N);
      ++cond;
      FieldComplex f = conditioned_fields(half, 0, N, "co");
      if (!is_zero(pairing_invariance_defect(f.E, f.pairing))) ++cond_fail;
      BulkBoundaryModel both = half;
      both.conditions[N] = bd.inL;
      if (N >= 1) {
        ++cond;
        FieldComplex f2 = conditioned_fields(both, 0, N, "cc");
        if (!is_zero(pairing_invariance_defect(f2.E, f2.pairing))) ++cond_fail;
      }
    }
  r.expect("greens_defect_equals_telescoping_form_failures", full_fail, 0, source::closed_form);
  r.expect("conditioned_defect_nonzero", cond_fail, 0, source::closed_form);
  r.note("full_intervals", full);
  r.note("conditioned_intervals", cond);
  return r;
}

Report cosheaf_suite(int maxN, unsigned seed) {
  Report r;
  std::mt19937 g(seed);
  std::vector<BoundaryData> bds{topmech_boundary(1), psm_boundary(random_poisson(g, 2)),
                                spectral_dolbeault(spectral_surface(0), Q(2))};
  int configs = 0, fails = 0;
  for (const auto& bd : bds)
    for (int N = 2; N <= maxN; ++N) {
      BulkBoundaryModel model = half_line_model(bd, N);
      for (int a1 = 0; a1 <= N; ++a1)
        for (int b1 = a1 + 1; b1 <= N; ++b1)
          for (int a2 = a1 + 1; a2 < b1; ++a2)
            for (int b2 = b1 + 1; b2 <= N; ++b2) {
              FieldComplex U1 = conditioned_fields(model, a1, b1, kind_of(a1, b1, N));
              FieldComplex U2 = conditioned_fields(model, a2, b2, kind_of(a2, b2, N));
              FieldComplex U12 = conditioned_fields(model, a2, b1, kind_of(a2, b1, N));
              FieldComplex U = conditioned_fields(model, a1, b2, kind_of(a1, b2, N));
              Mat f = vcat(extension(U12, U1), Mat(-extension(U12, U2)));
              Mat h = hcat(extension(U1, U), extension(U2, U));
              ++configs;
              bool exact = rank(f) == U12.size() && is_zero(Mat(h * f)) && rank(h) == U.size() &&
                           rank(h) + rank(f) == U1.size() + U2.size();
              if (!exact) ++fails;
            }
    }
  r.expect("cosheaf_sequence_failures", fails, 0, source::closed_form);
  r.note("cover_configurations", configs);
  return r;
}

Report maps_suite(int N, unsigned seed) {
  if (N < 5) throw std::invalid_argument("maps_suite: needs at least 5 cells");
  Report r;
  std::mt19937 g(seed);
  const std::vector<std::vector<Q>> left{bump(N, {{2, 1}}), bump(N, {{1, Q(1, 2)}, {3, Q(1, 2)}}),
                                         bump(N, {{1, 2}, {2, -3}, {4, 2}})};
  const std::vector<std::vector<Q>> right{bump(N, {{3, 1}}), bump(N, {{2, Q(1, 2)}, {4, Q(1, 2)}}),
                                          bump(N, {{2, 2}, {3, -3}, {5, 2}})};
  auto run = [&](const std::string& name, auto make) {
    int fails = 0;
    for (int i = 0; i < 3; ++i) {
      Correspondence c = make(i);
      CorrespondenceCheck chk = check_correspondence(c);
      CocycleCheck cc = quantum_cocycle_check(c);
      if (!chk.retraction.identities() || !chk.retraction.all() || !chk.boundary_in_L || !cc.holds) ++fails;
    }
    r.expect(name + "_failures", fails, 0, source::identity);
  };
  BulkBoundaryModel tm = half_line_model(topmech_boundary(2), N);
  run("topological_mechanics", [&](int i) { return correspondence_maps(tm, N, left[i]); });
  BulkBoundaryModel ps = half_line_model(psm_boundary(random_poisson(g, 2)), N);
  run("poisson_sigma_random_pi", [&](int i) { return correspondence_maps(ps, N, left[i]); });
  BulkBoundaryModel strip = koszul_strip_model(2, N);
  BulkBoundaryModel bottom;
  bottom.bd = strip.bd;
  bottom.N = N;
  bottom.conditions[0] = strip.conditions.at(0);
  run("strip_bottom_end", [&](int i) { return correspondence_maps(bottom, N - 1, left[i]); });
  BulkBoundaryModel top;
  top.bd = strip.bd;
  top.bd.inL = strip.conditions.at(N);
  top.N = N;
  top.conditions[N] = top.bd.inL;
  run("strip_top_end", [&](int i) { return correspondence_maps_right(top, 1, right[i]); });
  BulkBoundaryModel cs = half_line_model(spectral_dolbeault(spectral_surface(1), Q(5, 3)), N);
  run("chern_simons_spectral", [&](int i) { return correspondence_maps(cs, N, left[i]); });
  return r;
}

namespace {

// Complex of cohomology lines plus acyclic pairs, scrambled by a graded basis change.
struct RandomComplex {
  CochainComplex c;
  std::map<int, int> h;
};

RandomComplex random_complex(std::mt19937& g, int maxdim) {
  std::uniform_int_distribution<int> deg(-1, 2), coin(0, 2), coef(1, 4);
  std::vector<int> degs;
  std::vector<std::pair<int, int>> pairs;
  RandomComplex out;
  while (static_cast<int>(degs.size()) < maxdim) {
    int k = deg(g);
    if (coin(g) == 0 || static_cast<int>(degs.size()) + 2 > maxdim) {
      ++out.h[k];
      degs.push_back(k);
    } else {
      pairs.emplace_back(static_cast<int>(degs.size()), static_cast<int>(degs.size()) + 1);
      degs.push_back(k);
      degs.push_back(k + 1);
    }
  }
  const int n = static_cast<int>(degs.size());
  GradedVectorSpace sp(degs);
  Mat d = zeros(n, n);
  for (auto [a, b] : pairs) d(b, a) = coef(g);
  Mat t = zeros(n, n);
  for (auto [k, m] : sp.dims()) {
    auto idx = sp.indices(k);
    Mat blk = random_invertible(g, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) t(idx[i], idx[j]) = blk(i, j);
  }
  out.c = CochainComplex(sp, t * d * inverse(t));
  return out;
}

}  // namespace

Report run_props(const SuiteConfig& c) {
  Report r("props");
  r.input("config", config_json(c));
  std::mt19937 g(c.seed);
  int coh_fail = 0, ret_fail = 0, kun_fail = 0, dual_fail = 0, trials = 0;
  for (int t = 0; t < 12; ++t) {
    RandomComplex a = random_complex(g, 6), b = random_complex(g, 4);
    ++trials;
    if (cohomology_dims(a.c) != prune(a.h)) ++coh_fail;
    if (!check_retraction(standard_retraction(a.c)).all()) ++ret_fail;
    if (cohomology_dims(tensor(a.c, b.c)) != kunneth(prune(a.h), prune(b.h))) ++kun_fail;
    std::map<int, int> mirrored;
    for (auto [k, d] : prune(a.h)) mirrored[-k] = d;
    if (cohomology_dims(dual(a.c)) != mirrored) ++dual_fail;
  }
  r.expect("random_complex_cohomology_failures", coh_fail, 0, source::oracle);
  r.expect("standard_retraction_failures", ret_fail, 0, source::identity);
  r.expect("kunneth_failures", kun_fail, 0, source::closed_form);
  r.expect("dual_mirrors_cohomology_failures", dual_fail, 0, source::closed_form);
  r.note("random_trials", trials);
  r.merge(structural_suite(std::min(c.cells, 4), std::min(c.dimV, 4), std::min(c.modes, 1), std::min(c.symCut, 3),
                           std::min(c.hbarCut, 2)),
          "structure_");
  r.merge(greens_suite(c.cells, 4, c.seed), "greens_");
  r.merge(cosheaf_suite(c.cells, c.seed), "cosheaf_");
  r.merge(maps_suite(std::max(c.cells, 5), c.seed), "maps_");
  return r;
}

}  // namespace bvb
