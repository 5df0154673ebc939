// qbic: command-line front end for q-bic form and hypersurface computations.
//
// Subcommands: form, count, zeta, betti, degree, verify. All reports are
// deterministic JSON (sorted keys, counts as decimal strings); timings are
// attached only with --timing. Exit codes: 0 success / all-match,
// 1 mismatch, 2 usage or parse error, 3 budget exceeded.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qbic/combinatorics.hpp"
#include "qbic/form_io.hpp"
#include "qbic/multipoly.hpp"
#include "qbic/oracle.hpp"
#include "qbic/subspace.hpp"
#include "qbic/zeta.hpp"

namespace {

using namespace qbic;

struct GlobalOpts {
  unsigned workers = 1;
  std::uint64_t budget = 100'000'000;
  std::string output = "json";
  bool timing = false;

  EnumerationOptions enum_opts() const { return {workers, budget}; }
};

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void require_prime_power(unsigned q) {
  if (q < 2) throw ParseError("q must be a prime power >= 2");
  unsigned p = 2;
  while (q % p != 0) ++p;
  unsigned t = q;
  while (t > 1) {
    if (t % p != 0) throw ParseError("q must be a prime power");
    t /= p;
  }
}

void emit(const GlobalOpts& g, const Json& j) {
  if (g.output == "table") {
    // flat two-column rendering; nested values print as compact JSON
    for (const auto& [k, v] : j.items()) {
      std::cout << k << "\t" << (v.is_string() ? v.get<std::string>() : v.dump())
                << "\n";
    }
  } else {
    std::cout << dump_json(j);
  }
}

int cmd_form(const GlobalOpts& g, const std::string& mode, const std::string& file) {
  LoadedForm lf = load_form_file(file);
  Timer t;
  FormProfile prof = (mode == "classify") ? classify_type(*lf.form) : lf.form->kernels();
  Json j = profile_to_json(prof);
  if (mode == "info") {
    j.erase("right_chain");
    j.erase("left_chain");
    j.erase("type");
    j.erase("ambiguous");
    j.erase("matches");
  }
  j["q"] = lf.q;
  j["s"] = lf.s;
  j["smooth"] = !lf.form->is_zero_form() && lf.form->is_smooth();
  j["cone"] = lf.form->is_cone();
  if (!lf.form->is_zero_form() && !lf.form->is_smooth()) {
    j["singular_locus"] = subspace_to_json(lf.form->singular_locus());
  }
  if (g.timing) j["elapsed_ms"] = t.ms();
  emit(g, j);
  return 0;
}

int cmd_count(const GlobalOpts& g, const std::string& kind, const std::string& file,
              std::optional<unsigned> r, std::optional<unsigned> k, unsigned s,
              bool formula_only, bool enumerate_only) {
  LoadedForm lf = load_form_file(file);
  const QBicForm& form = *lf.form;
  const unsigned n = static_cast<unsigned>(form.dim()) - 1;  // projective dim
  Timer t;

  std::optional<BigInt> formula, enumerated;
  Json params{{"q", lf.q}, {"n", n}, {"s", s}};

  // The closed formulas describe the Hermitian (phi-) structure; base-field
  // enumeration agrees with them exactly for conjugate-symmetric Gram
  // matrices A = (A^(q))^T. Twisted smooth forms get no formula column.
  const bool formulas_apply =
      !form.is_zero_form() && form.is_smooth() && form.has_hermitian_gram();

  if (kind == "fano") {
    if (!r) throw ParseError("count fano requires -r");
    params["r"] = *r;
    if (!formula_only) enumerated = fano_count(form, *r, s, g.enum_opts());
    if (!enumerate_only && formulas_apply) {
      if (n == 2 * *r + 1) {
        formula = hermitian_max_count(lf.q, *r, Parity::even);
      } else if (n == 2 * *r + 2) {
        formula = fano_zeta(lf.q, *r).point_count(s);
      }
    }
  } else if (kind == "hermitian") {
    if (!k) throw ParseError("count hermitian requires -k");
    params["k"] = *k;
    if (!formula_only) enumerated = hermitian_fano_count(form, *k, g.enum_opts());
    if (!enumerate_only && formulas_apply && 2 * *k < n) {
      formula = hermitian_plane_count(lf.q, n, *k);
    }
  } else if (kind == "filtration") {
    if (!k) throw ParseError("count filtration requires -k");
    params["k"] = *k;
    if (!formula_only) enumerated = filtration_count(form, *k, s, g.enum_opts());
    if (!enumerate_only && formulas_apply && *k == 0) {
      formula = hypersurface_point_count(lf.q, n, s);
    }
  } else {
    throw ParseError("unknown count kind: " + kind);
  }

  Json j{{"command", "count"}, {"kind", kind}, {"params", std::move(params)}};
  if (enumerated) j["enumerated"] = to_decimal(*enumerated);
  if (formula) j["formula"] = to_decimal(*formula);
  j["count"] = enumerated ? to_decimal(*enumerated)
                          : (formula ? to_decimal(*formula) : "");
  bool match = true;
  if (enumerated && formula) {
    match = (*enumerated == *formula);
    j["match"] = match;
  }
  // run metadata stays out of the canonical output so that identical
  // mathematical inputs serialize byte-identically for any --workers value
  if (g.timing) {
    j["elapsed_ms"] = t.ms();
    j["workers"] = g.workers;
  }
  emit(g, j);
  return match ? 0 : 1;
}

int cmd_zeta(const GlobalOpts& g, unsigned q, std::optional<unsigned> m,
             std::optional<unsigned> cox, unsigned points) {
  require_prime_power(q);
  if (m.has_value() == cox.has_value()) {
    throw ParseError("zeta requires exactly one of --m or --cox");
  }
  Timer t;
  ZetaFactorization z = m ? fano_zeta(q, *m) : coxeter_zeta(q, *cox);
  Json j = zeta_to_json(z);
  if (m) j["m"] = *m;
  if (cox) j["cox"] = *cox;
  if (points > 0) {
    Json ns = Json::array();
    for (unsigned s = 1; s <= points; ++s) ns.push_back(to_decimal(z.point_count(s)));
    j["points"] = std::move(ns);
  }
  if (g.timing) j["elapsed_ms"] = t.ms();
  emit(g, j);
  return 0;
}

int cmd_betti(const GlobalOpts& g, unsigned q, unsigned m) {
  require_prime_power(q);
  Timer t;
  BettiTable table = betti_from_zeta(fano_zeta(q, m), m);
  bool closed_agrees = true, duality = true;
  for (unsigned k = 0; k <= 2 * m + 2; ++k) {
    if (betti_closed_form(q, m, k) != table.b[k]) closed_agrees = false;
    if (table.b[k] != table.b[2 * m + 2 - k]) duality = false;
  }
  Json j = betti_to_json(table);
  j["q"] = q;
  j["closed_form_agrees"] = closed_agrees;
  j["poincare_duality"] = duality;
  if (g.timing) j["elapsed_ms"] = t.ms();
  emit(g, j);
  return (closed_agrees && duality) ? 0 : 1;
}

int cmd_degree(const GlobalOpts& g, unsigned n, unsigned r, unsigned q) {
  require_prime_power(q);
  Timer t;
  DegreeReport rep = degree_crosscheck(n, r, q);
  Json forms = Json::object();
  for (const auto& [name, value] : rep.closed_forms) forms[name] = to_decimal(value);
  Json j{{"n", rep.n},
         {"r", rep.r},
         {"q", rep.q},
         {"coefficient", to_decimal(rep.coefficient)},
         {"closed_form", to_decimal(rep.closed_forms.front().second)},
         {"closed_forms", std::move(forms)},
         {"match", rep.match}};
  if (g.timing) j["elapsed_ms"] = t.ms();
  emit(g, j);
  return rep.match ? 0 : 1;
}

int cmd_verify(const GlobalOpts& g, const std::string& grid) {
  SuiteGrid sg;
  if (grid == "default") {
    sg = SuiteGrid::default_grid();
  } else if (grid == "small") {
    sg = SuiteGrid::small_grid();
  } else if (grid == "empty") {
    sg = SuiteGrid::empty_grid();
  } else {
    throw ParseError("unknown grid: " + grid + " (use default|small|empty)");
  }
  Scorecard card = run_suite(sg, g.enum_opts());
  emit(g, scorecard_to_json(card, g.timing));
  if (!card.all_match()) return 1;
  if (card.budget_exhausted) return 3;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-bic forms and hypersurfaces over finite fields"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags are accepted after the subcommand too

  GlobalOpts g;
  app.add_option("--workers", g.workers, "worker threads for enumeration")
      ->capture_default_str();
  app.add_option("--budget", g.budget, "enumeration budget in subspace visits")
      ->capture_default_str();
  app.add_option("--output", g.output, "output format: json|table")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_flag("--timing", g.timing, "attach elapsed_ms to reports");

  // form
  auto* form = app.add_subcommand("form", "rank, kernels, smoothness, type");
  std::string form_mode = "info", form_file;
  form->add_option("mode", form_mode, "info|classify")
      ->check(CLI::IsMember({"info", "classify"}));
  form->add_option("--file", form_file, "form spec JSON file")->required();

  // count
  auto* count = app.add_subcommand("count", "fano / hermitian / filtration counts");
  std::string count_kind, count_file;
  std::optional<unsigned> count_r, count_k;
  unsigned count_s = 1;
  bool formula_only = false, enumerate_only = false;
  count->add_option("kind", count_kind, "fano|hermitian|filtration")
      ->required()
      ->check(CLI::IsMember({"fano", "hermitian", "filtration"}));
  count->add_option("--file", count_file, "form spec JSON file")->required();
  count->add_option("-r", count_r, "plane dimension r (fano)");
  count->add_option("-k", count_k, "plane / filtration index k");
  count->add_option("-s", count_s, "field extension exponent (counts over F_{q^2s})");
  count->add_flag("--formula-only", formula_only, "skip enumeration");
  count->add_flag("--enumerate-only", enumerate_only, "skip closed forms");

  // zeta
  auto* zeta = app.add_subcommand("zeta", "zeta factorizations on (1 - qbar^i t)");
  unsigned zeta_q = 2, zeta_points = 0;
  std::optional<unsigned> zeta_m, zeta_cox;
  zeta->add_option("--q", zeta_q, "prime power q")->required();
  zeta->add_option("--m", zeta_m, "Fano scheme of m-planes in a (2m+1)-fold");
  zeta->add_option("--cox", zeta_cox, "Coxeter stratum of dimension k");
  zeta->add_option("--points", zeta_points, "also print N_1..N_s");

  // betti
  auto* betti = app.add_subcommand("betti", "Betti numbers of the Fano scheme");
  unsigned betti_q = 2, betti_m = 1;
  betti->add_option("--q", betti_q, "prime power q")->required();
  betti->add_option("--m", betti_m, "half-dimension m")->required();

  // degree
  auto* degree = app.add_subcommand("degree", "Plucker degree via coefficient extraction");
  unsigned deg_n = 4, deg_r = 1, deg_q = 2;
  degree->add_option("--n", deg_n, "ambient projective dimension")->required();
  degree->add_option("--r", deg_r, "plane dimension")->required();
  degree->add_option("--q", deg_q, "prime power q")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "run the oracle scorecard");
  std::string grid = "default";
  verify->add_option("--grid", grid, "default|small|empty")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (form->parsed()) return cmd_form(g, form_mode, form_file);
    if (count->parsed()) {
      return cmd_count(g, count_kind, count_file, count_r, count_k, count_s,
                       formula_only, enumerate_only);
    }
    if (zeta->parsed()) return cmd_zeta(g, zeta_q, zeta_m, zeta_cox, zeta_points);
    if (betti->parsed()) return cmd_betti(g, betti_q, betti_m);
    if (degree->parsed()) return cmd_degree(g, deg_n, deg_r, deg_q);
    if (verify->parsed()) return cmd_verify(g, grid);
  } catch (const BudgetExceededError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
