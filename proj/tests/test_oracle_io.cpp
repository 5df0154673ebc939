#include <doctest.h>

#include "qbic/form_io.hpp"
#include "qbic/oracle.hpp"

using namespace qbic;

TEST_CASE("orbit oracle, dimensions 1 and 2") {
  Field f4(2, 2);

  OrbitReport r1 = orbit_oracle(f4, 2, 1);
  CHECK(r1.matrices == 4);
  CHECK(r1.expected_types == 2);
  CHECK(r1.realized_types == 2);
  CHECK(r1.constant_on_orbits);
  CHECK(r1.unambiguous);
  CHECK(r1.normal_forms_covered);
  CHECK(r1.ok());
  // rational congruence is finer than the geometric classification: the
  // scaling norm c -> c^3 is trivial on F_4^*, so nonzero scalars split
  CHECK(r1.rational_orbits == 4);

  OrbitReport r2 = orbit_oracle(f4, 2, 2);
  CHECK(r2.matrices == 256);
  CHECK(r2.expected_types == 4);
  CHECK(r2.realized_types == 4);
  CHECK(r2.rational_orbits == 14);
  CHECK(r2.ok());

  CHECK_THROWS_AS(orbit_oracle(f4, 2, 3, /*matmul_budget=*/1000),
                  BudgetExceededError);
}

TEST_CASE("type inventory per dimension") {
  CHECK(all_form_types(1).size() == 2);
  CHECK(all_form_types(2).size() == 4);
  CHECK(all_form_types(3).size() == 7);
  CHECK(all_form_types(4).size() == 12);
}

TEST_CASE("run_suite on the small grid is green and covers the registry") {
  Scorecard card = run_suite(SuiteGrid::small_grid());
  CHECK(card.all_match());
  CHECK_FALSE(card.budget_exhausted);
  for (const auto& name : formula_registry()) {
    bool covered = false;
    for (const auto& c : card.cases) {
      if (c.name.find(name) != std::string::npos && !c.name.starts_with("coverage/")) {
        covered = true;
        break;
      }
    }
    CHECK_MESSAGE(covered, "registry entry not covered: ", name);
  }
}

TEST_CASE("run_suite on the empty grid yields an empty scorecard") {
  Scorecard card = run_suite(SuiteGrid::empty_grid());
  CHECK(card.cases.empty());
  CHECK(card.all_match());
  CHECK_FALSE(card.budget_exhausted);
}

TEST_CASE("suite reports budget exhaustion as skipped cases") {
  EnumerationOptions tiny{1, 50};
  Scorecard card = run_suite(SuiteGrid::small_grid(), tiny);
  CHECK(card.budget_exhausted);
  bool any_skipped = false;
  for (const auto& c : card.cases) any_skipped |= c.skipped;
  CHECK(any_skipped);
}

TEST_CASE("form spec parsing: presets") {
  Json doc = {{"q", {{"p", 2}, {"nu", 1}}},
              {"s", 1},
              {"preset", {{"fermat", {{"n", 3}}}}}};
  LoadedForm lf = load_form(doc);
  CHECK(lf.q == 2);
  CHECK(lf.form->dim() == 4);
  CHECK(lf.form->is_smooth());
  CHECK(lf.field->order() == 4);

  Json tdoc = {{"q", {{"p", 2}, {"nu", 1}}},
               {"preset", {{"type", {{"a", 1}, {"b", {{"2", 1}}}}}}}};
  LoadedForm lt = load_form(tdoc);
  CHECK(lt.form->dim() == 3);
  CHECK(lt.form->gram().at(1, 2) == 1);
}

TEST_CASE("form spec parsing: explicit gram and errors") {
  Json doc = {{"q", {{"p", 2}, {"nu", 1}}},
              {"gram", {{1, 0}, {0, 1}}}};
  LoadedForm lf = load_form(doc);
  CHECK(lf.form->dim() == 2);
  CHECK(lf.form->gram() == Matrix::identity(*lf.field, 2));

  // ragged rows
  Json ragged = {{"q", {{"p", 2}, {"nu", 1}}}, {"gram", {{1, 0}, {0}}}};
  CHECK_THROWS_AS(load_form(ragged), ParseError);

  // both gram and preset
  Json both = {{"q", {{"p", 2}, {"nu", 1}}},
               {"gram", {{1}}},
               {"preset", {{"fermat", {{"n", 1}}}}}};
  CHECK_THROWS_AS(load_form(both), ParseError);

  // entry out of field range
  Json big = {{"q", {{"p", 2}, {"nu", 1}}}, {"gram", {{9, 0}, {0, 1}}}};
  CHECK_THROWS_AS(load_form(big), ParseError);

  // field override of the wrong order
  Json wrongfield = {{"q", {{"p", 2}, {"nu", 1}}},
                     {"s", 2},
                     {"field", {{"p", 2}, {"e", 2}, {"modulus", {1, 1, 1}}}},
                     {"gram", {{1}}}};
  CHECK_THROWS_AS(load_form(wrongfield), ParseError);
}

TEST_CASE("round trip: form -> json -> form") {
  Json doc = {{"q", {{"p", 2}, {"nu", 1}}},
              {"s", 1},
              {"preset", {{"fermat", {{"n", 2}}}}}};
  LoadedForm lf = load_form(doc);
  Json out = form_to_json(lf);
  LoadedForm back = load_form(out);
  CHECK(back.form->gram() == lf.form->gram());
  CHECK(back.q == lf.q);
  CHECK(*back.field == *lf.field);
}

TEST_CASE("serialization is deterministic") {
  Json doc = {{"q", {{"p", 3}, {"nu", 1}}},
              {"preset", {{"fermat", {{"n", 2}}}}}};
  std::string a = dump_json(form_to_json(load_form(doc)));
  std::string b = dump_json(form_to_json(load_form(doc)));
  CHECK(a == b);
  CHECK(a.find("\"gram\"") != std::string::npos);
}

TEST_CASE("scorecard serialization hides timing by default") {
  Scorecard card = run_suite(SuiteGrid::empty_grid());
  Json j = scorecard_to_json(card, false);
  CHECK(j.contains("all_match"));
  for (const auto& c : j["cases"]) CHECK_FALSE(c.contains("elapsed_ms"));
  Json jt = scorecard_to_json(card, true);
  for (const auto& c : jt["cases"]) CHECK(c.contains("elapsed_ms"));
}
