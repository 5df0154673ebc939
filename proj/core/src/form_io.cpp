#include "qbic/form_io.hpp"

#include <fstream>

namespace qbic {

namespace {

unsigned get_uint(const Json& j, const char* key, const char* where) {
  if (!j.contains(key) || !j[key].is_number_integer() ||
      j[key].get<long long>() < 0) {
    throw ParseError(std::string(where) + ": missing or invalid '" + key + "'");
  }
  return j[key].get<unsigned>();
}

}  // namespace

LoadedForm load_form(const Json& doc) {
  if (!doc.is_object()) throw ParseError("form spec must be a JSON object");
  if (!doc.contains("q") || !doc["q"].is_object()) {
    throw ParseError("form spec: missing 'q' object");
  }
  LoadedForm lf;
  unsigned p = get_uint(doc["q"], "p", "q");
  unsigned nu = get_uint(doc["q"], "nu", "q");
  if (nu < 1) throw ParseError("q: 'nu' must be >= 1");
  unsigned q = 1;
  for (unsigned i = 0; i < nu; ++i) q *= p;
  lf.q = q;
  lf.s = doc.contains("s") ? get_uint(doc, "s", "form spec") : 1;
  if (lf.s < 1) throw ParseError("'s' must be >= 1");

  if (doc.contains("field")) {
    const Json& fj = doc["field"];
    unsigned fp = get_uint(fj, "p", "field");
    unsigned fe = get_uint(fj, "e", "field");
    if (!fj.contains("modulus") || !fj["modulus"].is_array()) {
      throw ParseError("field: missing 'modulus' array");
    }
    std::vector<unsigned> mod;
    for (const auto& c : fj["modulus"]) mod.push_back(c.get<unsigned>());
    if (fp != p) throw ParseError("field characteristic does not match q");
    lf.field = std::make_shared<Field>(fp, fe, mod);
  } else {
    lf.field = std::make_shared<Field>(p, 2 * nu * lf.s);
  }
  // the field must be F_{q^(2s)}
  std::uint64_t want = 1;
  for (unsigned i = 0; i < 2 * nu * lf.s; ++i) want *= p;
  if (lf.field->order() != want) {
    throw ParseError("field order must equal q^(2s)");
  }

  const bool has_gram = doc.contains("gram");
  const bool has_preset = doc.contains("preset");
  if (has_gram == has_preset) {
    throw ParseError("form spec: exactly one of 'gram' or 'preset' is required");
  }

  if (has_gram) {
    const Json& gj = doc["gram"];
    if (!gj.is_array() || gj.empty()) throw ParseError("gram: must be a nonempty array");
    std::size_t dim = gj.size();
    Matrix g(*lf.field, dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (!gj[i].is_array() || gj[i].size() != dim) {
        throw ParseError("gram: row " + std::to_string(i) + " is ragged");
      }
      for (std::size_t j = 0; j < dim; ++j) {
        std::uint64_t v = gj[i][j].get<std::uint64_t>();
        if (v >= lf.field->order()) {
          throw ParseError("gram: entry (" + std::to_string(i) + "," +
                           std::to_string(j) + ") exceeds the field order");
        }
        g.at(i, j) = static_cast<Fe>(v);
      }
    }
    lf.form = std::make_shared<QBicForm>(*lf.field, q, std::move(g));
  } else {
    const Json& pj = doc["preset"];
    if (pj.contains("fermat")) {
      unsigned n = get_uint(pj["fermat"], "n", "preset.fermat");
      lf.form = std::make_shared<QBicForm>(
          QBicForm::fermat(*lf.field, q, n + 1));
    } else if (pj.contains("type")) {
      const Json& tj = pj["type"];
      FormType t;
      t.a = get_uint(tj, "a", "preset.type");
      if (tj.contains("b")) {
        if (!tj["b"].is_object()) throw ParseError("preset.type: 'b' must be an object");
        for (const auto& [k, v] : tj["b"].items()) {
          unsigned m = static_cast<unsigned>(std::stoul(k));
          unsigned b = v.get<unsigned>();
          if (m < 1) throw ParseError("preset.type: block size must be >= 1");
          if (b > 0) t.blocks[m] = b;
        }
      }
      if (t.dimension() == 0) throw ParseError("preset.type: dimension 0");
      lf.form = std::make_shared<QBicForm>(QBicForm::from_type(*lf.field, q, t));
    } else {
      throw ParseError("preset: expected 'fermat' or 'type'");
    }
  }
  return lf;
}

LoadedForm load_form_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open form file: " + path);
  Json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return load_form(doc);
}

Json field_to_json(const Field& f) {
  return Json{{"p", f.characteristic()},
              {"e", f.degree()},
              {"modulus", f.modulus()}};
}

Json form_to_json(const LoadedForm& lf) {
  unsigned p = lf.field->characteristic();
  unsigned nu = 0, t = lf.q;
  while (t > 1) {
    t /= p;
    ++nu;
  }
  Json gram = Json::array();
  const Matrix& g = lf.form->gram();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < g.cols(); ++j) row.push_back(g.at(i, j));
    gram.push_back(std::move(row));
  }
  return Json{{"q", {{"p", p}, {"nu", nu}}},
              {"s", lf.s},
              {"field", field_to_json(*lf.field)},
              {"gram", std::move(gram)}};
}

Json subspace_to_json(const Subspace& s) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < s.ambient_dim(); ++j) row.push_back(s.basis().at(i, j));
    rows.push_back(std::move(row));
  }
  return Json{{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", rows}};
}

Json profile_to_json(const FormProfile& p) {
  Json j{{"dim", p.dim},
         {"rank", p.rank},
         {"corank", p.corank},
         {"radical_dim", p.radical_dim},
         {"right_chain", p.right_chain},
         {"left_chain", p.left_chain}};
  if (p.type) {
    j["type"] = p.type->str();
  } else {
    Json ms = Json::array();
    for (const auto& m : p.matches) ms.push_back(m.str());
    j["ambiguous"] = true;
    j["matches"] = std::move(ms);
  }
  return j;
}

Json betti_to_json(const BettiTable& t) {
  Json b = Json::array();
  for (const auto& x : t.b) b.push_back(to_decimal(x));
  return Json{{"m", t.m}, {"b", std::move(b)}};
}

Json zeta_to_json(const ZetaFactorization& z) {
  Json factors = Json::array();
  for (const auto& [i, e] : z.sorted_factors()) {
    factors.push_back(Json::array({i, to_decimal(e)}));
  }
  return Json{{"q", z.q()}, {"factors", std::move(factors)}};
}

Json scorecard_to_json(const Scorecard& s, bool with_timing) {
  Json cases = Json::array();
  for (const auto& c : s.cases) {
    Json cj{{"name", c.name},
            {"params", c.params},
            {"formula", c.formula},
            {"oracle", c.oracle},
            {"match", c.match},
            {"skipped", c.skipped}};
    if (with_timing) cj["elapsed_ms"] = c.elapsed_ms;
    cases.push_back(std::move(cj));
  }
  return Json{{"cases", std::move(cases)},
              {"all_match", s.all_match()},
              {"budget_exhausted", s.budget_exhausted}};
}

Json orbit_report_to_json(const OrbitReport& r) {
  return Json{{"dim", r.dim},
              {"matrices", r.matrices},
              {"rational_orbits", r.rational_orbits},
              {"expected_types", r.expected_types},
              {"realized_types", r.realized_types},
              {"constant_on_orbits", r.constant_on_orbits},
              {"unambiguous", r.unambiguous},
              {"normal_forms_covered", r.normal_forms_covered},
              {"ok", r.ok()}};
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qbic
