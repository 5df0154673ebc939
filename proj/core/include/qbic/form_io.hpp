#pragma once

#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "qbic/oracle.hpp"
#include "qbic/qbic_form.hpp"
#include "qbic/zeta.hpp"

namespace qbic {

using Json = nlohmann::json;

/**
 * A parsed form description. Accepted document shape:
 *
 *   { "q": {"p": 2, "nu": 1}, "s": 1,
 *     "gram": [[...element indices...]],        // exactly one of gram /
 *     "preset": {"fermat": {"n": 3}}            // preset is present
 *              | {"type": {"a": 1, "b": {"2": 1}}},
 *     "field": {"p": 2, "e": 2, "modulus": [1,1,1]}   // optional override
 *   }
 *
 * The coefficient field defaults to the degree-2*nu*s extension of GF(p)
 * with the deterministic smallest modulus.
 */
struct LoadedForm {
  std::shared_ptr<Field> field;
  std::shared_ptr<QBicForm> form;  // references *field
  unsigned q = 0;
  unsigned s = 1;
};

LoadedForm load_form(const Json& doc);
LoadedForm load_form_file(const std::string& path);

Json field_to_json(const Field& f);
Json form_to_json(const LoadedForm& lf);
Json subspace_to_json(const Subspace& s);

Json profile_to_json(const FormProfile& p);
Json betti_to_json(const BettiTable& t);
Json zeta_to_json(const ZetaFactorization& z);
Json scorecard_to_json(const Scorecard& s, bool with_timing);
Json orbit_report_to_json(const OrbitReport& r);

/// Canonical serialization: sorted keys, no whitespace surprises, counts as
/// decimal strings. Identical inputs produce byte-identical output.
std::string dump_json(const Json& j);

}  // namespace qbic
