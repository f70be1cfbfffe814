#ifndef HOOPWORK_JSON_IO_HPP
#define HOOPWORK_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "hoopwork/algebra.hpp"
#include "hoopwork/classify.hpp"
#include "hoopwork/filters.hpp"

namespace hoopwork {

using ordered_json = nlohmann::ordered_json;

// Builds a finite algebra from the table format:
//   { "carrier": [names...], "signature": "full"|"zero-free",
//     "mul": [[...]], "imp": [[...]], "meet": [[...]], "join": [[...]],
//     "one": name, "zero": name }
// Tables are row major over the carrier order and must be total and
// closed. Residuation is checked exhaustively; any violation raises
// DomainError with the offending triple. Small carriers additionally get
// their class labels established and attached as certificates.
AlgebraPtr algebra_from_json(const ordered_json& j, const std::string& origin);

// algebra_from_json applied to the contents of a file; the algebra is
// named after the file stem.
AlgebraPtr load_algebra(const std::string& path);

// Finite algebras serialize to the table format above; symbolic ones to
// { "builder": name, "certificates": [...] }.
ordered_json algebra_to_json(const Algebra& alg);

ordered_json report_to_json(const CheckReport& r);
ordered_json classify_to_json(const Algebra& alg, const ClassifyReport& r);
ordered_json filter_to_json(const Filter& f);
ordered_json congruence_to_json(const Congruence& c);

}  // namespace hoopwork

#endif
