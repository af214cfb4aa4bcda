#pragma once

#include <string>

#include "json.hpp"

#include "a4diff/oracle.hpp"
#include "a4diff/repbuilder.hpp"

namespace a4diff {

using json = nlohmann::ordered_json;

// Field: {"m": int, "modulus": [bits, low to high]}.
json field_json(const Field& F);
// Accepts a bit list, a decimal or 0x-prefixed mask.
std::uint64_t parse_modulus(const std::string& text);

// alpha as {"num": [masks], "den": [masks]} (coefficients low to high) and/or
// {"terms": [[exponent, mask], ...]}; the parts are added.
RatFunc alpha_from_json(const Field& F, const json& j);
json alpha_json(const RatFunc& f);

json matrix_json(const Matrix& M);
json label_json(const Label& l);
json decomposition_json(const Decomposition& d);
// `trunc` Laurent coefficients of the reduced alpha are listed per branch point.
json ram_json(const Field& F, const RamData& data, int trunc);
json global_rep_json(const Field& F, const GlobalRep& g);

// Label from its machine-readable name (the grammar of Label::name()).
Label parse_label(const std::string& text);

struct Verification {
    bool pass = false;
    std::string error;
    int dim = 0;
    Decomposition expected_kG, found_kG, expected_kH, found_kH;
    MultiplicitySolution solution;  // kG side
};

// build_global_rep, then decompose_rep on the module and on its restriction to H.
Verification verify_datum(const RamData& data);
json verification_json(const Verification& v);

}  // namespace a4diff
