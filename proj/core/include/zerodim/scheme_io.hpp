#ifndef ZERODIM_SCHEME_IO_HPP
#define ZERODIM_SCHEME_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "zerodim/cbp.hpp"
#include "zerodim/dedekind.hpp"

namespace zerodim {

// ordered_json keeps insertion order, so identical inputs serialize
// byte-identically and golden files stay diffable.
using Json = nlohmann::ordered_json;

Json field_to_json(const Field& f);
Field field_from_json(const Json& j);

// Scheme file schema:
//   { "field": "Q" | {"Fp": p},
//     "vars": n+1,
//     "mode": "components" | "raw",
//     "components": [ {"point": [1, a1, ...], "local_gens": ["poly", ...]} ],
//     "gens": ["poly", ...] }
// local_gens is optional (a reduced point without it); gens drives raw mode.
// Coordinates are integers or strings like "-3/4".
Scheme parse_scheme(const Json& j,
                    std::optional<Field> field_override = std::nullopt);
Scheme load_scheme(const std::string& path,
                   std::optional<Field> field_override = std::nullopt);
Json scheme_to_json(const Scheme& X);

// "0:1 1:3 2:6 3:8 4:9"
std::string hf_text(const std::vector<int>& hf);

Json to_json(const SchemeReport& rep);
Json to_json(const SeparatorSet& s);
Json to_json(const GeometricCheck& g);
Json to_json(const LinkageReport& rep);
Json to_json(const CorrespondenceCheck& c);
Json to_json(const CbpVerdict& v);
Json to_json(const CbpAgreement& a);
Json to_json(const CbpProfile& p);
Json to_json(const CbResult& r);
Json to_json(const DedekindReport& rep);
Json to_json(const DedekindChecks& ck);
Json to_json(const EnvelopeResult& e);

} // namespace zerodim

#endif
