#pragma once

// JSON encoding of the result payloads printed by the CLI. Big integers are
// encoded as decimal strings; every encoder has a matching decoder and
// decode(encode(x)) == x.

#include <json.hpp>

#include "kwss/search.hpp"
#include "kwss/trinomial.hpp"
#include "kwss/wss.hpp"

namespace kwss::json_io {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

json encode(const wss::WssClassification& c);
wss::WssClassification decode_classification(const json& j);

json encode(const trinomial::Trinomial& t);
trinomial::Trinomial decode_trinomial(const json& j);

json encode(const trinomial::IndexVerdict& v);
trinomial::IndexVerdict decode_verdict(const json& j);

json encode(const trinomial::MonogenicityReport& r);
trinomial::MonogenicityReport decode_report(const json& j);

json encode(const wss::SearchResult& r);
wss::SearchResult decode_search(const json& j);

/// The top-level record {schema_version, command, inputs, result, timing_ms}.
json output_record(const std::string& command, json inputs, json result, double timing_ms);

}  // namespace kwss::json_io
