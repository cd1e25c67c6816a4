#include "kwss/json_io.hpp"

#include "kwss/error.hpp"

namespace kwss::json_io {

namespace {

Integer decode_integer(const json& j) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) {
        throw InvalidArgument("json: not a decimal integer: " + j.dump());
    }
    return v;
}

wss::Criterion decode_criterion(const json& j) {
    const auto c = wss::parse_criterion(j.get<std::string>());
    if (!c) throw InvalidArgument("json: unknown criterion " + j.dump());
    return *c;
}

}  // namespace

json encode(const wss::WssClassification& c) {
    return json{
        {"k", c.k},
        {"p", c.p},
        {"delta", c.delta},
        {"delta_applicable", c.delta_applicable},
        {"pi_p", c.pi_p},
        {"pi_p2", c.pi_p2},
        {"by_period", c.by_period},
        {"by_entry", c.by_entry},
        {"by_alpha", c.by_alpha},
        {"by_monogenic", c.by_monogenic},
        {"derived_criteria", c.entry_alpha_derived},
        {"consistent", c.consistent},
        {"is_wss", c.is_wss()},
    };
}

wss::WssClassification decode_classification(const json& j) {
    wss::WssClassification c;
    c.k = j.at("k").get<std::uint64_t>();
    c.p = j.at("p").get<std::uint64_t>();
    c.delta = j.at("delta").get<int>();
    c.delta_applicable = j.at("delta_applicable").get<bool>();
    c.pi_p = j.at("pi_p").get<std::uint64_t>();
    c.pi_p2 = j.at("pi_p2").get<std::uint64_t>();
    c.by_period = j.at("by_period").get<bool>();
    c.by_entry = j.at("by_entry").get<bool>();
    c.by_alpha = j.at("by_alpha").get<bool>();
    c.by_monogenic = j.at("by_monogenic").get<bool>();
    c.entry_alpha_derived = j.at("derived_criteria").get<bool>();
    c.consistent = j.at("consistent").get<bool>();
    return c;
}

json encode(const trinomial::Trinomial& t) {
    return json{{"N", t.n()},
                {"M", t.m()},
                {"A", t.a().get_str()},
                {"B", t.b().get_str()},
                {"text", t.to_string()}};
}

trinomial::Trinomial decode_trinomial(const json& j) {
    return trinomial::Trinomial(j.at("N").get<std::uint64_t>(), j.at("M").get<std::uint64_t>(),
                                decode_integer(j.at("A")), decode_integer(j.at("B")));
}

json encode(const trinomial::IndexVerdict& v) {
    return json{{"q", v.q.get_str()},
                {"divides_index", v.divides_index},
                {"item", v.item_used},
                {"detail", v.detail}};
}

trinomial::IndexVerdict decode_verdict(const json& j) {
    return {decode_integer(j.at("q")), j.at("divides_index").get<bool>(),
            j.at("item").get<int>(), j.at("detail").get<std::string>()};
}

json encode(const trinomial::MonogenicityReport& r) {
    json verdicts = json::array();
    for (const auto& v : r.verdicts) verdicts.push_back(encode(v));
    return json{{"trinomial", encode(r.trinomial)},
                {"discriminant", r.discriminant.get_str()},
                {"verdicts", std::move(verdicts)},
                {"monogenic", r.monogenic}};
}

trinomial::MonogenicityReport decode_report(const json& j) {
    trinomial::MonogenicityReport r{decode_trinomial(j.at("trinomial")),
                                    decode_integer(j.at("discriminant")),
                                    {},
                                    j.at("monogenic").get<bool>()};
    for (const auto& v : j.at("verdicts")) r.verdicts.push_back(decode_verdict(v));
    return r;
}

json encode(const wss::SearchResult& r) {
    json hits = json::array();
    for (const auto& h : r.hits) {
        json e{{"k", h.k},
               {"p", h.p},
               {"pi_p", h.pi_p},
               {"pi_p2", h.pi_p2},
               {"basis", std::string(wss::to_string(h.basis))}};
        if (h.classification) e["classification"] = encode(*h.classification);
        hits.push_back(std::move(e));
    }
    json skipped = json::array();
    for (const auto& s : r.skipped) skipped.push_back(json{{"k", s.k}, {"reason", s.reason}});
    return json{{"criterion", std::string(wss::to_string(r.criterion))},
                {"hits", std::move(hits)},
                {"skipped", std::move(skipped)},
                {"cells_evaluated", r.cells_evaluated}};
}

wss::SearchResult decode_search(const json& j) {
    wss::SearchResult r;
    r.criterion = decode_criterion(j.at("criterion"));
    for (const auto& e : j.at("hits")) {
        wss::SearchHit h;
        h.k = e.at("k").get<std::uint64_t>();
        h.p = e.at("p").get<std::uint64_t>();
        h.pi_p = e.at("pi_p").get<std::uint64_t>();
        h.pi_p2 = e.at("pi_p2").get<std::uint64_t>();
        h.basis = decode_criterion(e.at("basis"));
        if (e.contains("classification")) {
            h.classification = decode_classification(e.at("classification"));
        }
        r.hits.push_back(std::move(h));
    }
    for (const auto& s : j.at("skipped")) {
        r.skipped.push_back({s.at("k").get<std::uint64_t>(), s.at("reason").get<std::string>()});
    }
    r.cells_evaluated = j.at("cells_evaluated").get<std::uint64_t>();
    return r;
}

json output_record(const std::string& command, json inputs, json result, double timing_ms) {
    return json{{"schema_version", kSchemaVersion},
                {"command", command},
                {"inputs", std::move(inputs)},
                {"result", std::move(result)},
                {"timing_ms", timing_ms}};
}

}  // namespace kwss::json_io
