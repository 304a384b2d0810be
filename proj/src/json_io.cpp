#include "whitealg/json_io.hpp"

namespace whitealg {

namespace {

Json envelope(const char* type) {
    Json j;
    j["schema"] = kSchemaTag;
    j["type"] = type;
    return j;
}

void check_envelope(const Json& j, const char* type) {
    if (!j.is_object() || !j.contains("schema") || !j.contains("type"))
        fail(Errc::SchemaMismatch, "document lacks schema/type fields");
    if (j["schema"] != kSchemaTag)
        fail(Errc::SchemaMismatch, "expected schema '" + std::string(kSchemaTag) + "'");
    if (j["type"] != type)
        fail(Errc::SchemaMismatch, "expected type '" + std::string(type) + "', got '" +
                                       j["type"].get<std::string>() + "'");
}

Word word_from_json(const Json& j) {
    Word w;
    for (const auto& x : j) w.push_back(x.get<int>());
    return w;
}

template <class Element>
Json element_terms_to_json(const Element& e) {
    Json terms = Json::array();
    for (const auto& [key, c] : e.terms()) {
        Json t;
        t["word"] = key.word;
        t["coeff"] = rat_to_string(c);
        terms.push_back(std::move(t));
    }
    return terms;
}

}  // namespace

Json parse_json(const std::string& text) {
    Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) fail(Errc::MalformedJson, "input is not valid JSON");
    return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json schedule_to_json(const GeneratorSchedule& s) {
    Json j;
    j["family"] = family_name(s.family());
    if (s.family() == Family::Custom) {
        Json degrees = Json::array();
        for (int i = 1; i <= s.size(); ++i) degrees.push_back(s.samelson_degree(i));
        j["samelson_degrees"] = std::move(degrees);
    } else {
        j["generators"] = s.size();
    }
    j["degree_cap"] = s.degree_cap();
    return j;
}

GeneratorSchedule schedule_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("family"))
        fail(Errc::SchemaMismatch, "schedule needs a family");
    Family f = family_from_name(j["family"].get<std::string>());
    int cap = j.value("degree_cap", kDefaultDegreeCap);
    if (f == Family::Custom) {
        if (!j.contains("samelson_degrees"))
            fail(Errc::SchemaMismatch, "custom schedule needs samelson_degrees");
        std::vector<int> degrees;
        for (const auto& d : j["samelson_degrees"]) degrees.push_back(d.get<int>());
        return GeneratorSchedule::custom(degrees, cap);
    }
    int count = (f == Family::RP) ? 0 : j.value("generators", 0);
    return make_schedule(f, count, cap);
}

Json to_json(const LieElement& e) {
    Json j = envelope("lie_element");
    j["schedule"] = schedule_to_json(e.schedule());
    j["terms"] = element_terms_to_json(e);
    return j;
}

LieElement lie_element_from_json(const Json& j) {
    check_envelope(j, "lie_element");
    GeneratorSchedule s = schedule_from_json(j.at("schedule"));
    LieElement e(s);
    for (const auto& t : j.at("terms"))
        e.add_term(word_from_json(t.at("word")), rat_from_string(t.at("coeff").get<std::string>()));
    return e;
}

Json to_json(const TensorElement& e) {
    Json j = envelope("tensor_element");
    j["schedule"] = schedule_to_json(e.schedule());
    j["terms"] = element_terms_to_json(e);
    return j;
}

TensorElement tensor_element_from_json(const Json& j) {
    check_envelope(j, "tensor_element");
    GeneratorSchedule s = schedule_from_json(j.at("schedule"));
    TensorElement e(s);
    for (const auto& t : j.at("terms"))
        e.add_term(word_from_json(t.at("word")), rat_from_string(t.at("coeff").get<std::string>()));
    return e;
}

Json to_json(const RankTableDoc& t) {
    Json j = envelope("rank_table");
    j["space"] = t.space;
    Json rows = Json::array();
    for (const RankTableRow& row : t.rows) {
        Json r;
        r["whitehead_dim"] = row.whitehead_dim;
        r["rank"] = row.rank;
        r["basis"] = row.basis_expressions;
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

RankTableDoc rank_table_from_json(const Json& j) {
    check_envelope(j, "rank_table");
    RankTableDoc t;
    t.space = j.at("space").get<std::string>();
    for (const auto& r : j.at("rows")) {
        RankTableRow row;
        row.whitehead_dim = r.at("whitehead_dim").get<int>();
        row.rank = r.at("rank").get<int>();
        for (const auto& b : r.at("basis")) row.basis_expressions.push_back(b.get<std::string>());
        t.rows.push_back(std::move(row));
    }
    return t;
}

Json to_json(const AutReport& r) {
    Json j = envelope("aut_report");
    j["is_finite"] = r.is_finite;
    if (r.order)
        j["order"] = *r.order;
    else
        j["order"] = nullptr;
    j["is_abelian"] = r.is_abelian;
    j["unipotent_rank"] = r.unipotent_rank;
    if (r.shape.empty())
        j["shape"] = nullptr;
    else
        j["shape"] = r.shape;
    Json w;
    if (r.infinite_witness) {
        Json iw;
        iw["morphism"] = r.infinite_witness->morphism;
        iw["witness_element"] = r.infinite_witness->witness_element;
        iw["orbit_delta"] = r.infinite_witness->orbit_delta;
        w["infinite_order"] = std::move(iw);
    } else {
        w["infinite_order"] = nullptr;
    }
    if (r.noncommuting) {
        Json nc;
        nc["f"] = r.noncommuting->f;
        nc["g"] = r.noncommuting->g;
        nc["on_generator"] = r.noncommuting->on_generator;
        nc["fg_image"] = r.noncommuting->fg_image;
        nc["gf_image"] = r.noncommuting->gf_image;
        nc["discrepancy"] = r.noncommuting->discrepancy;
        w["noncommuting"] = std::move(nc);
    } else {
        w["noncommuting"] = nullptr;
    }
    j["witnesses"] = std::move(w);
    return j;
}

AutReport aut_report_from_json(const Json& j) {
    check_envelope(j, "aut_report");
    AutReport r;
    r.is_finite = j.at("is_finite").get<bool>();
    if (!j.at("order").is_null()) r.order = j.at("order").get<long long>();
    r.is_abelian = j.at("is_abelian").get<bool>();
    r.unipotent_rank = j.at("unipotent_rank").get<int>();
    if (!j.at("shape").is_null()) r.shape = j.at("shape").get<std::string>();
    const Json& w = j.at("witnesses");
    if (!w.at("infinite_order").is_null()) {
        const Json& iw = w.at("infinite_order");
        r.infinite_witness = InfiniteOrderWitness{iw.at("morphism").get<std::string>(),
                                                  iw.at("witness_element").get<std::string>(),
                                                  iw.at("orbit_delta").get<std::string>()};
    }
    if (!w.at("noncommuting").is_null()) {
        const Json& nc = w.at("noncommuting");
        r.noncommuting = NoncommutingPairWitness{
            nc.at("f").get<std::string>(),         nc.at("g").get<std::string>(),
            nc.at("on_generator").get<std::string>(), nc.at("fg_image").get<std::string>(),
            nc.at("gf_image").get<std::string>(),  nc.at("discrepancy").get<std::string>()};
    }
    return r;
}

Json to_json(const ExactSequenceReport& r) {
    Json j = envelope("exact_sequence_report");
    j["n"] = r.n;
    j["kernel_rank"] = r.kernel_rank;
    Json checks = Json::array();
    for (const ExactSequenceCheck& c : r.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        cj["detail"] = c.detail;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    j["all_pass"] = r.all_pass;
    return j;
}

ExactSequenceReport exact_sequence_report_from_json(const Json& j) {
    check_envelope(j, "exact_sequence_report");
    ExactSequenceReport r;
    r.n = j.at("n").get<int>();
    r.kernel_rank = j.at("kernel_rank").get<int>();
    for (const auto& cj : j.at("checks"))
        r.checks.push_back({cj.at("name").get<std::string>(), cj.at("pass").get<bool>(),
                            cj.at("detail").get<std::string>()});
    r.all_pass = j.at("all_pass").get<bool>();
    return r;
}

Json to_json(const SntReport& r) {
    Json j = envelope("snt_report");
    j["truncate"] = r.top_index;
    Json layers = Json::array();
    for (const SntLayerReport& layer : r.layers) {
        Json lj;
        lj["n"] = layer.n;
        Json alphas = Json::array();
        for (const auto& [expr, alpha] : layer.alphas) {
            Json a = Json::array();
            a.push_back(expr);
            a.push_back(alpha);
            alphas.push_back(std::move(a));
        }
        lj["alphas"] = std::move(alphas);
        lj["index"] = layer.index;
        lj["covered"] = layer.covered;
        layers.push_back(std::move(lj));
    }
    j["layers"] = std::move(layers);
    j["total_index"] = r.total_index;
    j["cokernel_finite"] = r.cokernel_finite;
    return j;
}

SntReport snt_report_from_json(const Json& j) {
    check_envelope(j, "snt_report");
    SntReport r;
    r.top_index = j.at("truncate").get<int>();
    for (const auto& lj : j.at("layers")) {
        SntLayerReport layer;
        layer.n = lj.at("n").get<int>();
        for (const auto& a : lj.at("alphas"))
            layer.alphas.emplace_back(a.at(0).get<std::string>(), a.at(1).get<std::string>());
        layer.index = lj.at("index").get<std::string>();
        layer.covered = lj.at("covered").get<bool>();
        r.layers.push_back(std::move(layer));
    }
    r.total_index = j.at("total_index").get<std::string>();
    r.cokernel_finite = j.at("cokernel_finite").get<bool>();
    return r;
}

}  // namespace whitealg
