#ifndef WHITEALG_JSON_IO_HPP
#define WHITEALG_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "whitealg/aut_group.hpp"
#include "whitealg/homotopy_model.hpp"
#include "whitealg/lie_element.hpp"
#include "whitealg/tensor_element.hpp"

namespace whitealg {

// All documents carry {"schema": "whitealg/1", "type": ...}; readers reject
// anything else with SchemaMismatch. ordered_json keeps key order stable so
// identical values dump to identical bytes.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaTag = "whitealg/1";

Json parse_json(const std::string& text);  // MalformedJson on bad input
std::string dump_json(const Json& j);      // canonical two-space dump

Json schedule_to_json(const GeneratorSchedule& s);
GeneratorSchedule schedule_from_json(const Json& j);

Json to_json(const LieElement& e);
LieElement lie_element_from_json(const Json& j);

Json to_json(const TensorElement& e);
TensorElement tensor_element_from_json(const Json& j);

struct RankTableDoc {
    std::string space;
    std::vector<RankTableRow> rows;
    bool operator==(const RankTableDoc&) const = default;
};
Json to_json(const RankTableDoc& t);
RankTableDoc rank_table_from_json(const Json& j);

Json to_json(const AutReport& r);
AutReport aut_report_from_json(const Json& j);

Json to_json(const ExactSequenceReport& r);
ExactSequenceReport exact_sequence_report_from_json(const Json& j);

Json to_json(const SntReport& r);
SntReport snt_report_from_json(const Json& j);

}  // namespace whitealg

#endif
