#pragma once

#include <string>

#include <json.hpp>

#include "mekr/compression.hpp"
#include "mekr/search.hpp"

namespace mekr {

/// Insertion-ordered JSON so serialized reports are byte-stable.
using Json = nlohmann::ordered_json;

Json multiset_to_json(const Multiset& f);  // element list, e.g. [1,1,3]
Multiset multiset_from_json(const Json& j, int m);

Json family_to_json(const Family& fam);  // [[1,1],[1,2]] in rank order
Family family_from_json(const Json& j, const Universe& u);

/// Number when it fits in 64 bits, otherwise a decimal string.
Json bigint_to_json(const BigInt& v);

Json form_to_json(const PairCanonicalForm& form);  // {"F": [...], "G": [...]}
Json report_to_json(const SearchReport& rep);
Json pipeline_to_json(const PipelineReport& rep);
/// The shift list only: [{i,s,j,changed_count,kernel_cells}, ...].
Json trace_to_json(const CompressionTrace& trace);

/// RFC-style CSV quoting (quotes applied only when needed).
std::string csv_escape(const std::string& field);

}  // namespace mekr
