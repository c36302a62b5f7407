#pragma once

// JSON file formats for algebras, modules and external facts.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "syzex/algebra.hpp"
#include "syzex/rep.hpp"

namespace syzex {

using Json = nlohmann::ordered_json;

AlgebraSpec algebra_spec_from_json(const Json& j);
Json to_json(const AlgebraSpec& spec);
/// Canonical text form: two-space indented JSON with a trailing newline.
std::string dump_spec(const AlgebraSpec& spec);

Representation module_from_json(const Json& j, const AlgebraPtr& a);
Json module_to_json(const Representation& m, const std::string& algebra_ref);

struct ExternalFact {
    std::string algebra;
    int i = 0;
    std::string kind;   // "exact", "lower" or "upper"
    int value = 0;
    std::string citation;
};

std::vector<ExternalFact> facts_from_json(const Json& j);
Json to_json(const ExternalFact& f);

Json read_json_file(const std::string& path);

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string fnv1a_hex(const std::string& data);

} // namespace syzex
