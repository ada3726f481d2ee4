#pragma once
#include <string>

#include <json.hpp>

#include "cgs/classgroup.hpp"
#include "cgs/factorbase.hpp"
#include "cgs/ideal.hpp"
#include "cgs/numfield.hpp"
#include "cgs/params.hpp"
#include "cgs/pip.hpp"
#include "cgs/sieve.hpp"

namespace cgs::io {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path);
/// Writes through a temporary file and a rename so readers never see a
/// partial file.
void write_file(const std::string& path, const std::string& content);

/// Integers as JSON numbers when they fit in 64 bits, else decimal strings.
Json integer_json(const Integer& v);
Integer integer_from_json(const Json& j);

/// {"T": [c0, ..., 1], "label": "..."}. Malformed input throws ParseError;
/// field validation errors propagate unchanged.
NumberField parse_field(const std::string& text);
Json field_json(const NumberField& field);

/// JSON lines: a header carrying the factor-base hash, T, the sieve region,
/// the resume index and the counters, then one relation per line.
std::string relation_db(const NumberField& field, const FactorBase& fb, const RelationSet& rels);
/// Throws HashMismatch when the header does not match `fb` or the field.
RelationSet parse_relation_db(const std::string& text, const NumberField& field, const FactorBase& fb);

Json class_group_json(const ClassGroupResult& r);

/// {"generators": [[...], ...]} or {"hnf": [[...], ...]}.
IdealHNF parse_ideal(const std::string& text, const NumberField& field);

Json witness_json(const GeneratorWitness& w);

Json descriptor_json(const ClassDescriptor& d);

}  // namespace cgs::io
