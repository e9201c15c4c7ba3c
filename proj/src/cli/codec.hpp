#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qadm/divcalc.hpp"
#include "qadm/singularity.hpp"
#include "qadm/stablered.hpp"
#include "qadm/trees.hpp"

namespace qadm::cli {

using Json = nlohmann::ordered_json;

// Parses JSON text, mapping syntax errors to ParseError with a byte offset.
Json parse_json(const std::string& text);
// Reads a file and parses it.
Json read_json_file(const std::string& path);

Json encode(const Rational& r);
Json encode(const MPoly& p);
Json encode(SingType t);
Json encode(const VersalFamily& f);
Json encode(const TypeBounds& b);
Json encode(const MarkedTree& t);
Json encode(const StabilityReport& r);
Json encode(const StratumLabel& l);
Json encode(const DivClass& d);
Json encode(const HDivisor& h);
Json encode(const WeightAssignment& w);
Json encode(const TailFamily& t);
Json encode(const AStableReduction& r);
Json encode(const DStableReduction& r);

SingType decode_type(const std::string& kind, int index);
VersalFamily decode_versal(const Json& j);
// Throws InvalidTree on schema violations.
MarkedTree decode_tree(const Json& j);
DivClass decode_divclass(const Json& j);
HDivisor decode_hdivisor(const Json& j, bool pointed);

// "name=value,name=value" lists.
std::map<std::string, std::string> parse_bindings(const std::string& text);
std::map<std::string, Rational> parse_rational_bindings(const std::string& text);
std::vector<Rational> parse_rational_list(const std::string& text);
std::vector<std::int64_t> parse_int_list(const std::string& text);

}  // namespace qadm::cli
