#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "foxh/existence.hpp"
#include "foxh/oracle.hpp"
#include "foxh/params.hpp"
#include "foxh/poles.hpp"
#include "foxh/series.hpp"

namespace foxh {

using ordered_json = nlohmann::ordered_json;

/// Parameter document:
///   {"m":1,"n":0,"p":0,"q":1,"upper":[[re,im,alpha],...],"lower":[[re,im,beta],...],
///    "rational":{"upper_re":["p/q",...],"lower_re":[...],"upper_alpha":[...],"lower_beta":[...]}}
/// Every "rational" array is optional; null entries are skipped.
/// Throws Error{ParseError}; the result still needs validate().
RawParams params_from_json(const nlohmann::json& doc);
RawParams parse_params_json(std::string_view text);

ordered_json to_json(cplx z);  // [re, im]; non-finite parts become null
ordered_json to_json(const HParams& params);
ordered_json to_json(const Invariants& inv);
ordered_json to_json(const ExistenceVerdict& v);
ordered_json to_json(const Pole& pole);
ordered_json to_json(const PoleStructure& ps);
ordered_json to_json(const SeriesExpansion& e);
ordered_json to_json(const EvalReport& r);
ordered_json to_json(const AsymptoticTerm& t);
ordered_json to_json(const QuadratureResult& q);
ordered_json to_json(const ScriptHEstimate& e);
ordered_json error_json(const Error& e);

/// Compact serialization with every float printed as %.17g, keys in insertion order.
std::string dump_json(const ordered_json& j);

}  // namespace foxh
