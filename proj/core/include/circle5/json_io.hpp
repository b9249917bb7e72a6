#pragma once

#include <initializer_list>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "circle5/numtheory.hpp"

namespace circle5 {

/// Insertion-ordered JSON: field order is part of the wire format.
using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits are emitted as JSON numbers, larger ones as
/// decimal strings.
Json bigint_to_json(const BigInt& n);

/// Accepts a JSON integer or a decimal string. `what` names the field in
/// error messages.
BigInt bigint_from_json(const Json& value, std::string_view what);

/// Nonnegative machine-size integer (ranks, indices, exponents).
std::size_t index_from_json(const Json& value, std::string_view what);

/// Rejects any key of `object` not listed in `allowed`, naming it.
void require_known_fields(const Json& object, std::string_view context,
                          std::initializer_list<std::string_view> allowed);

/// Fetches a required member, naming it in the error when absent.
const Json& require_field(const Json& object, std::string_view context,
                          std::string_view key);

}  // namespace circle5
