#include "circle5/json_io.hpp"

#include <algorithm>
#include <cstdint>

#include "circle5/error.hpp"

namespace circle5 {

Json bigint_to_json(const BigInt& n) {
  if (fits_int64(n)) return Json(static_cast<std::int64_t>(n));
  return Json(to_string(n));
}

BigInt bigint_from_json(const Json& value, std::string_view what) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return BigInt(value.get<std::uint64_t>());
    return BigInt(value.get<std::int64_t>());
  }
  if (value.is_string()) return parse_bigint(value.get<std::string>());
  throw InputError("field '" + std::string(what) + "' must be an integer");
}

std::size_t index_from_json(const Json& value, std::string_view what) {
  if (!value.is_number_integer() || (value.is_number_integer() && !value.is_number_unsigned() &&
                                     value.get<std::int64_t>() < 0)) {
    throw InputError("field '" + std::string(what) + "' must be a nonnegative integer");
  }
  return value.get<std::size_t>();
}

void require_known_fields(const Json& object, std::string_view context,
                          std::initializer_list<std::string_view> allowed) {
  if (!object.is_object()) {
    throw InputError(std::string(context) + ": expected a JSON object");
  }
  for (const auto& item : object.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
      throw InputError(std::string(context) + ": unknown field '" + item.key() + "'");
    }
  }
}

const Json& require_field(const Json& object, std::string_view context,
                          std::string_view key) {
  const auto it = object.find(std::string(key));
  if (it == object.end()) {
    throw InputError(std::string(context) + ": missing field '" + std::string(key) + "'");
  }
  return *it;
}

}  // namespace circle5
