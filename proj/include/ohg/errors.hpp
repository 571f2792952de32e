#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

namespace ohg {

// Every failure carries a machine-readable kind plus optional structured
// detail, so the CLI can emit JSON error objects and map kinds to exit codes.
class error : public std::runtime_error {
 public:
  error(std::string kind, const std::string& msg, nlohmann::json detail = nullptr)
      : std::runtime_error(msg), kind_(std::move(kind)), detail_(std::move(detail)) {}

  const std::string& kind() const { return kind_; }
  const nlohmann::json& detail() const { return detail_; }

  nlohmann::json to_json() const {
    nlohmann::json j{{"error", kind_}, {"message", what()}};
    if (!detail_.is_null()) j["detail"] = detail_;
    return j;
  }

 private:
  std::string kind_;
  nlohmann::json detail_;
};

namespace errkind {
inline constexpr const char* dangling_border = "dangling_border";
inline constexpr const char* dimension_mismatch = "dimension_mismatch";
inline constexpr const char* duplicate_id = "duplicate_id";
inline constexpr const char* dimension_underflow = "dimension_underflow";
inline constexpr const char* dimension_zero = "dimension_zero";
inline constexpr const char* not_composable = "not_composable";
inline constexpr const char* not_glueable = "not_glueable";
inline constexpr const char* is_atom = "is_atom";
inline constexpr const char* axiom_violation = "axiom_violation";
inline constexpr const char* cap_exceeded = "cap_exceeded";
inline constexpr const char* precondition_failed = "precondition_failed";
inline constexpr const char* ill_typed = "ill_typed";
inline constexpr const char* not_whiskering_shape = "not_whiskering_shape";
inline constexpr const char* cyclic_order = "cyclic_order";
inline constexpr const char* unknown_fixture = "unknown_fixture";
inline constexpr const char* parse_error = "parse_error";
inline constexpr const char* not_a_cell = "not_a_cell";
inline constexpr const char* unknown_generator = "unknown_generator";
}  // namespace errkind

}  // namespace ohg
