#include "hlk/logics.hpp"

#include <array>
#include <utility>

namespace hlk {

namespace {
constexpr std::array<std::pair<LogicId, std::string_view>, 12> kNames{{
    {LogicId::LTL, "ltl"},
    {LogicId::QPTL, "qptl"},
    {LogicId::CTLStar, "ctlstar"},
    {LogicId::HyperLTL, "hyperltl"},
    {LogicId::HyperQPTL, "hyperqptl"},
    {LogicId::HyperCTLStar, "hyperctlstar"},
    {LogicId::HyperQCTLStar, "hyperqctlstar"},
    {LogicId::HyperKCTLStar, "hyperkctlstar"},
    {LogicId::FOltE, "foe"},
    {LogicId::S1SE, "s1se"},
    {LogicId::MPLE, "mple"},
    {LogicId::MSOE, "msoe"},
}};
}  // namespace

std::string_view logic_name(LogicId id) {
  for (const auto& [tag, name] : kNames)
    if (tag == id) return name;
  return "?";
}

std::optional<LogicId> logic_from_name(std::string_view name) {
  for (const auto& [tag, n] : kNames)
    if (n == name) return tag;
  return std::nullopt;
}

}  // namespace hlk
