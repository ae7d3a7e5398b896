#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace hlk {

// The twelve logics handled by the library. The first eight are the
// temporal family (HyperFormula), the last four the predicate family
// (RelationalFormula). Well-formedness rules are a function of the tag.
enum class LogicId {
  LTL,
  QPTL,
  CTLStar,
  HyperLTL,
  HyperQPTL,
  HyperCTLStar,
  HyperQCTLStar,
  HyperKCTLStar,
  FOltE,
  S1SE,
  MPLE,
  MSOE,
};

constexpr bool is_temporal(LogicId id) {
  switch (id) {
    case LogicId::LTL:
    case LogicId::QPTL:
    case LogicId::CTLStar:
    case LogicId::HyperLTL:
    case LogicId::HyperQPTL:
    case LogicId::HyperCTLStar:
    case LogicId::HyperQCTLStar:
    case LogicId::HyperKCTLStar:
      return true;
    default:
      return false;
  }
}

constexpr bool is_relational(LogicId id) { return !is_temporal(id); }

// Linear-time temporal logics: models are trace sets.
constexpr bool is_linear(LogicId id) {
  switch (id) {
    case LogicId::LTL:
    case LogicId::QPTL:
    case LogicId::HyperLTL:
    case LogicId::HyperQPTL:
    case LogicId::FOltE:
    case LogicId::S1SE:
      return true;
    default:
      return false;
  }
}

constexpr bool is_branching(LogicId id) {
  return !is_linear(id);
}

// Trace/path variables allowed?
constexpr bool allows_trace_vars(LogicId id) {
  switch (id) {
    case LogicId::LTL:
    case LogicId::QPTL:
      return false;
    default:
      return is_temporal(id);
  }
}

// Propositional quantification allowed?
constexpr bool allows_prop_quantifiers(LogicId id) {
  switch (id) {
    case LogicId::QPTL:
    case LogicId::HyperQPTL:
    case LogicId::HyperQCTLStar:
      return true;
    default:
      return false;
  }
}

// Knowledge modality allowed?
constexpr bool allows_knowledge(LogicId id) {
  return id == LogicId::HyperKCTLStar;
}

// Quantifier prefix must be prenex (linear-time hyper logics)?
constexpr bool requires_prenex(LogicId id) {
  switch (id) {
    case LogicId::QPTL:
    case LogicId::HyperLTL:
    case LogicId::HyperQPTL:
      return true;
    default:
      return false;
  }
}

// min()/S() terms allowed (S1S[E] only).
constexpr bool allows_terms(LogicId id) { return id == LogicId::S1SE; }

// Second-order variables allowed in the relational family.
constexpr bool allows_second_order(LogicId id) {
  switch (id) {
    case LogicId::S1SE:
    case LogicId::MPLE:
    case LogicId::MSOE:
      return true;
    default:
      return false;
  }
}

std::string_view logic_name(LogicId id);
std::optional<LogicId> logic_from_name(std::string_view name);

}  // namespace hlk
