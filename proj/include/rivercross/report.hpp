#pragma once

// Result records printed by the command-line tool, with their JSON encoding.
// Counts that do not fit in a signed 64-bit integer are written as decimal
// strings.

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "rivercross/bigint.hpp"
#include "rivercross/family.hpp"
#include "rivercross/model.hpp"
#include "rivercross/strategy.hpp"

namespace rivercross {

inline constexpr const char* kToolVersion = "1.0.0";

inline nlohmann::json count_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

inline BigInt count_from_json(const nlohmann::json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(j.get<std::int64_t>());
}

inline void to_json(nlohmann::json& j, const McParams& p) {
  j = {{"M", p.missionaries}, {"C", p.cannibals}, {"B", p.boat_capacity}, {"d", p.margin}};
}

inline void from_json(const nlohmann::json& j, McParams& p) {
  p = {j.at("M").get<int>(), j.at("C").get<int>(), j.at("B").get<int>(), j.at("d").get<int>()};
}

inline void to_json(nlohmann::json& j, const BankState& s) {
  j = nlohmann::json::array({s.m, s.c, s.boat_on_start ? 1 : 0});
}

inline void from_json(const nlohmann::json& j, BankState& s) {
  s = {j.at(0).get<int>(), j.at(1).get<int>(), j.at(2).get<int>() == 1};
}

inline void to_json(nlohmann::json& j, const SolutionPath& p) { j = p.states; }
inline void from_json(const nlohmann::json& j, SolutionPath& p) { p.states = j.get<std::vector<BankState>>(); }

inline void to_json(nlohmann::json& j, const Move& mv) {
  j = {{"missionaries", mv.e1},
       {"cannibals", mv.e2},
       {"direction", mv.direction == Direction::Forward ? "forward" : "back"}};
}

inline void from_json(const nlohmann::json& j, Move& mv) {
  mv = {j.at("missionaries").get<int>(), j.at("cannibals").get<int>(),
        j.at("direction").get<std::string>() == "forward" ? Direction::Forward : Direction::Back};
}

/// Output of `solve`.
struct SolveResult {
  McParams params;
  std::optional<std::size_t> crossings;  // absent when unsolvable
  BigInt count;
  std::vector<SolutionPath> solutions;

  bool operator==(const SolveResult&) const = default;
};

inline void to_json(nlohmann::json& j, const SolveResult& r) {
  j = {{"params", r.params},
       {"solvable", r.crossings.has_value()},
       {"crossings", r.crossings ? nlohmann::json(*r.crossings) : nlohmann::json(nullptr)},
       {"count", count_to_json(r.count)},
       {"solutions", r.solutions}};
}

inline void from_json(const nlohmann::json& j, SolveResult& r) {
  r.params = j.at("params").get<McParams>();
  r.crossings = j.at("crossings").is_null() ? std::nullopt
                                            : std::optional(j.at("crossings").get<std::size_t>());
  r.count = count_from_json(j.at("count"));
  r.solutions = j.at("solutions").get<std::vector<SolutionPath>>();
}

/// Output of `count`.
struct CountResult {
  McParams params;
  std::string method;
  std::optional<std::size_t> crossings;
  BigInt count;

  bool operator==(const CountResult&) const = default;
};

inline void to_json(nlohmann::json& j, const CountResult& r) {
  j = {{"params", r.params},
       {"method", r.method},
       {"solvable", r.crossings.has_value()},
       {"crossings", r.crossings ? nlohmann::json(*r.crossings) : nlohmann::json(nullptr)},
       {"count", count_to_json(r.count)}};
}

inline void from_json(const nlohmann::json& j, CountResult& r) {
  r.params = j.at("params").get<McParams>();
  r.method = j.at("method").get<std::string>();
  r.crossings = j.at("crossings").is_null() ? std::nullopt
                                            : std::optional(j.at("crossings").get<std::size_t>());
  r.count = count_from_json(j.at("count"));
}

inline void to_json(nlohmann::json& j, const FamilySpec& fs) {
  j = {{"r", fs.surplus}, {"B", fs.boat_capacity}, {"d", fs.margin}, {"K", fs.terms}, {"first", fs.first}};
}

inline void from_json(const nlohmann::json& j, FamilySpec& fs) {
  fs = {j.at("r").get<int>(), j.at("B").get<int>(), j.at("d").get<int>(), j.at("K").get<int>(),
        j.at("first").get<int>()};
}

inline void to_json(nlohmann::json& j, const FamilyTerm& t) {
  j = {{"i", t.index},
       {"solvable", t.solvable()},
       {"crossings", t.crossings ? nlohmann::json(*t.crossings) : nlohmann::json(nullptr)},
       {"count", count_to_json(t.count)}};
}

inline void from_json(const nlohmann::json& j, FamilyTerm& t) {
  t.index = j.at("i").get<int>();
  t.crossings = j.at("crossings").is_null() ? std::nullopt
                                            : std::optional(j.at("crossings").get<std::size_t>());
  t.count = count_from_json(j.at("count"));
}

inline nlohmann::json poly_to_json(const IntPolynomial& p) {
  auto arr = nlohmann::json::array();
  for (const auto& c : p) arr.push_back(count_to_json(c));
  return arr;
}

inline nlohmann::json to_json_value(const ConjectureReport& r) {
  nlohmann::json j = {{"family", r.family}, {"max_order", r.max_order}, {"terms", r.terms}};
  j["all_unsolvable"] = r.all_unsolvable();
  if (r.recurrence) {
    auto coeffs = nlohmann::json::array();
    for (const auto& c : r.recurrence->coefficients) coeffs.push_back(rational_to_string(c));
    j["recurrence"] = {{"order", r.recurrence->order()},
                       {"offset", r.recurrence->offset},
                       {"valid_from", *r.valid_from()},
                       {"coefficients", coeffs},
                       {"verified_equations", r.recurrence->verified_equations}};
  } else {
    j["recurrence"] = nullptr;
  }
  if (r.gf) {
    j["gf"] = {{"numerator", poly_to_json(r.gf->numerator)},
               {"denominator", poly_to_json(r.gf->denominator)}};
  } else {
    j["gf"] = nullptr;
  }
  return j;
}

}  // namespace rivercross
