#pragma once

// Missionaries-and-cannibals puzzle model: parameters, bank states, boat
// loads and legal moves.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rivercross {

/// The four puzzle parameters: M missionaries, C cannibals, a boat seating at
/// most B people and a safety margin d.
struct McParams {
  int missionaries = 0;
  int cannibals = 0;
  int boat_capacity = 0;
  int margin = 0;

  auto operator<=>(const McParams&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const McParams& p) {
  return os << "(" << p.missionaries << "," << p.cannibals << "," << p.boat_capacity << ","
            << p.margin << ")";
}

/// Populations on the starting bank plus the boat side (true = starting bank).
struct BankState {
  int m = 0;
  int c = 0;
  bool boat_on_start = true;

  auto operator<=>(const BankState&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const BankState& s) {
  return os << "[" << s.m << ", " << s.c << ", " << (s.boat_on_start ? 1 : 0) << "]";
}

enum class Direction { Forward, Back };

inline Direction opposite(Direction d) {
  return d == Direction::Forward ? Direction::Back : Direction::Forward;
}

/// One crossing: e1 missionaries and e2 cannibals in the boat.
struct Move {
  int e1 = 0;
  int e2 = 0;
  Direction direction = Direction::Forward;

  auto operator<=>(const Move&) const = default;
};

/// Prints in the `(a,b)` / `-(a,b)` notation.
inline std::ostream& operator<<(std::ostream& os, const Move& mv) {
  if (mv.direction == Direction::Back) os << "-";
  return os << "(" << mv.e1 << "," << mv.e2 << ")";
}

/// Occupancy of a single location (bank or boat) with the margin rule applied.
constexpr bool group_is_safe(int missionaries, int cannibals, int margin) {
  return missionaries <= 0 || cannibals <= 0 || missionaries - cannibals >= margin;
}

enum class ParamError {
  TooFewMissionaries,
  TooFewCannibals,
  BoatTooSmall,
  NegativeMargin,
  IllegalInitialState,
};

inline std::string describe(ParamError e) {
  switch (e) {
    case ParamError::TooFewMissionaries:
      return "at least one missionary is required (M >= 1)";
    case ParamError::TooFewCannibals:
      return "at least one cannibal is required (C >= 1)";
    case ParamError::BoatTooSmall:
      return "boat too small: capacity must be at least 2 (B >= 2)";
    case ParamError::NegativeMargin:
      return "safety margin must be non-negative (d >= 0)";
    case ParamError::IllegalInitialState:
      return "initial state illegal: missionaries must outnumber cannibals by at least d "
             "(M - C >= d)";
  }
  return "unknown parameter error";
}

/// Thrown by operations that require valid parameters.
class InvalidParams : public std::invalid_argument {
 public:
  explicit InvalidParams(ParamError e) : std::invalid_argument(describe(e)), error_(e) {}
  ParamError error() const noexcept { return error_; }

 private:
  ParamError error_;
};

/// Checks the parameter constraints in order and reports the first violation.
inline std::optional<ParamError> validate_params(const McParams& p) {
  if (p.missionaries < 1) return ParamError::TooFewMissionaries;
  if (p.cannibals < 1) return ParamError::TooFewCannibals;
  if (p.boat_capacity < 2) return ParamError::BoatTooSmall;
  if (p.margin < 0) return ParamError::NegativeMargin;
  if (!group_is_safe(p.missionaries, p.cannibals, p.margin)) return ParamError::IllegalInitialState;
  return std::nullopt;
}

inline void require_valid(const McParams& p) {
  if (auto e = validate_params(p)) throw InvalidParams(*e);
}

inline bool in_range(const McParams& p, const BankState& s) {
  return s.m >= 0 && s.m <= p.missionaries && s.c >= 0 && s.c <= p.cannibals;
}

/// Both banks satisfy the margin rule. Out-of-range populations are a
/// contract violation and throw std::out_of_range.
inline bool is_legal_state(const McParams& p, const BankState& s) {
  if (!in_range(p, s)) {
    std::ostringstream msg;
    msg << "bank state " << s << " out of range for parameters " << p;
    throw std::out_of_range(msg.str());
  }
  return group_is_safe(s.m, s.c, p.margin) &&
         group_is_safe(p.missionaries - s.m, p.cannibals - s.c, p.margin);
}

inline bool is_legal_load(const McParams& p, int e1, int e2) {
  return e1 >= 0 && e2 >= 0 && e1 + e2 > 0 && e1 + e2 <= p.boat_capacity &&
         group_is_safe(e1, e2, p.margin);
}

/// All (e1, e2) boat loads, sorted ascending.
inline std::vector<std::pair<int, int>> legal_boat_loads(const McParams& p) {
  std::vector<std::pair<int, int>> loads;
  for (int e1 = 0; e1 <= p.boat_capacity; ++e1)
    for (int e2 = 0; e1 + e2 <= p.boat_capacity; ++e2)
      if (is_legal_load(p, e1, e2)) loads.emplace_back(e1, e2);
  return loads;
}

inline BankState apply_move(const BankState& s, const Move& mv) {
  if (mv.direction == Direction::Forward) return {s.m - mv.e1, s.c - mv.e2, false};
  return {s.m + mv.e1, s.c + mv.e2, true};
}

/// Successors of a legal state, ordered by (e1, e2). The direction follows the
/// boat side.
inline std::vector<std::pair<Move, BankState>> legal_moves(const McParams& p, const BankState& s) {
  std::vector<std::pair<Move, BankState>> out;
  const Direction dir = s.boat_on_start ? Direction::Forward : Direction::Back;
  for (auto [e1, e2] : legal_boat_loads(p)) {
    const Move mv{e1, e2, dir};
    const BankState next = apply_move(s, mv);
    if (in_range(p, next) && is_legal_state(p, next)) out.emplace_back(mv, next);
  }
  return out;
}

inline BankState initial_state(const McParams& p) { return {p.missionaries, p.cannibals, true}; }
inline BankState goal_state() { return {0, 0, false}; }

/// The mirror state: far-bank populations seen from the other side.
inline BankState complement(const McParams& p, const BankState& s) {
  return {p.missionaries - s.m, p.cannibals - s.c, !s.boat_on_start};
}

/// Number of legal (m, c) bank vectors; the boat side does not affect legality.
inline std::size_t legal_vector_count(const McParams& p) {
  std::size_t n = 0;
  for (int m = 0; m <= p.missionaries; ++m)
    for (int c = 0; c <= p.cannibals; ++c)
      if (is_legal_state(p, {m, c, true})) ++n;
  return n;
}

/// A sequence of states from [M, C, 1] to [0, 0, 0].
struct SolutionPath {
  std::vector<BankState> states;

  std::size_t crossings() const { return states.empty() ? 0 : states.size() - 1; }
  auto operator<=>(const SolutionPath&) const = default;
};

/// The move linking two consecutive states, if their difference is a legal
/// crossing in the right direction.
inline std::optional<Move> move_between(const McParams& p, const BankState& from, const BankState& to) {
  if (from.boat_on_start == to.boat_on_start) return std::nullopt;
  Move mv;
  if (from.boat_on_start) {
    mv = {from.m - to.m, from.c - to.c, Direction::Forward};
  } else {
    mv = {to.m - from.m, to.c - from.c, Direction::Back};
  }
  if (!is_legal_load(p, mv.e1, mv.e2)) return std::nullopt;
  return mv;
}

/// Index of the first offending state in `path` (0 if it does not start at
/// the initial state), or nullopt for a valid self-avoiding solution.
inline std::optional<std::size_t> first_invalid_index(const McParams& p, const SolutionPath& path) {
  const auto& st = path.states;
  if (st.empty() || st.front() != initial_state(p)) return 0;
  for (std::size_t i = 0; i < st.size(); ++i) {
    if (!in_range(p, st[i]) || !is_legal_state(p, st[i])) return i;
    if (i > 0 && !move_between(p, st[i - 1], st[i])) return i;
    if (std::find(st.begin(), st.begin() + static_cast<std::ptrdiff_t>(i), st[i]) !=
        st.begin() + static_cast<std::ptrdiff_t>(i))
      return i;
  }
  if (st.back() != goal_state()) return st.size() - 1;
  return std::nullopt;
}

inline std::vector<Move> moves_of(const McParams& p, const SolutionPath& path) {
  std::vector<Move> moves;
  for (std::size_t i = 1; i < path.states.size(); ++i) {
    auto mv = move_between(p, path.states[i - 1], path.states[i]);
    if (!mv) throw std::invalid_argument("consecutive states are not linked by a legal move");
    moves.push_back(*mv);
  }
  return moves;
}

/// Reversing time and mirroring every state maps solutions to solutions.
inline SolutionPath complement_reversal(const McParams& p, const SolutionPath& path) {
  SolutionPath out;
  out.states.reserve(path.states.size());
  for (auto it = path.states.rbegin(); it != path.states.rend(); ++it)
    out.states.push_back(complement(p, *it));
  return out;
}

class InvalidPath : public std::invalid_argument {
 public:
  InvalidPath(std::size_t index, const std::string& what)
      : std::invalid_argument(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

namespace detail {

inline std::string count_noun(int n, const char* singular, const char* plural) {
  return std::to_string(n) + " " + (n == 1 ? singular : plural);
}

inline std::string load_phrase(int e1, int e2) {
  std::string s;
  if (e1 > 0) s += count_noun(e1, "missionary", "missionaries");
  if (e1 > 0 && e2 > 0) s += " and ";
  if (e2 > 0) s += count_noun(e2, "cannibal", "cannibals");
  return s;
}

inline std::string bank_phrase(int m, int c) {
  return count_noun(m, "missionary", "missionaries") + ", " + count_noun(c, "cannibal", "cannibals");
}

}  // namespace detail

/// Verbose transcript, one line per crossing. The last line also confirms
/// that everyone is across.
inline std::string spell_out(const McParams& p, const SolutionPath& path) {
  if (auto bad = first_invalid_index(p, path)) {
    std::ostringstream msg;
    msg << "invalid solution path: first illegal transition at state index " << *bad;
    throw InvalidPath(*bad, msg.str());
  }
  std::ostringstream out;
  const auto& st = path.states;
  for (std::size_t i = 1; i < st.size(); ++i) {
    const Move mv = *move_between(p, st[i - 1], st[i]);
    const bool plural = mv.e1 + mv.e2 > 1;
    out << "Crossing " << i << ": " << detail::load_phrase(mv.e1, mv.e2)
        << (plural ? " cross " : " crosses ")
        << (mv.direction == Direction::Forward ? "to the far bank" : "back to the starting bank")
        << ". Starting bank: " << detail::bank_phrase(st[i].m, st[i].c)
        << ". Far bank: "
        << detail::bank_phrase(p.missionaries - st[i].m, p.cannibals - st[i].c) << ".";
    if (i + 1 == st.size())
      out << " Everyone is across after " << path.crossings()
          << (path.crossings() == 1 ? " crossing." : " crossings.");
    out << "\n";
  }
  return out.str();
}

}  // namespace rivercross
