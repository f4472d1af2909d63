#pragma once

// Constructive strategies with sufficient conditions for solvability, and a
// move-by-move solution validator.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rivercross/model.hpp"

namespace rivercross {

enum class StrategyName {
  TwoBoat,
  BigBoat1,
  BigBoat2,
  SplitCannibals,
  SimultaneousFerry,
  ZeroMarginSlack,
  ZeroMarginEqualBigBoat,
};

inline constexpr std::array kAllStrategies{
    StrategyName::TwoBoat,           StrategyName::BigBoat1,        StrategyName::BigBoat2,
    StrategyName::SplitCannibals,    StrategyName::SimultaneousFerry, StrategyName::ZeroMarginSlack,
    StrategyName::ZeroMarginEqualBigBoat,
};

inline std::string_view to_string(StrategyName s) {
  switch (s) {
    case StrategyName::TwoBoat: return "two-boat";
    case StrategyName::BigBoat1: return "big-boat-1";
    case StrategyName::BigBoat2: return "big-boat-2";
    case StrategyName::SplitCannibals: return "split-cannibals";
    case StrategyName::SimultaneousFerry: return "simultaneous-ferry";
    case StrategyName::ZeroMarginSlack: return "zero-margin-slack";
    case StrategyName::ZeroMarginEqualBigBoat: return "zero-margin-equal-big-boat";
  }
  return "unknown";
}

inline std::optional<StrategyName> strategy_from_string(std::string_view name) {
  for (auto s : kAllStrategies)
    if (to_string(s) == name) return s;
  return std::nullopt;
}

inline std::ostream& operator<<(std::ostream& os, StrategyName s) { return os << to_string(s); }

using MoveSequence = std::vector<Move>;

inline bool strategy_applies(const McParams& p, StrategyName s) {
  const int m = p.missionaries, c = p.cannibals, b = p.boat_capacity, d = p.margin;
  const int half_up = (c + 1) / 2;
  switch (s) {
    case StrategyName::TwoBoat: return m - c >= 2 * d + 3;
    case StrategyName::BigBoat1: return b >= c + d + 1;
    case StrategyName::BigBoat2: return b >= m && c >= 2;
    case StrategyName::SplitCannibals: return m - c >= 2 * d + 1 && b > half_up + d + 1;
    // The return trip carries d missionaries, so the boat cannot come back
    // when d = 0.
    case StrategyName::SimultaneousFerry: return d >= 1 && m - c >= 3 * d && b >= d + 2;
    case StrategyName::ZeroMarginSlack: return d == 0 && m > c;
    case StrategyName::ZeroMarginEqualBigBoat: return d == 0 && m == c && b >= 4;
  }
  return false;
}

/// The strategies whose sufficient condition holds, in declaration order.
inline std::vector<StrategyName> applicability(const McParams& p) {
  require_valid(p);
  std::vector<StrategyName> out;
  for (auto s : kAllStrategies)
    if (strategy_applies(p, s)) out.push_back(s);
  return out;
}

enum class Rule {
  InitialState,
  Direction,
  EmptyBoat,
  BoatCapacity,
  BoatOutnumbering,
  NotEnoughPeople,
  BankOutnumbering,
  NotFinished,
};

inline std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::InitialState: return "initial state";
    case Rule::Direction: return "direction";
    case Rule::EmptyBoat: return "empty boat";
    case Rule::BoatCapacity: return "boat capacity";
    case Rule::BoatOutnumbering: return "boat outnumbering";
    case Rule::NotEnoughPeople: return "not enough people";
    case Rule::BankOutnumbering: return "bank outnumbering";
    case Rule::NotFinished: return "not finished";
  }
  return "unknown";
}

struct Violation {
  std::size_t index = 0;  // offending move; the sequence length for NotFinished
  Rule rule = Rule::InitialState;

  bool operator==(const Violation&) const = default;
};

/// Simulates from [M, C, 1] and reports the earliest broken rule.
inline std::optional<Violation> validate_solution(const McParams& p, const MoveSequence& moves) {
  BankState s = initial_state(p);
  if (!in_range(p, s) || !is_legal_state(p, s)) return Violation{0, Rule::InitialState};
  for (std::size_t i = 0; i < moves.size(); ++i) {
    const Move& mv = moves[i];
    const Direction expected = s.boat_on_start ? Direction::Forward : Direction::Back;
    if (mv.direction != expected) return Violation{i, Rule::Direction};
    if (mv.e1 < 0 || mv.e2 < 0 || mv.e1 + mv.e2 == 0) return Violation{i, Rule::EmptyBoat};
    if (mv.e1 + mv.e2 > p.boat_capacity) return Violation{i, Rule::BoatCapacity};
    if (!group_is_safe(mv.e1, mv.e2, p.margin)) return Violation{i, Rule::BoatOutnumbering};
    const BankState next = apply_move(s, mv);
    if (!in_range(p, next)) return Violation{i, Rule::NotEnoughPeople};
    if (!is_legal_state(p, next)) return Violation{i, Rule::BankOutnumbering};
    s = next;
  }
  if (s != goal_state()) return Violation{moves.size(), Rule::NotFinished};
  return std::nullopt;
}

/// States visited by a move sequence, with any revisit loops cut out so the
/// result is self-avoiding.
inline SolutionPath to_solution_path(const McParams& p, const MoveSequence& moves) {
  if (auto v = validate_solution(p, moves)) {
    std::ostringstream msg;
    msg << "move " << v->index << " violates rule: " << to_string(v->rule);
    throw InvalidPath(v->index, msg.str());
  }
  SolutionPath path{{initial_state(p)}};
  std::map<BankState, std::size_t> seen{{path.states.front(), 0}};
  for (const Move& mv : moves) {
    const BankState next = apply_move(path.states.back(), mv);
    if (auto it = seen.find(next); it != seen.end()) {
      for (std::size_t k = it->second + 1; k < path.states.size(); ++k) seen.erase(path.states[k]);
      path.states.resize(it->second + 1);
    } else {
      seen.emplace(next, path.states.size());
      path.states.push_back(next);
    }
  }
  return path;
}

namespace detail {

/// Appends moves while tracking the state. Each builder step asserts its own
/// legality so that a broken construction fails loudly at the step.
class Script {
 public:
  explicit Script(const McParams& p) : p_(p), s_(initial_state(p)) {}

  int start_m() const { return s_.m; }
  int start_c() const { return s_.c; }
  int far_m() const { return p_.missionaries - s_.m; }
  int far_c() const { return p_.cannibals - s_.c; }
  bool boat_on_start() const { return s_.boat_on_start; }
  bool done() const { return s_ == goal_state(); }

  void forward(int e1, int e2) { push({e1, e2, Direction::Forward}); }
  void back(int e1, int e2) { push({e1, e2, Direction::Back}); }

  /// Missionaries cross until none are left on the starting bank; one
  /// missionary rows back between trips. Each trip takes as many as the boat
  /// and the cannibals left behind allow.
  void ferry_missionaries() {
    if (!boat_on_start()) throw std::logic_error("ferry_missionaries needs the boat on the start bank");
    while (start_m() > 0) {
      const int m = start_m();
      if (m <= p_.boat_capacity) {
        forward(m, 0);
        return;
      }
      int x = p_.boat_capacity;
      if (start_c() > 0) x = std::min(x, m - start_c() - p_.margin);
      if (x < 2) throw std::logic_error("missionary ferry cannot make progress");
      forward(x, 0);
      back(1, 0);
    }
  }

  /// Cannibals cross until none are left, one cannibal rowing back between
  /// trips. If the boat is on the far bank a cannibal brings it back first.
  void ferry_cannibals() {
    if (done()) return;
    if (!boat_on_start()) back(0, 1);
    while (true) {
      const int c = start_c();
      forward(0, std::min(c, p_.boat_capacity));
      if (done()) return;
      back(0, 1);
    }
  }

  MoveSequence take() && { return std::move(moves_); }

 private:
  void push(const Move& mv) {
    if (!is_legal_load(p_, mv.e1, mv.e2)) throw std::logic_error("strategy produced an illegal load");
    const bool right_side = s_.boat_on_start == (mv.direction == Direction::Forward);
    const BankState next = apply_move(s_, mv);
    if (!right_side || !in_range(p_, next) || !is_legal_state(p_, next)) {
      std::ostringstream msg;
      msg << "strategy step " << moves_.size() << " " << mv << " from " << s_ << " is illegal";
      throw std::logic_error(msg.str());
    }
    moves_.push_back(mv);
    s_ = next;
  }

  McParams p_;
  BankState s_;
  MoveSequence moves_;
};

// Ship one missionary at a time with (2,0), -(1,0) while the starting bank
// stays legal: M - C - d - 1 missionaries end up across.
inline void send_spare_missionaries(Script& sc, const McParams& p) {
  const int spare = p.missionaries - p.cannibals - p.margin - 1;
  for (int k = 0; k < spare; ++k) {
    sc.forward(2, 0);
    sc.back(1, 0);
  }
}

inline MoveSequence two_boat(const McParams& p) {
  Script sc(p);
  send_spare_missionaries(sc, p);
  // Alternate Q = (0,2), -(0,1) and P = (2,0), -(1,0) until one cannibal is left.
  while (sc.start_c() > 1) {
    sc.forward(0, 2);
    sc.back(0, 1);
    sc.forward(2, 0);
    sc.back(1, 0);
  }
  // Last cannibal crosses alone; a missionary brings the boat back and the
  // remaining missionaries go over two at a time.
  sc.forward(0, 1);
  sc.back(1, 0);
  while (sc.start_m() > 2) {
    sc.forward(2, 0);
    sc.back(1, 0);
  }
  sc.forward(sc.start_m(), 0);
  return std::move(sc).take();
}

inline MoveSequence big_boat_1(const McParams& p) {
  Script sc(p);
  send_spare_missionaries(sc, p);
  // The rest of the missionaries fit in the boat.
  sc.forward(sc.start_m(), 0);
  // C + d of them row back, fetch one cannibal, and that cannibal returns
  // with the boat so the cannibals can ferry themselves.
  const int escort = p.cannibals + p.margin;
  sc.back(escort, 0);
  sc.forward(escort, 1);
  sc.ferry_cannibals();
  return std::move(sc).take();
}

inline MoveSequence big_boat_2(const McParams& p) {
  Script sc(p);
  sc.forward(0, 2);
  sc.back(0, 1);
  sc.forward(p.missionaries, 0);
  sc.ferry_cannibals();
  return std::move(sc).take();
}

inline MoveSequence split_cannibals(const McParams& p) {
  Script sc(p);
  const int half = (p.cannibals + 1) / 2;
  // Half the cannibals cross; one of them returns and travels again with the
  // first boat of half + d + 1 missionaries.
  if (half > 1) {
    sc.forward(0, half);
    sc.back(0, 1);
  }
  sc.forward(half + p.margin + 1, 1);
  if (sc.done()) return std::move(sc).take();
  sc.back(1, 0);
  sc.ferry_missionaries();
  sc.ferry_cannibals();
  return std::move(sc).take();
}

inline MoveSequence simultaneous_ferry(const McParams& p) {
  Script sc(p);
  const int d = p.margin;
  // d missionaries settle on the far bank first.
  sc.forward(d + 1, 0);
  sc.back(1, 0);
  while (sc.start_c() > 0) {
    sc.forward(d + 1, 1);
    if (sc.start_c() == 0) break;
    sc.back(d, 0);
  }
  sc.back(1, 0);
  sc.ferry_missionaries();
  return std::move(sc).take();
}

inline MoveSequence zero_margin_slack(const McParams& p) {
  Script sc(p);
  // Q = (1,1), -(0,1) moves slack to the far bank and the mirror step
  // (1,1), -(1,0) moves it back, so each pair carries one missionary and one
  // cannibal across.
  while (true) {
    sc.forward(1, 1);
    if (sc.start_c() == 0) break;
    sc.back(0, 1);
    sc.forward(1, 1);
    if (sc.start_c() == 0) break;
    sc.back(1, 0);
  }
  // Only missionaries are left: a cannibal shuttles the boat back and rides
  // along with as many missionaries as fit.
  while (!sc.done()) {
    sc.back(0, 1);
    sc.forward(std::min(sc.start_m(), p.boat_capacity - 1), 1);
  }
  return std::move(sc).take();
}

inline MoveSequence zero_margin_equal_big_boat(const McParams& p) {
  Script sc(p);
  if (p.missionaries == 1) {
    sc.forward(1, 1);
    return std::move(sc).take();
  }
  while (sc.start_m() > 2) {
    sc.forward(2, 2);
    sc.back(1, 1);
  }
  sc.forward(2, 2);
  return std::move(sc).take();
}

}  // namespace detail

/// The strategy's move script, or nullopt when its condition does not hold.
inline std::optional<MoveSequence> build_strategy(const McParams& p, StrategyName s) {
  require_valid(p);
  if (!strategy_applies(p, s)) return std::nullopt;
  switch (s) {
    case StrategyName::TwoBoat: return detail::two_boat(p);
    case StrategyName::BigBoat1: return detail::big_boat_1(p);
    case StrategyName::BigBoat2: return detail::big_boat_2(p);
    case StrategyName::SplitCannibals: return detail::split_cannibals(p);
    case StrategyName::SimultaneousFerry: return detail::simultaneous_ferry(p);
    case StrategyName::ZeroMarginSlack: return detail::zero_margin_slack(p);
    case StrategyName::ZeroMarginEqualBigBoat: return detail::zero_margin_equal_big_boat(p);
  }
  return std::nullopt;
}

}  // namespace rivercross
