#pragma once

// Counting shortest solutions with polynomial algebra. A monomial
// x1^a1 ... xk^ak stands for the starting-bank population (a1, ..., ak) and
// its coefficient for the number of ways to reach it. A forward crossing
// divides by the crossing polynomial's monomials, a return crossing multiplies
// by them, and the clean-up operator drops every monomial whose population is
// illegal.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "rivercross/bigint.hpp"
#include "rivercross/species.hpp"

namespace rivercross {

using Exponents = std::vector<int>;

/// Sparse polynomial over x1..xk with exact integer coefficients. Zero
/// coefficients are never stored.
class SparsePolynomial {
 public:
  using Terms = std::map<Exponents, BigInt>;

  SparsePolynomial() = default;
  explicit SparsePolynomial(std::size_t variables) : variables_(variables) {}

  static SparsePolynomial monomial(Exponents exps, BigInt coef = 1) {
    SparsePolynomial p(exps.size());
    p.add_term(std::move(exps), std::move(coef));
    return p;
  }

  std::size_t variables() const noexcept { return variables_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  const Terms& terms() const noexcept { return terms_; }

  void add_term(Exponents exps, const BigInt& coef) {
    if (exps.size() != variables_) throw std::invalid_argument("exponent vector has wrong length");
    if (coef == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(exps), coef);
    if (!inserted) {
      it->second += coef;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BigInt coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  BigInt constant_term() const { return coefficient(Exponents(variables_, 0)); }

  BigInt coefficient_sum() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  SparsePolynomial& operator+=(const SparsePolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }

  friend SparsePolynomial operator*(const BigInt& k, const SparsePolynomial& p) {
    SparsePolynomial out(p.variables_);
    for (const auto& [e, c] : p.terms_) out.add_term(e, k * c);
    return out;
  }

  bool operator==(const SparsePolynomial&) const = default;

  /// Terms by descending total degree, then descending exponent vector.
  std::vector<std::pair<Exponents, BigInt>> ordered_terms() const {
    std::vector<std::pair<Exponents, BigInt>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      const int da = std::accumulate(a.first.begin(), a.first.end(), 0);
      const int db = std::accumulate(b.first.begin(), b.first.end(), 0);
      if (da != db) return da > db;
      return a.first > b.first;
    });
    return out;
  }

  /// e.g. "3*x1^3*x2^3 + 2*x1^3*x2^2"; coefficients are always printed.
  std::string to_string(const std::string& var = "x") const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [exps, coef] : ordered_terms()) {
      if (!first) os << " + ";
      first = false;
      os << coef;
      for (std::size_t j = 0; j < exps.size(); ++j) {
        if (exps[j] == 0) continue;
        os << "*" << var << (j + 1);
        if (exps[j] != 1) os << "^" << exps[j];
      }
    }
    return os.str();
  }

 private:
  std::size_t variables_ = 0;
  Terms terms_;
};

/// Sum of x^b over every legal boat load b, each with coefficient 1.
inline SparsePolynomial crossing_polynomial(const SpeciesPuzzle& sp) {
  SparsePolynomial p(sp.species());
  for (auto& load : legal_loads(sp)) p.add_term(std::move(load), 1);
  return p;
}

/// The clean-up operator: keeps the monomials whose population is legal on
/// both banks for the given boat side. Out-of-box exponents are dropped too.
inline SparsePolynomial cleanup(const SparsePolynomial& poly, const SpeciesPuzzle& sp,
                                bool boat_on_start) {
  SparsePolynomial out(poly.variables());
  for (const auto& [exps, coef] : poly.terms())
    if (is_legal(sp, exps, boat_on_start)) out.add_term(exps, coef);
  return out;
}

/// Forward: multiply by P(1/x1, ..., 1/xk) and clean up with the boat on the
/// far bank. Back: multiply by P(x1, ..., xk) and clean up with the boat on
/// the starting bank. Exponents leaving the box are discarded immediately.
inline SparsePolynomial transfer_step(const SparsePolynomial& f, const SpeciesPuzzle& sp,
                                      Direction direction) {
  const auto loads = legal_loads(sp);
  const bool forward = direction == Direction::Forward;
  SparsePolynomial product(f.variables());
  Exponents shifted(f.variables());
  for (const auto& [exps, coef] : f.terms()) {
    for (const auto& load : loads) {
      bool inside = true;
      for (std::size_t j = 0; j < exps.size() && inside; ++j) {
        shifted[j] = forward ? exps[j] - load[j] : exps[j] + load[j];
        inside = shifted[j] >= 0 && shifted[j] <= sp.initial[j];
      }
      if (inside) product.add_term(shifted, coef);
    }
  }
  return cleanup(product, sp, !forward);
}

/// Upper bound on the number of round trips worth trying. When legality does
/// not depend on the boat side this is the number of legal population
/// vectors; otherwise it is the number of legal (vector, side) pairs.
inline std::size_t transfer_state_bound(const SpeciesPuzzle& sp) {
  std::set<Population> with_boat, without_boat;
  for_each_in_box(sp.initial, [&](const Population& a) {
    if (is_legal(sp, a, true)) with_boat.insert(a);
    if (is_legal(sp, a, false)) without_boat.insert(a);
  });
  if (with_boat == without_boat) return with_boat.size();
  return with_boat.size() + without_boat.size();
}

struct TransferSolvable {
  std::size_t round_trips = 0;  // the index i of the first g_i with a constant term
  std::size_t crossings = 0;    // 2i - 1
  BigInt count;

  bool operator==(const TransferSolvable&) const = default;
};

struct TransferUnsolvable {
  std::size_t states_bound = 0;
  std::size_t iterations_run = 0;

  bool operator==(const TransferUnsolvable&) const = default;
};

using TransferOutcome = std::variant<TransferSolvable, TransferUnsolvable>;

inline SparsePolynomial initial_polynomial(const SpeciesPuzzle& sp) {
  return SparsePolynomial::monomial(sp.initial);
}

/// Iterates g_i = T[P(1/x) f_(i-1)], f_i = T[P(x) g_i] from f_0 = x^A until
/// some g_i has a non-zero constant term, which is then the number of
/// shortest solutions of 2i - 1 crossings. Gives up after i = bound + 1, or
/// as soon as g_i vanishes.
inline TransferOutcome solve_by_transfer(const SpeciesPuzzle& sp) {
  const std::size_t bound = transfer_state_bound(sp);
  SparsePolynomial f = initial_polynomial(sp);
  for (std::size_t i = 1; i <= bound + 1; ++i) {
    SparsePolynomial g = transfer_step(f, sp, Direction::Forward);
    if (BigInt constant = g.constant_term(); constant != 0)
      return TransferSolvable{i, 2 * i - 1, std::move(constant)};
    if (g.is_zero()) return TransferUnsolvable{bound, i};
    f = transfer_step(g, sp, Direction::Back);
  }
  return TransferUnsolvable{bound, bound + 1};
}

struct TraceStage {
  std::size_t index = 0;
  std::optional<SparsePolynomial> g;  // absent for stage 0
  SparsePolynomial f;
};

/// f_0 followed by (g_i, f_i) for i = 1..i_max.
inline std::vector<TraceStage> transfer_trace(const SpeciesPuzzle& sp, std::size_t i_max) {
  std::vector<TraceStage> stages;
  stages.push_back({0, std::nullopt, initial_polynomial(sp)});
  for (std::size_t i = 1; i <= i_max; ++i) {
    SparsePolynomial g = transfer_step(stages.back().f, sp, Direction::Forward);
    SparsePolynomial f = transfer_step(g, sp, Direction::Back);
    stages.push_back({i, std::move(g), std::move(f)});
  }
  return stages;
}

}  // namespace rivercross
