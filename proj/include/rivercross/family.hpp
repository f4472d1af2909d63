#pragma once

// Enumeration sequences for one-parameter puzzle families, exact linear
// recurrence fitting and rational generating functions.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "rivercross/bigint.hpp"
#include "rivercross/model.hpp"
#include "rivercross/species.hpp"
#include "rivercross/transfer.hpp"

namespace rivercross {

/// Term i is the puzzle with i + surplus missionaries and i cannibals, for
/// i = first, first + 1, ..., first + terms - 1.
struct FamilySpec {
  int surplus = 0;
  int boat_capacity = 2;
  int margin = 0;
  int terms = 1;
  int first = 1;

  McParams member(int i) const { return {i + surplus, i, boat_capacity, margin}; }
};

inline void require_valid(const FamilySpec& fs) {
  if (fs.terms < 1) throw std::invalid_argument("a family needs at least one term");
  if (fs.first < 0) throw std::invalid_argument("family index must start at 0 or above");
  if (fs.boat_capacity < 2) throw InvalidParams(ParamError::BoatTooSmall);
  if (fs.margin < 0) throw InvalidParams(ParamError::NegativeMargin);
  if (fs.surplus < fs.margin) throw InvalidParams(ParamError::IllegalInitialState);
  if (fs.first + fs.surplus < 1) throw InvalidParams(ParamError::TooFewMissionaries);
}

struct FamilyTerm {
  int index = 0;
  std::optional<std::size_t> crossings;  // absent when unsolvable
  BigInt count;                          // 0 when unsolvable

  bool solvable() const noexcept { return crossings.has_value(); }
  bool operator==(const FamilyTerm&) const = default;
};

namespace detail {

inline std::size_t worker_count(std::size_t jobs) {
  std::size_t n = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("RIVER_SOLVE_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) n = static_cast<std::size_t>(v);
  }
  return std::min(n, jobs);
}

}  // namespace detail

/// Counts every family member with the transfer method. Members are
/// independent and are computed on up to RIVER_SOLVE_THREADS threads.
inline std::vector<FamilyTerm> family_counts(const FamilySpec& fs) {
  require_valid(fs);
  std::vector<FamilyTerm> out(static_cast<std::size_t>(fs.terms));
  auto compute = [&](std::size_t slot) {
    const int i = fs.first + static_cast<int>(slot);
    FamilyTerm term{i, std::nullopt, 0};
    const auto outcome = solve_by_transfer(mc_species(fs.member(i)));
    if (const auto* s = std::get_if<TransferSolvable>(&outcome)) {
      term.crossings = s->crossings;
      term.count = s->count;
    }
    out[slot] = std::move(term);
  };
  const std::size_t workers = detail::worker_count(out.size());
  if (workers <= 1) {
    for (std::size_t k = 0; k < out.size(); ++k) compute(k);
    return out;
  }
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < out.size(); k = next++) compute(k);
      });
  }
  return out;
}

inline std::vector<BigInt> counts_only(const std::vector<FamilyTerm>& terms) {
  std::vector<BigInt> v;
  v.reserve(terms.size());
  for (const auto& t : terms) v.push_back(t.count);
  return v;
}

/// a(n) = c1 a(n-1) + ... + cq a(n-q) for every n >= offset + q.
struct LinearRecurrence {
  std::vector<BigRational> coefficients;
  std::size_t offset = 0;
  std::vector<BigInt> initial;  // a(offset) .. a(offset + q - 1)
  std::size_t verified_equations = 0;

  std::size_t order() const noexcept { return coefficients.size(); }

  /// Extends `seq` in place up to `length` terms.
  void extend(std::vector<BigInt>& seq, std::size_t length) const {
    while (seq.size() < length) {
      BigRational v = 0;
      for (std::size_t j = 0; j < order(); ++j) v += coefficients[j] * BigRational(seq[seq.size() - 1 - j]);
      if (denominator(v) != 1) throw std::domain_error("recurrence produces a non-integer term");
      seq.push_back(numerator(v));
    }
  }

  bool holds_on(const std::vector<BigInt>& seq) const {
    for (std::size_t n = offset + order(); n < seq.size(); ++n) {
      BigRational v = 0;
      for (std::size_t j = 0; j < order(); ++j) v += coefficients[j] * BigRational(seq[n - 1 - j]);
      if (v != BigRational(seq[n])) return false;
    }
    return true;
  }

  bool operator==(const LinearRecurrence&) const = default;
};

class InsufficientData : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

/// Solves rows * x = rhs exactly. Free variables are set to zero; returns
/// nullopt when the system is inconsistent.
inline std::optional<std::vector<BigRational>> solve_exact(std::vector<std::vector<BigRational>> rows,
                                                           std::vector<BigRational> rhs,
                                                           std::size_t unknowns) {
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < unknowns && r < rows.size(); ++col) {
    std::size_t pick = r;
    while (pick < rows.size() && rows[pick][col] == 0) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[pick], rows[r]);
    std::swap(rhs[pick], rhs[r]);
    const BigRational lead = rows[r][col];
    for (std::size_t k = col; k < unknowns; ++k) rows[r][k] /= lead;
    rhs[r] /= lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const BigRational factor = rows[i][col];
      for (std::size_t k = col; k < unknowns; ++k) rows[i][k] -= factor * rows[r][k];
      rhs[i] -= factor * rhs[r];
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < rows.size(); ++i)
    if (rhs[i] != 0) return std::nullopt;
  std::vector<BigRational> x(unknowns, BigRational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

}  // namespace detail

/// Minimal-order recurrence (order 1..max_order) holding on seq[offset..].
/// Every fit must be confirmed by at least two equations beyond the q needed
/// to determine its coefficients.
inline std::optional<LinearRecurrence> fit_linear_recurrence(const std::vector<BigInt>& seq,
                                                             std::size_t max_order,
                                                             std::size_t offset) {
  if (max_order < 1) throw std::invalid_argument("max_order must be at least 1");
  if (seq.size() < 2 * max_order + offset + 2)
    throw InsufficientData("need at least " + std::to_string(2 * max_order + offset + 2) +
                           " terms to fit order " + std::to_string(max_order) + " from offset " +
                           std::to_string(offset) + ", got " + std::to_string(seq.size()));
  for (std::size_t q = 1; q <= max_order; ++q) {
    std::vector<std::vector<BigRational>> rows;
    std::vector<BigRational> rhs;
    for (std::size_t n = offset + q; n < seq.size(); ++n) {
      std::vector<BigRational> row(q);
      for (std::size_t j = 0; j < q; ++j) row[j] = BigRational(seq[n - 1 - j]);
      rows.push_back(std::move(row));
      rhs.emplace_back(seq[n]);
    }
    const std::size_t equations = rows.size();
    auto solution = detail::solve_exact(std::move(rows), std::move(rhs), q);
    if (!solution) continue;
    LinearRecurrence rec;
    rec.coefficients = std::move(*solution);
    rec.offset = offset;
    rec.initial.assign(seq.begin() + static_cast<std::ptrdiff_t>(offset),
                       seq.begin() + static_cast<std::ptrdiff_t>(offset + q));
    rec.verified_equations = equations;
    return rec;
  }
  return std::nullopt;
}

/// Integer polynomial, coefficient of x^j at index j.
using IntPolynomial = std::vector<BigInt>;

/// numerator / denominator with integer coefficients.
struct RationalGF {
  IntPolynomial numerator;
  IntPolynomial denominator;

  bool operator==(const RationalGF&) const = default;
};

namespace detail {

inline void trim(IntPolynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline BigInt lcm_of_denominators(const std::vector<BigRational>& values) {
  BigInt l = 1;
  for (const auto& v : values) l = boost::multiprecision::lcm(l, denominator(v));
  return l;
}

}  // namespace detail

/// Generating function sum_n head[n] x^n for a sequence that follows `rec`
/// from its offset on. The denominator is 1 - c1 x - ... - cq x^q scaled to
/// integer coefficients with positive constant term; the numerator absorbs the
/// terms before the recurrence takes hold.
inline RationalGF rational_gf(const LinearRecurrence& rec, const std::vector<BigInt>& head) {
  const std::size_t q = rec.order();
  const std::size_t span = rec.offset + q;
  if (head.size() < span) throw InsufficientData("head must cover the recurrence's initial terms");
  if (!rec.holds_on(head)) throw std::invalid_argument("recurrence does not hold on the given terms");

  const BigInt scale = detail::lcm_of_denominators(rec.coefficients);
  IntPolynomial den(q + 1);
  den[0] = scale;
  for (std::size_t j = 0; j < q; ++j) {
    const BigRational c = rec.coefficients[j] * BigRational(scale);
    den[j + 1] = -numerator(c);
  }

  IntPolynomial num(span, BigInt(0));
  for (std::size_t n = 0; n < span; ++n)
    for (std::size_t j = 0; j <= std::min(n, q); ++j) num[n] += den[j] * head[n - j];

  BigInt content = 0;
  for (const auto& c : num) content = boost::multiprecision::gcd(content, c);
  for (const auto& c : den) content = boost::multiprecision::gcd(content, c);
  if (content > 1) {
    for (auto& c : num) c /= content;
    for (auto& c : den) c /= content;
  }
  detail::trim(num);
  detail::trim(den);
  return {std::move(num), std::move(den)};
}

/// First K Taylor coefficients of the generating function.
inline std::vector<BigInt> series_coefficients(const RationalGF& gf, std::size_t count) {
  if (gf.denominator.empty() || gf.denominator[0] == 0)
    throw std::domain_error("denominator has zero constant term");
  std::vector<BigRational> a;
  a.reserve(count);
  const BigRational d0(gf.denominator[0]);
  for (std::size_t n = 0; n < count; ++n) {
    BigRational v = n < gf.numerator.size() ? BigRational(gf.numerator[n]) : BigRational(0);
    for (std::size_t j = 1; j < gf.denominator.size() && j <= n; ++j)
      v -= BigRational(gf.denominator[j]) * a[n - j];
    a.push_back(v / d0);
  }
  std::vector<BigInt> out;
  out.reserve(count);
  for (const auto& v : a) {
    if (denominator(v) != 1) throw std::domain_error("series has a non-integer coefficient");
    out.push_back(numerator(v));
  }
  return out;
}

/// e.g. "1 - 39*x + 337*x^2".
inline std::string polynomial_to_string(const IntPolynomial& p, const std::string& var = "x") {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p[j] == 0) continue;
    const bool negative = p[j] < 0;
    const BigInt mag = negative ? BigInt(-p[j]) : p[j];
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (j == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << var;
      if (j > 1) os << "^" << j;
    }
  }
  if (first) os << "0";
  return os.str();
}

inline std::string rational_to_string(const BigRational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

/// Conjectured recurrence and generating function for a family.
struct ConjectureReport {
  FamilySpec family;
  std::size_t max_order = 0;
  std::vector<FamilyTerm> terms;
  std::optional<LinearRecurrence> recurrence;
  std::optional<RationalGF> gf;

  bool all_unsolvable() const {
    return std::none_of(terms.begin(), terms.end(), [](const FamilyTerm& t) { return t.solvable(); });
  }

  /// First family index of the tail the recurrence describes: the terms from
  /// here on satisfy it, the first equation being at valid_from() + order.
  std::optional<int> valid_from() const {
    if (!recurrence) return std::nullopt;
    return family.first + static_cast<int>(recurrence->offset);
  }

  std::string text() const;
};

/// Best fit over all offsets: lowest order first, then earliest offset.
inline std::optional<LinearRecurrence> best_recurrence(const std::vector<BigInt>& seq,
                                                       std::size_t max_order) {
  std::optional<LinearRecurrence> best;
  for (std::size_t offset = 0; offset + 4 <= seq.size(); ++offset) {
    const std::size_t cap = std::min(max_order, (seq.size() - offset - 2) / 2);
    if (cap < 1) break;
    auto fit = fit_linear_recurrence(seq, cap, offset);
    if (fit && (!best || fit->order() < best->order())) best = std::move(fit);
  }
  return best;
}

inline ConjectureReport conjecture_report(const FamilySpec& fs, std::size_t max_order) {
  ConjectureReport report{fs, max_order, family_counts(fs), std::nullopt, std::nullopt};
  if (report.all_unsolvable()) return report;
  const auto seq = counts_only(report.terms);
  report.recurrence = best_recurrence(seq, max_order);
  if (report.recurrence) report.gf = rational_gf(*report.recurrence, seq);
  return report;
}

inline std::string ConjectureReport::text() const {
  std::ostringstream os;
  const int last = family.first + family.terms - 1;
  os << "Family: i+" << family.surplus << " missionaries, i cannibals, boat capacity "
     << family.boat_capacity << ", safety margin " << family.margin << " (i = " << family.first
     << ".." << last << ")\n";
  os << "Terms:";
  for (const auto& t : terms) {
    os << " " << t.count;
    if (!t.solvable()) os << "(unsolvable)";
  }
  os << "\n";
  if (all_unsolvable()) {
    os << "No solutions exist for any i in " << family.first << ".." << last << ".\n";
    return os.str();
  }
  if (!recurrence) {
    os << "No recurrence found up to order " << max_order << ".\n";
    return os.str();
  }
  const auto& rec = *recurrence;
  const int from = *valid_from();
  os << "Recurrence: a(i) =";
  bool first_term = true;
  for (std::size_t j = 0; j < rec.order(); ++j) {
    const BigRational& c = rec.coefficients[j];
    if (c == 0) continue;
    const bool negative = c < 0;
    os << (first_term ? (negative ? " -" : " ") : (negative ? " - " : " + "));
    first_term = false;
    const BigRational mag = negative ? BigRational(-c) : c;
    if (mag != 1) os << rational_to_string(mag) << "*";
    os << "a(i-" << (j + 1) << ")";
  }
  if (first_term) os << " 0";
  os << ", valid from i = " << from << " (order " << rec.order() << ", first equation at i = "
     << from + static_cast<int>(rec.order()) << ")\n";
  if (rec.order() == 1 && rec.coefficients[0] == 1)
    os << "Eventually constant: a(i) = " << rec.initial[0] << " for all i >= " << from << "\n";
  if (gf) {
    os << "Generating function: sum_{i>=" << family.first << "} a(i) x^(i-" << family.first
       << ") = (" << polynomial_to_string(gf->numerator) << ") / ("
       << polynomial_to_string(gf->denominator) << ")\n";
  }
  const std::size_t held_out = rec.verified_equations - rec.order();
  os << "Verification: " << rec.verified_equations << " equations hold, " << held_out
     << " beyond the " << rec.order() << " that determine the coefficients\n";
  return os.str();
}

}  // namespace rivercross
