#pragma once

// Reference values for the classic (3,3,2,0) instance and the (n+9, n, 2, 0)
// family.

#include <string>
#include <vector>

#include "rivercross/transfer.hpp"

namespace fixtures {

inline const std::vector<std::string> kClassicSolutions = {
    "[[3, 3, 1], [2, 2, 0], [3, 2, 1], [3, 0, 0], [3, 1, 1], [1, 1, 0], [2, 2, 1], [0, 2, 0], [0, 3, 1], [0, 1, 0], [0, 2, 1], [0, 0, 0]]",
    "[[3, 3, 1], [2, 2, 0], [3, 2, 1], [3, 0, 0], [3, 1, 1], [1, 1, 0], [2, 2, 1], [0, 2, 0], [0, 3, 1], [0, 1, 0], [1, 1, 1], [0, 0, 0]]",
    "[[3, 3, 1], [3, 1, 0], [3, 2, 1], [3, 0, 0], [3, 1, 1], [1, 1, 0], [2, 2, 1], [0, 2, 0], [0, 3, 1], [0, 1, 0], [0, 2, 1], [0, 0, 0]]",
    "[[3, 3, 1], [3, 1, 0], [3, 2, 1], [3, 0, 0], [3, 1, 1], [1, 1, 0], [2, 2, 1], [0, 2, 0], [0, 3, 1], [0, 1, 0], [1, 1, 1], [0, 0, 0]]",
};

struct Term {
  int e1, e2;
  long long coef;
};

inline rivercross::SparsePolynomial poly(const std::vector<Term>& terms) {
  rivercross::SparsePolynomial p(2);
  for (const auto& t : terms) p.add_term({t.e1, t.e2}, t.coef);
  return p;
}

// g_1..g_6 and f_1..f_5 of the transfer iteration.
inline const std::vector<std::vector<Term>> kG = {
    {{3, 2, 1}, {3, 1, 1}, {2, 2, 1}},
    {{3, 2, 3}, {3, 1, 5}, {2, 2, 5}, {3, 0, 2}},
    {{3, 2, 13}, {3, 1, 25}, {2, 2, 25}, {3, 0, 14}, {1, 1, 2}},
    {{3, 2, 63}, {3, 1, 127}, {2, 2, 127}, {3, 0, 80}, {1, 1, 18}, {0, 2, 2}},
    {{3, 2, 317}, {3, 1, 651}, {2, 2, 651}, {3, 0, 432}, {1, 1, 118}, {0, 2, 22}, {0, 1, 2}},
    {{3, 2, 1619}, {3, 1, 3353}, {2, 2, 3353}, {3, 0, 2284}, {1, 1, 690}, {0, 2, 164}, {0, 1, 28}, {0, 0, 4}},
};

inline const std::vector<std::vector<Term>> kF = {
    {{3, 3, 3}, {3, 2, 2}},
    {{3, 3, 13}, {3, 2, 12}, {3, 1, 2}},
    {{3, 3, 63}, {3, 2, 64}, {3, 1, 16}, {2, 2, 2}},
    {{3, 3, 317}, {3, 2, 334}, {3, 1, 98}, {2, 2, 20}, {0, 3, 2}},
    {{3, 3, 1619}, {3, 2, 1734}, {3, 1, 550}, {2, 2, 140}, {0, 3, 24}, {1, 1, 2}, {0, 2, 2}},
};

// Generating function for (n+9, n, 2, 0), constant term first.
inline const std::vector<long long> kReferenceDenominator = {1, -39, 337, -384, 4};
inline const std::vector<long long> kReferenceNumerator = {1,         6726,     736742,   2667061,
                                                           -31754164, 54735368, 63279616, -1774224};

}  // namespace fixtures
