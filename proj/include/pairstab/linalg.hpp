#pragma once

#include <vector>

#include "pairstab/rational.hpp"

namespace pairstab {

/// Dense matrix over Rational for exact elimination. Rows are vectors of
/// equal length.
using RatMatrix = std::vector<std::vector<Rational>>;

/// In-place reduced row echelon form; returns the pivot column indices.
std::vector<int> rref(RatMatrix& m);

int rank(RatMatrix m);

/// Rank computed with early exit once `stop` pivots are found (still exact;
/// only the work is bounded).
int rank_at_least(RatMatrix m, int stop);

/// Canonical nullspace basis from the RREF: one vector per free column, with
/// a 1 in the free position and pivot rows solved. Vectors are indexed by the
/// original column order.
std::vector<std::vector<Rational>> nullspace(RatMatrix m);

/// Is there any x with M x = rhs? (Exact feasibility of a linear system.)
bool solvable(RatMatrix m, std::vector<Rational> rhs);

Rational determinant(RatMatrix m);

/// Streaming rank tracker: rows arrive one at a time and are reduced against
/// the pivots seen so far. Lets basis sweeps stop as soon as a target rank is
/// reached.
class IncrementalRank {
public:
    /// Returns true when the row increased the rank.
    bool add(std::vector<Rational> row);
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    std::vector<std::vector<Rational>> rows_;  // echelon rows, unit pivots
    std::vector<size_t> pivot_cols_;
};

}  // namespace pairstab
