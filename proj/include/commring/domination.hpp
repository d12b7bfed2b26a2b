#pragma once

#include <string>
#include <vector>

#include "commring/graph.hpp"

namespace commring {

struct DominationCertificate {
    enum Method { BranchAndBound, BruteForce };
    int gamma = 0;
    std::vector<int> witness;  // sorted vertex indices, |witness| == gamma
    Method method = BranchAndBound;
};

/// Degree-based bracketing of gamma.
struct BoundsReport {
    int lower = 0;
    int upper = 0;
    bool isolated_free = false;  // the n/2-type upper bounds applied
};

/// lower = ceil(m / (1 + max_degree)); upper = m - max_degree, tightened by
/// floor(m/2) and floor((m + 2 - min_degree)/2) when no vertex is isolated.
BoundsReport gamma_bounds(const SimpleGraph& g);

/// Exact domination number with witness, by branch and bound: branch on an
/// undominated vertex of maximum closed-neighbourhood coverage (ties to the
/// lowest index), candidates are its closed neighbourhood in index order.
DominationCertificate gamma_exact(const SimpleGraph& g);

/// Exact domination number by increasing-size subset enumeration; the
/// witness is the lexicographically first minimum dominating set.
/// Throws TooLarge above 24 vertices.
DominationCertificate gamma_bruteforce(const SimpleGraph& g);

/// Definitional check: every vertex is in d or adjacent to a member of d.
bool verify_dominating(const SimpleGraph& g, const std::vector<int>& d);

}  // namespace commring
