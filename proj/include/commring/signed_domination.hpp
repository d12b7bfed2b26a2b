#pragma once

#include <vector>

#include "commring/graph.hpp"

namespace commring {

struct SignedCertificate {
    int gamma_s = 0;
    std::vector<int> minus_set;  // sorted; weight = m - 2*|minus_set|
};

/// Exact signed domination number. A +-1 assignment is feasible iff every
/// closed neighbourhood holds at most floor(deg(v)/2) minus-vertices, so the
/// search maximises |V-| under those caps; gamma_s = m - 2*max|V-|.
SignedCertificate gamma_signed_exact(const SimpleGraph& g);

/// Definitional check: the assignment (-1 on minus_set, +1 elsewhere) sums
/// to at least 1 over every closed neighbourhood.
bool verify_signed(const SimpleGraph& g, const std::vector<int>& minus_set);

}  // namespace commring
