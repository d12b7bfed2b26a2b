#pragma once

#include <string_view>
#include <vector>

namespace commring {

/// One entry of the claim catalog the harness verifies. Every emitted check
/// id appears here exactly once; the hypothesis string names the instance
/// class a vacuous record refers to.
struct ClaimInfo {
    std::string_view id;
    std::string_view suite;  // prelim | exclusions | theoremA | p2 | theoremB | products | signed
    std::string_view statement;
    std::string_view hypothesis;
};

const std::vector<ClaimInfo>& claim_catalog();

const ClaimInfo* find_claim(std::string_view id);

}  // namespace commring
