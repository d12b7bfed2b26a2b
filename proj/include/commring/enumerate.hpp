#pragma once

#include <optional>
#include <string>
#include <vector>

#include "commring/ring.hpp"

namespace commring {

/// Request for an exhaustive enumeration of rings of one order, up to ring
/// isomorphism.
struct EnumerationSpec {
    int order = 0;  // 2..16
    bool require_noncommutative = false;
    bool require_zero_center = false;
    /// Restrict to one additive group, as a descending invariant-factor
    /// chain (e.g. {4,2}); nullopt = all abelian groups of the order.
    std::optional<std::vector<int>> group;
    long long node_budget = 1'000'000'000;
    int jobs = 1;
};

struct EnumerationResult {
    std::vector<FiniteRing> rings;  // one per class, named r{order}_{seq}
    bool exhaustive = true;         // false when the node budget cut the search
    long long nodes = 0;            // search nodes spent
};

/// All abelian groups of order n up to isomorphism, as descending
/// invariant-factor chains in descending lexicographic order
/// (e.g. 8 -> {8}, {4,2}, {2,2,2}).
/// Throws UnsupportedOrder outside 2..16.
std::vector<std::vector<int>> abelian_groups(int n);

/// Yields exactly one representative per isomorphism class matching the
/// filters. For each additive group, generator-pair products are chosen in
/// lexicographic order and extended bilinearly, pruning on the first
/// associativity violation; accepted tables are deduplicated with ring_iso.
/// Output order (and hence the r{order}_{seq} names) is deterministic and
/// independent of spec.jobs.
EnumerationResult enumerate_rings(const EnumerationSpec& spec);

/// Corpus directory layout: r{order}_{seq}.ring files plus one
/// manifest_{order}.json per enumerated order.
struct CorpusManifest {
    int order = 0;
    bool noncommutative = false;
    bool zero_center = false;
    std::string group_selector;  // "" = all groups
    int count = 0;
    bool exhaustive = true;
    long long nodes = 0;
    std::vector<std::string> files;
};

std::string manifest_path(const std::string& dir, int order);
void write_corpus(const std::string& dir, const EnumerationSpec& spec,
                  const EnumerationResult& result);
std::optional<CorpusManifest> read_manifest(const std::string& dir, int order);
std::vector<FiniteRing> read_corpus_rings(const std::string& dir,
                                          const CorpusManifest& manifest);

}  // namespace commring
