#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "commring/domination.hpp"
#include "commring/enumerate.hpp"
#include "commring/graph.hpp"
#include "commring/ring.hpp"
#include "commring/signed_domination.hpp"

namespace commring {

/// One verdict for one claim on one subject.
struct CheckReport {
    enum class Status { Pass, Fail, Vacuous };
    std::string check;    // claim id from the catalog
    std::string subject;  // ring name, order tag or graph name
    Status status = Status::Pass;
    nlohmann::ordered_json evidence;
    long long millis = 0;
};

std::string to_string(CheckReport::Status s);

/// Everything the per-ring checks consume, solved once per corpus ring.
struct RingAnalysis {
    FiniteRing ring;
    int n = 0;
    int center_size = 0;
    bool zero_center = false;
    SimpleGraph g;     // commuting graph
    SimpleGraph gbar;  // its complement
    std::vector<std::vector<int>> comps;  // components of g
    std::vector<ComponentShape> shapes;
    DominationCertificate dom_g, dom_gbar;
    SignedCertificate sig_g, sig_gbar;
};

/// Throws EmptyVertexSet for commutative rings.
RingAnalysis analyze_ring(const FiniteRing& r);

// One function per claim family; subjects without the hypothesis are
// skipped, so an empty result means the class was empty.
std::vector<CheckReport> check_preliminaries(const FiniteRing& r);
std::vector<CheckReport> check_theorem_A(const std::vector<FiniteRing>& corpus);
std::vector<CheckReport> check_order_p2(int p,
                                        const std::vector<FiniteRing>& corpus);
std::vector<CheckReport> check_theorem_B(const std::vector<FiniteRing>& corpus,
                                         int p);
std::vector<CheckReport> check_products(const std::vector<FiniteRing>& factors);
std::vector<CheckReport> check_signed(const std::vector<FiniteRing>& corpus);

struct HarnessOptions {
    int max_order = 9;          // corpus covers orders 2..max_order
    std::string corpus_dir;     // ring-file cache; "" = in-memory only
    std::vector<std::string> suites = {"all"};
    long long node_budget = 1'000'000'000;
    int jobs = 1;
};

struct HarnessResult {
    std::vector<CheckReport> reports;  // sorted by (check, subject)
    int pass = 0, fail = 0, vacuous = 0;
    bool ok() const { return fail == 0; }
};

/// Assembles the corpus (enumerating non-commutative rings per order, or
/// reusing corpus_dir), runs the selected suites over it plus the
/// constructed families, and emits one vacuous record per selected claim
/// whose hypothesis class was empty.
HarnessResult run_harness(const HarnessOptions& options);

/// One compact JSON object per line: check, subject, status, evidence,
/// millis.
std::string to_jsonl(const std::vector<CheckReport>& reports);

}  // namespace commring
