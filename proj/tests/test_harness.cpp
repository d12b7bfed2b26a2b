#include <doctest.h>

#include <filesystem>
#include <set>
#include <sstream>

#include "commring/claims.hpp"
#include "commring/harness.hpp"

#include "test_util.hpp"

using namespace commring;

namespace {

const CheckReport* find_report(const std::vector<CheckReport>& reports,
                               const std::string& check,
                               const std::string& subject) {
    for (const auto& r : reports)
        if (r.check == check && r.subject == subject) return &r;
    return nullptr;
}

bool all_pass(const std::vector<CheckReport>& reports,
              const std::string& check) {
    bool seen = false;
    for (const auto& r : reports)
        if (r.check == check) {
            seen = true;
            if (r.status != CheckReport::Status::Pass) return false;
        }
    return seen;
}

}  // namespace

TEST_CASE("claim catalog ids are unique and suites are known") {
    std::set<std::string> ids;
    std::set<std::string> suites = {"prelim", "exclusions", "theoremA", "p2",
                                    "theoremB", "products", "signed"};
    for (const auto& c : claim_catalog()) {
        CHECK(ids.insert(std::string(c.id)).second);
        CHECK(suites.count(std::string(c.suite)) == 1);
        CHECK_FALSE(c.statement.empty());
        CHECK_FALSE(c.hypothesis.empty());
    }
    CHECK(find_claim("ThmA.i") != nullptr);
    CHECK(find_claim("NoSuchClaim") == nullptr);
}

TEST_CASE("analyze_ring on E4") {
    RingAnalysis a = analyze_ring(presentation_E(2));
    CHECK(a.n == 4);
    CHECK(a.zero_center);
    CHECK(a.g.vertex_count() == 3);
    CHECK(a.comps.size() == 3);
    CHECK(a.dom_g.gamma == 3);
    CHECK(a.dom_gbar.gamma == 1);
    CHECK(a.sig_g.gamma_s == 3);
    CHECK(a.sig_gbar.gamma_s == 1);
}

TEST_CASE("check_preliminaries on E4 passes and skips Thm20") {
    auto reports = check_preliminaries(presentation_E(2));
    CHECK(all_pass(reports, "Lem3"));
    CHECK(all_pass(reports, "Lem30"));
    CHECK(all_pass(reports, "Lem40"));
    CHECK(all_pass(reports, "Thm17"));
    CHECK(all_pass(reports, "Thm18"));  // diam(Gbar)=1 applies to E4
    CHECK(all_pass(reports, "Thm21"));
    CHECK(all_pass(reports, "Lem10"));
    CHECK(all_pass(reports, "Lem8"));
    CHECK(find_report(reports, "Thm20", "E4") == nullptr);  // needs n > 4
}

TEST_CASE("check_preliminaries on E9 reports diameter 2") {
    auto reports = check_preliminaries(presentation_E(3));
    const CheckReport* r = find_report(reports, "Thm20", "E9");
    REQUIRE(r != nullptr);
    CHECK(r->status == CheckReport::Status::Pass);
    CHECK(r->evidence["diameter"] == 2);
}

TEST_CASE("check_theorem_A on the order-4 rings") {
    auto reports =
        check_theorem_A({presentation_E(2), presentation_F(2), zero_ring(3)});
    const CheckReport* e = find_report(reports, "ThmA.i", "E4");
    REQUIRE(e != nullptr);
    CHECK(e->status == CheckReport::Status::Pass);
    CHECK(e->evidence["sum"] == 4);
    CHECK(all_pass(reports, "ThmA.ii"));
    CHECK(all_pass(reports, "ThmA.iii"));
    // the commutative ring is skipped entirely
    for (const auto& rep : reports) CHECK(rep.subject != "Z3zero");
}

TEST_CASE("check_order_p2") {
    auto corpus = test_util::noncommutative_corpus(4);
    auto reports = check_order_p2(2, corpus);
    const CheckReport* gamma_e = find_report(reports, "ThmP2.gamma", "E4");
    REQUIRE(gamma_e != nullptr);
    CHECK(gamma_e->status == CheckReport::Status::Pass);
    CHECK(gamma_e->evidence["gamma"] == 3);
    const CheckReport* thm2 = find_report(reports, "Thm2", "order4");
    REQUIRE(thm2 != nullptr);
    CHECK(thm2->status == CheckReport::Status::Pass);
    CHECK(all_pass(reports, "Lem37"));
    CHECK(all_pass(reports, "Lem38"));
}

TEST_CASE("check_theorem_B finds the order-8 decomposition") {
    auto corpus = test_util::noncommutative_corpus(8);
    auto reports = check_theorem_B(corpus, 2);
    CHECK(all_pass(reports, "ThmB.shape"));
    CHECK(all_pass(reports, "ThmB.gamma"));
    CHECK(all_pass(reports, "Lem11"));
    // the signed analogue is false at p = 2: gamma_s = l1 + l2, not twice it
    bool signed_seen = false;
    for (const auto& r : reports)
        if (r.check == "ThmB.signed") {
            signed_seen = true;
            CHECK(r.status == CheckReport::Status::Fail);
            CHECK(r.evidence["gamma_s"] == 5);
        }
    CHECK(signed_seen);
}

TEST_CASE("check_products on the acceptance instances") {
    FiniteRing e4 = presentation_E(2);
    FiniteRing f4 = presentation_F(2);

    auto thmc = check_products({e4, f4});
    const CheckReport* c = find_report(thmc, "ThmC", "E4xF4");
    REQUIRE(c != nullptr);
    CHECK(c->status == CheckReport::Status::Pass);
    CHECK(c->evidence["gamma_product"] == 3);
    CHECK(all_pass(thmc, "ThmE.bound"));

    auto sp = check_products({e4, zero_ring(2)});
    const CheckReport* s = find_report(sp, "ThmSP", "E4xZ2zero");
    REQUIRE(s != nullptr);
    CHECK(s->status == CheckReport::Status::Pass);
    CHECK(s->evidence["iso_strong_product"] == true);

    // factors with different gammas: the minimum is the smaller one
    auto mixed = check_products({e4, presentation_E(3)});
    const CheckReport* mx = find_report(mixed, "ThmC", "E4xE9");
    REQUIRE(mx != nullptr);
    CHECK(mx->status == CheckReport::Status::Pass);
    CHECK(mx->evidence["gamma_product"] == 3);
    CHECK(mx->evidence["factor_gammas"] == nlohmann::json({3, 4}));
}

TEST_CASE("check_signed on E4") {
    auto reports = check_signed({presentation_E(2)});
    const CheckReport* d = find_report(reports, "ThmD.i", "E4");
    REQUIRE(d != nullptr);
    CHECK(d->status == CheckReport::Status::Pass);
    CHECK(d->evidence["gamma_s"] == 3);
    const CheckReport* t22 = find_report(reports, "Thm22", "E4");
    REQUIRE(t22 != nullptr);
    CHECK(t22->status == CheckReport::Status::Pass);
    CHECK(t22->evidence["gamma_s_complement"] == 1);
    CHECK(all_pass(reports, "Thm23"));
    CHECK(all_pass(reports, "Lem43"));
}

TEST_CASE("run_harness to order 6 is all pass or vacuous") {
    HarnessOptions opt;
    opt.max_order = 6;
    HarnessResult res = run_harness(opt);
    CHECK(res.ok());
    CHECK(res.fail == 0);
    CHECK(res.pass > 0);
    CHECK(res.vacuous > 0);  // e.g. order-8 and odd-order classes are empty

    // reports are sorted by (check, subject)
    for (size_t i = 1; i < res.reports.size(); ++i) {
        const auto& a = res.reports[i - 1];
        const auto& b = res.reports[i];
        CHECK((a.check < b.check ||
               (a.check == b.check && a.subject <= b.subject)));
    }

    // every emitted id is in the catalog, and every catalog id is emitted
    std::set<std::string> emitted;
    for (const auto& r : res.reports) {
        CHECK(find_claim(r.check) != nullptr);
        emitted.insert(r.check);
    }
    for (const auto& c : claim_catalog())
        CHECK(emitted.count(std::string(c.id)) == 1);
}

TEST_CASE("run_harness to order 8 reports the ThmB.signed counterexamples") {
    HarnessOptions opt;
    opt.max_order = 8;
    opt.suites = {"theoremB"};
    HarnessResult res = run_harness(opt);
    CHECK_FALSE(res.ok());
    CHECK(res.fail == 3);
    for (const auto& r : res.reports)
        if (r.status == CheckReport::Status::Fail) CHECK(r.check == "ThmB.signed");
}

TEST_CASE("suite selection limits the emitted claims") {
    HarnessOptions opt;
    opt.max_order = 4;
    opt.suites = {"exclusions"};
    HarnessResult res = run_harness(opt);
    for (const auto& r : res.reports) {
        const ClaimInfo* c = find_claim(r.check);
        REQUIRE(c != nullptr);
        CHECK(c->suite == "exclusions");
    }
    CHECK(res.ok());
}

TEST_CASE("jsonl output has exactly the contract fields") {
    HarnessOptions opt;
    opt.max_order = 4;
    opt.suites = {"theoremA"};
    HarnessResult res = run_harness(opt);
    std::string jsonl = to_jsonl(res.reports);

    size_t lines = 0, pos = 0;
    while ((pos = jsonl.find('\n', pos)) != std::string::npos) {
        ++lines;
        ++pos;
    }
    CHECK(lines == res.reports.size());

    std::istringstream in(jsonl);
    std::string line;
    while (std::getline(in, line)) {
        auto j = nlohmann::json::parse(line);
        REQUIRE(j.is_object());
        CHECK(j.size() == 5);
        CHECK(j.contains("check"));
        CHECK(j.contains("subject"));
        CHECK(j.contains("status"));
        CHECK(j.contains("evidence"));
        CHECK(j.contains("millis"));
    }
}

TEST_CASE("harness reports are identical across worker counts") {
    HarnessOptions opt;
    opt.max_order = 8;
    opt.suites = {"prelim", "signed"};
    opt.jobs = 1;
    HarnessResult seq = run_harness(opt);
    opt.jobs = 4;
    HarnessResult par = run_harness(opt);
    REQUIRE(seq.reports.size() == par.reports.size());
    for (size_t i = 0; i < seq.reports.size(); ++i) {
        CHECK(seq.reports[i].check == par.reports[i].check);
        CHECK(seq.reports[i].subject == par.reports[i].subject);
        CHECK(seq.reports[i].status == par.reports[i].status);
        CHECK(seq.reports[i].evidence == par.reports[i].evidence);
    }
}

TEST_CASE("harness corpus caching via a directory") {
    std::string dir = "/tmp/commring_test_harness_cache";
    std::filesystem::remove_all(dir);

    HarnessOptions opt;
    opt.max_order = 4;
    opt.suites = {"theoremA"};
    opt.corpus_dir = dir;
    HarnessResult first = run_harness(opt);
    CHECK(std::filesystem::exists(manifest_path(dir, 4)));

    HarnessResult second = run_harness(opt);  // now reads the cache
    REQUIRE(first.reports.size() == second.reports.size());
    for (size_t i = 0; i < first.reports.size(); ++i) {
        CHECK(first.reports[i].check == second.reports[i].check);
        CHECK(first.reports[i].subject == second.reports[i].subject);
        CHECK(first.reports[i].evidence == second.reports[i].evidence);
    }
}
