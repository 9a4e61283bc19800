// Tests for the generic filtered-algebra verification harness: the four
// axiom groups pass on honest instances and fail, with witnesses, on
// deliberately corrupted ones.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hcq/cellcheck.hpp"

#include <algorithm>
#include <string>
#include <vector>

using namespace hcq;

namespace {

std::vector<AxiomReport> run_all(const FilteredAlgebraInstance& inst) {
    std::vector<AxiomReport> all;
    for (auto& r : verify_ideal_filter(inst)) all.push_back(r);
    for (auto& r : verify_rigidity(inst)) all.push_back(r);
    for (int l = 0; l < (int)inst.labels.size(); ++l)
        for (auto& r : verify_morita_context(inst, l)) all.push_back(r);
    for (auto& r : verify_standard_basis(inst)) all.push_back(r);
    return all;
}

// replace the filter order by a linear extension of itself
FilteredAlgebraInstance totally_ordered(const FilteredAlgebraInstance& inst) {
    int nl = (int)inst.labels.size();
    std::vector<int> order(nl);
    for (int i = 0; i < nl; ++i) order[i] = i;
    // if i is strictly below j the set of labels above i strictly contains
    // the set above j, so sorting by that count descending is a linear
    // extension of the partial order
    auto above = [&](int i) {
        int c = 0;
        for (int j = 0; j < nl; ++j)
            if (inst.leq[i][j]) ++c;
        return c;
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return above(a) > above(b); });
    std::vector<int> pos(nl);
    for (int r = 0; r < nl; ++r) pos[order[r]] = r;
    FilteredAlgebraInstance out = inst;
    for (int i = 0; i < nl; ++i)
        for (int j = 0; j < nl; ++j) out.leq[i][j] = pos[i] <= pos[j];
    return out;
}

}  // namespace

TEST_CASE("all axiom groups pass on the Hecke algebra of rank three") {
    Ring FR = Ring::fraction_field();
    auto h3 = hecke_cell_instance(3, FR);
    auto reports = run_all(h3);
    CHECK(reports.size() == 4 + 1 + 5 * 3 + 2);
    for (const auto& r : reports) {
        INFO(r.axiom << ": " << r.witness);
        CHECK(r.pass);
        CHECK(r.witness.empty());
    }
}

TEST_CASE("all axiom groups pass on the twisted algebra of rank two") {
    Ring FR = Ring::fraction_field();
    auto h = hc_cell_instance(2, FR);
    for (const auto& r : run_all(h)) {
        INFO(r.axiom << ": " << r.witness);
        CHECK(r.pass);
    }
}

TEST_CASE("a dropped ideal generator breaks the filter axioms") {
    Ring FR = Ring::fraction_field();
    auto bad = hecke_cell_instance(3, FR);
    bad.ideal[1].pop_back();
    auto reports = verify_ideal_filter(bad);
    CHECK_FALSE(all_pass(reports));
    for (const auto& r : reports)
        if (!r.pass) CHECK_FALSE(r.witness.empty());
}

TEST_CASE("a sign error in the reverse pairing breaks the bimodule axioms") {
    Ring FR = Ring::fraction_field();
    auto h3 = hecke_cell_instance(3, FR);
    auto reports = verify_morita_context(h3, 1, /*flip_rho_sign=*/true);
    CHECK_FALSE(all_pass(reports));
    bool assoc_failed = false;
    for (const auto& r : reports)
        if (r.axiom == "associativity" && !r.pass) {
            assoc_failed = true;
            CHECK_FALSE(r.witness.empty());
        }
    CHECK(assoc_failed);
}

TEST_CASE("a rank-deficient layer module breaks the basis count") {
    Ring FR = Ring::fraction_field();
    auto bad = hecke_cell_instance(3, FR);
    bad.layer[1].M.resize(1);
    auto reports = verify_standard_basis(bad);
    CHECK_FALSE(all_pass(reports));
    for (const auto& r : reports)
        if (!r.pass) CHECK_FALSE(r.witness.empty());
}

TEST_CASE("rigidity holds for any linear extension of the filter order") {
    Ring FR = Ring::fraction_field();
    for (int n = 2; n <= 3; ++n) {
        auto inst = totally_ordered(hecke_cell_instance(n, FR));
        // sanity: the new order is total
        int nl = (int)inst.labels.size();
        for (int i = 0; i < nl; ++i)
            for (int j = 0; j < nl; ++j) CHECK((inst.leq[i][j] || inst.leq[j][i]));
        auto reports = verify_rigidity(inst);
        for (const auto& r : reports) {
            INFO("n=" << n << " " << r.axiom << ": " << r.witness);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("reports are deterministic across repeated runs") {
    Ring FR = Ring::fraction_field();
    auto h = hecke_cell_instance(2, FR);
    auto a = run_all(h);
    auto b = run_all(h);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].axiom == b[i].axiom);
        CHECK(a[i].pass == b[i].pass);
        CHECK(a[i].witness == b[i].witness);
    }
}
