#include <algorithm>

#include "doctest.h"
#include "nzc/ffield.hpp"
#include "nzc/invariants.hpp"

using namespace nzc;

namespace {
const Caps kCaps{};

std::uint64_t binom(int n, int k) {
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}
} // namespace

TEST_CASE("diameter on both routes") {
    const FiniteField f2(2), f3(3), f5(5);
    auto check_both = [&](const FiniteField& f, int n, std::uint64_t expect) {
        const Diameter de = diameter(explicit_graph(f, n, kCaps));
        const Diameter dc = diameter(class_graph(f, n));
        CHECK_FALSE(de.infinite);
        CHECK_FALSE(dc.infinite);
        CHECK(de.value == expect);
        CHECK(dc.value == expect);
    };
    check_both(f2, 2, 2);
    check_both(f2, 3, 2);
    check_both(f2, 4, 2);
    check_both(f3, 2, 2);
    check_both(f5, 2, 2);
    check_both(f5, 1, 1); // complete K4
    check_both(f3, 1, 1);
    check_both(f2, 1, 0); // a single vertex
}

TEST_CASE("completeness on both routes") {
    const FiniteField f2(2), f3(3), f5(5);
    CHECK(is_complete(explicit_graph(f5, 1, kCaps)));
    CHECK(is_complete(class_graph(f5, 1)));
    CHECK(is_complete(explicit_graph(f2, 1, kCaps)));
    CHECK_FALSE(is_complete(explicit_graph(f2, 2, kCaps)));
    CHECK_FALSE(is_complete(class_graph(f2, 2)));
    CHECK_FALSE(is_complete(explicit_graph(f3, 2, kCaps)));
    CHECK_FALSE(is_complete(class_graph(f3, 3)));
}

TEST_CASE("independence number matches the dimension") {
    const FiniteField f2(2), f3(3), f4(4), f5(5);
    CHECK(independence_number(explicit_graph(f2, 3, kCaps)) == 3);
    CHECK(independence_number(explicit_graph(f5, 1, kCaps)) == 1);
    CHECK(independence_number(explicit_graph(f3, 2, kCaps)) == 2);
    CHECK(independence_number(explicit_graph(f4, 3, kCaps)) == 3);
    CHECK(independence_number(explicit_graph(f4, 4, kCaps)) == 4); // 255 vertices, at the cap
    CHECK(independence_number_classes(class_graph(f3, 2)) == 2);
    CHECK(independence_number_classes(class_graph(f2, 20)) == 20);
    // 511 vertices is over the search cap
    CHECK_THROWS_AS(independence_number(explicit_graph(f2, 9, kCaps)), CapExceeded);
}

TEST_CASE("independence search agrees with plain enumeration") {
    const FiniteField f2(2), f3(3), f5(5);
    for (auto [f, n] : std::vector<std::pair<const FiniteField*, int>>{
             {&f2, 2}, {&f2, 3}, {&f2, 4}, {&f3, 2}, {&f5, 1}, {&f5, 2}}) {
        CAPTURE(f->q());
        CAPTURE(n);
        const ExplicitGraph g = explicit_graph(*f, n, kCaps);
        size_t largest = 0;
        for (const auto& s : enumerate_independent_sets(g)) largest = std::max(largest, s.size());
        CHECK(independence_number(g) == static_cast<int>(largest));
    }
}

TEST_CASE("domination witness is the all-ones vertex") {
    const FiniteField f2(2), f5(5);
    const DominationResult d22 = domination_number(explicit_graph(f2, 2, kCaps));
    CHECK(d22.ok);
    CHECK(d22.number == 1);
    CHECK(d22.witness == 2); // (1,1)
    const DominationResult d24 = domination_number(explicit_graph(f2, 4, kCaps));
    CHECK(d24.ok);
    CHECK(d24.witness == 14); // (1,1,1,1)
    const DominationResult d51 = domination_number(explicit_graph(f5, 1, kCaps));
    CHECK(d51.ok);
    CHECK(d51.witness == 0); // (1)
    const DominationResult c24 = domination_number(class_graph(f2, 4));
    CHECK(c24.ok);
    CHECK(c24.number == 1);
    CHECK(c24.witness == 14);
}

TEST_CASE("maximum minimal dominating set size equals the dimension") {
    const FiniteField f2(2), f3(3), f5(5);
    const MinimalDominatingResult m22 = max_minimal_dominating_size(explicit_graph(f2, 2, kCaps), 16);
    CHECK(m22.max_size == 2);
    CHECK(m22.witness == std::vector<std::uint64_t>{0, 1}); // {(0,1),(1,0)}
    CHECK(max_minimal_dominating_size(explicit_graph(f2, 3, kCaps), 16).max_size == 3);
    CHECK(max_minimal_dominating_size(explicit_graph(f2, 4, kCaps), 16).max_size == 4);
    CHECK(max_minimal_dominating_size(explicit_graph(f3, 2, kCaps), 16).max_size == 2);
    CHECK_THROWS_AS(max_minimal_dominating_size(explicit_graph(f5, 2, kCaps), 16), CapExceeded);
}

TEST_CASE("independent sets enumerate in depth-first pre-order") {
    const FiniteField f2(2), f3(3), f5(5);
    const auto sets22 = enumerate_independent_sets(explicit_graph(f2, 2, kCaps));
    const std::vector<std::vector<std::uint64_t>> expect22 = {{}, {0}, {0, 1}, {1}, {2}};
    CHECK(sets22 == expect22);

    const auto sets51 = enumerate_independent_sets(explicit_graph(f5, 1, kCaps));
    REQUIRE(sets51.size() == 5); // empty set and four singletons
    for (size_t i = 1; i < sets51.size(); ++i) CHECK(sets51[i].size() == 1);

    const auto sets23 = enumerate_independent_sets(explicit_graph(f2, 3, kCaps));
    const std::vector<std::uint64_t> unit_vectors = {0, 1, 3}; // (0,0,1),(0,1,0),(1,0,0)
    CHECK(std::count(sets23.begin(), sets23.end(), unit_vectors) == 1);
    for (const auto& s : sets23) CHECK(s.size() <= 3);

    const auto capped = enumerate_independent_sets(explicit_graph(f2, 2, kCaps), 1);
    CHECK(capped.size() == 4); // empty set and three singletons

    CHECK_THROWS_AS(enumerate_independent_sets(explicit_graph(f3, 4, kCaps)), CapExceeded);
}

TEST_CASE("graph independence forces linear independence, never conversely") {
    const FiniteField f2(2), f3(3);
    CHECK(verify_independence_implies_linear(f2, explicit_graph(f2, 3, kCaps)).pass);
    CHECK(verify_independence_implies_linear(f3, explicit_graph(f3, 2, kCaps)).pass);
    CHECK(verify_independence_implies_linear(f2, explicit_graph(f2, 4, kCaps)).pass);
    // the fixed converse witness: linearly independent yet adjacent
    const Vec a{1, 1}, b{0, 1};
    CHECK(rank(f2, {a, b}) == 2);
    CHECK(adjacent(a, b));
}

TEST_CASE("full report for the 3-vertex path freezes byte for byte") {
    const FiniteField f(2);
    const InvariantReport r = analyze(f, 2, kCaps);
    CHECK_FALSE(r.any_failure());
    const std::string expect =
        "{\n"
        "  \"q\": 2,\n"
        "  \"n\": 2,\n"
        "  \"vertexCount\": 3,\n"
        "  \"edgeCount\": 2,\n"
        "  \"diameter\": 2,\n"
        "  \"isComplete\": false,\n"
        "  \"independenceNumber\": 2,\n"
        "  \"dominationNumber\": 1,\n"
        "  \"maxMinimalDominatingSize\": 2,\n"
        "  \"degreeHistogram\": {\n"
        "    \"1\": 2,\n"
        "    \"2\": 1\n"
        "  },\n"
        "  \"theoremChecks\": {\n"
        "    \"degrees\": \"pass\",\n"
        "    \"diameter\": \"pass\",\n"
        "    \"complete\": \"pass\",\n"
        "    \"domination\": \"pass\",\n"
        "    \"minimal-dominating\": \"pass\",\n"
        "    \"independence\": \"pass\",\n"
        "    \"lin-ind\": \"pass\"\n"
        "  }\n"
        "}";
    CHECK(report_json(r).dump(2) == expect);
    CHECK(report_json(analyze(f, 2, kCaps)).dump(2) == expect); // determinism
}

TEST_CASE("one-dimensional reports mark the diameter claim not applicable") {
    const FiniteField f5(5), f2(2);
    const InvariantReport r51 = analyze(f5, 1, kCaps);
    CHECK_FALSE(r51.any_failure());
    CHECK(r51.complete);
    CHECK(r51.diam.value == 1);
    CHECK(r51.independence == 1);
    CHECK(r51.domination == 1);
    CHECK(r51.max_minimal == 1);
    bool saw = false;
    for (const TheoremCheck& c : r51.checks)
        if (c.name == "diameter") {
            CHECK(c.status == CheckStatus::not_applicable);
            saw = true;
        }
    CHECK(saw);

    const InvariantReport r21 = analyze(f2, 1, kCaps);
    CHECK_FALSE(r21.any_failure());
    CHECK(r21.diam.value == 0);
    CHECK(r21.complete);
    CHECK(r21.degree_histogram == std::vector<std::pair<std::uint64_t, std::uint64_t>>{{0, 1}});
}

TEST_CASE("large explicit instances skip the capped checks") {
    const FiniteField f(2);
    const InvariantReport r = analyze(f, 9, kCaps); // 511 vertices
    CHECK_FALSE(r.any_failure());
    CHECK(r.independence == 9); // class-route count
    for (const TheoremCheck& c : r.checks) {
        if (c.name == "minimal-dominating" || c.name == "independence" || c.name == "lin-ind")
            CHECK(c.status == CheckStatus::skipped);
        if (c.name == "degrees" || c.name == "diameter" || c.name == "complete" ||
            c.name == "domination")
            CHECK(c.status == CheckStatus::pass);
    }
}

TEST_CASE("class-route reports match the combinatorial edge count") {
    const FiniteField f(2);
    const InvariantReport r = analyze(f, 13, kCaps); // 8191 vertices, class route
    CHECK_FALSE(r.any_failure());
    CHECK(r.vertex_count == 8191);
    // handshake: 2|E| = sum over k of C(13,k) (q-1)^k ((q^k-1) q^(13-k) - 1)
    std::uint64_t twice = 0;
    for (int k = 1; k <= 13; ++k)
        twice += binom(13, k) * (((std::uint64_t{1} << k) - 1) * (std::uint64_t{1} << (13 - k)) - 1);
    CHECK(r.edge_count == twice / 2);
    CHECK(r.independence == 13);
    CHECK_FALSE(r.complete);
    CHECK(r.diam.value == 2);
}

TEST_CASE("a basis argument re-expresses the graph but keeps every invariant") {
    const FiniteField f(3);
    const Basis b = make_basis(f, {{1, 1}, {2, 1}});
    const InvariantReport r = analyze(f, 2, kCaps, &b);
    CHECK_FALSE(r.any_failure());
    CHECK(r.vertex_count == 8);
    CHECK(r.edge_count == 24);
    CHECK(r.diam.value == 2);
    CHECK(r.independence == 2);
    CHECK(r.domination == 1);
    CHECK(r.max_minimal == 2);
    CHECK_THROWS_AS(analyze(FiniteField(2), 13, kCaps, &b), CapExceeded); // basis needs explicit route
}

TEST_CASE("check status names") {
    CHECK(std::string(to_string(CheckStatus::pass)) == "pass");
    CHECK(std::string(to_string(CheckStatus::fail)) == "fail");
    CHECK(std::string(to_string(CheckStatus::not_applicable)) == "not-applicable");
    CHECK(std::string(to_string(CheckStatus::skipped)) == "skipped");
}
