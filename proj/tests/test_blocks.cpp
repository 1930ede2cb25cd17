#include <catch_amalgamated.hpp>

#include "spindual/verify.hpp"

using namespace spindual;

TEST_CASE("the rank two block", "[blocks]") {
    const auto b = build_block({3, 2}, InfChar({3, 2}), 1);
    REQUIRE(b.size() == 9);
    CHECK(b.kappa == 0);
    CHECK(b.cross_roots == std::vector<RootVec>{{1, 0}, {0, 1}});
    CHECK(b.ext_roots == std::vector<RootVec>{{1, -1}});
    CHECK(b.cayley_roots == simple_roots(2));
    for (int i = 0; i < b.size(); ++i) {
        CHECK(b.index_of(b.params[i]) == i);
        CHECK(b.lengths[i] == length(b.params[i]));
        if (i) CHECK(b.lengths[i - 1] <= b.lengths[i]);
    }
    for (const auto& col : b.ext)
        for (const auto& g : col) CHECK(g.kappa == 1);

    const auto d = build_dual_block(b);
    CHECK(d.size() == 9);
    CHECK(d.chi == -1);
    CHECK(d.setting.form == RealForm{3, 2});
    CHECK(verify_intertwining(b, d).ok());
}

TEST_CASE("block columns are consistent", "[blocks]") {
    for (int n : {2, 4})
        for (const auto& b : all_blocks(n)) {
            for (const auto& col : b.cross)
                for (int i = 0; i < b.size(); ++i) CHECK(col[col[i]] == i);
            for (std::size_t k = 0; k < b.cayley_roots.size(); ++k)
                for (int i = 0; i < b.size(); ++i) {
                    const auto& c = b.cayley[k][i];
                    CHECK(c.defined == !c.targets.empty());
                    for (int j : c.targets) {
                        CHECK((c.up ? b.lengths[j] > b.lengths[i] : b.lengths[j] < b.lengths[i]));
                        const auto& back = b.cayley[k][j].targets;
                        CHECK(std::find(back.begin(), back.end(), i) != back.end());
                    }
                }
            CHECK(group_action(b).ok());
        }
}

TEST_CASE("blocks and their duals intertwine", "[blocks]") {
    for (const auto& b : all_blocks(2)) {
        const auto d = build_dual_block(b);
        CHECK(d.size() == b.size());
        CHECK(verify_intertwining(b, d).ok());
        CHECK(build_dual_block(d).params == b.params);
    }
}

TEST_CASE("block errors", "[blocks]") {
    CHECK_THROWS_AS(build_block({4, 3}, InfChar({5, 3, 1}), 1), std::invalid_argument);
    CHECK_THROWS_AS(build_block({5, 0}, InfChar({3, 2}), 1), std::invalid_argument);
}

TEST_CASE("matrix helpers", "[blocks]") {
    const IntMatrix a{{1, 2, -1}, {0, 1, 3}, {0, 0, 1}};
    const auto inv = unitriangular_inverse(a);
    CHECK(inv == IntMatrix{{1, -2, 7}, {0, 1, -3}, {0, 0, 1}});
    CHECK(multiply(a, inv) == identity_matrix(3));
    CHECK(multiply(inv, a) == identity_matrix(3));
    CHECK_THROWS_AS(unitriangular_inverse(IntMatrix{{2, 0}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(unitriangular_inverse(IntMatrix{{1, 0}, {1, 1}}), std::invalid_argument);
    CHECK(length_unitriangular(a, {0, 1, 2}));
    CHECK_FALSE(length_unitriangular(a, {0, 0, 2}));
    CHECK_FALSE(nonnegative(a));
    CHECK(nonnegative(identity_matrix(4)));
    const auto id = identity_matrix(3);
    CHECK(check_mult_invariants({id, id}, {0, 1, 1}).ok());
    CHECK_FALSE(check_mult_invariants({a, a}, {0, 1, 2}).ok());
}

TEST_CASE("duality of multiplicity matrices", "[blocks]") {
    const auto b = build_block({3, 2}, InfChar({3, 2}), 1);
    const auto d = build_dual_block(b);
    const auto mb = klv_matrices(b), md = klv_matrices(d);
    CHECK(check_mult_invariants(mb, b.lengths).ok());
    CHECK(check_mult_invariants(md, d.lengths).ok());
    const auto r = verify_duality(b, d, mb, md);
    CHECK(r.ok());
    CHECK(r.checks == 81);
    auto bad = mb;
    bad.M[0][2] += 1;
    CHECK_FALSE(verify_duality(b, d, bad, md).ok());
}
