#include <catch_amalgamated.hpp>

#include <set>

#include "spindual/verify.hpp"

using namespace spindual;

namespace {

Setting setting(int p, int q, std::vector<int> twice) { return {{p, q}, family(InfChar(std::move(twice)))}; }

std::vector<RootVec> noncompact_imaginary(const GenuineParam& g) {
    std::vector<RootVec> out;
    for (const auto& a : positive_roots(g.theta.rank()))
        if (root_type(g.theta, a) == RootType::imaginary && eval_grading(g.theta, g.eps, a)) out.push_back(a);
    return out;
}

}  // namespace

TEST_CASE("families of infinitesimal characters", "[params]") {
    const auto f = family(InfChar({3, 2}));
    REQUIRE(f.members.size() == 2);
    CHECK(f.members[0] == InfChar({3, 2}));
    CHECK(f.members[1] == InfChar({2, 1}));
    CHECK(f.index_of(InfChar({7, 4})) == 0);
    CHECK(f.index_of(InfChar({4, 1})) == 1);
    CHECK_THROWS_AS(f.index_of(InfChar({3, 1})), std::invalid_argument);
    CHECK(family(InfChar({3, 1})).members.size() == 1);
    CHECK(fractional_pattern(InfChar({5, 4, 3})) == 0b101);
    CHECK(canonical_rep(3, 0b101) == InfChar({3, 2, 1}));
    CHECK(canonical_rep(2, 0) == InfChar({4, 2}));
    for (int n = 1; n <= 5; ++n)
        for (std::uint64_t pat = 0; pat < (std::uint64_t{1} << n); ++pat) {
            const auto l = canonical_rep(n, pat);
            CHECK(fractional_pattern(l) == pat);
            CHECK(family(l).members.size() == binomial(n, std::popcount(pat)));
            CHECK(family(l).members[family(l).index_of(l)] == l);
        }
}

TEST_CASE("parameter enumeration", "[params]") {
    const auto s = setting(3, 2, {3, 2});
    const auto plus = enumerate_params(s, 0, 1);
    CHECK(plus.size() == 9);
    CHECK(slice(plus, SignedPerm::identity(2), 1).size() == 2);
    CHECK(enumerate_params(s, 0).size() == enumerate_params(s, 0, 1).size() + enumerate_params(s, 0, -1).size());
    for (const auto& g : plus) CHECK(is_valid_param(g, s));
    std::vector<int> lengths;
    for (const auto& g : plus) lengths.push_back(length(g));
    CHECK(lengths == std::vector<int>{0, 0, 1, 1, 1, 2, 2, 3, 3});
    CHECK_THROWS_AS(enumerate_params(setting(2, 3, {3, 2}), 0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_params(setting(5, 4, {3, 2}), 0), std::invalid_argument);
}

TEST_CASE("slice sizes match orbit and extension counts", "[params]") {
    for (int n : {2, 4})
        for (int q = 0; q <= n; ++q) {
            const RealForm form{2 * n + 1 - q, q};
            for (std::uint64_t pat = 0; pat < (std::uint64_t{1} << n); ++pat) {
                const Setting s{form, family(canonical_rep(n, pat))};
                const int k = s.fam.index_of(canonical_rep(n, pat));
                const auto all = enumerate_params(s, k);
                for (const auto& t : list_involutions(n))
                    for (int chi : {1, -1})
                        CHECK(slice(all, t, chi).size() == physical_slice_count(t, s, k, chi));
            }
        }
}

TEST_CASE("cross actions", "[params]") {
    for (const auto& s : {setting(3, 2, {3, 2}), setting(5, 4, {7, 5, 3, 2}), setting(7, 2, {4, 3, 2, 1})}) {
        const int n = s.rank();
        for (int k = 0; k < static_cast<int>(s.fam.members.size()); ++k)
            for (const auto& g : enumerate_params(s, k)) {
                const auto& l = s.lambda(k);
                for (const auto& a : positive_roots(n)) {
                    if (l.integral_on(a)) {
                        const auto h = cross_param(a, g, s);
                        CHECK(is_valid_param(h, s));
                        CHECK(cross_param(a, h, s) == g);
                        CHECK(cross_param(negate(a), g, s) == h);
                    } else if (is_long(a)) {
                        const auto h = ext_cross_param(a, g, s);
                        CHECK(is_valid_param(h, s));
                        CHECK(ext_cross_param(a, h, s) == g);
                        CHECK_THROWS_AS(cross_param(a, g, s), std::invalid_argument);
                    }
                }
                // braid relations between simple roots
                const auto simple = simple_roots(n);
                for (std::size_t i = 0; i + 1 < simple.size(); ++i) {
                    const auto &a = simple[i], &b = simple[i + 1];
                    const int m = i + 2 == simple.size() ? 4 : 3;
                    GenuineParam x = g, y = g;
                    for (int r = 0; r < m; ++r) {
                        x = simple_cross(r % 2 ? b : a, x, s);
                        y = simple_cross(r % 2 ? a : b, y, s);
                    }
                    CHECK(x == y);
                }
            }
    }
    const auto s = setting(3, 2, {3, 2});
    const auto g = enumerate_params(s, 0, 1).front();
    CHECK_THROWS_AS(ext_cross_param({0, 1}, g, s), std::invalid_argument);
    CHECK_THROWS_AS(ext_cross_param({1, 1}, g, setting(3, 2, {4, 2})), std::invalid_argument);
    CHECK_THROWS_AS(cross_param({2, 0}, g, s), std::invalid_argument);
}

TEST_CASE("non-simple cross actions agree with simple words", "[params]") {
    const auto s = setting(5, 4, {6, 4, 2, 1});
    for (const auto& g : enumerate_params(s, 0))
        for (const auto& a : positive_roots(4)) {
            if (!s.lambda(0).integral_on(a)) continue;
            // s_a = s_b s_c s_b with b simple and c = s_b(a)
            for (const auto& b : simple_roots(4)) {
                const auto c = reflect(b, a);
                if (c == a || !is_positive(c)) continue;
                if (!s.lambda(0).integral_on(b)) continue;
                const auto via = cross_param(b, cross_param(c, cross_param(b, g, s), s), s);
                CHECK(via == cross_param(a, g, s));
            }
        }
}

TEST_CASE("Cayley transforms of parameters", "[params]") {
    for (const auto& s : {setting(3, 2, {3, 2}), setting(5, 4, {7, 5, 3, 2}), setting(7, 2, {4, 3, 2, 1})})
        for (int k = 0; k < static_cast<int>(s.fam.members.size()); ++k)
            for (const auto& g : enumerate_params(s, k))
                for (const auto& a : noncompact_imaginary(g)) {
                    const auto ups = cayley_up(g, a, s);
                    CHECK((ups.size() == 1 || ups.size() == 2));
                    for (const auto& h : ups) {
                        CHECK(length(h) > length(g));
                        CHECK(root_type(h.theta, a) == RootType::real);
                        const auto downs = cayley_down(h, a, s);
                        CHECK(std::find(downs.begin(), downs.end(), g) != downs.end());
                    }
                }
    const auto s = setting(3, 2, {3, 2});
    const auto g = slice(enumerate_params(s, 0, 1), SignedPerm::identity(2), 1).front();
    const RootVec compact = eval_grading(g.theta, g.eps, {1, 0}) ? RootVec{0, 1} : RootVec{1, 0};
    CHECK_THROWS_AS(cayley_up(g, compact, s), std::invalid_argument);
    CHECK_THROWS_AS(cayley_down(g, {1, 0}, s), std::invalid_argument);
}

TEST_CASE("principal classes", "[params]") {
    const auto s = setting(5, 4, {7, 5, 3, 2});
    std::set<PrincipalClassLabel> seen;
    for (const auto& g : enumerate_params(s, 0)) {
        if (!even_parity(g.theta)) {
            CHECK_THROWS_AS(principal_class(g), std::invalid_argument);
            CHECK(g.pc == 0);
            continue;
        }
        seen.insert(principal_class(g));
        CHECK(transported_z_sign(g) * transported_z_sign(GenuineParam{g.theta, g.eps, g.chi, g.pc ^ 1, g.kappa}) == -1);
    }
    CHECK(seen.size() == 4);
}

TEST_CASE("psi is an involution reversing length", "[params]") {
    for (int n : {2, 4})
        for (int q = 0; q <= n; ++q)
            for (std::uint64_t pat = 0; pat < (std::uint64_t{1} << n); ++pat) {
                const Setting s{{2 * n + 1 - q, q}, family(canonical_rep(n, pat))};
                const int k = s.fam.index_of(canonical_rep(n, pat));
                std::set<std::tuple<int, int, std::string>> images;
                for (const auto& g : enumerate_params(s, k)) {
                    const auto d = dual_setting(g, s);
                    const auto h = psi(g, s);
                    CHECK(is_valid_param(h, d));
                    CHECK(h.chi == -g.chi);
                    CHECK(length(h) == n * (n + 1) / 2 - length(g));
                    CHECK(psi(h, d) == g);
                    CHECK(dual_setting(h, d).form == s.form);
                    images.insert({d.form.q, h.chi, describe(h)});
                }
                CHECK(images.size() == enumerate_params(s, k).size());
            }
    const auto s3 = setting(7, 0, {5, 3, 1});
    CHECK_THROWS_AS(psi(enumerate_params(s3, 0).front(), s3), std::invalid_argument);
}
