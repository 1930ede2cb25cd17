#include <catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include "spindual/verify.hpp"

using namespace spindual;

namespace {

SignedPerm make(std::vector<std::uint8_t> bits, std::vector<int> perm) {
    SignedPerm w;
    w.bits = std::move(bits);
    w.perm = std::move(perm);
    return w;
}

}  // namespace

TEST_CASE("composition follows the action convention", "[weylb]") {
    const auto t = make({0, 0, 0, 1}, {0, 2, 1, 3});
    CHECK(compose(t, t) == SignedPerm::identity(4));
    CHECK(act(t, std::vector<int>{1, 2, 3, 4}) == std::vector<int>{1, 3, 2, -4});

    const auto s12 = reflection({1, -1});
    CHECK(compose(s12, s12) == SignedPerm::identity(2));
    const auto both = compose(reflection({1, 0}), reflection({0, 1}));
    CHECK(act(both, std::vector<int>{1, 2}) == std::vector<int>{-1, -2});
    CHECK(act(SignedPerm::minus_one(2), std::vector<int>{1, 2}) == std::vector<int>{-1, -2});
    CHECK_THROWS_AS(compose(SignedPerm::identity(2), SignedPerm::identity(3)), std::invalid_argument);
    CHECK_THROWS_AS(act(t, std::vector<int>{1, 2}), std::invalid_argument);
}

TEST_CASE("group axioms hold exhaustively in small rank", "[weylb]") {
    for (int n = 1; n <= 3; ++n) {
        const auto g = all_signed_perms(n);
        REQUIRE(g.size() == weyl_order(n));
        const auto e = SignedPerm::identity(n);
        std::vector<std::vector<int>> probes;
        for (int i = 0; i < n; ++i) probes.push_back(unit(n, i));
        for (const auto& a : g) {
            CHECK(compose(a, inverse(a)) == e);
            CHECK(compose(e, a) == a);
            for (const auto& b : g) {
                const auto ab = compose(a, b);
                for (const auto& v : probes) CHECK(act(ab, v) == act(a, act(b, v)));
                for (const auto& c : g) CHECK(compose(ab, c) == compose(a, compose(b, c)));
            }
        }
    }
}

TEST_CASE("action is faithful and orthogonal at rank 4", "[weylb]") {
    const auto g = all_signed_perms(4);
    std::set<std::vector<int>> images;
    const std::vector<int> v{1, 2, 3, 4}, u{3, -1, 2, 5};
    for (const auto& w : g) {
        images.insert(act(w, v));
        CHECK(dot(act(w, v), act(w, u)) == dot(v, u));
    }
    CHECK(images.size() == g.size());
}

TEST_CASE("diagrams render and parse", "[weylb]") {
    CHECK(render_diagram(make({0, 0, 0, 1}, {0, 2, 1, 3})) == "+ 3 2 -");
    CHECK(render_diagram(make({1, 1, 1, 0}, {0, 2, 1, 3})) == "- (3) (2) +");
    CHECK(render_diagram(SignedPerm::identity(2)) == "+ +");
    CHECK(parse_diagram("+ 3 2 −") == make({0, 0, 0, 1}, {0, 2, 1, 3}));
    CHECK(parse_diagram("(2)(1)") == parse_diagram("(2) (1)"));
    for (const auto& t : list_involutions(4)) CHECK(parse_diagram(render_diagram(t)) == t);
    CHECK_THROWS_AS(parse_diagram("2 +"), std::invalid_argument);
    CHECK_THROWS_AS(parse_diagram("+ x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_diagram(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_diagram("(2 1"), std::invalid_argument);
}

TEST_CASE("dualizing negates the involution", "[weylb]") {
    CHECK(render_diagram(dualize_involution(parse_diagram("+ 3 2 -"))) == "- (3) (2) +");
    CHECK(dualize_involution(SignedPerm::identity(3)) == SignedPerm::minus_one(3));
    const auto g = all_signed_perms(3);
    for (const auto& t : list_involutions(3)) {
        CHECK(dualize_involution(dualize_involution(t)) == t);
        for (const auto& w : g) CHECK(dualize_involution(conjugate(w, t)) == conjugate(w, dualize_involution(t)));
    }
}

TEST_CASE("root types", "[weylb]") {
    const auto t = parse_diagram("+ -");
    CHECK(root_type(t, {1, 0}) == RootType::imaginary);
    CHECK(root_type(t, {0, 1}) == RootType::real);
    CHECK(root_type(t, {1, -1}) == RootType::complex);
    CHECK_THROWS_AS(root_type(t, {1, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(root_type(t, {2, 0}), std::invalid_argument);
    // imaginary roots form a subsystem whose Weyl group has order |W_i|
    for (const auto& x : list_involutions(4)) {
        const auto s = stats(x);
        int imag = 0;
        for (const auto& a : all_roots(4)) imag += root_type(x, a) == RootType::imaginary;
        const int k = s.n_c / 2;
        CHECK(imag == 2 * s.n_s * s.n_s + 2 * k);  // B_{n_s} plus k copies of A_1
        CHECK(centralizer_factor_orders(x).w_i == (std::uint64_t{1} << s.n_s) * factorial(s.n_s) * (std::uint64_t{1} << k));
    }
}

TEST_CASE("involution counts against brute force", "[weylb]") {
    CHECK(list_involutions(1).size() == 2);
    CHECK(list_involutions(2).size() == 6);
    CHECK_THROWS_AS(list_involutions(9), std::out_of_range);
    CHECK(list_involutions(9, 9).size() > 0);
    for (int n = 1; n <= 4; ++n) {
        std::size_t brute = 0;
        for (const auto& w : all_signed_perms(n)) brute += is_involution(w);
        CHECK(list_involutions(n).size() == brute);
        std::uint64_t by_class = 0;
        for (int nc = 0; nc <= n; nc += 2)
            for (int ns = 0; ns + nc <= n; ++ns) by_class += class_size(n, nc, ns);
        CHECK(by_class == brute);
        const auto classes = brute_involution_classes(n);
        CHECK(classes.size() == num_conjugacy_classes(n));
        for (const auto& [rep, size] : classes) {
            const auto [nc, ns] = conjugacy_invariants(rep);
            CHECK(size == class_size(n, nc, ns));
        }
    }
    CHECK(num_conjugacy_classes(1) == 2);
    CHECK(num_conjugacy_classes(2) == 4);
    CHECK(num_conjugacy_classes(4) == 9);
    for (int n = 2; n <= 8; n += 2) {
        const auto c = num_conjugacy_classes(n);
        const auto r = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(c))));
        CHECK(r * r == c);
    }
}

TEST_CASE("class sizes and invariants", "[weylb]") {
    CHECK(class_size(4, 0, 4) == 1);
    CHECK(class_size(4, 2, 1) == 24);
    CHECK(class_size(2, 2, 0) == 2);
    CHECK_THROWS_AS(class_size(4, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(class_size(2, 2, 1), std::invalid_argument);
    CHECK(conjugacy_invariants(parse_diagram("+ 3 2 -")) == std::pair{2, 1});
    CHECK(conjugacy_invariants(SignedPerm::identity(4)) == std::pair{0, 4});
    CHECK(conjugacy_invariants(parse_diagram("2 1")) == conjugacy_invariants(parse_diagram("(2) (1)")));
    // invariants separate classes at rank 3
    const auto g = all_signed_perms(3);
    const auto invs = list_involutions(3);
    for (const auto& a : invs)
        for (const auto& b : invs) {
            bool conj = false;
            for (const auto& w : g) conj = conj || conjugate(w, a) == b;
            CHECK(conj == (conjugacy_invariants(a) == conjugacy_invariants(b)));
        }
}

TEST_CASE("centralizer factor orders", "[weylb]") {
    const auto c1 = centralizer_factor_orders(SignedPerm::identity(2));
    CHECK((c1.w_i == 8 && c1.w_r == 1 && c1.w_c == 1));
    const auto c2 = centralizer_factor_orders(parse_diagram("2 1"));
    CHECK((c2.w_i == 2 && c2.w_r == 2 && c2.w_c == 1));
    const auto g = all_signed_perms(4);
    for (const auto& t : list_involutions(4)) {
        const auto c = centralizer_factor_orders(t);
        const auto [nc, ns] = conjugacy_invariants(t);
        CHECK(c.w_i * c.w_r * c.w_c == weyl_order(4) / class_size(4, nc, ns));
        std::uint64_t cent = 0;
        for (const auto& w : g) cent += conjugate(w, t) == t;
        CHECK(cent == c.w_i * c.w_r * c.w_c);
    }
}

TEST_CASE("statistics and length", "[weylb]") {
    CHECK(length(SignedPerm::minus_one(2)) == 3);
    CHECK(length(parse_diagram("2 1")) == 1);
    CHECK(length(parse_diagram("(2) (1)")) == 2);
    CHECK(length(SignedPerm::identity(3)) == 0);
    const InfChar l({3, 2});
    const auto s = stats(SignedPerm::identity(2), l);
    CHECK((*s.n_int == 1 && *s.n_half == 1 && *s.sym == 1));
    for (int n = 1; n <= 5; ++n)
        for (const auto& t : list_involutions(n)) {
            const auto st = stats(t);
            CHECK(st.n_s + st.n_r + st.n_c == n);
            CHECK(st.n_c % 2 == 0);
            CHECK(st.length >= 0);
            CHECK(st.length + length(dualize_involution(t)) == n * (n + 1) / 2);
            CHECK(st.i_b == (st.n_s > 0));
            CHECK(st.r_b == (st.n_r > 0));
            if (n % 2 == 0) CHECK(st.i_p == st.r_p);
        }
    CHECK_THROWS_AS(stats(SignedPerm::identity(3), l), std::invalid_argument);
}

TEST_CASE("infinitesimal characters", "[weylb]") {
    CHECK(parse_inf_char("3/2,1").twice == std::vector<int>{3, 2});
    CHECK(parse_inf_char("1.5, 1").twice == std::vector<int>{3, 2});
    CHECK(parse_inf_char("2,1.50,0.5").twice == std::vector<int>{4, 3, 1});
    CHECK(to_string(InfChar({5, 4, 3, 2})) == "5/2,2,3/2,1");
    CHECK_THROWS_AS(parse_inf_char("1,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_inf_char("1,3/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_inf_char("1/3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_inf_char("1.25"), std::invalid_argument);
    CHECK_THROWS_AS(parse_inf_char("1,0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_inf_char("a"), std::invalid_argument);
    const InfChar l({3, 2});
    CHECK(l.integral_on({0, 1}));
    CHECK(l.integral_on({1, 0}));
    CHECK_FALSE(l.integral_on({1, -1}));
}
