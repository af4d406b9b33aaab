#include <doctest.h>

#include <string>
#include <vector>

#include "nucleus/galois.hpp"
#include "oracles.hpp"
#include "random_support.hpp"

using namespace nucleus;
using namespace nucleus::galois;
using nucleus::testing::subset_from_mask;

namespace {

Context worked_context() {
    Profunctor<bool> m(3, 2);
    m << true, false,
         true, true,
         false, false;
    return Context({"1", "2", "3"}, {"a", "b"}, m);
}

Context identity_context() {
    return Context({"g1", "g2"}, {"m1", "m2"}, identity_profunctor<bool>(2));
}

Subset objs(const Context& ctx, std::vector<std::string> labels) { return ctx.objects_from_labels(labels); }
Subset attrs(const Context& ctx, std::vector<std::string> labels) { return ctx.attributes_from_labels(labels); }

Concept make(const Context& ctx, std::vector<std::string> extent, std::vector<std::string> intent) {
    return {objs(ctx, std::move(extent)), attrs(ctx, std::move(intent))};
}

}  // namespace

TEST_CASE("context validation") {
    CHECK_THROWS_AS(Context({"a", "a"}, {"m"}, Profunctor<bool>::Constant(2, 1, true)), LabelError);
    CHECK_THROWS_AS(Context({"a"}, {"m"}, Profunctor<bool>::Constant(2, 1, true)), SizeError);
    CHECK_THROWS_AS(objs(worked_context(), {"4"}), LabelError);
}

TEST_CASE("polars") {
    const auto ctx = worked_context();
    CHECK(polar_up(ctx, objs(ctx, {"1", "2"})) == attrs(ctx, {"a"}));
    CHECK(polar_up(ctx, objs(ctx, {})) == attrs(ctx, {"a", "b"}));
    CHECK(polar_down(ctx, attrs(ctx, {"a", "b"})) == objs(ctx, {"2"}));
    CHECK(polar_down(ctx, attrs(ctx, {})) == objs(ctx, {"1", "2", "3"}));

    const auto id = identity_context();
    CHECK(polar_up(id, objs(id, {"g1"})) == attrs(id, {"m1"}));
    CHECK(polar_down(id, attrs(id, {"m2"})) == objs(id, {"g2"}));
}

TEST_CASE("close_extent") {
    const auto ctx = worked_context();
    CHECK(close_extent(ctx, objs(ctx, {"1"})) == objs(ctx, {"1", "2"}));
    CHECK(close_extent(ctx, objs(ctx, {"1", "2"})) == objs(ctx, {"1", "2"}));
    CHECK(close_extent(ctx, objs(ctx, {"1", "2", "3"})) == objs(ctx, {"1", "2", "3"}));
}

TEST_CASE("enumerate_concepts on the worked examples") {
    const auto id = identity_context();
    const auto lid = enumerate_concepts(id);
    REQUIRE(lid.concepts.size() == 4);
    CHECK(nucleus::testing::extents_of(lid) == nucleus::testing::ExtentSet{{}, {0}, {1}, {0, 1}});
    for (const auto& c : lid.concepts) CHECK(is_concept(id, c));

    const auto ctx = worked_context();
    const auto lat = enumerate_concepts(ctx);
    REQUIRE(lat.concepts.size() == 3);
    // lectic order of extents: {2}, {1,2}, {1,2,3}
    CHECK(lat.concepts[0] == make(ctx, {"2"}, {"a", "b"}));
    CHECK(lat.concepts[1] == make(ctx, {"1", "2"}, {"a"}));
    CHECK(lat.concepts[2] == make(ctx, {"1", "2", "3"}, {}));

    const Context full({"x", "y"}, {"p", "q", "r"}, Profunctor<bool>::Constant(2, 3, true));
    const auto lfull = enumerate_concepts(full);
    REQUIRE(lfull.concepts.size() == 1);
    CHECK(lfull.concepts[0] == make(full, {"x", "y"}, {"p", "q", "r"}));
}

TEST_CASE("lattice meet and join") {
    const auto ctx = worked_context();
    const auto c12 = make(ctx, {"1", "2"}, {"a"});
    const auto c2 = make(ctx, {"2"}, {"a", "b"});
    CHECK(lattice_meet(ctx, c12, c2) == c2);
    CHECK(lattice_join(ctx, c2, c12) == c12);
    CHECK(lattice_meet(ctx, c12, c12) == c12);
    CHECK_THROWS_AS(lattice_meet(ctx, make(ctx, {"1"}, {"a"}), c2), PreconditionError);

    // identity context: atoms meet at bottom, join at top
    const auto id = identity_context();
    const auto g1 = make(id, {"g1"}, {"m1"});
    const auto g2 = make(id, {"g2"}, {"m2"});
    CHECK(lattice_meet(id, g1, g2) == make(id, {}, {"m1", "m2"}));
    CHECK(lattice_join(id, g1, g2) == make(id, {"g1", "g2"}, {}));
}

TEST_CASE("export_dot") {
    auto count = [](const std::string& s, const std::string& needle) {
        std::size_t n = 0;
        for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
        return n;
    };

    const Context full({"x"}, {"p"}, Profunctor<bool>::Constant(1, 1, true));
    const auto one = export_dot(full, enumerate_concepts(full));
    CHECK(count(one, "[label=") == 1);
    CHECK(count(one, "->") == 0);

    const auto id = identity_context();
    const auto diamond = export_dot(id, enumerate_concepts(id));
    CHECK(count(diamond, "[label=") == 4);
    CHECK(count(diamond, "->") == 4);
    CHECK(diamond.find("{g1}\\n{m1}") != std::string::npos);

    const auto ctx = worked_context();
    const auto chain = export_dot(ctx, enumerate_concepts(ctx));
    CHECK(count(chain, "->") == 2);
    CHECK(chain.find("c0 -> c1;") != std::string::npos);
    CHECK(chain.find("c1 -> c2;") != std::string::npos);
}

TEST_CASE("property: Galois connection and antitone polars, exhaustive up to 4x4") {
    nucleus::testing::Rng rng(23);
    for (Eigen::Index n = 1; n <= 4; ++n)
        for (Eigen::Index k = 1; k <= 4; ++k)
            for (int trial = 0; trial < 6; ++trial) {
                std::vector<std::string> g, m;
                for (Eigen::Index i = 0; i < n; ++i) g.push_back("g" + std::to_string(i));
                for (Eigen::Index j = 0; j < k; ++j) m.push_back("m" + std::to_string(j));
                const Context ctx(g, m, nucleus::testing::random_relation(rng, n, k));
                for (unsigned long sm = 0; sm < (1ul << n); ++sm) {
                    const Subset s = subset_from_mask(n, sm);
                    for (unsigned long tm = 0; tm < (1ul << k); ++tm) {
                        const Subset t = subset_from_mask(k, tm);
                        CHECK(is_subset(s, polar_down(ctx, t)) == is_subset(t, polar_up(ctx, s)));
                    }
                    for (unsigned long sm2 = 0; sm2 < (1ul << n); ++sm2) {
                        const Subset s2 = subset_from_mask(n, sm2);
                        if (is_subset(s, s2)) {
                            CHECK(is_subset(polar_up(ctx, s2), polar_up(ctx, s)));
                            CHECK(is_subset(close_extent(ctx, s), close_extent(ctx, s2)));
                        }
                    }
                }
            }
}

TEST_CASE("property: NextClosure equals brute force and meets/joins match the order") {
    nucleus::testing::Rng rng(29);
    for (int trial = 0; trial < 50; ++trial) {
        const Eigen::Index n = 1 + trial % 12;
        const Eigen::Index k = 1 + (trial * 7) % 12;
        std::vector<std::string> g, m;
        for (Eigen::Index i = 0; i < n; ++i) g.push_back("g" + std::to_string(i));
        for (Eigen::Index j = 0; j < k; ++j) m.push_back("m" + std::to_string(j));
        const Context ctx(g, m, nucleus::testing::random_relation(rng, n, k, 0.4));
        const auto lattice = enumerate_concepts(ctx);
        CHECK(nucleus::testing::extents_of(lattice) == nucleus::testing::brute_force_extents(ctx.incidence()));
        CHECK(nucleus::testing::extents_of(lattice).size() == lattice.concepts.size());

        for (std::size_t i = 0; i < lattice.concepts.size(); ++i)
            for (std::size_t j = 0; j < lattice.concepts.size(); ++j) {
                const auto inf = nucleus::testing::order_infimum(lattice, i, j);
                const auto sup = nucleus::testing::order_supremum(lattice, i, j);
                CHECK(lattice_meet(ctx, lattice.concepts[i], lattice.concepts[j]) == lattice.concepts[inf]);
                CHECK(lattice_join(ctx, lattice.concepts[i], lattice.concepts[j]) == lattice.concepts[sup]);
            }
    }
}
