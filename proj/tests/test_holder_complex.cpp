// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <map>

#include "whgeo/holder_complex.hpp"
#include "whgeo/prng.hpp"

using namespace whgeo;

namespace {

using E = HolderComplex::Edge;

HolderComplex path_abc(Rational b1, Rational b2) {
    return HolderComplex({"a", "b", "c"}, {E{"e0", "a", "b", b1}, E{"e1", "b", "c", b2}});
}

HolderComplex parallel_ab(Rational b1, Rational b2) {
    return HolderComplex({"a", "b"}, {E{"e0", "a", "b", b1}, E{"e1", "a", "b", b2}});
}

}  // namespace

TEST_CASE("vertex classification") {
    auto path = path_abc(Rational(2), Rational(3));
    CHECK(classify_vertex(path, "b") == VertexKind::Artificial);
    CHECK(classify_vertex(path, "a") == VertexKind::Regular);

    auto loop = parallel_ab(Rational(2), Rational(2));
    CHECK(classify_vertex(loop, "a") == VertexKind::LoopVertex);
    CHECK(classify_vertex(loop, "b") == VertexKind::LoopVertex);

    HolderComplex star({"v", "a", "b", "c"}, {E{"e0", "v", "a", Rational(1)},
                                              E{"e1", "v", "b", Rational(1)},
                                              E{"e2", "v", "c", Rational(1)}});
    CHECK(classify_vertex(star, "v") == VertexKind::Regular);
    CHECK_THROWS_WITH_AS(classify_vertex(star, "zz"), doctest::Contains("UnknownVertex"), Error);
}

TEST_CASE("is_canonical") {
    CHECK(is_canonical(parallel_ab(Rational(2), Rational(2))));
    CHECK(!is_canonical(parallel_ab(Rational(2), Rational(3))));
    CHECK(!is_canonical(path_abc(Rational(2), Rational(2))));
    CHECK(is_canonical(HolderComplex()));
}

TEST_CASE("canonicalize merges artificial vertices with min") {
    auto got = canonicalize(path_abc(Rational(2), Rational(3, 2)));
    REQUIRE(got.edges().size() == 1);
    CHECK(got.edges()[0].beta == Rational(3, 2));
    CHECK(got.vertices().size() == 2);
    CHECK(is_canonical(got));

    auto loops = canonicalize(parallel_ab(Rational(2), Rational(3)));
    REQUIRE(loops.edges().size() == 2);
    CHECK(loops.edges()[0].beta == Rational(2));
    CHECK(loops.edges()[1].beta == Rational(2));

    // already canonical stays identical
    auto canon = parallel_ab(Rational(2), Rational(2));
    auto again = canonicalize(canon);
    CHECK(complexes_isomorphic(canon, again));
    CHECK(export_json(again) == export_json(canonicalize(again)));
}

TEST_CASE("canonicalize a long cycle to a loop-vertex pair") {
    // 4-cycle with distinct exponents collapses to two parallel edges, min beta
    HolderComplex cyc({"a", "b", "c", "d"},
                      {E{"e0", "a", "b", Rational(3)}, E{"e1", "b", "c", Rational(2)},
                       E{"e2", "c", "d", Rational(5, 2)}, E{"e3", "d", "a", Rational(4)}});
    auto got = canonicalize(cyc);
    CHECK(got.vertices().size() == 2);
    REQUIRE(got.edges().size() == 2);
    CHECK(got.edges()[0].beta == Rational(2));
    CHECK(got.edges()[1].beta == Rational(2));
    CHECK(is_canonical(got));
    CHECK(*got.min_beta() == *cyc.min_beta());
}

TEST_CASE("isomorphism on small complexes") {
    auto a = parallel_ab(Rational(2), Rational(2));
    CHECK(complexes_isomorphic(a, a));
    HolderComplex b({"x", "y"}, {E{"p", "y", "x", Rational(2)}, E{"q", "x", "y", Rational(2)}});
    CHECK(complexes_isomorphic(a, b));

    HolderComplex e2({"a", "b"}, {E{"e", "a", "b", Rational(2)}});
    HolderComplex e3({"a", "b"}, {E{"e", "a", "b", Rational(3)}});
    CHECK(!complexes_isomorphic(e2, e3));

    HolderComplex tri1({"a", "b", "c"}, {E{"e0", "a", "b", Rational(1)},
                                         E{"e1", "b", "c", Rational(1)},
                                         E{"e2", "c", "a", Rational(2)}});
    HolderComplex tri2({"u", "v", "w"}, {E{"f0", "w", "u", Rational(2)},
                                         E{"f1", "u", "v", Rational(1)},
                                         E{"f2", "v", "w", Rational(1)}});
    CHECK(complexes_isomorphic(tri1, tri2));

    // same beta multiset, different structure
    HolderComplex pathx({"a", "b", "c", "d"}, {E{"e0", "a", "b", Rational(1)},
                                               E{"e1", "b", "c", Rational(1)},
                                               E{"e2", "c", "d", Rational(2)}});
    HolderComplex starx({"a", "b", "c", "d"}, {E{"e0", "a", "b", Rational(1)},
                                               E{"e1", "a", "c", Rational(1)},
                                               E{"e2", "a", "d", Rational(2)}});
    CHECK(!complexes_isomorphic(pathx, starx));

    std::vector<std::string> many;
    std::vector<E> none;
    for (int i = 0; i < 25; ++i) many.push_back("v" + std::to_string(i));
    CHECK_THROWS_WITH_AS(complexes_isomorphic(HolderComplex(many, none), HolderComplex(many, none)),
                         doctest::Contains("TooLarge"), Error);
}

TEST_CASE("export json/dot and re-import") {
    HolderComplex c({"a", "b"}, {E{"e0", "a", "b", Rational(3, 2)}});
    CHECK(export_json(c) ==
          R"({"vertices":[{"id":"a"},{"id":"b"}],"edges":[{"id":"e0","ends":["a","b"],"beta":"3/2"}]})");
    CHECK(export_json(HolderComplex()) == R"({"vertices":[],"edges":[]})");
    auto dot = export_dot(c);
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("\"a\" -- \"b\" [label=\"3/2\"]") != std::string::npos);

    auto back = import_json(export_json(c));
    CHECK(complexes_isomorphic(c, back));
    CHECK(export_json(back) == export_json(c));

    // beta always has an explicit denominator
    HolderComplex c2({"a", "b"}, {E{"e0", "a", "b", Rational(2)}});
    CHECK(export_json(c2).find("\"2/1\"") != std::string::npos);
}

TEST_CASE("canonicalize properties: idempotence, beta multiset, subdivision") {
    SplitMix64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        // random small complex
        size_t nv = static_cast<size_t>(rng.uniform(2, 7));
        std::vector<std::string> verts;
        for (size_t i = 0; i < nv; ++i) verts.push_back("v" + std::to_string(i));
        size_t ne = static_cast<size_t>(rng.uniform(1, 9));
        std::vector<E> edges;
        for (size_t i = 0; i < ne; ++i) {
            size_t u = static_cast<size_t>(rng.uniform(0, static_cast<long long>(nv - 1)));
            size_t v = static_cast<size_t>(rng.uniform(0, static_cast<long long>(nv - 1)));
            if (u == v) continue;
            long long den = rng.uniform(1, 2);
            edges.push_back(E{"e" + std::to_string(i), verts[u], verts[v],
                              Rational(rng.uniform(den, 8), den)});
        }
        if (edges.empty()) continue;
        HolderComplex c(verts, edges);
        auto canon = canonicalize(c);
        CHECK(is_canonical(canon));
        CHECK(complexes_isomorphic(canonicalize(canon), canon));
        if (c.min_beta()) CHECK(*canon.min_beta() == *c.min_beta());
        // exponents never leave the input multiset
        std::multiset<std::string> in_betas;
        for (const auto& e : c.edges()) in_betas.insert(e.beta.fraction_string());
        for (const auto& e : canon.edges()) CHECK(in_betas.count(e.beta.fraction_string()) > 0);

        // subdividing edges of the canonical complex and re-canonicalizing
        // returns an isomorphic complex
        auto sub_verts = canon.vertices();
        auto sub_edges = canon.edges();
        int inserted = 0;
        for (int k = 0; k < 5 && !sub_edges.empty(); ++k) {
            size_t ei = static_cast<size_t>(
                rng.uniform(0, static_cast<long long>(sub_edges.size() - 1)));
            E old = sub_edges[ei];
            std::string mid = "s" + std::to_string(inserted++);
            sub_verts.push_back(mid);
            sub_edges.erase(sub_edges.begin() + ei);
            sub_edges.push_back(E{old.id + "a", old.u, mid, old.beta});
            sub_edges.push_back(E{old.id + "b", mid, old.v, old.beta});
        }
        HolderComplex subdivided(sub_verts, sub_edges);
        CHECK(complexes_isomorphic(canonicalize(subdivided), canon));
    }
}

TEST_CASE("canonicalization is independent of processing order") {
    // same complex, vertex lists in different orders
    std::vector<E> edges = {E{"e0", "a", "b", Rational(2)}, E{"e1", "b", "c", Rational(3)},
                            E{"e2", "c", "d", Rational(3, 2)}, E{"e3", "d", "e", Rational(4)}};
    HolderComplex c1({"a", "b", "c", "d", "e"}, edges);
    HolderComplex c2({"e", "d", "c", "b", "a"}, edges);
    auto g1 = canonicalize(c1);
    auto g2 = canonicalize(c2);
    CHECK(complexes_isomorphic(g1, g2));
    REQUIRE(g1.edges().size() == 1);
    CHECK(g1.edges()[0].beta == Rational(3, 2));
}
