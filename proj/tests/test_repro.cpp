#include "doctest.h"

#include <cstdio>

#include "test_util.hpp"
#include "spin4/cup.hpp"
#include "spin4/io.hpp"
#include "spin4/linalg.hpp"
#include "spin4/s2xs2.hpp"
#include "spin4/verify.hpp"

using namespace spin4;
using namespace spin4::testing;

TEST_CASE("product sphere workspace: sizes, frontier, and first key integrals") {
    auto ws = build_s2xs2();
    CHECK(ws->prod.complex->count(4) == 96);
    CHECK(ws->bary.complex->count(4) == 11520);
    CHECK(ws->pr.complex->count(5) == 57600);

    // The frontier of the diagonal neighborhood is a 3-dimensional projective
    // space: H_1 torsion Z/2, one mod-2 cohomology generator in degree 1.
    CHECK(ws->nbhd.bdV->dim() == 3);
    CHECK(homology_torsion(*ws->nbhd.bdV, 1) == std::vector<long long>{2});
    CHECK(cohomology_rank_z2(*ws->nbhd.bdV, 1) == 1);
    CHECK(is_cocycle(ws->c));
    CHECK(cup(ws->c, ws->c, 0).is_zero());

    // Reordering preserves the underlying simplices.
    CHECK(ws->tprime->count(4) == ws->bary.complex->count(4));
    CHECK(ws->tprime->total_simplices() == ws->bary.complex->total_simplices());

    // Transported orientation still integrates the generator product to 1.
    Cochain a1p = transfer_cochain(ws->a1, *ws->tprime);
    Cochain a2p = transfer_cochain(ws->a2, *ws->tprime);
    CHECK(integrate_i(cup(special_lift(a1p), special_lift(a2p), 0), ws->chain_tprime) == 1);

    ReproReport k1 = key_result_1(*ws);
    CHECK(k1.pass);
}

TEST_CASE("complex, cochain and triple JSON round trips") {
    std::mt19937_64 rng(71);
    auto cx = random_complex(rng, 8, 3, 6);
    auto back = complex_from_json(complex_to_json(*cx));
    CHECK(back->total_simplices() == cx->total_simplices());
    for (int d = 0; d <= cx->dim(); ++d) CHECK(back->count(d) == cx->count(d));
    for (int v = 0; v < cx->num_vertices(); ++v) CHECK(back->rank(v) == cx->rank(v));

    Cochain z2 = random_cochain(*cx, 2, Ring::Z2, rng);
    CHECK(cochain_from_json(cochain_to_json(z2), *cx) == z2);
    Cochain zi = random_cochain(*cx, 1, Ring::Z, rng);
    CHECK(cochain_from_json(cochain_to_json(zi), *cx) == zi);
    Cochain qz(cx.get(), 3, Ring::QZ);
    for (const Simplex& s : cx->simplices(3))
        qz.set(s, QZ((long long)(rng() % 8), 8));
    CHECK(cochain_from_json(cochain_to_json(qz), *cx) == qz);

    Cochain e = random_cochain(*cx, 1, Ring::Z2, rng);
    Cochain a = coboundary(e);
    Triple t{qz, cup(e, a, 0), a};
    Triple tt = triple_from_json(triple_to_json(t), *cx);
    CHECK(tt.w == t.w);
    CHECK(tt.p == t.p);
    CHECK(tt.a == t.a);
    RelationPair r{random_cochain(*cx, 2, Ring::Z2, rng), e};
    RelationPair rr = relation_from_json(relation_to_json(r), *cx);
    CHECK(rr.c == r.c);
    CHECK(rr.r == r.r);
}

TEST_CASE("verify suites run deterministically and reject unknown names") {
    ReproReport a = verify_suite("cupi", 3, 99);
    ReproReport b = verify_suite("cupi", 3, 99);
    CHECK(a.pass);
    CHECK(a.facts == b.facts);
    CHECK(verify_suite("relations", 4, 5).pass);
    CHECK_THROWS_AS(verify_suite("nope", 1, 1), std::invalid_argument);
}
