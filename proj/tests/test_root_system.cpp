#include <doctest.h>

#include "latorus/root_system.hpp"
#include "latorus/sl_rational.hpp"
#include "oracles.hpp"

using namespace latorus;

TEST_CASE("root inventory") {
    for (int ell : {2, 3, 4}) {
        const RootSystemA system(ell);
        CHECK(system.nonzero_roots().size() == static_cast<size_t>(ell * (ell + 1)));
    }
    CHECK_THROWS_AS(RootSystemA(1), AlgebraError);
}

TEST_CASE("cartan integers match the inner-product oracle") {
    const RootSystemA system(3);
    CHECK(system.cartan_integer(Root::pair(1, 2), Root::pair(1, 2)) == 2);
    CHECK(system.cartan_integer(Root::pair(1, 2), Root::pair(2, 3)) == -1);
    CHECK(system.cartan_integer(Root::pair(1, 2), Root::pair(3, 4)) == 0);
    CHECK_THROWS_AS(system.cartan_integer(Root::pair(1, 2), Root::zero()), ZeroCoroot);
    for (const Root& b : system.nonzero_roots())
        for (const Root& a : system.nonzero_roots())
            CHECK(system.cartan_integer(b, a) == testing::cartan_oracle(3, b, a));
}

TEST_CASE("A2 pair classification against the span oracle") {
    const RootSystemA system(3);
    CHECK(system.is_a2_pair(Root::pair(1, 2), Root::pair(2, 3)));
    CHECK_FALSE(system.is_a2_pair(Root::pair(1, 2), Root::pair(2, 1)));  // dependent
    CHECK_FALSE(system.is_a2_pair(Root::pair(1, 2), Root::pair(3, 4)));  // orthogonal, 4-root span

    for (const Root& b : system.nonzero_roots())
        for (const Root& g : system.nonzero_roots()) {
            if (b == g || b == -g) continue;
            const auto span = testing::span_oracle(3, b, g);
            CHECK(system.span_roots(b, g).size() == span.size());
            const bool expected = span.size() == 6 && system.cartan_integer(b, g) == -1;
            CHECK(system.is_a2_pair(b, g) == expected);
        }
}

TEST_CASE("A2 pairs are order-symmetric") {
    const RootSystemA system(2);
    for (const Root& b : system.nonzero_roots())
        for (const Root& g : system.nonzero_roots())
            CHECK(system.is_a2_pair(b, g) == system.is_a2_pair(g, b));
}

TEST_CASE("weyl words move roots as requested") {
    const RootSystemA system(2);
    SUBCASE("identity on equal roots") {
        const WeylElement w = system.weyl_word(Root::pair(1, 2), Root::pair(1, 2));
        CHECK(w.word.empty());
        CHECK(w.apply(Root::pair(1, 2)) == Root::pair(1, 2));
    }
    SUBCASE("simple reflection flips its root") {
        const WeylElement w = system.weyl_word(Root::pair(1, 2), Root::pair(2, 1));
        CHECK(w.word == std::vector<int>{1});
    }
    SUBCASE("length bound in A2") {
        const WeylElement w = system.weyl_word(Root::pair(1, 2), Root::pair(2, 3));
        CHECK(w.word.size() <= 3);
        CHECK(w.apply(1) == 2);
        CHECK(w.apply(2) == 3);
    }
}

TEST_CASE("weyl word permutation matches its word") {
    const RootSystemA system(3);
    for (const Root& a : system.nonzero_roots())
        for (const Root& b : system.nonzero_roots()) {
            const WeylElement w = system.weyl_word(a, b);
            CHECK(w.apply(a) == b);
            // Replay the word s_{k1} o ... o s_{km}: appending k composes
            // with s_k acting first, which swaps slots k-1 and k.
            std::vector<int> perm{1, 2, 3, 4};
            for (int k : w.word) std::swap(perm[k - 1], perm[k]);
            CHECK(perm == w.perm);
        }
}

TEST_CASE("weyl transport composes up to stabilizer") {
    const RootSystemA system(3);
    const Root a = Root::pair(1, 2), b = Root::pair(2, 4), c = Root::pair(3, 1);
    const WeylElement wab = system.weyl_word(a, b);
    const WeylElement wbc = system.weyl_word(b, c);
    // The composite still maps a to c, whatever word BFS found.
    CHECK(wbc.apply(wab.apply(a)) == c);
}

TEST_CASE("chevalley basis structure constants") {
    const ChevalleyBasis basis(2);
    const RationalMatrix e12 = basis.e(Root::pair(1, 2));
    const RationalMatrix e21 = basis.e(Root::pair(2, 1));
    const RationalMatrix e23 = basis.e(Root::pair(2, 3));
    const RationalMatrix e13 = basis.e(Root::pair(1, 3));

    CHECK(bracket(e12, e21) == basis.h(1));
    CHECK(bracket(basis.h(1), e12) == e12 + e12);  // weight 2
    CHECK(bracket(e12, e23) == e13);

    // Matrix-unit product oracle: E_ab E_cd = [b == c] E_ad.
    const RootSystemA system(2);
    for (const Root& r : system.nonzero_roots())
        for (const Root& s : system.nonzero_roots()) {
            RationalMatrix expected(3);
            if (r.j() == s.i()) expected = expected + RationalMatrix::unit(3, r.i(), s.j());
            if (s.j() == r.i()) expected = expected - RationalMatrix::unit(3, s.i(), r.j());
            CHECK(bracket(basis.e(r), basis.e(s)) == expected);
        }
}

TEST_CASE("rational row rank") {
    using Row = std::vector<Rational>;
    CHECK(rational_row_rank({}) == 0);
    CHECK(rational_row_rank({Row{Rational(0), Rational(0)}}) == 0);
    CHECK(rational_row_rank({Row{Rational(1), Rational(2)}, Row{Rational(2), Rational(4)}}) == 1);
    CHECK(rational_row_rank({Row{Rational(1), Rational(2)}, Row{Rational(0), Rational(1, 7)}}) == 2);
}
