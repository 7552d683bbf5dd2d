#include <doctest.h>

#include "oracles.hpp"

#include <gffmod/error.hpp>
#include <gffmod/lorentz.hpp>
#include <gffmod/parser.hpp>

#include <random>
#include <set>

using namespace gffmod;

namespace {

Polynomial P(const char* text, int d) { return parse_polynomial(text, d); }

}  // namespace

TEST_CASE("rotation entries") {
    const auto quarter = rotation(3, 1, 2, 1);
    CHECK(quarter.matrix()(1, 1) == 0);
    CHECK(quarter.matrix()(2, 1) == 1);
    CHECK(quarter.matrix()(1, 2) == -1);

    CHECK(rotation(3, 1, 2, 0) == LorentzTransform::identity(3));

    const auto r = rotation(4, 1, 2, Rational(1, 2));
    CHECK(r.matrix()(1, 1) == Rational(3, 5));
    CHECK(r.matrix()(2, 1) == Rational(4, 5));
    CHECK(oracle::preserves_metric(r.matrix()));

    CHECK_THROWS(rotation(3, 0, 1, 1));
    CHECK_THROWS(rotation(3, 2, 1, 1));
    CHECK_THROWS(rotation(3, 1, 3, 1));
}

TEST_CASE("boost entries") {
    const auto b = boost(4, 2, Rational(1, 3));
    CHECK(b.matrix()(0, 0) == Rational(5, 4));
    CHECK(b.matrix()(2, 2) == Rational(5, 4));
    CHECK(b.matrix()(0, 2) == Rational(3, 4));
    CHECK(oracle::preserves_metric(b.matrix()));

    CHECK(boost(4, 1, 0) == LorentzTransform::identity(4));
    CHECK(boost(3, 2, Rational(1, 2)) * boost(3, 2, Rational(-1, 2)) == LorentzTransform::identity(3));
    CHECK_THROWS(boost(3, 1, 1));
    CHECK_THROWS(boost(3, 1, Rational(-3, 2)));
    CHECK_THROWS(boost(3, 0, Rational(1, 2)));
}

TEST_CASE("from_matrix rejects non Lorentz matrices") {
    RationalMatrix parity = RationalMatrix::identity(3);
    parity(1, 1) = -1;
    CHECK_FALSE(is_proper_orthochronous(parity));
    CHECK_THROWS_AS(LorentzTransform::from_matrix(parity), ModelError);

    RationalMatrix time_reversal = RationalMatrix::identity(3);
    time_reversal(0, 0) = -1;
    time_reversal(1, 1) = -1;
    CHECK_FALSE(is_proper_orthochronous(time_reversal));

    RationalMatrix scale = RationalMatrix::identity(2);
    scale(0, 0) = 2;
    CHECK_FALSE(is_proper_orthochronous(scale));

    CHECK(is_proper_orthochronous(boost(3, 1, Rational(1, 5)).matrix()));
}

TEST_CASE("apply_linear examples") {
    const Polynomial p2sq = P("p2^2", 4);
    CHECK(apply_linear(p2sq, LorentzTransform::identity(4)) == p2sq);
    CHECK(apply_linear(p2sq, rotation(4, 1, 2, 1)) == P("p1^2", 4));
    CHECK(apply_linear(p2sq, boost(4, 2, Rational(1, 3))) == P("(5/4*p2 - 3/4*p0)^2", 4));
    CHECK_THROWS_AS(apply_linear(P("p1", 3), LorentzTransform::identity(4)), DimensionError);
}

TEST_CASE("apply_linear round trip and evenness over random transforms") {
    std::mt19937_64 rng(5);
    const auto frames = orbit(4, 2);
    const Polynomial polys[] = {P("p0^2", 4), P("(p0 - 2*p2)^2 + p1*p3", 4), P("p1^4 - 3*p0*p2 + 1/7", 4)};
    for (int k = 0; k < 40; ++k) {
        const auto& L = frames[rng() % frames.size()].transform;
        const auto& K = frames[rng() % frames.size()].transform;
        const LorentzTransform LK = L * K;
        CHECK(oracle::preserves_metric(LK.matrix()));
        for (const auto& poly : polys) {
            const Polynomial moved = apply_linear(poly, LK);
            CHECK(apply_linear(moved, LK.inverse()) == poly);
            CHECK(is_even(moved) == is_even(poly));
        }
    }
}

TEST_CASE("inverse and composition") {
    const auto L = boost(3, 1, Rational(1, 3)) * rotation(3, 1, 2, Rational(1, 2));
    CHECK(L * L.inverse() == LorentzTransform::identity(3));
    CHECK(L.inverse() * L == LorentzTransform::identity(3));
    CHECK(L.matrix().determinant() == 1);
}

TEST_CASE("orbit enumeration") {
    const auto zero = orbit(4, 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].word == "id");
    CHECK(zero[0].transform == LorentzTransform::identity(4));

    // d = 3: one rotation plane (4 generators) and two boost axes (8 generators).
    const auto one = orbit(3, 1);
    CHECK(one.size() == 13);
    CHECK(one[0].word == "id");

    const auto two = orbit(3, 2);
    std::set<RationalMatrix> seen;
    for (const auto& e : two) {
        CHECK(oracle::preserves_metric(e.transform.matrix()));
        CHECK(seen.insert(e.transform.matrix()).second);
    }
    CHECK(two.size() > one.size());

    // The frames used for the shell witnesses are reachable at depth 1.
    bool has_quarter = false, has_boost = false;
    for (const auto& e : orbit(4, 1)) {
        has_quarter = has_quarter || e.transform == rotation(4, 1, 2, 1);
        has_boost = has_boost || e.transform == boost(4, 2, Rational(1, 3));
    }
    CHECK(has_quarter);
    CHECK(has_boost);

    // Deterministic order.
    const auto again = orbit(3, 2);
    REQUIRE(again.size() == two.size());
    for (std::size_t k = 0; k < two.size(); ++k) CHECK(again[k].word == two[k].word);
}

TEST_CASE("orbit in d = 2 holds only boosts") {
    const auto o = orbit(2, 1);
    CHECK(o.size() == 5);
}

TEST_CASE("wedges") {
    const auto wr = Wedge::right(3);
    CHECK(wr.contains(RationalVector{0, 1, 0}));
    CHECK(wr.contains(RationalVector{Rational(1, 2), 1, 7}));
    CHECK_FALSE(wr.contains(RationalVector{1, 1, 0}));
    CHECK_FALSE(wr.contains(RationalVector{0, -1, 0}));

    const auto wl = Wedge::left(3);
    CHECK(wl.contains(RationalVector{0, -1, 0}));
    CHECK_FALSE(wl.contains(RationalVector{0, 1, 0}));
    CHECK_THROWS(Wedge::left(2));

    Wedge shifted = Wedge::right(2);
    shifted.offset = {0, 5};
    CHECK(shifted.contains(RationalVector{0, 6}));
    CHECK_FALSE(shifted.contains(RationalVector{0, 1}));
}
