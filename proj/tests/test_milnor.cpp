#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "steenrod/milnor.hpp"

using namespace steenrod;

namespace {

DualElement random_dual(std::mt19937& rng, int degree)
{
    const auto& basis = monomials_of_degree(degree);
    DualElement x;
    for (const Expo& e : basis)
        if (rng() & 1)
            x.toggle(e);
    return x;
}

// (chi (x) id) then multiply; the antipode axiom demands eps(x) * 1.
DualElement antipode_contraction(const Expo& mono)
{
    DualElement acc;
    for (const auto& [left, right] : coproduct(mono).support)
        acc += dual_mul(antipode(left), DualElement::term(right));
    return acc;
}

} // namespace

TEST_CASE("degrees of basic monomials")
{
    CHECK(mono_degree({}) == 0);
    CHECK(mono_degree(parse_mono("z1")) == 1);
    CHECK(mono_degree(parse_mono("z2")) == 3);
    CHECK(mono_degree(parse_mono("z1^4")) == 4);
    CHECK(mono_degree(parse_mono("z2^4")) == 12);
}

TEST_CASE("polynomial multiplication")
{
    CHECK(dual_str(dual_mul(parse_dual("z1"), parse_dual("z1"))) == "z1^2");
    CHECK(dual_str(dual_mul(DualElement::unit(), parse_dual("z2 + z1"))) == "z1 + z2");
    DualElement sum = parse_dual("z1 + z2");
    CHECK(dual_str(dual_mul(sum, sum)) == "z1^2 + z2^2");
}

TEST_CASE("coproduct on generators")
{
    CHECK(tensor_str(coproduct(Expo{})) == "1|1");
    CHECK(tensor_str(coproduct(parse_mono("z1"))) == "z1|1 + 1|z1");
    CHECK(tensor_str(coproduct(parse_mono("z2"))) == "z2|1 + z1^2|z1 + 1|z2");
    CHECK(tensor_str(coproduct(parse_mono("z3"))) == "z3|1 + z2^2|z1 + z1^4|z2 + 1|z3");
}

TEST_CASE("coassociativity, counit and antipode axioms through degree 18")
{
    for (int d = 0; d <= 18; ++d) {
        for (const Expo& mono : monomials_of_degree(d)) {
            TensorElement psi = coproduct(mono);

            // Counit in both slots.
            DualElement left_counit, right_counit;
            for (const auto& [a, b] : psi.support) {
                if (a.empty())
                    left_counit.toggle(b);
                if (b.empty())
                    right_counit.toggle(a);
            }
            CHECK(left_counit == DualElement::term(mono));
            CHECK(right_counit == DualElement::term(mono));

            // (psi (x) id) psi = (id (x) psi) psi, compared as triple sets.
            std::set<std::vector<Expo>> lhs, rhs;
            for (const auto& [a, b] : psi.support)
                for (const auto& [a1, a2] : coproduct(a).support) {
                    std::vector<Expo> key{a1, a2, b};
                    auto it = lhs.find(key);
                    if (it != lhs.end())
                        lhs.erase(it);
                    else
                        lhs.insert(std::move(key));
                }
            for (const auto& [a, b] : psi.support)
                for (const auto& [b1, b2] : coproduct(b).support) {
                    std::vector<Expo> key{a, b1, b2};
                    auto it = rhs.find(key);
                    if (it != rhs.end())
                        rhs.erase(it);
                    else
                        rhs.insert(std::move(key));
                }
            CHECK(lhs == rhs);

            // mu (chi (x) id) psi = eta eps.
            DualElement contracted = antipode_contraction(mono);
            if (d == 0)
                CHECK(contracted == DualElement::unit());
            else
                CHECK(contracted.is_zero());
        }
    }
}

TEST_CASE("antipode values")
{
    CHECK(dual_str(antipode(Expo{})) == "1");
    CHECK(dual_str(antipode(parse_mono("z1"))) == "z1");
    CHECK(dual_str(antipode(parse_mono("z2"))) == "z2 + z1^3");
    // chi is an involution on a commutative Hopf algebra.
    for (int d = 0; d <= 12; ++d)
        for (const Expo& mono : monomials_of_degree(d))
            CHECK(antipode(antipode(mono)) == DualElement::term(mono));
}

TEST_CASE("coproduct is an algebra map on random elements")
{
    std::mt19937 rng(8231);
    for (int trial = 0; trial < 24; ++trial) {
        int da = 1 + int(rng() % 10), db = 1 + int(rng() % (20 - da >= 10 ? 10 : 20 - da));
        DualElement a = random_dual(rng, da), b = random_dual(rng, db);
        TensorElement lhs = coproduct(dual_mul(a, b));
        TensorElement rhs = tensor_mul(coproduct(a), coproduct(b));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("Milnor product: classical values")
{
    CHECK(sq_str(sq_mul(SqElement::sq(0), SqElement::sq(7), 32)) == "Sq(7)");
    CHECK(sq_mul(SqElement::sq(1), SqElement::sq(1), 32).is_zero());
    CHECK(sq_str(sq_mul(SqElement::sq(2), SqElement::sq(1), 32)) == "Sq(3) + Sq(0,1)");
    // Adem identity Sq^1 Sq^2 = Sq^3.
    CHECK(sq_str(sq_mul(SqElement::sq(1), SqElement::sq(2), 32)) == "Sq(3)");
    CHECK_THROWS(sq_mul(SqElement::sq(20), SqElement::sq(20), 32));
}

TEST_CASE("Milnor product agrees with the matrix-enumeration oracle through degree 12")
{
    for (int da = 0; da <= 12; ++da)
        for (int db = 0; da + db <= 12; ++db)
            for (const Expo& r : monomials_of_degree(da))
                for (const Expo& s : monomials_of_degree(db)) {
                    SqElement via_transpose = sq_mul_basis(r, s);
                    SqElement via_matrices = oracles::milnor_matrix_product(r, s);
                    CHECK(via_transpose == via_matrices);
                }
}

TEST_CASE("Verschiebung")
{
    CHECK(sq_str(halve(parse_sq("Sq(2)"))) == "Sq(1)");
    CHECK(halve(parse_sq("Sq(1)")).is_zero());
    CHECK(sq_str(halve(parse_sq("Sq(2,4)"))) == "Sq(1,2)");

    // Dual to the Frobenius through the basis pairing: V(Sq(R)) hits T
    // exactly when R = 2T.
    for (int d = 0; d <= 20; ++d)
        for (const Expo& r : monomials_of_degree(d)) {
            SqElement v = halve(SqElement::term(r));
            bool all_even = true;
            for (int x : r)
                if (x & 1)
                    all_even = false;
            if (!all_even) {
                CHECK(v.is_zero());
                continue;
            }
            REQUIRE(v.support.size() == 1);
            CHECK(mono_pow2(*v.support.begin(), 1) == r);
        }

    // Algebra map: V(ab) = V(a)V(b).
    std::mt19937 rng(515);
    for (int trial = 0; trial < 40; ++trial) {
        int da = int(rng() % 8), db = int(rng() % 8);
        const auto& ra = monomials_of_degree(da);
        const auto& rb = monomials_of_degree(db);
        if (ra.empty() || rb.empty())
            continue;
        SqElement a = SqElement::term(ra[rng() % ra.size()]);
        SqElement b = SqElement::term(rb[rng() % rb.size()]);
        CHECK(halve(sq_mul(a, b, 32)) == sq_mul(halve(a), halve(b), 32));
    }
}

TEST_CASE("primitives")
{
    CHECK(sq_str(SqElement::primitive(0, 1)) == "Sq(1)");
    CHECK(sq_str(SqElement::primitive(0, 3)) == "Sq(0,0,1)");
    CHECK(sq_str(SqElement::primitive(2, 2)) == "Sq(0,4)");
    CHECK(SqElement::primitive(0, 4).degree() == 15);
}

TEST_CASE("parser and printer round-trip")
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        int d = int(rng() % 14);
        DualElement x = random_dual(rng, d);
        CHECK(parse_dual(dual_str(x)) == x);

        const auto& basis = monomials_of_degree(d);
        SqElement y;
        for (const Expo& r : basis)
            if (rng() & 1)
                y.toggle(r);
        CHECK(parse_sq(sq_str(y)) == y);
    }
    CHECK(parse_dual("0").is_zero());
    CHECK(sq_str(parse_sq("Sq(0)")) == "Sq(0)");
}
