#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "steenrod/profile.hpp"

using namespace steenrod;

namespace {

// Counting oracle: monomials of the given degree with exponent of zeta_i a
// multiple of 2^{h(i)} and (optionally) below 2^{cap(i)}.
int count_monomials(const Profile& stratum, const Profile* cap, int degree)
{
    int count = 0;
    for (const Expo& e : monomials_of_degree(degree)) {
        if (!stratum.in_span(e))
            continue;
        bool ok = true;
        if (cap)
            for (size_t i = 0; i < e.size() && ok; ++i) {
                int h = cap->at(int(i) + 1);
                if (h != Profile::infinity && e[i] >= (1 << h))
                    ok = false;
            }
        if (ok)
            ++count;
    }
    return count;
}

} // namespace

TEST_CASE("subalgebra bases match the counting oracle")
{
    // P(1)^(2) = F2[zeta_1^4]: dim 1 at multiples of 4.
    GradedSpace p12 = subalgebra_basis(Profile::pn(1, 2), 20);
    for (int d = 0; d <= 20; ++d)
        CHECK(p12.dim(d) == (d % 4 == 0 ? 1 : 0));

    // P(2) in degree 3: zeta_1^3 and zeta_2.
    GradedSpace p2 = subalgebra_basis(Profile::pn(2), 8);
    CHECK(p2.dim(3) == 2);
    CHECK(p2.dim(0) == 1);

    for (int d = 0; d <= 16; ++d) {
        Profile a1 = Profile::powers(1);
        CHECK(subalgebra_basis(a1, 16).dim(d) == count_monomials(a1, nullptr, d));
    }
}

TEST_CASE("subHopf closure checks")
{
    CHECK(is_subhopf(Profile::pn(1), 20));
    CHECK(is_subhopf(Profile::pn(2), 20));
    CHECK(is_subhopf(Profile::pn(3), 20));
    CHECK(is_subhopf(Profile::powers(1), 20));
    CHECK(is_subhopf(Profile::powers(2), 20));
    CHECK(is_subhopf(Profile::pn(2, 1), 20));

    // F2[zeta_2] alone: psi(zeta_2) has the zeta_1^2 (x) zeta_1 term.
    Profile bad;
    bad.caps = {Profile::infinity, 0};
    bad.tail = Profile::infinity;
    CHECK(!is_subhopf(bad, 10));
}

TEST_CASE("quotient bases")
{
    // A//A^(1) is exterior on the zeta classes: degrees 1, 3, 7, 15.
    Subquotient e = Subquotient::quotient(Profile::powers(1));
    GradedSpace eb = quotient_basis(e, 16);
    std::vector<int> expected = {1, 1, 0, 1, 1, 0, 0, 1, 1, 0, 1, 1, 0, 0, 0, 1, 1};
    for (int d = 0; d <= 16; ++d)
        CHECK(eb.dim(d) == expected[size_t(d)]);

    // A//P(1): no zeta_1.
    Subquotient ap1 = Subquotient::quotient(Profile::pn(1));
    GradedSpace ab = quotient_basis(ap1, 12);
    for (int d = 0; d <= 12; ++d) {
        int count = 0;
        for (const Expo& m : monomials_of_degree(d))
            if (m.empty() || m[0] == 0)
                ++count;
        CHECK(ab.dim(d) == count);
    }

    // Denominator = numerator: only the unit survives.
    Subquotient all{Profile::full(), Profile::full()};
    GradedSpace unit_only = all.basis_space(10);
    CHECK(unit_only.dim(0) == 1);
    CHECK(unit_only.total_dim() == 1);
}

TEST_CASE("staircase quotients")
{
    for (int n = 1; n <= 3; ++n)
        for (int s = 0; s <= 2; ++s)
            for (int t = 0; t <= 3; ++t) {
                Subquotient q = staircase_quotient(n, s, t);
                CHECK(q.finite());
                long dim = 0;
                for (int d = 0; d <= q.top_degree(); ++d)
                    dim += long(q.basis(d).size());
                CHECK(dim == staircase_expected_dim(n, s, t));
                CHECK(dim == q.total_dim());
            }

    // Hopf-ideal closure at desk scale.
    CHECK(is_hopf_quotient(staircase_quotient(2, 0, 2), 16));
    CHECK(is_hopf_quotient(staircase_quotient(2, 1, 2), 20));
    CHECK(is_hopf_quotient(staircase_quotient(3, 2, 1), 24));
    CHECK(staircase_quotient(1, 0, 1).total_dim() == 2);

    // Killing zeta_2 but not zeta_1 is not a Hopf ideal: zeta_2's coproduct
    // leaks the term zeta_1^2 (x) zeta_1 into the would-be quotient.
    Subquotient bad{Profile::full(), Profile{{Profile::infinity, 0}, Profile::infinity}};
    CHECK(!is_hopf_quotient(bad, 10));
}

TEST_CASE("freeness at desk scale")
{
    // A^(1) inside A, quotient the exterior algebra.
    FreenessReport r1 = verify_freeness(Profile::powers(1), Profile::full(), 16);
    CHECK(r1.ok);

    // sub = amb: rank one.
    FreenessReport r2 = verify_freeness(Profile::pn(2), Profile::pn(2), 12);
    CHECK(r2.ok);
    CHECK(r2.quotient_dims.at(0) == 1);
    for (auto& [d, n] : r2.quotient_dims)
        if (d > 0)
            CHECK(n == 0);

    // P(n) inside P(n+1): quotient has F2[zeta_{n+1}] dims.
    for (int n = 1; n <= 2; ++n) {
        FreenessReport r = verify_freeness(Profile::pn(n), Profile::pn(n + 1), 16);
        CHECK(r.ok);
        int w = zeta_degree(n + 1);
        for (int d = 0; d <= 16; ++d)
            CHECK(r.quotient_dims.at(d) == (d % w == 0 ? 1 : 0));
    }

    // A^(2) inside A^(1), and the non-refining direction is rejected.
    CHECK(verify_freeness(Profile::powers(2), Profile::powers(1), 16).ok);
    CHECK(!verify_freeness(Profile::full(), Profile::powers(1), 12).ok);
}

TEST_CASE("cotensor recovers profile subalgebras")
{
    // A [] _{A//P(n)} F2 = P(n) degree-wise.
    for (int n = 1; n <= 3; ++n) {
        Subquotient a = Subquotient::subalgebra(Profile::full());
        Subquotient c = Subquotient::quotient(Profile::pn(n));
        CotensorResult res = cotensor_trivial(a, c, 20);
        GradedSpace pn = subalgebra_basis(Profile::pn(n), 20);
        for (int d = 0; d <= 20; ++d)
            CHECK(res.space.dim(d) == pn.dim(d));
    }

    // A [] _E F2 = F2[zeta_i^2].
    Subquotient a = Subquotient::subalgebra(Profile::full());
    CotensorResult bp = cotensor_trivial(a, parse_subquotient_preset("E"), 20);
    GradedSpace squares = subalgebra_basis(Profile::powers(1), 20);
    for (int d = 0; d <= 20; ++d)
        CHECK(bp.space.dim(d) == squares.dim(d));

    // F2 [] _C F2 = F2.
    Subquotient f2{Profile::trivial(), Profile::trivial()};
    Subquotient c{Profile::trivial(), Profile::trivial()};
    CotensorResult triv = cotensor_trivial(f2, c, 10);
    CHECK(triv.space.dim(0) == 1);
    CHECK(triv.space.total_dim() == 1);
}

TEST_CASE("quotient dims convolve with subalgebra dims")
{
    // Whenever verify_freeness passes, dims(quot) * dims(sub) = dims(amb).
    Profile sub = Profile::pn(2, 1), amb = Profile::pn(2, 0);
    FreenessReport r = verify_freeness(sub, amb, 14);
    CHECK(r.ok);
    GradedSpace s = subalgebra_basis(sub, 14), a = subalgebra_basis(amb, 14);
    for (int d = 0; d <= 14; ++d) {
        int conv = 0;
        for (int i = 0; i <= d; ++i)
            conv += s.dim(i) * r.quotient_dims.at(d - i);
        CHECK(conv == a.dim(d));
    }
}

TEST_CASE("presets and profile JSON")
{
    CHECK(parse_profile_preset("P(2)") == Profile::pn(2));
    CHECK(parse_profile_preset("P(3)^(2)") == Profile::pn(3, 2));
    CHECK(parse_profile_preset("A^(1)") == Profile::powers(1));
    CHECK(parse_profile_preset("A") == Profile::full());
    CHECK_THROWS(parse_profile_preset("Q(1)"));

    Subquotient e = parse_subquotient_preset("E");
    CHECK(e.num == Profile::full());
    CHECK(e.den == Profile::powers(1));
    Subquotient ap = parse_subquotient_preset("A//P(2)^(2)");
    CHECK(ap.den == Profile::pn(2, 2));

    Profile p = Profile::pn(2, 1);
    CHECK(profile_from_json(profile_to_json(p)) == p);
    Profile q = profile_from_json(R"({"caps": [0, 0, "inf"], "tail": "inf"})");
    CHECK(q == Profile::pn(2));
}
