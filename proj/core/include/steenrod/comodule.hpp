#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "steenrod/profile.hpp"

namespace steenrod {

/// Monomial in the polynomial generators of a presentation; exponents in
/// generator order, trailing zeros allowed.
using GenMono = std::vector<int>;

GenMono gen_mul(const GenMono& a, const GenMono& b);
GenMono gen_pow2(const GenMono& a, int k);

/// F2 sum of tensors (dual-algebra monomial) (x) (generator monomial).
struct MixedTensor {
    std::set<std::pair<Expo, GenMono>> support;

    static MixedTensor unit() { return term({}, {}); }
    static MixedTensor term(Expo a, GenMono m);
    bool is_zero() const { return support.empty(); }
    void toggle(Expo a, GenMono m);
    void operator+=(const MixedTensor& rhs);
    bool operator==(const MixedTensor& rhs) const { return support == rhs.support; }
};

MixedTensor mixed_mul(const MixedTensor& a, const MixedTensor& b);

/// Polynomial comodule algebra over the dual Steenrod algebra, given by the
/// coaction on its generators and extended multiplicatively.
struct ComodAlgebraPresentation {
    std::vector<std::string> gen_names;
    std::vector<int> gen_degrees;
    std::vector<MixedTensor> gen_coaction;

    int gen_index(const std::string& name) const;
    int degree(const GenMono& m) const;
    std::string mono_label(const GenMono& m) const;
    GenMono parse_label(const std::string& text) const;
    /// Generator monomials of the given degree, lexicographically sorted.
    std::vector<GenMono> basis(int degree) const;
    /// Multiplicative extension of the generator coactions.
    MixedTensor coaction(const GenMono& m) const;

    void validate() const;
};

std::string presentation_to_json(const ComodAlgebraPresentation& p);
ComodAlgebraPresentation presentation_from_json(const std::string& text);

/// The Thom spectrum homology F2[y_1,...,y_{2^s-1}], |y_k| = 4k, with
/// coaction psi(y_{2^r-1}) = sum_k zeta_k^4 (x) y_{2^{r-k}-1}^{2^k} and all
/// other generators primitive.
ComodAlgebraPresentation build_ys(int s);
/// Generator names of the ideal J_s = (y_1, y_3, ..., y_{2^s-1}).
std::vector<std::string> ys_ideal_generators(int s);
/// Stand-in for H_*(MSp) in a window: the smallest s with 2^{s+2}-4 >= the
/// window, where the map Y_s -> MSp is an iso on homology.
int msp_stand_in_s(int max_degree);

struct AxiomReport {
    bool ok = true;
    int failing_degree = -1;
    std::string failing_element;
    std::string reason;
};

/// Counit and coassociativity on every basis monomial of degree <= window.
AxiomReport check_comodule_axioms(const ComodAlgebraPresentation& p, int max_degree);

struct IdealQuotient {
    bool subcomodule = true;        // accepted notion, see below
    bool literally_stable = true;   // mu(J) <= A (x) J on the nose
    int failing_degree = -1;
    std::string witness;
    std::map<int, std::vector<GenMono>> ideal_basis;
    ComodAlgebraPresentation quotient;
    std::vector<int> kept_gens;   // indices into the original presentation
};

/// Span of the ideal generated by the named generators, its stability
/// check, and the quotient presentation on the remaining generators.
///
/// Thom-style coactions carry unit module parts (zeta^4 (x) 1 twists), so
/// an ideal containing such a generator is never stable on the nose. The
/// check accepts an ideal when either mu(J) <= A (x) J holds literally or
/// every complementary generator is primitive; the latter is exactly the
/// structure under which the quotient carries the trivial coaction and the
/// splitting isomorphism makes sense.
IdealQuotient ideal_and_quotient(const ComodAlgebraPresentation& p,
                                 const std::vector<std::string>& gens, int max_degree);

/// Comodule over a subalgebra-type subquotient of the dual Steenrod
/// algebra, with explicit basis and symbolic coaction entries.
struct Comodule {
    Subquotient base;    // coacting Hopf algebra; den must be all-infinity
    GradedSpace space;
    /// mu[(d, i)] = terms (a, j, k): coaction of basis element i of degree d
    /// contains a (x) e_{j,k} with |a| + j = d.
    std::map<std::pair<int, int>, std::vector<std::tuple<Expo, int, int>>> mu;

    int max_degree() const { return space.max_degree(); }
};

Comodule comodule_from_presentation(const ComodAlgebraPresentation& p, int max_degree);
Comodule trivial_comodule(int max_degree);
Comodule trivial_comodule_over(const Subquotient& base, int max_degree);
/// The dual Steenrod algebra (or a profile subalgebra) as a comodule over
/// itself via the coproduct.
Comodule comodule_of_span(const Profile& p, int max_degree);
/// A finite subquotient coalgebra as a comodule over itself via its
/// induced coproduct.
Comodule comodule_of_subquotient(const Subquotient& q, int max_degree);

AxiomReport check_comodule_axioms(const Comodule& m);

/// Degree doubling: degrees scale by 2^e, coaction coefficients become
/// 2^e-th powers, and the base becomes its subalgebra of 2^e-th powers.
Comodule double_comodule(const Comodule& m, int e);

/// Cotensor M [] _C N for a subquotient M (bicomodule via its coproduct), a
/// quotient C of the dual Steenrod algebra, and a left comodule N.
CotensorResult cotensor(const Subquotient& m, const Subquotient& c, const Comodule& n,
                        int max_degree);

struct SplittingReport {
    bool ok = true;
    int failing_degree = -1;
    std::string reason;
    std::map<int, int> h_dims;
    std::map<int, int> cotensor_dims;
};

/// Degree-wise isomorphism H_*(Y_s) -> A_* [] _{A//P(s)^(2)} H_*(Y_s)/J_s
/// through the window, plus the dimension convolution
/// dims H_*(Y_s) = dims P(s)^(2) * dims H_*(Y_s)/J_s.
SplittingReport splitting_check(int s, int max_degree);

} // namespace steenrod
