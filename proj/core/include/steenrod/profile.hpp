#pragma once

#include <optional>
#include <string>
#include <vector>

#include "steenrod/graded.hpp"
#include "steenrod/milnor.hpp"

namespace steenrod {

/// Exponent-cap function i -> h(i) defining the span of monomials whose
/// zeta_i-exponent is a multiple of 2^{h(i)} (and zero when h(i) is
/// infinite). Explicit values up to an index, then a constant tail.
struct Profile {
    static constexpr int infinity = -1;

    std::vector<int> caps;   // h(1), h(2), ..., h(k); infinity = -1
    int tail = 0;            // value of h beyond the explicit caps

    int at(int i) const;
    bool in_span(const Expo& e) const;

    static Profile full() { return {{}, 0}; }                 // A_*
    static Profile trivial() { return {{}, infinity}; }       // F2
    static Profile powers(int s) { return {{}, s}; }          // A_*^{(s)}
    static Profile pn(int n, int s = 0);                      // P(n)^{(s)}_*

    bool operator==(const Profile& rhs) const;
    std::string str() const;
};

std::string profile_to_json(const Profile& p);
Profile profile_from_json(const std::string& text);

/// Subquotient Hopf algebra of the dual Steenrod algebra: the numerator
/// span quotiented by the ideal (zeta_i^{2^{den(i)}}). Basis: monomials
/// with e_i a multiple of 2^{num(i)} and e_i < 2^{den(i)}.
struct Subquotient {
    Profile num;
    Profile den;   // den(i) >= num(i) wherever num is finite

    bool contains(const Expo& e) const;
    /// Projection of a numerator-span monomial; nullopt when it maps to 0.
    std::optional<Expo> project(const Expo& e) const;
    std::vector<Expo> basis(int degree) const;
    GradedSpace basis_space(int max_degree) const;
    /// True when den is finite everywhere, so the algebra is finite
    /// dimensional; top_degree is then its highest nonzero degree.
    bool finite() const;
    int top_degree() const;
    long total_dim() const;

    /// Induced coproduct (pi (x) pi) psi of a basis monomial.
    TensorElement coproduct(const Expo& e) const;
    /// Induced product: exponent sum, then projection.
    std::optional<Expo> mul(const Expo& a, const Expo& b) const;

    static Subquotient subalgebra(Profile p) { return {std::move(p), Profile{{}, Profile::infinity}}; }
    static Subquotient quotient(Profile den_profile)
    {
        return {Profile::full(), std::move(den_profile)};
    }

    std::string str() const;
};

/// The finite quotient P(n)^{(s)}_* / (zeta_1^{2^{s+t}}, zeta_2^{2^{s+t-1}},
/// ..., zeta_t^{2^{s+1}}, zeta_{t+1}^{2^s}, ..., zeta_n^{2^s}).
Subquotient staircase_quotient(int n, int s, int t);
/// Product formula for the staircase dimension, for cross-checking.
long staircase_expected_dim(int n, int s, int t);

/// Ordered monomial basis of the span of a profile, per degree.
GradedSpace subalgebra_basis(const Profile& p, int max_degree);

/// Coproduct closure of the span in all degrees <= max_degree.
bool is_subhopf(const Profile& p, int max_degree);

/// Checks that the defining ideal of the subquotient is a coideal in the
/// window, i.e. the induced coproduct is well defined.
bool is_hopf_quotient(const Subquotient& q, int max_degree);

/// Capped-exponent monomial basis of a quotient; requires the denominator
/// profile to pass is_subhopf in the window.
GradedSpace quotient_basis(const Subquotient& q, int max_degree);

struct FreenessReport {
    bool ok = true;
    int first_bad_degree = -1;
    std::string message;
    std::map<int, int> quotient_dims;
};

/// Milnor-Moore freeness at desk scale: dims(amb) must equal the
/// convolution dims(sub) * dims(amb//sub), and the monomial factorization
/// basis must be exact, in every degree <= max_degree.
FreenessReport verify_freeness(const Profile& sub, const Profile& amb, int max_degree);

/// Cotensor M [] _C F2 for a subquotient M of the dual Steenrod algebra and
/// a coarser quotient C of it: per-degree kernels of the reduced right
/// coaction x -> (id (x) pi) psi(x) - x (x) 1.
struct CotensorResult {
    GradedSpace space;
    std::map<int, std::vector<F2Vec>> vectors;   // coordinates in M-basis
};
CotensorResult cotensor_trivial(const Subquotient& m, const Subquotient& c, int max_degree);

/// Named presets: "A", "A^(s)", "P(n)", "P(n)^(s)" for profiles; "E" and
/// "A//A^(s)", "A//P(n)^(s)" for quotients.
Profile parse_profile_preset(const std::string& name);
Subquotient parse_subquotient_preset(const std::string& name);

} // namespace steenrod
