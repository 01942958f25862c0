#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace steenrod {

/// Exponent sequence (e_1, e_2, ..., e_k), trailing zeros stripped.
/// Doubles as a monomial zeta_1^{e_1}...zeta_k^{e_k} of the dual Steenrod
/// algebra and as a Milnor basis tuple Sq(e_1,...,e_k); both carry the
/// degree sum e_i * (2^i - 1).
using Expo = std::vector<int>;

void canonicalize(Expo& e);
int zeta_degree(int i);                     // |zeta_i| = 2^i - 1
int mono_degree(const Expo& e);
Expo mono_mul(const Expo& a, const Expo& b);
/// Frobenius power: exponents multiplied by 2^k.
Expo mono_pow2(const Expo& e, int k);
/// Largest generator index that fits in the given degree.
int max_gen_index(int degree);

/// All exponent sequences of the given degree, lexicographically sorted.
/// Built once per degree and shared read-only afterwards.
const std::vector<Expo>& monomials_of_degree(int degree);
/// Index of e within monomials_of_degree(mono_degree(e)).
int monomial_index(const Expo& e);

/// F2 linear combination of dual-algebra monomials.
struct DualElement {
    std::set<Expo> support;

    static DualElement zero() { return {}; }
    static DualElement unit() { return term({}); }
    static DualElement term(Expo e);
    static DualElement zeta(int i, int exponent = 1);

    bool is_zero() const { return support.empty(); }
    void toggle(Expo e);
    void operator+=(const DualElement& rhs);
    bool operator==(const DualElement& rhs) const { return support == rhs.support; }
    /// Degree if homogeneous, -1 for zero; throws if mixed.
    int degree() const;
};

DualElement dual_mul(const DualElement& a, const DualElement& b);
DualElement dual_pow2(const DualElement& a, int k);

/// F2 linear combination of tensors a (x) b of dual-algebra monomials.
struct TensorElement {
    std::set<std::pair<Expo, Expo>> support;

    static TensorElement unit() { return term({}, {}); }
    static TensorElement term(Expo left, Expo right);

    bool is_zero() const { return support.empty(); }
    void toggle(Expo left, Expo right);
    void operator+=(const TensorElement& rhs);
    bool operator==(const TensorElement& rhs) const { return support == rhs.support; }
};

TensorElement tensor_mul(const TensorElement& a, const TensorElement& b);
TensorElement tensor_pow2(const TensorElement& a, int k);

/// Coproduct of the dual Steenrod algebra, extended multiplicatively from
/// psi(zeta_n) = sum_{0<=i<=n} zeta_{n-i}^{2^i} (x) zeta_i.
TensorElement coproduct(const Expo& mono);
TensorElement coproduct(const DualElement& x);

/// Antipode, from the recursion sum_i zeta_{n-i}^{2^i} chi(zeta_i) = 0.
DualElement antipode(const Expo& mono);
DualElement antipode(const DualElement& x);

/// F2 linear combination of Milnor basis elements Sq(r_1,...,r_k).
struct SqElement {
    std::set<Expo> support;

    static SqElement zero() { return {}; }
    static SqElement unit() { return term({}); }
    static SqElement term(Expo r);
    static SqElement sq(int r);             // Sq(r)
    /// Milnor primitive P^a_b = Sq(0,...,0,2^a) with the entry in slot b.
    static SqElement primitive(int a, int b);

    bool is_zero() const { return support.empty(); }
    void toggle(Expo r);
    void operator+=(const SqElement& rhs);
    bool operator==(const SqElement& rhs) const { return support == rhs.support; }
    int degree() const;                     // homogeneous degree, -1 for zero
};

/// Milnor-basis product, computed by transposing the dual coproduct against
/// the pairing <Sq(R), zeta^R> = 1. Throws if the product degree exceeds
/// max_degree.
SqElement sq_mul(const SqElement& a, const SqElement& b, int max_degree);
/// Product of two basis tuples at the given (exact) total degree.
SqElement sq_mul_basis(const Expo& r, const Expo& s);

/// Verschiebung: Sq(r_1,...,r_k) -> Sq(r_1/2,...,r_k/2) when every entry is
/// even, 0 otherwise.
SqElement halve(const SqElement& a);

// Text syntax ("z1^2 z3 + z2", "Sq(3,1)", "a|m"); print and parse round-trip
// byte-exactly.
std::string mono_str(const Expo& e);
std::string dual_str(const DualElement& x);
std::string sq_tuple_str(const Expo& r);
std::string sq_str(const SqElement& x);
enum class TensorOrder { CoproductStyle, CoactionStyle };
std::string tensor_str(const TensorElement& x, TensorOrder order = TensorOrder::CoproductStyle);
Expo parse_mono(const std::string& text);
DualElement parse_dual(const std::string& text);
SqElement parse_sq(const std::string& text);

} // namespace steenrod
