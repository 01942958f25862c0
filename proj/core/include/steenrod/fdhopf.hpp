#pragma once

#include <memory>
#include <string>
#include <vector>

#include "steenrod/comodule.hpp"
#include "steenrod/f2.hpp"
#include "steenrod/milnor.hpp"
#include "steenrod/profile.hpp"

namespace steenrod {

/// Finite-dimensional graded connected Hopf algebra over F2 with explicit
/// multiplication and comultiplication tables. Basis element 0 is the unit.
struct FDHopfAlgebra {
    std::string name;
    std::vector<int> degrees;                         // degree per basis index
    std::vector<std::string> labels;
    std::vector<std::vector<std::vector<int>>> mult;  // mult[i][j] = sorted F2 support
    std::vector<std::vector<std::pair<int, int>>> cop;
    std::vector<std::vector<int>> antipode_table;     // chi per basis index

    int dim() const { return int(degrees.size()); }
    int top_degree() const;
    std::vector<int> basis_at(int degree) const;
    /// F2 product of two basis elements as a sorted index list.
    const std::vector<int>& product(int i, int j) const { return mult[size_t(i)][size_t(j)]; }

    /// Associativity, unit, counit, hopf-compatibility spot checks plus the
    /// antipode identities; throws on any violation.
    void validate() const;
};

using FDHopfPtr = std::shared_ptr<const FDHopfAlgebra>;

/// A(n): the Milnor-profile subalgebra spanned by Sq(r_1,...,r_{n+1}) with
/// r_i < 2^{n+2-i}, with tables restricted from the ambient product.
FDHopfPtr build_an(int n);

/// Dual Hopf algebra of a finite subquotient of the dual Steenrod algebra;
/// multiplication is the transposed coproduct and vice versa.
FDHopfPtr dual_of_subquotient(const Subquotient& q, std::string name);

/// Degrees scaled by 2^e, same tables.
FDHopfPtr double_algebra(const FDHopfAlgebra& h, int e);

struct PoincareReport {
    bool ok = true;
    int top = 0;
    int failing_degree = -1;
    std::string message;
};

/// Perfectness of the multiplication pairing H^k x H^{pd-k} -> H^{pd} in
/// every degree.
PoincareReport poincare_check(const FDHopfAlgebra& h);

/// Graded module over an FDHopfAlgebra with one action matrix per algebra
/// basis element; the action raises internal degree. Degrees may be
/// negative (duals and embedding targets use that freedom).
struct FDModule {
    FDHopfPtr algebra;
    std::vector<int> degrees;
    std::vector<std::string> labels;
    std::vector<F2Matrix> action;   // action[k]: coordinates -> coordinates

    int dim() const { return int(degrees.size()); }
    std::vector<int> basis_at(int degree) const;
    int min_degree() const;
    int max_degree() const;

    void validate() const;   // unit, degree homogeneity, relations vs mult
};

FDModule trivial_module(FDHopfPtr h, int degree = 0);
/// Free module on generators of the given degrees; basis (algebra elt,
/// generator) ordered generator-major.
FDModule free_module(FDHopfPtr h, const std::vector<int>& gen_degrees);
/// The regular representation, i.e. the rank-one free module.
FDModule regular_module(FDHopfPtr h);
/// Same module over the doubled algebra with degrees scaled by 2^e.
FDModule double_module(const FDModule& m, const FDHopfPtr& doubled_algebra, int e);

/// Degree-wise dual of a comodule over a finite subquotient coalgebra,
/// made a left module over the dual algebra through the antipode.
FDModule dualize_comodule(const Comodule& m, const Subquotient& c, const FDHopfPtr& dual_algebra,
                          int max_degree);
/// Inverse direction, for the involution check.
Comodule comodule_from_module(const FDModule& m, const Subquotient& c);

} // namespace steenrod
