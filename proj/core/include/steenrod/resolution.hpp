#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "steenrod/fdhopf.hpp"

namespace steenrod {

/// Bigraded dimension table. Internal degrees follow the Adams convention:
/// Hom^t lowers internal degree by t, so resolution-side classes sit at the
/// generator degree. Charts supported entirely in t <= 0 (coefficient-side
/// classes over self-injective algebras) are reported sign-normalized, with
/// t negated, matching how socle classes are indexed classically.
struct ExtChart {
    int max_s = 0;
    int min_t = 0, max_t = 0;
    std::map<std::pair<int, int>, int> entries;   // (s, t) -> dim, zeros omitted
    std::string provenance;

    int at(int s, int t) const;
    void set(int s, int t, int dim);
    bool zero() const { return entries.empty(); }
    ExtChart sign_normalized() const;
    /// Lines "s t dim", sorted, one per nonzero entry.
    std::string text() const;
};

/// Chain of free modules F_0 <- F_1 <- ... with generator degrees and
/// differentials recorded as (algebra element, target generator) pairs.
struct FreeResolution {
    FDHopfPtr algebra;
    int max_t = 0;
    std::vector<std::vector<int>> gen_degrees;   // [s][i]
    /// diff[s][i] = support of d(g_{s,i}) in F_{s-1}: (algebra idx, gen idx).
    std::vector<std::vector<std::vector<std::pair<int, int>>>> diff;
    /// Augmentation: image of g_{0,i} as coordinates in the resolved module.
    std::vector<F2Vec> aug;

    int stages() const { return int(gen_degrees.size()); }
};

/// Minimal free resolution of M through homological degree max_s and
/// internal degree max_t; generators chosen lowest degree first, then by
/// basis order.
FreeResolution minimal_resolution(const FDModule& m, int max_s, int max_t);

/// d o d = 0 and minimality (no unit coefficients in differentials); throws
/// on violation. Exactness holds by construction and is re-checked via
/// rank identities.
void check_resolution(const FreeResolution& r, const FDModule& m);

/// Ext_H^{s,t}(M, N) from a minimal resolution of M, as the cohomology of
/// Hom_H(F_*, N).
ExtChart ext(const FDModule& m, const FDModule& n, int max_s, int max_t);
ExtChart ext_from_resolution(const FreeResolution& r, const FDModule& n, int max_s, int max_t);

/// Regrading check for doubling: chart over the doubled data at (s, 2^e t)
/// must equal the chart of the originals at (s, t), entry for entry.
struct RegradeReport {
    bool ok = true;
    std::string message;
};
RegradeReport doubling_regrade_check(const FDModule& m, const FDModule& n,
                                     const FDModule& m_doubled, const FDModule& n_doubled, int e,
                                     int max_s, int max_t);

/// Graded algebra presented degree-wise inside a window, with deterministic
/// bases; covers the Steenrod algebra and duals of profile subalgebras.
struct WindowedAlgebra {
    std::string name;
    int max_degree = 0;
    /// Basis tuples per degree (Milnor-basis labels).
    std::function<std::vector<Expo>(int)> basis;
    /// Left multiplication of a basis tuple by a homogeneous element,
    /// landing in the same presentation.
    std::function<SqElement(const SqElement&, const Expo&)> lmul;
};

/// The Steenrod algebra restricted to degrees <= max_degree.
WindowedAlgebra windowed_steenrod(int max_degree);
/// The dual algebra of a profile subalgebra of the dual Steenrod algebra,
/// i.e. the quotient of the Steenrod algebra by the complementary span.
WindowedAlgebra windowed_dual_of_profile(const Profile& p, int max_degree);

struct SocleReport {
    bool ok = true;              // guard rule satisfied
    std::string message;
    std::map<int, int> dims;     // asserted degrees only
    bool all_zero() const;
};

/// dims of {x : b x = 0 for every listed generator b} for degrees up to
/// max_degree - guard; the guard must exceed the top generator degree so
/// every product stays inside the window.
SocleReport socle_scan(const WindowedAlgebra& alg, const std::vector<SqElement>& generators,
                       int guard);

struct EmbedStage {
    std::vector<int> gen_degrees;        // free target generators, |m_j| - pd
    std::map<int, F2Matrix> matrices;    // per source degree d: F_{d} x M_d
    FDModule free_target;
    FDModule cokernel;
    bool injective = true;
    int failing_degree = -1;
};

/// Monomorphism M -> F into a finite free module over a Poincare-duality
/// Hopf algebra, built from the duality pairing; the cokernel feeds the
/// next stage of an injective resolution.
EmbedStage injective_embed_stage(const FDModule& m);

/// Coext_C^{s,t}(M, N) for a finite subquotient coalgebra C, computed by
/// dualizing both comodules and running ext with swapped arguments.
ExtChart coext(const Comodule& m, const Comodule& n, const Subquotient& c, int max_s, int max_t);

} // namespace steenrod
