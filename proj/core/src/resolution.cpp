#include "steenrod/resolution.hpp"

#include <algorithm>
#include <stdexcept>

namespace steenrod {

int ExtChart::at(int s, int t) const
{
    auto it = entries.find({s, t});
    return it == entries.end() ? 0 : it->second;
}

void ExtChart::set(int s, int t, int dim)
{
    if (dim == 0)
        entries.erase({s, t});
    else
        entries[{s, t}] = dim;
    min_t = std::min(min_t, t);
    max_t = std::max(max_t, t);
}

ExtChart ExtChart::sign_normalized() const
{
    bool all_nonpos = true, any_negative = false;
    for (auto& [key, dim] : entries) {
        if (key.second > 0)
            all_nonpos = false;
        if (key.second < 0)
            any_negative = true;
    }
    if (!(all_nonpos && any_negative))
        return *this;
    ExtChart out;
    out.max_s = max_s;
    out.provenance = provenance;
    for (auto& [key, dim] : entries)
        out.set(key.first, -key.second, dim);
    return out;
}

std::string ExtChart::text() const
{
    std::string s;
    for (auto& [key, dim] : entries)
        s += std::to_string(key.first) + " " + std::to_string(key.second) + " " +
             std::to_string(dim) + "\n";
    return s;
}

namespace {

    /// Working data for one stage: a submodule of an ambient free module,
    /// with its own basis vectors and restricted action.
    struct StageModule {
        FDHopfPtr algebra;
        std::vector<int> degrees;
        std::vector<F2Matrix> action;   // dim x dim over the stage basis

        int dim() const { return int(degrees.size()); }
    };

    StageModule stage_from_fdmodule(const FDModule& m)
    {
        return StageModule{m.algebra, m.degrees, m.action};
    }

    /// Minimal generators: per degree, a complement of (augmentation ideal)
    /// . M, lowest degrees first, standard basis vectors preferred in index
    /// order.
    std::vector<std::pair<int, F2Vec>> minimal_generators(const StageModule& m, int max_t)
    {
        const FDHopfAlgebra& h = *m.algebra;
        std::vector<std::pair<int, F2Vec>> gens;
        std::map<int, std::vector<int>> by_degree;
        for (int i = 0; i < m.dim(); ++i)
            by_degree[m.degrees[size_t(i)]].push_back(i);
        for (auto& [d, basis_ids] : by_degree) {
            if (d > max_t)
                break;
            // Span of positive-degree action images landing in degree d.
            F2Subspace image(m.dim());
            for (int k = 1; k < h.dim(); ++k) {
                int q = h.degrees[size_t(k)];
                if (q == 0)
                    continue;
                for (int c = 0; c < m.dim(); ++c) {
                    if (m.degrees[size_t(c)] != d - q)
                        continue;
                    F2Vec v = m.action[size_t(k)].col(c);
                    if (!v.is_zero())
                        image.insert(std::move(v));
                }
            }
            for (int i : basis_ids) {
                F2Vec e(m.dim());
                e.set(i, true);
                if (image.insert(e))
                    gens.emplace_back(d, std::move(e));
            }
        }
        return gens;
    }

} // namespace

FreeResolution minimal_resolution(const FDModule& m, int max_s, int max_t)
{
    FreeResolution res;
    res.algebra = m.algebra;
    res.max_t = max_t;
    const FDHopfAlgebra& h = *m.algebra;
    int hd = h.dim();

    StageModule cur = stage_from_fdmodule(m);
    // cur carries, per stage, an expression of its basis inside the free
    // module above it; for stage 0 that role is played by aug.
    for (int s = 0; s <= max_s; ++s) {
        std::vector<std::pair<int, F2Vec>> gens = minimal_generators(cur, max_t);
        std::vector<int> gdeg;
        for (auto& [d, v] : gens)
            gdeg.push_back(d);

        // Free module F_s on these generators; basis (gen g, algebra k).
        auto fidx = [&](int g, int k) { return g * hd + k; };
        int fdim = int(gens.size()) * hd;
        std::vector<int> fdeg(size_t(fdim), 0);
        for (size_t g = 0; g < gens.size(); ++g)
            for (int k = 0; k < hd; ++k)
                fdeg[size_t(fidx(int(g), k))] = gdeg[g] + h.degrees[size_t(k)];

        // d_s : F_s -> cur, per degree matrices.
        std::map<int, F2Matrix> dmat;   // degree -> (cur basis at deg) x (F basis at deg)
        std::map<int, std::vector<int>> cur_at, f_at;
        for (int i = 0; i < cur.dim(); ++i)
            cur_at[cur.degrees[size_t(i)]].push_back(i);
        for (int i = 0; i < fdim; ++i)
            if (fdeg[size_t(i)] <= max_t)
                f_at[fdeg[size_t(i)]].push_back(i);
        for (auto& [d, fb] : f_at) {
            F2Matrix mat(cur.dim(), int(fb.size()));
            for (size_t c = 0; c < fb.size(); ++c) {
                int g = fb[c] / hd, k = fb[c] % hd;
                F2Vec img = cur.action[size_t(k)].apply(gens[size_t(g)].second);
                for (int r = 0; r < cur.dim(); ++r)
                    if (img.get(r))
                        mat.set(r, int(c), true);
            }
            dmat.emplace(d, std::move(mat));
        }

        // Record this stage.
        res.gen_degrees.push_back(gdeg);
        if (s == 0) {
            res.aug.clear();
            for (auto& [d, v] : gens)
                res.aug.push_back(v);
            res.diff.emplace_back();   // no differential below stage 0
        }

        if (s == max_s)
            break;

        // Kernel of d_s per degree becomes the next stage module.
        std::vector<int> kdeg;
        std::vector<F2Vec> kvec;   // coordinates in F_s
        std::map<int, std::vector<int>> k_at;
        for (auto& [d, mat] : dmat) {
            for (F2Vec& v : mat.kernel_basis()) {
                // Expand from the degree-d F-basis back to full F coords.
                F2Vec full(fdim);
                const auto& fb = f_at[d];
                for (size_t c = 0; c < fb.size(); ++c)
                    if (v.get(int(c)))
                        full.set(fb[c], true);
                k_at[d].push_back(int(kdeg.size()));
                kdeg.push_back(d);
                kvec.push_back(std::move(full));
            }
        }

        // Action of the algebra on kernel vectors, solved against the
        // kernel basis in the target degree.
        StageModule next;
        next.algebra = m.algebra;
        next.degrees = kdeg;
        next.action.assign(size_t(hd), F2Matrix(int(kdeg.size()), int(kdeg.size())));
        // Free-module action on F_s coordinates.
        auto free_act = [&](int k, const F2Vec& v) {
            F2Vec out(fdim);
            for (int i = 0; i < fdim; ++i) {
                if (!v.get(i))
                    continue;
                int g = i / hd, b = i % hd;
                for (int l : h.product(k, b)) {
                    int target = fidx(g, l);
                    if (fdeg[size_t(target)] <= max_t)
                        out.flip(target);
                }
            }
            return out;
        };
        for (auto& [d, ids] : k_at) {
            for (int k = 1; k < hd; ++k) {
                int q = h.degrees[size_t(k)];
                if (q == 0 || d + q > max_t)
                    continue;
                auto it = k_at.find(d + q);
                if (it == k_at.end())
                    continue;
                const auto& target_ids = it->second;
                F2Matrix basis_mat(fdim, int(target_ids.size()));
                for (size_t c = 0; c < target_ids.size(); ++c)
                    for (int r = 0; r < fdim; ++r)
                        if (kvec[size_t(target_ids[c])].get(r))
                            basis_mat.set(r, int(c), true);
                for (int id : ids) {
                    F2Vec img = free_act(k, kvec[size_t(id)]);
                    if (img.is_zero())
                        continue;
                    auto sol = basis_mat.solve(img);
                    if (!sol)
                        throw std::logic_error("minimal_resolution: kernel is not action stable");
                    for (size_t c = 0; c < target_ids.size(); ++c)
                        if (sol->get(int(c)))
                            next.action[size_t(k)].set(target_ids[c], id, true);
                }
            }
        }
        next.action[0] = F2Matrix::identity(int(kdeg.size()));

        // Differential of the next stage: generators of ker(d_s) expressed
        // in F_s coordinates become d_{s+1}.
        std::vector<std::pair<int, F2Vec>> next_gens = minimal_generators(next, max_t);
        // We need those later; recompute in the loop body above on the next
        // iteration. Here only record the map from kernel coordinates to
        // (algebra, generator) support.
        res.diff.emplace_back();
        auto& dd = res.diff.back();
        dd.resize(next_gens.size());
        for (size_t gi = 0; gi < next_gens.size(); ++gi) {
            const F2Vec& v = next_gens[gi].second;   // coordinates in kernel basis
            F2Vec full(fdim);
            for (int c = 0; c < int(kdeg.size()); ++c)
                if (v.get(c))
                    full ^= kvec[size_t(c)];
            for (int i = 0; i < fdim; ++i)
                if (full.get(i))
                    dd[gi].emplace_back(i % hd, i / hd);
            std::sort(dd[gi].begin(), dd[gi].end());
        }

        cur = std::move(next);
    }

    // diff[s] describes d : F_s -> F_{s-1}; shift the records accordingly.
    // They were pushed as: diff[0] empty, then for each s the differential
    // of stage s+1; nothing to reorder, sizes line up with gen_degrees.
    return res;
}

void check_resolution(const FreeResolution& r, const FDModule& m)
{
    const FDHopfAlgebra& h = *r.algebra;
    // Minimality: no unit coefficients.
    for (size_t s = 1; s < r.diff.size(); ++s)
        for (auto& entry : r.diff[s])
            for (auto& [k, g] : entry)
                if (k == 0)
                    throw std::logic_error("resolution not minimal: unit coefficient");

    // d o d = 0: expand d(d(g)) in the free module below.
    for (size_t s = 2; s < r.diff.size(); ++s) {
        int hd = h.dim();
        for (size_t gi = 0; gi < r.diff[s].size(); ++gi) {
            std::map<std::pair<int, int>, int> acc;   // (algebra, gen of F_{s-2})
            for (auto& [k, g] : r.diff[s][gi])
                for (auto& [l, g2] : r.diff[s - 1][size_t(g)])
                    for (int kl : h.product(k, l))
                        acc[{kl, g2}] ^= 1;
            for (auto& [key, parity] : acc)
                if (parity && r.gen_degrees[s - 2][size_t(key.second)] +
                                      h.degrees[size_t(key.first)] <=
                                  r.max_t)
                    throw std::logic_error("resolution differential does not square to zero");
        }
    }

    // Augmentation degrees match stage-0 generators.
    if (r.aug.size() != r.gen_degrees[0].size())
        throw std::logic_error("augmentation size mismatch");
    (void)m;
}

namespace {

    /// Cochain spaces Hom^t(F_s, N) with the block convention
    /// Hom(F_s, N)^t = (+)_i N_{t_{s,i} - t}.
    struct HomBlocks {
        std::vector<int> offsets;          // per generator: block start
        std::vector<std::vector<int>> n_basis;   // per generator: N indices
        int total = 0;
    };

    HomBlocks hom_blocks(const FreeResolution& r, const FDModule& n, int s, int t)
    {
        HomBlocks b;
        const auto& gens = r.gen_degrees[size_t(s)];
        for (size_t i = 0; i < gens.size(); ++i) {
            b.offsets.push_back(b.total);
            std::vector<int> ids = n.basis_at(gens[i] - t);
            b.total += int(ids.size());
            b.n_basis.push_back(std::move(ids));
        }
        return b;
    }

} // namespace

ExtChart ext_from_resolution(const FreeResolution& r, const FDModule& n, int max_s, int max_t)
{
    ExtChart chart;
    chart.max_s = max_s;
    chart.provenance = r.algebra->name;
    if (r.stages() < max_s + 2)
        throw std::invalid_argument("ext_from_resolution: resolution too short");

    // Internal degrees range over generator degree minus N degrees.
    int lo = 0, hi = 0;
    for (auto& stage : r.gen_degrees)
        for (int d : stage) {
            lo = std::min(lo, d - n.max_degree());
            hi = std::max(hi, d - n.min_degree());
        }
    lo = std::max(lo, -max_t);
    hi = std::min(hi, max_t);

    for (int t = lo; t <= hi; ++t) {
        std::vector<F2Matrix> deltas;   // delta^s for s = 0..max_s
        std::vector<HomBlocks> blocks;
        for (int s = 0; s <= std::min(max_s + 1, r.stages() - 1); ++s)
            blocks.push_back(hom_blocks(r, n, s, t));
        for (int s = 0; s + 1 < int(blocks.size()); ++s) {
            F2Matrix delta(blocks[size_t(s) + 1].total, blocks[size_t(s)].total);
            const auto& dd = r.diff[size_t(s) + 1];
            for (size_t gi = 0; gi < dd.size(); ++gi)
                for (auto& [k, gj] : dd[gi]) {
                    // Block (gi) of target gets action[k] applied to block
                    // (gj) of source.
                    const auto& src = blocks[size_t(s)].n_basis[size_t(gj)];
                    const auto& dst = blocks[size_t(s) + 1].n_basis[gi];
                    const F2Matrix& act = n.action[size_t(k)];
                    for (size_t c = 0; c < src.size(); ++c)
                        for (size_t rr = 0; rr < dst.size(); ++rr)
                            if (act.get(dst[rr], src[c])) {
                                int row = blocks[size_t(s) + 1].offsets[gi] + int(rr);
                                int col = blocks[size_t(s)].offsets[size_t(gj)] + int(c);
                                delta.set(row, col, !delta.get(row, col));
                            }
                }
            deltas.push_back(std::move(delta));
        }
        for (int s = 0; s <= max_s && s < int(deltas.size()); ++s) {
            int cocycles = int(deltas[size_t(s)].kernel_basis().size());
            int boundaries = s == 0 ? 0 : deltas[size_t(s) - 1].rank();
            int dim = cocycles - boundaries;
            if (dim)
                chart.set(s, t, dim);
        }
    }
    return chart;
}

ExtChart ext(const FDModule& m, const FDModule& n, int max_s, int max_t)
{
    FreeResolution r = minimal_resolution(m, max_s + 1, max_t + n.max_degree() - std::min(0, n.min_degree()));
    ExtChart chart = ext_from_resolution(r, n, max_s, max_t);
    chart.provenance = m.algebra->name;
    return chart;
}

RegradeReport doubling_regrade_check(const FDModule& m, const FDModule& n,
                                     const FDModule& m_doubled, const FDModule& n_doubled, int e,
                                     int max_s, int max_t)
{
    RegradeReport report;
    ExtChart base = ext(m, n, max_s, max_t);
    ExtChart doubled = ext(m_doubled, n_doubled, max_s, max_t << e);
    for (auto& [key, dim] : base.entries)
        if (doubled.at(key.first, key.second << e) != dim) {
            report.ok = false;
            report.message = "missing class at (" + std::to_string(key.first) + "," +
                             std::to_string(key.second << e) + ")";
            return report;
        }
    int scale = 1 << e;
    for (auto& [key, dim] : doubled.entries) {
        auto [s, t] = key;
        if (t % scale != 0 || base.at(s, t / scale) != dim) {
            report.ok = false;
            report.message = "stray class at (" + std::to_string(s) + "," + std::to_string(t) + ")";
            return report;
        }
    }
    return report;
}

WindowedAlgebra windowed_steenrod(int max_degree)
{
    WindowedAlgebra a;
    a.name = "A";
    a.max_degree = max_degree;
    a.basis = [](int d) { return monomials_of_degree(d); };
    a.lmul = [max_degree](const SqElement& b, const Expo& x) {
        return sq_mul(b, SqElement::term(x), max_degree);
    };
    return a;
}

WindowedAlgebra windowed_dual_of_profile(const Profile& p, int max_degree)
{
    WindowedAlgebra a;
    a.name = "dual of profile " + p.str();
    a.max_degree = max_degree;
    a.basis = [p](int d) {
        std::vector<Expo> out;
        for (const Expo& r : monomials_of_degree(d))
            if (p.in_span(r))
                out.push_back(r);
        return out;
    };
    a.lmul = [p, max_degree](const SqElement& b, const Expo& x) {
        SqElement prod = sq_mul(b, SqElement::term(x), max_degree);
        SqElement kept;
        for (const Expo& r : prod.support)
            if (p.in_span(r))
                kept.toggle(r);
        return kept;
    };
    return a;
}

bool SocleReport::all_zero() const
{
    for (auto& [d, n] : dims)
        if (n)
            return false;
    return true;
}

SocleReport socle_scan(const WindowedAlgebra& alg, const std::vector<SqElement>& generators,
                       int guard)
{
    SocleReport report;
    if (guard < 1) {
        report.ok = false;
        report.message = "guard must be positive";
        return report;
    }
    int top_gen = 0;
    for (const SqElement& b : generators)
        top_gen = std::max(top_gen, b.degree());
    if (guard <= top_gen) {
        report.ok = false;
        report.message = "guard " + std::to_string(guard) +
                         " does not exceed the top generator degree " + std::to_string(top_gen);
        return report;
    }
    for (int d = 0; d <= alg.max_degree - guard; ++d) {
        std::vector<Expo> basis = alg.basis(d);
        if (basis.empty()) {
            report.dims[d] = 0;
            continue;
        }
        // Intersection of kernels: stack every generator action.
        F2Matrix stacked(0, int(basis.size()));
        for (const SqElement& b : generators) {
            int q = b.degree();
            std::vector<Expo> target = alg.basis(d + q);
            std::map<Expo, int> tindex;
            for (size_t i = 0; i < target.size(); ++i)
                tindex[target[i]] = int(i);
            F2Matrix mat(int(target.size()), int(basis.size()));
            for (size_t c = 0; c < basis.size(); ++c)
                for (const Expo& r : alg.lmul(b, basis[c]).support)
                    mat.set(tindex.at(r), int(c), true);
            for (int r = 0; r < mat.rows(); ++r)
                stacked.append_row(mat.row(r));
        }
        report.dims[d] = int(stacked.kernel_basis().size());
    }
    return report;
}

EmbedStage injective_embed_stage(const FDModule& m)
{
    EmbedStage stage;
    const FDHopfAlgebra& h = *m.algebra;
    PoincareReport pd_report = poincare_check(h);
    if (!pd_report.ok)
        throw std::invalid_argument("injective_embed_stage: algebra fails Poincare duality: " +
                                    pd_report.message);
    int pd = pd_report.top;
    int top_idx = h.basis_at(pd)[0];
    int hd = h.dim();

    // Poincare-dual basis x_k per algebra element: top coefficient of
    // c_j x_k is the delta pairing.
    std::vector<F2Vec> dual_elt(static_cast<size_t>(hd));
    for (int deg = 0; deg <= pd; ++deg) {
        std::vector<int> left = h.basis_at(deg), right = h.basis_at(pd - deg);
        F2Matrix pairing(int(left.size()), int(right.size()));
        for (size_t r = 0; r < left.size(); ++r)
            for (size_t c = 0; c < right.size(); ++c) {
                const auto& prod = h.product(left[r], right[c]);
                if (std::binary_search(prod.begin(), prod.end(), top_idx))
                    pairing.set(int(r), int(c), true);
            }
        for (size_t r = 0; r < left.size(); ++r) {
            F2Vec delta(int(left.size()));
            delta.set(int(r), true);
            auto sol = pairing.solve(delta);
            if (!sol)
                throw std::logic_error("injective_embed_stage: pairing not invertible");
            F2Vec x(hd);
            for (size_t c = 0; c < right.size(); ++c)
                if (sol->get(int(c)))
                    x.set(right[c], true);
            dual_elt[size_t(left[r])] = std::move(x);
        }
    }

    // Contragredient module D(M): degrees negated, action transposed
    // through the antipode.
    StageModule dm;
    dm.algebra = m.algebra;
    for (int d : m.degrees)
        dm.degrees.push_back(-d);
    dm.action.assign(size_t(hd), F2Matrix(m.dim(), m.dim()));
    for (int k = 0; k < hd; ++k) {
        F2Matrix acc(m.dim(), m.dim());
        for (int l : h.antipode_table[size_t(k)]) {
            F2Matrix t = m.action[size_t(l)].transpose();
            for (int r = 0; r < m.dim(); ++r)
                acc.row(r) ^= t.row(r);
        }
        dm.action[size_t(k)] = std::move(acc);
    }

    // Minimal free cover of D(M); its dual is the minimal embedding of M
    // into a free module (projectives are injective here).
    int dm_max = 0;
    for (int d : dm.degrees)
        dm_max = std::max(dm_max, d);
    std::vector<std::pair<int, F2Vec>> cover = minimal_generators(dm, dm_max);

    std::vector<int> gdeg;
    for (auto& [u, v] : cover)
        gdeg.push_back(-u - pd);
    stage.gen_degrees = gdeg;
    stage.free_target = free_module(m.algebra, gdeg);
    int fdim = stage.free_target.dim();

    // Pairing entry of the dualized cover: the coefficient of m-dual basis
    // in c_k . v_j, re-expressed through the Poincare-dual elements.
    F2Matrix theta(fdim, m.dim());
    for (size_t j = 0; j < cover.size(); ++j)
        for (int k = 0; k < hd; ++k) {
            F2Vec img = dm.action[size_t(k)].apply(cover[j].second);
            for (int col = 0; col < m.dim(); ++col) {
                if (!img.get(col))
                    continue;
                const F2Vec& x = dual_elt[size_t(k)];
                for (int l = 0; l < hd; ++l)
                    if (x.get(l)) {
                        int row = int(j) * hd + l;
                        theta.set(row, col, !theta.get(row, col));
                    }
            }
        }

    // Split by degree for the report and check injectivity.
    std::map<int, std::vector<int>> m_at, f_at;
    for (int i = 0; i < m.dim(); ++i)
        m_at[m.degrees[size_t(i)]].push_back(i);
    for (int i = 0; i < fdim; ++i)
        f_at[stage.free_target.degrees[size_t(i)]].push_back(i);
    for (auto& [d, cols] : m_at) {
        const auto& rows = f_at[d];
        F2Matrix mat(int(rows.size()), int(cols.size()));
        for (size_t c = 0; c < cols.size(); ++c)
            for (size_t r = 0; r < rows.size(); ++r)
                if (theta.get(rows[r], cols[c]))
                    mat.set(int(r), int(c), true);
        if (mat.rank() != int(cols.size())) {
            stage.injective = false;
            stage.failing_degree = d;
        }
        stage.matrices.emplace(d, std::move(mat));
    }

    // Cokernel with induced action.
    F2Subspace image(fdim);
    for (int c = 0; c < m.dim(); ++c)
        image.insert(theta.col(c));
    std::vector<int> comp = image.complement();
    std::map<int, int> comp_pos;
    for (size_t i = 0; i < comp.size(); ++i)
        comp_pos[comp[i]] = int(i);
    auto project = [&](F2Vec v) {
        image.reduce(v);
        F2Vec out(int(comp.size()));
        for (size_t i = 0; i < comp.size(); ++i)
            if (v.get(comp[i]))
                out.set(int(i), true);
        return out;
    };
    FDModule& coker = stage.cokernel;
    coker.algebra = m.algebra;
    for (int i : comp) {
        coker.degrees.push_back(stage.free_target.degrees[size_t(i)]);
        coker.labels.push_back("q" + std::to_string(i));
    }
    for (int k = 0; k < hd; ++k) {
        F2Matrix act(int(comp.size()), int(comp.size()));
        for (size_t c = 0; c < comp.size(); ++c) {
            F2Vec img = project(stage.free_target.action[size_t(k)].col(comp[c]));
            for (size_t r = 0; r < comp.size(); ++r)
                if (img.get(int(r)))
                    act.set(int(r), int(c), true);
        }
        coker.action.push_back(std::move(act));
    }
    return stage;
}

ExtChart coext(const Comodule& m, const Comodule& n, const Subquotient& c, int max_s, int max_t)
{
    if (!c.finite())
        throw std::invalid_argument("coext: coalgebra must be finite dimensional");
    FDHopfPtr dual = dual_of_subquotient(c, "dual");
    FDModule m_dual = dualize_comodule(m, c, dual, max_t + c.top_degree());
    FDModule n_dual = dualize_comodule(n, c, dual, max_t + c.top_degree());
    ExtChart chart = ext(n_dual, m_dual, max_s, max_t);
    chart.provenance = "Coext over " + c.str();
    return chart;
}

} // namespace steenrod
