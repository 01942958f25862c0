#include "steenrod/fdhopf.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace steenrod {

int FDHopfAlgebra::top_degree() const
{
    int top = 0;
    for (int d : degrees)
        top = std::max(top, d);
    return top;
}

std::vector<int> FDHopfAlgebra::basis_at(int degree) const
{
    std::vector<int> out;
    for (int k = 0; k < dim(); ++k)
        if (degrees[size_t(k)] == degree)
            out.push_back(k);
    return out;
}

namespace {

    std::vector<int> xor_merge(const std::vector<int>& a, const std::vector<int>& b)
    {
        std::vector<int> out;
        std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                      std::back_inserter(out));
        return out;
    }

    std::vector<int> mul_lists(const FDHopfAlgebra& h, const std::vector<int>& a,
                               const std::vector<int>& b)
    {
        std::vector<int> out;
        for (int i : a)
            for (int j : b)
                out = xor_merge(out, h.product(i, j));
        return out;
    }

} // namespace

void FDHopfAlgebra::validate() const
{
    if (dim() == 0 || degrees[0] != 0)
        throw std::logic_error(name + ": connected algebras start with the unit");
    for (int i = 0; i < dim(); ++i) {
        if (product(0, i) != std::vector<int>{i} || product(i, 0) != std::vector<int>{i})
            throw std::logic_error(name + ": unit axiom fails");
        // Counit: the only coproduct terms with a unit slot are (x,1),(1,x).
        int left_units = 0, right_units = 0;
        for (auto& [a, b] : cop[size_t(i)]) {
            if (a == 0 && b == i)
                ++left_units;
            else if (a == 0)
                throw std::logic_error(name + ": counit fails");
            if (b == 0 && a == i)
                ++right_units;
            else if (b == 0)
                throw std::logic_error(name + ": counit fails");
        }
        if (left_units != 1 || right_units != 1)
            throw std::logic_error(name + ": counit fails");
    }
    // Associativity on every basis triple.
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            for (int k = 0; k < dim(); ++k)
                if (mul_lists(*this, product(i, j), {k}) != mul_lists(*this, {i}, product(j, k)))
                    throw std::logic_error(name + ": associativity fails");
    // psi is an algebra map, on every basis pair.
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) {
            std::set<std::pair<int, int>> lhs;
            for (int z : product(i, j))
                for (auto& t : cop[size_t(z)]) {
                    auto it = lhs.find(t);
                    if (it != lhs.end())
                        lhs.erase(it);
                    else
                        lhs.insert(t);
                }
            std::set<std::pair<int, int>> rhs;
            for (auto& [a, b] : cop[size_t(i)])
                for (auto& [c, d] : cop[size_t(j)])
                    for (int ac : product(a, c))
                        for (int bd : product(b, d)) {
                            auto key = std::make_pair(ac, bd);
                            auto it = rhs.find(key);
                            if (it != rhs.end())
                                rhs.erase(it);
                            else
                                rhs.insert(key);
                        }
            if (lhs != rhs)
                throw std::logic_error(name + ": coproduct is not an algebra map");
        }
    // Antipode identity mu (chi (x) id) psi = unit eps.
    for (int i = 0; i < dim(); ++i) {
        std::vector<int> acc;
        for (auto& [a, b] : cop[size_t(i)])
            acc = xor_merge(acc, mul_lists(*this, antipode_table[size_t(a)], {b}));
        std::vector<int> expected = i == 0 ? std::vector<int>{0} : std::vector<int>{};
        if (acc != expected)
            throw std::logic_error(name + ": antipode axiom fails");
    }
}

namespace {

    void fill_antipode(FDHopfAlgebra& h)
    {
        // chi(x) = x + sum of x' chi(x'') over proper coproduct terms,
        // filled in degree order.
        std::vector<int> order(size_t(h.dim()));
        for (int i = 0; i < h.dim(); ++i)
            order[size_t(i)] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return h.degrees[size_t(a)] < h.degrees[size_t(b)]; });
        h.antipode_table.assign(size_t(h.dim()), {});
        for (int idx : order) {
            if (h.degrees[size_t(idx)] == 0) {
                h.antipode_table[size_t(idx)] = {idx};
                continue;
            }
            std::vector<int> acc = {idx};
            for (auto& [a, b] : h.cop[size_t(idx)]) {
                if (a == 0 || b == 0)
                    continue;
                acc = xor_merge(acc, mul_lists(h, {a}, h.antipode_table[size_t(b)]));
            }
            h.antipode_table[size_t(idx)] = std::move(acc);
        }
    }

    struct IndexedBasis {
        std::vector<Expo> elems;   // sorted by (degree, lex)
        std::map<Expo, int> index;

        void build(std::vector<Expo> list)
        {
            std::sort(list.begin(), list.end(), [](const Expo& a, const Expo& b) {
                int da = mono_degree(a), db = mono_degree(b);
                if (da != db)
                    return da < db;
                return a < b;
            });
            elems = std::move(list);
            for (size_t i = 0; i < elems.size(); ++i)
                index[elems[i]] = int(i);
        }
    };

} // namespace

FDHopfPtr build_an(int n)
{
    if (n < 0 || n > 3)
        throw std::invalid_argument("build_an: supported range is 0 <= n <= 3");
    std::vector<int> caps(size_t(n) + 1);
    for (int i = 1; i <= n + 1; ++i)
        caps[size_t(i) - 1] = 1 << (n + 2 - i);
    auto capped = [&](const Expo& r) {
        if (r.size() > caps.size())
            return false;
        for (size_t i = 0; i < r.size(); ++i)
            if (r[i] >= caps[i])
                return false;
        return true;
    };

    int top = 0;
    for (int i = 1; i <= n + 1; ++i)
        top += (caps[size_t(i) - 1] - 1) * zeta_degree(i);

    IndexedBasis basis;
    {
        std::vector<Expo> list;
        for (int d = 0; d <= top; ++d)
            for (const Expo& r : monomials_of_degree(d))
                if (capped(r))
                    list.push_back(r);
        basis.build(std::move(list));
    }

    auto h = std::make_shared<FDHopfAlgebra>();
    h->name = "A(" + std::to_string(n) + ")";
    for (const Expo& r : basis.elems) {
        h->degrees.push_back(mono_degree(r));
        h->labels.push_back(sq_tuple_str(r));
    }
    int dim = int(basis.elems.size());
    h->mult.assign(size_t(dim), std::vector<std::vector<int>>(size_t(dim)));
    h->cop.assign(size_t(dim), {});

    // Products per total degree: scan coproducts of the ambient dual basis
    // once and read off which Sq(T) occur in Sq(U) Sq(V).
    for (int total = 0; total <= 2 * top; ++total) {
        std::map<std::pair<int, int>, std::vector<int>> found;
        for (const Expo& t : monomials_of_degree(total)) {
            for (const auto& [u, v] : coproduct(t).support) {
                if (!capped(u) || !capped(v))
                    continue;
                if (!capped(t))
                    throw std::logic_error("build_an: product left the Milnor profile span");
                found[{basis.index.at(u), basis.index.at(v)}].push_back(basis.index.at(t));
            }
        }
        for (auto& [key, val] : found) {
            std::sort(val.begin(), val.end());
            h->mult[size_t(key.first)][size_t(key.second)] = std::move(val);
        }
    }

    // Coproduct dual to the monomial product: componentwise splittings.
    for (int k = 0; k < dim; ++k) {
        const Expo& t = basis.elems[size_t(k)];
        std::vector<Expo> parts;
        Expo acc(t.size(), 0);
        // Enumerate all R with 0 <= R <= T componentwise.
        std::vector<std::pair<int, int>> out;
        size_t count = 1;
        for (int x : t)
            count *= size_t(x) + 1;
        for (size_t code = 0; code < count; ++code) {
            size_t rem = code;
            Expo r(t.size(), 0), s(t.size(), 0);
            for (size_t i = 0; i < t.size(); ++i) {
                r[i] = int(rem % size_t(t[i] + 1));
                s[i] = t[i] - r[i];
                rem /= size_t(t[i] + 1);
            }
            canonicalize(r);
            canonicalize(s);
            out.emplace_back(basis.index.at(r), basis.index.at(s));
        }
        std::sort(out.begin(), out.end());
        h->cop[size_t(k)] = std::move(out);
    }

    fill_antipode(*h);
    return h;
}

FDHopfPtr dual_of_subquotient(const Subquotient& q, std::string name)
{
    if (!q.finite())
        throw std::invalid_argument("dual_of_subquotient: subquotient is infinite dimensional");
    int top = q.top_degree();
    IndexedBasis basis;
    {
        std::vector<Expo> list;
        for (int d = 0; d <= top; ++d)
            for (const Expo& m : q.basis(d))
                list.push_back(m);
        basis.build(std::move(list));
    }
    auto h = std::make_shared<FDHopfAlgebra>();
    h->name = std::move(name);
    for (const Expo& m : basis.elems) {
        h->degrees.push_back(mono_degree(m));
        h->labels.push_back(mono_str(m) + "*");
    }
    int dim = int(basis.elems.size());
    h->mult.assign(size_t(dim), std::vector<std::vector<int>>(size_t(dim)));
    h->cop.assign(size_t(dim), {});

    // Multiplication transposes the subquotient coproduct.
    for (int k = 0; k < dim; ++k)
        for (const auto& [a, b] : q.coproduct(basis.elems[size_t(k)]).support) {
            auto& cell = h->mult[size_t(basis.index.at(a))][size_t(basis.index.at(b))];
            cell.push_back(k);
        }
    for (auto& row : h->mult)
        for (auto& cell : row)
            std::sort(cell.begin(), cell.end());

    // Comultiplication transposes the (projected) monomial product.
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            auto prod = q.mul(basis.elems[size_t(i)], basis.elems[size_t(j)]);
            if (!prod)
                continue;
            h->cop[size_t(basis.index.at(*prod))].emplace_back(i, j);
        }
    for (auto& c : h->cop)
        std::sort(c.begin(), c.end());

    fill_antipode(*h);
    return h;
}

FDHopfPtr double_algebra(const FDHopfAlgebra& h, int e)
{
    auto out = std::make_shared<FDHopfAlgebra>(h);
    out->name = h.name + "_(x" + std::to_string(1 << e) + ")";
    for (int& d : out->degrees)
        d <<= e;
    return out;
}

PoincareReport poincare_check(const FDHopfAlgebra& h)
{
    PoincareReport report;
    report.top = h.top_degree();
    if (int(h.basis_at(0).size()) != 1 || int(h.basis_at(report.top).size()) != 1) {
        report.ok = false;
        report.message = "not one dimensional at the ends";
        return report;
    }
    int top_idx = h.basis_at(report.top)[0];
    for (int k = 0; k <= report.top; ++k) {
        std::vector<int> left = h.basis_at(k), right = h.basis_at(report.top - k);
        if (left.size() != right.size()) {
            report.ok = false;
            report.failing_degree = k;
            report.message = "dims asymmetric at degree " + std::to_string(k);
            return report;
        }
        F2Matrix pairing(int(left.size()), int(right.size()));
        for (size_t r = 0; r < left.size(); ++r)
            for (size_t c = 0; c < right.size(); ++c) {
                const auto& prod = h.product(left[r], right[c]);
                if (std::binary_search(prod.begin(), prod.end(), top_idx))
                    pairing.set(int(r), int(c), true);
            }
        if (pairing.rank() != int(left.size())) {
            report.ok = false;
            report.failing_degree = k;
            report.message = "degenerate pairing at degree " + std::to_string(k);
            return report;
        }
    }
    return report;
}

std::vector<int> FDModule::basis_at(int degree) const
{
    std::vector<int> out;
    for (int k = 0; k < dim(); ++k)
        if (degrees[size_t(k)] == degree)
            out.push_back(k);
    return out;
}

int FDModule::min_degree() const
{
    int d = 0;
    for (size_t i = 0; i < degrees.size(); ++i)
        d = i ? std::min(d, degrees[i]) : degrees[i];
    return d;
}

int FDModule::max_degree() const
{
    int d = 0;
    for (size_t i = 0; i < degrees.size(); ++i)
        d = i ? std::max(d, degrees[i]) : degrees[i];
    return d;
}

void FDModule::validate() const
{
    const FDHopfAlgebra& h = *algebra;
    if (int(action.size()) != h.dim())
        throw std::logic_error("FDModule: one action matrix per algebra basis element");
    if (!(action[0] == F2Matrix::identity(dim())))
        throw std::logic_error("FDModule: unit must act as identity");
    for (int k = 0; k < h.dim(); ++k)
        for (int r = 0; r < dim(); ++r)
            for (int c = 0; c < dim(); ++c)
                if (action[size_t(k)].get(r, c) &&
                    degrees[size_t(r)] != degrees[size_t(c)] + h.degrees[size_t(k)])
                    throw std::logic_error("FDModule: action is not degree homogeneous");
    for (int i = 0; i < h.dim(); ++i)
        for (int j = 0; j < h.dim(); ++j) {
            F2Matrix lhs = action[size_t(i)] * action[size_t(j)];
            F2Matrix rhs(dim(), dim());
            for (int k : h.product(i, j))
                for (int r = 0; r < dim(); ++r)
                    rhs.row(r) ^= action[size_t(k)].row(r);
            if (!(lhs == rhs))
                throw std::logic_error("FDModule: action violates a product relation");
        }
}

FDModule trivial_module(FDHopfPtr h, int degree)
{
    FDModule m;
    m.algebra = std::move(h);
    m.degrees = {degree};
    m.labels = {"1"};
    int n = m.algebra->dim();
    for (int k = 0; k < n; ++k)
        m.action.push_back(k == 0 ? F2Matrix::identity(1) : F2Matrix(1, 1));
    return m;
}

FDModule free_module(FDHopfPtr h, const std::vector<int>& gen_degrees)
{
    FDModule m;
    const FDHopfAlgebra& alg = *h;
    m.algebra = std::move(h);
    int hd = alg.dim();
    for (size_t g = 0; g < gen_degrees.size(); ++g)
        for (int k = 0; k < hd; ++k) {
            m.degrees.push_back(gen_degrees[g] + alg.degrees[size_t(k)]);
            m.labels.push_back(alg.labels[size_t(k)] + "g" + std::to_string(g));
        }
    int dim = int(m.degrees.size());
    for (int a = 0; a < hd; ++a) {
        F2Matrix mat(dim, dim);
        for (size_t g = 0; g < gen_degrees.size(); ++g)
            for (int k = 0; k < hd; ++k)
                for (int l : alg.product(a, k))
                    mat.set(int(g) * hd + l, int(g) * hd + k, true);
        m.action.push_back(std::move(mat));
    }
    return m;
}

FDModule regular_module(FDHopfPtr h)
{
    return free_module(std::move(h), {0});
}

FDModule double_module(const FDModule& m, const FDHopfPtr& doubled_algebra, int e)
{
    if (doubled_algebra->dim() != m.algebra->dim())
        throw std::invalid_argument("double_module: algebra dimension mismatch");
    FDModule out = m;
    out.algebra = doubled_algebra;
    for (int& d : out.degrees)
        d <<= e;
    return out;
}

FDModule dualize_comodule(const Comodule& m, const Subquotient& c, const FDHopfPtr& dual_algebra,
                          int max_degree)
{
    const FDHopfAlgebra& h = *dual_algebra;
    // Index the dual basis: one functional per comodule basis element.
    std::vector<std::pair<int, int>> flat;   // (degree, index)
    std::map<std::pair<int, int>, int> pos;
    for (int d = 0; d <= std::min(max_degree, m.max_degree()); ++d)
        for (int i = 0; i < m.space.dim(d); ++i) {
            pos[{d, i}] = int(flat.size());
            flat.emplace_back(d, i);
        }

    // Monomial index within the dual algebra basis.
    std::map<Expo, int> alg_index;
    for (int k = 0; k < h.dim(); ++k) {
        // Labels carry the monomial with a trailing '*'.
        std::string s = h.labels[size_t(k)];
        alg_index[parse_mono(s.substr(0, s.size() - 1))] = k;
    }

    FDModule out;
    out.algebra = dual_algebra;
    for (auto& [d, i] : flat) {
        out.degrees.push_back(d);
        out.labels.push_back(m.space.labels(d)[size_t(i)] + "*");
    }
    int dim = int(flat.size());
    out.action.assign(size_t(h.dim()), F2Matrix(dim, dim));

    // (theta . f)(y) = sum <chi(theta), a> f(x) over coaction terms (a, x)
    // of y; the antipode makes the dual a left module.
    for (int row = 0; row < dim; ++row) {
        auto [d, i] = flat[size_t(row)];
        auto it = m.mu.find({d, i});
        if (it == m.mu.end())
            continue;
        for (const auto& [a, j, x] : it->second) {
            auto cpos = pos.find({j, x});
            if (cpos == pos.end())
                continue;
            auto aidx = alg_index.find(a);
            if (aidx == alg_index.end())
                throw std::logic_error("dualize_comodule: coaction coefficient outside the coalgebra");
            // All k with chi(c_k) containing a.
            for (int k = 0; k < h.dim(); ++k) {
                if (h.degrees[size_t(k)] != mono_degree(a))
                    continue;
                const auto& chi = h.antipode_table[size_t(k)];
                if (std::binary_search(chi.begin(), chi.end(), aidx->second)) {
                    F2Matrix& mat = out.action[size_t(k)];
                    mat.set(row, cpos->second, !mat.get(row, cpos->second));
                }
            }
        }
    }
    return out;
}

Comodule comodule_from_module(const FDModule& m, const Subquotient& c)
{
    const FDHopfAlgebra& h = *m.algebra;
    std::map<int, Expo> monomial_of;
    for (int k = 0; k < h.dim(); ++k) {
        std::string s = h.labels[size_t(k)];
        monomial_of[k] = parse_mono(s.substr(0, s.size() - 1));
    }
    // Inverting the antipode twist: chi is an involution, so the
    // coefficient of monomial a solves X = chi(B) with the roles of the
    // table reversed.
    std::vector<std::vector<int>> rev(size_t(h.dim()));
    for (int a = 0; a < h.dim(); ++a)
        for (int k : h.antipode_table[size_t(a)])
            rev[size_t(k)].push_back(a);

    Comodule out;
    out.base = c;
    int max_deg = 0;
    for (int d : m.degrees)
        max_deg = std::max(max_deg, d);
    out.space = GradedSpace(max_deg);
    std::map<int, std::vector<int>> by_degree;
    for (int i = 0; i < m.dim(); ++i)
        by_degree[m.degrees[size_t(i)]].push_back(i);
    std::map<int, std::pair<int, int>> slot;   // module index -> (degree, position)
    for (auto& [d, list] : by_degree) {
        std::vector<std::string> labels;
        for (size_t p = 0; p < list.size(); ++p) {
            labels.push_back(m.labels[size_t(list[p])] + "*");
            slot[list[p]] = {d, int(p)};
        }
        out.space.set_basis(d, std::move(labels));
    }

    for (int y = 0; y < m.dim(); ++y) {
        auto [dy, py] = slot[y];
        auto& entry = out.mu[{dy, py}];
        std::map<std::pair<Expo, int>, int> acc;
        for (int k = 0; k < h.dim(); ++k)
            for (int x = 0; x < m.dim(); ++x) {
                if (!m.action[size_t(k)].get(y, x))
                    continue;
                for (int a : rev[size_t(k)])
                    acc[{monomial_of[a], x}] ^= 1;
            }
        for (auto& [key, parity] : acc) {
            if (!parity)
                continue;
            auto [dx, px] = slot[key.second];
            entry.emplace_back(key.first, dx, px);
        }
        std::sort(entry.begin(), entry.end());
    }
    return out;
}

} // namespace steenrod
