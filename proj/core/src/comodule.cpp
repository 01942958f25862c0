#include "steenrod/comodule.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace steenrod {

GenMono gen_mul(const GenMono& a, const GenMono& b)
{
    GenMono out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i)
        out[i] += b[i];
    return out;
}

GenMono gen_pow2(const GenMono& a, int k)
{
    GenMono out = a;
    for (int& x : out)
        x <<= k;
    return out;
}

namespace {

    void strip(GenMono& m)
    {
        while (!m.empty() && m.back() == 0)
            m.pop_back();
    }

} // namespace

MixedTensor MixedTensor::term(Expo a, GenMono m)
{
    canonicalize(a);
    strip(m);
    MixedTensor t;
    t.support.emplace(std::move(a), std::move(m));
    return t;
}

void MixedTensor::toggle(Expo a, GenMono m)
{
    canonicalize(a);
    strip(m);
    auto key = std::make_pair(std::move(a), std::move(m));
    auto it = support.find(key);
    if (it != support.end())
        support.erase(it);
    else
        support.insert(std::move(key));
}

void MixedTensor::operator+=(const MixedTensor& rhs)
{
    for (const auto& t : rhs.support)
        toggle(t.first, t.second);
}

MixedTensor mixed_mul(const MixedTensor& a, const MixedTensor& b)
{
    MixedTensor out;
    for (const auto& x : a.support)
        for (const auto& y : b.support)
            out.toggle(mono_mul(x.first, y.first), gen_mul(x.second, y.second));
    return out;
}

namespace {

    MixedTensor mixed_pow2(const MixedTensor& a, int k)
    {
        MixedTensor out;
        for (const auto& x : a.support)
            out.support.emplace(mono_pow2(x.first, k), gen_pow2(x.second, k));
        return out;
    }

    MixedTensor mixed_pow(const MixedTensor& a, int e)
    {
        MixedTensor acc = MixedTensor::unit();
        for (int k = 0; e >> k; ++k)
            if ((e >> k) & 1)
                acc = mixed_mul(acc, mixed_pow2(a, k));
        return acc;
    }

} // namespace

int ComodAlgebraPresentation::gen_index(const std::string& name) const
{
    for (size_t i = 0; i < gen_names.size(); ++i)
        if (gen_names[i] == name)
            return int(i);
    throw std::invalid_argument("unknown generator '" + name + "'");
}

int ComodAlgebraPresentation::degree(const GenMono& m) const
{
    int d = 0;
    for (size_t i = 0; i < m.size(); ++i)
        d += m[i] * gen_degrees[i];
    return d;
}

std::string ComodAlgebraPresentation::mono_label(const GenMono& m) const
{
    std::string s;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (!s.empty())
            s += ' ';
        s += gen_names[i];
        if (m[i] > 1)
            s += '^' + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

GenMono ComodAlgebraPresentation::parse_label(const std::string& text) const
{
    GenMono m(gen_names.size(), 0);
    std::string tok;
    std::istringstream in(text);
    while (in >> tok) {
        if (tok == "1")
            continue;
        size_t caret = tok.find('^');
        std::string name = caret == std::string::npos ? tok : tok.substr(0, caret);
        int exp = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
        m[size_t(gen_index(name))] += exp;
    }
    strip(m);
    return m;
}

namespace {

    void enumerate_gen(const std::vector<int>& degrees, int degree, size_t i, GenMono& acc,
                       std::vector<GenMono>& out)
    {
        if (degree == 0) {
            GenMono m = acc;
            strip(m);
            out.push_back(std::move(m));
            return;
        }
        if (i == 0)
            return;
        int w = degrees[i - 1];
        for (int c = degree / w; c >= 0; --c) {
            acc[i - 1] = c;
            enumerate_gen(degrees, degree - c * w, i - 1, acc, out);
        }
        acc[i - 1] = 0;
    }

} // namespace

std::vector<GenMono> ComodAlgebraPresentation::basis(int degree) const
{
    std::vector<GenMono> out;
    GenMono acc(gen_degrees.size(), 0);
    enumerate_gen(gen_degrees, degree, gen_degrees.size(), acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

MixedTensor ComodAlgebraPresentation::coaction(const GenMono& m) const
{
    MixedTensor acc = MixedTensor::unit();
    for (size_t i = 0; i < m.size(); ++i)
        if (m[i] > 0)
            acc = mixed_mul(acc, mixed_pow(gen_coaction[i], m[i]));
    return acc;
}

void ComodAlgebraPresentation::validate() const
{
    if (gen_names.size() != gen_degrees.size() || gen_names.size() != gen_coaction.size())
        throw std::invalid_argument("presentation: field lengths disagree");
    for (size_t i = 0; i < gen_names.size(); ++i) {
        if (gen_degrees[i] <= 0)
            throw std::invalid_argument("presentation: generator degrees must be positive");
        for (const auto& [a, x] : gen_coaction[i].support) {
            GenMono xl = x;
            strip(xl);
            int d = mono_degree(a) + degree(xl);
            if (d != gen_degrees[i])
                throw std::invalid_argument("presentation: inhomogeneous coaction of " +
                                            gen_names[i]);
        }
    }
}

std::string presentation_to_json(const ComodAlgebraPresentation& p)
{
    nlohmann::json j;
    j["generators"] = nlohmann::json::array();
    for (size_t i = 0; i < p.gen_names.size(); ++i)
        j["generators"].push_back({{"name", p.gen_names[i]}, {"degree", p.gen_degrees[i]}});
    j["coaction"] = nlohmann::json::object();
    for (size_t i = 0; i < p.gen_names.size(); ++i) {
        std::vector<std::pair<Expo, GenMono>> terms(p.gen_coaction[i].support.begin(),
                                                    p.gen_coaction[i].support.end());
        std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
            int da = mono_degree(a.first), db = mono_degree(b.first);
            if (da != db)
                return da < db;
            return a < b;
        });
        std::string s;
        for (const auto& [a, m] : terms) {
            if (!s.empty())
                s += " + ";
            s += mono_str(a) + "|" + p.mono_label(m);
        }
        j["coaction"][p.gen_names[i]] = s.empty() ? "0" : s;
    }
    return j.dump();
}

ComodAlgebraPresentation presentation_from_json(const std::string& text)
{
    nlohmann::json j = nlohmann::json::parse(text);
    ComodAlgebraPresentation p;
    for (auto& g : j.at("generators")) {
        p.gen_names.push_back(g.at("name").get<std::string>());
        p.gen_degrees.push_back(g.at("degree").get<int>());
    }
    p.gen_coaction.resize(p.gen_names.size());
    for (auto& [name, value] : j.at("coaction").items()) {
        int i = p.gen_index(name);
        MixedTensor t;
        std::string body = value.get<std::string>();
        std::string term;
        std::istringstream in(body);
        while (std::getline(in, term, '+')) {
            size_t a = term.find_first_not_of(" \t");
            size_t b = term.find_last_not_of(" \t");
            if (a == std::string::npos)
                continue;
            term = term.substr(a, b - a + 1);
            if (term == "0")
                continue;
            size_t bar = term.find('|');
            if (bar == std::string::npos)
                throw std::invalid_argument("presentation coaction term needs 'a|m' form");
            t.toggle(parse_mono(term.substr(0, bar)), p.parse_label(term.substr(bar + 1)));
        }
        p.gen_coaction[size_t(i)] = std::move(t);
    }
    p.validate();
    return p;
}

ComodAlgebraPresentation build_ys(int s)
{
    if (s < 1)
        throw std::invalid_argument("build_ys: need s >= 1");
    ComodAlgebraPresentation p;
    int top = (1 << s) - 1;
    for (int k = 1; k <= top; ++k) {
        p.gen_names.push_back("y" + std::to_string(k));
        p.gen_degrees.push_back(4 * k);
    }
    p.gen_coaction.resize(p.gen_names.size());
    for (int k = 1; k <= top; ++k) {
        MixedTensor t;
        bool special = (k & (k + 1)) == 0;   // k = 2^r - 1
        if (special) {
            int r = 0;
            while ((1 << r) - 1 != k)
                ++r;
            // psi(y_{2^r-1}) = sum_{0<=i<=r} zeta_i^4 (x) y_{2^{r-i}-1}^{2^i},
            // with y_0 = 1 and zeta_0 = 1.
            for (int i = 0; i <= r; ++i) {
                Expo zeta;
                if (i > 0) {
                    zeta.assign(size_t(i), 0);
                    zeta[size_t(i) - 1] = 4;
                }
                GenMono y;
                int idx = (1 << (r - i)) - 1;
                if (idx > 0) {
                    y.assign(size_t(idx), 0);
                    y[size_t(idx) - 1] = 1 << i;
                }
                t.toggle(std::move(zeta), std::move(y));
            }
        }
        else {
            GenMono y(size_t(k), 0);
            y[size_t(k) - 1] = 1;
            t.toggle({}, std::move(y));
        }
        p.gen_coaction[size_t(k) - 1] = std::move(t);
    }
    p.validate();
    return p;
}

std::vector<std::string> ys_ideal_generators(int s)
{
    std::vector<std::string> out;
    for (int r = 1; (1 << r) - 1 <= (1 << s) - 1; ++r)
        out.push_back("y" + std::to_string((1 << r) - 1));
    return out;
}

int msp_stand_in_s(int max_degree)
{
    int s = 1;
    while ((1 << (s + 2)) - 4 < max_degree)
        ++s;
    return s;
}

AxiomReport check_comodule_axioms(const ComodAlgebraPresentation& p, int max_degree)
{
    AxiomReport report;
    for (int d = 0; d <= max_degree; ++d) {
        for (const GenMono& m : p.basis(d)) {
            MixedTensor mu = p.coaction(m);

            // Counit: the unit-left-factor part must be exactly 1 (x) m.
            MixedTensor unit_part;
            for (const auto& [a, x] : mu.support)
                if (a.empty())
                    unit_part.toggle(a, x);
            if (!(unit_part == MixedTensor::term({}, m))) {
                report.ok = false;
                report.failing_degree = d;
                report.failing_element = p.mono_label(m);
                report.reason = "counit";
                return report;
            }

            // Coassociativity as triple-tensor sets. Stored terms (a, x)
            // are right-comodule data x (x) a, so the iterated coaction
            // composes its coefficients contravariantly: the inner
            // coefficient b lands left of the outer a.
            std::set<std::tuple<Expo, Expo, GenMono>> lhs, rhs;
            for (const auto& [a, x] : mu.support) {
                for (const auto& [a1, a2] : coproduct(a).support) {
                    auto key = std::make_tuple(a1, a2, x);
                    auto it = lhs.find(key);
                    if (it != lhs.end())
                        lhs.erase(it);
                    else
                        lhs.insert(std::move(key));
                }
                for (const auto& [b, y] : p.coaction(x).support) {
                    auto key = std::make_tuple(b, a, y);
                    auto it = rhs.find(key);
                    if (it != rhs.end())
                        rhs.erase(it);
                    else
                        rhs.insert(std::move(key));
                }
            }
            if (lhs != rhs) {
                report.ok = false;
                report.failing_degree = d;
                report.failing_element = p.mono_label(m);
                report.reason = "coassociativity";
                return report;
            }
        }
    }
    return report;
}

IdealQuotient ideal_and_quotient(const ComodAlgebraPresentation& p,
                                 const std::vector<std::string>& gens, int max_degree)
{
    IdealQuotient out;
    std::vector<bool> killed(p.gen_names.size(), false);
    for (const std::string& g : gens)
        killed[size_t(p.gen_index(g))] = true;

    auto in_ideal = [&](const GenMono& m) {
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0 && killed[i])
                return true;
        return false;
    };

    for (int d = 0; d <= max_degree; ++d)
        for (const GenMono& m : p.basis(d)) {
            if (!in_ideal(m))
                continue;
            out.ideal_basis[d].push_back(m);
            for (const auto& [a, x] : p.coaction(m).support)
                if (!in_ideal(x) && out.literally_stable) {
                    out.literally_stable = false;
                    out.failing_degree = d;
                    out.witness = p.mono_label(m);
                }
        }
    if (!out.literally_stable) {
        // Fall back to the primitive-complement criterion.
        bool complement_primitive = true;
        for (size_t i = 0; i < p.gen_names.size(); ++i) {
            if (killed[i])
                continue;
            GenMono self(p.gen_names.size(), 0);
            self[i] = 1;
            if (!(p.gen_coaction[i] == MixedTensor::term({}, self)))
                complement_primitive = false;
        }
        out.subcomodule = complement_primitive;
    }

    // Quotient presentation on the surviving generators, coactions
    // projected by dropping ideal terms.
    ComodAlgebraPresentation q;
    std::vector<int> new_index(p.gen_names.size(), -1);
    for (size_t i = 0; i < p.gen_names.size(); ++i) {
        if (killed[i])
            continue;
        new_index[i] = int(q.gen_names.size());
        out.kept_gens.push_back(int(i));
        q.gen_names.push_back(p.gen_names[i]);
        q.gen_degrees.push_back(p.gen_degrees[i]);
    }
    for (size_t i = 0; i < p.gen_names.size(); ++i) {
        if (killed[i])
            continue;
        MixedTensor t;
        for (const auto& [a, x] : p.gen_coaction[i].support) {
            if (in_ideal(x))
                continue;
            GenMono xs(q.gen_names.size(), 0);
            for (size_t k = 0; k < x.size(); ++k)
                if (x[k] > 0)
                    xs[size_t(new_index[k])] = x[k];
            t.toggle(a, std::move(xs));
        }
        q.gen_coaction.push_back(std::move(t));
    }
    q.validate();
    out.quotient = std::move(q);
    return out;
}

Comodule comodule_from_presentation(const ComodAlgebraPresentation& p, int max_degree)
{
    Comodule m;
    m.base = Subquotient::subalgebra(Profile::full());
    m.space = GradedSpace(max_degree);
    std::vector<std::vector<GenMono>> bases(size_t(max_degree) + 1);
    for (int d = 0; d <= max_degree; ++d) {
        bases[size_t(d)] = p.basis(d);
        std::vector<std::string> labels;
        for (const GenMono& g : bases[size_t(d)])
            labels.push_back(p.mono_label(g));
        if (!labels.empty())
            m.space.set_basis(d, std::move(labels));
    }
    for (int d = 0; d <= max_degree; ++d)
        for (size_t i = 0; i < bases[size_t(d)].size(); ++i) {
            auto& entry = m.mu[{d, int(i)}];
            for (const auto& [a, x] : p.coaction(bases[size_t(d)][i]).support) {
                int j = p.degree(x);
                const auto& row = bases[size_t(j)];
                int k = int(std::lower_bound(row.begin(), row.end(), x) - row.begin());
                entry.emplace_back(a, j, k);
            }
            std::sort(entry.begin(), entry.end());
        }
    return m;
}

Comodule trivial_comodule(int max_degree)
{
    return trivial_comodule_over(Subquotient::subalgebra(Profile::full()), max_degree);
}

Comodule trivial_comodule_over(const Subquotient& base, int max_degree)
{
    Comodule m;
    m.base = base;
    m.space = GradedSpace(max_degree);
    m.space.set_basis(0, {"1"});
    m.mu[{0, 0}] = {{Expo{}, 0, 0}};
    return m;
}

Comodule comodule_of_span(const Profile& p, int max_degree)
{
    Comodule m;
    m.base = Subquotient::subalgebra(Profile::full());
    m.space = GradedSpace(max_degree);
    Subquotient span = Subquotient::subalgebra(p);
    std::vector<std::vector<Expo>> bases(size_t(max_degree) + 1);
    for (int d = 0; d <= max_degree; ++d) {
        bases[size_t(d)] = span.basis(d);
        std::vector<std::string> labels;
        for (const Expo& e : bases[size_t(d)])
            labels.push_back(mono_str(e));
        if (!labels.empty())
            m.space.set_basis(d, std::move(labels));
    }
    // The coproduct read as right-comodule data: the element part is the
    // left tensor factor, the coefficient the right one.
    for (int d = 0; d <= max_degree; ++d)
        for (size_t i = 0; i < bases[size_t(d)].size(); ++i) {
            auto& entry = m.mu[{d, int(i)}];
            for (const auto& [a, b] : coproduct(bases[size_t(d)][i]).support) {
                int j = mono_degree(a);
                const auto& row = bases[size_t(j)];
                auto it = std::lower_bound(row.begin(), row.end(), a);
                if (it == row.end() || *it != a)
                    throw std::logic_error("comodule_of_span: span is not a subcomodule");
                entry.emplace_back(b, j, int(it - row.begin()));
            }
            std::sort(entry.begin(), entry.end());
        }
    return m;
}

Comodule comodule_of_subquotient(const Subquotient& q, int max_degree)
{
    Comodule m;
    m.base = q;
    m.space = GradedSpace(max_degree);
    std::vector<std::vector<Expo>> bases(size_t(max_degree) + 1);
    for (int d = 0; d <= max_degree; ++d) {
        bases[size_t(d)] = q.basis(d);
        std::vector<std::string> labels;
        for (const Expo& e : bases[size_t(d)])
            labels.push_back(mono_str(e));
        if (!labels.empty())
            m.space.set_basis(d, std::move(labels));
    }
    for (int d = 0; d <= max_degree; ++d)
        for (size_t i = 0; i < bases[size_t(d)].size(); ++i) {
            auto& entry = m.mu[{d, int(i)}];
            for (const auto& [a, b] : q.coproduct(bases[size_t(d)][i]).support) {
                int j = mono_degree(a);
                const auto& row = bases[size_t(j)];
                auto it = std::lower_bound(row.begin(), row.end(), a);
                entry.emplace_back(b, j, int(it - row.begin()));
            }
            std::sort(entry.begin(), entry.end());
        }
    return m;
}

AxiomReport check_comodule_axioms(const Comodule& m)
{
    AxiomReport report;
    for (int d = 0; d <= m.max_degree(); ++d)
        for (int i = 0; i < m.space.dim(d); ++i) {
            auto it = m.mu.find({d, i});
            std::vector<std::tuple<Expo, int, int>> terms;
            if (it != m.mu.end())
                terms = it->second;

            std::vector<std::tuple<Expo, int, int>> unit_terms;
            for (const auto& [a, j, k] : terms)
                if (a.empty())
                    unit_terms.emplace_back(a, j, k);
            if (unit_terms.size() != 1 || std::get<1>(unit_terms[0]) != d ||
                std::get<2>(unit_terms[0]) != i) {
                report.ok = false;
                report.failing_degree = d;
                report.failing_element = m.space.labels(d)[size_t(i)];
                report.reason = "counit";
                return report;
            }

            // Same right-comodule composition order as the presentation
            // check: inner coefficient lands left of the outer one.
            std::set<std::tuple<Expo, Expo, int, int>> lhs, rhs;
            for (const auto& [a, j, k] : terms) {
                for (const auto& [a1, a2] : m.base.coproduct(a).support) {
                    auto key = std::make_tuple(a1, a2, j, k);
                    auto pos = lhs.find(key);
                    if (pos != lhs.end())
                        lhs.erase(pos);
                    else
                        lhs.insert(std::move(key));
                }
                auto inner = m.mu.find({j, k});
                if (inner == m.mu.end())
                    continue;
                for (const auto& [b, j2, k2] : inner->second) {
                    auto key = std::make_tuple(b, a, j2, k2);
                    auto pos = rhs.find(key);
                    if (pos != rhs.end())
                        rhs.erase(pos);
                    else
                        rhs.insert(std::move(key));
                }
            }
            if (lhs != rhs) {
                report.ok = false;
                report.failing_degree = d;
                report.failing_element = m.space.labels(d)[size_t(i)];
                report.reason = "coassociativity";
                return report;
            }
        }
    return report;
}

Comodule double_comodule(const Comodule& m, int e)
{
    if (e < 0)
        throw std::invalid_argument("double_comodule: need e >= 0");
    Comodule out;
    // Base becomes its subalgebra of 2^e-th powers.
    out.base = m.base;
    Profile& np = out.base.num;
    for (int& c : np.caps)
        if (c != Profile::infinity)
            c += e;
    if (np.tail != Profile::infinity)
        np.tail += e;

    out.space = GradedSpace(m.max_degree() << e);
    for (int d = 0; d <= m.max_degree(); ++d) {
        if (m.space.dim(d) == 0)
            continue;
        std::vector<std::string> labels;
        for (const std::string& s : m.space.labels(d))
            labels.push_back(s + (e ? "(" + std::to_string(e) + ")" : ""));
        out.space.set_basis(d << e, std::move(labels));
    }
    for (const auto& [key, terms] : m.mu) {
        auto& entry = out.mu[{key.first << e, key.second}];
        for (const auto& [a, j, k] : terms)
            entry.emplace_back(mono_pow2(a, e), j << e, k);
        std::sort(entry.begin(), entry.end());
    }
    return out;
}

CotensorResult cotensor(const Subquotient& m, const Subquotient& c, const Comodule& n,
                        int max_degree)
{
    for (int i = 1; i <= max_gen_index(max_degree) + 1; ++i)
        if (c.num.at(i) != 0)
            throw std::invalid_argument("cotensor: C must be a quotient of the dual Steenrod algebra");

    CotensorResult out;
    out.space = GradedSpace(max_degree);
    std::vector<std::vector<Expo>> mb(size_t(max_degree) + 1), cb(size_t(max_degree) + 1);
    for (int d = 0; d <= max_degree; ++d) {
        mb[size_t(d)] = m.basis(d);
        cb[size_t(d)] = c.basis(d);
    }

    for (int d = 0; d <= max_degree; ++d) {
        // Columns: pairs (m-basis at degree i, n-basis at degree d-i).
        std::map<std::tuple<int, int, int>, int> col_idx;
        int cols = 0;
        for (int i = 0; i <= d; ++i)
            for (size_t a = 0; a < mb[size_t(i)].size(); ++a)
                for (int k = 0; k < n.space.dim(d - i); ++k)
                    col_idx[{i, int(a), k}] = cols++;
        if (cols == 0)
            continue;
        // Rows: triples (m at i, c at k, n at j), k > 0; the k = 0 layers of
        // the two coactions cancel by the counit.
        std::map<std::tuple<int, int, int, int, int>, int> row_idx;
        int rows = 0;
        for (int i = 0; i <= d; ++i)
            for (int k = 1; i + k <= d; ++k)
                for (size_t a = 0; a < mb[size_t(i)].size(); ++a)
                    for (size_t b = 0; b < cb[size_t(k)].size(); ++b)
                        for (int x = 0; x < n.space.dim(d - i - k); ++x)
                            row_idx[{i, k, int(a), int(b), x}] = rows++;

        F2Matrix mat(rows, cols);
        auto toggle_row = [&](int i, int k, int a, int b, int x, int col) {
            int r = row_idx.at({i, k, a, b, x});
            mat.set(r, col, !mat.get(r, col));
        };
        for (const auto& [key, col] : col_idx) {
            auto [mi, ma, nk] = key;
            const Expo& mono = mb[size_t(mi)][size_t(ma)];
            int nj = d - mi;
            // rho(m) (x) n: left coaction terms of the subquotient monomial.
            for (const auto& [left, right] : coproduct(mono).support) {
                if (!m.contains(left) || !c.contains(right))
                    continue;
                int k = mono_degree(right);
                if (k == 0)
                    continue;
                int i = mono_degree(left);
                const auto& lrow = mb[size_t(i)];
                const auto& crow = cb[size_t(k)];
                int a = int(std::lower_bound(lrow.begin(), lrow.end(), left) - lrow.begin());
                int b = int(std::lower_bound(crow.begin(), crow.end(), right) - crow.begin());
                toggle_row(i, k, a, b, nk, col);
            }
            // m (x) lambda(n): project the left factors of n's coaction to C.
            auto it = n.mu.find({nj, nk});
            if (it != n.mu.end())
                for (const auto& [a, j2, k2] : it->second) {
                    if (!c.contains(a))
                        continue;
                    int k = mono_degree(a);
                    if (k == 0)
                        continue;
                    const auto& crow = cb[size_t(k)];
                    int b = int(std::lower_bound(crow.begin(), crow.end(), a) - crow.begin());
                    toggle_row(mi, k, ma, b, k2, col);
                }
        }
        std::vector<F2Vec> ker = mat.kernel_basis();
        if (!ker.empty()) {
            std::vector<std::string> labels;
            for (size_t i = 0; i < ker.size(); ++i)
                labels.push_back("c" + std::to_string(d) + "_" + std::to_string(i));
            out.space.set_basis(d, std::move(labels));
            out.vectors[d] = std::move(ker);
        }
    }
    return out;
}

SplittingReport splitting_check(int s, int max_degree)
{
    SplittingReport report;
    ComodAlgebraPresentation p = build_ys(s);
    IdealQuotient iq = ideal_and_quotient(p, ys_ideal_generators(s), max_degree);
    if (!iq.subcomodule) {
        report.ok = false;
        report.reason = "J_s is not a subcomodule ideal";
        return report;
    }
    // The quotient must carry the trivial coaction; the splitting statement
    // consumes exactly that.
    for (size_t i = 0; i < iq.quotient.gen_coaction.size(); ++i) {
        GenMono self(iq.quotient.gen_names.size(), 0);
        self[i] = 1;
        if (!(iq.quotient.gen_coaction[i] == MixedTensor::term({}, self))) {
            report.ok = false;
            report.reason = "quotient coaction is not trivial";
            return report;
        }
    }

    Subquotient c = Subquotient::quotient(Profile::pn(s, 2));
    CotensorResult base = cotensor_trivial(Subquotient::subalgebra(Profile::full()), c, max_degree);
    GradedSpace pdims = subalgebra_basis(Profile::pn(s, 2), max_degree);

    std::vector<std::vector<GenMono>> hb(size_t(max_degree) + 1), qb(size_t(max_degree) + 1);
    for (int d = 0; d <= max_degree; ++d) {
        hb[size_t(d)] = p.basis(d);
        qb[size_t(d)] = iq.quotient.basis(d);
    }

    for (int d = 0; d <= max_degree; ++d) {
        report.h_dims[d] = int(hb[size_t(d)].size());
        // The cotensor subspace of A (x) Q for a trivial Q factors as
        // (A [] _C F2) (x) Q, so its dims are a convolution.
        int wdim = 0, conv = 0;
        for (int i = 0; i <= d; ++i) {
            wdim += base.space.dim(i) * int(qb[size_t(d - i)].size());
            conv += pdims.dim(i) * int(qb[size_t(d - i)].size());
        }
        report.cotensor_dims[d] = wdim;
        if (wdim != conv || int(hb[size_t(d)].size()) != conv) {
            report.ok = false;
            report.failing_degree = d;
            report.reason = "dimension mismatch at degree " + std::to_string(d);
            return report;
        }
    }

    // The composite H -> A (x) H -> A (x) Q: rank check plus cotensor
    // membership, degree-wise.
    auto q_index = [&](const GenMono& g, int d) {
        const auto& row = qb[size_t(d)];
        auto it = std::lower_bound(row.begin(), row.end(), g);
        return it == row.end() || *it != g ? -1 : int(it - row.begin());
    };
    auto project_q = [&](const GenMono& x) -> std::optional<GenMono> {
        // Drop monomials hitting J_s, re-index survivors.
        GenMono out(iq.quotient.gen_names.size(), 0);
        for (size_t k = 0; k < x.size(); ++k) {
            if (x[k] == 0)
                continue;
            bool kept = false;
            for (size_t t = 0; t < iq.kept_gens.size(); ++t)
                if (iq.kept_gens[t] == int(k)) {
                    out[t] = x[k];
                    kept = true;
                    break;
                }
            if (!kept)
                return std::nullopt;
        }
        return out;
    };

    for (int d = 0; d <= max_degree; ++d) {
        if (hb[size_t(d)].empty())
            continue;
        // Column space: (A_i (x) Q_j) pairs.
        std::map<std::tuple<int, int, int>, int> tix;
        int rows = 0;
        for (int i = 0; i <= d; ++i) {
            const auto& amon = monomials_of_degree(i);
            for (size_t a = 0; a < amon.size(); ++a)
                for (size_t qk = 0; qk < qb[size_t(d - i)].size(); ++qk)
                    tix[{i, int(a), int(qk)}] = rows++;
        }
        F2Matrix phi(rows, int(hb[size_t(d)].size()));
        for (size_t colv = 0; colv < hb[size_t(d)].size(); ++colv) {
            MixedTensor image;
            for (const auto& [a, x] : p.coaction(hb[size_t(d)][colv]).support) {
                auto px = project_q(x);
                if (px)
                    image.toggle(a, *px);
            }
            for (const auto& [a, x] : image.support) {
                int i = mono_degree(a);
                int j = d - i;
                GenMono xs = x;
                strip(xs);
                GenMono padded = xs;
                int qk = q_index(padded, j);
                if (qk < 0) {
                    report.ok = false;
                    report.failing_degree = d;
                    report.reason = "projection left the quotient basis";
                    return report;
                }
                phi.set(tix.at({i, monomial_index(a), qk}), int(colv), true);
            }

            // Cotensor membership: (rho_A (x) id - id (x) lambda) of the
            // image must vanish; lambda is trivial on Q.
            std::set<std::tuple<Expo, Expo, GenMono>> constraint;
            for (const auto& [a, x] : image.support)
                for (const auto& [a1, a2] : coproduct(a).support) {
                    if (!c.contains(a2) || a2.empty())
                        continue;
                    auto key = std::make_tuple(a1, a2, x);
                    auto it = constraint.find(key);
                    if (it != constraint.end())
                        constraint.erase(it);
                    else
                        constraint.insert(std::move(key));
                }
            if (!constraint.empty()) {
                report.ok = false;
                report.failing_degree = d;
                report.reason = "image not in the cotensor subspace";
                return report;
            }
        }
        if (phi.rank() != int(hb[size_t(d)].size())) {
            report.ok = false;
            report.failing_degree = d;
            report.reason = "composite not injective at degree " + std::to_string(d);
            return report;
        }
    }
    return report;
}

} // namespace steenrod
