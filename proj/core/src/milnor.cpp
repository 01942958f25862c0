#include "steenrod/milnor.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace steenrod {

void canonicalize(Expo& e)
{
    while (!e.empty() && e.back() == 0)
        e.pop_back();
}

int zeta_degree(int i)
{
    return (1 << i) - 1;
}

int mono_degree(const Expo& e)
{
    int d = 0;
    for (size_t i = 0; i < e.size(); ++i)
        d += e[i] * zeta_degree(int(i) + 1);
    return d;
}

Expo mono_mul(const Expo& a, const Expo& b)
{
    Expo out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i)
        out[i] += b[i];
    canonicalize(out);
    return out;
}

Expo mono_pow2(const Expo& e, int k)
{
    Expo out = e;
    for (int& x : out)
        x <<= k;
    return out;
}

int max_gen_index(int degree)
{
    int i = 0;
    while (zeta_degree(i + 1) <= degree)
        ++i;
    return i;
}

namespace {

    void enumerate(int degree, int gen, Expo& acc, std::vector<Expo>& out)
    {
        if (degree == 0) {
            Expo e = acc;
            canonicalize(e);
            out.push_back(std::move(e));
            return;
        }
        if (gen == 0)
            return;
        int w = zeta_degree(gen);
        for (int c = degree / w; c >= 0; --c) {
            acc[gen - 1] = c;
            enumerate(degree - c * w, gen - 1, acc, out);
        }
        acc[gen - 1] = 0;
    }

    std::mutex g_basis_mutex;
    std::vector<std::vector<Expo>> g_basis_cache;

} // namespace

const std::vector<Expo>& monomials_of_degree(int degree)
{
    if (degree < 0)
        throw std::invalid_argument("monomials_of_degree: negative degree");
    std::scoped_lock lock(g_basis_mutex);
    if (int(g_basis_cache.size()) <= degree)
        g_basis_cache.resize(degree + 1);
    auto& slot = g_basis_cache[degree];
    if (slot.empty()) {
        int gmax = max_gen_index(degree);
        Expo acc(std::max(gmax, 1), 0);
        enumerate(degree, gmax, acc, slot);
        std::sort(slot.begin(), slot.end());
        if (slot.empty())
            slot.shrink_to_fit();
    }
    return slot;
}

int monomial_index(const Expo& e)
{
    const auto& basis = monomials_of_degree(mono_degree(e));
    auto it = std::lower_bound(basis.begin(), basis.end(), e);
    if (it == basis.end() || *it != e)
        throw std::logic_error("monomial_index: not a basis element");
    return int(it - basis.begin());
}

DualElement DualElement::term(Expo e)
{
    canonicalize(e);
    DualElement x;
    x.support.insert(std::move(e));
    return x;
}

DualElement DualElement::zeta(int i, int exponent)
{
    if (i == 0 || exponent == 0)
        return unit();
    Expo e(i, 0);
    e[i - 1] = exponent;
    return term(std::move(e));
}

void DualElement::toggle(Expo e)
{
    canonicalize(e);
    auto it = support.find(e);
    if (it != support.end())
        support.erase(it);
    else
        support.insert(std::move(e));
}

void DualElement::operator+=(const DualElement& rhs)
{
    for (const Expo& e : rhs.support)
        toggle(e);
}

int DualElement::degree() const
{
    if (support.empty())
        return -1;
    int d = mono_degree(*support.begin());
    for (const Expo& e : support)
        if (mono_degree(e) != d)
            throw std::logic_error("DualElement::degree: inhomogeneous element");
    return d;
}

DualElement dual_mul(const DualElement& a, const DualElement& b)
{
    DualElement out;
    for (const Expo& x : a.support)
        for (const Expo& y : b.support)
            out.toggle(mono_mul(x, y));
    return out;
}

DualElement dual_pow2(const DualElement& a, int k)
{
    // Squaring is additive in characteristic 2, so powers act termwise.
    DualElement out;
    for (const Expo& x : a.support)
        out.support.insert(mono_pow2(x, k));
    return out;
}

TensorElement TensorElement::term(Expo left, Expo right)
{
    canonicalize(left);
    canonicalize(right);
    TensorElement x;
    x.support.emplace(std::move(left), std::move(right));
    return x;
}

void TensorElement::toggle(Expo left, Expo right)
{
    canonicalize(left);
    canonicalize(right);
    auto key = std::make_pair(std::move(left), std::move(right));
    auto it = support.find(key);
    if (it != support.end())
        support.erase(it);
    else
        support.insert(std::move(key));
}

void TensorElement::operator+=(const TensorElement& rhs)
{
    for (const auto& t : rhs.support)
        toggle(t.first, t.second);
}

TensorElement tensor_mul(const TensorElement& a, const TensorElement& b)
{
    TensorElement out;
    for (const auto& x : a.support)
        for (const auto& y : b.support)
            out.toggle(mono_mul(x.first, y.first), mono_mul(x.second, y.second));
    return out;
}

TensorElement tensor_pow2(const TensorElement& a, int k)
{
    TensorElement out;
    for (const auto& x : a.support)
        out.support.emplace(mono_pow2(x.first, k), mono_pow2(x.second, k));
    return out;
}

namespace {

    std::mutex g_psi_mutex;
    std::vector<TensorElement> g_psi_zeta;   // g_psi_zeta[i] = psi(zeta_i)
    std::vector<DualElement> g_chi_zeta;     // g_chi_zeta[i] = chi(zeta_i)

    const TensorElement& psi_zeta(int n)
    {
        std::scoped_lock lock(g_psi_mutex);
        while (int(g_psi_zeta.size()) <= n) {
            int m = int(g_psi_zeta.size());
            TensorElement t;
            for (int i = 0; i <= m; ++i) {
                Expo left, right;
                if (m - i > 0) {
                    left.assign(m - i, 0);
                    left[m - i - 1] = 1 << i;   // zeta_{m-i}^{2^i}
                }
                if (i > 0) {
                    right.assign(i, 0);
                    right[i - 1] = 1;
                }
                t.toggle(std::move(left), std::move(right));
            }
            g_psi_zeta.push_back(std::move(t));
        }
        return g_psi_zeta[n];
    }

    const DualElement& chi_zeta(int n)
    {
        std::scoped_lock lock(g_psi_mutex);
        while (int(g_chi_zeta.size()) <= n) {
            int m = int(g_chi_zeta.size());
            if (m == 0) {
                g_chi_zeta.push_back(DualElement::unit());
                continue;
            }
            DualElement x;
            for (int i = 0; i < m; ++i) {
                DualElement factor = dual_pow2(DualElement::zeta(m - i), i);
                x += dual_mul(factor, g_chi_zeta[i]);
            }
            g_chi_zeta.push_back(std::move(x));
        }
        return g_chi_zeta[n];
    }

    /// psi(zeta_i^e) via the binary expansion of e; powers of a coproduct
    /// value square termwise in characteristic 2.
    TensorElement psi_zeta_pow(int i, int e)
    {
        TensorElement acc = TensorElement::unit();
        const TensorElement& base = psi_zeta(i);
        for (int k = 0; e >> k; ++k)
            if ((e >> k) & 1)
                acc = tensor_mul(acc, tensor_pow2(base, k));
        return acc;
    }

    DualElement chi_zeta_pow(int i, int e)
    {
        DualElement acc = DualElement::unit();
        const DualElement& base = chi_zeta(i);
        for (int k = 0; e >> k; ++k)
            if ((e >> k) & 1)
                acc = dual_mul(acc, dual_pow2(base, k));
        return acc;
    }

} // namespace

TensorElement coproduct(const Expo& mono)
{
    TensorElement acc = TensorElement::unit();
    for (size_t i = 0; i < mono.size(); ++i)
        if (mono[i] > 0)
            acc = tensor_mul(acc, psi_zeta_pow(int(i) + 1, mono[i]));
    return acc;
}

TensorElement coproduct(const DualElement& x)
{
    TensorElement out;
    for (const Expo& e : x.support)
        out += coproduct(e);
    return out;
}

DualElement antipode(const Expo& mono)
{
    DualElement acc = DualElement::unit();
    for (size_t i = 0; i < mono.size(); ++i)
        if (mono[i] > 0)
            acc = dual_mul(acc, chi_zeta_pow(int(i) + 1, mono[i]));
    return acc;
}

DualElement antipode(const DualElement& x)
{
    DualElement out;
    for (const Expo& e : x.support)
        out += antipode(e);
    return out;
}

SqElement SqElement::term(Expo r)
{
    canonicalize(r);
    SqElement x;
    x.support.insert(std::move(r));
    return x;
}

SqElement SqElement::sq(int r)
{
    return r == 0 ? unit() : term({r});
}

SqElement SqElement::primitive(int a, int b)
{
    if (b < 1)
        throw std::invalid_argument("SqElement::primitive: need b >= 1");
    Expo r(b, 0);
    r[b - 1] = 1 << a;
    return term(std::move(r));
}

void SqElement::toggle(Expo r)
{
    canonicalize(r);
    auto it = support.find(r);
    if (it != support.end())
        support.erase(it);
    else
        support.insert(std::move(r));
}

void SqElement::operator+=(const SqElement& rhs)
{
    for (const Expo& r : rhs.support)
        toggle(r);
}

int SqElement::degree() const
{
    if (support.empty())
        return -1;
    int d = mono_degree(*support.begin());
    for (const Expo& r : support)
        if (mono_degree(r) != d)
            throw std::logic_error("SqElement::degree: inhomogeneous element");
    return d;
}

namespace {

    using PairTable = std::map<std::pair<Expo, Expo>, std::vector<Expo>>;

    std::mutex g_sq_mutex;
    std::map<int, PairTable> g_sq_tables;

    /// For every monomial T of the given degree, records which tensors
    /// zeta^R (x) zeta^S occur in psi(zeta^T); the Milnor product Sq(R)Sq(S)
    /// is then the sum of the recorded T.
    const PairTable& sq_table(int degree)
    {
        std::scoped_lock lock(g_sq_mutex);
        auto it = g_sq_tables.find(degree);
        if (it != g_sq_tables.end())
            return it->second;
        PairTable table;
        for (const Expo& t : monomials_of_degree(degree)) {
            TensorElement psi = coproduct(t);
            for (const auto& term : psi.support)
                table[term].push_back(t);
        }
        return g_sq_tables.emplace(degree, std::move(table)).first->second;
    }

} // namespace

SqElement sq_mul_basis(const Expo& r, const Expo& s)
{
    int degree = mono_degree(r) + mono_degree(s);
    const PairTable& table = sq_table(degree);
    auto it = table.find(std::make_pair(r, s));
    SqElement out;
    if (it != table.end())
        for (const Expo& t : it->second)
            out.toggle(t);
    return out;
}

SqElement sq_mul(const SqElement& a, const SqElement& b, int max_degree)
{
    if (a.is_zero() || b.is_zero())
        return SqElement::zero();
    int total = a.degree() + b.degree();
    if (total > max_degree)
        throw std::out_of_range("sq_mul: product degree " + std::to_string(total) +
                                " exceeds window " + std::to_string(max_degree));
    SqElement out;
    for (const Expo& r : a.support)
        for (const Expo& s : b.support)
            out += sq_mul_basis(r, s);
    return out;
}

SqElement halve(const SqElement& a)
{
    SqElement out;
    for (const Expo& r : a.support) {
        bool even = true;
        for (int x : r)
            if (x & 1) {
                even = false;
                break;
            }
        if (!even)
            continue;
        Expo h = r;
        for (int& x : h)
            x >>= 1;
        out.toggle(std::move(h));
    }
    return out;
}

std::string mono_str(const Expo& e)
{
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!s.empty())
            s += ' ';
        s += 'z' + std::to_string(i + 1);
        if (e[i] > 1)
            s += '^' + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

namespace {

    std::vector<Expo> sorted_support(const std::set<Expo>& support, bool lex_desc)
    {
        std::vector<Expo> terms(support.begin(), support.end());
        std::sort(terms.begin(), terms.end(), [&](const Expo& a, const Expo& b) {
            int da = mono_degree(a), db = mono_degree(b);
            if (da != db)
                return da < db;
            return lex_desc ? b < a : a < b;
        });
        return terms;
    }

} // namespace

std::string dual_str(const DualElement& x)
{
    if (x.is_zero())
        return "0";
    std::string s;
    for (const Expo& e : sorted_support(x.support, false)) {
        if (!s.empty())
            s += " + ";
        s += mono_str(e);
    }
    return s;
}

std::string sq_tuple_str(const Expo& r)
{
    std::string s = "Sq(";
    if (r.empty())
        s += '0';
    for (size_t i = 0; i < r.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(r[i]);
    }
    return s + ")";
}

std::string sq_str(const SqElement& x)
{
    if (x.is_zero())
        return "0";
    std::string s;
    for (const Expo& r : sorted_support(x.support, true)) {
        if (!s.empty())
            s += " + ";
        s += sq_tuple_str(r);
    }
    return s;
}

std::string tensor_str(const TensorElement& x, TensorOrder order)
{
    if (x.is_zero())
        return "0";
    std::vector<std::pair<Expo, Expo>> terms(x.support.begin(), x.support.end());
    std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        int da = mono_degree(a.first), db = mono_degree(b.first);
        if (da != db)
            return order == TensorOrder::CoproductStyle ? db < da : da < db;
        return a < b;
    });
    std::string s;
    for (const auto& t : terms) {
        if (!s.empty())
            s += " + ";
        s += mono_str(t.first) + "|" + mono_str(t.second);
    }
    return s;
}

namespace {

    std::vector<std::string> split_terms(const std::string& text)
    {
        std::vector<std::string> out;
        std::string cur;
        for (size_t i = 0; i < text.size(); ++i) {
            if (text[i] == '+' ) {
                out.push_back(cur);
                cur.clear();
            }
            else
                cur += text[i];
        }
        out.push_back(cur);
        for (std::string& s : out) {
            size_t a = s.find_first_not_of(" \t");
            size_t b = s.find_last_not_of(" \t");
            s = (a == std::string::npos) ? "" : s.substr(a, b - a + 1);
        }
        return out;
    }

} // namespace

Expo parse_mono(const std::string& text)
{
    Expo e;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "1")
            continue;
        if (tok[0] != 'z')
            throw std::invalid_argument("parse_mono: bad token '" + tok + "'");
        size_t caret = tok.find('^');
        int idx = std::stoi(tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
        int exp = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
        if (idx < 1 || exp < 0)
            throw std::invalid_argument("parse_mono: bad generator '" + tok + "'");
        if (int(e.size()) < idx)
            e.resize(idx, 0);
        e[idx - 1] += exp;
    }
    canonicalize(e);
    return e;
}

DualElement parse_dual(const std::string& text)
{
    DualElement x;
    for (const std::string& term : split_terms(text)) {
        if (term.empty() || term == "0")
            continue;
        x.toggle(parse_mono(term));
    }
    return x;
}

SqElement parse_sq(const std::string& text)
{
    SqElement x;
    for (const std::string& term : split_terms(text)) {
        if (term.empty() || term == "0")
            continue;
        if (term.rfind("Sq(", 0) != 0 || term.back() != ')')
            throw std::invalid_argument("parse_sq: bad term '" + term + "'");
        Expo r;
        std::string body = term.substr(3, term.size() - 4);
        std::istringstream in(body);
        std::string num;
        while (std::getline(in, num, ','))
            r.push_back(std::stoi(num));
        if (r.size() == 1 && r[0] == 0)
            r.clear();
        x.toggle(std::move(r));
    }
    return x;
}

} // namespace steenrod
