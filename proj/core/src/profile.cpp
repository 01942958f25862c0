#include "steenrod/profile.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

namespace steenrod {

int Profile::at(int i) const
{
    if (i < 1)
        throw std::invalid_argument("Profile::at: generator indices start at 1");
    if (i <= int(caps.size()))
        return caps[i - 1];
    return tail;
}

bool Profile::in_span(const Expo& e) const
{
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        int h = at(int(i) + 1);
        if (h == infinity)
            return false;
        if (e[i] & ((1 << h) - 1))
            return false;
    }
    return true;
}

Profile Profile::pn(int n, int s)
{
    Profile p;
    p.caps.assign(size_t(n), s);
    p.tail = infinity;
    return p;
}

bool Profile::operator==(const Profile& rhs) const
{
    int k = int(std::max(caps.size(), rhs.caps.size())) + 1;
    for (int i = 1; i <= k; ++i)
        if (at(i) != rhs.at(i))
            return false;
    return true;
}

std::string Profile::str() const
{
    std::string s = "[";
    for (size_t i = 0; i < caps.size(); ++i) {
        if (i)
            s += ',';
        s += caps[i] == infinity ? "inf" : std::to_string(caps[i]);
    }
    s += "; tail=";
    s += tail == infinity ? "inf" : std::to_string(tail);
    return s + "]";
}

std::string profile_to_json(const Profile& p)
{
    nlohmann::json j;
    j["caps"] = nlohmann::json::array();
    for (int c : p.caps)
        if (c == Profile::infinity)
            j["caps"].push_back("inf");
        else
            j["caps"].push_back(c);
    if (p.tail == Profile::infinity)
        j["tail"] = "inf";
    else
        j["tail"] = p.tail;
    return j.dump();
}

Profile profile_from_json(const std::string& text)
{
    nlohmann::json j = nlohmann::json::parse(text);
    Profile p;
    for (auto& c : j.at("caps")) {
        if (c.is_string()) {
            if (c.get<std::string>() != "inf")
                throw std::invalid_argument("profile_from_json: bad cap");
            p.caps.push_back(Profile::infinity);
        }
        else
            p.caps.push_back(c.get<int>());
    }
    auto& t = j.at("tail");
    if (t.is_string()) {
        if (t.get<std::string>() != "inf")
            throw std::invalid_argument("profile_from_json: bad tail");
        p.tail = Profile::infinity;
    }
    else
        p.tail = t.get<int>();
    return p;
}

bool Subquotient::contains(const Expo& e) const
{
    if (!num.in_span(e))
        return false;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        int hd = den.at(int(i) + 1);
        if (hd != Profile::infinity && e[i] >= (1 << hd))
            return false;
    }
    return true;
}

std::optional<Expo> Subquotient::project(const Expo& e) const
{
    if (!num.in_span(e))
        throw std::invalid_argument("Subquotient::project: monomial outside numerator span");
    return contains(e) ? std::optional<Expo>(e) : std::nullopt;
}

std::vector<Expo> Subquotient::basis(int degree) const
{
    std::vector<Expo> out;
    for (const Expo& e : monomials_of_degree(degree))
        if (contains(e))
            out.push_back(e);
    return out;
}

GradedSpace Subquotient::basis_space(int max_degree) const
{
    GradedSpace v(max_degree);
    for (int d = 0; d <= max_degree; ++d) {
        std::vector<std::string> labels;
        for (const Expo& e : basis(d))
            labels.push_back(mono_str(e));
        if (!labels.empty())
            v.set_basis(d, std::move(labels));
    }
    return v;
}

bool Subquotient::finite() const
{
    int k = int(std::max(num.caps.size(), den.caps.size()));
    for (int i = 1; i <= k; ++i)
        if (num.at(i) != Profile::infinity && den.at(i) == Profile::infinity)
            return false;
    if (num.tail == Profile::infinity)
        return true;
    return den.tail != Profile::infinity && den.tail <= num.tail;
}

int Subquotient::top_degree() const
{
    if (!finite())
        throw std::logic_error("Subquotient::top_degree: infinite dimensional");
    int top = 0;
    int k = int(std::max(num.caps.size(), den.caps.size()));
    for (int i = 1; i <= k; ++i) {
        int hn = num.at(i), hd = den.at(i);
        if (hn == Profile::infinity || hd == Profile::infinity || hd <= hn)
            continue;
        int step = 1 << hn;
        int max_exp = ((1 << hd) - 1) / step * step;
        top += max_exp * zeta_degree(i);
    }
    return top;
}

long Subquotient::total_dim() const
{
    if (!finite())
        throw std::logic_error("Subquotient::total_dim: infinite dimensional");
    long n = 1;
    int k = int(std::max(num.caps.size(), den.caps.size()));
    for (int i = 1; i <= k; ++i) {
        int hn = num.at(i), hd = den.at(i);
        if (hn == Profile::infinity || hd == Profile::infinity)
            continue;
        n *= long(1) << std::max(hd - hn, 0);
    }
    return n;
}

TensorElement Subquotient::coproduct(const Expo& e) const
{
    TensorElement out;
    for (const auto& [a, b] : steenrod::coproduct(e).support)
        if (contains(a) && contains(b))
            out.toggle(a, b);
    return out;
}

std::optional<Expo> Subquotient::mul(const Expo& a, const Expo& b) const
{
    return project(mono_mul(a, b));
}

std::string Subquotient::str() const
{
    return "num=" + num.str() + " den=" + den.str();
}

Subquotient staircase_quotient(int n, int s, int t)
{
    if (n < 1 || s < 0 || t < 0)
        throw std::invalid_argument("staircase_quotient: need n >= 1, s >= 0, t >= 0");
    Subquotient q;
    q.num = Profile::pn(n, s);
    q.den.caps.assign(size_t(n), 0);
    for (int i = 1; i <= n; ++i)
        q.den.caps[size_t(i) - 1] = i <= t ? s + t - i + 1 : s;
    q.den.tail = 0;
    return q;
}

long staircase_expected_dim(int n, int s, int t)
{
    (void)s;
    long dim = 1;
    for (int i = 1; i <= std::min(n, t); ++i)
        dim *= long(1) << (t - i + 1);
    return dim;
}

GradedSpace subalgebra_basis(const Profile& p, int max_degree)
{
    return Subquotient::subalgebra(p).basis_space(max_degree);
}

bool is_subhopf(const Profile& p, int max_degree)
{
    Subquotient span = Subquotient::subalgebra(p);
    for (int d = 0; d <= max_degree; ++d)
        for (const Expo& e : span.basis(d))
            for (const auto& [a, b] : coproduct(e).support)
                if (!p.in_span(a) || !p.in_span(b))
                    return false;
    return true;
}

bool is_hopf_quotient(const Subquotient& q, int max_degree)
{
    for (int d = 0; d <= max_degree; ++d)
        for (const Expo& e : monomials_of_degree(d)) {
            if (!q.num.in_span(e) || q.contains(e))
                continue;
            // Monomial in the defining ideal: its projected coproduct must
            // vanish mod 2.
            if (!q.coproduct(e).is_zero())
                return false;
        }
    return true;
}

GradedSpace quotient_basis(const Subquotient& q, int max_degree)
{
    if (!is_subhopf(q.den, max_degree))
        throw std::invalid_argument(
            "quotient_basis: denominator profile is not a subHopf algebra in window");
    return q.basis_space(max_degree);
}

FreenessReport verify_freeness(const Profile& sub, const Profile& amb, int max_degree)
{
    FreenessReport report;
    int k = max_gen_index(max_degree) + 1;
    for (int i = 1; i <= k; ++i) {
        int hs = sub.at(i), ha = amb.at(i);
        bool refines = (hs == Profile::infinity) || (ha != Profile::infinity && hs >= ha);
        if (!refines) {
            report.ok = false;
            report.message = "sub profile does not refine ambient profile at generator " +
                             std::to_string(i);
            return report;
        }
    }

    Subquotient sub_span = Subquotient::subalgebra(sub);
    Subquotient amb_span = Subquotient::subalgebra(amb);
    Subquotient quot{amb, sub};   // amb // sub

    for (int d = 0; d <= max_degree; ++d) {
        long conv = 0;
        for (int i = 0; i <= d; ++i)
            conv += long(sub_span.basis(i).size()) * long(quot.basis(d - i).size());
        long amb_dim = long(amb_span.basis(d).size());
        report.quotient_dims[d] = int(quot.basis(d).size());
        if (conv != amb_dim) {
            report.ok = false;
            report.first_bad_degree = d;
            report.message = "convolution mismatch at degree " + std::to_string(d) + ": " +
                             std::to_string(conv) + " vs " + std::to_string(amb_dim);
            return report;
        }
        // Explicit free basis: each ambient monomial factors uniquely as
        // (sub monomial) * (quotient section monomial).
        std::map<Expo, int> factorizations;
        for (int i = 0; i <= d; ++i)
            for (const Expo& b : sub_span.basis(i))
                for (const Expo& qm : quot.basis(d - i))
                    ++factorizations[mono_mul(b, qm)];
        for (const Expo& e : amb_span.basis(d)) {
            auto it = factorizations.find(e);
            if (it == factorizations.end() || it->second != 1) {
                report.ok = false;
                report.first_bad_degree = d;
                report.message = "free basis failure at " + mono_str(e);
                return report;
            }
        }
    }
    return report;
}

CotensorResult cotensor_trivial(const Subquotient& m, const Subquotient& c, int max_degree)
{
    int k = max_gen_index(max_degree) + 1;
    for (int i = 1; i <= k; ++i) {
        if (m.num.at(i) != c.num.at(i))
            throw std::invalid_argument("cotensor_trivial: numerator mismatch");
        int dm = m.den.at(i), dc = c.den.at(i);
        bool coarser = (dc != Profile::infinity) &&
                       (dm == Profile::infinity || dc <= dm);
        bool both_inf = (dc == Profile::infinity && dm == Profile::infinity);
        if (!coarser && !both_inf)
            throw std::invalid_argument("cotensor_trivial: C is not a quotient of M");
    }

    CotensorResult out;
    out.space = GradedSpace(max_degree);
    for (int d = 0; d <= max_degree; ++d) {
        std::vector<Expo> mb = m.basis(d);
        if (mb.empty())
            continue;
        std::vector<std::vector<Expo>> mb_by(size_t(d) + 1), cb_by(size_t(d) + 1);
        for (int i = 0; i <= d; ++i) {
            mb_by[size_t(i)] = m.basis(i);
            cb_by[size_t(i)] = c.basis(i);
        }
        // Rows: (m-basis at degree i) x (c-basis at degree d-i) for i < d;
        // the x (x) 1 component cancels in the reduced coaction.
        std::map<std::tuple<int, int, int>, int> idx;
        int rows = 0;
        for (int i = 0; i < d; ++i)
            for (size_t a = 0; a < mb_by[size_t(i)].size(); ++a)
                for (size_t b = 0; b < cb_by[size_t(d - i)].size(); ++b)
                    idx[{i, int(a), int(b)}] = rows++;

        F2Matrix mat(rows, int(mb.size()));
        for (size_t col = 0; col < mb.size(); ++col) {
            for (const auto& [left, right] : coproduct(mb[col]).support) {
                if (!m.contains(left) || !c.num.in_span(right) || !c.contains(right))
                    continue;
                int i = mono_degree(left);
                if (i == d)
                    continue;
                const auto& mrow = mb_by[size_t(i)];
                const auto& crow = cb_by[size_t(d - i)];
                int a = int(std::lower_bound(mrow.begin(), mrow.end(), left) - mrow.begin());
                int b = int(std::lower_bound(crow.begin(), crow.end(), right) - crow.begin());
                int r = idx.at({i, a, b});
                mat.set(r, int(col), !mat.get(r, int(col)));
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

Profile parse_profile_preset(const std::string& name)
{
    if (name == "A")
        return Profile::full();
    if (name.rfind("A^(", 0) == 0 && name.back() == ')')
        return Profile::powers(std::stoi(name.substr(3, name.size() - 4)));
    if (name.rfind("P(", 0) == 0) {
        size_t close = name.find(')');
        if (close == std::string::npos)
            throw std::invalid_argument("parse_profile_preset: bad preset '" + name + "'");
        int n = std::stoi(name.substr(2, close - 2));
        int s = 0;
        if (close + 1 < name.size()) {
            if (name.substr(close + 1, 2) != "^(" || name.back() != ')')
                throw std::invalid_argument("parse_profile_preset: bad preset '" + name + "'");
            s = std::stoi(name.substr(close + 3, name.size() - close - 4));
        }
        return Profile::pn(n, s);
    }
    throw std::invalid_argument("parse_profile_preset: unknown preset '" + name + "'");
}

Subquotient parse_subquotient_preset(const std::string& name)
{
    if (name == "E")
        return Subquotient::quotient(Profile::powers(1));
    size_t sep = name.find("//");
    if (sep != std::string::npos) {
        Profile top = parse_profile_preset(name.substr(0, sep));
        Profile bottom = parse_profile_preset(name.substr(sep + 2));
        return Subquotient{top, bottom};
    }
    return Subquotient::subalgebra(parse_profile_preset(name));
}

} // namespace steenrod
