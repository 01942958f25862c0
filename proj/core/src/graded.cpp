#include "steenrod/graded.hpp"

#include <stdexcept>

#include "json.hpp"

namespace steenrod {

DegreeWindow::DegreeWindow(int max_deg, int g) : max_degree(max_deg), guard(g)
{
    if (max_deg < 0 || g < 0 || g > max_deg)
        throw std::invalid_argument("DegreeWindow: need 0 <= guard <= max_degree");
}

int GradedSpace::dim(int degree) const
{
    auto it = basis_.find(degree);
    return it == basis_.end() ? 0 : int(it->second.size());
}

int GradedSpace::total_dim() const
{
    int n = 0;
    for (const auto& [d, v] : basis_)
        n += int(v.size());
    return n;
}

const std::vector<std::string>& GradedSpace::labels(int degree) const
{
    static const std::vector<std::string> empty;
    auto it = basis_.find(degree);
    return it == basis_.end() ? empty : it->second;
}

std::map<int, int> GradedSpace::dims() const
{
    std::map<int, int> out;
    for (const auto& [d, v] : basis_)
        if (!v.empty())
            out[d] = int(v.size());
    return out;
}

void GradedSpace::add(int degree, std::string label)
{
    if (degree < 0 || degree > max_degree_)
        throw std::out_of_range("GradedSpace::add: degree outside window");
    basis_[degree].push_back(std::move(label));
}

void GradedSpace::set_basis(int degree, std::vector<std::string> labels)
{
    if (degree < 0 || degree > max_degree_)
        throw std::out_of_range("GradedSpace::set_basis: degree outside window");
    basis_[degree] = std::move(labels);
}

const F2Matrix& GradedMap::at(int degree) const
{
    static const F2Matrix empty;
    auto it = matrices.find(degree);
    return it == matrices.end() ? empty : it->second;
}

F2Matrix& GradedMap::ensure(int degree)
{
    auto it = matrices.find(degree);
    if (it == matrices.end())
        it = matrices.emplace(degree, F2Matrix(target.dim(degree + shift), source.dim(degree))).first;
    return it->second;
}

void GradedMap::validate() const
{
    for (const auto& [d, m] : matrices) {
        if (m.rows() != target.dim(d + shift) || m.cols() != source.dim(d))
            throw std::invalid_argument("GradedMap: matrix shape mismatch at degree " +
                                        std::to_string(d));
    }
}

GradedSpace dualize(const GradedSpace& v, const DegreeWindow& window)
{
    if (window.max_degree > v.max_degree())
        throw std::invalid_argument("dualize: window exceeds populated range");
    GradedSpace out(window.max_degree);
    for (int d = 0; d <= window.max_degree; ++d) {
        std::vector<std::string> duals;
        for (const std::string& s : v.labels(d))
            duals.push_back(s + "*");
        if (!duals.empty())
            out.set_basis(d, std::move(duals));
    }
    return out;
}

std::map<int, std::vector<F2Vec>> kernel_vectors(const GradedMap& f)
{
    f.validate();
    std::map<int, std::vector<F2Vec>> out;
    for (int d = 0; d <= f.source.max_degree(); ++d) {
        int n = f.source.dim(d);
        if (n == 0)
            continue;
        auto it = f.matrices.find(d);
        if (it == f.matrices.end()) {
            // Unpopulated matrix means the zero map in this degree.
            std::vector<F2Vec> all;
            for (int i = 0; i < n; ++i) {
                F2Vec v(n);
                v.set(i, true);
                all.push_back(std::move(v));
            }
            out[d] = std::move(all);
            continue;
        }
        out[d] = it->second.kernel_basis();
    }
    return out;
}

GradedSpace kernel(const GradedMap& f)
{
    GradedSpace out(f.source.max_degree());
    for (auto& [d, vecs] : kernel_vectors(f)) {
        std::vector<std::string> labels;
        for (size_t i = 0; i < vecs.size(); ++i)
            labels.push_back("ker" + std::to_string(d) + "_" + std::to_string(i));
        if (!labels.empty())
            out.set_basis(d, std::move(labels));
    }
    return out;
}

GradedSpace cokernel(const GradedMap& f)
{
    f.validate();
    GradedSpace out(f.target.max_degree());
    for (int e = 0; e <= f.target.max_degree(); ++e) {
        int m = f.target.dim(e);
        if (m == 0)
            continue;
        int d = e - f.shift;
        F2Subspace image(m);
        auto it = f.matrices.find(d);
        if (it != f.matrices.end())
            for (int c = 0; c < it->second.cols(); ++c)
                image.insert(it->second.col(c));
        std::vector<std::string> labels;
        int k = m - image.rank();
        for (int i = 0; i < k; ++i)
            labels.push_back("coker" + std::to_string(e) + "_" + std::to_string(i));
        if (!labels.empty())
            out.set_basis(e, std::move(labels));
    }
    return out;
}

std::string graded_space_to_json(const GradedSpace& v)
{
    nlohmann::json j;
    j["dims"] = nlohmann::json::object();
    j["labels"] = nlohmann::json::object();
    j["max_degree"] = v.max_degree();
    for (auto& [d, n] : v.dims()) {
        j["dims"][std::to_string(d)] = n;
        j["labels"][std::to_string(d)] = v.labels(d);
    }
    return j.dump();
}

GradedSpace graded_space_from_json(const std::string& text)
{
    nlohmann::json j = nlohmann::json::parse(text);
    GradedSpace out(j.at("max_degree").get<int>());
    for (auto& [key, val] : j.at("labels").items())
        out.set_basis(std::stoi(key), val.get<std::vector<std::string>>());
    for (auto& [key, val] : j.at("dims").items())
        if (out.dim(std::stoi(key)) != val.get<int>())
            throw std::invalid_argument("graded_space_from_json: dims/labels disagree");
    return out;
}

std::string graded_map_to_json(const GradedMap& f)
{
    nlohmann::json j;
    j["source"] = nlohmann::json::parse(graded_space_to_json(f.source));
    j["target"] = nlohmann::json::parse(graded_space_to_json(f.target));
    j["shift"] = f.shift;
    j["matrices"] = nlohmann::json::object();
    for (auto& [d, m] : f.matrices) {
        nlohmann::json rows = nlohmann::json::array();
        for (int r = 0; r < m.rows(); ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (int c = 0; c < m.cols(); ++c)
                row.push_back(m.get(r, c) ? 1 : 0);
            rows.push_back(std::move(row));
        }
        j["matrices"][std::to_string(d)] = std::move(rows);
    }
    return j.dump();
}

GradedMap graded_map_from_json(const std::string& text)
{
    nlohmann::json j = nlohmann::json::parse(text);
    GradedMap f;
    f.source = graded_space_from_json(j.at("source").dump());
    f.target = graded_space_from_json(j.at("target").dump());
    f.shift = j.at("shift").get<int>();
    for (auto& [key, rows] : j.at("matrices").items()) {
        int d = std::stoi(key);
        F2Matrix m(f.target.dim(d + f.shift), f.source.dim(d));
        int r = 0;
        for (auto& row : rows) {
            int c = 0;
            for (auto& e : row) {
                if (e.get<int>())
                    m.set(r, c, true);
                ++c;
            }
            ++r;
        }
        f.matrices.emplace(d, std::move(m));
    }
    f.validate();
    return f;
}

} // namespace steenrod
