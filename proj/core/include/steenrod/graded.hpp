#pragma once

#include <map>
#include <string>
#include <vector>

#include "steenrod/f2.hpp"

namespace steenrod {

/// Inclusive degree range [0, max_degree] with a guard band: conclusions
/// about truncations of infinite objects are only asserted for degrees
/// <= max_degree - guard.
struct DegreeWindow {
    int max_degree = 0;
    int guard = 0;

    DegreeWindow() = default;
    DegreeWindow(int max_deg, int g);
    int asserted_max() const { return max_degree - guard; }
};

/// Graded F2 vector space with an ordered, labelled basis per degree,
/// populated on [0, max_degree]. Immutable once built.
class GradedSpace {
public:
    GradedSpace() = default;
    explicit GradedSpace(int max_degree) : max_degree_(max_degree) {}

    int max_degree() const { return max_degree_; }
    int dim(int degree) const;
    int total_dim() const;
    const std::vector<std::string>& labels(int degree) const;
    std::map<int, int> dims() const;

    void add(int degree, std::string label);
    void set_basis(int degree, std::vector<std::string> labels);

    bool operator==(const GradedSpace& rhs) const
    {
        return max_degree_ == rhs.max_degree_ && basis_ == rhs.basis_;
    }

private:
    int max_degree_ = 0;
    std::map<int, std::vector<std::string>> basis_;
};

/// Degree-wise F2-linear map f : V -> W of fixed degree shift; the matrix
/// at degree d has shape dim W(d+shift) x dim V(d) and columns are images
/// of the source basis.
struct GradedMap {
    GradedSpace source;
    GradedSpace target;
    int shift = 0;
    std::map<int, F2Matrix> matrices;

    const F2Matrix& at(int degree) const;
    F2Matrix& ensure(int degree);
    /// Shape check against source/target dims; throws on mismatch.
    void validate() const;
};

/// Degree-wise dual: same dimension sequence, labels marked with '*'.
GradedSpace dualize(const GradedSpace& v, const DegreeWindow& window);

/// Per-degree kernel of f, with synthesized labels; degrees range over the
/// populated window of the source.
GradedSpace kernel(const GradedMap& f);
/// Basis vectors of ker f per source degree.
std::map<int, std::vector<F2Vec>> kernel_vectors(const GradedMap& f);
/// Per-degree cokernel of f (target degree indexing).
GradedSpace cokernel(const GradedMap& f);

std::string graded_space_to_json(const GradedSpace& v);
GradedSpace graded_space_from_json(const std::string& text);
std::string graded_map_to_json(const GradedMap& f);
GradedMap graded_map_from_json(const std::string& text);

} // namespace steenrod
