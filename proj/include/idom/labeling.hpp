#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "idom/graph.hpp"

namespace idom {

/// A vertex labeling with values in {0, 1, 2}. Value semantics; comparison
/// is lexicographic on the value vector.
class Labeling {
public:
    Labeling() = default;
    explicit Labeling(int n, int fill = 0);
    Labeling(std::initializer_list<int> values);

    /// Parses the comma-separated digit form, e.g. "2,0,1".
    static Labeling parse(const std::string& text);

    int size() const { return static_cast<int>(values_.size()); }
    int operator[](int v) const;
    void set(int v, int value);
    int weight() const;
    std::string str() const;  // "2,0,1"

    bool operator==(const Labeling& other) const = default;
    auto operator<=>(const Labeling& other) const = default;

private:
    std::vector<std::uint8_t> values_;
};

int weight(const Labeling& f);

/// Italian condition: every vertex with f(v) = 0 sees total weight >= 2 on
/// its open neighborhood. The labeling size must match the graph.
bool is_idf(const Graph& g, const Labeling& f);

/// Roman condition: every vertex with f(v) = 0 has a neighbor with f = 2.
bool is_rdf(const Graph& g, const Labeling& f);

/// Classic domination: every vertex is in s or adjacent to a member of s.
bool is_dominating(const Graph& g, const std::vector<int>& s);

struct VPartition {
    std::vector<int> v0, v1, v2;
};

/// Splits vertex indices by label value.
VPartition v_partition(const Labeling& f);

enum class PendantRewrite { shift_to_support, split_ones };

/// Rewrites an Italian labeling so the pendant vertex u no longer carries 2,
/// touching only u and its support v. shift_to_support sets (u, v) = (0, 2);
/// split_ones sets u = 1 and raises v to at least 1. Both keep the labeling
/// valid; on minimum-weight inputs the weight is unchanged (a non-minimum
/// input can only lose weight, never gain).
Labeling normalize_pendant(const Graph& g, const Labeling& f, int u,
                           PendantRewrite rewrite = PendantRewrite::shift_to_support);

/// Rewrites an Italian labeling so the true twin u2 of u carries 0: swaps a
/// (0, 1) pair onto u, otherwise moves weight 2 onto u. Valid output always;
/// equal weight on minimum inputs.
Labeling normalize_true_twin(const Graph& g, const Labeling& f, int u, int u2);

/// Rewrites an Italian labeling so the false twin u2 of u does not carry 2,
/// by swapping the values at u and u2. The double-2 configuration has no
/// weight-preserving local rewrite and is rejected with std::invalid_argument.
Labeling normalize_false_twin(const Graph& g, const Labeling& f, int u, int u2);

}  // namespace idom
