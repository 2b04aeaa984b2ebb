#include "idom/labeling.hpp"

#include <bit>
#include <numeric>

namespace idom {

namespace {

void check_value(int value) {
    if (value < 0 || value > 2) throw std::invalid_argument("label values are 0, 1 or 2");
}

void check_sizes(const Graph& g, const Labeling& f) {
    if (f.size() != g.vertex_count())
        throw std::invalid_argument("labeling size does not match the graph");
}

// Total label weight over the open neighborhood of v.
int neighbor_weight(const Graph& g, const Labeling& f, int v) {
    int sum = 0;
    for (std::uint64_t m = g.neighbor_mask(v); m; m &= m - 1)
        sum += f[std::countr_zero(m)];
    return sum;
}

}  // namespace

Labeling::Labeling(int n, int fill) {
    if (n < 0) throw std::invalid_argument("labeling size must be non-negative");
    check_value(fill);
    values_.assign(n, static_cast<std::uint8_t>(fill));
}

Labeling::Labeling(std::initializer_list<int> values) {
    values_.reserve(values.size());
    for (int v : values) {
        check_value(v);
        values_.push_back(static_cast<std::uint8_t>(v));
    }
}

Labeling Labeling::parse(const std::string& text) {
    Labeling out;
    if (text.empty()) throw std::invalid_argument("labeling text is empty");
    std::size_t pos = 0;
    for (;;) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (tok.size() != 1 || tok[0] < '0' || tok[0] > '2')
            throw std::invalid_argument("labeling entries are the digits 0, 1, 2");
        out.values_.push_back(static_cast<std::uint8_t>(tok[0] - '0'));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

int Labeling::operator[](int v) const {
    if (v < 0 || v >= size()) throw std::invalid_argument("labeling index out of range");
    return values_[v];
}

void Labeling::set(int v, int value) {
    if (v < 0 || v >= size()) throw std::invalid_argument("labeling index out of range");
    check_value(value);
    values_[v] = static_cast<std::uint8_t>(value);
}

int Labeling::weight() const {
    return std::accumulate(values_.begin(), values_.end(), 0);
}

std::string Labeling::str() const {
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out.push_back(',');
        out.push_back(static_cast<char>('0' + values_[i]));
    }
    return out;
}

int weight(const Labeling& f) { return f.weight(); }

bool is_idf(const Graph& g, const Labeling& f) {
    check_sizes(g, f);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (f[v] == 0 && neighbor_weight(g, f, v) < 2) return false;
    return true;
}

bool is_rdf(const Graph& g, const Labeling& f) {
    check_sizes(g, f);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (f[v] != 0) continue;
        bool protected_by_two = false;
        for (std::uint64_t m = g.neighbor_mask(v); m; m &= m - 1)
            if (f[std::countr_zero(m)] == 2) {
                protected_by_two = true;
                break;
            }
        if (!protected_by_two) return false;
    }
    return true;
}

bool is_dominating(const Graph& g, const std::vector<int>& s) {
    std::uint64_t covered = 0;
    for (int v : s) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("set member out of range");
        covered |= g.closed_neighbor_mask(v);
    }
    return covered == g.vertex_mask();
}

VPartition v_partition(const Labeling& f) {
    VPartition parts;
    for (int v = 0; v < f.size(); ++v) {
        if (f[v] == 0) parts.v0.push_back(v);
        else if (f[v] == 1) parts.v1.push_back(v);
        else parts.v2.push_back(v);
    }
    return parts;
}

Labeling normalize_pendant(const Graph& g, const Labeling& f, int u, PendantRewrite rewrite) {
    check_sizes(g, f);
    if (!is_idf(g, f)) throw std::invalid_argument("labeling is not a valid Italian labeling");
    if (g.degree(u) != 1) throw std::invalid_argument("vertex is not a pendant");
    if (f[u] != 2) return f;
    int v = std::countr_zero(g.neighbor_mask(u));
    Labeling out = f;
    if (rewrite == PendantRewrite::shift_to_support) {
        // v only gains, so every neighborhood sum through v holds up; u's own
        // zero is backed by the fresh 2 at v.
        out.set(u, 0);
        out.set(v, 2);
    } else {
        out.set(u, 1);
        if (f[v] == 0) out.set(v, 1);
    }
    return out;
}

Labeling normalize_true_twin(const Graph& g, const Labeling& f, int u, int u2) {
    check_sizes(g, f);
    if (!is_idf(g, f)) throw std::invalid_argument("labeling is not a valid Italian labeling");
    if (twin_relation(g, u, u2) != TwinRelation::true_twins)
        throw std::invalid_argument("vertices are not true twins");
    if (f[u2] == 0) return f;
    Labeling out = f;
    if (f[u] == 0 && f[u2] == 1) {
        // Swapping a (0,1) pair across twins keeps every shared neighbor's
        // sum intact, and the vacated u2 leans on the same support u did.
        out.set(u, 1);
        out.set(u2, 0);
    } else {
        // Concentrate the pair's weight on u; u2 is adjacent to u, and every
        // other vertex that saw u2 also sees u.
        out.set(u, 2);
        out.set(u2, 0);
    }
    return out;
}

Labeling normalize_false_twin(const Graph& g, const Labeling& f, int u, int u2) {
    check_sizes(g, f);
    if (!is_idf(g, f)) throw std::invalid_argument("labeling is not a valid Italian labeling");
    if (twin_relation(g, u, u2) != TwinRelation::false_twins)
        throw std::invalid_argument("vertices are not false twins");
    if (f[u2] != 2) return f;
    if (f[u] == 2)
        throw std::invalid_argument("both false twins carry 2; no local rewrite applies");
    // u and u2 see exactly the same neighborhood and never each other, so
    // exchanging their values changes no neighborhood sum.
    Labeling out = f;
    out.set(u, 2);
    out.set(u2, f[u]);
    return out;
}

}  // namespace idom
