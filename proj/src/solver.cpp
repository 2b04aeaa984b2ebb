#include "idom/solver.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <numeric>

namespace idom {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int INFEASIBLE = 1 << 28;

enum class Mode { domination, italian, roman };

// Depth-first branch and bound over value assignments in a fixed vertex
// order. Two admissible lower bounds are maintained:
//  - a counting bound: every still-unsecured vertex v owes a residual demand
//    (2*f(v) + sum over N(v) must reach 2 in the Italian case), and one unit
//    of future weight placed anywhere can pay off at most a bounded amount of
//    total demand;
//  - a packing bound: unsecured vertices with pairwise disjoint closed
//    neighborhoods must each be paid for separately.
// A forward check narrows the candidate values at the branch vertex to those
// that keep every already-zero neighbor satisfiable, so every leaf reached is
// valid by construction.
struct Searcher {
    int n = 0;
    Mode mode = Mode::italian;
    std::array<std::uint64_t, MAX_VERTICES> nbr{};
    std::array<std::uint64_t, MAX_VERTICES> closed{};
    std::array<int, MAX_VERTICES> order{};       // branch position -> vertex
    std::array<int, MAX_VERTICES> pack_order{};  // tight neighborhoods first

    std::array<std::int8_t, MAX_VERTICES> val{};   // -1 while unassigned
    std::array<std::int16_t, MAX_VERTICES> nsum{};  // assigned neighbor weight
    std::array<std::int16_t, MAX_VERTICES> ntwo{};  // assigned 2-neighbors
    std::array<std::int16_t, MAX_VERTICES> nun{};   // unassigned neighbors
    std::uint64_t unassigned = 0;
    std::uint64_t zeros = 0;  // vertices assigned 0
    int weight = 0;

    int best = 0;
    std::array<std::int8_t, MAX_VERTICES> best_val{};

    Clock::time_point deadline;
    bool budget_hit = false;
    std::uint64_t ticks = 0;

    void init(const Graph& g, Mode m, Clock::time_point stop) {
        n = g.vertex_count();
        mode = m;
        deadline = stop;
        for (int v = 0; v < n; ++v) {
            nbr[v] = g.neighbor_mask(v);
            closed[v] = g.closed_neighbor_mask(v);
            nun[v] = static_cast<std::int16_t>(g.degree(v));
            val[v] = -1;
            nsum[v] = ntwo[v] = 0;
        }
        unassigned = g.vertex_mask();
        zeros = 0;
        weight = 0;
        // Everything at 1 is always feasible; it seeds the incumbent so even
        // an instant budget expiry returns a usable certificate.
        best = n;
        for (int v = 0; v < n; ++v) best_val[v] = 1;

        std::iota(order.begin(), order.begin() + n, 0);
        std::stable_sort(order.begin(), order.begin() + n,
                         [&](int a, int b) { return std::popcount(nbr[a]) > std::popcount(nbr[b]); });
        std::iota(pack_order.begin(), pack_order.begin() + n, 0);
        std::stable_sort(pack_order.begin(), pack_order.begin() + n, [&](int a, int b) {
            return std::popcount(closed[a]) < std::popcount(closed[b]);
        });
    }

    int max_value() const { return mode == Mode::domination ? 1 : 2; }

    // May v still end up satisfied if it carries 0?
    bool zero_ok(int v) const {
        switch (mode) {
            case Mode::italian: return nsum[v] + 2 * nun[v] >= 2;
            case Mode::roman: return ntwo[v] > 0 || nun[v] > 0;
            case Mode::domination: return nsum[v] >= 1 || nun[v] > 0;
        }
        return false;
    }

    // Is v's condition already met regardless of future assignments?
    bool secured(int v) const {
        if (val[v] >= 1) return true;
        switch (mode) {
            case Mode::italian: return nsum[v] >= 2;
            case Mode::roman: return ntwo[v] > 0;
            case Mode::domination: return nsum[v] >= 1;
        }
        return false;
    }

    // Smallest value assignable to u that keeps every already-zero neighbor
    // of u satisfiable by its remaining unassigned neighbors.
    int min_value_for(int u) const {
        int lo = 0;
        for (std::uint64_t m = nbr[u] & zeros; m; m &= m - 1) {
            int w = std::countr_zero(m);
            int req = 0;
            switch (mode) {
                case Mode::italian: req = (2 - nsum[w]) - 2 * (nun[w] - 1); break;
                case Mode::roman:
                    if (ntwo[w] == 0 && nun[w] == 1) req = 2;
                    break;
                case Mode::domination:
                    if (nsum[w] == 0 && nun[w] == 1) req = 1;
                    break;
            }
            lo = std::max(lo, req);
        }
        return lo;
    }

    int lower_bound() const {
        std::uint64_t pending = 0;  // unsecured vertices
        int demand = 0;
        for (int v = 0; v < n; ++v) {
            if (val[v] >= 1 || secured(v)) continue;
            pending |= std::uint64_t{1} << v;
            switch (mode) {
                case Mode::italian: demand += 2 - nsum[v]; break;
                case Mode::roman: demand += 2; break;
                case Mode::domination: demand += 1; break;
            }
        }
        if (!pending) return 0;

        int per_unit = 0;
        for (std::uint64_t m = unassigned; m; m &= m - 1) {
            int u = std::countr_zero(m);
            bool in = (pending >> u) & 1;
            int reach = std::popcount(nbr[u] & pending);
            int c = 0;
            switch (mode) {
                case Mode::italian: c = 2 * in + reach; break;
                case Mode::roman: c = std::max(2 * in, reach + in); break;
                case Mode::domination: c = in + reach; break;
            }
            per_unit = std::max(per_unit, c);
        }
        if (per_unit == 0) return INFEASIBLE;
        int counting = (demand + per_unit - 1) / per_unit;

        int packing = 0;
        std::uint64_t used = 0;
        for (int k = 0; k < n; ++k) {
            int v = pack_order[k];
            if (!((pending >> v) & 1) || (closed[v] & used)) continue;
            used |= closed[v];
            if (val[v] == 0) {
                switch (mode) {
                    case Mode::italian: packing += 2 - nsum[v]; break;
                    case Mode::roman: packing += 2; break;
                    case Mode::domination: packing += 1; break;
                }
            } else {
                packing += 1;  // unassigned: taking value 1 itself may suffice
            }
        }
        return std::max(counting, packing);
    }

    void apply(int u, int value) {
        val[u] = static_cast<std::int8_t>(value);
        unassigned &= ~(std::uint64_t{1} << u);
        if (value == 0) zeros |= std::uint64_t{1} << u;
        weight += value;
        for (std::uint64_t m = nbr[u]; m; m &= m - 1) {
            int w = std::countr_zero(m);
            nsum[w] = static_cast<std::int16_t>(nsum[w] + value);
            nun[w] = static_cast<std::int16_t>(nun[w] - 1);
            if (value == 2) ntwo[w] = static_cast<std::int16_t>(ntwo[w] + 1);
        }
    }

    void undo(int u, int value) {
        val[u] = -1;
        unassigned |= std::uint64_t{1} << u;
        zeros &= ~(std::uint64_t{1} << u);
        weight -= value;
        for (std::uint64_t m = nbr[u]; m; m &= m - 1) {
            int w = std::countr_zero(m);
            nsum[w] = static_cast<std::int16_t>(nsum[w] - value);
            nun[w] = static_cast<std::int16_t>(nun[w] + 1);
            if (value == 2) ntwo[w] = static_cast<std::int16_t>(ntwo[w] - 1);
        }
    }

    bool out_of_time() {
        if (budget_hit) return true;
        if ((ticks++ & 1023) == 0 && Clock::now() >= deadline) budget_hit = true;
        return budget_hit;
    }

    // Stage one: minimize. Explores values high to low so dense assignments
    // surface good incumbents early.
    void minimize(int pos) {
        if (out_of_time()) return;
        if (weight + lower_bound() >= best) return;
        if (pos == n) {
            best = weight;
            best_val = val;
            return;
        }
        int u = order[pos];
        int lo = min_value_for(u);
        for (int value = max_value(); value >= lo; --value) {
            if (value == 0 && !zero_ok(u)) continue;
            apply(u, value);
            minimize(pos + 1);
            undo(u, value);
            if (budget_hit) return;
        }
    }

    // Stage two: walk vertices in index order trying small values first; the
    // first full assignment of weight `target` is the lexicographically
    // smallest optimal labeling.
    bool extract(int pos, int target) {
        if (out_of_time()) return false;
        if (weight + lower_bound() > target) return false;
        if (pos == n) {
            best_val = val;
            return true;
        }
        int u = pos;  // identity order for lexicographic extraction
        int lo = min_value_for(u);
        for (int value = lo; value <= max_value(); ++value) {
            if (value == 0 && !zero_ok(u)) continue;
            apply(u, value);
            if (extract(pos + 1, target)) return true;
            undo(u, value);
            if (budget_hit) return false;
        }
        return false;
    }
};

struct ComponentOutcome {
    int value = 0;
    bool optimal = true;
};

// Solves one connected component in place, writing values into out[] at the
// component's original vertex indices.
ComponentOutcome solve_component(const Graph& g, const std::vector<int>& members, Mode mode,
                                 bool deterministic, Clock::time_point stop,
                                 std::vector<int>& out) {
    if (members.size() == 1) {
        out[members[0]] = 1;  // an isolated vertex must carry weight 1
        return {1, true};
    }

    // Re-index the component to 0..k-1.
    std::vector<int> local(g.vertex_count(), -1);
    for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int u : members)
        for (std::uint64_t m = g.neighbor_mask(u); m; m &= m - 1) {
            int w = std::countr_zero(m);
            if (u < w) edges.emplace_back(local[u], local[w]);
        }
    Graph sub = Graph::from_edge_list(static_cast<int>(members.size()), edges);

    Searcher s;
    s.init(sub, mode, stop);
    s.minimize(0);
    int value = s.best;
    bool optimal = !s.budget_hit;

    if (optimal && deterministic) {
        auto found = s.best_val;
        s.init(sub, mode, stop);
        s.best = value;
        s.best_val = found;
        s.extract(0, value);  // on budget expiry the stage-one labeling stands
        optimal = true;
    }
    for (std::size_t i = 0; i < members.size(); ++i) out[members[i]] = s.best_val[i];
    return {value, optimal};
}

struct LabelOutcome {
    int value = 0;
    Labeling certificate;
    bool optimal = true;
};

LabelOutcome solve(const Graph& g, Mode mode, const SolveOptions& options) {
    int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("solve needs at least one vertex");
    bool deterministic = options.deterministic.value_or(n <= 20);
    auto stop = Clock::now();
    if (options.budget_secs > 0)
        stop += std::chrono::duration_cast<Clock::duration>(
            std::chrono::duration<double>(options.budget_secs));

    std::vector<int> values(n, 0);
    LabelOutcome outcome;
    for (const auto& comp : connected_components(g)) {
        auto piece = solve_component(g, comp, mode, deterministic, stop, values);
        outcome.value += piece.value;
        outcome.optimal = outcome.optimal && piece.optimal;
    }
    Labeling cert(n);
    for (int v = 0; v < n; ++v) cert.set(v, values[v]);
    outcome.certificate = cert;
    return outcome;
}

}  // namespace

SolveResult gamma_italian(const Graph& g, const SolveOptions& options) {
    auto r = solve(g, Mode::italian, options);
    return {r.value, r.certificate, r.optimal};
}

SolveResult gamma_roman(const Graph& g, const SolveOptions& options) {
    auto r = solve(g, Mode::roman, options);
    return {r.value, r.certificate, r.optimal};
}

DominationResult gamma_domination(const Graph& g, const SolveOptions& options) {
    auto r = solve(g, Mode::domination, options);
    DominationResult out;
    out.value = r.value;
    out.optimal = r.optimal;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (r.certificate[v] == 1) out.certificate.push_back(v);
    return out;
}

SolveResult brute_force_gamma_italian(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("solve needs at least one vertex");
    if (n > 15) throw limit_error("exhaustive scan is limited to 15 vertices");

    std::vector<std::vector<int>> nbrs(n);
    for (int v = 0; v < n; ++v) nbrs[v] = g.neighbors(v);

    std::vector<int> f(n, 0);
    int best = -1;
    std::vector<int> best_f;
    for (;;) {
        int w = std::accumulate(f.begin(), f.end(), 0);
        if (best < 0 || w < best) {
            bool ok = true;
            for (int v = 0; v < n && ok; ++v) {
                if (f[v] != 0) continue;
                int sum = 0;
                for (int u : nbrs[v]) sum += f[u];
                ok = sum >= 2;
            }
            if (ok) {
                best = w;
                best_f = f;
            }
        }
        // Advance the base-3 odometer, least significant digit last, so
        // labelings stream in lexicographic order and the kept certificate is
        // the lexicographically smallest optimum.
        int d = n - 1;
        while (d >= 0 && f[d] == 2) f[d--] = 0;
        if (d < 0) break;
        ++f[d];
    }
    SolveResult out;
    out.value = best;
    Labeling cert(n);
    for (int v = 0; v < n; ++v) cert.set(v, best_f[v]);
    out.certificate = cert;
    out.optimal = true;
    return out;
}

std::vector<Labeling> enumerate_minimum_idfs(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("solve needs at least one vertex");
    if (n > 12) throw limit_error("exhaustive enumeration is limited to 12 vertices");

    std::vector<std::vector<int>> nbrs(n);
    for (int v = 0; v < n; ++v) nbrs[v] = g.neighbors(v);
    auto valid = [&](const std::vector<int>& f) {
        for (int v = 0; v < n; ++v) {
            if (f[v] != 0) continue;
            int sum = 0;
            for (int u : nbrs[v]) sum += f[u];
            if (sum < 2) return false;
        }
        return true;
    };

    int best = brute_force_gamma_italian(g).value;
    std::vector<Labeling> out;
    std::vector<int> f(n, 0);
    for (;;) {
        if (std::accumulate(f.begin(), f.end(), 0) == best && valid(f)) {
            Labeling lab(n);
            for (int v = 0; v < n; ++v) lab.set(v, f[v]);
            out.push_back(lab);
        }
        int d = n - 1;
        while (d >= 0 && f[d] == 2) f[d--] = 0;
        if (d < 0) break;
        ++f[d];
    }
    return out;
}

}  // namespace idom
