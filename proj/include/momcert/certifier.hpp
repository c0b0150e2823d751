#pragma once

// Branch-and-bound certification that max(f1, f2) exceeds a threshold over
// the (e2, e3, e4) parameter box, one maximal case at a time.
//
// Every leaf box is evaluated in jet arithmetic; a leaf passes when the lower
// end of the jet range exceeds the threshold.  Boxes that straddle the
// ordering constraint e2 <= e3 <= e4 are evaluated over the whole box (a
// superset enclosure); boxes entirely outside it are discarded.
//
// Work is split into a fixed set of root boxes that does not depend on the
// worker count, and root results are merged in root order, so reports are
// identical for any number of workers.

#include "momcert/bounds.hpp"
#include "momcert/cases.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace momcert {

struct Box {
    Interval e2;
    Interval e3;
    Interval e4;
    /// 3, or 2 when e4 is pinned and never split.
    int dim = 3;

    Interval& axis(int i) { return i == 0 ? e2 : (i == 1 ? e3 : e4); }
    const Interval& axis(int i) const { return i == 0 ? e2 : (i == 1 ? e3 : e4); }

    bool operator==(const Box& o) const
    {
        auto eq = [](const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; };
        return eq(e2, o.e2) && eq(e3, o.e3) && eq(e4, o.e4) && dim == o.dim;
    }
};

/// No point of the box satisfies e2 <= e3 <= e4.
inline bool is_infeasible(const Box& b) { return b.e2.lo > b.e3.hi || b.e3.lo > b.e4.hi || b.e2.lo > b.e4.hi; }

/// 1 <= e2 <= 1.4751, e2 <= e3 <= e4 <= 1.5152 (upper ends rounded outward).
inline Box default_domain()
{
    return {{1.0, decimal_up(e2_cap)}, {1.0, decimal_up(e_cap)}, {1.0, decimal_up(e_cap)}, 3};
}

/// e4 pinned to 1.5152; 1 <= e2 <= 1.4751, e2 <= e3 <= 1.5152.
inline Box slice_domain()
{
    return {{1.0, decimal_up(e2_cap)}, {1.0, decimal_up(e_cap)}, {decimal_down(e_cap), decimal_up(e_cap)}, 2};
}

enum class Status { certified, validated, failed, budget_exhausted };

inline const char* to_string(Status s)
{
    switch (s) {
        case Status::certified: return "certified";
        case Status::validated: return "validated";
        case Status::failed: return "failed";
        case Status::budget_exhausted: return "budget-exhausted";
    }
    return "?";
}

enum class Mode { adaptive, grid };

inline const char* to_string(Mode m) { return m == Mode::adaptive ? "adaptive" : "grid"; }

struct Strategy {
    Mode mode = Mode::adaptive;
    /// Adaptive: bisections allowed per axis.  Grid: 2^depth cells per axis.
    int depth = 9;
    int workers = 1;
    double threshold = 2.848;
    std::uint64_t budget = 2'000'000'000;
    std::size_t max_failures = 32;
    /// Bisection levels used to form the root work items.
    int root_levels = 6;
    /// Consult f2 where its gate holds; off means f1 alone.
    bool use_f2 = true;
};

struct CaseReport {
    int case_id = 0;
    std::string label;
    std::vector<TripleType> triples;
    std::uint64_t boxes_processed = 0;
    std::uint64_t boxes_discarded = 0;
    int max_depth_reached = 0;
    double min_lower_bound = std::numeric_limits<double>::infinity();
    Status status = Status::failed;
    double wall_time_ms = 0;
    std::vector<Box> failures;

    bool passed() const { return status == Status::certified || status == Status::validated; }
};

struct CertificateBundle {
    double threshold = 2.848;
    std::string eps_model = MachineModel::descriptor;
    Strategy strategy;
    Box domain;
    std::vector<CaseReport> cases;

    bool all_passed() const
    {
        return !cases.empty() && std::all_of(cases.begin(), cases.end(), [](const CaseReport& r) { return r.passed(); });
    }
};

/// Leaf outcome passed to an optional observer (tests use it for coverage).
enum class LeafKind { passed, failed, discarded };
using LeafObserver = std::function<void(const Box&, LeafKind, double)>;

namespace detail {

inline SpectrumPoint<Jet> jets_for(const Box& b)
{
    return {jet_from_interval(1, b.e2.lo, b.e2.hi), jet_from_interval(2, b.e3.lo, b.e3.hi),
            jet_from_interval(3, b.e4.lo, b.e4.hi)};
}

constexpr double unknown_bound = -std::numeric_limits<double>::infinity();

} // namespace detail

/// Whether e4 <= 1.5152 and e2 + 1 - e4^2 >= 0 hold over the whole box.
inline bool gate_holds_on_box(const Box& b)
{
    if (!(b.e4.hi <= decimal_down(e_cap))) return false;
    try {
        auto pt = detail::jets_for(b);
        return range(pt.e2 + Jet(1.0) - pt.e4 * pt.e4).lo >= 0;
    } catch (const std::domain_error&) {
        return false;
    }
}

/// Rigorous lower bound of f1 over the box, with e_max pinned to 1.5152 when
/// the whole box lies above it (or when `pin_emax` is set).
inline double f1_lower_bound(const CaseSpec& cs, const Box& b, bool pin_emax = false)
{
    try {
        auto pt = detail::jets_for(b);
        bool pin = pin_emax || b.e4.lo > decimal_up(e_cap);
        Jet emax = pin ? lit<Jet>(e_cap_decimal) : e_max(pt);
        return range(f1_with_emax(cs, pt, emax)).lo;
    } catch (const std::domain_error&) {
        return detail::unknown_bound;
    }
}

/// Rigorous lower bound for max(f1, f2) over the box.  f2 is consulted only
/// when its gate holds on the whole box.  A domain error (jet or geometric)
/// in f2 falls back to f1, and one in f1 yields -inf.
inline double lower_bound_on_box(const CaseSpec& cs, const Box& b, bool use_f2 = true)
{
    try {
        auto pt = detail::jets_for(b);
        bool pin = b.e4.lo > decimal_up(e_cap);
        Jet emax = pin ? lit<Jet>(e_cap_decimal) : e_max(pt);
        Jet v1 = f1_with_emax(cs, pt, emax);
        double lb = range(v1).lo;
        if (use_f2 && !pin && gate_holds_on_box(b)) {
            try {
                lb = std::max(lb, range(v1 + f2_bonus(pt)).lo);
            } catch (const std::domain_error&) {
                // f1 alone stands
            }
        }
        return lb;
    } catch (const std::domain_error&) {
        return detail::unknown_bound;
    }
}

namespace detail {

struct Node {
    Box box;
    std::array<int, 3> depth{};
};

inline int split_axis(const Node& n, int dims, int cap)
{
    int best = -1;
    double best_w = -1;
    for (int a = 0; a < dims; ++a) {
        if (n.depth[static_cast<std::size_t>(a)] >= cap) continue;
        double w = n.box.axis(a).width();
        if (!(w > 0)) continue; // nothing to refine on a degenerate axis
        if (w > best_w) {
            best_w = w;
            best = a;
        }
    }
    return best;
}

inline std::pair<Node, Node> bisect(const Node& n, int axis)
{
    Node lo = n, hi = n;
    const Interval& iv = n.box.axis(axis);
    double mid = iv.lo + (iv.hi - iv.lo) / 2;
    lo.box.axis(axis).hi = mid;
    hi.box.axis(axis).lo = mid;
    ++lo.depth[static_cast<std::size_t>(axis)];
    ++hi.depth[static_cast<std::size_t>(axis)];
    return {lo, hi};
}

struct Tally {
    std::uint64_t processed = 0;
    std::uint64_t discarded = 0;
    int max_depth = 0;
    double min_lb = std::numeric_limits<double>::infinity();
    std::vector<Box> failures;
    std::uint64_t failure_count = 0;
    bool out_of_budget = false;

    void merge(const Tally& o, std::size_t max_failures)
    {
        processed += o.processed;
        discarded += o.discarded;
        max_depth = std::max(max_depth, o.max_depth);
        min_lb = std::min(min_lb, o.min_lb);
        failure_count += o.failure_count;
        for (const Box& b : o.failures)
            if (failures.size() < max_failures) failures.push_back(b);
        out_of_budget = out_of_budget || o.out_of_budget;
    }
};

using BoundFn = std::function<double(const Box&)>;

class Engine {
public:
    Engine(const Strategy& s, BoundFn bound, const LeafObserver* observer)
        : s_(s), bound_(std::move(bound)), observer_(observer), pass_above_(next_up(s.threshold))
    {
    }

    Tally run(const Box& domain)
    {
        int dims = domain.dim == 2 ? 2 : 3;
        std::vector<Node> roots;
        if (s_.mode == Mode::adaptive) roots = make_roots({domain, {}}, dims);
        else roots = grid_slabs(domain, dims);

        std::vector<Tally> results(roots.size());
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t i = next++; i < roots.size(); i = next++) {
                if (s_.mode == Mode::adaptive) results[i] = dfs(roots[i], dims);
                else results[i] = grid_slab(roots[i], dims);
            }
        };
        int nw = std::max(1, s_.workers);
        if (nw == 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < nw; ++w) pool.emplace_back(work);
            for (auto& t : pool) t.join();
        }
        Tally total;
        for (const Tally& t : results) total.merge(t, s_.max_failures);
        return total;
    }

private:
    std::vector<Node> make_roots(const Node& top, int dims) const
    {
        std::vector<Node> level{top};
        for (int l = 0; l < s_.root_levels; ++l) {
            std::vector<Node> next;
            for (const Node& n : level) {
                int ax = split_axis(n, dims, s_.depth);
                if (ax < 0) {
                    next.push_back(n);
                    continue;
                }
                auto [a, b] = bisect(n, ax);
                next.push_back(a);
                next.push_back(b);
            }
            level = std::move(next);
        }
        return level;
    }

    void observe(const Box& b, LeafKind k, double lb)
    {
        if (!observer_ || !*observer_) return;
        std::lock_guard<std::mutex> lock(observer_mutex_);
        (*observer_)(b, k, lb);
    }

    bool charge(Tally& t)
    {
        if (processed_.fetch_add(1, std::memory_order_relaxed) >= s_.budget) {
            t.out_of_budget = true;
            return false;
        }
        return true;
    }

    void record_failure(Tally& t, const Box& b)
    {
        ++t.failure_count;
        if (t.failures.size() < s_.max_failures) t.failures.push_back(b);
    }

    Tally dfs(const Node& root, int dims)
    {
        Tally t;
        std::vector<Node> stack{root};
        while (!stack.empty()) {
            Node n = stack.back();
            stack.pop_back();
            if (is_infeasible(n.box)) {
                ++t.discarded;
                observe(n.box, LeafKind::discarded, 0);
                continue;
            }
            if (!charge(t)) return t;
            ++t.processed;
            t.max_depth = std::max(t.max_depth, *std::max_element(n.depth.begin(), n.depth.end()));
            double lb = bound_(n.box);
            if (lb > pass_above_) {
                t.min_lb = std::min(t.min_lb, lb);
                observe(n.box, LeafKind::passed, lb);
                continue;
            }
            int ax = split_axis(n, dims, s_.depth);
            if (ax < 0) {
                t.min_lb = std::min(t.min_lb, lb);
                record_failure(t, n.box);
                observe(n.box, LeafKind::failed, lb);
                continue;
            }
            auto [a, b] = bisect(n, ax);
            stack.push_back(b);
            stack.push_back(a);
        }
        return t;
    }

    static double grid_point(const Interval& iv, std::size_t i, std::size_t n)
    {
        if (i == 0) return iv.lo;
        if (i == n) return iv.hi;
        return iv.lo + (iv.hi - iv.lo) * (static_cast<double>(i) / static_cast<double>(n));
    }

    // One slab per e2 cell; e3 (and e4) cells are enumerated inside it.
    std::vector<Node> grid_slabs(const Box& domain, int /*dims*/) const
    {
        std::size_t n = std::size_t{1} << s_.depth;
        std::vector<Node> slabs;
        for (std::size_t i = 0; i < n; ++i) {
            Node node{domain, {}};
            node.box.e2 = {grid_point(domain.e2, i, n), grid_point(domain.e2, i + 1, n)};
            slabs.push_back(node);
        }
        return slabs;
    }

    Tally grid_slab(const Node& slab, int dims)
    {
        Tally t;
        std::size_t n = std::size_t{1} << s_.depth;
        std::size_t n4 = dims == 3 ? n : 1;
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n4; ++k) {
                Box b = slab.box;
                b.e3 = {grid_point(slab.box.e3, j, n), grid_point(slab.box.e3, j + 1, n)};
                if (dims == 3) b.e4 = {grid_point(slab.box.e4, k, n), grid_point(slab.box.e4, k + 1, n)};
                if (is_infeasible(b)) {
                    ++t.discarded;
                    observe(b, LeafKind::discarded, 0);
                    continue;
                }
                if (!charge(t)) return t;
                ++t.processed;
                double lb = bound_(b);
                t.min_lb = std::min(t.min_lb, lb);
                if (lb > pass_above_) {
                    observe(b, LeafKind::passed, lb);
                } else {
                    record_failure(t, b);
                    observe(b, LeafKind::failed, lb);
                }
            }
        }
        t.max_depth = s_.depth;
        return t;
    }

    Strategy s_;
    BoundFn bound_;
    const LeafObserver* observer_;
    double pass_above_;
    std::atomic<std::uint64_t> processed_{0};
    std::mutex observer_mutex_;
};

inline CaseReport run_report(int case_id, std::string label, std::vector<TripleType> triples, const Box& domain,
                             const Strategy& s, BoundFn bound, const LeafObserver* observer)
{
    auto t0 = std::chrono::steady_clock::now();
    Engine engine(s, std::move(bound), observer);
    Tally t = engine.run(domain);
    CaseReport r;
    r.case_id = case_id;
    r.label = std::move(label);
    r.triples = std::move(triples);
    r.boxes_processed = t.processed;
    r.boxes_discarded = t.discarded;
    r.max_depth_reached = t.max_depth;
    r.min_lower_bound = t.min_lb;
    r.failures = std::move(t.failures);
    if (t.out_of_budget) r.status = Status::budget_exhausted;
    else if (t.failure_count > 0) r.status = Status::failed;
    // a fully infeasible domain holds vacuously
    else r.status = Status::certified;
    r.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

} // namespace detail

/// Certify max(f1, f2) > threshold for one case over `domain`.
inline CaseReport certify_case(const CaseSpec& cs, const Box& domain, const Strategy& s,
                               const LeafObserver* observer = nullptr)
{
    return detail::run_report(cs.id, "case-" + std::to_string(cs.id), cs.triples, domain, s,
                              [cs, f2 = s.use_f2](const Box& b) { return lower_bound_on_box(cs, b, f2); }, observer);
}

/// Certify f1 > threshold on the e4 = 1.5152 slice for all listed cases at
/// once: each box passes when the smallest f1 bound over the cases does.
inline CaseReport certify_slice(const Box& domain2d, const Strategy& s, const std::vector<CaseSpec>& cases,
                                const LeafObserver* observer = nullptr)
{
    Box d = domain2d;
    d.dim = 2;
    return detail::run_report(0, "slice-e4", {}, d, s,
                              [cases](const Box& b) {
                                  double lb = std::numeric_limits<double>::infinity();
                                  for (const CaseSpec& cs : cases) lb = std::min(lb, f1_lower_bound(cs, b, true));
                                  return lb;
                              },
                              observer);
}

inline CaseReport certify_slice(const Strategy& s) { return certify_slice(slice_domain(), s, the_18_cases()); }

/// Certify each listed case over the default domain.
inline CertificateBundle certify_cases(const std::vector<CaseSpec>& cases, const Strategy& s,
                                       const Box& domain = default_domain(),
                                       const std::function<void(const CaseReport&)>& progress = {})
{
    CertificateBundle bundle;
    bundle.threshold = s.threshold;
    bundle.strategy = s;
    bundle.domain = domain;
    for (const CaseSpec& cs : cases) {
        bundle.cases.push_back(certify_case(cs, domain, s));
        if (progress) progress(bundle.cases.back());
    }
    return bundle;
}

} // namespace momcert
