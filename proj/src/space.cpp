#include "ccs/space.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ccs/kernels.hpp"

namespace ccs {

std::string mask_to_string(Mask m) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int i : mask_to_indices(m)) {
        if (!first) os << ',';
        os << i;
        first = false;
    }
    os << '}';
    return os.str();
}

bool ConvexityFamily::contains(Mask m) const {
    return kernels::sorted_contains(sets.data(), sets.size(), m);
}

void ConvexityFamily::canonicalize() {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

ValidationReport validate(const ConvexityFamily& family) {
    ValidationReport report;
    const Mask universe = full_mask(family.n);

    AxiomCheck empty{"contains-empty", family.contains(0), ""};
    if (!empty.pass) empty.witness = "missing empty set";
    report.checks.push_back(empty);

    AxiomCheck full{"contains-full", family.contains(universe), ""};
    if (!full.pass) full.witness = "missing full set " + mask_to_string(universe);
    report.checks.push_back(full);

    AxiomCheck closed{"intersection-closed", true, ""};
    for (std::size_t i = 0; i < family.sets.size() && closed.pass; ++i) {
        for (std::size_t j = i + 1; j < family.sets.size(); ++j) {
            Mask meet = family.sets[i] & family.sets[j];
            if (!family.contains(meet)) {
                closed.pass = false;
                closed.witness = mask_to_string(family.sets[i]) + " ∩ " +
                                 mask_to_string(family.sets[j]) + " = " +
                                 mask_to_string(meet) + " missing";
                break;
            }
        }
    }
    report.checks.push_back(closed);

    for (const auto& c : report.checks) report.pass = report.pass && c.pass;
    return report;
}

ConvexityFamily intersection_closure(int n, const std::vector<Mask>& generators,
                                     std::size_t max_sets) {
    if (n < 1 || n > kMaxGroundSize) throw input_error("ground set size out of range");
    const Mask universe = full_mask(n);
    std::set<Mask> closed{Mask{0}, universe};
    std::vector<Mask> frontier;
    for (Mask g : generators) {
        if ((g & ~universe) != 0) throw input_error("generator exceeds ground set");
        if (closed.insert(g).second) frontier.push_back(g);
    }
    // Worklist: new sets only need intersecting against everything once.
    while (!frontier.empty()) {
        Mask a = frontier.back();
        frontier.pop_back();
        std::vector<Mask> snapshot(closed.begin(), closed.end());
        for (Mask b : snapshot) {
            Mask meet = a & b;
            if (closed.insert(meet).second) {
                if (closed.size() > max_sets)
                    throw resource_error("intersection closure exceeds budget of " +
                                         std::to_string(max_sets) + " sets");
                frontier.push_back(meet);
            }
        }
    }
    ConvexityFamily family;
    family.n = n;
    family.sets.assign(closed.begin(), closed.end());
    return family;
}

// ---------------------------------------------------------------------------

struct ConvexitySpace::Cache {
    mutable std::mutex mu;
    mutable std::shared_ptr<const ConvexityFamily> family;
    mutable std::unordered_map<Mask, Mask> hull_memo;
    static constexpr std::size_t kMemoCap = 1u << 20;
};

ConvexitySpace ConvexitySpace::from_family(ConvexityFamily family) {
    if (family.n < 1 || family.n > kMaxGroundSize)
        throw input_error("ground set size out of range");
    for (Mask m : family.sets)
        if ((m & ~full_mask(family.n)) != 0) throw input_error("family set exceeds ground set");
    family.canonicalize();
    ConvexitySpace s;
    s.kind_ = "explicit";
    s.n_ = family.n;
    s.cache_ = std::make_shared<Cache>();
    s.cache_->family = std::make_shared<const ConvexityFamily>(std::move(family));
    return s;
}

ConvexitySpace ConvexitySpace::free_space(int n) {
    if (n < 1 || n > kMaxGroundSize) throw input_error("free_space: n out of range");
    ConvexitySpace s;
    s.kind_ = "free";
    s.n_ = n;
    s.cache_ = std::make_shared<Cache>();
    return s;
}

ConvexitySpace ConvexitySpace::chain_space(int n) {
    if (n < 1 || n > kMaxGroundSize) throw input_error("chain_space: n out of range");
    ConvexitySpace s;
    s.kind_ = "chain";
    s.n_ = n;
    s.cache_ = std::make_shared<Cache>();
    return s;
}

ConvexitySpace ConvexitySpace::grid_space(int q, int d) {
    if (q < 2) throw input_error("grid_space: q must be >= 2");
    if (d < 1) throw input_error("grid_space: d must be >= 1");
    double size = 1;
    for (int i = 0; i < d; ++i) size *= q;
    if (size > kMaxGroundSize) throw input_error("grid_space: q^d exceeds ground set cap");
    ConvexitySpace s;
    s.kind_ = "grid";
    s.q_ = q;
    s.d_ = d;
    s.n_ = 1;
    for (int i = 0; i < d; ++i) s.n_ *= q;
    s.cache_ = std::make_shared<Cache>();
    return s;
}

ConvexitySpace ConvexitySpace::product_space(ConvexitySpace a, ConvexitySpace b) {
    long long n = static_cast<long long>(a.size()) * b.size();
    if (n > kMaxGroundSize) throw input_error("product_space: size exceeds ground set cap");
    ConvexitySpace s;
    s.kind_ = "product";
    s.n_ = static_cast<int>(n);
    s.factors_.push_back(std::make_shared<ConvexitySpace>(std::move(a)));
    s.factors_.push_back(std::make_shared<ConvexitySpace>(std::move(b)));
    s.cache_ = std::make_shared<Cache>();
    return s;
}

std::string ConvexitySpace::describe() const {
    std::ostringstream os;
    if (kind_ == "grid")
        os << "grid(q=" << q_ << ",d=" << d_ << ")";
    else if (kind_ == "product")
        os << "product(" << factors_[0]->describe() << "," << factors_[1]->describe() << ")";
    else
        os << kind_ << "(n=" << n_ << ")";
    return os.str();
}

int ConvexitySpace::grid_index(int q, int d, const std::vector<int>& coords) {
    if (static_cast<int>(coords.size()) != d) throw input_error("grid point arity mismatch");
    int idx = 0;
    for (int i = 0; i < d; ++i) {
        if (coords[i] < 1 || coords[i] > q) throw input_error("grid coordinate out of range");
        idx = idx * q + (coords[i] - 1);
    }
    return idx;
}

std::vector<int> ConvexitySpace::grid_coords(int q, int d, int index) {
    std::vector<int> coords(d);
    for (int i = d - 1; i >= 0; --i) {
        coords[i] = index % q + 1;
        index /= q;
    }
    return coords;
}

Mask ConvexitySpace::hull_uncached(Mask s) const {
    if (s == 0) return 0;
    if (kind_ == "free") return s;
    if (kind_ == "chain") {
        int lo = lowest_bit(s);
        int hi = 63 - std::countl_zero(s);
        return (full_mask(hi + 1)) & ~full_mask(lo);
    }
    if (kind_ == "grid") {
        // Fix exactly the coordinates on which all chosen points agree.
        auto pts = mask_to_indices(s);
        std::vector<int> fixed = grid_coords(q_, d_, pts[0]);  // 0 => free coordinate
        for (std::size_t i = 1; i < pts.size(); ++i) {
            auto c = grid_coords(q_, d_, pts[i]);
            for (int j = 0; j < d_; ++j)
                if (fixed[j] != c[j]) fixed[j] = 0;
        }
        Mask out = 0;
        for (int p = 0; p < n_; ++p) {
            auto c = grid_coords(q_, d_, p);
            bool ok = true;
            for (int j = 0; j < d_ && ok; ++j) ok = fixed[j] == 0 || fixed[j] == c[j];
            if (ok) out |= Mask{1} << p;
        }
        return out;
    }
    if (kind_ == "product") {
        const ConvexitySpace& a = *factors_[0];
        const ConvexitySpace& b = *factors_[1];
        const int nb = b.size();
        Mask proj_a = 0, proj_b = 0;
        for (int p : mask_to_indices(s)) {
            proj_a |= Mask{1} << (p / nb);
            proj_b |= Mask{1} << (p % nb);
        }
        Mask ha = a.hull(proj_a), hb = b.hull(proj_b);
        Mask out = 0;
        for (int ia : mask_to_indices(ha))
            for (int ib : mask_to_indices(hb)) out |= Mask{1} << (ia * nb + ib);
        return out;
    }
    // explicit
    const ConvexityFamily& fam = *cache_->family;
    return kernels::hull_scan(fam.sets.data(), fam.sets.size(), s, universe());
}

Mask ConvexitySpace::hull(Mask s) const {
    if ((s & ~universe()) != 0) throw input_error("hull: point index out of range");
    if (kind_ != "explicit") return hull_uncached(s);  // closed forms are cheap
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->hull_memo.find(s);
        if (it != cache_->hull_memo.end()) return it->second;
    }
    Mask h = hull_uncached(s);
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        if (cache_->hull_memo.size() < Cache::kMemoCap) cache_->hull_memo.emplace(s, h);
    }
    return h;
}

ConvexityFamily ConvexitySpace::materialize(std::size_t max_sets) const {
    ConvexityFamily fam;
    fam.n = n_;
    if (kind_ == "free") {
        if (n_ > 20 || (std::size_t{1} << n_) > max_sets)
            throw resource_error("free space family too large to materialize");
        for (Mask m = 0; m <= full_mask(n_); ++m) fam.sets.push_back(m);
        return fam;
    }
    if (kind_ == "chain") {
        fam.sets.push_back(0);
        for (int lo = 0; lo < n_; ++lo)
            for (int hi = lo; hi < n_; ++hi)
                fam.sets.push_back(full_mask(hi + 1) & ~full_mask(lo));
        fam.canonicalize();
        return fam;
    }
    if (kind_ == "grid") {
        // One set per (coordinate subset K, assignment on K); K empty gives X.
        fam.sets.push_back(0);
        for (int K = 0; K < (1 << d_); ++K) {
            std::vector<int> fixed(d_, 0);
            // Iterate all assignments over the coordinates in K.
            std::vector<int> coords_in_K;
            for (int j = 0; j < d_; ++j)
                if (K & (1 << j)) coords_in_K.push_back(j);
            std::vector<int> assign(coords_in_K.size(), 1);
            while (true) {
                for (std::size_t t = 0; t < coords_in_K.size(); ++t)
                    fixed[coords_in_K[t]] = assign[t];
                Mask set = 0;
                for (int p = 0; p < n_; ++p) {
                    auto c = grid_coords(q_, d_, p);
                    bool ok = true;
                    for (int j = 0; j < d_ && ok; ++j) ok = fixed[j] == 0 || fixed[j] == c[j];
                    if (ok) set |= Mask{1} << p;
                }
                fam.sets.push_back(set);
                // next assignment
                std::size_t t = 0;
                while (t < assign.size() && assign[t] == q_) assign[t++] = 1;
                if (t == assign.size()) break;
                ++assign[t];
            }
            for (int j = 0; j < d_; ++j) fixed[j] = 0;
            if (fam.sets.size() > max_sets)
                throw resource_error("grid family exceeds materialization budget");
        }
        fam.canonicalize();
        return fam;
    }
    if (kind_ == "product") {
        const ConvexityFamily& fa = factors_[0]->family(max_sets);
        const ConvexityFamily& fb = factors_[1]->family(max_sets);
        const int nb = factors_[1]->size();
        for (Mask a : fa.sets)
            for (Mask b : fb.sets) {
                Mask set = 0;
                for (int ia : mask_to_indices(a))
                    for (int ib : mask_to_indices(b)) set |= Mask{1} << (ia * nb + ib);
                fam.sets.push_back(set);
                if (fam.sets.size() > max_sets)
                    throw resource_error("product family exceeds materialization budget");
            }
        fam.canonicalize();
        return fam;
    }
    return *cache_->family;  // explicit
}

const ConvexityFamily& ConvexitySpace::family(std::size_t max_sets) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->family)
        cache_->family = std::make_shared<const ConvexityFamily>(materialize(max_sets));
    return *cache_->family;
}

bool ConvexitySpace::family_materialized() const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    return cache_->family != nullptr;
}

// ---------------------------------------------------------------------------

Mask PointConfig::support() const {
    Mask m = 0;
    for (int p : points) {
        if (p < 0 || p >= n) throw input_error("config point out of range");
        m |= Mask{1} << p;
    }
    return m;
}

std::map<int, int> PointConfig::multiplicities() const {
    std::map<int, int> mult;
    for (int p : points) ++mult[p];
    return mult;
}

void PointConfig::canonicalize() { std::sort(points.begin(), points.end()); }

bool PointConfig::operator<(const PointConfig& other) const {
    if (points.size() != other.points.size()) return points.size() < other.points.size();
    return points < other.points;
}

std::vector<Mask> grid_hyperplane_family(const ConvexitySpace& space) {
    if (space.kind() != "grid") throw input_error("hyperplane family requires a grid space");
    const int q = space.grid_q(), d = space.grid_d();
    std::vector<Mask> family;
    for (int coord = 0; coord < d; ++coord)
        for (int value = 1; value <= q; ++value) {
            Mask set = 0;
            for (int p = 0; p < space.size(); ++p)
                if (ConvexitySpace::grid_coords(q, d, p)[coord] == value) set |= Mask{1} << p;
            family.push_back(set);
        }
    return family;
}

Mask hull_multiset(const ConvexitySpace& space, const PointConfig& p) {
    if (p.points.empty()) throw input_error("hull_multiset: empty configuration");
    if (p.n != space.size()) throw input_error("hull_multiset: ground set mismatch");
    return space.hull(p.support());
}

}  // namespace ccs
