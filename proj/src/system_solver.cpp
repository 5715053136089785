#include "bfre/system_solver.hpp"

#include <algorithm>
#include <bit>
#include <thread>

namespace bfre {

namespace {

void check_width(std::size_t m, unsigned cap) {
    if (m > 62)
        throw ResourceLimitError("m = " + std::to_string(m) +
                                 " exceeds the 62-column partition mask limit");
    if (m > cap)
        throw ResourceLimitError("m = " + std::to_string(m) + " exceeds enumeration cap " +
                                 std::to_string(cap) + " (raise the cap to proceed)");
}

// Per-row bit tables over columns (bit j-1 is column j), so that one
// partition test is a handful of word operations. A partition
// (j_plus = jp, j_minus = complement) is feasible iff for every row i:
//   b_i = 0:  jp within zero_plus[i] and complement within zero_minus[i]
//   b_i > 0:  complement within bound_minus[i], and jp meets
//             cover_plus[i] or the complement meets cover_minus[i]
// cover_plus marks columns whose residuum with b_i attains the column
// minimum (a positive coordinate there reaches b_i exactly);
// cover_minus marks columns with a_minus = b_i (a zero coordinate there
// reaches b_i); bound_minus marks columns whose a_minus does not
// overshoot b_i when the coordinate is zero.
struct Tables {
    std::size_t m = 0;
    std::size_t n = 0;
    std::uint64_t full = 0;
    std::vector<std::uint64_t> zero_plus, zero_minus, bound_minus, cover_plus, cover_minus;
    std::vector<char> b_zero;

    bool feasible(std::uint64_t jp) const {
        const std::uint64_t jm = ~jp & full;
        for (std::size_t i = 0; i < n; ++i) {
            if (b_zero[i]) {
                if ((jp & ~zero_plus[i]) || (jm & ~zero_minus[i])) return false;
            } else {
                if (jm & ~bound_minus[i]) return false;
                if (!(jp & cover_plus[i]) && !(jm & cover_minus[i])) return false;
            }
        }
        return true;
    }
};

std::vector<Scalar> column_residuum_minima(const BipolarSystem& sys) {
    std::vector<Scalar> minres(sys.cols(), Scalar::one());
    for (std::size_t j = 0; j < sys.cols(); ++j)
        for (std::size_t h = 0; h < sys.rows(); ++h) {
            Scalar r = residuum(sys.b(h), sys.a_plus(h, j));
            if (r < minres[j]) minres[j] = r;
        }
    return minres;
}

Tables build_tables(const BipolarSystem& sys) {
    Tables t;
    t.m = sys.cols();
    t.n = sys.rows();
    t.full = (std::uint64_t{1} << t.m) - 1;
    t.zero_plus.assign(t.n, 0);
    t.zero_minus.assign(t.n, 0);
    t.bound_minus.assign(t.n, 0);
    t.cover_plus.assign(t.n, 0);
    t.cover_minus.assign(t.n, 0);
    t.b_zero.assign(t.n, 0);

    std::vector<Scalar> minres = column_residuum_minima(sys);

    for (std::size_t i = 0; i < t.n; ++i) {
        const Scalar& bi = sys.b(i);
        t.b_zero[i] = bi.is_zero();
        for (std::size_t j = 0; j < t.m; ++j) {
            const std::uint64_t bit = std::uint64_t{1} << j;
            if (sys.a_plus(i, j).is_zero()) t.zero_plus[i] |= bit;
            if (sys.a_minus(i, j).is_zero()) t.zero_minus[i] |= bit;
            if (t.b_zero[i]) continue;
            if (sys.a_minus(i, j) <= bi) t.bound_minus[i] |= bit;
            if (sys.a_minus(i, j) == bi) t.cover_minus[i] |= bit;
            if (sys.a_plus(i, j) >= bi && residuum(bi, sys.a_plus(i, j)) == minres[j])
                t.cover_plus[i] |= bit;
        }
    }
    return t;
}

std::vector<std::uint64_t> sweep(const Tables& t, std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> hits;
    for (std::uint64_t jp = lo; jp < hi; ++jp)
        if (t.feasible(jp)) hits.push_back(jp);
    return hits;
}

std::string format_index_set(const std::vector<std::size_t>& indices) {
    std::string out = "{";
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(indices[i]);
    }
    return out + "}";
}

Assignment construct_from_mask(const BipolarSystem& sys, std::uint64_t jp) {
    return construct_solution(sys, mask_to_indices(jp, sys.cols()));
}

LowerDescription lower_from_family(const BipolarSystem& sys, const FeasibleFamily& family,
                                   const SolverOptions& opts,
                                   std::vector<std::string>* diagnostics) {
    const std::uint64_t full = (std::uint64_t{1} << family.m) - 1;

    // j_plus = empty feasible means the zero tuple solves the system
    if (!family.masks.empty() && family.masks.front() == 0)
        return {LowerDescription::Kind::least, {Assignment(family.m, Scalar::zero())}};

    // maximal j_minus members are complements of minimal j_plus members
    std::vector<std::uint64_t> jm_masks;
    for (std::uint64_t jp : minimal_masks(family.masks)) jm_masks.push_back(~jp & full);
    std::sort(jm_masks.begin(), jm_masks.end());

    std::vector<Assignment> tuples;
    for (std::uint64_t jm : jm_masks) {
        auto j_minus = mask_to_indices(jm, family.m);
        if (unique_solution_check(reduced_system(sys, j_minus), opts)) {
            tuples.push_back(construct_from_mask(sys, ~jm & full));
        } else if (diagnostics) {
            diagnostics->push_back("maximal j_minus " + format_index_set(j_minus) +
                                   ": reduced system does not have a unique solution; "
                                   "it contributes no minimal solution");
        }
    }
    if (tuples.empty()) return {LowerDescription::Kind::no_minimal_elements, {}};
    return {LowerDescription::Kind::finite_minimals, std::move(tuples)};
}

} // namespace

std::vector<std::size_t> mask_to_indices(std::uint64_t mask, std::size_t m) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < m; ++j)
        if (mask & (std::uint64_t{1} << j)) out.push_back(j + 1);
    return out;
}

std::uint64_t indices_to_mask(const std::vector<std::size_t>& indices, std::size_t m) {
    std::uint64_t mask = 0;
    for (std::size_t j : indices) {
        if (j < 1 || j > m)
            throw DimensionError("column index " + std::to_string(j) + " outside 1.." +
                                 std::to_string(m));
        const std::uint64_t bit = std::uint64_t{1} << (j - 1);
        if (mask & bit) throw DimensionError("column index " + std::to_string(j) + " repeated");
        mask |= bit;
    }
    return mask;
}

std::vector<FeasiblePair> FeasibleFamily::pairs() const {
    const std::uint64_t full = (std::uint64_t{1} << m) - 1;
    std::vector<FeasiblePair> out;
    out.reserve(masks.size());
    for (std::uint64_t jp : masks)
        out.push_back({mask_to_indices(jp, m), mask_to_indices(~jp & full, m)});
    return out;
}

bool is_feasible_pair(const BipolarSystem& sys, const FeasiblePair& pair) {
    const std::size_t m = sys.cols();
    std::vector<char> seen(m, 0);
    auto mark = [&](const std::vector<std::size_t>& side) {
        for (std::size_t j : side) {
            if (j < 1 || j > m)
                throw DimensionError("column index " + std::to_string(j) + " outside 1.." +
                                     std::to_string(m));
            if (seen[j - 1])
                throw DimensionError("column index " + std::to_string(j) +
                                     " appears twice in the pair");
            seen[j - 1] = 1;
        }
    };
    mark(pair.j_plus);
    mark(pair.j_minus);
    if (pair.j_plus.size() + pair.j_minus.size() != m)
        throw DimensionError("pair does not cover all " + std::to_string(m) + " columns");

    std::vector<Scalar> minres = column_residuum_minima(sys);
    for (std::size_t i = 0; i < sys.rows(); ++i) {
        const Scalar& bi = sys.b(i);
        if (bi.is_zero()) {
            for (std::size_t j : pair.j_plus)
                if (!sys.a_plus(i, j - 1).is_zero()) return false;
            for (std::size_t j : pair.j_minus)
                if (!sys.a_minus(i, j - 1).is_zero()) return false;
            continue;
        }
        bool covered = false;
        for (std::size_t j : pair.j_minus) {
            if (!(sys.a_minus(i, j - 1) <= bi)) return false;
            if (sys.a_minus(i, j - 1) == bi) covered = true;
        }
        if (!covered)
            for (std::size_t j : pair.j_plus) {
                if (sys.a_plus(i, j - 1) >= bi &&
                    residuum(bi, sys.a_plus(i, j - 1)) == minres[j - 1]) {
                    covered = true;
                    break;
                }
            }
        if (!covered) return false;
    }
    return true;
}

FeasibleFamily enumerate_feasible_pairs(const BipolarSystem& sys, const SolverOptions& opts) {
    check_width(sys.cols(), opts.cap);
    const Tables t = build_tables(sys);
    const std::uint64_t total = std::uint64_t{1} << sys.cols();

    unsigned workers = opts.threads ? opts.threads : 1;
    if (std::uint64_t{workers} > total) workers = static_cast<unsigned>(total);

    FeasibleFamily family;
    family.m = sys.cols();
    if (workers <= 1) {
        family.masks = sweep(t, 0, total);
        return family;
    }

    const std::uint64_t chunk = total / workers;
    std::vector<std::vector<std::uint64_t>> buckets(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = w * chunk;
        const std::uint64_t hi = (w + 1 == workers) ? total : lo + chunk;
        pool.emplace_back([&t, &buckets, w, lo, hi] { buckets[w] = sweep(t, lo, hi); });
    }
    for (auto& th : pool) th.join();
    for (auto& bucket : buckets)
        family.masks.insert(family.masks.end(), bucket.begin(), bucket.end());
    return family;
}

bool solvable_system(const BipolarSystem& sys, const SolverOptions& opts) {
    check_width(sys.cols(), opts.cap);
    const Tables t = build_tables(sys);
    const std::uint64_t total = std::uint64_t{1} << sys.cols();
    for (std::uint64_t jp = 0; jp < total; ++jp)
        if (t.feasible(jp)) return true;
    return false;
}

Assignment construct_solution(const BipolarSystem& sys, const std::vector<std::size_t>& j_plus) {
    indices_to_mask(j_plus, sys.cols()); // validates range and uniqueness
    Assignment x(sys.cols(), Scalar::zero());
    for (std::size_t j : j_plus) {
        Scalar v = Scalar::one();
        for (std::size_t h = 0; h < sys.rows(); ++h) {
            Scalar r = residuum(sys.b(h), sys.a_plus(h, j - 1));
            if (r < v) v = r;
        }
        x[j - 1] = std::move(v);
    }
    return x;
}

std::vector<std::uint64_t> maximal_masks(std::vector<std::uint64_t> masks) {
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::stable_sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
        return std::popcount(a) > std::popcount(b);
    });
    std::vector<std::uint64_t> out;
    for (std::uint64_t x : masks) {
        bool dominated = std::any_of(out.begin(), out.end(),
                                     [x](std::uint64_t o) { return (x & o) == x; });
        if (!dominated) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> minimal_masks(std::vector<std::uint64_t> masks) {
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::stable_sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
        return std::popcount(a) < std::popcount(b);
    });
    std::vector<std::uint64_t> out;
    for (std::uint64_t x : masks) {
        bool dominated = std::any_of(out.begin(), out.end(),
                                     [x](std::uint64_t o) { return (x & o) == o; });
        if (!dominated) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Assignment> greatest_system(const BipolarSystem& sys, const SolverOptions& opts) {
    FeasibleFamily family = enumerate_feasible_pairs(sys, opts);
    if (family.empty()) throw ContractError("system is unsolvable");
    std::vector<std::uint64_t> tops = maximal_masks(family.masks);
    if (tops.size() != 1) return std::nullopt;
    return construct_from_mask(sys, tops.front());
}

std::vector<Assignment> maximal_solutions(const BipolarSystem& sys, const SolverOptions& opts) {
    FeasibleFamily family = enumerate_feasible_pairs(sys, opts);
    if (family.empty()) throw ContractError("system is unsolvable");
    std::vector<Assignment> out;
    for (std::uint64_t jp : maximal_masks(family.masks)) out.push_back(construct_from_mask(sys, jp));
    return out;
}

ReducedSystem reduced_system(const BipolarSystem& sys, const std::vector<std::size_t>& j_minus) {
    std::vector<char> dropped(sys.cols(), 0);
    for (std::size_t j : j_minus) {
        if (j < 1 || j > sys.cols())
            throw DimensionError("column index " + std::to_string(j) + " outside 1.." +
                                 std::to_string(sys.cols()));
        if (dropped[j - 1])
            throw DimensionError("column index " + std::to_string(j) + " repeated");
        dropped[j - 1] = 1;
    }

    ReducedSystem red;
    for (std::size_t j = 0; j < sys.cols(); ++j)
        if (!dropped[j]) red.column_map.push_back(j + 1);

    for (std::size_t i = 0; i < sys.rows(); ++i) {
        bool keep = sys.b(i).is_zero();
        if (!keep) {
            keep = true;
            for (std::size_t j : j_minus)
                if (!(sys.a_minus(i, j - 1) < sys.b(i))) {
                    keep = false;
                    break;
                }
        }
        if (!keep) continue;
        red.row_map.push_back(i + 1);
        std::vector<Scalar> rp, rm;
        rp.reserve(red.column_map.size());
        rm.reserve(red.column_map.size());
        for (std::size_t j : red.column_map) {
            rp.push_back(sys.a_plus(i, j - 1));
            rm.push_back(sys.a_minus(i, j - 1));
        }
        red.a_plus.push_back(std::move(rp));
        red.a_minus.push_back(std::move(rm));
        red.b.push_back(sys.b(i));
    }
    return red;
}

bool unique_solution_check(const ReducedSystem& reduced, const SolverOptions& opts) {
    const std::size_t nr = reduced.row_map.size();
    const std::size_t mr = reduced.column_map.size();

    // no equations left: any tuple over the remaining columns solves
    if (nr == 0) return mr == 0;
    // no columns left: the empty tuple is the one candidate
    if (mr == 0)
        return std::all_of(reduced.b.begin(), reduced.b.end(),
                           [](const Scalar& b) { return b.is_zero(); });

    check_width(mr, opts.cap);
    const BipolarSystem base(reduced.a_plus, reduced.a_minus, reduced.b);
    const Tables t = build_tables(base);
    const std::uint64_t total = std::uint64_t{1} << mr;

    std::uint64_t kp = 0;
    int found = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask)
        if (t.feasible(mask)) {
            if (++found == 2) return false; // two support patterns, two solutions
            kp = mask;
        }
    if (found == 0) return false; // nothing to be unique

    // top of the solution set on the surviving support
    std::vector<Scalar> top(mr, Scalar::zero());
    for (std::size_t j = 0; j < mr; ++j) {
        if (!(kp & (std::uint64_t{1} << j))) continue;
        Scalar v = Scalar::one();
        for (std::size_t i = 0; i < nr; ++i) {
            Scalar r = residuum(base.b(i), base.a_plus(i, j));
            if (r < v) v = r;
        }
        top[j] = std::move(v);
    }

    // Every positive column must be pinned by a row it covers alone;
    // otherwise that coordinate can slide down and uniqueness fails.
    std::vector<char> pinned(mr, 0);
    for (std::size_t i = 0; i < nr; ++i) {
        if (base.b(i).is_zero()) continue;
        Scalar ci = Scalar::zero();
        for (std::size_t j = 0; j < mr; ++j)
            if (!(kp & (std::uint64_t{1} << j)) && ci < base.a_minus(i, j))
                ci = base.a_minus(i, j);
        if (!(ci < base.b(i))) continue; // row already covered by a zero column
        std::size_t hits = 0;
        std::size_t last = 0;
        for (std::size_t j = 0; j < mr; ++j) {
            if (!(kp & (std::uint64_t{1} << j))) continue;
            if (tnorm(base.a_plus(i, j), top[j]) == base.b(i)) {
                ++hits;
                last = j;
            }
        }
        if (hits == 1) pinned[last] = 1;
    }
    for (std::size_t j = 0; j < mr; ++j)
        if ((kp & (std::uint64_t{1} << j)) && !pinned[j]) return false;
    return true;
}

LowerDescription lower_system(const BipolarSystem& sys, const SolverOptions& opts,
                              std::vector<std::string>* diagnostics) {
    FeasibleFamily family = enumerate_feasible_pairs(sys, opts);
    if (family.empty()) throw ContractError("system is unsolvable");
    return lower_from_family(sys, family, opts, diagnostics);
}

SolutionSummary summarize(const BipolarSystem& sys, const SolverOptions& opts) {
    SolutionSummary s;
    FeasibleFamily family = enumerate_feasible_pairs(sys, opts);
    s.pairs = family.pairs();
    s.solvable = !family.empty();
    if (!s.solvable) return s;

    std::vector<std::uint64_t> tops = maximal_masks(family.masks);
    if (tops.size() == 1) s.greatest = construct_from_mask(sys, tops.front());
    s.maximal.reserve(tops.size());
    for (std::uint64_t jp : tops) s.maximal.push_back(construct_from_mask(sys, jp));

    s.lower = lower_from_family(sys, family, opts, &s.diagnostics);
    return s;
}

} // namespace bfre
