#include "spin4/builders.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace spin4 {

namespace {

std::vector<Simplex> maximal_simplices(const OrderedComplex& cx) {
    std::unordered_set<Simplex, SimplexHash> non_max;
    for (int d = 1; d <= cx.dim(); ++d)
        for (const Simplex& s : cx.simplices(d))
            for (int i = 0; i <= d; ++i) non_max.insert(s.face(i));
    std::vector<Simplex> out;
    for (int d = 0; d <= cx.dim(); ++d)
        for (const Simplex& s : cx.simplices(d))
            if (!non_max.count(s)) out.push_back(s);
    return out;
}

} // namespace

std::unique_ptr<OrderedComplex> build_simplex(int n) {
    if (n < 0) throw std::invalid_argument("build_simplex: n < 0");
    auto cx = std::make_unique<OrderedComplex>();
    std::vector<std::int32_t> all;
    for (int i = 0; i <= n; ++i) all.push_back(cx->add_vertex(i));
    cx->add_simplex(std::span<const std::int32_t>(all));
    cx->finalize();
    return cx;
}

std::unique_ptr<OrderedComplex> build_boundary_simplex(int n) {
    if (n < 1) throw std::invalid_argument("build_boundary_simplex: n < 1");
    auto cx = std::make_unique<OrderedComplex>();
    std::vector<std::int32_t> all;
    for (int i = 0; i <= n; ++i) all.push_back(cx->add_vertex(i));
    for (int omit = 0; omit <= n; ++omit) {
        std::vector<std::int32_t> f;
        for (int i = 0; i <= n; ++i)
            if (i != omit) f.push_back(all[std::size_t(i)]);
        cx->add_simplex(std::span<const std::int32_t>(f));
    }
    cx->finalize();
    return cx;
}

ProductResult product_triangulation(const OrderedComplex& a, const OrderedComplex& b) {
    // normalized dense ranks so the pair rank is lexicographic
    auto dense = [](const OrderedComplex& c) {
        std::map<int, int> seen;
        for (int v = 0; v < c.num_vertices(); ++v) {
            if (!seen.emplace(c.rank(v), 0).second)
                throw std::invalid_argument("product_triangulation: ranks not injective");
        }
        int i = 0;
        for (auto& [r, idx] : seen) idx = i++;
        std::vector<int> out(std::size_t(c.num_vertices()));
        for (int v = 0; v < c.num_vertices(); ++v) out[std::size_t(v)] = seen[c.rank(v)];
        return out;
    };
    std::vector<int> ra = dense(a), rb = dense(b);
    int nb = b.num_vertices();

    ProductResult res;
    res.complex = std::make_unique<OrderedComplex>();
    auto& cx = *res.complex;
    std::vector<std::int32_t> vid(std::size_t(a.num_vertices() * nb));
    for (int va = 0; va < a.num_vertices(); ++va)
        for (int vb = 0; vb < nb; ++vb) {
            std::int32_t id = cx.add_vertex(ra[std::size_t(va)] * nb + rb[std::size_t(vb)]);
            vid[std::size_t(va * nb + vb)] = id;
            res.vertex_pairs.emplace_back(va, vb);
        }

    // staircase chains over every cell pair; closure fills the faces
    std::vector<std::int32_t> path;
    auto emit = [&](const Simplex& sa, const Simplex& sb) {
        int p = sa.dim(), q = sb.dim();
        path.clear();
        // lattice paths from (0,0) to (p,q), one product vertex per lattice point
        std::vector<std::pair<int, int>> steps{{0, 0}};
        std::function<void()> rec = [&]() {
            auto [i, j] = steps.back();
            if (i == p && j == q) {
                path.clear();
                for (auto [x, y] : steps) path.push_back(vid[std::size_t(sa[x] * nb + sb[y])]);
                cx.add_simplex(std::span<const std::int32_t>(path));
                return;
            }
            if (i < p) { steps.emplace_back(i + 1, j); rec(); steps.pop_back(); }
            if (j < q) { steps.emplace_back(i, j + 1); rec(); steps.pop_back(); }
        };
        rec();
    };
    for (const Simplex& sa : maximal_simplices(a))
        for (const Simplex& sb : maximal_simplices(b)) emit(sa, sb);
    cx.finalize();

    res.pi1.source = &cx;
    res.pi1.target = &a;
    res.pi2.source = &cx;
    res.pi2.target = &b;
    for (auto [va, vb] : res.vertex_pairs) {
        res.pi1.vertex_assignment.push_back(va);
        res.pi2.vertex_assignment.push_back(vb);
    }
    return res;
}

BarycentricResult barycentric_subdivide(const OrderedComplex& cx) {
    BarycentricResult res;
    res.complex = std::make_unique<OrderedComplex>();
    auto& sd = *res.complex;
    std::unordered_map<Simplex, std::int32_t, SimplexHash> bary;
    for (int d = 0; d <= cx.dim(); ++d)
        for (const Simplex& s : cx.simplices(d)) {
            bary[s] = sd.add_vertex(d);
            res.vertex_cell.push_back(s);
        }
    // saturated flags inside each maximal simplex: one per vertex permutation
    for (const Simplex& top : maximal_simplices(cx)) {
        int k = top.size();
        std::vector<int> perm(static_cast<std::size_t>(k));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<std::int32_t> flag;
            std::vector<std::int32_t> verts;
            for (int i = 0; i < k; ++i) {
                verts.push_back(top[perm[std::size_t(i)]]);
                Simplex c = cx.canon(std::span<const std::int32_t>(verts));
                flag.push_back(bary[c]);
            }
            sd.add_simplex(std::span<const std::int32_t>(flag));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    sd.finalize();
    return res;
}

ConeResult cone(const OrderedComplex& cx) {
    ConeResult res;
    res.complex = std::make_unique<OrderedComplex>();
    auto& c = *res.complex;
    int maxr = 0;
    for (int v = 0; v < cx.num_vertices(); ++v) {
        c.add_vertex(cx.rank(v));
        maxr = std::max(maxr, cx.rank(v));
    }
    res.apex = c.add_vertex(maxr + 1);
    c.add_simplex({res.apex});
    for (int d = 0; d <= cx.dim(); ++d)
        for (const Simplex& s : cx.simplices(d)) {
            std::vector<std::int32_t> verts(s.v.begin(), s.v.begin() + s.n);
            c.add_simplex(std::span<const std::int32_t>(verts));
            verts.push_back(res.apex);
            c.add_simplex(std::span<const std::int32_t>(verts));
        }
    c.finalize();
    return res;
}

SuspensionResult suspension(const OrderedComplex& cx) {
    SuspensionResult res;
    res.complex = std::make_unique<OrderedComplex>();
    auto& c = *res.complex;
    int maxr = 0, minr = 0;
    for (int v = 0; v < cx.num_vertices(); ++v) {
        c.add_vertex(cx.rank(v));
        maxr = std::max(maxr, cx.rank(v));
        minr = std::min(minr, cx.rank(v));
    }
    res.upper = c.add_vertex(maxr + 1);
    res.lower = c.add_vertex(minr - 1);
    c.add_simplex({res.upper});
    c.add_simplex({res.lower});
    for (int d = 0; d <= cx.dim(); ++d)
        for (const Simplex& s : cx.simplices(d)) {
            std::vector<std::int32_t> verts(s.v.begin(), s.v.begin() + s.n);
            c.add_simplex(std::span<const std::int32_t>(verts));
            verts.push_back(res.upper);
            c.add_simplex(std::span<const std::int32_t>(verts));
            verts.back() = res.lower;
            c.add_simplex(std::span<const std::int32_t>(verts));
        }
    c.finalize();
    return res;
}

PrismResult prism(const OrderedComplex& bottom, const OrderedComplex& top) {
    if (bottom.num_vertices() != top.num_vertices())
        throw std::invalid_argument("prism: vertex sets differ");
    for (int d = 0; d <= std::max(bottom.dim(), top.dim()); ++d) {
        if (bottom.count(d) != top.count(d))
            throw std::invalid_argument("prism: underlying complexes differ");
        for (const Simplex& s : bottom.simplices(d)) {
            std::vector<std::int32_t> verts(s.v.begin(), s.v.begin() + s.n);
            if (!top.contains(top.canon(std::span<const std::int32_t>(verts))))
                throw std::invalid_argument("prism: underlying complexes differ");
        }
    }
    int nv = bottom.num_vertices();
    int maxb = 0, mint = 0;
    for (int v = 0; v < nv; ++v) maxb = std::max(maxb, bottom.rank(v));
    for (int v = 0; v < nv; ++v) mint = std::min(mint, top.rank(v));
    int shift = maxb + 1 - mint;

    PrismResult res;
    res.complex = std::make_unique<OrderedComplex>();
    auto& c = *res.complex;
    for (int v = 0; v < nv; ++v) c.add_vertex(bottom.rank(v));
    for (int v = 0; v < nv; ++v) c.add_vertex(top.rank(v) + shift);

    for (const Simplex& s : maximal_simplices(bottom)) {
        int k = s.size();
        for (int i = 0; i < k; ++i) {
            std::vector<std::int32_t> verts;
            for (int j = 0; j <= i; ++j) verts.push_back(s[j]);
            for (int j = i; j < k; ++j) verts.push_back(s[j] + nv);
            c.add_simplex(std::span<const std::int32_t>(verts));
        }
    }
    c.finalize();

    res.incl0.source = &bottom;
    res.incl0.target = &c;
    res.incl1.source = &top;
    res.incl1.target = &c;
    for (int v = 0; v < nv; ++v) {
        res.incl0.vertex_assignment.push_back(v);
        res.incl1.vertex_assignment.push_back(v + nv);
    }
    return res;
}

NeighborhoodResult regular_neighborhood(const OrderedComplex& cx,
                                        const std::unordered_set<std::int32_t>& core_vertices) {
    std::unordered_set<Simplex, SimplexHash> in_v;
    // closed simplices meeting the core, with all faces
    for (int d = cx.dim(); d >= 0; --d)
        for (const Simplex& s : cx.simplices(d)) {
            bool meets = false;
            for (int i = 0; i < s.size(); ++i)
                if (core_vertices.count(s[i])) { meets = true; break; }
            if (meets) in_v.insert(s);
        }
    // closure
    {
        std::vector<Simplex> stack(in_v.begin(), in_v.end());
        while (!stack.empty()) {
            Simplex s = stack.back();
            stack.pop_back();
            if (s.dim() == 0) continue;
            for (int i = 0; i < s.size(); ++i) {
                Simplex f = s.face(i);
                if (in_v.insert(f).second) stack.push_back(f);
            }
        }
    }

    NeighborhoodResult res;
    res.V = std::make_unique<OrderedComplex>();
    res.bdV = std::make_unique<OrderedComplex>();
    for (int v = 0; v < cx.num_vertices(); ++v) {
        res.V->add_vertex(cx.rank(v));
        res.bdV->add_vertex(cx.rank(v));
    }
    for (const Simplex& s : in_v) {
        std::vector<std::int32_t> verts(s.v.begin(), s.v.begin() + s.n);
        res.V->add_simplex(std::span<const std::int32_t>(verts));
        bool touches_core = false;
        for (int i = 0; i < s.size(); ++i)
            if (core_vertices.count(s[i])) { touches_core = true; break; }
        if (!touches_core) res.bdV->add_simplex(std::span<const std::int32_t>(verts));
    }
    res.V->finalize();
    res.bdV->finalize();

    res.vertex_layer.assign(std::size_t(cx.num_vertices()), 2);
    for (int v = 0; v < cx.num_vertices(); ++v) {
        Simplex pt{v};
        if (core_vertices.count(v))
            res.vertex_layer[std::size_t(v)] = 0;
        else if (in_v.count(pt))
            res.vertex_layer[std::size_t(v)] = 1;
    }
    res.inclV.source = res.V.get();
    res.inclV.target = &cx;
    res.incl_bdV.source = res.bdV.get();
    res.incl_bdV.target = &cx;
    for (int v = 0; v < cx.num_vertices(); ++v) {
        res.inclV.vertex_assignment.push_back(v);
        res.incl_bdV.vertex_assignment.push_back(v);
    }
    return res;
}

std::unique_ptr<OrderedComplex> reorder_vertices(const OrderedComplex& cx,
                                                 const std::vector<int>& new_rank) {
    if (int(new_rank.size()) != cx.num_vertices())
        throw std::invalid_argument("reorder_vertices: wrong rank vector size");
    auto out = std::make_unique<OrderedComplex>();
    for (int v = 0; v < cx.num_vertices(); ++v) out->add_vertex(new_rank[std::size_t(v)]);
    for (int d = 0; d <= cx.dim(); ++d)
        for (const Simplex& s : cx.simplices(d)) {
            std::vector<std::int32_t> verts(s.v.begin(), s.v.begin() + s.n);
            out->add_simplex(std::span<const std::int32_t>(verts));
        }
    out->finalize();
    return out;
}

RpnResult build_rp_n(int n) {
    if (n < 1) throw std::invalid_argument("build_rp_n: n < 1");
    // boundary of the (n+1)-dimensional cross-polytope: vertices +-e_i,
    // id = axis + sign*(n+1), rank = axis
    OrderedComplex cp;
    for (int sgn = 0; sgn < 2; ++sgn)
        for (int axis = 0; axis <= n; ++axis) cp.add_vertex(axis);
    auto cp_id = [n](int axis, int sgn) { return std::int32_t(sgn * (n + 1) + axis); };
    int ntop = 1 << (n + 1);
    for (int mask = 0; mask < ntop; ++mask) {
        std::vector<std::int32_t> verts;
        for (int axis = 0; axis <= n; ++axis) verts.push_back(cp_id(axis, (mask >> axis) & 1));
        cp.add_simplex(std::span<const std::int32_t>(verts));
    }
    cp.finalize();

    BarycentricResult bc = barycentric_subdivide(cp);
    const OrderedComplex& bary = *bc.complex;
    std::unordered_map<Simplex, std::int32_t, SimplexHash> cell_vertex;
    for (std::size_t i = 0; i < bc.vertex_cell.size(); ++i)
        cell_vertex[bc.vertex_cell[i]] = std::int32_t(i);

    auto antipode_cell = [&](const Simplex& c) {
        std::vector<std::int32_t> verts;
        for (int i = 0; i < c.size(); ++i) {
            std::int32_t v = c[i];
            verts.push_back(v < n + 1 ? v + n + 1 : v - n - 1);
        }
        return cp.canon(std::span<const std::int32_t>(verts));
    };

    // orbit representatives and quotient vertex ids
    RpnResult res;
    res.complex = std::make_unique<OrderedComplex>();
    auto& q = *res.complex;
    std::vector<std::int32_t> orbit_of(std::size_t(bary.num_vertices()), -1);
    std::vector<Simplex> rep_cell;
    for (int v = 0; v < bary.num_vertices(); ++v) {
        if (orbit_of[std::size_t(v)] >= 0) continue;
        std::int32_t w = cell_vertex.at(antipode_cell(bc.vertex_cell[std::size_t(v)]));
        std::int32_t id = q.add_vertex(bary.rank(v));
        orbit_of[std::size_t(v)] = id;
        orbit_of[std::size_t(w)] = id;
        rep_cell.push_back(bc.vertex_cell[std::size_t(std::min(v, w))]);
    }
    for (int d = 0; d <= bary.dim(); ++d)
        for (const Simplex& s : bary.simplices(d)) {
            std::vector<std::int32_t> verts;
            for (int i = 0; i < s.size(); ++i) verts.push_back(orbit_of[std::size_t(s[i])]);
            q.add_simplex(std::span<const std::int32_t>(verts));
        }
    q.finalize();

    // deck-transformation descent cocycle: on an edge (x,y) with rep cells
    // cx < cy by dimension, value 0 if cx is a face of cy, 1 if of its antipode
    auto is_face = [](const Simplex& small, const Simplex& big) {
        int j = 0;
        for (int i = 0; i < small.size(); ++i) {
            while (j < big.size() && big[j] != small[i]) ++j;
            if (j == big.size()) return false;
            ++j;
        }
        return true;
    };
    for (const Simplex& e : q.simplices(1)) {
        const Simplex& cl = rep_cell[std::size_t(e[0])];
        const Simplex& ch = rep_cell[std::size_t(e[1])];
        // sort cells so the deck value is well defined: compare as unordered
        Simplex a = cl.size() < ch.size() ? cl : ch;
        Simplex b = cl.size() < ch.size() ? ch : cl;
        if (is_face(a, b)) continue;           // value 0, omit
        res.deck_cocycle_support.emplace_back(e, 1);
    }
    return res;
}

SimplicialMap collapse_map(const OrderedComplex& layered,
                           const std::vector<char>& vertex_layer,
                           const OrderedComplex& susp,
                           const std::vector<std::int32_t>& frontier_to_susp,
                           std::int32_t lower_pole, std::int32_t upper_pole) {
    SimplicialMap g;
    g.source = &layered;
    g.target = &susp;
    for (int v = 0; v < layered.num_vertices(); ++v) {
        switch (vertex_layer[std::size_t(v)]) {
            case 0: g.vertex_assignment.push_back(lower_pole); break;
            case 1: g.vertex_assignment.push_back(frontier_to_susp[std::size_t(v)]); break;
            default: g.vertex_assignment.push_back(upper_pole); break;
        }
    }
    return g;
}

} // namespace spin4
