#include "spin4/complex.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace spin4 {

std::int32_t OrderedComplex::add_vertex(int rank) {
    if (finalized_) throw std::logic_error("OrderedComplex: add_vertex after finalize");
    rank_.push_back(rank);
    return std::int32_t(rank_.size() - 1);
}

Simplex OrderedComplex::canon(std::span<const std::int32_t> verts) const {
    Simplex s(verts);
    std::sort(s.v.begin(), s.v.begin() + s.n, [&](std::int32_t a, std::int32_t b) {
        if (rank_[std::size_t(a)] != rank_[std::size_t(b)]) return rank_[std::size_t(a)] < rank_[std::size_t(b)];
        return a < b;
    });
    for (int i = 0; i + 1 < s.size(); ++i) {
        if (s[i] == s[i + 1]) throw std::invalid_argument("simplex has a repeated vertex");
        if (rank_[std::size_t(s[i])] == rank_[std::size_t(s[i + 1])])
            throw std::invalid_argument("simplex vertices share a rank");
    }
    return s;
}

Simplex OrderedComplex::canon(std::initializer_list<std::int32_t> verts) const {
    std::vector<std::int32_t> v(verts);
    return canon(std::span<const std::int32_t>(v));
}

void OrderedComplex::add_simplex(std::span<const std::int32_t> verts) {
    if (finalized_) throw std::logic_error("OrderedComplex: add_simplex after finalize");
    if (verts.empty()) return;
    Simplex top = canon(verts);
    // close over faces: walk subsets via a stack, skipping already-present ones
    std::vector<Simplex> stack{top};
    while (!stack.empty()) {
        Simplex s = stack.back();
        stack.pop_back();
        auto [it, fresh] = index_.try_emplace(s, -1);
        if (!fresh) continue;
        int d = s.dim();
        if (int(by_dim_.size()) <= d) by_dim_.resize(std::size_t(d) + 1);
        by_dim_[std::size_t(d)].push_back(s);
        if (d > 0)
            for (int i = 0; i <= d; ++i) stack.push_back(s.face(i));
    }
}

void OrderedComplex::add_simplex(std::initializer_list<std::int32_t> verts) {
    std::vector<std::int32_t> v(verts);
    add_simplex(std::span<const std::int32_t>(v));
}

void OrderedComplex::finalize() {
    if (finalized_) return;
    for (auto& lst : by_dim_) {
        std::sort(lst.begin(), lst.end(), [&](const Simplex& a, const Simplex& b) {
            for (int i = 0; i < a.size() && i < b.size(); ++i) {
                int ra = rank_[std::size_t(a[i])], rb = rank_[std::size_t(b[i])];
                if (ra != rb) return ra < rb;
                if (a[i] != b[i]) return a[i] < b[i];
            }
            return a.n < b.n;
        });
        for (std::size_t i = 0; i < lst.size(); ++i) index_[lst[i]] = std::int32_t(i);
    }
    finalized_ = true;
}

const std::vector<Simplex>& OrderedComplex::simplices(int d) const {
    static const std::vector<Simplex> kEmpty;
    if (d < 0 || d >= int(by_dim_.size())) return kEmpty;
    return by_dim_[std::size_t(d)];
}

std::size_t OrderedComplex::count(int d) const { return simplices(d).size(); }

std::size_t OrderedComplex::total_simplices() const {
    std::size_t t = 0;
    for (auto& lst : by_dim_) t += lst.size();
    return t;
}

std::int32_t OrderedComplex::index_of(const Simplex& s) const {
    auto it = index_.find(s);
    return it == index_.end() ? -1 : it->second;
}

void OrderedComplex::validate() const {
    if (!finalized_) throw std::logic_error("validate: complex not finalized");
    for (int d = 0; d <= dim(); ++d) {
        for (const Simplex& s : simplices(d)) {
            if (s.dim() != d) throw std::logic_error("validate: dimension bucket mismatch");
            for (int i = 0; i + 1 < s.size(); ++i)
                if (rank(s[i]) >= rank(s[i + 1]))
                    throw std::logic_error("validate: vertex ranks not strictly increasing");
            if (s.has_repeat()) throw std::logic_error("validate: repeated vertex");
            if (d > 0)
                for (int i = 0; i <= d; ++i)
                    if (!contains(s.face(i))) throw std::logic_error("validate: closure violated");
        }
    }
}

long long OrderedComplex::euler_characteristic() const {
    long long chi = 0;
    for (int d = 0; d <= dim(); ++d) chi += (d % 2 == 0 ? 1 : -1) * (long long)count(d);
    return chi;
}

SimplicialMap::Image SimplicialMap::apply(const Simplex& s) const {
    std::vector<std::int32_t> img;
    img.reserve(std::size_t(s.size()));
    for (int i = 0; i < s.size(); ++i) img.push_back(vertex_assignment[std::size_t(s[i])]);
    std::sort(img.begin(), img.end(), [&](std::int32_t a, std::int32_t b) {
        if (target->rank(a) != target->rank(b)) return target->rank(a) < target->rank(b);
        return a < b;
    });
    Image out;
    out.degenerate = std::adjacent_find(img.begin(), img.end()) != img.end();
    img.erase(std::unique(img.begin(), img.end()), img.end());
    out.simplex = Simplex(std::span<const std::int32_t>(img));
    return out;
}

void SimplicialMap::validate() const {
    if (!source || !target) throw std::logic_error("SimplicialMap: missing endpoints");
    if (int(vertex_assignment.size()) != source->num_vertices())
        throw std::logic_error("SimplicialMap: wrong assignment size");
    for (int d = 0; d <= source->dim(); ++d) {
        for (const Simplex& s : source->simplices(d)) {
            // weak monotonicity in target rank along the source-canonical order
            for (int i = 0; i + 1 < s.size(); ++i) {
                std::int32_t u = vertex_assignment[std::size_t(s[i])];
                std::int32_t w = vertex_assignment[std::size_t(s[i + 1])];
                if (target->rank(u) > target->rank(w))
                    throw std::logic_error("SimplicialMap: not weakly order preserving on " + s.str());
            }
            Image im = apply(s);
            if (!target->contains(im.simplex))
                throw std::logic_error("SimplicialMap: image not a simplex for " + s.str());
        }
    }
}

FundamentalChain FundamentalChain::negated() const {
    FundamentalChain c = *this;
    for (auto& s : c.signs) s = std::int8_t(-s);
    return c;
}

std::unordered_map<Simplex, long long, SimplexHash> FundamentalChain::boundary() const {
    std::unordered_map<Simplex, long long, SimplexHash> out;
    const auto& tops = complex->simplices(degree);
    for (std::size_t i = 0; i < tops.size(); ++i) {
        if (!signs[i]) continue;
        for (int j = 0; j <= degree; ++j) {
            long long c = (j % 2 == 0 ? 1 : -1) * (long long)signs[i];
            auto [it, fresh] = out.try_emplace(tops[i].face(j), 0);
            it->second += c;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

OrientResult orient(const OrderedComplex& cx,
                    std::optional<std::pair<Simplex, int>> normalization) {
    int d = cx.dim();
    if (d < 0 || cx.count(d) == 0) throw std::invalid_argument("orient: empty complex");
    const auto& tops = cx.simplices(d);
    // facet -> list of (top index, position of omitted vertex)
    std::unordered_map<Simplex, std::vector<std::pair<std::int32_t, int>>, SimplexHash> cofaces;
    for (std::size_t i = 0; i < tops.size(); ++i)
        for (int j = 0; j <= d; ++j)
            cofaces[tops[i].face(j)].emplace_back(std::int32_t(i), j);
    for (auto& [f, lst] : cofaces)
        if (lst.size() > 2) throw std::invalid_argument("orient: not a pseudo-manifold at " + f.str());

    OrientResult res;
    res.chain.complex = &cx;
    res.chain.degree = d;
    res.chain.signs.assign(tops.size(), 0);
    auto& sg = res.chain.signs;

    for (std::size_t seed = 0; seed < tops.size(); ++seed) {
        if (sg[seed]) continue;
        sg[seed] = 1;
        std::deque<std::int32_t> queue{std::int32_t(seed)};
        while (!queue.empty()) {
            std::int32_t i = queue.front();
            queue.pop_front();
            for (int j = 0; j <= d; ++j) {
                const auto& lst = cofaces[tops[std::size_t(i)].face(j)];
                for (auto [k, jk] : lst) {
                    if (k == i) continue;
                    // induced facet signs must cancel
                    int want = -((j % 2 ? -1 : 1) * sg[std::size_t(i)]) * (jk % 2 ? -1 : 1);
                    if (!sg[std::size_t(k)]) {
                        sg[std::size_t(k)] = std::int8_t(want);
                        queue.push_back(k);
                    } else if (sg[std::size_t(k)] != want) {
                        return res;  // orientable stays false
                    }
                }
            }
        }
    }
    res.orientable = true;
    if (normalization) {
        std::int32_t i = cx.index_of(normalization->first);
        if (i < 0 || tops[std::size_t(i)].dim() != d)
            throw std::invalid_argument("orient: normalization simplex not top-dimensional");
        if (sg[std::size_t(i)] != normalization->second)
            res.chain = res.chain.negated();
    }
    return res;
}

} // namespace spin4
