#include "spin4/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace spin4 {

GF2Dense::GF2Dense(int rows, int cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_((size_t)rows * words_, 0) {}

bool GF2Dense::get(int r, int c) const { return (row(r)[c >> 6] >> (c & 63)) & 1; }

void GF2Dense::set(int r, int c, bool v) {
    uint64_t m = 1ULL << (c & 63);
    if (v) row(r)[c >> 6] |= m;
    else row(r)[c >> 6] &= ~m;
}

void GF2Dense::add_row(int dst, int src) {
    uint64_t* d = row(dst);
    const uint64_t* s = row(src);
    for (int w = 0; w < words_; ++w) d[w] ^= s[w];
}

std::vector<int> GF2Dense::rref(int upto) {
    if (upto < 0) upto = cols_;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < upto && r < rows_; ++c) {
        int pr = -1;
        for (int i = r; i < rows_; ++i)
            if (get(i, c)) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int w = 0; w < words_; ++w) std::swap(row(pr)[w], row(r)[w]);
        for (int i = 0; i < rows_; ++i)
            if (i != r && get(i, c)) add_row(i, r);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::optional<std::vector<uint8_t>> GF2Dense::solve(const std::vector<uint8_t>& b) {
    if ((int)b.size() != rows_) throw std::invalid_argument("GF2Dense::solve: bad rhs size");
    GF2Dense aug(rows_, cols_ + 1);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c)
            if (get(r, c)) aug.set(r, c, 1);
        if (b[r]) aug.set(r, cols_, 1);
    }
    aug.rref(cols_);
    std::vector<uint8_t> x(cols_, 0);
    for (int r = 0; r < rows_; ++r) {
        int lead = -1;
        for (int c = 0; c < cols_; ++c)
            if (aug.get(r, c)) { lead = c; break; }
        if (lead < 0) {
            if (aug.get(r, cols_)) return std::nullopt;
            continue;
        }
        x[lead] = aug.get(r, cols_);
    }
    return x;
}

std::vector<std::vector<uint8_t>> GF2Dense::kernel() const {
    GF2Dense rr = *this;
    std::vector<int> piv = rr.rref();
    std::vector<uint8_t> is_piv(cols_, 0);
    for (int c : piv) is_piv[c] = 1;
    std::vector<std::vector<uint8_t>> out;
    for (int c = 0; c < cols_; ++c) {
        if (is_piv[c]) continue;
        std::vector<uint8_t> v(cols_, 0);
        v[c] = 1;
        int r = 0;
        for (int pc : piv) {
            if (rr.get(r, c)) v[pc] = 1;
            ++r;
        }
        out.push_back(std::move(v));
    }
    return out;
}

namespace {

std::vector<int> xor_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace

std::vector<int> SparseGF2::reduce(std::vector<int> row) const {
    std::sort(row.begin(), row.end());
    while (!row.empty()) {
        auto it = std::lower_bound(lead_.begin(), lead_.end(), row[0]);
        if (it == lead_.end() || *it != row[0]) break;
        row = xor_sorted(row, rows_[it - lead_.begin()]);
    }
    return row;
}

bool SparseGF2::add_row(std::vector<int> row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    auto it = std::lower_bound(lead_.begin(), lead_.end(), row[0]);
    size_t pos = it - lead_.begin();
    lead_.insert(it, row[0]);
    rows_.insert(rows_.begin() + pos, std::move(row));
    return true;
}

bool SparseGF2::consistent_with(std::vector<int> row) const {
    std::vector<int> rem = reduce(std::move(row));
    return !(rem.size() == 1 && rem[0] == cols_ - 1);
}

// Back-substitute a sentinel-augmented echelon basis: unknowns are columns
// 0..cols-2, column cols-1 carries the right hand side.
std::optional<std::vector<uint8_t>> solve_sentinel(const SparseGF2& sys);

class SparseGF2Solver {
public:
    static std::optional<std::vector<uint8_t>> run(const SparseGF2& sys) {
        const int n = sys.cols_ - 1;
        for (const auto& r : sys.rows_)
            if (r.size() == 1 && r[0] == n) return std::nullopt;
        std::vector<uint8_t> x((size_t)n, 0);
        for (auto it = sys.rows_.rbegin(); it != sys.rows_.rend(); ++it) {
            const auto& r = *it;
            if (r[0] == n) continue;  // pure-rhs rows already rejected
            int acc = 0;
            for (size_t k = 1; k < r.size(); ++k)
                acc ^= (r[k] == n) ? 1 : x[(size_t)r[k]];
            x[(size_t)r[0]] = (uint8_t)acc;
        }
        return x;
    }
};

std::optional<std::vector<uint8_t>> solve_sentinel(const SparseGF2& sys) {
    return SparseGF2Solver::run(sys);
}

void SparseMod2k::add_row(std::vector<std::pair<int, long long>> row) {
    std::sort(row.begin(), row.end());
    SparseZ2kRow r;
    const long long mask = (1LL << t_) - 1;
    for (auto& [c, v] : row) {
        long long vv = v & mask;
        if (vv) r.ent.emplace_back(c, vv);
    }
    rows_.push_back(std::move(r));
}

namespace {

// Row combine over Z/2^t: dst += m * src, dropping zero entries. Products are
// computed with unsigned wraparound, which agrees with arithmetic mod 2^t.
void axpy_mod(std::vector<std::pair<int, long long>>& dst,
              const std::vector<std::pair<int, long long>>& src, long long m, long long mod_mask) {
    std::vector<std::pair<int, long long>> out;
    out.reserve(dst.size() + src.size());
    size_t i = 0, j = 0;
    const unsigned long long um = (unsigned long long)m, mask = (unsigned long long)mod_mask;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            long long v = (long long)((um * (unsigned long long)src[j].second) & mask);
            if (v) out.emplace_back(src[j].first, v);
            ++j;
        } else {
            long long v = (long long)(((unsigned long long)dst[i].second +
                                       um * (unsigned long long)src[j].second) & mask);
            if (v) out.emplace_back(dst[i].first, v);
            ++i, ++j;
        }
    }
    dst = std::move(out);
}

long long inv_mod_2k(long long a, long long mod_mask) {
    // Newton iteration doubles the valid bits each step; a odd.
    unsigned long long x = 1, ua = (unsigned long long)a;
    for (int k = 0; k < 7; ++k) x = x * (2 - ua * x);
    return (long long)(x & (unsigned long long)mod_mask);
}

} // namespace

std::optional<std::vector<long long>> SparseMod2k::solve() {
    // 2-adic echelon elimination: build an echelon basis of rows with odd
    // (invertible) pivots, then halve the all-even residual rows and continue
    // one bit down. A residual row that is even on every unknown but odd on
    // the right hand side is a contradiction. On success the basis is
    // back-substituted into a concrete solution, which is then verified
    // against every stored row.
    struct BRow {
        std::vector<std::pair<int, long long>> ent;  // pivot entry normalized to 1
        int col;
        size_t order;  // creation index; tails only reference later pivots
        int lvl;       // the row constrains x mod 2^lvl
    };
    std::vector<BRow> basis;
    std::unordered_map<int, size_t> pivot_of;  // unknown col -> basis index

    std::vector<std::vector<std::pair<int, long long>>> cur, next;
    cur.reserve(rows_.size());
    for (auto& r : rows_) cur.push_back(r.ent);

    for (int lvl = t_; lvl >= 1; --lvl) {
        const long long mask = (1LL << lvl) - 1;
        next.clear();
        for (auto& row0 : cur) {
            std::vector<std::pair<int, long long>> row;
            for (auto& [c, v] : row0) {
                long long vv = v & mask;
                if (vv) row.emplace_back(c, vv);
            }
            // Eliminate every pivot column. Each subtraction can only
            // introduce columns whose pivot was created later, so this
            // terminates.
            while (true) {
                size_t hit = SIZE_MAX;
                long long coef = 0;
                for (auto& [c, v] : row) {
                    auto it = pivot_of.find(c);
                    if (it != pivot_of.end()) {
                        if (hit == SIZE_MAX || basis[it->second].order < basis[hit].order) {
                            hit = it->second;
                            coef = v;
                        }
                    }
                }
                if (hit == SIZE_MAX) break;
                axpy_mod(row, basis[hit].ent, (mask + 1 - coef) & mask, mask);
            }
            if (row.empty()) continue;
            // Promote on an odd unknown entry if possible.
            int odd_col = -1;
            long long odd_val = 0;
            for (auto& [c, v] : row)
                if (c != cols_ && (v & 1)) { odd_col = c; odd_val = v; break; }
            if (odd_col >= 0) {
                long long inv = inv_mod_2k(odd_val, mask);
                for (auto& [c, v] : row)
                    v = (long long)(((unsigned long long)v * (unsigned long long)inv) &
                                    (unsigned long long)mask);
                pivot_of[odd_col] = basis.size();
                basis.push_back(BRow{std::move(row), odd_col, basis.size(), lvl});
                continue;
            }
            // All unknown entries even; an odd rhs cannot be matched.
            for (auto& [c, v] : row)
                if (c == cols_ && (v & 1)) return std::nullopt;
            if (lvl == 1) continue;
            std::vector<std::pair<int, long long>> half;
            for (auto& [c, v] : row) {
                long long h = (v >> 1) & ((1LL << (lvl - 1)) - 1);
                if (h) half.emplace_back(c, h);
            }
            if (!half.empty()) next.push_back(std::move(half));
        }
        cur.swap(next);
    }
    // Back-substitution in reverse creation order: each basis row's tail
    // references only later pivots (all eliminated at creation) or free
    // unknowns, which stay zero.
    std::vector<long long> x((size_t)cols_, 0);
    for (auto it = basis.rbegin(); it != basis.rend(); ++it) {
        const unsigned long long mask = (1ULL << it->lvl) - 1;
        unsigned long long acc = 0;
        for (auto& [c, v] : it->ent) {
            if (c == it->col) continue;
            unsigned long long val = (c == cols_) ? 1 : (unsigned long long)x[(size_t)c];
            acc = (acc + (unsigned long long)v * val) & mask;
        }
        x[(size_t)it->col] = (long long)((mask + 1 - acc) & mask);
    }
    const unsigned long long full = (1ULL << t_) - 1;
    for (const auto& r : rows_) {
        unsigned long long acc = 0;
        for (auto& [c, v] : r.ent) {
            unsigned long long val = (c == cols_) ? 1 : (unsigned long long)x[(size_t)c];
            acc = (acc + (unsigned long long)v * val) & full;
        }
        if (acc != 0) throw std::logic_error("SparseMod2k::solve: residual check failed");
    }
    return x;
}

namespace {

struct SparseIntMat {
    // row -> sorted (col, value)
    std::vector<std::vector<std::pair<int, long long>>> rows;
};

void axpy_int(std::vector<std::pair<int, long long>>& dst,
              const std::vector<std::pair<int, long long>>& src, long long m) {
    std::vector<std::pair<int, long long>> out;
    out.reserve(dst.size() + src.size());
    size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            long long v = m * src[j].second;
            if (v) out.emplace_back(src[j].first, v);
            ++j;
        } else {
            long long v = dst[i].second + m * src[j].second;
            if (v) out.emplace_back(dst[i].first, v);
            ++i, ++j;
        }
    }
    dst = std::move(out);
}

} // namespace

std::vector<long long> smith_normal_form(int rows, int cols,
                                         std::vector<std::vector<std::pair<int, long long>>> mat) {
    (void)rows;
    for (auto& r : mat) std::sort(r.begin(), r.end());
    std::vector<char> row_done(mat.size(), 0), col_done((size_t)cols, 0);
    std::vector<long long> diag;

    // Phase 1: unit pivots, shortest row first to limit fill.
    while (true) {
        int br = -1, bc = -1;
        size_t bsz = SIZE_MAX;
        for (size_t i = 0; i < mat.size(); ++i) {
            if (row_done[i]) continue;
            for (auto& [c, v] : mat[i]) {
                if (col_done[(size_t)c]) continue;
                if (v == 1 || v == -1) {
                    if (mat[i].size() < bsz) { br = (int)i; bc = c; bsz = mat[i].size(); }
                    break;
                }
            }
        }
        if (br < 0) break;
        long long pv = 0;
        for (auto& [c, v] : mat[(size_t)br])
            if (c == bc) pv = v;
        for (size_t i = 0; i < mat.size(); ++i) {
            if ((int)i == br || row_done[i]) continue;
            long long coef = 0;
            for (auto& [c, v] : mat[i])
                if (c == bc) { coef = v; break; }
            if (coef) axpy_int(mat[i], mat[(size_t)br], -coef * pv);  // pv = +-1
        }
        row_done[(size_t)br] = 1;
        col_done[(size_t)bc] = 1;
        diag.push_back(1);
    }

    // Phase 2: dense SNF on the (small) residual.
    std::vector<int> live_rows, live_cols;
    std::unordered_map<int, int> cmap;
    for (size_t i = 0; i < mat.size(); ++i)
        if (!row_done[i] && !mat[i].empty()) live_rows.push_back((int)i);
    for (int c = 0; c < cols; ++c)
        if (!col_done[(size_t)c]) { cmap[c] = (int)live_cols.size(); live_cols.push_back(c); }
    size_t R = live_rows.size(), C = live_cols.size();
    std::vector<std::vector<long long>> D(R, std::vector<long long>(C, 0));
    for (size_t i = 0; i < R; ++i)
        for (auto& [c, v] : mat[(size_t)live_rows[i]])
            if (!col_done[(size_t)c]) D[i][(size_t)cmap[c]] = v;

    size_t r0 = 0, c0 = 0;
    while (r0 < R && c0 < C) {
        // Find the smallest nonzero entry in the remaining block.
        size_t pr = SIZE_MAX, pc = SIZE_MAX;
        long long best = 0;
        for (size_t i = r0; i < R; ++i)
            for (size_t j = c0; j < C; ++j) {
                long long a = D[i][j] < 0 ? -D[i][j] : D[i][j];
                if (a != 0 && (best == 0 || a < best)) { best = a; pr = i; pc = j; }
            }
        if (best == 0) break;
        std::swap(D[r0], D[pr]);
        for (size_t i = 0; i < R; ++i) std::swap(D[i][c0], D[i][pc]);
        bool again = false;
        for (size_t i = r0 + 1; i < R; ++i) {
            long long q = D[i][c0] / D[r0][c0];
            if (q)
                for (size_t j = c0; j < C; ++j) D[i][j] -= q * D[r0][j];
            if (D[i][c0]) again = true;
        }
        for (size_t j = c0 + 1; j < C; ++j) {
            long long q = D[r0][j] / D[r0][c0];
            if (q)
                for (size_t i = r0; i < R; ++i) D[i][j] -= q * D[i][c0];
            if (D[r0][j]) again = true;
        }
        if (again) continue;
        // Divisibility fix-up: pivot must divide every remaining entry.
        bool fixed = true;
        for (size_t i = r0 + 1; i < R && fixed; ++i)
            for (size_t j = c0 + 1; j < C && fixed; ++j)
                if (D[i][j] % D[r0][c0] != 0) {
                    for (size_t jj = c0; jj < C; ++jj) D[r0][jj] += D[i][jj];
                    fixed = false;
                }
        if (!fixed) continue;
        diag.push_back(D[r0][c0] < 0 ? -D[r0][c0] : D[r0][c0]);
        ++r0, ++c0;
    }
    return diag;
}

std::vector<std::vector<int>> coboundary_rows_z2(const OrderedComplex& cx, int deg) {
    std::vector<std::vector<int>> out;
    if (deg + 1 > cx.dim()) return out;
    std::unordered_map<Simplex, int, SimplexHash> idx;
    const auto& lower = cx.simplices(deg);
    for (size_t k = 0; k < lower.size(); ++k) idx[lower[k]] = (int)k;
    for (const Simplex& s : cx.simplices(deg + 1)) {
        std::vector<int> row;
        for (int j = 0; j <= s.dim(); ++j) row.push_back(idx.at(s.face(j)));
        std::sort(row.begin(), row.end());
        out.push_back(std::move(row));
    }
    return out;
}

int cohomology_rank_z2(const OrderedComplex& cx, int deg) {
    // dim ker(d_deg) - rank(d_{deg-1}).
    size_t n = cx.count(deg);
    SparseGF2 up((int)n);
    for (auto& row : coboundary_rows_z2(cx, deg)) up.add_row(std::move(row));
    int rank_up = up.rank();
    int rank_down = 0;
    if (deg > 0) {
        SparseGF2 down((int)n);
        // Image vectors of d_{deg-1}: for each (deg-1)-simplex, the incident
        // deg-simplices.
        std::unordered_map<Simplex, int, SimplexHash> idx;
        const auto& basis = cx.simplices(deg);
        for (size_t k = 0; k < basis.size(); ++k) idx[basis[k]] = (int)k;
        std::unordered_map<Simplex, std::vector<int>, SimplexHash> cols;
        for (const Simplex& s : basis) {
            int si = idx[s];
            for (int j = 0; j <= s.dim(); ++j) cols[s.face(j)].push_back(si);
        }
        for (auto& [low, col] : cols) {
            (void)low;
            std::sort(col.begin(), col.end());
            col.erase(std::unique(col.begin(), col.end()), col.end());
            down.add_row(std::move(col));
        }
        rank_down = down.rank();
    }
    int kernel_dim = (int)n - rank_up;
    return kernel_dim - rank_down;
}

std::optional<Cochain> solve_coboundary_z2(const Cochain& z) {
    if (z.ring() != Ring::Z2) throw std::invalid_argument("solve_coboundary_z2: expects Z/2");
    const OrderedComplex& cx = *z.complex();
    const int deg = z.degree();
    if (deg == 0) return z.is_zero() ? std::optional<Cochain>(Cochain(&cx, 0, Ring::Z2))
                                     : std::nullopt;
    std::unordered_map<Simplex, int, SimplexHash> idx;
    const auto& unknowns = cx.simplices(deg - 1);
    for (size_t k = 0; k < unknowns.size(); ++k) idx[unknowns[k]] = (int)k;
    const int n = (int)unknowns.size();
    SparseGF2 sys(n + 1);
    for (const Simplex& s : cx.simplices(deg)) {
        std::vector<int> row;
        for (int j = 0; j <= s.dim(); ++j) row.push_back(idx.at(s.face(j)));
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        if (z.ival(s)) row.push_back(n);
        sys.add_row(std::move(row));
    }
    auto x = solve_sentinel(sys);
    if (!x) return std::nullopt;
    Cochain u(&cx, deg - 1, Ring::Z2);
    for (int k = 0; k < n; ++k)
        if ((*x)[(size_t)k]) u.set(unknowns[(size_t)k], 1);
    return u;
}

bool is_coboundary_z2(const Cochain& z, Cochain* primitive) {
    auto u = solve_coboundary_z2(z);
    if (!u) return false;
    if (primitive) *primitive = *u;
    return true;
}

std::optional<Cochain> solve_coboundary_qz2(const Cochain& z, int tmax) {
    if (z.ring() != Ring::QZ) throw std::invalid_argument("solve_coboundary_qz2: expects Q/Z");
    const OrderedComplex& cx = *z.complex();
    const int deg = z.degree();
    // Clear denominators: all must be powers of two.
    long long den = 1;
    for (const auto& [s, v] : z.qsupport()) {
        (void)s;
        long long d = v.den;
        while (d % 2 == 0) d /= 2;
        if (d != 1) throw std::invalid_argument("solve_coboundary_qz2: non-2-power denominator");
        den = std::lcm(den, v.den);
    }
    if (den == 1) return Cochain(&cx, deg > 0 ? deg - 1 : 0, Ring::QZ);
    int tden = 0;
    while ((1LL << tden) < den) ++tden;
    if (deg == 0) return std::nullopt;  // nonzero 0-cochain with no (-1)-simplices
    // Over Z/2^t the system d u = den * z_scaled certifies Q/Z solvability once
    // t is large enough; escalate to tmax and accept the verdict there.
    std::unordered_map<Simplex, int, SimplexHash> idx;
    const auto& unknowns = cx.simplices(deg - 1);
    for (size_t k = 0; k < unknowns.size(); ++k) idx[unknowns[k]] = (int)k;
    const int n = (int)unknowns.size();
    int t = std::max(tden + 2, 8);
    while (true) {
        if (t > tmax) t = tmax;
        const long long scale = 1LL << (t - tden);
        SparseMod2k sys(n, t);
        for (const Simplex& s : cx.simplices(deg)) {
            std::vector<std::pair<int, long long>> row;
            for (int j = 0; j <= s.dim(); ++j) {
                long long sgn = (j % 2) ? -1 : 1;
                row.emplace_back(idx.at(s.face(j)), sgn);
            }
            QZ v = z.qval(s);
            if (!v.is_zero()) {
                long long num = v.num * (den / v.den);  // z over the common denominator
                row.emplace_back(n, -scale * num);      // d(u) - z = 0
            }
            sys.add_row(std::move(row));
        }
        auto x = sys.solve();
        if (x) {
            // u solves d(u) = 2^t z over Z/2^t, so u / 2^t is a Q/Z primitive.
            Cochain f(&cx, deg - 1, Ring::QZ);
            for (int k = 0; k < n; ++k)
                if ((*x)[(size_t)k]) f.set(unknowns[(size_t)k], QZ((*x)[(size_t)k], 1LL << t));
            return f;
        }
        if (t == tmax) return std::nullopt;
        t = std::min(t * 2, tmax);
    }
}

bool is_coboundary_qz2(const Cochain& z, int tmax) {
    return solve_coboundary_qz2(z, tmax).has_value();
}

std::optional<Cochain> extend_cocycle(const OrderedComplex& cx, int degree,
                                      const std::vector<std::pair<Simplex, int>>& pinned,
                                      const Cochain* d_target) {
    if (d_target) {
        if (d_target->complex() != &cx || d_target->ring() != Ring::Z2 ||
            d_target->degree() != degree + 1)
            throw std::invalid_argument("extend_cocycle: bad d-target");
    }
    std::unordered_map<Simplex, int, SimplexHash> idx;
    const auto& unknowns = cx.simplices(degree);
    for (size_t k = 0; k < unknowns.size(); ++k) idx[unknowns[k]] = (int)k;
    const int n = (int)unknowns.size();
    SparseGF2 sys(n + 1);
    for (const auto& [s, v] : pinned) {
        std::vector<int> row{idx.at(s)};
        if (v & 1) row.push_back(n);
        sys.add_row(std::move(row));
    }
    if (degree + 1 <= cx.dim()) {
        for (const Simplex& s : cx.simplices(degree + 1)) {
            std::vector<int> row;
            for (int j = 0; j <= s.dim(); ++j) row.push_back(idx.at(s.face(j)));
            std::sort(row.begin(), row.end());
            if (d_target && d_target->ival(s)) row.push_back(n);
            sys.add_row(std::move(row));
        }
    }
    auto x = solve_sentinel(sys);
    if (!x) return std::nullopt;
    Cochain u(&cx, degree, Ring::Z2);
    for (int k = 0; k < n; ++k)
        if ((*x)[(size_t)k]) u.set(unknowns[(size_t)k], 1);
    return u;
}

std::vector<Cochain> cohomology_basis_z2(const OrderedComplex& cx, int deg) {
    const int h = cohomology_rank_z2(cx, deg);
    if (h == 0) return {};
    const auto& basis_simps = cx.simplices(deg);
    const int n = (int)basis_simps.size();
    SparseGF2 up(n);
    for (auto& row : coboundary_rows_z2(cx, deg)) up.add_row(std::move(row));
    // Echelon basis of the coboundary image, extended by accepted class
    // representatives so candidates are tested modulo both at once.
    SparseGF2 img(n);
    if (deg > 0) {
        std::unordered_map<Simplex, int, SimplexHash> idx;
        for (int k = 0; k < n; ++k) idx[basis_simps[(size_t)k]] = k;
        std::unordered_map<Simplex, std::vector<int>, SimplexHash> cols;
        for (const Simplex& s : basis_simps)
            for (int j = 0; j <= s.dim(); ++j) cols[s.face(j)].push_back(idx[s]);
        for (auto& [low, col] : cols) {
            (void)low;
            std::sort(col.begin(), col.end());
            img.add_row(std::move(col));
        }
    }
    std::vector<char> is_lead((size_t)n, 0);
    for (int c : up.leads()) is_lead[(size_t)c] = 1;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_lead[(size_t)c]) free_cols.push_back(c);
    // Fixed pseudorandom scan order: nontrivial classes are typically hit
    // within the first few kernel vectors.
    std::mt19937_64 rng(0x5eedULL);
    std::shuffle(free_cols.begin(), free_cols.end(), rng);

    std::vector<Cochain> reps;
    std::vector<uint8_t> x((size_t)n);
    for (int c : free_cols) {
        std::fill(x.begin(), x.end(), 0);
        x[(size_t)c] = 1;
        const auto& rows = up.basis_rows();
        for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
            int acc = 0;
            for (size_t k = 1; k < it->size(); ++k) acc ^= x[(size_t)(*it)[k]];
            x[(size_t)(*it)[0]] = (uint8_t)acc;
        }
        std::vector<int> support;
        for (int k = 0; k < n; ++k)
            if (x[(size_t)k]) support.push_back(k);
        if (!img.add_row(support)) continue;
        Cochain rep(&cx, deg, Ring::Z2);
        for (int k : support) rep.set(basis_simps[(size_t)k], 1);
        reps.push_back(std::move(rep));
        if ((int)reps.size() == h) break;
    }
    if ((int)reps.size() != h)
        throw std::logic_error("cohomology_basis_z2: representative scan incomplete");
    return reps;
}

std::optional<std::vector<std::uint8_t>> class_coordinates_z2(
    const Cochain& z, const std::vector<Cochain>& reps) {
    if (z.ring() != Ring::Z2) throw std::invalid_argument("class_coordinates_z2: expects Z/2");
    if (!is_cocycle(z)) throw std::invalid_argument("class_coordinates_z2: not a cocycle");
    const OrderedComplex& cx = *z.complex();
    const int deg = z.degree();
    const int h = (int)reps.size();
    // Unknowns: a degree-1 primitive u plus one coefficient per representative;
    // rows say d(u) + sum(lambda_i rep_i) = z on every deg-simplex.
    const auto& prim = deg > 0 ? cx.simplices(deg - 1) : cx.simplices(0);
    const int m = deg > 0 ? (int)prim.size() : 0;
    std::unordered_map<Simplex, int, SimplexHash> idx;
    for (int k = 0; k < m; ++k) idx[prim[(size_t)k]] = k;
    SparseGF2 sys(m + h + 1);
    for (const Simplex& s : cx.simplices(deg)) {
        std::vector<int> row;
        if (deg > 0)
            for (int j = 0; j <= s.dim(); ++j) row.push_back(idx.at(s.face(j)));
        std::sort(row.begin(), row.end());
        for (int i = 0; i < h; ++i)
            if (reps[(size_t)i].ival(s)) row.push_back(m + i);
        if (z.ival(s)) row.push_back(m + h);
        sys.add_row(std::move(row));
    }
    auto x = solve_sentinel(sys);
    if (!x) return std::nullopt;
    std::vector<std::uint8_t> lambda((size_t)h);
    for (int i = 0; i < h; ++i) lambda[(size_t)i] = (*x)[(size_t)(m + i)];
    return lambda;
}

std::vector<long long> homology_torsion(const OrderedComplex& cx, int deg) {
    // Torsion of H_deg = nontrivial elementary divisors of the boundary map
    // from (deg+1)-chains.
    if (deg + 1 > cx.dim()) return {};
    std::unordered_map<Simplex, int, SimplexHash> idx;
    const auto& basis = cx.simplices(deg);
    for (size_t k = 0; k < basis.size(); ++k) idx[basis[k]] = (int)k;
    std::vector<std::vector<std::pair<int, long long>>> mat;
    for (const Simplex& s : cx.simplices(deg + 1)) {
        std::vector<std::pair<int, long long>> row;
        for (int j = 0; j <= s.dim(); ++j)
            row.emplace_back(idx.at(s.face(j)), (j % 2) ? -1 : 1);
        std::sort(row.begin(), row.end());
        mat.push_back(std::move(row));
    }
    auto diag = smith_normal_form((int)mat.size(), (int)basis.size(), std::move(mat));
    std::vector<long long> tors;
    for (long long d : diag)
        if (d > 1) tors.push_back(d);
    std::sort(tors.begin(), tors.end());
    return tors;
}

long long homology_free_rank(const OrderedComplex& cx, int deg) {
    // rank H_deg = #deg-simplices - rank d(from deg+1) - rank d(from deg).
    auto rank_from = [&](int src_deg) -> long long {
        // Rank of the boundary map from src_deg-chains to (src_deg-1)-chains.
        if (src_deg > cx.dim() || src_deg < 1) return 0;
        std::unordered_map<Simplex, int, SimplexHash> idx;
        const auto& basis = cx.simplices(src_deg - 1);
        for (size_t k = 0; k < basis.size(); ++k) idx[basis[k]] = (int)k;
        std::vector<std::vector<std::pair<int, long long>>> mat;
        for (const Simplex& s : cx.simplices(src_deg)) {
            std::vector<std::pair<int, long long>> row;
            for (int j = 0; j <= s.dim(); ++j)
                row.emplace_back(idx.at(s.face(j)), (j % 2) ? -1 : 1);
            std::sort(row.begin(), row.end());
            mat.push_back(std::move(row));
        }
        auto diag = smith_normal_form((int)mat.size(), (int)basis.size(), std::move(mat));
        return (long long)diag.size();
    };
    return (long long)cx.count(deg) - rank_from(deg + 1) - rank_from(deg);
}

} // namespace spin4
