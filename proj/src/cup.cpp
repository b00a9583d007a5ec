#include "spin4/cup.hpp"

#include <map>
#include <stdexcept>

#include "cupi_signs.inc"

namespace spin4 {

namespace {

// Enumerate overlapping interval decompositions of [0, n] with i+1 division
// points 0 <= a_1 < ... < a_{i+1} <= n, in lexicographic order of the division
// points (matching the order the sign table was generated in). Blocks
// B_0 = [0, a_1], B_1 = [a_1, a_2], ..., B_{i+1} = [a_{i+1}, n]; the first
// factor sees even blocks, the second odd blocks. A term is kept iff the first
// factor's vertex count is p+1.
std::vector<CupTerm> enumerate_terms(int p, int q, int i) {
    const int n = p + q - i;
    std::vector<CupTerm> out;
    std::vector<int> divs(i + 1);
    auto emit = [&]() {
        CupTerm t;
        t.sign = 1;
        int prev = 0;
        for (int b = 0; b <= i + 1; ++b) {
            int end = (b <= i) ? divs[b] : n;
            auto& dst = (b % 2 == 0) ? t.xs : t.ys;
            for (int v = prev; v <= end; ++v) dst.push_back(v);
            prev = end;
        }
        if ((int)t.xs.size() == p + 1) out.push_back(std::move(t));
    };
    // Lexicographic enumeration of strictly increasing (i+1)-tuples in [0, n].
    int k = 0;
    divs[0] = -1;
    while (k >= 0) {
        ++divs[k];
        if (divs[k] > n - (i - k)) {
            --k;
            continue;
        }
        if (k == i) {
            emit();
        } else {
            ++k;
            divs[k] = divs[k - 1];
        }
    }
    return out;
}

const CupSignRow* find_sign_row(int p, int q, int i) {
    for (const auto& row : kCupSigns)
        if (row.p == p && row.q == q && row.i == i) return &row;
    return nullptr;
}

} // namespace

const std::vector<CupTerm>& cup_terms(int p, int q, int i) {
    static std::map<std::tuple<int, int, int>, std::vector<CupTerm>> cache;
    auto key = std::make_tuple(p, q, i);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<CupTerm> terms = enumerate_terms(p, q, i);
    if (const CupSignRow* row = find_sign_row(p, q, i)) {
        for (size_t k = 0; k < terms.size(); ++k)
            if (row->bits[k] == '1') terms[k].sign = -1;
    } else {
        // No integral signs available; mark so integral callers can reject.
        for (auto& t : terms) t.sign = 0;
    }
    return cache.emplace(key, std::move(terms)).first->second;
}

Cochain cup(const Cochain& x, const Cochain& y, int i) {
    if (x.complex() != y.complex()) throw std::invalid_argument("cup: different complexes");
    if (x.ring() != y.ring() || (x.ring() != Ring::Z2 && x.ring() != Ring::Z))
        throw std::invalid_argument("cup: rings must match and be Z/2 or Z");
    const OrderedComplex* cx = x.complex();
    const int p = x.degree(), q = y.degree(), n = p + q - i;
    Cochain r(cx, std::max(n, 0), x.ring());
    if (i < 0 || i > std::min(p, q) || n > cx->dim()) return r;

    const bool integral = x.ring() == Ring::Z;
    const auto& terms = cup_terms(p, q, i);
    if (integral && !terms.empty() && terms[0].sign == 0)
        throw std::out_of_range("cup: integral sign table does not cover these degrees");

    Simplex xf, yf;
    for (const Simplex& s : cx->simplices(n)) {
        long long acc = 0;
        for (const CupTerm& t : terms) {
            xf = Simplex{};
            for (int k : t.xs) xf.push(s[k]);
            long long a = x.ival(xf);
            if (a == 0) continue;
            yf = Simplex{};
            for (int k : t.ys) yf.push(s[k]);
            long long b = y.ival(yf);
            if (b == 0) continue;
            acc += integral ? t.sign * a * b : a * b;
        }
        r.set(s, acc);
    }
    return r;
}

Cochain sq(const Cochain& c, int i) {
    if (c.ring() != Ring::Z2) throw std::invalid_argument("sq: expects Z/2 cochain");
    const int n = c.degree();
    if (i > n || i < 0) return Cochain(c.complex(), std::max(n + i, 0), Ring::Z2);
    return cup(c, c, n - i) + cup(c, coboundary(c), n - i + 1);
}

Cochain suspend_cochain(const Cochain& c, const OrderedComplex& susp, int32_t upper_pole) {
    Cochain r(&susp, c.degree() + 1, c.ring(), c.modulus());
    const bool qz = c.ring() == Ring::QZ;
    auto lift = [&](const Simplex& s) {
        Simplex t = s;
        t.push(upper_pole);
        return t;
    };
    if (qz) {
        for (const auto& [s, v] : c.qsupport()) r.set(lift(s), v);
    } else {
        for (const auto& [s, v] : c.isupport()) r.set(lift(s), v);
    }
    return r;
}

} // namespace spin4
