#include "spin4/formula.hpp"

#include "spin4/cup.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace spin4 {

namespace {

Simplex full_simplex(int degree) {
    Simplex s;
    for (int v = 0; v <= degree; ++v) s.push(v);
    return s;
}

// Apply an index map to a face; returns false if the image is degenerate.
bool map_face(const Simplex& f, const std::vector<int>& img, Simplex& out) {
    out = Simplex{};
    for (int k = 0; k <= f.dim(); ++k) {
        int v = img[f[k]];
        if (out.size() > 0 && out[out.size() - 1] == v) return false;
        out.push(v);
    }
    return true;
}

} // namespace

void Formula::insert_term(FTerm t) {
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());  // e*e = e over Z/2 values
    auto it = terms_.find(t);
    if (it != terms_.end()) terms_.erase(it);
    else terms_.insert(std::move(t));
}

Formula Formula::generator(int degree, int arity, int arg) {
    Formula f(degree, arity);
    if (arg < 0 || arg >= arity) throw std::invalid_argument("Formula::generator: bad arg");
    f.terms_.insert({FFactor{arg, full_simplex(degree)}});
    return f;
}

Formula Formula::from_terms(int degree, int arity, std::vector<FTerm> terms) {
    Formula f(degree, arity);
    for (auto& t : terms) {
        for (const FFactor& fac : t) {
            if (fac.arg < 0 || fac.arg >= arity) throw std::invalid_argument("from_terms: bad arg");
            for (int k = 0; k <= fac.face.dim(); ++k)
                if (fac.face[k] < 0 || fac.face[k] > degree)
                    throw std::invalid_argument("from_terms: face index out of range");
        }
        f.insert_term(std::move(t));
    }
    return f;
}

Formula Formula::operator+(const Formula& o) const {
    if (deg_ != o.deg_ || arity_ != o.arity_)
        throw std::invalid_argument("Formula +: degree/arity mismatch");
    Formula r = *this;
    for (const FTerm& t : o.terms_) {
        auto it = r.terms_.find(t);
        if (it != r.terms_.end()) r.terms_.erase(it);
        else r.terms_.insert(t);
    }
    return r;
}

Formula Formula::d() const {
    Formula r(deg_ + 1, arity_);
    // The j-th face of (0..deg+1) skips vertex j: old index k maps to
    // k < j ? k : k+1.
    std::vector<int> img(deg_ + 1);
    for (int j = 0; j <= deg_ + 1; ++j) {
        for (int k = 0; k <= deg_; ++k) img[k] = k < j ? k : k + 1;
        for (const FTerm& t : terms_) {
            FTerm nt;
            nt.reserve(t.size());
            for (const FFactor& fac : t) {
                Simplex nf;
                map_face(fac.face, img, nf);  // face maps are injective
                nt.push_back(FFactor{fac.arg, nf});
            }
            r.insert_term(std::move(nt));
        }
    }
    return r;
}

Formula Formula::substitute_coboundary(int arg) const {
    Formula r(deg_, arity_);
    for (const FTerm& t : terms_) {
        // Expand the product of coboundary sums over the affected factors.
        std::vector<size_t> hit;
        for (size_t k = 0; k < t.size(); ++k)
            if (t[k].arg == arg) hit.push_back(k);
        std::vector<int> choice(hit.size(), 0);
        while (true) {
            FTerm nt;
            bool ok = true;
            for (size_t k = 0; k < t.size() && ok; ++k) {
                const FFactor& fac = t[k];
                if (fac.arg != arg) {
                    nt.push_back(fac);
                    continue;
                }
                size_t h = std::find(hit.begin(), hit.end(), k) - hit.begin();
                int drop = choice[h];
                if (fac.face.dim() < 1) { ok = false; break; }  // d of a (-1)-face is empty
                Simplex nf;
                for (int m = 0; m <= fac.face.dim(); ++m)
                    if (m != drop) nf.push(fac.face[m]);
                nt.push_back(FFactor{arg, nf});
            }
            if (ok) r.insert_term(std::move(nt));
            // Odometer over deletion choices, one per affected factor.
            size_t h = 0;
            while (h < hit.size()) {
                if (++choice[h] <= t[hit[h]].face.dim()) break;
                choice[h++] = 0;
            }
            if (h == hit.size()) break;
        }
    }
    return r;
}

Formula Formula::substitute_sum(int arg, int arg_a, int arg_b, int new_arity) const {
    Formula r(deg_, new_arity);
    for (const FTerm& t : terms_) {
        std::vector<size_t> hit;
        for (size_t k = 0; k < t.size(); ++k)
            if (t[k].arg == arg) hit.push_back(k);
        for (uint32_t mask = 0; mask < (1u << hit.size()); ++mask) {
            FTerm nt;
            for (size_t k = 0; k < t.size(); ++k) {
                const FFactor& fac = t[k];
                if (fac.arg != arg) {
                    nt.push_back(fac);
                    continue;
                }
                size_t h = std::find(hit.begin(), hit.end(), k) - hit.begin();
                nt.push_back(FFactor{(mask >> h) & 1 ? arg_b : arg_a, fac.face});
            }
            r.insert_term(std::move(nt));
        }
    }
    return r;
}

Formula Formula::rename_args(const std::vector<int>& perm, int new_arity) const {
    Formula r(deg_, new_arity);
    for (const FTerm& t : terms_) {
        FTerm nt = t;
        for (FFactor& fac : nt) fac.arg = perm.at(fac.arg);
        r.insert_term(std::move(nt));
    }
    return r;
}

Formula Formula::degeneracy_pullback(int j) const {
    Formula r(deg_ - 1, arity_);
    // s_j repeats vertex j: index k maps to k <= j ? k : k-1.
    std::vector<int> img(deg_ + 1);
    for (int k = 0; k <= deg_; ++k) img[k] = k <= j ? k : k - 1;
    for (const FTerm& t : terms_) {
        FTerm nt;
        bool ok = true;
        for (const FFactor& fac : t) {
            Simplex nf;
            if (!map_face(fac.face, img, nf)) { ok = false; break; }
            nt.push_back(FFactor{fac.arg, nf});
        }
        if (ok) r.insert_term(std::move(nt));
    }
    return r;
}

long long Formula::eval(const std::vector<const Cochain*>& args, const Simplex& s) const {
    if ((int)args.size() != arity_) throw std::invalid_argument("Formula::eval: arity mismatch");
    if (s.dim() != deg_) throw std::invalid_argument("Formula::eval: wrong simplex dimension");
    long long acc = 0;
    Simplex sub;
    for (const FTerm& t : terms_) {
        long long prod = 1;
        for (const FFactor& fac : t) {
            sub = Simplex{};
            for (int k = 0; k <= fac.face.dim(); ++k) sub.push(s[fac.face[k]]);
            if (args[fac.arg]->ival(sub) % 2 == 0) { prod = 0; break; }
        }
        acc ^= prod;
    }
    return acc;
}

Cochain Formula::apply(const std::vector<const Cochain*>& args, const OrderedComplex& cx) const {
    Cochain r(&cx, deg_, Ring::Z2);
    if (deg_ > cx.dim()) return r;
    for (const Simplex& s : cx.simplices(deg_)) r.set(s, eval(args, s));
    return r;
}

std::string Formula::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const FTerm& t : terms_) {
        if (!first) os << " + ";
        first = false;
        if (t.empty()) os << "1";
        for (const FFactor& fac : t) {
            os << names.at(fac.arg) << "(";
            for (int k = 0; k <= fac.face.dim(); ++k) os << fac.face[k];
            os << ")";
        }
    }
    return os.str();
}

Formula cup(const Formula& x, const Formula& y, int i) {
    if (x.arity() != y.arity()) throw std::invalid_argument("formula cup: arity mismatch");
    const int p = x.degree(), q = y.degree(), n = p + q - i;
    Formula r(n, x.arity());
    if (i < 0 || i > std::min(p, q) || n < 0) return r;
    for (const CupTerm& ct : cup_terms(p, q, i)) {
        for (const FTerm& tx : x.terms()) {
            for (const FTerm& ty : y.terms()) {
                FTerm nt;
                nt.reserve(tx.size() + ty.size());
                for (const FFactor& fac : tx) {
                    Simplex nf;
                    for (int k = 0; k <= fac.face.dim(); ++k) nf.push(ct.xs[fac.face[k]]);
                    nt.push_back(FFactor{fac.arg, nf});
                }
                for (const FFactor& fac : ty) {
                    Simplex nf;
                    for (int k = 0; k <= fac.face.dim(); ++k) nf.push(ct.ys[fac.face[k]]);
                    nt.push_back(FFactor{fac.arg, nf});
                }
                r.insert_term(std::move(nt));
            }
        }
    }
    return r;
}

BatchEval::BatchEval(const Formula& f, int n) : n_(n) {
    if (f.degree() != n) throw std::invalid_argument("BatchEval: formula degree != context dim");
    for (int d = 0; d <= n; ++d) {
        // All (d+1)-subsets of 0..n in lex order.
        std::vector<int> c(d + 1);
        for (int k = 0; k <= d; ++k) c[k] = k;
        while (true) {
            Simplex s;
            for (int v : c) s.push(v);
            faces_.push_back(s);
            int k = d;
            while (k >= 0 && c[k] == n - (d - k)) --k;
            if (k < 0) break;
            ++c[k];
            for (int m = k + 1; m <= d; ++m) c[m] = c[m - 1] + 1;
        }
    }
    for (const FTerm& t : f.terms()) {
        std::vector<std::pair<int, int>> ct;
        ct.reserve(t.size());
        for (const FFactor& fac : t) ct.emplace_back(fac.arg, face_id(fac.face));
        compiled_.push_back(std::move(ct));
    }
}

int BatchEval::face_id(const Simplex& face) const {
    auto it = std::lower_bound(faces_.begin(), faces_.end(), face,
                               [](const Simplex& a, const Simplex& b) {
                                   if (a.dim() != b.dim()) return a.dim() < b.dim();
                                   return a < b;
                               });
    if (it == faces_.end() || !(*it == face)) throw std::invalid_argument("BatchEval: unknown face");
    return (int)(it - faces_.begin());
}

uint64_t BatchEval::eval(const std::vector<std::vector<uint64_t>>& values) const {
    uint64_t acc = 0;
    for (const auto& t : compiled_) {
        uint64_t prod = ~0ULL;
        for (const auto& [arg, fid] : t) prod &= values[arg][fid];
        acc ^= prod;
    }
    return acc;
}

} // namespace spin4
