#include "spin4/verify.hpp"

#include <chrono>
#include <memory>
#include <random>
#include <tuple>

#include "spin4/builders.hpp"
#include "spin4/cup.hpp"
#include "spin4/formula.hpp"
#include "spin4/g4.hpp"
#include "spin4/linalg.hpp"
#include "spin4/natural_ops.hpp"

namespace spin4 {

namespace {

using Clock = std::chrono::steady_clock;

Cochain random_cochain(const OrderedComplex& cx, int deg, Ring ring, std::mt19937_64& rng,
                       long long lo = -5, long long hi = 5) {
    Cochain c(&cx, deg, ring);
    if (deg > cx.dim()) return c;
    for (const Simplex& s : cx.simplices(deg)) {
        if (ring == Ring::Z2) c.set(s, (long long)(rng() & 1));
        else c.set(s, lo + (long long)(rng() % (unsigned long long)(hi - lo + 1)));
    }
    return c;
}

Cochain random_coboundary(const OrderedComplex& cx, int deg, Ring ring,
                          std::mt19937_64& rng) {
    return coboundary(random_cochain(cx, deg - 1, ring, rng));
}

Cochain random_qz(const OrderedComplex& cx, int deg, std::mt19937_64& rng,
                  long long den = 8) {
    Cochain c(&cx, deg, Ring::QZ);
    if (deg > cx.dim()) return c;
    for (const Simplex& s : cx.simplices(deg))
        c.set(s, QZ((long long)(rng() % (unsigned long long)den), den));
    return c;
}

std::unique_ptr<OrderedComplex> random_complex(std::mt19937_64& rng, int nverts,
                                               int topdim, int ntop) {
    auto cx = std::make_unique<OrderedComplex>();
    for (int i = 0; i < nverts; ++i) cx->add_vertex(i);
    std::vector<std::int32_t> vs((size_t)nverts);
    for (int i = 0; i < nverts; ++i) vs[(size_t)i] = i;
    for (int k = 0; k < ntop; ++k) {
        std::shuffle(vs.begin(), vs.end(), rng);
        cx->add_simplex(std::span<const std::int32_t>(vs.data(), (size_t)(topdim + 1)));
    }
    cx->finalize();
    return cx;
}

Cochain scale(const Cochain& c, long long k) {
    Cochain r(c.complex(), c.degree(), c.ring(), c.modulus());
    for (const auto& [s, v] : c.isupport()) r.set(s, k * v);
    return r;
}

Cochain half(const Cochain& c) { return coefficient_map(c, Ring::QZ, Frac(1, 2)); }
Cochain quarter(const Cochain& c) { return coefficient_map(c, Ring::QZ, Frac(1, 4)); }

Triple random_triple(const OrderedComplex& cx, std::mt19937_64& rng) {
    Cochain e = random_cochain(cx, 1, Ring::Z2, rng);
    Cochain a = coboundary(e);
    Cochain p = cup(e, a, 0) + random_coboundary(cx, 3, Ring::Z2, rng);
    return {random_qz(cx, 4, rng), p, a};
}

RelationPair random_relation(const OrderedComplex& cx, std::mt19937_64& rng) {
    return {random_cochain(cx, 2, Ring::Z2, rng), random_cochain(cx, 1, Ring::Z2, rng)};
}

Triple random_kernel_triple(const OrderedComplex& cx, std::mt19937_64& rng) {
    Triple closed = zero_triple(cx);
    closed.w = coboundary(random_qz(cx, 3, rng));
    return triple_product(d_prime(random_relation(cx, rng)), closed);
}

G3Triple random_g3(const OrderedComplex& cx, std::mt19937_64& rng) {
    Cochain f = random_cochain(cx, 1, Ring::Z2, rng);
    Cochain p = coboundary(f);
    Cochain w = half(cup(f, p, 0)) + coboundary(random_qz(cx, 2, rng));
    return {w, p, coboundary(random_cochain(cx, 0, Ring::Z2, rng))};
}

// Bit-lane fills for exhaustive formula checks on the standard simplex.

void fill_faces(const BatchEval& be, int d, const std::vector<uint64_t>& masks,
                std::vector<uint64_t>& values) {
    std::fill(values.begin(), values.end(), 0);
    int bit = 0;
    for (int fid = 0; fid < be.num_faces(); ++fid) {
        if (be.faces()[(size_t)fid].dim() != d) continue;
        uint64_t lanes = 0;
        for (int lane = 0; lane < (int)masks.size(); ++lane)
            if ((masks[(size_t)lane] >> bit) & 1) lanes |= 1ULL << lane;
        values[(size_t)fid] = lanes;
        ++bit;
    }
}

// Degree-2 cocycles on the n-simplex, spanned by d(edge (i,j)), 1 <= i < j <= n.
void fill_cocycle2(const BatchEval& be, int n, const std::vector<uint32_t>& masks,
                   std::vector<uint64_t>& values) {
    std::fill(values.begin(), values.end(), 0);
    int bit = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j, ++bit) {
            uint64_t lanes = 0;
            for (int lane = 0; lane < (int)masks.size(); ++lane)
                if ((masks[(size_t)lane] >> bit) & 1) lanes |= 1ULL << lane;
            if (!lanes) continue;
            for (int u = 0; u <= n; ++u)
                for (int v = u + 1; v <= n; ++v)
                    for (int w = v + 1; w <= n; ++w) {
                        bool has_i = (u == i || v == i || w == i);
                        bool has_j = (u == j || v == j || w == j);
                        if (has_i && has_j)
                            values[(size_t)be.face_id(Simplex{u, v, w})] ^= lanes;
                    }
        }
}

template <typename Fill>
bool vanishes_over(const Formula& f, int n, long long num_batches, Fill&& fill_batch) {
    BatchEval be(f, n);
    std::vector<std::vector<uint64_t>> values(
        (size_t)f.arity(), std::vector<uint64_t>((size_t)be.num_faces()));
    for (long long b = 0; b < num_batches; ++b) {
        fill_batch(be, b, values);
        if (be.eval(values) != 0) return false;
    }
    return true;
}

// Decide whether a degree-4 formula in degree-2 cocycle arguments is the
// coboundary of a natural degree-3 formula: candidate primitives are spanned
// by monomials in the cocycle coordinates on the 3-simplex, the equation is
// imposed over every cocycle tuple on the 4-simplex.
bool natural_coboundary_cocycle_args(const Formula& f) {
    const int arity = f.arity();
    std::vector<FFactor> vars;
    for (int arg = 0; arg < arity; ++arg)
        for (int i = 0; i <= 2; ++i)
            for (int j = i + 1; j <= 2; ++j) vars.push_back(FFactor{arg, Simplex{i, j, 3}});
    const int nv = (int)vars.size();
    std::vector<BatchEval> dmono;
    for (uint32_t mask = 1; mask < (1u << nv); ++mask) {
        FTerm t;
        for (int k = 0; k < nv; ++k)
            if ((mask >> k) & 1) t.push_back(vars[(size_t)k]);
        dmono.emplace_back(Formula::from_terms(3, arity, {t}).d(), 4);
    }
    const int nm = (int)dmono.size();
    BatchEval rhs(f, 4);
    std::vector<std::vector<uint64_t>> values(
        (size_t)arity, std::vector<uint64_t>((size_t)rhs.num_faces()));
    SparseGF2 sys(nm + 1);
    const int total_bits = 6 * arity;
    const int batches = 1 << (total_bits - 6);
    for (int b = 0; b < batches; ++b) {
        std::vector<uint32_t> am(64), bm(64);
        for (int lane = 0; lane < 64; ++lane) {
            uint32_t idx = ((uint32_t)b << 6) | (uint32_t)lane;
            am[(size_t)lane] = idx & 63u;
            bm[(size_t)lane] = idx >> 6;
        }
        fill_cocycle2(rhs, 4, am, values[0]);
        if (arity == 2) fill_cocycle2(rhs, 4, bm, values[1]);
        uint64_t r = rhs.eval(values);
        std::vector<uint64_t> cols((size_t)nm);
        for (int m = 0; m < nm; ++m) cols[(size_t)m] = dmono[(size_t)m].eval(values);
        for (int lane = 0; lane < 64; ++lane) {
            std::vector<int> row;
            for (int m = 0; m < nm; ++m)
                if ((cols[(size_t)m] >> lane) & 1) row.push_back(m);
            if ((r >> lane) & 1) row.push_back(nm);
            sys.add_row(std::move(row));
        }
    }
    return solve_sentinel(sys).has_value();
}

// Property counter: every trial must pass; the report shows passed/total.
struct Counter {
    ReproReport* rep;
    std::string label;
    long long passed = 0, total = 0;
    Counter(ReproReport& r, std::string l) : rep(&r), label(std::move(l)) {}
    void tally(bool ok) {
        ++total;
        if (ok) ++passed;
    }
    ~Counter() {
        rep->facts.emplace_back(label, std::to_string(passed) + "/" + std::to_string(total));
        rep->pass = rep->pass && passed == total;
    }
};

void suite_cupi(ReproReport& rep, long long trials, std::mt19937_64& rng,
                const OrderedComplex* user_cx) {
    auto s5 = build_simplex(5);
    const OrderedComplex& cx = user_cx ? *user_cx : *s5;
    Counter cob(rep, "integral coboundary formula for cup_i");
    Counter assoc(rep, "cup_0 associativity on integral cochains");
    Counter nat(rep, "cup_i naturality under order embeddings");

    auto small = build_simplex(4);
    SimplicialMap incl;
    incl.source = small.get();
    incl.target = s5.get();
    incl.vertex_assignment = {0, 2, 3, 4, 5};
    incl.validate();

    for (long long t = 0; t < trials; ++t) {
        for (auto [p, q, i] : {std::tuple{1, 1, 1}, {2, 1, 1}, {2, 2, 1}, {2, 2, 2},
                               {3, 2, 2}, {1, 2, 1}, {3, 3, 3}, {1, 3, 1}}) {
            Cochain x = random_cochain(cx, p, Ring::Z, rng);
            Cochain y = random_cochain(cx, q, Ring::Z, rng);
            Cochain lhs = coboundary(cup(x, y, i));
            Cochain rhs = cup(coboundary(x), y, i) +
                          scale(cup(x, coboundary(y), i), p % 2 ? -1 : 1) -
                          cup(x, y, i - 1) -
                          scale(cup(y, x, i - 1), (i + p * q) % 2 ? -1 : 1);
            cob.tally(lhs == scale(rhs, i % 2 ? -1 : 1));
        }
        Cochain a = random_cochain(cx, 1, Ring::Z, rng);
        Cochain b = random_cochain(cx, 1, Ring::Z, rng);
        Cochain c = random_cochain(cx, 2, Ring::Z, rng);
        assoc.tally(cup(cup(a, b, 0), c, 0) == cup(a, cup(b, c, 0), 0));
        Cochain x = random_cochain(*s5, 2, Ring::Z, rng);
        Cochain y = random_cochain(*s5, 2, Ring::Z, rng);
        for (int i = 0; i <= 2; ++i)
            nat.tally(pullback(incl, cup(x, y, i)) ==
                      cup(pullback(incl, x), pullback(incl, y), i));
    }
}

void suite_lifts(ReproReport& rep, long long trials, std::mt19937_64& rng) {
    {
        // d(lift) = 2 lift^2 over every 1-cocycle of the 3-simplex (all exact,
        // spanned by vertex coboundaries).
        auto cx = build_simplex(3);
        Counter c1(rep, "degree-1 doubling identity, exhaustive");
        const auto& verts = cx->simplices(0);
        for (unsigned mask = 0; mask < (1u << verts.size()); ++mask) {
            Cochain e(cx.get(), 0, Ring::Z2);
            for (size_t i = 0; i < verts.size(); ++i)
                if ((mask >> i) & 1) e.set(verts[i], 1);
            Cochain A = special_lift(coboundary(e));
            c1.tally(coboundary(A) == scale(cup(A, A, 0), 2));
        }
    }
    {
        // d(lift) = 2 lift cup_1 lift over every 2-cocycle of the 4-simplex,
        // spanned by coboundaries of the edges avoiding vertex 0.
        auto cx = build_simplex(4);
        std::vector<Cochain> basis;
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j) {
                Cochain e(cx.get(), 1, Ring::Z2);
                e.set(Simplex{i, j}, 1);
                basis.push_back(coboundary(e));
            }
        Counter c2(rep, "degree-2 doubling identity, exhaustive");
        for (unsigned mask = 0; mask < (1u << basis.size()); ++mask) {
            Cochain b(cx.get(), 2, Ring::Z2);
            for (size_t i = 0; i < basis.size(); ++i)
                if ((mask >> i) & 1) b = b + basis[i];
            Cochain B = special_lift(b);
            c2.tally(coboundary(B) == scale(cup(B, B, 1), 2));
        }
    }
    {
        // (1/4) d R = (1/4) Dr + (1/2) Sq1(r) over every 1-cochain of the
        // 2-simplex.
        auto cx = build_simplex(2);
        const std::vector<Simplex> edges = {{0, 1}, {0, 2}, {1, 2}};
        Counter c3(rep, "quarter identity for lifts, exhaustive");
        for (int mask = 0; mask < 8; ++mask) {
            Cochain r(cx.get(), 1, Ring::Z2);
            for (int k = 0; k < 3; ++k)
                if ((mask >> k) & 1) r.set(edges[(size_t)k], 1);
            Cochain lhs = quarter(coboundary(special_lift(r)));
            Cochain rhs = quarter(special_lift(coboundary(r))) + half(sq(r, 1));
            c3.tally(lhs == rhs);
        }
    }
    {
        // (1/4)A^2 B - (1/4)A B^2 = d((1/8)AB) for special lifts of exact
        // 1-cocycles: exhaustive on small simplices, random elsewhere.
        auto eighth_identity = [](const Cochain& A, const Cochain& B) {
            Cochain lhs = coefficient_map(
                cup(cup(A, A, 0), B, 0) - cup(A, cup(B, B, 0), 0), Ring::QZ, Frac(1, 4));
            return lhs ==
                   coboundary(coefficient_map(cup(A, B, 0), Ring::QZ, Frac(1, 8)));
        };
        Counter c4(rep, "eighth-coboundary lift identity, exhaustive pairs");
        for (int n : {3, 4}) {
            auto cx = build_simplex(n);
            const auto& verts = cx->simplices(0);
            for (unsigned m1 = 0; m1 < (1u << verts.size()); ++m1)
                for (unsigned m2 = 0; m2 < (1u << verts.size()); ++m2) {
                    Cochain e1(cx.get(), 0, Ring::Z2), e2(cx.get(), 0, Ring::Z2);
                    for (size_t i = 0; i < verts.size(); ++i) {
                        if ((m1 >> i) & 1) e1.set(verts[i], 1);
                        if ((m2 >> i) & 1) e2.set(verts[i], 1);
                    }
                    c4.tally(eighth_identity(special_lift(coboundary(e1)),
                                             special_lift(coboundary(e2))));
                }
        }
        Counter c5(rep, "eighth-coboundary lift identity, random complexes");
        for (long long t = 0; t < std::max<long long>(trials, 5); ++t) {
            auto cx = random_complex(rng, 7, 3, 5);
            Cochain A = special_lift(coboundary(random_cochain(*cx, 0, Ring::Z2, rng)));
            Cochain B = special_lift(coboundary(random_cochain(*cx, 0, Ring::Z2, rng)));
            c5.tally(eighth_identity(A, B));
        }
    }
}

void suite_natural_ops(ReproReport& rep, long long trials, std::mt19937_64& rng) {
    // d x(a) = a^2 cup_2 a^2 + (a cup_1 a)^2, exhaustively over every degree-2
    // cocycle in the universal degree-6 context (this covers every smaller
    // context by restriction).
    Formula a = Formula::generator(2, 1, 0);
    Formula aa = cup(a, a, 0);
    Formula sq1a = cup(a, a, 1);
    Formula dx_target = cup(aa, aa, 2) + cup(sq1a, sq1a, 0);
    auto fill_z2 = [](int n) {
        return [n](const BatchEval& be, long long b, std::vector<std::vector<uint64_t>>& values) {
            std::vector<uint32_t> masks(64);
            for (int lane = 0; lane < 64; ++lane)
                masks[(size_t)lane] = ((uint32_t)b << 6) | (uint32_t)lane;
            fill_cocycle2(be, n, masks, values[0]);
        };
    };
    {
        Counter c(rep, "coboundary of x equals the composite squares, exhaustive");
        c.tally(vanishes_over(x_formula().d() + dx_target, 6, 1 << 9, fill_z2(6)));
    }
    {
        // x(dr) = Sq2(r dr) + Sq1(r) Sq1(dr) + d z(r), exhaustively over every
        // 1-cochain in the universal degree-5 context.
        Formula r = Formula::generator(1, 1, 0);
        Formula dr = r.d();
        Formula rdr = cup(r, dr, 0);
        Formula sq2_rdr = cup(rdr, rdr, 1) + cup(rdr, cup(dr, dr, 0), 2);
        Formula sq1_r = cup(r, r, 0) + cup(r, dr, 1);
        Formula lhs = x_formula().substitute_coboundary(0) + sq2_rdr +
                      cup(sq1_r, cup(dr, dr, 1), 0) + z_formula().d();
        auto fill = [](const BatchEval& be, long long b,
                       std::vector<std::vector<uint64_t>>& values) {
            std::vector<uint64_t> masks(64);
            for (int lane = 0; lane < 64; ++lane)
                masks[(size_t)lane] = ((uint64_t)b << 6) | (uint64_t)lane;
            fill_faces(be, 1, masks, values[0]);
        };
        Counter c(rep, "x on exact arguments bounded by z, exhaustive");
        c.tally(vanishes_over(lhs, 5, 1 << 9, fill));
    }
    {
        // d y4 = the nonlinearity defect of x, over seeded-random cocycle pairs.
        Formula defect = y4_formula().d() + delta_x_formula() + small_delta_x_formula();
        auto fill = [&rng](const BatchEval& be, long long,
                           std::vector<std::vector<uint64_t>>& values) {
            std::vector<uint32_t> am(64), bm(64);
            for (int lane = 0; lane < 64; ++lane) {
                uint64_t v = rng();
                am[(size_t)lane] = (uint32_t)(v & 1023u);
                bm[(size_t)lane] = (uint32_t)((v >> 10) & 1023u);
            }
            fill_cocycle2(be, 5, am, values[0]);
            fill_cocycle2(be, 5, bm, values[1]);
        };
        long long batches = (std::max<long long>(trials, 64) + 63) / 64;
        Counter c(rep, "coboundary of y4 bounds the defect, random pairs");
        c.tally(vanishes_over(defect, 5, batches, fill));
        rep.value("random pair count", std::to_string(batches * 64));

        Counter cc(rep, "coboundary of y4 bounds the defect, random complexes");
        long long on_complexes = std::max<long long>(trials / 100, 10);
        for (long long t = 0; t < on_complexes; ++t) {
            auto cx = random_complex(rng, 9, 5, 6);
            Cochain x = random_coboundary(*cx, 2, Ring::Z2, rng);
            Cochain y = random_coboundary(*cx, 2, Ring::Z2, rng);
            auto [big, small] = delta_terms(x, y);
            cc.tally(coboundary(y4_op(x, y)) == big + small);
        }
    }
    {
        // The three side-condition cochains of y4 are natural coboundaries.
        Counter c(rep, "side conditions are natural coboundaries");
        c.tally(natural_coboundary_cocycle_args(([&] {
            std::vector<FTerm> keep;
            for (const FTerm& t : y4_formula().terms()) {
                bool pure = true;
                for (const FFactor& f : t)
                    if (f.arg != 0) pure = false;
                if (pure) keep.push_back(t);
            }
            return Formula::from_terms(4, 1, std::move(keep));
        })()));
        c.tally(natural_coboundary_cocycle_args(([&] {
            std::vector<FTerm> keep;
            for (const FTerm& t : y4_formula().terms()) {
                bool pure = true;
                FTerm r;
                for (const FFactor& f : t) {
                    if (f.arg != 1) pure = false;
                    r.push_back(FFactor{0, f.face});
                }
                if (pure) keep.push_back(std::move(r));
            }
            return Formula::from_terms(4, 1, std::move(keep));
        })()));
        Formula diag =
            y4_formula().rename_args({0, 0}, 1) + cup(a, cup(a, a, 1), 1) + cup(a, a, 0);
        c.tally(natural_coboundary_cocycle_args(diag));
    }
    {
        // Re-derivation of y4 from its defining system, equivalent to the
        // shipped formula up to a natural coboundary; flipping the diagonal
        // side condition shifts the solution by the product term.
        Counter c(rep, "rediscovered y4 matches up to natural coboundary");
        DiscoverResult plain = discover_y4(false);
        DiscoverResult sided = discover_y4(true);
        DiscoverResult flipped = discover_y4(true, true);
        c.tally(plain.found && sided.found && flipped.found);
        c.tally(plain.found &&
                natural_coboundary_cocycle_args(plain.formula + y4_formula()));
        c.tally(sided.found &&
                natural_coboundary_cocycle_args(sided.formula + y4_formula()));
        Formula ab = cup(Formula::generator(2, 2, 0), Formula::generator(2, 2, 1), 0);
        c.tally(flipped.found &&
                natural_coboundary_cocycle_args(flipped.formula + y4_formula() + ab));
    }
}

void suite_group_laws(ReproReport& rep, long long trials, std::mt19937_64& rng,
                      const OrderedComplex* user_cx) {
    auto s4 = build_boundary_simplex(5);
    auto s5 = build_boundary_simplex(6);
    std::vector<const OrderedComplex*> pool = {s4.get(), s5.get()};
    std::vector<std::unique_ptr<OrderedComplex>> extra;
    for (int k = 0; k < 4; ++k) {
        extra.push_back(random_complex(rng, 9, 5, 6));
        pool.push_back(extra.back().get());
    }
    if (user_cx) pool.push_back(user_cx);

    Counter add(rep, "D additive over the product, exact");
    Counter assoc(rep, "associativity modulo coboundary");
    Counter inv(rep, "inverse yields a null-shaped product");
    Counter dd(rep, "D after D' vanishes, exact");
    Counter comm(rep, "commutators null with r = 0 witnesses");
    Counter rel(rep, "all three relation families in the kernel, exact");
    for (long long t = 0; t < trials; ++t) {
        const OrderedComplex& cx = *pool[(size_t)(t % (long long)pool.size())];
        Triple t1 = random_triple(cx, rng), t2 = random_triple(cx, rng);
        Triple t3 = random_triple(cx, rng);
        add.tally(basic_equation_D(triple_product(t1, t2)) ==
                  basic_equation_D(t1) + basic_equation_D(t2));
        Triple lhs = triple_product(triple_product(t1, t2), t3);
        Triple rhs = triple_product(t1, triple_product(t2, t3));
        assoc.tally(lhs.p == rhs.p && lhs.a == rhs.a && is_coboundary_qz2(lhs.w - rhs.w));
        Triple pr = triple_product(t1, triple_inverse(t1));
        inv.tally(pr.p.is_zero() && pr.a.is_zero() && is_coboundary_qz2(pr.w));
        RelationPair r = random_relation(cx, rng);
        dd.tally(basic_equation_D(d_prime(r)).is_zero());
        bool in_kernel = true;
        Triple first = zero_triple(cx);
        first.w = coboundary(random_qz(cx, 3, rng));
        in_kernel = in_kernel && basic_equation_D(first).is_zero();
        RelationPair c_only{r.c, Cochain(&cx, 1, Ring::Z2)};
        in_kernel = in_kernel && basic_equation_D(d_prime(c_only)).is_zero();
        RelationPair r_only{Cochain(&cx, 2, Ring::Z2), r.r};
        in_kernel = in_kernel && basic_equation_D(d_prime(r_only)).is_zero();
        rel.tally(in_kernel);
        // Commutator nullity needs the solver; keep it on the smallest space.
        if (t % 8 == 0) {
            Triple k1 = random_kernel_triple(*s4, rng), k2 = random_kernel_triple(*s4, rng);
            Triple c = triple_product(triple_product(k1, k2),
                                      triple_product(triple_inverse(k1), triple_inverse(k2)));
            NullResult res = is_null_triple(c);
            comm.tally(res.status == NullStatus::Yes && res.witness &&
                       res.witness->r.is_zero());
        }
    }
}

void suite_relations(ReproReport& rep, long long trials, std::mt19937_64& rng,
                     const OrderedComplex* user_cx) {
    auto s5 = build_boundary_simplex(6);
    Counter mult(rep, "D' multiplicative modulo coboundary");
    Counter invc(rep, "relation group inverse, exact");
    Counter closed(rep, "closed form of the (c, 0) image, exact");
    Counter halfz(rep, "half z of an exact 1-cochain is a coboundary");
    for (long long t = 0; t < trials; ++t) {
        std::unique_ptr<OrderedComplex> rnd;
        const OrderedComplex* cx = s5.get();
        if (t % 3 == 1) {
            rnd = random_complex(rng, 9, 5, 6);
            cx = rnd.get();
        } else if (t % 3 == 2 && user_cx) {
            cx = user_cx;
        }
        RelationPair r1 = random_relation(*cx, rng), r2 = random_relation(*cx, rng);
        Triple lhs = d_prime(relation_product(r1, r2));
        Triple rhs = triple_product(d_prime(r1), d_prime(r2));
        mult.tally(lhs.p == rhs.p && lhs.a == rhs.a && is_coboundary_qz2(lhs.w - rhs.w));
        RelationPair e = relation_product(r1, relation_inverse(r1));
        invc.tally(e.c.is_zero() && e.r.is_zero());
        RelationPair c_only{r1.c, Cochain(cx, 1, Ring::Z2)};
        Triple second = d_prime(c_only);
        closed.tally(second.w == half(sq(r1.c, 2)) && second.p == coboundary(r1.c) &&
                     second.a.is_zero());
        Cochain ds = coboundary(random_cochain(*cx, 0, Ring::Z2, rng));
        halfz.tally(is_coboundary_qz2(half(z_op(ds))));
    }
}

void suite_suspension(ReproReport& rep, long long trials, std::mt19937_64& rng) {
    {
        // s(x cup_i y) = (-1)^(p+i+1) s(x) cup_(i+1) s(y) on integral cochains.
        auto cx = build_boundary_simplex(3);
        auto su = suspension(*cx);
        Counter sign(rep, "suspension sign formula for cup_i, integral");
        for (long long t = 0; t < trials; ++t) {
            for (auto [p, q, i] :
                 {std::tuple{1, 1, 0}, {1, 1, 1}, {2, 1, 1}, {1, 2, 0}, {2, 2, 2}}) {
                Cochain x = random_cochain(*cx, p, Ring::Z, rng);
                Cochain y = random_cochain(*cx, q, Ring::Z, rng);
                Cochain lhs = suspend_cochain(cup(x, y, i), *su.complex, su.upper);
                Cochain sx = suspend_cochain(x, *su.complex, su.upper);
                Cochain sy = suspend_cochain(y, *su.complex, su.upper);
                sign.tally(lhs == scale(cup(sx, sy, i + 1), (p + i + 1) % 2 ? -1 : 1));
            }
        }
    }
    auto s4 = build_boundary_simplex(5);
    auto susp = suspension(*s4);
    {
        Counter ker(rep, "suspended triples satisfy the basic equation");
        for (long long t = 0; t < std::max<long long>(trials / 10, 10); ++t) {
            G3Triple g = random_g3(*s4, rng);
            ker.tally(basic_equation_D(suspend_triple(g, susp)).is_zero());
        }
    }
    {
        Counter des(rep, "product desuspends modulo null");
        long long pairs = std::max<long long>(trials / 20, 50);
        for (long long t = 0; t < pairs; ++t) {
            G3Triple t1 = random_g3(*s4, rng), t2 = random_g3(*s4, rng);
            Triple s1 = suspend_triple(t1, susp), s2 = suspend_triple(t2, susp);
            Triple prod = triple_product(s1, s2);
            Triple down = suspend_triple(g3_product(t1, t2), susp);
            NullResult res = is_null_triple(triple_product(prod, triple_inverse(down)));
            des.tally(prod.a == down.a && res.status == NullStatus::Yes);
        }
    }
}

void suite_filtration(ReproReport& rep) {
    FiltrationReport first;
    int first_sq1 = 0;
    for (int n : {4, 5}) {
        auto rp = build_rp_n(n);
        auto susp = suspension(*rp.complex);
        FiltrationReport f = filtration_quotients(*susp.complex);
        ExtensionReport e = extension_invariants(*susp.complex);
        std::string tag = "suspended projective " + std::to_string(n) + "-space";
        rep.value(tag + ": dim of the stable degree-2 stage", std::to_string(f.dim_ssh2));
        rep.value(tag + ": dim of the degree-3 stage", std::to_string(f.dim_sh3));
        rep.value(tag + ": top quotient order",
                  std::to_string((1LL << f.qh4_free_rank) == 1 ? f.qh4_torsion_order
                                                               : 0));
        rep.value(tag + ": Sq1 extension rank", std::to_string(e.sq1_rank));
        rep.check(tag + ": stage dims 1/1", f.dim_ssh2 == 1 && f.dim_sh3 == 1);
        rep.check(tag + ": top quotient has order 2",
                  f.qh4_free_rank == 0 && f.qh4_torsion_order == 2);
        rep.check(tag + ": Sq1 rank 1 (cyclic of order 8)", e.sq1_rank == 1);
        if (n == 4) {
            first = f;
            first_sq1 = e.sq1_rank;
        } else {
            rep.check("both truncations give identical output",
                      f.dim_ssh2 == first.dim_ssh2 && f.dim_sh3 == first.dim_sh3 &&
                          f.qh4_free_rank == first.qh4_free_rank &&
                          f.qh4_torsion_order == first.qh4_torsion_order &&
                          e.sq1_rank == first_sq1);
        }
    }
}

}  // namespace

ReproReport verify_suite(const std::string& name, long long trials, std::uint64_t seed,
                         const OrderedComplex* user_cx) {
    auto t0 = Clock::now();
    ReproReport rep;
    rep.id = "verify-" + name;
    rep.value("trials", std::to_string(trials));
    rep.value("seed", std::to_string(seed));
    std::mt19937_64 rng(seed);
    if (name == "cupi") suite_cupi(rep, trials, rng, user_cx);
    else if (name == "lifts") suite_lifts(rep, trials, rng);
    else if (name == "natural-ops") suite_natural_ops(rep, trials, rng);
    else if (name == "group-laws") suite_group_laws(rep, trials, rng, user_cx);
    else if (name == "relations") suite_relations(rep, trials, rng, user_cx);
    else if (name == "suspension") suite_suspension(rep, trials, rng);
    else if (name == "filtration") suite_filtration(rep);
    else throw std::invalid_argument("verify_suite: unknown suite " + name);
    rep.millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    return rep;
}

} // namespace spin4
