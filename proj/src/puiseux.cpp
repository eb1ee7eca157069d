#include "contact/puiseux.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace contact {

namespace {

// ---------------------------------------------------------------------------
// bivariate polynomials as y-coefficient lists over K[x]
// ---------------------------------------------------------------------------

using YPoly = std::vector<FPoly>;  // index j: coefficient of y^j, a poly in x

void ynormalize(YPoly& f) {
    while (!f.empty() && fp_is_zero(f.back())) f.pop_back();
}

bool yis_zero(const YPoly& f) {
    for (const auto& c : f)
        if (!fp_is_zero(c)) return false;
    return true;
}

YPoly ypoly_from(const Poly& p) {
    if (p.nvars() != 2) throw std::invalid_argument("two-variable polynomial expected");
    YPoly out;
    for (const auto& [m, c] : p.terms()) {
        std::size_t j = m[1];
        if (out.size() <= j) out.resize(j + 1);
        FPoly& cx = out[j];
        if (cx.size() <= m[0]) cx.resize(m[0] + 1);
        cx[m[0]] = cx[m[0]] + FieldElem(c);
    }
    for (auto& c : out) fp_normalize(c);
    ynormalize(out);
    return out;
}

Poly poly_from(const YPoly& f) {
    Poly out(2);
    for (std::size_t j = 0; j < f.size(); ++j)
        for (std::size_t i = 0; i < f[j].size(); ++i) {
            if (f[j][i].is_zero()) continue;
            auto v = f[j][i].demote();
            if (!v) throw std::logic_error("bivariate coefficient left the base field");
            Monomial m(2);
            m[0] = static_cast<std::uint32_t>(i);
            m[1] = static_cast<std::uint32_t>(j);
            out.add_term(m, *v);
        }
    return out;
}

YPoly y_derivative(const YPoly& f) {
    YPoly out;
    for (std::size_t j = 1; j < f.size(); ++j)
        out.push_back(fp_scale(f[j], FieldElem(static_cast<long>(j))));
    ynormalize(out);
    return out;
}

FPoly x_content(const YPoly& f) {
    FPoly g;
    for (const auto& c : f) {
        if (fp_is_zero(c)) continue;
        g = fp_is_zero(g) ? fp_monic(c) : fp_gcd(g, c);
        if (fp_deg(g) == 0) break;
    }
    return g;
}

YPoly y_scale_down(const YPoly& f, const FPoly& d) {
    YPoly out;
    for (const auto& c : f) {
        auto [q, r] = fp_divrem(c, d);
        if (!fp_is_zero(r)) throw std::logic_error("inexact content division");
        out.push_back(q);
    }
    ynormalize(out);
    return out;
}

YPoly y_sub(const YPoly& a, const YPoly& b) {
    YPoly out = a;
    if (b.size() > out.size()) out.resize(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) out[j] = fp_sub(out[j], b[j]);
    ynormalize(out);
    return out;
}

YPoly y_scale(const YPoly& a, const FPoly& c) {
    YPoly out;
    for (const auto& k : a) out.push_back(fp_mul(k, c));
    ynormalize(out);
    return out;
}

// pseudo-remainder of a by b in y
YPoly y_prem(YPoly a, const YPoly& b) {
    ynormalize(a);
    int db = static_cast<int>(b.size()) - 1;
    const FPoly& lc = b.back();
    while (static_cast<int>(a.size()) - 1 >= db && !yis_zero(a)) {
        int da = static_cast<int>(a.size()) - 1;
        FPoly head = a.back();
        // a := lc * a - head * y^{da-db} * b
        YPoly scaled = y_scale(a, lc);
        YPoly shifted(da - db);
        for (const auto& c : b) shifted.push_back(fp_mul(c, head));
        a = y_sub(scaled, shifted);  // leading terms cancel exactly
        ynormalize(a);
    }
    return a;
}

YPoly y_primitive(const YPoly& f) {
    FPoly c = x_content(f);
    if (fp_is_zero(c) || fp_deg(c) <= 0) {
        if (fp_deg(c) == 0) return y_scale_down(f, c);
        return f;
    }
    return y_scale_down(f, c);
}

YPoly ygcd(YPoly a, YPoly b) {
    ynormalize(a);
    ynormalize(b);
    if (yis_zero(a)) return y_primitive(b);
    if (yis_zero(b)) return y_primitive(a);
    FPoly ca = x_content(a), cb = x_content(b);
    FPoly cg = fp_gcd(ca, cb);
    a = y_scale_down(a, ca);
    b = y_scale_down(b, cb);
    while (!yis_zero(b)) {
        if (b.size() > a.size()) std::swap(a, b);
        YPoly r = y_prem(a, b);
        a = std::move(b);
        b = y_primitive(r);
    }
    a = y_primitive(a);
    // fold the content gcd back in
    YPoly out;
    for (const auto& c : a) out.push_back(fp_mul(c, cg));
    return out;
}

// exact division in K[x][y]
YPoly y_exact_div(YPoly a, const YPoly& b) {
    ynormalize(a);
    if (yis_zero(a)) return {};
    int db = static_cast<int>(b.size()) - 1;
    const FPoly& lc = b.back();
    YPoly quot(a.size() - b.size() + 1);
    while (!yis_zero(a)) {
        int da = static_cast<int>(a.size()) - 1;
        if (da < db) throw std::logic_error("inexact bivariate division");
        auto [qc, rc] = fp_divrem(a.back(), lc);
        if (!fp_is_zero(rc)) throw std::logic_error("inexact bivariate division");
        quot[da - db] = qc;
        YPoly sub(da - db);
        for (const auto& c : b) sub.push_back(fp_mul(c, qc));
        a = y_sub(a, sub);  // leading terms cancel exactly
        ynormalize(a);
    }
    ynormalize(quot);
    return quot;
}

// ---------------------------------------------------------------------------
// support-map form used by the expansion itself
// ---------------------------------------------------------------------------

// (x-exponent, y-exponent) -> coefficient
using Biv = std::map<std::pair<long, long>, FieldElem>;

Biv biv_from(const YPoly& f) {
    Biv out;
    for (std::size_t j = 0; j < f.size(); ++j)
        for (std::size_t i = 0; i < f[j].size(); ++i)
            if (!f[j][i].is_zero()) out[{static_cast<long>(i), static_cast<long>(j)}] = f[j][i];
    return out;
}

void biv_add(Biv& f, long i, long j, const FieldElem& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(i, j);
    auto it = f.find(key);
    if (it == f.end()) {
        f.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) f.erase(it);
    }
}

long y_multiplicity(const Biv& f) {
    long m = -1;
    for (const auto& [ij, c] : f)
        if (m < 0 || ij.second < m) m = ij.second;
    return m;
}

Biv shift_down_y(const Biv& f, long k) {
    Biv out;
    for (const auto& [ij, c] : f) out[{ij.first, ij.second - k}] = c;
    return out;
}

bool has_constant_term(const Biv& f) { return f.count({0, 0}) != 0; }

struct Face {
    long p = 1, q = 1;                          // slope p/q in lowest terms
    std::vector<std::pair<long, long>> points;  // support points on the face
};

// compact faces of the Newton polygon carrying root directions y ~ c x^{p/q}
std::vector<Face> polygon_faces(const Biv& f) {
    std::set<std::pair<long, long>> slopes;
    for (const auto& [a, ca] : f)
        for (const auto& [b, cb] : f) {
            if (a.second <= b.second) continue;
            long dp = b.first - a.first;
            long dq = a.second - b.second;
            if (dp <= 0) continue;  // slope must be positive
            long g = std::__gcd(dp, dq);
            slopes.insert({dp / g, dq / g});
        }
    std::vector<Face> out;
    for (const auto& [p, q] : slopes) {
        // minimize i*q + j*p
        long w = 0;
        bool first = true;
        for (const auto& [ij, c] : f) {
            long v = ij.first * q + ij.second * p;
            if (first || v < w) {
                w = v;
                first = false;
            }
        }
        Face face;
        face.p = p;
        face.q = q;
        for (const auto& [ij, c] : f)
            if (ij.first * q + ij.second * p == w) face.points.push_back(ij);
        std::set<long> js;
        for (const auto& pt : face.points) js.insert(pt.second);
        if (js.size() >= 2) out.push_back(std::move(face));
    }
    return out;
}

// face polynomial in u = c^q, normalized so u = 0 is not a root
FPoly face_psi(const Biv& f, const Face& face) {
    long jmin = face.points.front().second;
    for (const auto& pt : face.points) jmin = std::min(jmin, pt.second);
    FPoly psi;
    for (const auto& pt : face.points) {
        long k = (pt.second - jmin) / face.q;
        if (k * face.q != pt.second - jmin)
            throw std::logic_error("face lattice points misaligned with the slope");
        if (psi.size() <= static_cast<std::size_t>(k)) psi.resize(k + 1);
        psi[k] = f.at(pt);
    }
    fp_normalize(psi);
    return psi;
}

// G(t, y1) = F(mu t^q, t^p (nu + y1)) / t^w
Biv face_substitute(const Biv& f, const Face& face, const FieldElem& mu, const FieldElem& nu,
                    std::uint64_t& steps, std::uint64_t max_steps) {
    long w = 0;
    bool first = true;
    for (const auto& [ij, c] : f) {
        long v = ij.first * face.q + ij.second * face.p;
        if (first || v < w) {
            w = v;
            first = false;
        }
    }
    Biv out;
    for (const auto& [ij, c] : f) {
        if (++steps > max_steps) throw BudgetExceededError("branch expansion step budget exceeded");
        long base_t = ij.first * face.q + ij.second * face.p - w;
        // (nu + y1)^j expanded binomially
        long j = ij.second;
        FieldElem mu_pow = mu.pow(static_cast<unsigned long>(ij.first));
        std::vector<FieldElem> nupow(j + 1);
        nupow[0] = FieldElem(1);
        for (long k = 1; k <= j; ++k) nupow[k] = nupow[k - 1] * nu;
        Integer binom = 1;
        for (long k = 0; k <= j; ++k) {
            if (k > 0) binom = binom * (j - k + 1) / k;
            FieldElem coef = c * mu_pow * nupow[j - k] * FieldElem(GaussianRational(Rational(binom)));
            biv_add(out, base_t, k, coef);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// breadth-limited expansion
// ---------------------------------------------------------------------------

struct PartialBranch {
    FPoly x, y;  // components in t
    FieldPtr field;
    unsigned field_degree = 1;
    bool exact = false;
};

FPoly fp_pow(const FPoly& f, unsigned e) {
    FPoly acc{FieldElem(1)};
    FPoly base = f;
    while (e) {
        if (e & 1) acc = fp_mul(acc, base);
        base = fp_mul(base, base);
        e >>= 1;
    }
    return acc;
}

std::pair<long, long> bezout_for(long p, long q) {
    // integers (a, b) with a*q - b*p = 1
    long a0 = 1, b0 = 0, a1 = 0, b1 = 1;  // rows track combinations of (q, p)
    long r0 = q, r1 = p;
    while (r1 != 0) {
        long k = r0 / r1;
        std::swap(r0 -= k * r1, r1);
        std::swap(a0 -= k * a1, a1);
        std::swap(b0 -= k * b1, b1);
    }
    if (r0 != 1) throw std::logic_error("slope not in lowest terms");
    // a0*q + b0*p = 1  ->  a = a0, b = -b0
    return {a0, -b0};
}

FieldElem integer_power(const FieldElem& u, long e) {
    if (e >= 0) return u.pow(static_cast<unsigned long>(e));
    return u.inverse().pow(static_cast<unsigned long>(-e));
}

struct ExpandContext {
    const PuiseuxConfig* cfg;
    std::uint64_t steps = 0;
    unsigned ext_counter = 1;
};

std::vector<PartialBranch> expand(const Biv& f, const FieldPtr& field, unsigned depth,
                                  ExpandContext& ctx) {
    std::vector<PartialBranch> out;
    Biv cur = f;

    long ym = y_multiplicity(cur);
    if (ym > 0) {
        // y = 0 solves the equation identically
        PartialBranch b;
        b.x = FPoly{FieldElem(0), FieldElem(1)};  // t
        b.y = FPoly{};
        b.field = field;
        b.exact = true;
        out.push_back(std::move(b));
        cur = shift_down_y(cur, ym);
    }
    if (has_constant_term(cur)) return out;  // no further roots through the origin
    if (cur.empty()) return out;

    if (depth == 0) {
        PartialBranch b;
        b.x = FPoly{FieldElem(0), FieldElem(1)};
        b.y = FPoly{};
        b.field = field;
        b.exact = false;  // truncated; precision certified by the caller
        out.push_back(std::move(b));
        return out;
    }

    for (const Face& face : polygon_faces(cur)) {
        FPoly psi = face_psi(cur, face);
        for (const auto& [factor, mult] : certified_factors(psi, field)) {
            if (fp_deg(factor) == 1 && factor[0].is_zero()) continue;  // u = 0 is not a direction
            RootInExtension root = attach_root(factor, field, ctx.cfg->extensions, ctx.ext_counter);
            if (root.degree > 1) ++ctx.ext_counter;
            auto [abez, bbez] = bezout_for(face.p, face.q);
            FieldElem mu = integer_power(root.value, bbez);
            FieldElem nu = integer_power(root.value, abez);
            Biv lifted;
            for (const auto& [ij, c] : cur) lifted[ij] = c.lifted_to(root.field);
            Biv g = face_substitute(lifted, face, mu, nu, ctx.steps, ctx.cfg->max_steps);

            for (PartialBranch sub : expand(g, root.field, depth - 1, ctx)) {
                PartialBranch b;
                b.field = sub.field;
                b.field_degree = root.degree * sub.field_degree;
                b.exact = sub.exact;
                FPoly xs_q = fp_pow(sub.x, static_cast<unsigned>(face.q));
                FPoly xs_p = fp_pow(sub.x, static_cast<unsigned>(face.p));
                b.x = fp_scale(xs_q, mu.lifted_to(sub.field));
                FPoly inner = sub.y;
                if (inner.empty()) inner.resize(1);
                inner[0] += nu.lifted_to(sub.field);
                fp_normalize(inner);
                b.y = fp_mul(xs_p, inner);
                out.push_back(std::move(b));
            }
        }
        if (out.size() > 64)
            throw BudgetExceededError("branch count budget exceeded during expansion");
    }
    return out;
}

}  // namespace

Poly bivariate_gcd(const Poly& a, const Poly& b) {
    YPoly ga = ypoly_from(a), gb = ypoly_from(b);
    return poly_from(ygcd(ga, gb));
}

Poly bivariate_squarefree_part(const Poly& f) {
    YPoly yf = ypoly_from(f);
    YPoly dy = y_derivative(yf);
    if (yis_zero(dy)) return f;  // constant in y
    YPoly g = ygcd(yf, dy);
    if (g.size() <= 1 && (g.empty() || fp_deg(g[0]) <= 0)) return f;
    return poly_from(y_exact_div(yf, g));
}

std::vector<PuiseuxBranch> newton_puiseux(const Poly& f_in, const PuiseuxConfig& cfg) {
    if (f_in.nvars() != 2) throw std::invalid_argument("branch expansion needs two variables");
    if (f_in.is_zero()) throw std::invalid_argument("branch expansion of the zero germ");
    if (!f_in.coefficient(Monomial(2)).is_zero())
        throw std::invalid_argument("germ does not vanish at the origin");

    std::vector<PuiseuxBranch> out;
    YPoly f = ypoly_from(f_in);

    // vertical branch x = 0
    {
        FPoly cx = x_content(f);
        std::size_t xmult = 0;
        while (xmult < cx.size() && cx[xmult].is_zero()) ++xmult;
        if (!fp_is_zero(cx) && xmult > 0) {
            PuiseuxBranch b;
            b.jet = CurveJet::from_components({FPoly{}, FPoly{FieldElem(0), FieldElem(1)}});
            b.ramification = 1;
            out.push_back(std::move(b));
            // divide the content's x-power out of every coefficient
            for (auto& c : f) {
                if (fp_is_zero(c)) continue;
                c.erase(c.begin(), c.begin() + static_cast<long>(xmult));
            }
        }
        // a content that is a unit germ carries no branches; drop it
        FPoly c2 = x_content(f);
        if (fp_deg(c2) > 0) f = y_scale_down(f, c2);
    }

    YPoly dy = y_derivative(f);
    if (!yis_zero(dy)) {
        YPoly g = ygcd(f, dy);
        if (g.size() > 1 || (g.size() == 1 && fp_deg(g[0]) > 0)) f = y_exact_div(f, g);
    }

    Poly reduced = poly_from(f);
    Poly reduced_dy(2);
    {
        YPoly d2 = y_derivative(f);
        reduced_dy = poly_from(d2.empty() ? YPoly{} : d2);
    }

    Biv base = biv_from(f);
    if (base.empty()) return out;

    unsigned depth = cfg.precision + 8;
    while (true) {
        ExpandContext ctx{&cfg, 0, 1};
        std::vector<PartialBranch> partial = expand(base, nullptr, depth, ctx);
        std::vector<PuiseuxBranch> built;
        bool all_certified = true;
        for (auto& pb : partial) {
            PuiseuxBranch b;
            b.field_degree = pb.field_degree;
            // ramification = t-order of the x component (1 for the vertical branch)
            unsigned ord = 0;
            while (ord < pb.x.size() && pb.x[ord].is_zero()) ++ord;
            b.ramification = std::max(ord, 1u);
            if (ord >= pb.x.size()) b.ramification = 1;
            CurveJet jet = CurveJet::from_components({pb.x, pb.y}, pb.field, kExactPrecision, true);
            if (pb.exact) {
                b.jet = std::move(jet);
                built.push_back(std::move(b));
                continue;
            }
            FPoly residual = pullback_series(reduced, jet);
            if (fp_is_zero(residual)) {
                b.jet = std::move(jet);
                built.push_back(std::move(b));
                continue;
            }
            FPoly deriv = pullback_series(reduced_dy, jet);
            unsigned rr = 0;
            while (rr < residual.size() && residual[rr].is_zero()) ++rr;
            unsigned cc = 0;
            while (cc < deriv.size() && deriv[cc].is_zero()) ++cc;
            if (fp_is_zero(deriv) || rr <= 2 * cc || rr - cc < cfg.precision) {
                all_certified = false;
                break;
            }
            jet.exact = false;
            jet.precision = rr - cc;
            b.jet = std::move(jet);
            built.push_back(std::move(b));
        }
        if (all_certified) {
            for (auto& b : built) out.push_back(std::move(b));
            return out;
        }
        if (depth >= cfg.max_depth)
            throw BudgetExceededError("branch precision budget exceeded (depth cap reached)");
        depth = std::min(cfg.max_depth, depth * 2);
    }
}

}  // namespace contact
