#include "contact/decomp.hpp"

#include <algorithm>
#include <map>

namespace contact {

unsigned HoloDecomposition::positive_count() const {
    unsigned k = 0;
    for (const auto& s : summands) k += s.sign > 0;
    return k;
}

unsigned HoloDecomposition::negative_count() const {
    return static_cast<unsigned>(summands.size()) - positive_count();
}

unsigned HoloDecomposition::pair_size() const {
    return std::max(positive_count(), negative_count());
}

RealPoly HoloDecomposition::reconstruct() const {
    RealPoly r = RealPoly::real_part(h);
    for (const auto& s : summands) {
        RealPoly sq = RealPoly::norm_square(s.p).scaled(GaussianRational(s.weight));
        if (s.sign > 0)
            r += sq;
        else
            r -= sq;
    }
    return r;
}

RealPoly truncate_jet(const RealPoly& r, unsigned k) {
    if (k < 1) throw std::invalid_argument("jet order must be at least 1");
    return r.truncated(k);
}

HoloDecomposition polarize(const RealPoly& r) {
    if (!r.is_real()) throw std::invalid_argument("polarization needs a real germ");
    if (!r.coefficient({Monomial(r.nvars()), Monomial(r.nvars())}).is_zero())
        throw std::invalid_argument("germ must vanish at the origin");

    HoloDecomposition out;
    out.n = r.nvars();
    out.h = Poly(r.nvars());

    // pure part: (a, 0) terms with doubled coefficients
    std::vector<Monomial> basis;
    std::map<std::pair<std::size_t, std::size_t>, GaussianRational> m;  // Hermitian matrix
    std::map<Monomial, std::size_t, MonoBefore> index;
    for (const auto& [bm, c] : r.terms()) {
        if (bm.zbar.degree() == 0) {
            out.h.add_term(bm.z, c + c);
            continue;
        }
        if (bm.z.degree() == 0) continue;  // conjugate of a pure term
        for (const Monomial* mono : {&bm.z, &bm.zbar}) {
            if (!index.count(*mono)) {
                index.emplace(*mono, basis.size());
                basis.push_back(*mono);
            }
        }
        m[{index[bm.z], index[bm.zbar]}] = c;
    }

    auto mat = [&](std::size_t i, std::size_t j) -> GaussianRational {
        auto it = m.find({i, j});
        return it == m.end() ? GaussianRational() : it->second;
    };
    auto set_mat = [&](std::size_t i, std::size_t j, const GaussianRational& v) {
        if (v.is_zero())
            m.erase({i, j});
        else
            m[{i, j}] = v;
    };

    std::vector<bool> active(basis.size(), true);
    auto monomial_poly = [&](std::size_t i) {
        return Poly::from_term(out.n, basis[i], GaussianRational(1));
    };

    auto emit = [&](int sign, Rational weight, Poly p) {
        if (weight == 0 || p.is_zero()) return;
        if (weight < 0) {
            sign = -sign;
            weight = -weight;
        }
        out.summands.push_back({sign, std::move(weight), std::move(p)});
    };

    while (!m.empty()) {
        // rational pivot of smallest height first
        std::optional<std::size_t> pivot;
        Integer pivot_height;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (!active[i]) continue;
            GaussianRational d = mat(i, i);
            if (d.is_zero()) continue;
            Integer hgt = height(d.re());
            if (!pivot || hgt < pivot_height) {
                pivot = i;
                pivot_height = hgt;
            }
        }
        if (pivot) {
            std::size_t k = *pivot;
            Rational d = mat(k, k).re();  // Hermitian diagonal is real
            Poly l = monomial_poly(k);
            for (std::size_t i = 0; i < basis.size(); ++i) {
                if (!active[i] || i == k) continue;
                GaussianRational cik = mat(i, k);
                if (!cik.is_zero()) l += monomial_poly(i).scaled(cik / GaussianRational(d));
            }
            for (std::size_t i = 0; i < basis.size(); ++i) {
                if (!active[i] || i == k) continue;
                for (std::size_t j = 0; j < basis.size(); ++j) {
                    if (!active[j] || j == k) continue;
                    GaussianRational v =
                        mat(i, j) - mat(i, k) * mat(k, j) / GaussianRational(d);
                    set_mat(i, j, v);
                }
            }
            for (std::size_t i = 0; i < basis.size(); ++i) {
                m.erase({i, k});
                m.erase({k, i});
            }
            active[k] = false;
            emit(d > 0 ? 1 : -1, abs(d), l);
            continue;
        }

        // all active diagonals vanish: take a two-dimensional block
        std::optional<std::pair<std::size_t, std::size_t>> block;
        Integer block_height;
        for (const auto& [ij, c] : m) {
            if (!active[ij.first] || !active[ij.second] || ij.first == ij.second) continue;
            Integer hgt = height(c.re()) + height(c.im());
            if (!block || hgt < block_height ||
                (hgt == block_height && ij < *block)) {
                block = ij;
                block_height = hgt;
            }
        }
        if (!block) break;  // numerically impossible: m nonempty implies an off-diagonal entry
        auto [bi, bj] = *block;
        GaussianRational c = mat(bi, bj);
        Poly ui = monomial_poly(bi);
        Poly uj = monomial_poly(bj);
        for (std::size_t t = 0; t < basis.size(); ++t) {
            if (!active[t] || t == bi || t == bj) continue;
            GaussianRational a_t = mat(t, bj) / c;         // coefficient on u_i
            GaussianRational b_t = mat(t, bi) / c.conj();  // coefficient on u_j
            if (!a_t.is_zero()) ui += monomial_poly(t).scaled(a_t);
            if (!b_t.is_zero()) uj += monomial_poly(t).scaled(b_t);
        }
        for (std::size_t s = 0; s < basis.size(); ++s) {
            if (!active[s] || s == bi || s == bj) continue;
            for (std::size_t t = 0; t < basis.size(); ++t) {
                if (!active[t] || t == bi || t == bj) continue;
                GaussianRational v = mat(s, t) - mat(s, bj) * mat(bi, t) / c -
                                     mat(s, bi) * mat(bj, t) / c.conj();
                set_mat(s, t, v);
            }
        }
        for (std::size_t t = 0; t < basis.size(); ++t) {
            m.erase({t, bi});
            m.erase({bi, t});
            m.erase({t, bj});
            m.erase({bj, t});
        }
        active[bi] = active[bj] = false;
        Poly plus = ui + uj.scaled(c.conj());
        Poly minus = ui - uj.scaled(c.conj());
        emit(1, Rational(1, 2), plus);
        emit(-1, Rational(1, 2), minus);
    }

    return out;
}

FGPair extract_fg(const HoloDecomposition& d) {
    // diagnose all weights together so the error can suggest one rescale
    std::optional<Integer> common_kernel;
    bool same_kernel = true;
    for (const auto& s : d.summands) {
        Integer k = squarefree_kernel(s.weight);
        if (!common_kernel)
            common_kernel = k;
        else if (*common_kernel != k)
            same_kernel = false;
    }
    FGPair out;
    for (const auto& s : d.summands) {
        auto root = rational_sqrt(s.weight);
        if (!root) {
            std::optional<Integer> suggest;
            if (same_kernel && common_kernel && *common_kernel != 1) suggest = *common_kernel;
            throw NonSquareWeightError(s.weight, suggest);
        }
        Poly scaled = s.p.scaled(GaussianRational(*root));
        (s.sign > 0 ? out.f : out.g).push_back(std::move(scaled));
    }
    std::size_t n_target = std::max(out.f.size(), out.g.size());
    std::size_t nvars = d.n;
    while (out.f.size() < n_target) out.f.push_back(Poly(nvars));
    while (out.g.size() < n_target) out.g.push_back(Poly(nvars));
    return out;
}

namespace {

GaussianRational pythagorean_unit(RandomStream& rng) {
    long m = rng.next_int(1, 5), k = rng.next_int(1, 5);
    if (m == k) k = m + 1;
    Rational den(m * m + k * k);
    GaussianRational u(Rational(m * m - k * k) / den, Rational(2 * m * k) / den);
    // random fourth-root-of-unity phase
    for (long r = rng.next_int(0, 3); r > 0; --r) u *= GaussianRational::i();
    return u;
}

}  // namespace

Matrix sample_unitary(std::size_t n, RandomStream& rng) {
    if (n < 1) throw std::invalid_argument("unitary size must be positive");
    Matrix u = Matrix::identity(n);
    unsigned factors = 2 + static_cast<unsigned>(rng.next_int(0, 4));
    for (unsigned f = 0; f < factors; ++f) {
        switch (rng.next_int(0, 2)) {
            case 0: {  // permutation
                Matrix p(n, n);
                std::vector<std::size_t> perm(n);
                for (std::size_t i = 0; i < n; ++i) perm[i] = i;
                for (std::size_t i = n; i-- > 1;)
                    std::swap(perm[i], perm[static_cast<std::size_t>(rng.next_int(0, i))]);
                for (std::size_t i = 0; i < n; ++i) p.at(i, perm[i]) = GaussianRational(1);
                u = u * p;
                break;
            }
            case 1: {  // unit-modulus diagonal
                Matrix dmat(n, n);
                for (std::size_t i = 0; i < n; ++i) dmat.at(i, i) = pythagorean_unit(rng);
                u = u * dmat;
                break;
            }
            default: {  // rotation in a coordinate plane
                if (n == 1) {
                    Matrix dmat(1, 1);
                    dmat.at(0, 0) = pythagorean_unit(rng);
                    u = u * dmat;
                    break;
                }
                std::size_t i = static_cast<std::size_t>(rng.next_int(0, n - 1));
                std::size_t j = static_cast<std::size_t>(rng.next_int(0, n - 2));
                if (j >= i) ++j;
                GaussianRational c = pythagorean_unit(rng);
                // columns of [[re, im], [-im, re]] keep exact unitarity
                Matrix rot = Matrix::identity(n);
                rot.at(i, i) = GaussianRational(c.re());
                rot.at(i, j) = GaussianRational(c.im());
                rot.at(j, i) = GaussianRational(-c.im());
                rot.at(j, j) = GaussianRational(c.re());
                u = u * rot;
                break;
            }
        }
    }
    return u;
}

IdealPresentation ideal_from_decomposition(const HoloDecomposition& d, const Matrix& u) {
    FGPair fg = extract_fg(d);
    std::size_t N = fg.f.size();
    if (u.rows() != N || u.cols() != N)
        throw std::invalid_argument("unitary size does not match the decomposition (need " +
                                    std::to_string(N) + ")");
    std::vector<Poly> gens;
    if (!d.h.is_zero()) gens.push_back(d.h);
    for (std::size_t i = 0; i < N; ++i) {
        Poly gi = fg.f[i];
        for (std::size_t j = 0; j < N; ++j)
            if (!u.at(i, j).is_zero()) gi -= fg.g[j].scaled(u.at(i, j));
        if (!gi.is_zero()) gens.push_back(std::move(gi));
    }
    return IdealPresentation::from(d.n, std::move(gens));
}

QPositivityReport check_q_positivity(const RealPoly& r, unsigned q,
                                     const std::vector<CurveJet>& curves,
                                     const std::vector<LinearFormSet>& form_family) {
    if (q < 1) throw std::invalid_argument("q must be at least 1");
    if (!form_family.empty() && form_family.size() != 1 && form_family.size() != curves.size())
        throw std::invalid_argument("form family must be shared or paired one per curve");

    HoloDecomposition d = polarize(r);
    QPositivityReport report;
    for (std::size_t idx = 0; idx < curves.size(); ++idx) {
        const CurveJet& jet = curves[idx];
        QPositivityCurveVerdict v;
        v.curve = jet.str();

        OrderBound hb = pullback_order(d.h, jet);
        bool h_dies = hb.kind == OrderBound::Kind::infinite;
        bool in_plane = true;
        if (!form_family.empty()) {
            const LinearFormSet& w = form_family.size() == 1 ? form_family[0] : form_family[idx];
            for (const auto& form : w.forms)
                if (pullback_order(form, jet).kind != OrderBound::Kind::infinite) in_plane = false;
        }
        if (!h_dies || !in_plane) {
            v.applicable = false;
            v.skip_reason = !h_dies ? "pullback of h does not vanish"
                                    : "curve leaves the zero locus of the paired forms";
            report.curves.push_back(std::move(v));
            continue;
        }
        v.applicable = true;

        HermSeries s = real_pullback(r, jet);
        auto ord = s.ord();
        if (!ord) {
            if (s.exact) {
                v.pullback_vanishes = true;
                v.violation = true;  // the curve sits inside the hypersurface
            } else {
                v.applicable = false;
                v.skip_reason = "pullback order exceeds the jet precision";
            }
            report.curves.push_back(std::move(v));
            continue;
        }
        if (!s.exact && *ord >= s.precision) {
            v.applicable = false;
            v.skip_reason = "pullback order exceeds the jet precision";
            report.curves.push_back(std::move(v));
            continue;
        }
        v.order = *ord;
        v.order_even = (*ord % 2 == 0);
        if (v.order_even) v.diagonal_coefficient = s.coeff(*ord / 2, *ord / 2);
        v.violation = !v.order_even || v.diagonal_coefficient.is_zero();
        report.curves.push_back(std::move(v));
    }
    for (const auto& v : report.curves) report.violation_found |= v.violation;
    report.summary = report.violation_found ? "violation found" : "no violation found";
    return report;
}

}  // namespace contact
