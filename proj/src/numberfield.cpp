#include "contact/numberfield.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace contact {

// ---------------------------------------------------------------------------
// FieldElem
// ---------------------------------------------------------------------------

FieldElem::FieldElem(FieldPtr field, std::vector<FieldElem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (!field_) throw std::invalid_argument("extension element needs a field");
    coeffs_.resize(field_->degree());
}

const GaussianRational& FieldElem::base_value() const {
    if (field_) throw std::logic_error("element does not lie in the base field representation");
    return base_;
}

std::optional<GaussianRational> FieldElem::demote() const {
    if (!field_) return base_;
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        if (!coeffs_[k].is_zero()) return std::nullopt;
    if (coeffs_.empty()) return GaussianRational();
    return coeffs_[0].demote();
}

bool FieldElem::is_zero() const {
    if (!field_) return base_.is_zero();
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

FieldElem FieldElem::lifted_to(const FieldPtr& target) const {
    if (field_ == target) return *this;
    if (!field_is_ancestor(field_, target))
        throw std::logic_error("field elements from incompatible towers");
    FieldElem below = target->below() == field_ ? *this : lifted_to(target->below());
    std::vector<FieldElem> coeffs(target->degree());
    coeffs[0] = std::move(below);
    FieldElem r;
    r.field_ = target;
    r.coeffs_ = std::move(coeffs);
    return r;
}

namespace {

// pick the deeper field of the two; both must lie on one tower chain
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
    if (a == b) return a;
    if (field_is_ancestor(a, b)) return b;
    if (field_is_ancestor(b, a)) return a;
    throw std::logic_error("field elements from incompatible towers");
}

std::vector<FieldElem> reduce_mod_minpoly(std::vector<FieldElem> v, const NumberField& f) {
    const FPoly& mp = f.minpoly();
    std::size_t d = f.degree();
    while (v.size() > d) {
        FieldElem lead = v.back();
        v.pop_back();
        if (lead.is_zero()) continue;
        std::size_t shift = v.size() - d;
        for (std::size_t k = 0; k < d; ++k) {
            FieldElem sub = lead * mp[k];
            v[shift + k] -= sub;
        }
    }
    v.resize(d);
    return v;
}

}  // namespace

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    if (!field_) {
        r.base_ = -base_;
    } else {
        for (auto& c : r.coeffs_) c = -c;
    }
    return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
    if (field_ == o.field_) {
        if (!field_) {
            base_ += o.base_;
        } else {
            for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        }
        return *this;
    }
    FieldPtr f = common_field(field_, o.field_);
    *this = lifted_to(f);
    return *this += o.lifted_to(f);
}

FieldElem& FieldElem::operator-=(const FieldElem& o) { return *this += -o; }

FieldElem& FieldElem::operator*=(const FieldElem& o) {
    if (field_ == o.field_) {
        if (!field_) {
            base_ *= o.base_;
            return *this;
        }
        std::vector<FieldElem> prod(coeffs_.size() + o.coeffs_.size() - 1);
        for (std::size_t a = 0; a < coeffs_.size(); ++a) {
            if (coeffs_[a].is_zero()) continue;
            for (std::size_t b = 0; b < o.coeffs_.size(); ++b) {
                if (o.coeffs_[b].is_zero()) continue;
                prod[a + b] += coeffs_[a] * o.coeffs_[b];
            }
        }
        coeffs_ = reduce_mod_minpoly(std::move(prod), *field_);
        return *this;
    }
    FieldPtr f = common_field(field_, o.field_);
    *this = lifted_to(f);
    return *this *= o.lifted_to(f);
}

FieldElem& FieldElem::operator/=(const FieldElem& o) { return *this *= o.inverse(); }

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero field element");
    if (!field_) return FieldElem(base_.inverse());
    // extended Euclid against the minimal polynomial, one level down
    FPoly r0 = field_->minpoly();
    FPoly r1 = coeffs_;
    fp_normalize(r1);
    FPoly s0{}, s1{FieldElem(1)};
    while (!fp_is_zero(r1)) {
        auto [q, r2] = fp_divrem(r0, r1);
        FPoly s2 = fp_sub(s0, fp_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (fp_deg(r0) != 0)
        throw std::logic_error("minimal polynomial not irreducible: nontrivial gcd found");
    FieldElem scale = r0[0].inverse();
    std::vector<FieldElem> coeffs(field_->degree());
    for (std::size_t k = 0; k < s0.size() && k < coeffs.size(); ++k) coeffs[k] = s0[k] * scale;
    FieldElem r;
    r.field_ = field_;
    r.coeffs_ = std::move(coeffs);
    return r;
}

FieldElem FieldElem::pow(unsigned long e) const {
    FieldElem acc(1), base = *this;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string FieldElem::str() const {
    if (!field_) return base_.str();
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << coeffs_[k].str();
        if (k >= 1) {
            os << "*" << field_->generator_name();
            if (k > 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    return os.str();
}

// ---------------------------------------------------------------------------
// NumberField
// ---------------------------------------------------------------------------

FieldPtr NumberField::extend(FieldPtr below, std::string generator_name, FPoly monic_minpoly) {
    fp_normalize(monic_minpoly);
    if (fp_deg(monic_minpoly) < 2) throw std::invalid_argument("extension degree must be >= 2");
    if (!monic_minpoly.back().is_one()) throw std::invalid_argument("minimal polynomial must be monic");
    unsigned absdeg = field_absolute_degree(below) * static_cast<unsigned>(fp_deg(monic_minpoly));
    return FieldPtr(new NumberField(std::move(below), std::move(generator_name),
                                    std::move(monic_minpoly), absdeg));
}

FieldElem NumberField::generator() const {
    std::vector<FieldElem> coeffs(degree());
    coeffs[1] = FieldElem(1);
    return FieldElem(shared_from_this(), std::move(coeffs));
}

FieldElem NumberField::make(std::vector<FieldElem> coeffs) const {
    return FieldElem(shared_from_this(), std::move(coeffs));
}

std::string NumberField::describe() const {
    return gen_name_ + " root of " + fp_str(minpoly_, gen_name_);
}

bool field_is_ancestor(const FieldPtr& anc, const FieldPtr& field) {
    FieldPtr cur = field;
    while (cur) {
        if (cur == anc) return true;
        cur = cur->below();
    }
    return anc == nullptr;
}

unsigned field_absolute_degree(const FieldPtr& field) {
    return field ? field->absolute_degree() : 1;
}

std::string field_tower_description(const FieldPtr& field) {
    if (!field) return "QQ(i)";
    return field_tower_description(field->below()) + "[" + field->describe() + "]";
}

// ---------------------------------------------------------------------------
// univariate helpers
// ---------------------------------------------------------------------------

void fp_normalize(FPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

int fp_deg(const FPoly& f) {
    for (std::size_t k = f.size(); k-- > 0;)
        if (!f[k].is_zero()) return static_cast<int>(k);
    return -1;
}

bool fp_is_zero(const FPoly& f) { return fp_deg(f) < 0; }

FPoly fp_add(const FPoly& a, const FPoly& b) {
    FPoly r = a;
    if (b.size() > r.size()) r.resize(b.size());
    for (std::size_t k = 0; k < b.size(); ++k) r[k] += b[k];
    fp_normalize(r);
    return r;
}

FPoly fp_sub(const FPoly& a, const FPoly& b) {
    FPoly r = a;
    if (b.size() > r.size()) r.resize(b.size());
    for (std::size_t k = 0; k < b.size(); ++k) r[k] -= b[k];
    fp_normalize(r);
    return r;
}

FPoly fp_mul(const FPoly& a, const FPoly& b) {
    if (fp_is_zero(a) || fp_is_zero(b)) return {};
    FPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    fp_normalize(r);
    return r;
}

FPoly fp_scale(const FPoly& a, const FieldElem& c) {
    if (c.is_zero()) return {};
    FPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

FPoly fp_monic(const FPoly& a) {
    int d = fp_deg(a);
    if (d < 0) return {};
    return fp_scale(a, a[d].inverse());
}

std::pair<FPoly, FPoly> fp_divrem(const FPoly& a, const FPoly& b) {
    int db = fp_deg(b);
    if (db < 0) throw std::domain_error("polynomial division by zero");
    FPoly rem = a;
    fp_normalize(rem);
    FPoly quot;
    FieldElem lead_inv = b[db].inverse();
    while (fp_deg(rem) >= db) {
        int dr = fp_deg(rem);
        FieldElem c = rem[dr] * lead_inv;
        std::size_t shift = dr - db;
        if (quot.size() < shift + 1) quot.resize(shift + 1);
        quot[shift] += c;
        for (int k = 0; k <= db; ++k) rem[shift + k] -= c * b[k];
        fp_normalize(rem);
    }
    fp_normalize(quot);
    return {quot, rem};
}

FPoly fp_gcd(FPoly a, FPoly b) {
    fp_normalize(a);
    fp_normalize(b);
    while (!fp_is_zero(b)) {
        FPoly r = fp_divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(a);
}

FPoly fp_derivative(const FPoly& a) {
    if (a.size() <= 1) return {};
    FPoly r(a.size() - 1);
    for (std::size_t k = 1; k < a.size(); ++k) r[k - 1] = a[k] * FieldElem(static_cast<long>(k));
    fp_normalize(r);
    return r;
}

FieldElem fp_eval(const FPoly& a, const FieldElem& x) {
    FieldElem acc(0);
    for (std::size_t k = a.size(); k-- > 0;) acc = acc * x + a[k];
    return acc;
}

FPoly fp_compose_shift(const FPoly& a, const FieldElem& s) {
    // Horner in (x + s)
    FPoly acc;
    FPoly shift{s, FieldElem(1)};
    for (std::size_t k = a.size(); k-- > 0;) {
        acc = fp_mul(acc, shift);
        if (acc.empty()) acc.resize(1);
        acc[0] += a[k];
        fp_normalize(acc);
    }
    return acc;
}

std::string fp_str(const FPoly& a, const std::string& var) {
    if (fp_is_zero(a)) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = a.size(); k-- > 0;) {
        if (a[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << a[k].str();
        if (k >= 1) {
            os << "*" << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Gaussian integers and base-field roots
// ---------------------------------------------------------------------------

namespace {

struct GaussInt {
    Integer re, im;

    Integer norm() const { return re * re + im * im; }
    bool is_zero() const { return re == 0 && im == 0; }

    GaussInt operator*(const GaussInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }

    // exact quotient when divisible
    std::optional<GaussInt> divided_by(const GaussInt& d) const {
        Integer n = d.norm();
        if (n == 0) return std::nullopt;
        Integer qr = re * d.re + im * d.im;
        Integer qi = im * d.re - re * d.im;
        if (!mpz_divisible_p(qr.get_mpz_t(), n.get_mpz_t())) return std::nullopt;
        if (!mpz_divisible_p(qi.get_mpz_t(), n.get_mpz_t())) return std::nullopt;
        return GaussInt{qr / n, qi / n};
    }
};

constexpr unsigned long kTrialDivisionBound = 1u << 20;

std::map<Integer, unsigned> factor_integer(Integer m) {
    std::map<Integer, unsigned> out;
    if (m < 0) m = -m;
    for (Integer p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (p > kTrialDivisionBound)
            throw BudgetExceededError("integer factorization budget exceeded (norm too large)");
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            ++out[p];
            m /= p;
        }
    }
    if (m > 1) ++out[m];
    return out;
}

// one Gaussian prime above a rational prime
GaussInt gaussian_prime_above(const Integer& p) {
    if (p == 2) return {1, 1};
    if (mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) return {p, 0};
    // p = 1 mod 4: find a^2 + b^2 = p
    Integer a = 1;
    while (a * a * 2 <= p) {
        Integer b2 = p - a * a;
        if (mpz_perfect_square_p(b2.get_mpz_t())) {
            Integer b;
            mpz_sqrt(b.get_mpz_t(), b2.get_mpz_t());
            return {a, b};
        }
        ++a;
    }
    throw std::logic_error("no two-square decomposition found for split prime");
}

// all divisors of g up to unit multiples
std::vector<GaussInt> gaussian_divisors(const GaussInt& g) {
    if (g.is_zero()) throw std::invalid_argument("divisors of zero");
    std::vector<GaussInt> primes;
    std::vector<unsigned> mult;
    GaussInt rest = g;
    for (const auto& [p, e] : factor_integer(g.norm())) {
        GaussInt pi = gaussian_prime_above(p);
        if (pi.im == 0) {
            // inert prime: divides with half the norm multiplicity
            unsigned k = e / 2;
            if (k) {
                primes.push_back(pi);
                mult.push_back(k);
                for (unsigned t = 0; t < k; ++t) rest = *rest.divided_by(pi);
            }
            continue;
        }
        GaussInt pbar{pi.re, -pi.im};
        unsigned ka = 0, kb = 0;
        bool again = true;
        while (again) {
            again = false;
            if (auto q = rest.divided_by(pi)) {
                rest = *q;
                ++ka;
                again = true;
            } else if (auto qb = rest.divided_by(pbar)) {
                rest = *qb;
                ++kb;
                again = true;
            }
        }
        if (ka) {
            primes.push_back(pi);
            mult.push_back(ka);
        }
        if (kb) {
            primes.push_back(pbar);
            mult.push_back(kb);
        }
    }
    std::vector<GaussInt> divisors{GaussInt{1, 0}};
    for (std::size_t i = 0; i < primes.size(); ++i) {
        std::vector<GaussInt> next;
        for (const auto& d : divisors) {
            GaussInt acc = d;
            next.push_back(acc);
            for (unsigned e = 1; e <= mult[i]; ++e) {
                acc = acc * primes[i];
                next.push_back(acc);
            }
        }
        divisors = std::move(next);
        if (divisors.size() > 4096)
            throw BudgetExceededError("divisor enumeration budget exceeded in root search");
    }
    return divisors;
}

GaussianRational to_gr(const GaussInt& g) {
    return GaussianRational(Rational(g.re), Rational(g.im));
}

// clear denominators of base-field coefficients
std::vector<GaussInt> integralize(const FPoly& f) {
    Integer l = 1;
    for (const auto& c : f) {
        GaussianRational v = *c.demote();
        l = lcm(l, v.re().get_den());
        l = lcm(l, v.im().get_den());
    }
    std::vector<GaussInt> out;
    out.reserve(f.size());
    for (const auto& c : f) {
        GaussianRational v = *c.demote();
        Rational re = v.re() * l;
        Rational im = v.im() * l;
        out.push_back(GaussInt{re.get_num(), im.get_num()});
    }
    return out;
}

bool all_coeffs_in_base(const FPoly& f) {
    for (const auto& c : f)
        if (!c.demote()) return false;
    return true;
}

}  // namespace

std::vector<GaussianRational> base_roots(const FPoly& f_in) {
    FPoly f = f_in;
    fp_normalize(f);
    if (fp_is_zero(f)) throw std::invalid_argument("roots of the zero polynomial");
    if (!all_coeffs_in_base(f)) throw std::logic_error("base_roots requires base-field coefficients");

    std::vector<GaussianRational> roots;
    std::size_t low = 0;
    while (low < f.size() && f[low].is_zero()) ++low;
    if (low > 0) {
        roots.emplace_back();  // root 0
        f.erase(f.begin(), f.begin() + low);
    }
    if (fp_deg(f) < 1) return roots;
    if (fp_deg(f) == 1) {
        roots.push_back(*(-(f[0] / f[1])).demote());
        return roots;
    }

    std::vector<GaussInt> zi = integralize(f);
    const GaussInt& a0 = zi.front();
    const GaussInt& ad = zi.back();
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& p : gaussian_divisors(a0)) {
        for (const auto& q : gaussian_divisors(ad)) {
            GaussianRational ratio = to_gr(p) / to_gr(q);
            GaussianRational unit(1);
            for (int u = 0; u < 4; ++u) {
                GaussianRational cand = ratio * unit;
                unit *= GaussianRational::i();
                auto key = std::make_pair(cand.re().get_str() , cand.im().get_str());
                if (!seen.insert(key).second) continue;
                if (fp_eval(f, FieldElem(cand)).is_zero()) roots.push_back(cand);
            }
        }
    }
    return roots;
}

namespace {

// squarefree decomposition (Yun), characteristic zero
std::vector<std::pair<FPoly, unsigned>> squarefree_decomposition(const FPoly& f) {
    std::vector<std::pair<FPoly, unsigned>> out;
    FPoly a = fp_monic(f);
    FPoly d = fp_derivative(a);
    FPoly g = fp_gcd(a, d);
    if (fp_deg(g) == 0) {
        out.emplace_back(a, 1);
        return out;
    }
    FPoly w = fp_divrem(a, g).first;
    FPoly y = fp_divrem(d, g).first;
    FPoly z = fp_sub(y, fp_derivative(w));
    unsigned i = 1;
    while (fp_deg(w) > 0) {
        FPoly h = fp_gcd(w, z);
        if (fp_deg(h) > 0) out.emplace_back(fp_monic(h), i);
        w = fp_divrem(w, h).first;
        y = fp_divrem(z, h).first;
        z = fp_sub(y, fp_derivative(w));
        ++i;
    }
    return out;
}

std::optional<GaussianRational> base_sqrt(const FieldElem& e) {
    auto v = e.demote();
    if (!v) return std::nullopt;
    return GaussianRational::sqrt(*v);
}

// split a monic squarefree base-field quartic with no roots in Q(i) into two
// irreducible quadratics, when possible
std::optional<std::pair<FPoly, FPoly>> split_quartic(const FPoly& f) {
    // depress: x = y - a3/4
    FieldElem a3 = f[3], a2 = f[2], a1 = f[1];
    FieldElem shift = -(a3 / FieldElem(4));
    FPoly dep = fp_compose_shift(f, shift);
    FieldElem p = dep[2], q = dep[1], r = dep[0];

    auto undepress = [&](FPoly g) { return fp_compose_shift(g, -shift); };

    if (q.is_zero()) {
        // biquadratic: y^4 + p y^2 + r = (y^2 - u1)(y^2 - u2)
        FieldElem disc = p * p - FieldElem(4) * r;
        if (auto s = base_sqrt(disc)) {
            FieldElem u1 = (-p + FieldElem(*s)) / FieldElem(2);
            FieldElem u2 = (-p - FieldElem(*s)) / FieldElem(2);
            FPoly g1{-u1, FieldElem(0), FieldElem(1)};
            FPoly g2{-u2, FieldElem(0), FieldElem(1)};
            return std::make_pair(undepress(g1), undepress(g2));
        }
    }
    // (y^2+uy+v)(y^2-uy+w): u^2 is a root of z^3 + 2p z^2 + (p^2-4r) z - q^2
    FPoly resolvent{-(q * q), p * p - FieldElem(4) * r, FieldElem(2) * p, FieldElem(1)};
    for (const auto& s : base_roots(resolvent)) {
        if (s.is_zero()) continue;
        auto u = GaussianRational::sqrt(s);
        if (!u) continue;
        FieldElem ue(*u);
        FieldElem v = (p + ue * ue - q / ue) / FieldElem(2);
        FieldElem w = (p + ue * ue + q / ue) / FieldElem(2);
        FPoly g1{v, ue, FieldElem(1)};
        FPoly g2{w, -ue, FieldElem(1)};
        if (fp_is_zero(fp_sub(fp_mul(g1, g2), dep)))
            return std::make_pair(undepress(g1), undepress(g2));
    }
    return std::nullopt;
}

// irreducible factors of a monic squarefree polynomial over the base field
std::vector<FPoly> split_squarefree_base(const FPoly& f) {
    std::vector<FPoly> out;
    FPoly rest = f;
    for (const auto& root : base_roots(rest)) {
        FPoly lin{FieldElem(-root), FieldElem(1)};
        while (true) {
            auto [q, r] = fp_divrem(rest, lin);
            if (!fp_is_zero(r)) break;
            out.push_back(lin);
            rest = q;
            if (fp_deg(rest) == 0) break;
        }
    }
    int d = fp_deg(rest);
    if (d <= 0) return out;
    if (d == 1) {
        out.push_back(fp_monic(rest));
        return out;
    }
    if (d == 2 || d == 3) {
        out.push_back(rest);  // rootless quadratic/cubic is irreducible
        return out;
    }
    if (d == 4) {
        if (auto pair = split_quartic(rest)) {
            out.push_back(fp_monic(pair->first));
            out.push_back(fp_monic(pair->second));
        } else {
            out.push_back(rest);
        }
        return out;
    }
    throw BudgetExceededError(
        "cannot certify irreducibility beyond degree 4 over the base field (degree " +
        std::to_string(d) + ")");
}

}  // namespace

std::vector<FactorPower> certified_factors(const FPoly& f_in, const FieldPtr& field) {
    FPoly f = f_in;
    fp_normalize(f);
    if (fp_deg(f) < 1) throw std::invalid_argument("factorization of a constant");
    f = fp_monic(f);

    std::vector<FactorPower> out;
    // pull out the root at the origin first
    std::size_t low = 0;
    while (low < f.size() && f[low].is_zero()) ++low;
    if (low > 0) {
        out.push_back({FPoly{FieldElem(0), FieldElem(1)}, static_cast<unsigned>(low)});
        f.erase(f.begin(), f.begin() + low);
    }
    if (fp_deg(f) < 1) return out;

    for (const auto& [sqf, mult] : squarefree_decomposition(f)) {
        if (!field && all_coeffs_in_base(sqf)) {
            for (auto& irr : split_squarefree_base(sqf)) out.push_back({irr, mult});
            continue;
        }
        // over a proper tower only linear splits are certified
        FPoly rest = sqf;
        int d = fp_deg(rest);
        if (d == 1) {
            out.push_back({fp_monic(rest), mult});
            continue;
        }
        throw BudgetExceededError(
            "factorization over an extension tower is limited to linear factors (degree " +
            std::to_string(d) + " needed)");
    }
    return out;
}

RootInExtension attach_root(const FPoly& irreducible_factor, const FieldPtr& field,
                            const ExtensionBudget& budget, unsigned hint_index) {
    int d = fp_deg(irreducible_factor);
    if (d < 1) throw std::invalid_argument("root of a constant polynomial");
    if (d == 1) {
        FieldElem root = -(irreducible_factor[0] / irreducible_factor[1]);
        return {root, field, 1};
    }
    unsigned absdeg = field_absolute_degree(field) * static_cast<unsigned>(d);
    if (absdeg > budget.max_absolute_degree)
        throw BudgetExceededError("extension degree budget exceeded: needed " +
                                  std::to_string(absdeg) + ", cap " +
                                  std::to_string(budget.max_absolute_degree));
    std::string name = "a" + std::to_string(hint_index);
    FieldPtr ext = NumberField::extend(field, name, fp_monic(irreducible_factor));
    return {ext->generator(), ext, static_cast<unsigned>(d)};
}

}  // namespace contact
