#include "contact/parser.hpp"

#include <cctype>
#include <sstream>

namespace contact {

namespace {

// Parses into the real representation (exponents for z and zbar) and tracks
// whether any conjugated variable occurred.
class Parser {
  public:
    Parser(const std::string& text, std::size_t n, bool allow_t)
        : text_(text), n_(n), allow_t_(allow_t) {}

    RealPoly run(bool& saw_conjugate) {
        RealPoly p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        saw_conjugate = saw_conjugate_;
        return p;
    }

  private:
    RealPoly parse_expr() {
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = take() == '-';
        RealPoly acc = parse_term();
        if (negate) acc = -acc;
        while (true) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            take();
            RealPoly t = parse_term();
            if (c == '+')
                acc += t;
            else
                acc -= t;
        }
        return acc;
    }

    RealPoly parse_term() {
        RealPoly acc = parse_factor();
        while (true) {
            skip_ws();
            if (peek() != '*') break;
            take();
            acc = multiply(acc, parse_factor());
        }
        return acc;
    }

    RealPoly parse_factor() {
        RealPoly base = parse_base();
        skip_ws();
        if (peek() == '^') {
            take();
            unsigned long e = parse_uint();
            RealPoly acc = constant(GaussianRational(1));
            for (unsigned long k = 0; k < e; ++k) acc = multiply(acc, base);
            return acc;
        }
        return base;
    }

    RealPoly parse_base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            take();
            RealPoly inner = parse_expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            take();
            return inner;
        }
        if (c == 'i') {
            take();
            return constant(GaussianRational::i());
        }
        if (c == 'z') return parse_var();
        if (c == 't' && allow_t_) {
            take();
            BiMonomial bm{Monomial(n_), Monomial(n_)};
            bm.z[0] = 1;
            RealPoly p(n_);
            p.add_term(bm, GaussianRational(1));
            return p;
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
        fail("expected a rational, 'i', a variable, or '('");
    }

    RealPoly parse_var() {
        std::size_t at = pos_;
        take();  // 'z'
        bool conj = false;
        if (peek() == 'b') {
            take();
            conj = true;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected variable index");
        unsigned long idx = parse_uint();
        if (idx < 1 || idx > n_) {
            pos_ = at;
            fail("variable index out of range for dimension " + std::to_string(n_));
        }
        BiMonomial bm{Monomial(n_), Monomial(n_)};
        if (conj) {
            bm.zbar[idx - 1] = 1;
            saw_conjugate_ = true;
        } else {
            bm.z[idx - 1] = 1;
        }
        RealPoly p(n_);
        p.add_term(bm, GaussianRational(1));
        return p;
    }

    RealPoly parse_rational() {
        bool neg = false;
        if (peek() == '-') {
            take();
            neg = true;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        Integer num(parse_digits());
        Integer den = 1;
        if (peek() == '/') {
            take();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
            den = Integer(parse_digits());
            if (den == 0) fail("zero denominator");
        }
        Rational r = make_rational(neg ? -num : num, den);
        return constant(GaussianRational(r));
    }

    std::string parse_digits() {
        std::string s;
        while (std::isdigit(static_cast<unsigned char>(peek()))) s.push_back(take());
        return s;
    }

    unsigned long parse_uint() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
        return std::stoul(parse_digits());
    }

    RealPoly constant(GaussianRational c) {
        RealPoly p(n_);
        p.add_term({Monomial(n_), Monomial(n_)}, std::move(c));
        return p;
    }

    static RealPoly multiply(const RealPoly& a, const RealPoly& b) {
        RealPoly r(a.nvars());
        for (const auto& [ma, ca] : a.terms())
            for (const auto& [mb, cb] : b.terms())
                r.add_term({ma.z * mb.z, ma.zbar * mb.zbar}, ca * cb);
        return r;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    const std::string& text_;
    std::size_t n_;
    bool allow_t_;
    std::size_t pos_ = 0;
    bool saw_conjugate_ = false;
};

Poly to_holomorphic(const RealPoly& p) {
    Poly q(p.nvars());
    for (const auto& [bm, c] : p.terms()) {
        if (bm.zbar.degree() != 0) throw std::logic_error("conjugate term in holomorphic conversion");
        q.add_term(bm.z, c);
    }
    return q;
}

}  // namespace

ParsedGerm parse_poly(const std::string& text, std::size_t n) {
    Parser parser(text, n, false);
    bool conj = false;
    RealPoly p = parser.run(conj);
    if (conj) return p;
    return to_holomorphic(p);
}

Poly parse_holomorphic(const std::string& text, std::size_t n) {
    ParsedGerm g = parse_poly(text, n);
    if (auto* p = std::get_if<Poly>(&g)) return *p;
    throw ParseError("conjugated variables are not allowed in a holomorphic polynomial", 0);
}

RealPoly parse_real_germ(const std::string& text, std::size_t n) {
    ParsedGerm g = parse_poly(text, n);
    RealPoly r = std::holds_alternative<RealPoly>(g)
                     ? std::get<RealPoly>(g)
                     : RealPoly::from_holomorphic(std::get<Poly>(g));
    if (!r.is_real())
        throw ParseError("germ violates the reality constraint C[a][b] = conj(C[b][a])", 0);
    return r;
}

Poly parse_jet_component(const std::string& text) {
    Parser parser(text, 1, true);
    bool conj = false;
    RealPoly p = parser.run(conj);
    if (conj) throw ParseError("conjugated variables are not allowed in a curve component", 0);
    return to_holomorphic(p);
}

namespace {

void append_monomial(std::ostringstream& os, const Monomial& m, const char* names, bool& lead) {
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!lead) os << "*";
        lead = false;
        os << names << (i + 1);
        if (m[i] > 1) os << "^" << m[i];
    }
}

// sign-folded coefficient text; returns true when the magnitude is 1 and may
// be dropped in front of a non-constant monomial
bool coefficient_text(const GaussianRational& c, bool& negative, std::string& text) {
    if (c.im() == 0) {
        negative = c.re() < 0;
        Rational a = abs(c.re());
        text = rational_str(a);
        return a == 1;
    }
    if (c.re() == 0) {
        negative = c.im() < 0;
        Rational b = abs(c.im());
        text = (b == 1) ? "i" : rational_str(b) + "*i";
        return false;
    }
    negative = false;
    GaussianRational v = c;
    std::ostringstream os;
    os << "(" << rational_str(v.re());
    if (v.im() > 0)
        os << "+" << (v.im() == 1 ? "i" : rational_str(v.im()) + "*i");
    else
        os << "-" << (v.im() == -1 ? "i" : rational_str(-v.im()) + "*i");
    os << ")";
    text = os.str();
    return false;
}

template <typename TermRange, typename MonoWriter>
std::string render_terms(const TermRange& terms, MonoWriter&& write_mono) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, coeff] : terms) {
        bool neg = false;
        std::string ctext;
        bool unit = coefficient_text(coeff, neg, ctext);
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool constant_mono = write_mono.is_constant(mono);
        if (constant_mono) {
            os << ctext;
        } else {
            bool lead = true;
            if (!unit) {
                os << ctext;
                lead = false;
            }
            write_mono.write(os, mono, lead);
        }
    }
    return os.str();
}

struct HoloWriter {
    bool is_constant(const Monomial& m) const { return m.is_constant(); }
    void write(std::ostringstream& os, const Monomial& m, bool lead) const {
        append_monomial(os, m, "z", lead);
    }
};

struct RealWriter {
    bool is_constant(const BiMonomial& m) const { return m.degree() == 0; }
    void write(std::ostringstream& os, const BiMonomial& m, bool lead) const {
        append_monomial(os, m.z, "z", lead);
        append_monomial(os, m.zbar, "zb", lead);
    }
};

}  // namespace

std::string to_string(const Poly& p) { return render_terms(p.terms(), HoloWriter{}); }

std::string to_string(const RealPoly& p) { return render_terms(p.terms(), RealWriter{}); }

}  // namespace contact
