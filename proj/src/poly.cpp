#include "chainlab/poly.hpp"

#include <algorithm>
#include <set>

#include "parse_util.hpp"

namespace chainlab {

void int_poly::add_term(const monomial& m, const bigint& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int_poly int_poly::constant(const bigint& c) {
    int_poly p;
    p.add_term({}, c);
    return p;
}

int_poly int_poly::variable(const std::string& name) {
    int_poly p;
    p.add_term({{name, 1u}}, 1);
    return p;
}

std::vector<std::string> int_poly::vars() const {
    std::set<std::string> s;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m) s.insert(v);
    return {s.begin(), s.end()};
}

std::optional<std::string> int_poly::as_single_variable() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [m, c] = *terms_.begin();
    if (c != 1 || m.size() != 1 || m.begin()->second != 1) return std::nullopt;
    return m.begin()->first;
}

int_poly int_poly::operator+(const int_poly& o) const {
    int_poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

int_poly int_poly::operator-() const {
    int_poly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

int_poly int_poly::operator-(const int_poly& o) const { return *this + (-o); }

int_poly int_poly::operator*(const int_poly& o) const {
    int_poly r;
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            monomial m = m1;
            for (const auto& [v, e] : m2) m[v] += e;
            r.add_term(m, c1 * c2);
        }
    }
    return r;
}

int_poly int_poly::pow(unsigned e) const {
    int_poly r = constant(1);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

int_poly int_poly::substitute(const std::map<std::string, int_poly>& images) const {
    int_poly r;
    for (const auto& [m, c] : terms_) {
        int_poly t = constant(c);
        for (const auto& [v, e] : m) {
            auto it = images.find(v);
            t = t * (it == images.end() ? variable(v).pow(e) : it->second.pow(e));
        }
        r = r + t;
    }
    return r;
}

int_poly int_poly::rename(const std::map<std::string, std::string>& names) const {
    int_poly r;
    for (const auto& [m, c] : terms_) {
        monomial nm;
        for (const auto& [v, e] : m) {
            auto it = names.find(v);
            nm[it == names.end() ? v : it->second] += e;
        }
        r.add_term(nm, c);
    }
    return r;
}

std::string int_poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bigint a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        std::string mono;
        for (const auto& [v, e] : m) {
            if (!mono.empty()) mono += "*";
            mono += v;
            if (e != 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out += a.str();
        } else if (a == 1) {
            out += mono;
        } else {
            out += a.str() + "*" + mono;
        }
    }
    return out;
}

int_poly int_poly::parse(const std::string& text) {
    detail::lexer lx(text);
    int_poly p = detail::parse_poly(lx);
    lx.expect_end();
    return p;
}

namespace detail {

bool is_keyword(const std::string& name) {
    return name == "forall" || name == "exists" || name == "where" ||
           name == "or" || name == "true";
}

namespace {

int_poly parse_expr(lexer& lx);

int_poly parse_atom(lexer& lx) {
    const token& t = lx.peek();
    if (t.kind == tok_kind::integer) {
        lx.next();
        return int_poly::constant(bigint(t.text));
    }
    if (t.kind == tok_kind::name) {
        if (is_keyword(t.text)) lx.fail("unexpected keyword in polynomial");
        lx.next();
        return int_poly::variable(t.text);
    }
    if (lx.accept_symbol('(')) {
        int_poly p = parse_expr(lx);
        lx.expect_symbol(')');
        return p;
    }
    lx.fail("expected polynomial");
}

int_poly parse_factor(lexer& lx) {
    int_poly base = parse_atom(lx);
    if (lx.accept_symbol('^')) {
        const token& t = lx.peek();
        if (t.kind != tok_kind::integer) lx.fail("expected exponent");
        lx.next();
        return base.pow(static_cast<unsigned>(std::stoul(t.text)));
    }
    return base;
}

bool starts_implicit_factor(const lexer& lx) {
    const token& t = lx.peek();
    if (t.kind == tok_kind::name) return !is_keyword(t.text);
    if (t.kind == tok_kind::symbol) return t.text[0] == '(';
    return false;
}

int_poly parse_term(lexer& lx) {
    int_poly p = parse_factor(lx);
    for (;;) {
        if (lx.accept_symbol('*')) {
            p = p * parse_factor(lx);
        } else if (starts_implicit_factor(lx)) {
            p = p * parse_factor(lx);
        } else {
            return p;
        }
    }
}

int_poly parse_expr(lexer& lx) {
    bool neg = lx.accept_symbol('-');
    int_poly p = parse_term(lx);
    if (neg) p = -p;
    for (;;) {
        if (lx.accept_symbol('+')) {
            p = p + parse_term(lx);
        } else if (lx.accept_symbol('-')) {
            p = p - parse_term(lx);
        } else {
            return p;
        }
    }
}

} // namespace

int_poly parse_poly(lexer& lx) { return parse_expr(lx); }

} // namespace detail
} // namespace chainlab
