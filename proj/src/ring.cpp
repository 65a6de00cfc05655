#include "chainlab/ring.hpp"

#include <algorithm>
#include <cassert>

#include "lexer.hpp"
#include "parse_util.hpp"

namespace chainlab {

namespace {

constexpr elem npos = static_cast<elem>(0xFFFF);

void check_cap(std::size_t size, std::size_t cap) {
    if (size > cap)
        throw size_cap_exceeded("ring would have " + std::to_string(size) +
                                " elements, cap is " + std::to_string(cap));
}

} // namespace

ring_table::ring_table(std::size_t size, std::vector<elem> add_table,
                       std::vector<elem> mul_table, elem one,
                       std::vector<std::string> labels,
                       std::map<std::string, elem> gens, std::string spec)
    : size_(size),
      add_(std::move(add_table)),
      mul_(std::move(mul_table)),
      one_(one),
      labels_(std::move(labels)),
      gens_(std::move(gens)),
      spec_(std::move(spec)) {
    assert(add_.size() == size_ * size_ && mul_.size() == size_ * size_);
    neg_.assign(size_, npos);
    for (elem a = 0; a < size_; ++a) {
        for (elem b = 0; b < size_; ++b) {
            if (add(a, b) == 0) {
                neg_[a] = b;
                break;
            }
        }
        assert(neg_[a] != npos);
    }
    char_ = 1;
    elem acc = one_;
    while (acc != 0) {
        acc = add(acc, one_);
        ++char_;
        assert(char_ <= size_ + 1);
    }
    if (size_ == 1) char_ = 1;
}

elem ring_table::pow(elem a, unsigned long long e) const {
    elem r = one_;
    for (unsigned long long i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

elem ring_table::from_int(const bigint& n) const {
    bigint m = n % char_;
    if (m < 0) m += char_;
    auto k = static_cast<unsigned>(m);
    elem r = 0;
    for (unsigned i = 0; i < k; ++i) r = add(r, one_);
    return r;
}

bool ring_table::is_unit(elem a) const { return inverse(a).has_value(); }

std::optional<elem> ring_table::inverse(elem a) const {
    for (elem b = 0; b < size_; ++b)
        if (mul(a, b) == one_) return b;
    return std::nullopt;
}

bool ring_table::same_tables(const ring_table& o) const {
    return size_ == o.size_ && one_ == o.one_ && add_ == o.add_ &&
           mul_ == o.mul_;
}

// --- builders --------------------------------------------------------------

namespace {

ring_table build_zmod(long long n, std::size_t cap, const std::string& spec) {
    if (n < 1) throw malformed_spec("zmod modulus must be positive");
    check_cap(static_cast<std::size_t>(n), cap);
    auto s = static_cast<std::size_t>(n);
    std::vector<elem> add(s * s), mul(s * s);
    std::vector<std::string> labels(s);
    for (std::size_t a = 0; a < s; ++a) {
        labels[a] = std::to_string(a);
        for (std::size_t b = 0; b < s; ++b) {
            add[a * s + b] = static_cast<elem>((a + b) % s);
            mul[a * s + b] = static_cast<elem>((a * b) % s);
        }
    }
    return {s, std::move(add), std::move(mul), static_cast<elem>(1 % s),
            std::move(labels), {}, spec};
}

std::string coeff_label(const std::string& l) {
    if (l.find('+') != std::string::npos || l.find('-') != std::string::npos ||
        l.find('*') != std::string::npos)
        return "(" + l + ")";
    return l;
}

std::string join_terms(const std::vector<std::string>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& t : terms) {
        if (!out.empty()) out += "+";
        out += t;
    }
    return out;
}

ring_table build_polyquot(const ring_table& B, const std::string& var,
                          const int_poly& poly, std::size_t cap,
                          const std::string& spec) {
    auto pv = poly.vars();
    if (pv.size() > 1 || (pv.size() == 1 && pv[0] != var))
        throw malformed_spec("polyquot polynomial must be univariate in " + var);
    unsigned deg = 0;
    for (const auto& [m, c] : poly.terms()) {
        auto it = m.find(var);
        deg = std::max(deg, it == m.end() ? 0u : it->second);
    }
    if (deg < 1) throw malformed_spec("polyquot polynomial must have degree >= 1");
    // Coefficients as base elements, degree 0 first.
    std::vector<elem> cf(deg + 1, 0);
    for (const auto& [m, c] : poly.terms()) {
        auto it = m.find(var);
        cf[it == m.end() ? 0u : it->second] = B.from_int(c);
    }
    if (cf[deg] != B.one())
        throw non_monic_polynomial("polyquot polynomial is not monic: " +
                                   poly.str());

    const std::size_t s = B.size();
    std::size_t size = 1;
    for (unsigned i = 0; i < deg; ++i) {
        size *= s;
        check_cap(size, cap);
    }
    const unsigned d = deg;

    // Element index <-> digit tuple (c_0 .. c_{d-1}), degree-0 coefficient
    // most significant, so tuples are ordered lexicographically.
    auto digits = [&](std::size_t idx) {
        std::vector<elem> e(d);
        for (unsigned i = d; i-- > 0;) {
            e[i] = static_cast<elem>(idx % s);
            idx /= s;
        }
        return e;
    };
    auto index = [&](const std::vector<elem>& e) {
        std::size_t idx = 0;
        for (unsigned i = 0; i < d; ++i) idx = idx * s + e[i];
        return idx;
    };

    // -x^d = cf[0] + cf[1] x + ... + cf[d-1] x^{d-1} negated.
    std::vector<elem> red(d);
    for (unsigned i = 0; i < d; ++i) red[i] = B.neg(cf[i]);

    std::vector<elem> add(size * size), mul(size * size);
    for (std::size_t a = 0; a < size; ++a) {
        auto ea = digits(a);
        for (std::size_t b = 0; b < size; ++b) {
            auto eb = digits(b);
            std::vector<elem> su(d);
            for (unsigned i = 0; i < d; ++i) su[i] = B.add(ea[i], eb[i]);
            add[a * size + b] = static_cast<elem>(index(su));

            std::vector<elem> pr(2 * d - 1, 0);
            for (unsigned i = 0; i < d; ++i)
                for (unsigned j = 0; j < d; ++j)
                    pr[i + j] = B.add(pr[i + j], B.mul(ea[i], eb[j]));
            for (unsigned k = 2 * d - 1; k-- > d;) {
                elem t = pr[k];
                if (t == 0) continue;
                pr[k] = 0;
                for (unsigned i = 0; i < d; ++i)
                    pr[k - d + i] = B.add(pr[k - d + i], B.mul(t, red[i]));
            }
            pr.resize(d);
            mul[a * size + b] = static_cast<elem>(index(pr));
        }
    }

    std::vector<std::string> labels(size);
    for (std::size_t a = 0; a < size; ++a) {
        auto e = digits(a);
        std::vector<std::string> terms;
        for (unsigned i = 0; i < d; ++i) {
            if (e[i] == 0) continue;
            std::string l = B.label(e[i]);
            std::string mono = i == 0 ? ""
                               : i == 1 ? var
                                        : var + "^" + std::to_string(i);
            if (mono.empty()) {
                terms.push_back(l);
            } else if (e[i] == B.one()) {
                terms.push_back(mono);
            } else {
                terms.push_back(coeff_label(l) + "*" + mono);
            }
        }
        labels[a] = join_terms(terms);
    }

    std::map<std::string, elem> gens;
    for (const auto& [name, g] : B.generators()) {
        std::vector<elem> e(d, 0);
        e[0] = g;
        gens[name] = static_cast<elem>(index(e));
    }
    {
        std::vector<elem> e(d, 0);
        if (d >= 2) e[1] = B.one();
        // d == 1 means the variable is reduced away entirely.
        gens[var] = static_cast<elem>(d >= 2 ? index(e) : index(red));
    }

    std::vector<elem> one_digits(d, 0);
    one_digits[0] = B.one();
    return {size,
            std::move(add),
            std::move(mul),
            static_cast<elem>(index(one_digits)),
            std::move(labels),
            std::move(gens),
            spec};
}

ring_table build_monext(const ring_table& B, const std::vector<std::string>& vars,
                        const std::vector<int_poly>& monomials, std::size_t cap,
                        const std::string& spec) {
    const std::size_t nv = vars.size();
    if (nv == 0) throw malformed_spec("monext needs at least one variable");
    std::vector<std::vector<unsigned>> gens_exp;
    for (const auto& p : monomials) {
        if (p.terms().size() != 1 || p.terms().begin()->second != 1)
            throw malformed_spec("monext ideal generators must be pure monomials: " +
                                 p.str());
        std::vector<unsigned> e(nv, 0);
        for (const auto& [v, k] : p.terms().begin()->first) {
            auto it = std::find(vars.begin(), vars.end(), v);
            if (it == vars.end())
                throw malformed_spec("monext monomial uses unknown variable " + v);
            e[static_cast<std::size_t>(it - vars.begin())] = k;
        }
        gens_exp.push_back(e);
    }

    auto in_ideal = [&](const std::vector<unsigned>& m) {
        for (const auto& g : gens_exp) {
            bool div = true;
            for (std::size_t i = 0; i < nv; ++i)
                if (m[i] < g[i]) {
                    div = false;
                    break;
                }
            if (div) return true;
        }
        return false;
    };

    const std::size_t s = B.size();
    std::size_t max_basis = 1;
    if (s > 1)
        for (std::size_t sz = s; sz <= cap; sz *= s) {
            ++max_basis;
            if (sz > cap / s) break;
        }

    // Monomial basis below the ideal, grown from 1 by multiplying with the
    // variables. A basis larger than the cap allows means the quotient is
    // infinite or simply too big; both are SizeCapExceeded.
    std::set<std::vector<unsigned>> basis_set;
    std::vector<std::vector<unsigned>> work{std::vector<unsigned>(nv, 0)};
    basis_set.insert(work[0]);
    while (!work.empty()) {
        auto m = work.back();
        work.pop_back();
        for (std::size_t i = 0; i < nv; ++i) {
            auto m2 = m;
            ++m2[i];
            if (in_ideal(m2) || basis_set.count(m2)) continue;
            if (basis_set.size() >= max_basis)
                throw size_cap_exceeded("monext monomial basis exceeds size cap");
            basis_set.insert(m2);
            work.push_back(m2);
        }
    }
    std::vector<std::vector<unsigned>> basis(basis_set.begin(), basis_set.end());
    const std::size_t m = basis.size();
    std::size_t size = 1;
    for (std::size_t i = 0; i < m; ++i) {
        size *= s;
        check_cap(size, cap);
    }

    std::map<std::vector<unsigned>, std::size_t> basis_index;
    for (std::size_t i = 0; i < m; ++i) basis_index[basis[i]] = i;

    // product of basis monomials: basis position or npos when it falls in
    // the ideal.
    std::vector<std::size_t> prod(m * m);
    constexpr std::size_t drop = static_cast<std::size_t>(-1);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            std::vector<unsigned> e(nv);
            for (std::size_t k = 0; k < nv; ++k) e[k] = basis[i][k] + basis[j][k];
            if (in_ideal(e)) {
                prod[i * m + j] = drop;
            } else {
                auto it = basis_index.find(e);
                assert(it != basis_index.end());
                prod[i * m + j] = it->second;
            }
        }

    auto digits = [&](std::size_t idx) {
        std::vector<elem> e(m);
        for (std::size_t i = m; i-- > 0;) {
            e[i] = static_cast<elem>(idx % s);
            idx /= s;
        }
        return e;
    };
    auto index = [&](const std::vector<elem>& e) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < m; ++i) idx = idx * s + e[i];
        return idx;
    };

    std::vector<elem> add(size * size), mul(size * size);
    for (std::size_t a = 0; a < size; ++a) {
        auto ea = digits(a);
        for (std::size_t b = 0; b < size; ++b) {
            auto eb = digits(b);
            std::vector<elem> su(m);
            for (std::size_t i = 0; i < m; ++i) su[i] = B.add(ea[i], eb[i]);
            add[a * size + b] = static_cast<elem>(index(su));

            std::vector<elem> pr(m, 0);
            for (std::size_t i = 0; i < m; ++i) {
                if (ea[i] == 0) continue;
                for (std::size_t j = 0; j < m; ++j) {
                    if (eb[j] == 0) continue;
                    std::size_t k = prod[i * m + j];
                    if (k == drop) continue;
                    pr[k] = B.add(pr[k], B.mul(ea[i], eb[j]));
                }
            }
            mul[a * size + b] = static_cast<elem>(index(pr));
        }
    }

    auto mono_label = [&](const std::vector<unsigned>& e) {
        std::string out;
        for (std::size_t i = 0; i < nv; ++i) {
            if (e[i] == 0) continue;
            if (!out.empty()) out += "*";
            out += vars[i];
            if (e[i] != 1) out += "^" + std::to_string(e[i]);
        }
        return out;
    };

    std::vector<std::string> labels(size);
    for (std::size_t a = 0; a < size; ++a) {
        auto e = digits(a);
        std::vector<std::string> terms;
        for (std::size_t i = 0; i < m; ++i) {
            if (e[i] == 0) continue;
            std::string mono = mono_label(basis[i]);
            if (mono.empty()) {
                terms.push_back(B.label(e[i]));
            } else if (e[i] == B.one()) {
                terms.push_back(mono);
            } else {
                terms.push_back(coeff_label(B.label(e[i])) + "*" + mono);
            }
        }
        labels[a] = join_terms(terms);
    }

    std::map<std::string, elem> gens;
    for (const auto& [name, g] : B.generators()) {
        std::vector<elem> e(m, 0);
        e[basis_index.at(std::vector<unsigned>(nv, 0))] = g;
        gens[name] = static_cast<elem>(index(e));
    }
    for (std::size_t i = 0; i < nv; ++i) {
        std::vector<unsigned> ve(nv, 0);
        ve[i] = 1;
        std::vector<elem> e(m, 0);
        auto it = basis_index.find(ve);
        if (it != basis_index.end()) e[it->second] = B.one();
        gens[vars[i]] = static_cast<elem>(index(e));
    }

    std::vector<elem> one_digits(m, 0);
    one_digits[basis_index.at(std::vector<unsigned>(nv, 0))] = B.one();
    return {size,
            std::move(add),
            std::move(mul),
            static_cast<elem>(index(one_digits)),
            std::move(labels),
            std::move(gens),
            spec};
}

ring_table build_quot(const ring_table& B, const std::vector<int_poly>& gen_exprs,
                      const std::string& spec) {
    std::vector<elem> gens;
    gens.reserve(gen_exprs.size());
    for (const auto& e : gen_exprs) gens.push_back(eval_element(B, e));
    std::set<elem> I = ideal_closure(B, gens);

    const std::size_t s = B.size();
    std::vector<elem> rep(s);
    for (elem a = 0; a < s; ++a) {
        elem r = a;
        for (elem i : I) r = std::min(r, B.add(a, i));
        rep[a] = r;
    }
    std::vector<elem> reps;
    for (elem a = 0; a < s; ++a)
        if (rep[a] == a) reps.push_back(a);
    std::map<elem, elem> index;
    for (std::size_t i = 0; i < reps.size(); ++i)
        index[reps[i]] = static_cast<elem>(i);

    const std::size_t size = reps.size();
    std::vector<elem> add(size * size), mul(size * size);
    std::vector<std::string> labels(size);
    for (std::size_t a = 0; a < size; ++a) {
        labels[a] = B.label(reps[a]);
        for (std::size_t b = 0; b < size; ++b) {
            add[a * size + b] = index.at(rep[B.add(reps[a], reps[b])]);
            mul[a * size + b] = index.at(rep[B.mul(reps[a], reps[b])]);
        }
    }
    std::map<std::string, elem> gmap;
    for (const auto& [name, g] : B.generators()) gmap[name] = index.at(rep[g]);

    return {size,      std::move(add),    std::move(mul), index.at(rep[B.one()]),
            std::move(labels), std::move(gmap), spec};
}

ring_table build_product(const ring_table& A, const ring_table& B,
                         std::size_t cap, const std::string& spec) {
    const std::size_t sa = A.size(), sb = B.size();
    check_cap(sa * sb, cap);
    const std::size_t size = sa * sb;
    std::vector<elem> add(size * size), mul(size * size);
    std::vector<std::string> labels(size);
    for (std::size_t a = 0; a < size; ++a) {
        elem a1 = static_cast<elem>(a / sb), a2 = static_cast<elem>(a % sb);
        labels[a] = "(" + A.label(a1) + "," + B.label(a2) + ")";
        for (std::size_t b = 0; b < size; ++b) {
            elem b1 = static_cast<elem>(b / sb), b2 = static_cast<elem>(b % sb);
            add[a * size + b] =
                static_cast<elem>(A.add(a1, b1) * sb + B.add(a2, b2));
            mul[a * size + b] =
                static_cast<elem>(A.mul(a1, b1) * sb + B.mul(a2, b2));
        }
    }
    elem one = static_cast<elem>(A.one() * sb + B.one());
    return {size, std::move(add), std::move(mul), one, std::move(labels), {},
            spec};
}

bool is_prime_number(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

ring_table build_gf(long long p, long long d, std::size_t cap,
                    const std::string& spec) {
    if (!is_prime_number(p)) throw malformed_spec("GF characteristic must be prime");
    if (d < 1) throw malformed_spec("GF degree must be positive");
    std::size_t size = 1;
    for (long long i = 0; i < d; ++i) {
        size *= static_cast<std::size_t>(p);
        check_cap(size, cap);
    }
    ring_table base = build_zmod(p, cap, "Z/" + std::to_string(p));
    if (d == 1) return build_zmod(p, cap, spec);

    // Lexicographically least monic irreducible of degree d over Z/p,
    // coefficient tuple (c_0, ..., c_{d-1}).
    std::vector<long long> c(static_cast<std::size_t>(d), 0);
    for (;;) {
        int_poly poly = int_poly::variable("t").pow(static_cast<unsigned>(d));
        for (std::size_t i = 0; i < c.size(); ++i)
            poly = poly + int_poly::constant(c[i]) *
                              int_poly::variable("t").pow(static_cast<unsigned>(i));
        ring_table cand = build_polyquot(base, "t", poly, cap, spec);
        bool field = true;
        for (elem a = 1; a < cand.size(); ++a)
            if (!cand.is_unit(a)) {
                field = false;
                break;
            }
        if (field) return cand;

        std::size_t i = c.size();
        while (i-- > 0) {
            if (++c[i] < p) break;
            c[i] = 0;
            if (i == 0)
                throw malformed_spec("no irreducible polynomial found"); // unreachable
        }
    }
}

// --- spec grammar ----------------------------------------------------------

ring_spec parse_spec(detail::lexer& lx) {
    ring_spec s;
    if (lx.accept_name("Z")) {
        lx.expect_symbol('/');
        if (lx.peek().kind != detail::tok_kind::integer) lx.fail("expected modulus");
        s.kind = ring_spec::op::zmod;
        s.n = std::stoll(lx.next().text);
        return s;
    }
    if (lx.accept_name("GF")) {
        lx.expect_symbol('(');
        if (lx.peek().kind != detail::tok_kind::integer) lx.fail("expected prime");
        s.kind = ring_spec::op::gf;
        s.n = std::stoll(lx.next().text);
        lx.expect_symbol(',');
        if (lx.peek().kind != detail::tok_kind::integer) lx.fail("expected degree");
        s.d = std::stoll(lx.next().text);
        lx.expect_symbol(')');
        return s;
    }
    if (lx.accept_name("polyquot")) {
        lx.expect_symbol('(');
        s.kind = ring_spec::op::polyquot;
        s.args.push_back(parse_spec(lx));
        lx.expect_symbol(',');
        s.var = lx.expect_name();
        lx.expect_symbol(',');
        s.polys.push_back(detail::parse_poly(lx));
        lx.expect_symbol(')');
        return s;
    }
    if (lx.accept_name("monext")) {
        lx.expect_symbol('(');
        s.kind = ring_spec::op::monext;
        s.args.push_back(parse_spec(lx));
        lx.expect_symbol(',');
        lx.expect_symbol('[');
        do {
            s.vars.push_back(lx.expect_name());
        } while (lx.accept_symbol(','));
        lx.expect_symbol(']');
        lx.expect_symbol(',');
        lx.expect_symbol('[');
        do {
            s.polys.push_back(detail::parse_poly(lx));
        } while (lx.accept_symbol(','));
        lx.expect_symbol(']');
        lx.expect_symbol(')');
        return s;
    }
    if (lx.accept_name("quot")) {
        lx.expect_symbol('(');
        s.kind = ring_spec::op::quot;
        s.args.push_back(parse_spec(lx));
        lx.expect_symbol(',');
        lx.expect_symbol('[');
        do {
            s.polys.push_back(detail::parse_poly(lx));
        } while (lx.accept_symbol(','));
        lx.expect_symbol(']');
        lx.expect_symbol(')');
        return s;
    }
    if (lx.accept_name("prod")) {
        lx.expect_symbol('(');
        s.kind = ring_spec::op::product;
        s.args.push_back(parse_spec(lx));
        lx.expect_symbol(',');
        s.args.push_back(parse_spec(lx));
        lx.expect_symbol(')');
        return s;
    }
    lx.fail("expected ring spec");
}

} // namespace

ring_spec ring_spec::parse(const std::string& text) {
    try {
        detail::lexer lx(text);
        ring_spec s = parse_spec(lx);
        lx.expect_end();
        return s;
    } catch (const syntax_error& e) {
        throw malformed_spec(std::string("bad ring spec: ") + e.what());
    }
}

std::string ring_spec::str() const {
    switch (kind) {
        case op::zmod:
            return "Z/" + std::to_string(n);
        case op::gf:
            return "GF(" + std::to_string(n) + "," + std::to_string(d) + ")";
        case op::polyquot:
            return "polyquot(" + args[0].str() + "," + var + "," +
                   polys[0].str() + ")";
        case op::monext: {
            std::string vs, ms;
            for (const auto& v : vars) vs += (vs.empty() ? "" : ",") + v;
            for (const auto& p : polys) ms += (ms.empty() ? "" : ",") + p.str();
            return "monext(" + args[0].str() + ",[" + vs + "],[" + ms + "])";
        }
        case op::quot: {
            std::string gs;
            for (const auto& p : polys) gs += (gs.empty() ? "" : ",") + p.str();
            return "quot(" + args[0].str() + ",[" + gs + "])";
        }
        case op::product:
            return "prod(" + args[0].str() + "," + args[1].str() + ")";
    }
    return {};
}

ring_table build(const ring_spec& spec, std::size_t cap) {
    const std::string text = spec.str();
    switch (spec.kind) {
        case ring_spec::op::zmod:
            return build_zmod(spec.n, cap, text);
        case ring_spec::op::gf:
            return build_gf(spec.n, spec.d, cap, text);
        case ring_spec::op::polyquot:
            return build_polyquot(build(spec.args[0], cap), spec.var,
                                  spec.polys[0], cap, text);
        case ring_spec::op::monext:
            return build_monext(build(spec.args[0], cap), spec.vars, spec.polys,
                                cap, text);
        case ring_spec::op::quot:
            return build_quot(build(spec.args[0], cap), spec.polys, text);
        case ring_spec::op::product:
            return build_product(build(spec.args[0], cap), build(spec.args[1], cap),
                                 cap, text);
    }
    throw malformed_spec("unknown spec kind");
}

ring_table build(const std::string& spec_text, std::size_t cap) {
    return build(ring_spec::parse(spec_text), cap);
}

elem eval_element(const ring_table& R, const int_poly& expr) {
    elem r = 0;
    for (const auto& [m, c] : expr.terms()) {
        elem t = R.from_int(c);
        for (const auto& [v, e] : m) {
            auto it = R.generators().find(v);
            if (it == R.generators().end())
                throw malformed_spec("unknown generator " + v + " in element expression");
            for (unsigned i = 0; i < e; ++i) t = R.mul(t, it->second);
        }
        r = R.add(r, t);
    }
    return r;
}

// --- predicates ------------------------------------------------------------

bool divides(const ring_table& R, elem a, elem b) {
    for (elem c = 0; c < R.size(); ++c)
        if (R.mul(a, c) == b) return true;
    return false;
}

static void reject_degenerate(const ring_table& R) {
    if (R.size() == 1)
        throw degenerate_ring("the one-element ring is excluded from predicates");
}

predicate_report basic_predicates(const ring_table& R) {
    reject_degenerate(R);
    const std::size_t s = R.size();

    bool local = true;
    for (elem a = 0; a < s && local; ++a)
        if (!R.is_unit(a) && !R.is_unit(R.sub(R.one(), a))) local = false;

    bool domain = true;
    for (elem a = 1; a < s && domain; ++a)
        for (elem b = 1; b < s; ++b)
            if (R.mul(a, b) == 0) {
                domain = false;
                break;
            }

    bool field = true;
    for (elem a = 1; a < s && field; ++a)
        if (!R.is_unit(a)) field = false;

    bool reduced = nilradical(R).size() == 1;
    bool chain = !incomparable_pair(R).has_value();

    return {local, domain, field, reduced, chain};
}

std::set<elem> units(const ring_table& R) {
    std::set<elem> u;
    for (elem a = 0; a < R.size(); ++a)
        if (R.is_unit(a)) u.insert(a);
    return u;
}

std::set<elem> principal_ideal(const ring_table& R, elem a) {
    std::set<elem> I;
    for (elem r = 0; r < R.size(); ++r) I.insert(R.mul(a, r));
    return I;
}

std::set<elem> nilradical(const ring_table& R) {
    std::set<elem> nil;
    for (elem a = 0; a < R.size(); ++a) {
        elem p = a;
        for (std::size_t k = 1; k <= R.size(); ++k) {
            if (p == 0) {
                nil.insert(a);
                break;
            }
            p = R.mul(p, a);
        }
    }
    return nil;
}

zd_report zero_divisors_and_max_ideal(const ring_table& R) {
    zd_report rep;
    rep.zero_divisors.insert(0);
    for (elem a = 1; a < R.size(); ++a) {
        for (elem b = 1; b < R.size(); ++b)
            if (R.mul(a, b) == 0) {
                rep.zero_divisors.insert(a);
                break;
            }
    }
    for (elem a = 0; a < R.size(); ++a)
        if (!R.is_unit(a)) rep.nonunits.insert(a);
    return rep;
}

std::set<elem> ideal_closure(const ring_table& R, const std::vector<elem>& gens) {
    std::set<elem> I{0};
    for (elem g : gens) I.insert(g);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<elem> cur(I.begin(), I.end());
        for (elem a : cur) {
            for (elem b : cur)
                if (I.insert(R.add(a, b)).second) changed = true;
            for (elem r = 0; r < R.size(); ++r)
                if (I.insert(R.mul(a, r)).second) changed = true;
        }
    }
    return I;
}

std::vector<std::set<elem>> all_ideals(const ring_table& R) {
    if (R.size() > 64)
        throw size_cap_exceeded("all_ideals is limited to rings of size 64");
    std::set<std::set<elem>> ideals;
    for (elem a = 0; a < R.size(); ++a) ideals.insert(principal_ideal(R, a));
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::set<elem>> cur(ideals.begin(), ideals.end());
        for (const auto& I : cur)
            for (const auto& J : cur) {
                std::set<elem> sum;
                for (elem i : I)
                    for (elem j : J) sum.insert(R.add(i, j));
                if (ideals.insert(sum).second) changed = true;
            }
    }
    return {ideals.begin(), ideals.end()};
}

bool is_ideal(const ring_table& R, const std::set<elem>& I) {
    if (!I.count(0)) return false;
    for (elem a : I) {
        for (elem b : I)
            if (!I.count(R.add(a, b))) return false;
        for (elem r = 0; r < R.size(); ++r)
            if (!I.count(R.mul(a, r))) return false;
    }
    return true;
}

bool is_prime_ideal(const ring_table& R, const std::set<elem>& I) {
    if (!is_ideal(R, I))
        throw not_an_ideal("the given set is not an ideal");
    if (I.size() == R.size()) return false;
    for (elem a = 0; a < R.size(); ++a) {
        if (I.count(a)) continue;
        for (elem b = 0; b < R.size(); ++b) {
            if (I.count(b)) continue;
            if (I.count(R.mul(a, b))) return false;
        }
    }
    return true;
}

std::optional<std::pair<elem, elem>> incomparable_pair(const ring_table& R) {
    for (elem a = 0; a < R.size(); ++a)
        for (elem b = static_cast<elem>(a + 1); b < R.size(); ++b)
            if (!divides(R, a, b) && !divides(R, b, a)) return std::make_pair(a, b);
    return std::nullopt;
}

void require_chain(const ring_table& R) {
    reject_degenerate(R);
    if (auto w = incomparable_pair(R)) {
        throw not_a_chain_ring("not a chain ring: " + R.label(w->first) +
                               " and " + R.label(w->second) +
                               " are incomparable under divisibility");
    }
}

unsigned require_prime_char(const ring_table& R) {
    unsigned p = R.characteristic();
    if (!is_prime_number(p))
        throw not_prime_characteristic("characteristic " + std::to_string(p) +
                                       " is not prime");
    return p;
}

} // namespace chainlab
