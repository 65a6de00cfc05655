#include "chainlab/sentence.hpp"

#include <algorithm>
#include <set>

#include "chainlab/errors.hpp"
#include "eval_util.hpp"
#include "lexer.hpp"
#include "parse_util.hpp"

namespace chainlab {

using detail::compile;
using detail::cpoly;
using detail::lexer;

namespace {

std::vector<std::string> parse_varlist(lexer& lx) {
    std::vector<std::string> vars;
    do {
        std::string v = lx.expect_name();
        if (detail::is_keyword(v)) lx.fail("keyword used as a variable name");
        if (std::find(vars.begin(), vars.end(), v) != vars.end())
            lx.fail("duplicate variable " + v);
        vars.push_back(v);
    } while (lx.accept_symbol(','));
    return vars;
}

// eq := poly "=" poly, normalized to lhs - rhs; literal zero is dropped.
void parse_eqlist(lexer& lx, std::vector<int_poly>& out) {
    do {
        int_poly lhs = detail::parse_poly(lx);
        lx.expect_symbol('=');
        int_poly rhs = detail::parse_poly(lx);
        int_poly eq = lhs - rhs;
        if (!eq.is_zero()) out.push_back(std::move(eq));
    } while (lx.accept_symbol(','));
}

sentence_disjunct parse_disjunct(lexer& lx, const std::vector<std::string>& univars) {
    sentence_disjunct d;
    if (lx.accept_name("true")) return d;
    if (lx.accept_name("exists")) {
        d.exvars = parse_varlist(lx);
        for (const auto& v : d.exvars)
            if (std::find(univars.begin(), univars.end(), v) != univars.end())
                lx.fail("existential variable " + v + " shadows a universal one");
        lx.expect_symbol(':');
        if (lx.accept_name("true")) return d;
    }
    parse_eqlist(lx, d.eqs);
    return d;
}

// Odometer step on t[lo..hi); false when the range wraps around to zero.
bool advance(tuple_t& t, std::size_t lo, std::size_t hi, std::size_t size) {
    for (std::size_t i = hi; i-- > lo;) {
        if (++t[i] < size) return true;
        t[i] = 0;
    }
    return false;
}

std::string render_eqs(const std::vector<int_poly>& eqs) {
    std::string out;
    for (std::size_t i = 0; i < eqs.size(); ++i) {
        if (i) out += ", ";
        out += eqs[i].str() + " = 0";
    }
    return out;
}

std::string render_vars(const std::vector<std::string>& vars) {
    std::string out;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i) out += ", ";
        out += vars[i];
    }
    return out;
}

} // namespace

coherent_sentence parse_sentence(const std::string& text) {
    lexer lx(text);
    coherent_sentence s;
    if (!lx.accept_name("forall")) lx.fail("expected 'forall'");
    s.univars = parse_varlist(lx);
    if (lx.accept_name("where")) parse_eqlist(lx, s.antecedent);
    lx.expect_symbol(':');
    do {
        s.disjuncts.push_back(parse_disjunct(lx, s.univars));
    } while (lx.accept_name("or"));
    lx.expect_end();
    return s;
}

std::string render_sentence(const coherent_sentence& s) {
    std::string out = "forall " + render_vars(s.univars);
    if (!s.antecedent.empty()) out += " where " + render_eqs(s.antecedent);
    out += " : ";
    for (std::size_t j = 0; j < s.disjuncts.size(); ++j) {
        if (j) out += " or ";
        const sentence_disjunct& d = s.disjuncts[j];
        if (!d.exvars.empty()) out += "exists " + render_vars(d.exvars) + " : ";
        out += d.eqs.empty() ? "true" : render_eqs(d.eqs);
    }
    return out;
}

holds_result holds(const coherent_sentence& s, const ring_table& R) {
    const std::size_t n = s.univars.size();
    std::size_t max_m = 0;
    for (const auto& d : s.disjuncts) max_m = std::max(max_m, d.exvars.size());
    detail::check_scan_cap(R.size(), n + max_m);

    std::vector<cpoly> ante;
    for (const auto& f : s.antecedent) ante.push_back(compile(f, s.univars, R));

    struct cdisj {
        std::size_t m;
        std::vector<cpoly> eqs;
    };
    std::vector<cdisj> ds;
    for (const auto& d : s.disjuncts) {
        std::vector<std::string> allvars = s.univars;
        allvars.insert(allvars.end(), d.exvars.begin(), d.exvars.end());
        cdisj cd;
        cd.m = d.exvars.size();
        for (const auto& g : d.eqs) cd.eqs.push_back(compile(g, allvars, R));
        ds.push_back(std::move(cd));
    }

    tuple_t a(n, 0);
    do {
        bool ante_ok = true;
        for (const auto& f : ante)
            if (f.eval(R, a) != 0) {
                ante_ok = false;
                break;
            }
        if (!ante_ok) continue;

        bool witnessed = false;
        for (const auto& d : ds) {
            tuple_t full = a;
            full.resize(n + d.m, 0);
            do {
                bool ok = true;
                for (const auto& g : d.eqs)
                    if (g.eval(R, full) != 0) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    witnessed = true;
                    break;
                }
            } while (advance(full, n, n + d.m, R.size()));
            if (witnessed) break;
        }
        if (!witnessed) return {false, a};
    } while (advance(a, 0, n, R.size()));
    return {true, std::nullopt};
}

std::vector<coherent_sentence> builtin_sentences(const std::string& name) {
    if (name == "local")
        return {parse_sentence(
            "forall a : exists b : a*b - 1 = 0 or exists c : (1 - a)*c - 1 = 0")};
    if (name == "domain")
        return {parse_sentence("forall a, b where a*b = 0 : a = 0 or b = 0")};
    if (name == "chain")
        return {parse_sentence(
            "forall a, b : exists c : a*c = b or exists d : a = b*d")};
    if (name == "valuation") {
        auto v = builtin_sentences("domain");
        auto c = builtin_sentences("chain");
        v.insert(v.end(), c.begin(), c.end());
        return v;
    }
    if (name.rfind("char(", 0) == 0 && name.back() == ')') {
        std::string inner = name.substr(5, name.size() - 6);
        if (!inner.empty() &&
            std::all_of(inner.begin(), inner.end(),
                        [](char ch) { return ch >= '0' && ch <= '9'; }))
            return {parse_sentence("forall a : " + inner + "*a = 0")};
    }
    throw unknown_builtin("no builtin sentence named " + name);
}

family sentence_to_family(const coherent_sentence& s) {
    auto base =
        std::make_shared<fp_algebra>(make_absolute(s.univars, s.antecedent));
    std::vector<fp_algebra> members;
    for (const auto& d : s.disjuncts) {
        std::vector<std::string> vars = s.univars;
        vars.insert(vars.end(), d.exvars.begin(), d.exvars.end());
        std::vector<int_poly> rels = s.antecedent;
        rels.insert(rels.end(), d.eqs.begin(), d.eqs.end());
        std::vector<int_poly> images;
        for (const auto& v : s.univars) images.push_back(int_poly::variable(v));
        members.push_back(
            make_over(base, std::move(vars), std::move(rels), std::move(images)));
    }
    return make_family("", std::move(base), std::move(members));
}

coherent_sentence family_to_sentence(const family& U) {
    coherent_sentence s;
    s.univars = U.base->vars;
    s.antecedent = U.base->relations;
    for (const auto& M : U.members) {
        sentence_disjunct d;
        std::map<std::string, std::string> ren;
        std::set<std::string> used(s.univars.begin(), s.univars.end());
        std::set<std::string> identified;
        std::vector<bool> bound(s.univars.size(), false);

        // A base generator whose image is a bare member variable identifies
        // that variable with the universal one (first come, first served).
        for (std::size_t k = 0; k < s.univars.size(); ++k) {
            auto v = M.base_images[k].as_single_variable();
            if (!v || identified.count(*v)) continue;
            if (std::find(M.vars.begin(), M.vars.end(), *v) == M.vars.end())
                continue;
            identified.insert(*v);
            ren[*v] = s.univars[k];
            bound[k] = true;
        }
        for (const auto& v : M.vars) {
            if (identified.count(v)) continue;
            std::string nv = v;
            unsigned i = 0;
            while (used.count(nv)) nv = v + "_" + std::to_string(++i);
            used.insert(nv);
            if (nv != v) ren[v] = nv;
            d.exvars.push_back(nv);
        }

        auto add_eq = [&](int_poly p) {
            if (p.is_zero()) return;
            if (p.terms().begin()->second < 0) p = -p; // sign normalization
            for (const auto& f : s.antecedent)
                if (p == f || p == -f) return; // already in the antecedent
            d.eqs.push_back(std::move(p));
        };
        for (const auto& r : M.relations) add_eq(r.rename(ren));
        for (std::size_t k = 0; k < s.univars.size(); ++k) {
            if (bound[k]) continue;
            add_eq(M.base_images[k].rename(ren) -
                   int_poly::variable(s.univars[k]));
        }
        s.disjuncts.push_back(std::move(d));
    }
    return s;
}

} // namespace chainlab
