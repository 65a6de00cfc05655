#include "chainlab/structure.hpp"

#include <algorithm>
#include <set>

#include "chainlab/errors.hpp"

namespace chainlab {

std::string to_string(chain_case c) {
    switch (c) {
        case chain_case::field: return "Field";
        case chain_case::equal_char_truncated: return "EqualCharTruncated";
        case chain_case::unramified_mixed: return "UnramifiedMixed";
        case chain_case::outside_listed_cases: return "OutsideListedCases";
    }
    return "?";
}

chain_classification classify_chain(const ring_table& R) {
    require_chain(R);
    chain_classification out;
    out.characteristic = R.characteristic();

    const std::set<elem> m = zero_divisors_and_max_ideal(R).nonunits;

    elem pi = 0;
    bool found = false;
    for (elem x = 0; x < R.size() && !found; ++x)
        if (principal_ideal(R, x) == m) {
            pi = x;
            found = true;
        }
    if (!found)
        throw not_a_chain_ring("maximal ideal is not principal"); // unreachable
    out.uniformizer = pi;

    unsigned n = 1;
    while (R.pow(pi, n) != 0) ++n;
    out.nilpotency_index = n;

    out.residue_field_size = R.size() / m.size();

    unsigned p = 1;
    while (!m.count(R.from_int(++p))) {}
    out.residue_char = p;

    out.maximal_ideal_is_p = principal_ideal(R, R.from_int(p)) == m;

    if (n == 1) {
        out.kase = chain_case::field;
    } else if (out.characteristic == p) {
        std::size_t qn = 1;
        for (unsigned i = 0; i < n; ++i) qn *= out.residue_field_size;
        out.kase = (R.size() == qn) ? chain_case::equal_char_truncated
                                    : chain_case::outside_listed_cases;
    } else if (out.maximal_ideal_is_p) {
        out.kase = chain_case::unramified_mixed;
    } else {
        out.kase = chain_case::outside_listed_cases;
    }
    return out;
}

ring_table perfection_colim(const ring_table& R) {
    const unsigned p = require_prime_char(R);

    std::set<elem> cur;
    for (elem a = 0; a < R.size(); ++a) cur.insert(a);
    for (;;) {
        std::set<elem> next;
        for (elem a : cur) next.insert(R.pow(a, p));
        if (next == cur) break;
        cur = std::move(next);
    }

    std::vector<elem> members(cur.begin(), cur.end()); // ascending: 0 first
    std::vector<elem> back(R.size(), 0);
    for (std::size_t i = 0; i < members.size(); ++i) back[members[i]] = (elem)i;

    const std::size_t s = members.size();
    std::vector<elem> add(s * s), mul(s * s);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < s; ++i) {
        labels.push_back(R.label(members[i]));
        for (std::size_t j = 0; j < s; ++j) {
            add[i * s + j] = back[R.add(members[i], members[j])];
            mul[i * s + j] = back[R.mul(members[i], members[j])];
        }
    }
    std::map<std::string, elem> gens;
    for (const auto& [name, g] : R.generators())
        if (cur.count(g)) gens.emplace(name, back[g]);
    return ring_table(s, std::move(add), std::move(mul), back[R.one()],
                      std::move(labels), std::move(gens),
                      "perfection_colim(" + R.spec() + ")");
}

namespace {

elem frob_iter(const ring_table& R, elem a, unsigned p, unsigned times) {
    for (unsigned i = 0; i < times; ++i) a = R.pow(a, p);
    return a;
}

} // namespace

elem chain_level(const ring_table& R, const frob_chain& c, unsigned i) {
    if (i < 1 || i > c.depth)
        throw malformed_spec("chain level out of range");
    const unsigned p = require_prime_char(R);
    return frob_iter(R, c.last, p, c.depth - i);
}

chain_divide_result chain_divide(const ring_table& R, const frob_chain& a,
                                 const frob_chain& b) {
    const unsigned p = require_prime_char(R);
    if (a.depth != b.depth || a.depth < 3)
        throw malformed_spec("chain division needs equal depths of at least 3");
    const unsigned k = a.depth;

    std::vector<elem> av(k + 1), bv(k + 1);
    for (unsigned i = 1; i <= k; ++i) {
        av[i] = chain_level(R, a, i);
        bv[i] = chain_level(R, b, i);
    }
    // The two-level shift below repairs the quotient chain only while the
    // divisor stays nonzero next to the deepest level; a divisor that dies
    // against a surviving dividend is hopeless at level 1 for the same reason.
    if (bv[k - 1] == 0 || (bv[1] == 0 && av[1] != 0))
        throw deepest_coordinate_zero(
            "divisor chain vanishes too early for division");

    std::vector<elem> c(k + 1, 0);
    for (unsigned i = 1; i <= k; ++i) {
        bool found = false;
        for (elem x = 0; x < R.size(); ++x)
            if (R.mul(bv[i], x) == av[i]) {
                c[i] = x;
                found = true;
                break;
            }
        if (!found)
            throw not_divisible_at_level("no division witness at level " +
                                         std::to_string(i));
    }

    chain_divide_result out;
    out.levels.resize(k - 2 + 1);
    for (unsigned i = 1; i <= k - 2; ++i)
        out.levels[i] = frob_iter(R, c[i + 2], p, 2);
    out.quotient = {k - 2, out.levels[k - 2]};

    out.verified = true;
    for (unsigned i = 1; i <= k - 2 && out.verified; ++i)
        if (R.mul(bv[i], out.levels[i]) != av[i]) {
            out.verified = false;
            out.failed_level = i;
        }
    for (unsigned i = 1; i + 1 <= k - 2 && out.verified; ++i)
        if (R.pow(out.levels[i + 1], p) != out.levels[i]) {
            out.verified = false;
            out.failed_level = i;
        }
    out.levels.erase(out.levels.begin()); // drop the unused slot 0
    return out;
}

check_result division_lemma_check(const ring_table& R) {
    require_chain(R);
    const unsigned p = require_prime_char(R);
    for (elem x = 0; x < R.size(); ++x)
        for (elem y = 0; y < R.size(); ++y) {
            if (R.mul(x, y) != 0 || R.pow(y, p) == 0) continue;
            if (!divides(R, y, x) || R.pow(x, p) != 0)
                return {false, std::make_pair(x, y)};
        }
    return {};
}

check_result tilt_domain_check(const ring_table& R, unsigned depth) {
    require_chain(R);
    const unsigned p = require_prime_char(R);
    if (depth < 1) throw malformed_spec("depth must be positive");
    for (elem x = 0; x < R.size(); ++x)
        for (elem y = 0; y < R.size(); ++y) {
            if (R.mul(x, y) == 0 && R.pow(x, p) != 0 && R.pow(y, p) != 0)
                return {false, std::make_pair(x, y)};
            if (R.pow(y, p) != 0 && divides(R, R.pow(y, p), R.pow(x, p)) &&
                !divides(R, y, x))
                return {false, std::make_pair(x, y)};
        }
    return {};
}

} // namespace chainlab
