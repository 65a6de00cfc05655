#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chainlab/poly.hpp"

namespace chainlab {

using elem = std::uint16_t;

constexpr std::size_t default_ring_cap = 4096;

// A finite commutative ring as explicit operation tables. Element 0 is
// always the additive zero, and element order is the canonical order fixed
// by the constructor, so equal construction expressions give bit-identical
// tables.
class ring_table {
public:
    std::size_t size() const { return size_; }
    elem zero() const { return 0; }
    elem one() const { return one_; }
    unsigned characteristic() const { return char_; }
    const std::string& spec() const { return spec_; }
    const std::string& label(elem a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const { return labels_; }

    // Named generators available to element expressions (quot generators,
    // CLI element arguments).
    const std::map<std::string, elem>& generators() const { return gens_; }

    elem add(elem a, elem b) const { return add_[a * size_ + b]; }
    elem mul(elem a, elem b) const { return mul_[a * size_ + b]; }
    elem neg(elem a) const { return neg_[a]; }
    elem sub(elem a, elem b) const { return add(a, neg(b)); }
    elem pow(elem a, unsigned long long e) const;

    // Image of an integer under the canonical map Z -> R.
    elem from_int(const bigint& n) const;

    bool is_unit(elem a) const;
    std::optional<elem> inverse(elem a) const;

    bool same_tables(const ring_table& o) const;

    // Construction; used by build() and the structure module.
    ring_table(std::size_t size, std::vector<elem> add, std::vector<elem> mul,
               elem one, std::vector<std::string> labels,
               std::map<std::string, elem> gens, std::string spec);

private:
    std::size_t size_;
    std::vector<elem> add_, mul_, neg_;
    elem one_;
    unsigned char_;
    std::vector<std::string> labels_;
    std::map<std::string, elem> gens_;
    std::string spec_;
};

// Construction expression over the mini-language:
//   zmod(n), GF(p,d), polyquot(base,var,poly), monext(base,[vars],[monomials]),
//   quot(base,[elements]), prod(a,b).
struct ring_spec {
    enum class op { zmod, gf, polyquot, monext, quot, product };

    op kind = op::zmod;
    long long n = 0;                 // zmod modulus, or GF prime
    long long d = 0;                 // GF degree
    std::vector<ring_spec> args;     // sub-specs
    std::string var;                 // polyquot variable
    std::vector<std::string> vars;   // monext variables
    std::vector<int_poly> polys;     // polyquot poly / monext monomials / quot generators

    static ring_spec parse(const std::string& text);
    std::string str() const;
};

ring_table build(const ring_spec& spec, std::size_t cap = default_ring_cap);
ring_table build(const std::string& spec_text, std::size_t cap = default_ring_cap);

// Evaluates an element expression (integer polynomial in the ring's named
// generators) to an element.
elem eval_element(const ring_table& R, const int_poly& expr);

// --- ring-theoretic predicates and invariants -----------------------------

// True iff b lies in the principal ideal of a, i.e. some c has a*c = b.
bool divides(const ring_table& R, elem a, elem b);

struct predicate_report {
    bool is_local;
    bool is_domain;
    bool is_field;
    bool is_reduced;
    bool is_chain;
};

// Exhaustive scans; rejects the one-element ring with DegenerateRing.
predicate_report basic_predicates(const ring_table& R);

std::set<elem> units(const ring_table& R);
std::set<elem> principal_ideal(const ring_table& R, elem a);
std::set<elem> nilradical(const ring_table& R);

struct zd_report {
    std::set<elem> zero_divisors; // convention: includes 0
    std::set<elem> nonunits;
};

zd_report zero_divisors_and_max_ideal(const ring_table& R);

// Smallest subset containing the generators, closed under addition and
// multiplication by every ring element.
std::set<elem> ideal_closure(const ring_table& R, const std::vector<elem>& gens);

// All ideals, by closing the principal ideals under ideal sum. Guarded at
// size 64.
std::vector<std::set<elem>> all_ideals(const ring_table& R);

bool is_ideal(const ring_table& R, const std::set<elem>& I);
bool is_prime_ideal(const ring_table& R, const std::set<elem>& I);

// Least pair (a, b) with neither a | b nor b | a, when one exists.
std::optional<std::pair<elem, elem>> incomparable_pair(const ring_table& R);

// Throws NotAChainRing (with the witness pair) unless R is a chain ring.
void require_chain(const ring_table& R);

// The characteristic when it is prime; NotPrimeCharacteristic otherwise.
unsigned require_prime_char(const ring_table& R);

} // namespace chainlab
