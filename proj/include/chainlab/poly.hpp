#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace chainlab {

using bigint = boost::multiprecision::cpp_int;

// Exponents keyed by variable name; variables with exponent zero are never
// stored, so the empty map is the constant monomial 1.
using monomial = std::map<std::string, unsigned>;

// Integer-coefficient multivariate polynomial in canonical form: no zero
// coefficients, terms keyed (and therefore ordered) by monomial.
class int_poly {
public:
    int_poly() = default;

    static int_poly constant(const bigint& c);
    static int_poly variable(const std::string& name);
    static int_poly parse(const std::string& text);

    bool is_zero() const { return terms_.empty(); }
    const std::map<monomial, bigint>& terms() const { return terms_; }

    // Sorted list of variables actually occurring.
    std::vector<std::string> vars() const;

    // If the polynomial is exactly one variable with coefficient 1, its name.
    std::optional<std::string> as_single_variable() const;

    int_poly operator+(const int_poly& o) const;
    int_poly operator-() const;
    int_poly operator-(const int_poly& o) const;
    int_poly operator*(const int_poly& o) const;
    int_poly pow(unsigned e) const;

    bool operator==(const int_poly& o) const { return terms_ == o.terms_; }
    bool operator<(const int_poly& o) const { return terms_ < o.terms_; }

    // Simultaneous substitution; variables absent from the map are kept.
    int_poly substitute(const std::map<std::string, int_poly>& images) const;
    int_poly rename(const std::map<std::string, std::string>& names) const;

    // Canonical text form; parse(str()) == *this.
    std::string str() const;

    void add_term(const monomial& m, const bigint& c);

private:
    std::map<monomial, bigint> terms_;
};

} // namespace chainlab
