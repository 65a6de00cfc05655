#pragma once

#include <stdexcept>
#include <string>

namespace chainlab {

// Base class for every error surfaced to callers. name() is the stable
// identifier used in CLI error envelopes and tests.
class error : public std::runtime_error {
public:
    error(std::string name, const std::string& msg)
        : std::runtime_error(msg), name_(std::move(name)) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define CHAINLAB_DEFINE_ERROR(type, id)                                  \
    class type : public error {                                          \
    public:                                                              \
        explicit type(const std::string& msg) : error(id, msg) {}        \
    };

CHAINLAB_DEFINE_ERROR(size_cap_exceeded, "SizeCapExceeded")
CHAINLAB_DEFINE_ERROR(non_monic_polynomial, "NonMonicPolynomial")
CHAINLAB_DEFINE_ERROR(malformed_spec, "MalformedSpec")
CHAINLAB_DEFINE_ERROR(degenerate_ring, "DegenerateRing")
CHAINLAB_DEFINE_ERROR(not_an_ideal, "NotAnIdeal")
CHAINLAB_DEFINE_ERROR(missing_variable, "MissingVariable")
CHAINLAB_DEFINE_ERROR(base_point_invalid, "BasePointInvalid")
CHAINLAB_DEFINE_ERROR(malformed_morphism, "MalformedMorphism")
CHAINLAB_DEFINE_ERROR(base_mismatch, "BaseMismatch")
CHAINLAB_DEFINE_ERROR(undecided_syntactically, "UndecidedSyntactically")
CHAINLAB_DEFINE_ERROR(syntax_error, "SyntaxError")
CHAINLAB_DEFINE_ERROR(unknown_builtin, "UnknownBuiltin")
CHAINLAB_DEFINE_ERROR(unknown_family, "UnknownFamily")
CHAINLAB_DEFINE_ERROR(not_a_chain_ring, "NotAChainRing")
CHAINLAB_DEFINE_ERROR(not_local, "NotLocal")
CHAINLAB_DEFINE_ERROR(not_prime_characteristic, "NotPrimeCharacteristic")
CHAINLAB_DEFINE_ERROR(not_divisible_at_level, "NotDivisibleAtLevel")
CHAINLAB_DEFINE_ERROR(deepest_coordinate_zero, "DeepestCoordinateZero")

#undef CHAINLAB_DEFINE_ERROR

} // namespace chainlab
