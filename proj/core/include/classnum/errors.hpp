#pragma once

#include <stdexcept>
#include <string>

namespace classnum::error {

struct factorization_timeout : std::runtime_error {
    explicit factorization_timeout(const std::string& what)
        : std::runtime_error(what) {}
};

struct not_coprime : std::invalid_argument {
    explicit not_coprime(const std::string& what) : std::invalid_argument(what) {}
};

struct not_odd_prime : std::invalid_argument {
    explicit not_odd_prime(const std::string& what) : std::invalid_argument(what) {}
};

struct degree_violates_gamma : std::invalid_argument {
    explicit degree_violates_gamma(const std::string& what)
        : std::invalid_argument(what) {}
};

struct prime_not_factor : std::invalid_argument {
    explicit prime_not_factor(const std::string& what)
        : std::invalid_argument(what) {}
};

struct degree_not_odd : std::invalid_argument {
    explicit degree_not_odd(const std::string& what) : std::invalid_argument(what) {}
};

struct degree_odd : std::invalid_argument {
    explicit degree_odd(const std::string& what) : std::invalid_argument(what) {}
};

struct no_intermediate_field_data : std::invalid_argument {
    explicit no_intermediate_field_data(const std::string& what)
        : std::invalid_argument(what) {}
};

struct invalid_intermediate_field : std::invalid_argument {
    explicit invalid_intermediate_field(const std::string& what)
        : std::invalid_argument(what) {}
};

struct incomplete_intermediate_data : std::invalid_argument {
    explicit incomplete_intermediate_data(const std::string& what)
        : std::invalid_argument(what) {}
};

struct bound_not_exceeded : std::runtime_error {
    explicit bound_not_exceeded(const std::string& what) : std::runtime_error(what) {}
};

struct hypothesis_violation : std::invalid_argument {
    explicit hypothesis_violation(const std::string& what)
        : std::invalid_argument(what) {}
};

// A prime factor of t1 that is not 1 mod p would falsify the underlying
// lemma; this firing anywhere is a bug, never expected behaviour.
struct lemma_violation : std::logic_error {
    explicit lemma_violation(const std::string& what) : std::logic_error(what) {}
};

struct congruence_not_satisfied : std::invalid_argument {
    explicit congruence_not_satisfied(const std::string& what)
        : std::invalid_argument(what) {}
};

struct schema_error : std::runtime_error {
    explicit schema_error(const std::string& what) : std::runtime_error(what) {}
};

struct expression_error : std::runtime_error {
    explicit expression_error(const std::string& what) : std::runtime_error(what) {}
};

struct primality_mismatch : std::runtime_error {
    explicit primality_mismatch(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace classnum::error
