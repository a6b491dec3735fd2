#ifndef QUATLAT_COMMON_HPP
#define QUATLAT_COMMON_HPP

#include <stdexcept>
#include <string>

namespace quatlat {

enum class errc {
    invalid_argument,
    unsupported_field,
    unsupported_prime,
    rank_deficient,
    not_a_sublattice,
    not_a_square,
    precision_too_low,
    not_bass,
    unknown_class,
    diagonalization_failed,
    determinant_mismatch,
    not_beneath,
    parameter_failure,
    unreachable,
    row_missing,
    coefficient_not_integral,
    index_mismatch,
    not_principal,
    not_definite,
    method_disagreement,
    identity_violated,
};

class error : public std::runtime_error {
public:
    error(errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

inline void require(bool ok, errc c, const std::string& what) {
    if (!ok) fail(c, what);
}

} // namespace quatlat

#endif
