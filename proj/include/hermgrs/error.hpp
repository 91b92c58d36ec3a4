#ifndef HERMGRS_ERROR_HPP
#define HERMGRS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hermgrs {

/// Error conditions surfaced by the library. Each value corresponds to a
/// documented failure mode of one or more operations.
enum class Errc {
    bad_argument,
    not_prime,
    too_large,
    division_by_zero,
    duplicate_root,
    duplicate_node,
    division_by_zero_poly,
    zero_polynomial,
    length_mismatch,
    invalid_code,
    too_large_to_enumerate,
    not_even,
    not_monic,
    not_in_family,
    no_feasible_lambda,
    norm_infeasible,
    verification_failed,
    kernel_too_large,
    too_many_subsets,
    bad_document,
};

class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    [[nodiscard]] Errc code() const noexcept { return code_; }

   private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

/// Check for conditions that are mathematically guaranteed; a violation is a
/// defect in this library, not a caller error, so it throws std::logic_error.
inline void internal_check(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("internal invariant violated: ") + what);
}

}  // namespace hermgrs

#endif
