#pragma once

#include <stdexcept>
#include <string>

namespace abt {

// Error conditions surfaced by the library. Names are part of the public
// contract: the CLI puts them into reports and tests match on them.
enum class errc {
    non_prime_characteristic,
    degree_too_large,
    field_too_large,
    singular_matrix,
    insufficient_precision,
    not_opposite,
    chain_broken,
    invalid_configuration,
    unverified_input,
    hypothesis_violated,
    size_guard_exceeded,
    sphere_truncated,
    germ_too_shallow,
    no_common_flat,
    invalid_data,
    zero_d,
    condition_failed,
    coset_limit_exceeded,
    incomplete_table,
    bad_argument,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::non_prime_characteristic: return "NonPrimeCharacteristic";
        case errc::degree_too_large: return "DegreeTooLarge";
        case errc::field_too_large: return "FieldTooLarge";
        case errc::singular_matrix: return "SingularMatrix";
        case errc::insufficient_precision: return "InsufficientPrecision";
        case errc::not_opposite: return "NotOpposite";
        case errc::chain_broken: return "ChainBroken";
        case errc::invalid_configuration: return "InvalidConfiguration";
        case errc::unverified_input: return "UnverifiedInput";
        case errc::hypothesis_violated: return "HypothesisViolated";
        case errc::size_guard_exceeded: return "SizeGuardExceeded";
        case errc::sphere_truncated: return "SphereTruncated";
        case errc::germ_too_shallow: return "GermTooShallow";
        case errc::no_common_flat: return "NoCommonFlat";
        case errc::invalid_data: return "InvalidData";
        case errc::zero_d: return "ZeroD";
        case errc::condition_failed: return "ConditionFailed";
        case errc::coset_limit_exceeded: return "CosetLimitExceeded";
        case errc::incomplete_table: return "IncompleteTable";
        case errc::bad_argument: return "BadArgument";
    }
    return "Unknown";
}

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

}  // namespace abt
