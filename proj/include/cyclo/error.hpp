#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cyclo {

enum class ErrorKind {
    CompositeCharacteristic,
    ReducibleModulus,
    InvalidSubfield,
    NoSuchRoot,
    ZeroElement,
    DivisionByZeroPoly,
    FieldMismatch,
    ModulusMismatch,
    ConstantPolynomial,
    DegreeNotDividing,
    NotIrreducible,
    NotAUnit,
    NonLinearBase,
    ModulusNotAPower,
    ZeroPolynomial,
    BudgetExceeded,
    MDoesNotSplit,
    ConsistencyFailure,
    InternalInconsistency,
    DimensionMismatch,
    ReductionFailure,
    Overflow,
    ParseError,
};

constexpr std::string_view to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::CompositeCharacteristic: return "CompositeCharacteristic";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::InvalidSubfield: return "InvalidSubfield";
    case ErrorKind::NoSuchRoot: return "NoSuchRoot";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorKind::DegreeNotDividing: return "DegreeNotDividing";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::NonLinearBase: return "NonLinearBase";
    case ErrorKind::ModulusNotAPower: return "ModulusNotAPower";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::MDoesNotSplit: return "MDoesNotSplit";
    case ErrorKind::ConsistencyFailure: return "ConsistencyFailure";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ReductionFailure: return "ReductionFailure";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Single exception type for the library; the kind identifies the failure.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

/// Default cap on any exhaustive enumeration (group tables, field orders).
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 20;

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer product exceeds 64 bits");
    return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer sum exceeds 64 bits");
    return r;
}

inline std::int64_t checked_pow(std::int64_t base, std::int64_t e) {
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < e; ++i) r = checked_mul(r, base);
    return r;
}

inline std::uint64_t ipow(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= base;
    return r;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Distinct prime factors in increasing order.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Returns (p, r) with n = p^r, or (0, 0) if n is not a prime power.
inline std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t n) {
    if (n < 2) return {0, 0};
    auto fs = prime_factors(n);
    if (fs.size() != 1) return {0, 0};
    unsigned r = 0;
    while (n > 1) {
        n /= fs[0];
        ++r;
    }
    return {fs[0], r};
}

} // namespace detail
} // namespace cyclo
