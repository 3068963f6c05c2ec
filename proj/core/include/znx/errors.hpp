#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace znx {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad file contents, unknown ids, mismatched sizes.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A size the constructions do not cover (orthogonal pairs of K_4 / K_6 and
/// the complexes that would need them).
class UnsupportedSize : public Error {
public:
    explicit UnsupportedSize(int size)
        : Error("unsupported size " + std::to_string(size)), size_(size) {}
    int size() const noexcept { return size_; }

private:
    int size_;
};

/// A documented precondition of an operation does not hold. The message
/// carries the witness.
class PreconditionFailed : public Error {
public:
    using Error::Error;
};

/// A relation does not reduce to at most three distinct generator powers.
class TooLong : public Error {
public:
    using Error::Error;
};

/// The abelianization of a presentation has torsion.
class NotFreeAbelianRank : public Error {
public:
    explicit NotFreeAbelianRank(std::vector<mpz_class> torsion);
    const std::vector<mpz_class>& torsion() const noexcept { return torsion_; }

private:
    std::vector<mpz_class> torsion_;
};

}  // namespace znx
