#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace wlcs {

using BigInt = mpz_class;

/// Exact nonnegative rational. Values are immutable after construction and
/// safe to share between threads.
///
/// The stored pair is NOT forced into lowest terms: equality and ordering go
/// through cross-multiplication, so 1/2 and 2/4 compare equal. canonical()
/// reduces by gcd; mul_many and pow apply it once at the end to bound operand
/// growth, nothing relies on it for correctness.
class Rational {
public:
    /// 0/1.
    Rational() : num_(0), den_(1) {}

    /// n/1.
    explicit Rational(const BigInt& n);
    explicit Rational(unsigned long n) : num_(n), den_(1) {}

    /// num/den as given. Rejects negative num and den < 1.
    Rational(BigInt num, BigInt den);
    Rational(unsigned long num, unsigned long den);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    /// Value-based ordering via num_x*den_y <=> num_y*den_x.
    std::strong_ordering cmp(const Rational& other) const;

    bool operator==(const Rational& other) const { return cmp(other) == std::strong_ordering::equal; }
    std::strong_ordering operator<=>(const Rational& other) const { return cmp(other); }

    Rational mul(const Rational& other) const;
    Rational add(const Rational& other) const;

    /// (den - num)/den. Rejects values above 1.
    Rational one_minus() const;

    /// Exact x^e by repeated squaring; pow(x, 0) = 1/1. Result is canonical.
    Rational pow(std::uint64_t e) const;

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == den_; }

    /// Same value in lowest terms.
    Rational canonical() const;

    /// "NUM/DEN", or "N" when the stored denominator is exactly 1.
    std::string str() const;

    /// Accepts "N" or "NUM/DEN" with decimal digits only; rejects signs,
    /// whitespace, and zero denominators. Throws std::invalid_argument.
    static Rational parse(const std::string& text);

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1ul); }

private:
    struct raw_tag {};
    Rational(BigInt num, BigInt den, raw_tag) : num_(std::move(num)), den_(std::move(den)) {}

    friend Rational mul_many(const std::vector<Rational>& xs);

    BigInt num_;
    BigInt den_;
};

/// Exact product of a list of rationals. Balanced divide-and-conquer product
/// tree (halve, recurse, multiply) keeps intermediate operand sizes even;
/// lists of fewer than 8 elements fold sequentially. Empty list gives 1/1.
/// The single result is canonicalized once at the end.
Rational mul_many(const std::vector<Rational>& xs);

}  // namespace wlcs
