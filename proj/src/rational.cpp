#include "wlcs/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace wlcs {

namespace {

void require_valid(const BigInt& num, const BigInt& den) {
    if (num < 0) throw std::invalid_argument("rational numerator must be nonnegative");
    if (den < 1) throw std::invalid_argument("rational denominator must be positive");
}

}  // namespace

Rational::Rational(const BigInt& n) : num_(n), den_(1) {
    require_valid(num_, den_);
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    require_valid(num_, den_);
}

Rational::Rational(unsigned long num, unsigned long den) : num_(num), den_(den) {
    require_valid(num_, den_);
}

std::strong_ordering Rational::cmp(const Rational& other) const {
    BigInt lhs = num_ * other.den_;
    BigInt rhs = other.num_ * den_;
    const int c = ::cmp(lhs, rhs);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::mul(const Rational& other) const {
    return Rational(num_ * other.num_, den_ * other.den_, raw_tag{});
}

Rational Rational::add(const Rational& other) const {
    return Rational(num_ * other.den_ + other.num_ * den_, den_ * other.den_, raw_tag{});
}

Rational Rational::one_minus() const {
    if (num_ > den_) throw std::invalid_argument("one_minus requires a value <= 1");
    return Rational(den_ - num_, den_, raw_tag{});
}

Rational Rational::pow(std::uint64_t e) const {
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), num_.get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), den_.get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(std::move(n), std::move(d), raw_tag{}).canonical();
}

Rational Rational::canonical() const {
    if (num_ == 0) return Rational(BigInt(0), BigInt(1), raw_tag{});
    BigInt g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    return Rational(num_ / g, den_ / g, raw_tag{});
}

std::string Rational::str() const {
    if (den_ == 1) return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num_part = slash == std::string::npos ? text : text.substr(0, slash);
    const std::string den_part = slash == std::string::npos ? "1" : text.substr(slash + 1);

    auto digits_only = [](const std::string& s) {
        if (s.empty()) return false;
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        }
        return true;
    };
    if (!digits_only(num_part) || !digits_only(den_part)) {
        throw std::invalid_argument("malformed rational '" + text + "': expected NUM or NUM/DEN in decimal digits");
    }

    BigInt num(num_part);
    BigInt den(den_part);
    if (den == 0) throw std::invalid_argument("malformed rational '" + text + "': denominator is zero");
    return Rational(std::move(num), std::move(den));
}

namespace {

// Raw product over [lo, hi): no interleaved gcd work, the caller reduces once.
std::pair<BigInt, BigInt> product_tree(const std::vector<Rational>& xs, std::size_t lo, std::size_t hi) {
    constexpr std::size_t kSequentialBelow = 8;
    if (hi - lo < kSequentialBelow) {
        BigInt n(1), d(1);
        for (std::size_t i = lo; i < hi; ++i) {
            n *= xs[i].num();
            d *= xs[i].den();
        }
        return {std::move(n), std::move(d)};
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    auto left = product_tree(xs, lo, mid);
    auto right = product_tree(xs, mid, hi);
    return {left.first * right.first, left.second * right.second};
}

}  // namespace

Rational mul_many(const std::vector<Rational>& xs) {
    auto [n, d] = product_tree(xs, 0, xs.size());
    return Rational(std::move(n), std::move(d), Rational::raw_tag{}).canonical();
}

}  // namespace wlcs
