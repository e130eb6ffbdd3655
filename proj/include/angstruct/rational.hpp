/*
angstruct

Copyright 2026 The angstruct Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

   http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

/** @file rational.hpp
 *  @brief Exact rationals and angles measured in units of pi
 */

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace angstruct
{

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/** @brief Canonical text form: "p/q", or "p" when q = 1 */
inline auto to_string(const Rational& r) -> std::string
{
    if (boost::multiprecision::denominator(r) == 1) {
        return boost::multiprecision::numerator(r).str();
    }
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

namespace detail
{
inline auto is_integer_literal(std::string_view s) -> bool
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
            return false;
        }
    }
    return true;
}
}  // namespace detail

/**
 * @brief Parse "p" or "p/q" into a canonical rational
 * @throws std::invalid_argument on malformed text or a zero denominator
 */
inline auto parse_rational(std::string_view text) -> Rational
{
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"}
                                                     : text.substr(slash + 1);
    if (!detail::is_integer_literal(num) || !detail::is_integer_literal(den) ||
        den.front() == '-' || den.front() == '+') {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    auto strip = [](std::string_view s) {
        return std::string(s.front() == '+' ? s.substr(1) : s);
    };
    Integer p(strip(num));
    Integer q(strip(den));
    if (q == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(p, q);
}

/** @brief Sign of a rational: -1, 0 or 1 */
inline auto sign(const Rational& r) -> int { return r.sign(); }

/**
 * @brief An angle stored exactly as a rational multiple of pi
 *
 * AnglePi{1/3} is pi/3 radians. Arithmetic stays in the rational field.
 */
class AnglePi
{
public:
    AnglePi() = default;
    explicit AnglePi(Rational v) : v_(std::move(v)) {}
    explicit AnglePi(long v) : v_(v) {}

    static auto pi() -> AnglePi { return AnglePi{1}; }
    static auto zero() -> AnglePi { return AnglePi{}; }

    [[nodiscard]] auto value() const -> const Rational& { return v_; }

    auto operator+=(const AnglePi& o) -> AnglePi&
    {
        v_ += o.v_;
        return *this;
    }
    auto operator-=(const AnglePi& o) -> AnglePi&
    {
        v_ -= o.v_;
        return *this;
    }
    friend auto operator+(AnglePi a, const AnglePi& b) -> AnglePi { return a += b; }
    friend auto operator-(AnglePi a, const AnglePi& b) -> AnglePi { return a -= b; }
    friend auto operator-(const AnglePi& a) -> AnglePi { return AnglePi{-a.v_}; }
    friend auto operator*(const Rational& s, const AnglePi& a) -> AnglePi
    {
        return AnglePi{s * a.v_};
    }

    friend auto operator==(const AnglePi& a, const AnglePi& b) -> bool { return a.v_ == b.v_; }
    friend auto operator<(const AnglePi& a, const AnglePi& b) -> bool { return a.v_ < b.v_; }
    friend auto operator>(const AnglePi& a, const AnglePi& b) -> bool { return b < a; }
    friend auto operator<=(const AnglePi& a, const AnglePi& b) -> bool { return !(b < a); }
    friend auto operator>=(const AnglePi& a, const AnglePi& b) -> bool { return !(a < b); }

    [[nodiscard]] auto is_zero() const -> bool { return v_ == 0; }
    [[nodiscard]] auto is_pi() const -> bool { return v_ == 1; }

private:
    Rational v_{0};
};

inline auto to_string(const AnglePi& a) -> std::string { return to_string(a.value()); }

/** @brief Dot product of two equally sized rational vectors */
inline auto dot(const std::vector<Rational>& a, const std::vector<Rational>& b) -> Rational
{
    if (a.size() != b.size()) {
        throw std::invalid_argument("dot: dimension mismatch");
    }
    Rational s{0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0 && b[i] != 0) {
            s += a[i] * b[i];
        }
    }
    return s;
}

}  // namespace angstruct
