#pragma once

/**
 * Exact integer and rational scalars, plus the small vector helpers every
 * other header builds on. Nothing in this library touches floating point.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "tropic/errors.hpp"

namespace tropic {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rational>;

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rational& q) { return den(q) == 1; }

inline Integer gcd(const Integer& a, const Integer& b)
{
    return boost::multiprecision::gcd(a, b);
}

inline Integer lcm(const Integer& a, const Integer& b)
{
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::lcm(a, b);
}

/// "p/q" for non-integers, "p" otherwise.
inline std::string to_string(const Rational& q)
{
    if (is_integral(q)) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

inline Integer parse_integer(std::string_view text)
{
    std::string s(text);
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) throw TropicError(ErrorCode::ParseError, "empty integer '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw TropicError(ErrorCode::ParseError, "bad integer '" + s + "'");
    }
    if (s[0] == '+') s.erase(0, 1);
    return Integer(s);
}

/// Accepts "p", "p/q" (q nonzero). Whitespace is not tolerated.
inline Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer p = parse_integer(text.substr(0, slash));
    Integer q = parse_integer(text.substr(slash + 1));
    if (q == 0) throw TropicError(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rational(p, q);
}

inline RatVec to_rational(const IntVec& v)
{
    RatVec out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

inline bool is_zero(const RatVec& v)
{
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline bool is_zero(const IntVec& v)
{
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline void require_same_dim(std::size_t a, std::size_t b, const char* what)
{
    if (a != b)
        throw TropicError(ErrorCode::DimMismatch,
                          std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
}

template <typename T>
std::vector<T> add(const std::vector<T>& a, const std::vector<T>& b)
{
    require_same_dim(a.size(), b.size(), "add");
    std::vector<T> out(a);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
    return out;
}

template <typename T>
std::vector<T> sub(const std::vector<T>& a, const std::vector<T>& b)
{
    require_same_dim(a.size(), b.size(), "sub");
    std::vector<T> out(a);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
    return out;
}

template <typename T, typename S>
std::vector<T> scale(const std::vector<T>& a, const S& s)
{
    std::vector<T> out(a);
    for (auto& x : out) x *= s;
    return out;
}

template <typename T>
T dot(const std::vector<T>& a, const std::vector<T>& b)
{
    require_same_dim(a.size(), b.size(), "dot");
    T acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

inline Rational dot(const IntVec& a, const RatVec& b)
{
    require_same_dim(a.size(), b.size(), "dot");
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += Rational(a[i]) * b[i];
    return acc;
}

/// gcd of the absolute values of the entries; 0 for the zero vector.
inline Integer content(const IntVec& v)
{
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, abs(x));
    return g;
}

/// Smallest positive multiple of v with integer entries and content 1.
/// The zero vector maps to itself.
inline IntVec primitive_multiple(const RatVec& v)
{
    Integer l = 1;
    for (const auto& x : v) l = lcm(l, den(x));
    IntVec out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(num(x * l));
    Integer g = content(out);
    if (g > 1)
        for (auto& x : out) x /= g;
    return out;
}

}  // namespace tropic
