#include "prelie/scalar.hpp"

#include "prelie/error.hpp"

#include <algorithm>
#include <cctype>

namespace prelie {

namespace {

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Scalar parse_scalar(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");

    Integer p(std::string(num), 10);
    Integer q(std::string(den), 10);
    if (q == 0)
        throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    if (negative)
        p = -p;
    Scalar s(p, q);
    s.canonicalize();
    return s;
}

std::string format_scalar(const Scalar& value)
{
    Scalar s = value;
    s.canonicalize();
    if (s.get_den() == 1)
        return s.get_num().get_str();
    return s.get_num().get_str() + "/" + s.get_den().get_str();
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i)
{
    Vec v(n);
    v[i] = 1;
    return v;
}

bool is_zero(const Vec& v)
{
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s == 0; });
}

Vec& operator+=(Vec& a, const Vec& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += b[i];
    return a;
}

Vec& operator-=(Vec& a, const Vec& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] -= b[i];
    return a;
}

Vec operator+(const Vec& a, const Vec& b)
{
    Vec r = a;
    return r += b;
}

Vec operator-(const Vec& a, const Vec& b)
{
    Vec r = a;
    return r -= b;
}

Vec operator*(const Scalar& s, const Vec& v)
{
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = s * v[i];
    return r;
}

void axpy(Vec& a, const Scalar& s, const Vec& b)
{
    if (s == 0)
        return;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] != 0)
            a[i] += s * b[i];
}

Scalar dot(const Vec& a, const Vec& b)
{
    Scalar r = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0)
            r += a[i] * b[i];
    return r;
}

}  // namespace prelie
