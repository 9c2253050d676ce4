#ifndef PRELIE_SCALAR_HPP
#define PRELIE_SCALAR_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace prelie {

// GMP keeps mpq_class canonical (reduced, positive denominator) after every
// arithmetic operation, so structural equality is value equality.
using Scalar = mpq_class;
using Integer = mpz_class;
using Vec = std::vector<Scalar>;

/// Parses "p", "-p", "+p" or "p/q" with q > 0. Throws Error(Parse) otherwise.
Scalar parse_scalar(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string format_scalar(const Scalar& s);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& s, const Vec& v);
Vec& operator+=(Vec& a, const Vec& b);
Vec& operator-=(Vec& a, const Vec& b);
/// a += s * b
void axpy(Vec& a, const Scalar& s, const Vec& b);
Scalar dot(const Vec& a, const Vec& b);

}  // namespace prelie

#endif
