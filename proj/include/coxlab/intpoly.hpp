#pragma once

// Dense integer polynomials with machine-word coefficients, used for
// characteristic polynomials of small integer matrices and for the cyclotomic
// polynomials Phi_n.

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace coxlab {

/// Coefficient of x^i at index i; trimmed so the last entry is nonzero
/// (the zero polynomial is the empty vector).
using IntPoly = std::vector<long long>;

void trim(IntPoly& p);

IntPoly multiply(const IntPoly& a, const IntPoly& b);

/// Divides `num` by the monic polynomial `den`. Returns the quotient when the
/// division is exact, std::nullopt otherwise.
std::optional<IntPoly> divide_exact(const IntPoly& num, const IntPoly& den);

long long evaluate(const IntPoly& p, long long x);

int euler_phi(int n);

/// Phi_n, cached after first use.
const IntPoly& cyclotomic_polynomial(int n);

/// Multiplicities {d: m_d} with p = prod Phi_d^{m_d}, or std::nullopt when p
/// is not a product of cyclotomic polynomials. Requires p monic.
std::optional<std::map<int, int>> cyclotomic_factorization(const IntPoly& p);

/// Characteristic polynomial det(xI - M) of a square integer matrix (row
/// major). Exact for matrices whose power traces fit in 64 bits.
IntPoly characteristic_polynomial(const std::vector<std::vector<long long>>& m);

std::string format_poly(const IntPoly& p, char var = 'x');

}  // namespace coxlab
