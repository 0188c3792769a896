#pragma once

// Dense linear algebra over the prime field Z/p, p < 2^31.

#include <cstdint>
#include <vector>

namespace coxlab::modp {

using Matrix = std::vector<std::vector<std::uint64_t>>;

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
/// a must be nonzero mod p.
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
bool is_prime(std::uint64_t n);

/// Characteristic polynomial det(xI - A), low coefficient first, monic.
std::vector<std::uint64_t> charpoly(Matrix a, std::uint64_t p);
/// Basis of {x : A x = 0}.
std::vector<std::vector<std::uint64_t>> nullspace(Matrix a, std::uint64_t p);
std::size_t rank(Matrix a, std::uint64_t p);
/// A generator of the multiplicative group of Z/p.
std::uint64_t primitive_root(std::uint64_t p);

}  // namespace coxlab::modp
