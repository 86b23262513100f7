#pragma once

// Exact scalar types and the Eigen plumbing they need.

#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

#include <Eigen/Core>

// Boost 1.74 probes every argument type for `const_iterator` to detect byte
// containers; Eigen 3.4 expressions define it as `void`, which is a hard error.
// Eigen types are never byte containers.
#include <boost/multiprecision/traits/is_byte_container.hpp>
namespace boost::multiprecision::detail {
template <class C>
  requires requires { typename C::StorageKind; typename C::Scalar; }
struct is_byte_container_imp<C, true> : boost::false_type {};
}  // namespace boost::multiprecision::detail

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace k3nl {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

/// Raised when an input violates an operation's precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a well-formed request cannot be computed (exhausted data
/// tables, non-integral results that must be integral, ...).
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Least nonnegative residue of `a` modulo `m` (m > 0).
Integer floor_mod(const Integer& a, const Integer& m);

/// Largest integer not exceeding `q`.
Integer floor(const Rational& q);

Integer gcd(const Integer& a, const Integer& b);

/// Representative of `q` modulo 2 in the half-open interval (-2, 0].
Rational reduce_mod2(const Rational& q);

/// Representative of `q` modulo 1 in [0, 1).
Rational reduce_mod1(const Rational& q);

bool is_integer(const Rational& q);

/// Converts to Integer, throwing ComputationError when `q` has a denominator.
Integer to_integer(const Rational& q, std::string_view what);

/// "num/den", or just "num" for integers.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "n", "-n" or "n/d". Throws DomainError on malformed text.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Non-negative integer square root if `n` is a perfect square.
bool is_perfect_square(const Integer& n, Integer* root = nullptr);

}  // namespace k3nl
