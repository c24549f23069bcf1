#include "hadscheme/actions.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace hadscheme {

namespace {

using boost::multiprecision::cpp_int;

cpp_int factorial(unsigned k) {
  cpp_int f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

BoundResult make_result(cpp_int num, cpp_int den) {
  cpp_int g = gcd(num, den);
  num /= g;
  den /= g;
  BoundResult r;
  r.numerator = num.str();
  r.denominator = den.str();
  r.ceiling = cpp_int((num + den - 1) / den).str();
  r.approx = num.convert_to<double>() / den.convert_to<double>();
  return r;
}

} // namespace

BoundResult class_count_lower_bound(int n, std::uint64_t aut_fix_order,
                                    std::uint64_t aut_order,
                                    std::uint64_t iso_order) {
  if (n < 1 || aut_fix_order == 0 || aut_order == 0 || iso_order == 0)
    throw Error(ErrorCode::BadInput, "orders must be positive");
  cpp_int num = factorial(n - 1);
  num *= num;
  cpp_int den = cpp_int(2) * aut_fix_order * aut_order * iso_order;
  return make_result(num, den);
}

BoundResult sylvester_class_lower_bound(int k) {
  if (k < 1 || k > 6)
    throw Error(ErrorCode::OrderTooLarge, "exponent must lie in 1..6");
  unsigned m = 1u << k;
  cpp_int num = factorial(m - 1);
  num *= num;
  cpp_int den = cpp_int(1) << (3 * k);
  for (int i = 0; i < k; ++i) den *= cpp_int(m) - (1u << i);
  return make_result(num, den);
}

} // namespace hadscheme
