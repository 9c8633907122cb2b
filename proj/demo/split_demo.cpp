// Prime ideals above a few small primes in the ring of integers of a cubic field.
#include <iostream>

#include "dedekind/dedekind.hpp"

using namespace dedekind;

int main() {
  const ZPoly F = parse_zpoly("t^3 - t^2 - 2*t - 8");
  const MaximalOrder mo = maximal_order(F);
  std::cout << "F = " << to_string(F) << "\n";
  std::cout << "disc F = " << discriminant(F) << ", fundamental number = " << mo.discriminant << "\n";

  for (std::uint64_t q : {2, 3, 5, 7, 11}) {
    const PrimeModulus p(q);
    std::cout << "p = " << q << (index_divisible(F, p).divisible ? " (divides the index)" : "") << ":";
    for (const auto& pf : factor_p_in_order(mo.order, p)) std::cout << " " << to_string(pf.ideal) << "^" << pf.e << " f=" << pf.f;
    std::cout << "\n";
  }
}
