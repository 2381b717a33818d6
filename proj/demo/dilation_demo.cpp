// Walks one symbol through the dilation route and compares it with the
// direct anti-Wick expansion, then checks the result as truncated matrices.

#include <iostream>

#include "bosonorder/fock.hpp"
#include "bosonorder/parse.hpp"
#include "bosonorder/quantization.hpp"
#include "bosonorder/text.hpp"

using namespace bosonorder;

int main(int argc, char** argv) {
  const char* src = argc > 1 ? argv[1] : "z*^2 z^2 - 3 z* z";
  PolyFunction f = parse_function(src);

  OperatorPoly doubled = dilate(f);
  OperatorPoly reduced = partial_vacuum_expectation(doubled, 1);
  OperatorPoly direct = anti_wick_direct(f);

  std::cout << "symbol            " << f << '\n'
            << "f(C*, C)          " << doubled << '\n'
            << "B-vacuum of that  " << reduced << '\n'
            << "direct anti-Wick  " << direct << '\n'
            << "equal             " << (reduced == direct ? "yes" : "no") << "\n\n";

  // Anti-Wick quantization is positive on |g|^2 symbols; look at the
  // smallest eigenvalue on the safe block.
  PolyFunction g = parse_function("z - 2 z*");
  double lowest = positivity_check(g.conjugate() * g, 30);
  std::cout << "min eigenvalue of the quantized |" << g << "|^2 on the safe block: " << lowest << '\n';
  return reduced == direct ? 0 : 1;
}
