#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "spreadhom/field.hpp"

int main(int argc, char** argv) {
  spreadhom::Fp::set_modulus_from_env();
  doctest::Context ctx;
  ctx.applyCommandLine(argc, argv);
  return ctx.run();
}
