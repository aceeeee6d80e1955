#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include "fanok3/unipoly.hpp"
TEST_CASE("placeholder") { CHECK(true); }
