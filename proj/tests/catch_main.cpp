// Catch2 v3 amalgamated implementation; provides main() for every test binary.
#include <catch2/catch_amalgamated.cpp>
