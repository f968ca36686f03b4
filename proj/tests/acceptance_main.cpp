#include <iostream>

#include "laverkit/verify.hpp"

// Runs every end-to-end check once and prints one PASS/FAIL line per check.
int main() { return laverkit::report_verify(std::cout) == 0 ? 0 : 1; }
