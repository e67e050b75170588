// Acceptance gate: runs the full criteria suite (including the determinism
// double-run) and prints one line per criterion. Exit 0 iff everything passed.

#include <iostream>
#include <string>

#include "fqs/reproduce.hpp"

int main(int argc, char** argv) {
    std::string out_dir = argc > 1 ? argv[1] : "acceptance_out";
    fqs::ReproduceReport rep = fqs::run_reproduce(out_dir, {}, std::cout);
    std::cout << "ACCEPTANCE: " << (rep.all_pass ? "PASS" : "FAIL") << "\n";
    return rep.all_pass ? 0 : 1;
}
