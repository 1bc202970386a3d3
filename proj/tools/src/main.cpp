#include <iostream>

#include "sheafcalc_cli/commands.hpp"

int main(int argc, char** argv) { return sheafcalc::cli::run(argc, argv, std::cout, std::cerr); }
