#include <iostream>

#include "pdm_spectra/commands.hpp"

int main(int argc, char** argv) { return pdm::cli::run(argc, argv, std::cout, std::cerr); }
