#include <iostream>

#include "theta_root/cli.hpp"

int main(int argc, char** argv) { return theta_root::cli::main_entry(argc, argv, std::cout, std::cerr); }
