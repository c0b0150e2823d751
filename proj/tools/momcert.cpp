#include "momcert/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return momcert::cli::run(argc, argv, std::cout, std::cerr); }
