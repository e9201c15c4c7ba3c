#include <iostream>

#include "qadm/cli.hpp"

int main(int argc, char** argv) { return qadm::cli::run(argc, argv, std::cout); }
